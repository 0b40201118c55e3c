"""Read-only figure renderer for the simulator's CSV and summary files."""

__version__ = "0.1.0"
