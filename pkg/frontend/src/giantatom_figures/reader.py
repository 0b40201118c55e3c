"""Loaders for the simulator's file formats.

Everything rendered downstream comes from these loaders; no physics is
recomputed here. Header mismatches are rejected with a diagnostic naming
the offending column.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

TRAJECTORY_HEADER = (
    "t_ns,pe_exact,pe_eff,n_r1,n_r2,"
    "re_coh_r1,im_coh_r1,re_coh_r2,im_coh_r2,norm_err"
)
GEOMETRY_HEADER = "path_diff_over_lambda,beta_over_alpha,e_res,class"


class ReaderError(ValueError):
    """Raised when an input file does not match the expected format."""


def _check_header(found: str, expected: str, path: Path) -> None:
    if found == expected:
        return
    found_cols = found.split(",")
    expected_cols = expected.split(",")
    for i, col in enumerate(expected_cols):
        if i >= len(found_cols) or found_cols[i] != col:
            got = found_cols[i] if i < len(found_cols) else "<missing>"
            raise ReaderError(
                f"{path}: expected column {i + 1} to be '{col}', found '{got}'"
            )
    raise ReaderError(f"{path}: unexpected extra columns {found_cols[len(expected_cols):]}")


def load_trajectory(path: str | Path) -> dict[str, np.ndarray]:
    """Load a trajectory CSV into a column-name -> array mapping."""
    path = Path(path)
    lines = path.read_text().splitlines()
    if not lines:
        raise ReaderError(f"{path}: empty file")
    _check_header(lines[0], TRAJECTORY_HEADER, path)
    data = np.loadtxt(lines[1:], delimiter=",", ndmin=2)
    cols = TRAJECTORY_HEADER.split(",")
    if data.shape[1] != len(cols):
        raise ReaderError(f"{path}: row width {data.shape[1]} != {len(cols)}")
    return {name: data[:, i] for i, name in enumerate(cols)}


def load_summary(path: str | Path) -> dict[str, float | None]:
    """Load a flat `key = value` summary file; empty values map to None."""
    out: dict[str, float | None] = {}
    for line in Path(path).read_text().splitlines():
        if not line.strip():
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ReaderError(f"{path}: expected 'key = value', found {line!r}")
        out[key.strip()] = float(value) if value.strip() else None
    return out


def load_geometry_map(path: str | Path):
    """Load a geometry-map CSV into (path_diff, ratio, e_res) grids."""
    path = Path(path)
    lines = path.read_text().splitlines()
    if not lines:
        raise ReaderError(f"{path}: empty file")
    _check_header(lines[0], GEOMETRY_HEADER, path)
    rows = [line.split(",") for line in lines[1:]]
    path_diff = np.array([float(r[0]) for r in rows])
    ratio = np.array([float(r[1]) for r in rows])
    e_res = np.array([float(r[2]) for r in rows])
    xs = np.unique(path_diff)
    ys = np.unique(ratio)
    grid = np.full((ys.size, xs.size), np.nan)
    xi = np.searchsorted(xs, path_diff)
    yi = np.searchsorted(ys, ratio)
    grid[yi, xi] = e_res
    if np.isnan(grid).any():
        raise ReaderError(f"{path}: rows do not form a complete grid")
    return xs, ys, grid
