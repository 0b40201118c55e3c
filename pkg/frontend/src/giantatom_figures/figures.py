"""Figure builders: two-panel inversion plot and geometry heat map.

Builders return matplotlib Figure objects so tests can audit the plotted
artists; `render_*` wraps a builder with file output. Every plotted number
comes straight from the loaded CSV/summary data.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from . import reader

TAU_MARKER_LABEL = "tau_e"


@dataclass(frozen=True)
class PlotJob:
    """One rendering task: input files plus the output image path."""

    inputs: tuple[str, ...]
    output: str
    summary: str | None = None


def build_fig1c(data_out, data_in, summary):
    """Two panels of excited-state population with photon-number insets.

    Left: out-of-phase drives (inversion, dashed marker at the summary's
    inversion time). Right: in-phase drives (atom stays dark).
    """
    fig, axes = plt.subplots(1, 2, figsize=(9, 3.6), sharey=True)
    for ax, data, title in (
        (axes[0], data_out, "out-of-phase drives"),
        (axes[1], data_in, "in-phase drives"),
    ):
        ax.plot(data["t_ns"], data["pe_exact"], color="tab:blue", label="exact")
        ax.plot(data["t_ns"], data["pe_eff"], color="black", ls=":", label="effective")
        ax.set_xlabel("t (ns)")
        ax.set_title(title)
        ax.set_ylim(-0.05, 1.05)
        twin = ax.twinx()
        twin.plot(data["t_ns"], data["n_r1"], color="tab:orange", lw=0.8, label="n_r1")
        twin.plot(data["t_ns"], data["n_r2"], color="tab:green", lw=0.8, label="n_r2")
        twin.set_ylabel("photon number")
    tau = summary.get("tau_e_ns")
    if tau is not None:
        axes[0].axvline(tau, color="gray", ls="--", label=TAU_MARKER_LABEL)
    axes[0].set_ylabel("excited-state population")
    axes[0].legend(loc="center right", fontsize=8)
    fig.tight_layout()
    return fig


def build_geometry_map(xs, ys, grid):
    """Heat map of the resultant field amplitude over geometry parameters."""
    fig, ax = plt.subplots(figsize=(5.2, 4.2))
    mesh = ax.pcolormesh(xs, ys, grid, shading="nearest", cmap="viridis")
    ax.contour(xs, ys, grid, levels=[1e-9], colors="red", linewidths=1.0)
    ax.set_xlabel("path difference / wavelength")
    ax.set_ylabel("amplitude ratio beta/alpha")
    ax.set_title("resultant field amplitude")
    fig.colorbar(mesh, ax=ax, label="|E_res|")
    fig.tight_layout()
    return fig


def _save(fig, output: str) -> None:
    path = Path(output)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, dpi=150, metadata={"Software": None}
                if path.suffix == ".png" else None)
    plt.close(fig)


def render_fig1c(job: PlotJob) -> None:
    case_out, case_in = job.inputs
    if job.summary is None:
        raise reader.ReaderError("fig1c job needs a summary file for the marker")
    fig = build_fig1c(
        reader.load_trajectory(case_out),
        reader.load_trajectory(case_in),
        reader.load_summary(job.summary),
    )
    _save(fig, job.output)


def render_geometry_map(job: PlotJob) -> None:
    (path,) = job.inputs
    xs, ys, grid = reader.load_geometry_map(path)
    _save(build_geometry_map(xs, ys, grid), job.output)
