"""Scenario runner: config ingestion, simulation campaigns, CSV/summary output.

Config files are flat UTF-8 `key = value` lines with `#` comments and
dot-namespaced keys. Frequencies are linear GHz (the 2 pi factor is applied
internally), phases radians, times ns. Unknown keys are rejected before any
file is written.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

import numpy as np

from . import circuit, collective, dynamics, effective

TWO_PI = 2.0 * math.pi

SCENARIOS = ("fig1c", "phase-sweep", "geometry-map", "dark-state", "converge")
FRAMES = ("lab", "rotating")

# Paper parameter set as defaults; grid.dt_ns = 0 and grid.sample_stride = 0
# mean "derive from the frame / run length".
DEFAULTS: dict[str, object] = {
    "scenario": "fig1c",
    "frame": "rotating",
    "out": "out",
    "circuit.omega0_ghz": 5.0,
    "circuit.omega_r1_ghz": 3.0,
    "circuit.omega_r2_ghz": 7.0,
    "circuit.g1_ghz": 0.08,
    "circuit.g2_ghz": 0.08,
    "circuit.anharm_ghz": -0.3,
    "circuit.qubit_levels": 2,
    "circuit.resonator_levels": 4,
    "drive1.eps_ghz": 0.1,
    "drive1.omega_d_ghz": 5.0,
    "drive1.phi_d_rad": 0.0,
    "drive1.t_ramp_ns": 1.0,
    "drive2.eps_ghz": 0.1,
    "drive2.omega_d_ghz": 5.0,
    "drive2.phi_d_rad": 0.0,
    "drive2.t_ramp_ns": 1.0,
    "grid.t_end_ns": 60.0,
    "grid.dt_ns": 0.0,
    "grid.sample_stride": 0,
    "sweep.delta_phi_rad": [0.0, math.pi / 4, math.pi / 2, 3 * math.pi / 4, math.pi],
    "sweep.t_end_ns": 100.0,
    "geometry.resolution": 41,
    "darkstate.alpha": 0.5,
    "darkstate.g": 1.0,
    "darkstate.levels": 12,
    "darkstate.t_end": 6.0,
    "darkstate.dt": 0.01,
    "converge.dt0_ns": 0.02,
}

TRANSIENT_NS = 5.0  # settle window excluded from photon-number means
CSV_HEADER = "t_ns,pe_exact,pe_eff,n_r1,n_r2,re_coh_r1,im_coh_r1,re_coh_r2,im_coh_r2,norm_err"


class ConfigError(Exception):
    pass


class NumericalError(Exception):
    pass


def _parse_value(key: str, text: str) -> object:
    default = DEFAULTS[key]
    try:
        if isinstance(default, list):
            return [float(x) for x in text.split(",") if x.strip()]
        if isinstance(default, int) and not isinstance(default, bool):
            return int(text)
        if isinstance(default, float):
            return float(text)
        return text
    except ValueError:
        raise ConfigError(f"malformed value for key '{key}': {text!r}") from None


def parse_config(text: str) -> dict[str, object]:
    """Parse `key = value` lines on top of the defaults; reject unknown keys."""
    cfg = dict(DEFAULTS)
    cfg["sweep.delta_phi_rad"] = list(DEFAULTS["sweep.delta_phi_rad"])  # type: ignore[arg-type]
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {line!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        if key not in DEFAULTS:
            raise ConfigError(f"unknown config key '{key}'")
        cfg[key] = _parse_value(key, value.strip())
    validate_config(cfg)
    return cfg


def validate_config(cfg: dict[str, object]) -> None:
    if cfg["scenario"] not in SCENARIOS:
        raise ConfigError(f"unknown scenario '{cfg['scenario']}' (choose from {', '.join(SCENARIOS)})")
    if cfg["frame"] not in FRAMES:
        raise ConfigError(f"unknown frame '{cfg['frame']}' (choose lab or rotating)")
    for key in ("circuit.omega0_ghz", "circuit.omega_r1_ghz", "circuit.omega_r2_ghz",
                "drive1.omega_d_ghz", "drive2.omega_d_ghz"):
        if float(cfg[key]) <= 0:  # type: ignore[arg-type]
            raise ConfigError(f"key '{key}' must be a positive frequency")
    for key in ("drive1.eps_ghz", "drive2.eps_ghz"):
        if float(cfg[key]) < 0:  # type: ignore[arg-type]
            raise ConfigError(f"key '{key}' must be nonnegative")
    for phi in cfg["sweep.delta_phi_rad"]:  # type: ignore[union-attr]
        if not math.isfinite(phi):
            raise ConfigError("key 'sweep.delta_phi_rad' contains a non-finite value")
    if not cfg["sweep.delta_phi_rad"]:
        raise ConfigError("key 'sweep.delta_phi_rad' must be a non-empty list")
    if int(cfg["geometry.resolution"]) < 2:  # type: ignore[arg-type]
        raise ConfigError("key 'geometry.resolution' must be >= 2")


def build_spec(cfg: dict[str, object], resonator_levels: int | None = None) -> circuit.CircuitSpec:
    return circuit.CircuitSpec.from_ghz(
        omega0_ghz=cfg["circuit.omega0_ghz"],  # type: ignore[arg-type]
        omega_r_ghz=(cfg["circuit.omega_r1_ghz"], cfg["circuit.omega_r2_ghz"]),  # type: ignore[arg-type]
        g_ghz=(cfg["circuit.g1_ghz"], cfg["circuit.g2_ghz"]),  # type: ignore[arg-type]
        anharm_ghz=cfg["circuit.anharm_ghz"],  # type: ignore[arg-type]
        qubit_levels=int(cfg["circuit.qubit_levels"]),  # type: ignore[arg-type]
        resonator_levels=resonator_levels or int(cfg["circuit.resonator_levels"]),  # type: ignore[arg-type]
    )


def build_drives(
    cfg: dict[str, object],
    delta_phi: float | None = None,
    single: bool = False,
) -> circuit.DrivePair:
    """Drives from config; delta_phi overrides phases to (delta_phi, 0)."""
    phis = (cfg["drive1.phi_d_rad"], cfg["drive2.phi_d_rad"])
    if delta_phi is not None:
        phis = (delta_phi, 0.0)
    return (
        circuit.Drive(
            eps=TWO_PI * float(cfg["drive1.eps_ghz"]),  # type: ignore[arg-type]
            omega_d=TWO_PI * float(cfg["drive1.omega_d_ghz"]),  # type: ignore[arg-type]
            phi_d=float(phis[0]),  # type: ignore[arg-type]
            t_ramp=float(cfg["drive1.t_ramp_ns"]),  # type: ignore[arg-type]
        ),
        circuit.Drive(
            eps=0.0 if single else TWO_PI * float(cfg["drive2.eps_ghz"]),  # type: ignore[arg-type]
            omega_d=TWO_PI * float(cfg["drive2.omega_d_ghz"]),  # type: ignore[arg-type]
            phi_d=float(phis[1]),  # type: ignore[arg-type]
            t_ramp=float(cfg["drive2.t_ramp_ns"]),  # type: ignore[arg-type]
        ),
    )


def resolve_grid(cfg: dict[str, object], t_end: float | None = None) -> dynamics.TimeGrid:
    dt = float(cfg["grid.dt_ns"])  # type: ignore[arg-type]
    if dt <= 0:
        dt = 5e-4 if cfg["frame"] == "lab" else 0.01
    stride = int(cfg["grid.sample_stride"])  # type: ignore[arg-type]
    return dynamics.TimeGrid(
        t_end=t_end if t_end is not None else float(cfg["grid.t_end_ns"]),  # type: ignore[arg-type]
        dt=dt,
        sample_stride=stride if stride > 0 else None,
    )


def run_circuit_case(
    cfg: dict[str, object],
    drives: circuit.DrivePair,
    grid: dynamics.TimeGrid,
    spec: circuit.CircuitSpec | None = None,
    method: str = "auto",
) -> dynamics.RawTrajectory:
    spec = spec or build_spec(cfg)
    if cfg["frame"] == "lab":
        model = circuit.lab_frame_model(spec, drives)
    else:
        model = circuit.rotating_frame_model(spec, drives, spec.omega0)
    return dynamics.integrate(
        model, circuit.initial_ground_state(spec), grid,
        ops=circuit.observable_ops(spec), method=method,
    )


def _fmt(x: float) -> str:
    return f"{x:.9g}"


def write_csv(path: Path, header: str, rows) -> None:
    lines = [header]
    for row in rows:
        lines.append(",".join("" if v is None else _fmt(v) for v in row))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def write_summary(path: Path, values: dict[str, float | None]) -> None:
    lines = [f"{k} = " + ("" if v is None else _fmt(v)) for k, v in values.items()]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def trajectory_rows(raw: dynamics.RawTrajectory, pe_eff: np.ndarray):
    for i, t in enumerate(raw.times):
        yield (
            t,
            raw.expect["pe"][i].real,
            pe_eff[i],
            raw.expect["n_r1"][i].real,
            raw.expect["n_r2"][i].real,
            raw.expect["coh_r1"][i].real,
            raw.expect["coh_r1"][i].imag,
            raw.expect["coh_r2"][i].real,
            raw.expect["coh_r2"][i].imag,
            raw.norm_err[i],
        )


def case_summary(raw: dynamics.RawTrajectory) -> dict[str, float | None]:
    pe = raw.expect["pe"].real
    tau = dynamics.estimate_inversion_time(raw.times, pe, 0.5)
    settled = raw.times >= TRANSIENT_NS
    return {
        "tau_e_ns": tau,
        "pe_max": float(pe.max()),
        "n_r1_mean": float(raw.expect["n_r1"].real[settled].mean()),
        "n_r2_mean": float(raw.expect["n_r2"].real[settled].mean()),
        "norm_err_max": float(raw.norm_err.max()),
    }


def run_fig1c(cfg: dict[str, object], outdir: Path) -> list[Path]:
    """Out-of-phase and in-phase drive cases, exact plus effective traces."""
    spec = build_spec(cfg)
    written = []
    for label, dphi in (("out", math.pi), ("in", 0.0)):
        drives = build_drives(cfg, delta_phi=dphi)
        grid = resolve_grid(cfg)
        raw = run_circuit_case(cfg, drives, grid, spec=spec)
        params = effective.derive_effective(spec, drives)
        pe_eff = effective.effective_population(params, spec.omega0, raw.times)
        csv_path = outdir / f"fig1c_{label}.csv"
        write_csv(csv_path, CSV_HEADER, trajectory_rows(raw, pe_eff))
        summary_path = outdir / f"fig1c_{label}_summary.txt"
        write_summary(summary_path, case_summary(raw))
        written += [csv_path, summary_path]
    return written


def run_phase_sweep(cfg: dict[str, object], outdir: Path) -> list[Path]:
    """Max population and inversion time against the drive phase difference."""
    spec = build_spec(cfg)
    rows = []
    for dphi in cfg["sweep.delta_phi_rad"]:  # type: ignore[union-attr]
        drives = build_drives(cfg, delta_phi=float(dphi))
        grid = resolve_grid(cfg, t_end=float(cfg["sweep.t_end_ns"]))  # type: ignore[arg-type]
        raw = run_circuit_case(cfg, drives, grid, spec=spec)
        pe = raw.expect["pe"].real
        tau = dynamics.estimate_inversion_time(raw.times, pe, 0.5)
        params = effective.derive_effective(spec, drives)
        rows.append((float(dphi), float(pe.max()), tau, effective.phasor_magnitude_constant(params)))
    csv_path = outdir / "phase_sweep.csv"
    write_csv(csv_path, "delta_phi,pe_max,tau_e_ns,omega_res_eff", rows)
    return [csv_path]


def run_geometry_map(cfg: dict[str, object], outdir: Path) -> list[Path]:
    """Resultant field amplitude over path difference and amplitude ratio."""
    res = int(cfg["geometry.resolution"])  # type: ignore[arg-type]
    rows = []
    for path_diff in np.linspace(0.0, 2.0, res):
        geom = collective.ModeGeometry.from_path_difference(float(path_diff))
        for ratio in np.linspace(-1.0, 1.0, res):
            state = collective.TwoModeState(1.0, complex(ratio))
            e_res = collective.resultant_amplitude(state, geom)
            label = collective.interference_class(state, geom, tol=0.01)
            rows.append((float(path_diff), float(ratio), e_res, label))
    csv_path = outdir / "geometry_map.csv"
    lines = ["path_diff_over_lambda,beta_over_alpha,e_res,class"]
    for pd, ra, er, label in rows:
        lines.append(f"{_fmt(pd)},{_fmt(ra)},{_fmt(er)},{label}")
    csv_path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return [csv_path]


def run_dark_state(cfg: dict[str, object], outdir: Path) -> list[Path]:
    """Dark |alpha, -alpha> and bright |alpha, alpha> full quantum runs."""
    alpha = float(cfg["darkstate.alpha"])  # type: ignore[arg-type]
    geom = collective.ModeGeometry(0.0, 0.0, 0.0, 0.0, 1.0)
    grid = dynamics.TimeGrid(
        t_end=float(cfg["darkstate.t_end"]), dt=float(cfg["darkstate.dt"])  # type: ignore[arg-type]
    )
    written = []
    for label, beta in (("dark", -alpha), ("bright", alpha)):
        traj = collective.simulate_two_mode_quantum(
            collective.TwoModeState(alpha, beta), geom,
            g=float(cfg["darkstate.g"]), omega=1.0, omega0=1.0,  # type: ignore[arg-type]
            levels=int(cfg["darkstate.levels"]), grid=grid,  # type: ignore[arg-type]
        )
        csv_path = outdir / f"dark_state_{label}.csv"
        write_csv(
            csv_path,
            "t,pe,n_a,n_b,n_col,norm_err",
            zip(traj.times, traj.pe, traj.n_a, traj.n_b, traj.n_col, traj.norm_err),
        )
        summary_path = outdir / f"dark_state_{label}_summary.txt"
        write_summary(summary_path, {
            "pe_max": float(traj.pe.max()),
            "n_total_mean": float((traj.n_a + traj.n_b).mean()),
            "norm_err_max": float(traj.norm_err.max()),
        })
        written += [csv_path, summary_path]
    return written


def run_converge(cfg: dict[str, object], outdir: Path) -> list[Path]:
    """Self-convergence in dt (forced RK4) and resonator truncation level."""
    drives = build_drives(cfg, delta_phi=math.pi)
    t_end = float(cfg["grid.t_end_ns"])  # type: ignore[arg-type]
    rows = []

    # dt study in the rotating frame: samples aligned every 0.2 ns.
    rot_cfg = dict(cfg, **{"frame": "rotating"})
    dt0 = float(cfg["converge.dt0_ns"])  # type: ignore[arg-type]

    def pe_rk4(dt: float) -> np.ndarray:
        grid = dynamics.TimeGrid(t_end=t_end, dt=dt, sample_stride=round(0.2 / dt))
        raw = run_circuit_case(rot_cfg, drives, grid, method="rk4")
        return raw.expect["pe"].real

    ref = pe_rk4(dt0 / 8)
    dt_errors = []
    for dt in (dt0, dt0 / 2, dt0 / 4):
        err = float(np.abs(pe_rk4(dt) - ref).max())
        dt_errors.append(err)
        rows.append(("dt_ns", dt, err))

    # truncation study against the levels = 6 reference.
    def pe_levels(levels: int) -> np.ndarray:
        spec = build_spec(cfg, resonator_levels=levels)
        grid = resolve_grid(cfg)
        raw = run_circuit_case(cfg, drives, grid, spec=spec)
        return raw.expect["pe"].real

    ref_levels = pe_levels(6)
    level_errors = {}
    for levels in (3, 4, 5):
        err = float(np.abs(pe_levels(levels) - ref_levels).max())
        level_errors[levels] = err
        rows.append(("resonator_levels", levels, err))

    csv_path = outdir / "converge.csv"
    lines = ["study,setting,max_abs_dpe"]
    for study, setting, err in rows:
        lines.append(f"{study},{_fmt(setting)},{_fmt(err)}")
    csv_path.write_text("\n".join(lines) + "\n", encoding="utf-8")

    ratios = [dt_errors[i] / dt_errors[i + 1] for i in range(2)]
    write_summary(outdir / "converge_summary.txt", {
        "dt_halving_ratio_1": ratios[0],
        "dt_halving_ratio_2": ratios[1],
        "levels4_vs_6_max_dpe": level_errors[4],
    })
    if any(r < 12.0 for r in ratios):
        raise NumericalError(
            f"RK4 self-convergence ratios {ratios} fall below the 4th-order expectation (>= 12)"
        )
    if level_errors[4] >= 1e-4:
        raise NumericalError(
            f"truncation sensitivity {level_errors[4]:.3e} at 4 levels exceeds 1e-4"
        )
    return [csv_path, outdir / "converge_summary.txt"]


RUNNERS = {
    "fig1c": run_fig1c,
    "phase-sweep": run_phase_sweep,
    "geometry-map": run_geometry_map,
    "dark-state": run_dark_state,
    "converge": run_converge,
}


def run_scenario(cfg: dict[str, object], outdir: Path | None = None) -> list[Path]:
    outdir = Path(outdir) if outdir is not None else Path(str(cfg["out"]))
    outdir.mkdir(parents=True, exist_ok=True)
    return RUNNERS[str(cfg["scenario"])](cfg, outdir)


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="simulate",
        description="Giant-atom interference scenarios: exact and dispersive-effective simulation.",
    )
    parser.add_argument("--config", help="flat key = value config file (defaults: paper parameter set)")
    parser.add_argument("--out", help="output directory (overrides config key 'out')")
    parser.add_argument("--frame", choices=FRAMES, help="integration frame override")
    parser.add_argument("--scenario", choices=SCENARIOS, help="scenario override")
    args = parser.parse_args(argv)

    try:
        text = Path(args.config).read_text(encoding="utf-8") if args.config else ""
    except OSError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    try:
        cfg = parse_config(text)
        if args.frame:
            cfg["frame"] = args.frame
        if args.scenario:
            cfg["scenario"] = args.scenario
        if args.out:
            cfg["out"] = args.out
        validate_config(cfg)
        written = run_scenario(cfg)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except (dynamics.IntegrationDivergedError, NumericalError, ValueError) as exc:
        print(f"numerical failure in scenario '{cfg.get('scenario', '?')}': {exc}", file=sys.stderr)
        return 3
    for path in written:
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
