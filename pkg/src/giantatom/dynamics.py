"""Time-dependent Schrodinger integration and observable extraction.

The integrator is a fixed-step classical RK4 on dpsi/dt = -i H(t) psi.
Whenever the Hamiltonian is (or becomes) time-independent, stepping switches
to the exact propagator exp(-i H dt) built from an eigendecomposition.
Norm drift is monitored but never corrected: it is the global error monitor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import hilbert

NORM_TOL = 1e-6
MIN_SAMPLES = 600


class IntegrationDivergedError(RuntimeError):
    """Norm drift exceeded tolerance during integration."""

    def __init__(self, time: float, norm_err: float):
        super().__init__(f"norm drift {norm_err:.3e} exceeded {NORM_TOL:.0e} at t = {time:.6g}")
        self.time = time
        self.norm_err = norm_err


@dataclass(frozen=True)
class TimeGrid:
    """Integration window: fixed step dt up to t_end, sampling every stride steps.

    sample_stride = None derives a stride giving at least MIN_SAMPLES samples.
    """

    t_end: float
    dt: float
    sample_stride: int | None = None

    def __post_init__(self):
        if self.dt <= 0:
            raise ValueError(f"dt must be positive, got {self.dt}")
        if self.t_end < self.dt:
            raise ValueError(f"t_end {self.t_end} smaller than dt {self.dt}")
        if self.sample_stride is not None and self.sample_stride < 1:
            raise ValueError("sample_stride must be >= 1")

    @property
    def n_steps(self) -> int:
        return math.ceil(self.t_end / self.dt)

    @property
    def dt_eff(self) -> float:
        # Actual step: t_end divided evenly so the last step lands exactly on t_end.
        return self.t_end / self.n_steps

    @property
    def stride(self) -> int:
        if self.sample_stride is not None:
            return self.sample_stride
        return max(1, self.n_steps // MIN_SAMPLES)


@dataclass(frozen=True)
class HamiltonianModel:
    """Time-dependent Hamiltonian H(t) as a callable, with staticness metadata.

    static_after = 0.0 means H is time-independent; a finite positive value
    means H(t) is constant for t >= static_after; math.inf means never static.
    """

    dim: int
    func: Callable[[float], np.ndarray]
    static_after: float = math.inf

    @classmethod
    def from_static(cls, h: np.ndarray) -> "HamiltonianModel":
        h = np.asarray(h, dtype=complex)
        return cls(dim=h.shape[0], func=lambda t: h, static_after=0.0)

    def __call__(self, t: float) -> np.ndarray:
        return self.func(t)


@dataclass
class RawTrajectory:
    """Sampled times, norm drift, and named expectation values."""

    times: np.ndarray
    norm_err: np.ndarray
    expect: dict[str, np.ndarray] = field(default_factory=dict)


def _rk4_step(model: HamiltonianModel, psi: np.ndarray, t: float, dt: float) -> np.ndarray:
    h1 = model(t)
    h2 = model(t + 0.5 * dt)
    h3 = model(t + dt)
    k1 = -1j * (h1 @ psi)
    k2 = -1j * (h2 @ (psi + 0.5 * dt * k1))
    k3 = -1j * (h2 @ (psi + 0.5 * dt * k2))
    k4 = -1j * (h3 @ (psi + dt * k3))
    return psi + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def _propagator(h: np.ndarray, dt: float) -> np.ndarray:
    w, v = np.linalg.eigh(h)
    return (v * np.exp(-1j * w * dt)) @ v.conj().T


def integrate(
    model: HamiltonianModel,
    psi0: np.ndarray,
    grid: TimeGrid,
    ops: dict[str, np.ndarray] | None = None,
    method: str = "auto",
) -> RawTrajectory:
    """Propagate psi0 under model over grid, recording expectations of ops.

    method "auto" uses the exact propagator wherever H is constant and RK4
    elsewhere; "rk4" forces RK4 throughout (used by the convergence study).
    """
    if method not in ("auto", "rk4"):
        raise ValueError(f"unknown method {method!r}")
    if psi0.size != model.dim:
        raise ValueError(f"state dim {psi0.size} does not match Hamiltonian dim {model.dim}")
    ops = ops or {}
    for name, op in ops.items():
        if op.shape != (model.dim, model.dim):
            raise ValueError(f"observable {name!r} has shape {op.shape}, expected dim {model.dim}")

    dt = grid.dt_eff
    n_steps = grid.n_steps
    stride = grid.stride
    # Step index after which exact-propagator stepping takes over (auto only).
    if method == "rk4":
        switch_step = n_steps + 1
    elif model.static_after <= 0.0:
        switch_step = 0
    elif math.isinf(model.static_after):
        switch_step = n_steps + 1
    else:
        switch_step = min(n_steps, math.ceil(model.static_after / dt))

    times = []
    norms = []
    records: dict[str, list[complex]] = {name: [] for name in ops}

    def sample(t: float, psi: np.ndarray):
        err = hilbert.norm_error(psi)
        if err > NORM_TOL:
            raise IntegrationDivergedError(t, err)
        times.append(t)
        norms.append(err)
        for name, op in ops.items():
            records[name].append(np.vdot(psi, op @ psi))

    psi = psi0.astype(complex)
    sample(0.0, psi)
    propagator = None
    for step in range(n_steps):
        t = step * dt
        if step >= switch_step:
            if propagator is None:
                propagator = _propagator(model(t), dt)
            psi = propagator @ psi
        else:
            psi = _rk4_step(model, psi, t, dt)
        if (step + 1) % stride == 0 or step + 1 == n_steps:
            sample((step + 1) * dt, psi)

    expect = {name: np.array(vals) for name, vals in records.items()}
    return RawTrajectory(times=np.array(times), norm_err=np.array(norms), expect=expect)


def estimate_inversion_time(times: np.ndarray, pe: np.ndarray, threshold: float) -> float | None:
    """Time of the first local maximum of pe that reaches `threshold`.

    Refined by a 3-point quadratic fit around the discrete peak; ties break
    toward the earliest sample. Returns None if no qualifying peak exists.
    """
    if not 0 < threshold <= 1:
        raise ValueError(f"threshold must lie in (0, 1], got {threshold}")
    n = len(times)
    for i in range(1, n - 1):
        if pe[i] < threshold:
            continue
        if pe[i] >= pe[i - 1] and pe[i] >= pe[i + 1]:
            # polyfit handles the (possibly nonuniform) final sample spacing
            a, b, _ = np.polyfit(times[i - 1 : i + 2], pe[i - 1 : i + 2], 2)
            if a < 0:
                t_star = -b / (2 * a)
                if times[i - 1] <= t_star <= times[i + 1]:
                    return float(t_star)
            return float(times[i])
    return None
