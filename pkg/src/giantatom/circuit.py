"""Superconducting-circuit model: two detuned resonators and a giant artificial atom.

Hamiltonian pieces are built on the fixed subsystem ordering
(atom, resonator 1, resonator 2). Internal units: angular frequencies in
rad/ns, time in ns; a linear frequency of X GHz enters as 2 pi X rad/ns.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass

import numpy as np

from . import hilbert
from .dynamics import HamiltonianModel

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class CircuitSpec:
    """Bare circuit parameters (angular frequencies, rad/ns).

    anharm is the transmon anharmonicity (<= 0 by convention); it only
    enters when qubit_levels = 3.
    """

    omega0: float
    omega_r: tuple[float, float]
    g: tuple[float, float]
    anharm: float = 0.0
    qubit_levels: int = 2
    resonator_levels: int = 4

    def __post_init__(self):
        if self.qubit_levels not in (2, 3):
            raise ValueError(f"qubit_levels must be 2 or 3, got {self.qubit_levels}")
        if self.qubit_levels == 3 and self.anharm == 0.0:
            raise ValueError("three-level atom requires a nonzero anharmonicity")
        if self.resonator_levels < 2:
            raise ValueError("resonator_levels must be >= 2")
        for k in (0, 1):
            ratio = abs(self.g[k] / (self.omega_r[k] - self.omega0))
            if ratio >= 0.1:
                warnings.warn(
                    f"resonator {k + 1} is not deep in the dispersive regime: "
                    f"|g/Delta| = {ratio:.3f}",
                    stacklevel=2,
                )

    @property
    def dims(self) -> tuple[int, int, int]:
        return (self.qubit_levels, self.resonator_levels, self.resonator_levels)

    @property
    def delta(self) -> tuple[float, float]:
        """Detunings Delta_k = omega_{r,k} - omega0."""
        return (self.omega_r[0] - self.omega0, self.omega_r[1] - self.omega0)

    @classmethod
    def from_ghz(
        cls,
        omega0_ghz: float,
        omega_r_ghz: tuple[float, float],
        g_ghz: tuple[float, float],
        anharm_ghz: float = 0.0,
        qubit_levels: int = 2,
        resonator_levels: int = 4,
    ) -> "CircuitSpec":
        return cls(
            omega0=TWO_PI * omega0_ghz,
            omega_r=(TWO_PI * omega_r_ghz[0], TWO_PI * omega_r_ghz[1]),
            g=(TWO_PI * g_ghz[0], TWO_PI * g_ghz[1]),
            anharm=TWO_PI * anharm_ghz,
            qubit_levels=qubit_levels,
            resonator_levels=resonator_levels,
        )


@dataclass(frozen=True)
class Drive:
    """Coherent drive on one resonator: strength eps, frequency omega_d, phase phi_d.

    The envelope is constant, optionally preceded by a linear ramp of
    duration t_ramp.
    """

    eps: float
    omega_d: float
    phi_d: float
    t_ramp: float = 0.0

    def __post_init__(self):
        if self.eps < 0:
            raise ValueError("drive strength must be nonnegative")
        if self.t_ramp < 0:
            raise ValueError("ramp time must be nonnegative")

    def envelope(self, t: float) -> float:
        if self.t_ramp > 0 and t < self.t_ramp:
            return self.eps * max(t, 0.0) / self.t_ramp
        return self.eps


DrivePair = tuple[Drive, Drive]


def lowering_ops(spec: CircuitSpec) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Embedded lowering operators (q, r1, r2) on the full space."""
    dims = spec.dims
    q = hilbert.embed(hilbert.annihilation(spec.qubit_levels), 0, dims)
    r1 = hilbert.embed(hilbert.annihilation(spec.resonator_levels), 1, dims)
    r2 = hilbert.embed(hilbert.annihilation(spec.resonator_levels), 2, dims)
    return q, r1, r2


def build_h0(spec: CircuitSpec) -> np.ndarray:
    """Bare Hamiltonian: resonator energies, atom energy, anharmonic correction."""
    q, r1, r2 = lowering_ops(spec)
    qd = q.conj().T
    h = spec.omega_r[0] * (r1.conj().T @ r1) + spec.omega_r[1] * (r2.conj().T @ r2)
    h = h + spec.omega0 * (qd @ q)
    if spec.qubit_levels > 2:
        h = h + 0.5 * spec.anharm * (qd @ qd @ q @ q)
    return h


def build_hc(spec: CircuitSpec) -> np.ndarray:
    """Excitation-conserving atom-resonator coupling sum_k g_k (q^dag r_k + h.c.)."""
    q, r1, r2 = lowering_ops(spec)
    h = spec.g[0] * (q.conj().T @ r1) + spec.g[1] * (q.conj().T @ r2)
    return h + h.conj().T


def build_hd(spec: CircuitSpec, drives: DrivePair, t: float) -> np.ndarray:
    """Drive Hamiltonian at time t, lab frame."""
    _, r1, r2 = lowering_ops(spec)
    h = np.zeros((r1.shape[0], r1.shape[0]), dtype=complex)
    for drive, r in zip(drives, (r1, r2)):
        c = drive.envelope(t) * cmath.exp(-1j * drive.omega_d * t + 1j * drive.phi_d)
        h = h + c * r.conj().T + c.conjugate() * r
    return h


def lab_frame_model(spec: CircuitSpec, drives: DrivePair) -> HamiltonianModel:
    """H0 + Hc + Hd(t) as a time-dependent model in the lab frame."""
    h_static = build_h0(spec) + build_hc(spec)
    _, r1, r2 = lowering_ops(spec)
    raising = (r1.conj().T, r2.conj().T)
    lowering = (r1, r2)

    def func(t: float) -> np.ndarray:
        h = h_static
        for drive, rd, r in zip(drives, raising, lowering):
            c = drive.envelope(t) * cmath.exp(-1j * drive.omega_d * t + 1j * drive.phi_d)
            h = h + c * rd + c.conjugate() * r
        return h

    if drives[0].eps == 0.0 and drives[1].eps == 0.0:
        return HamiltonianModel.from_static(h_static)
    return HamiltonianModel(dim=h_static.shape[0], func=func, static_after=math.inf)


def rotating_frame_model(spec: CircuitSpec, drives: DrivePair, frame_freq: float) -> HamiltonianModel:
    """Frame rotating at frame_freq on every subsystem.

    U = exp[i frame_freq t (q^dag q + sum_k r_k^dag r_k)] leaves Hc and the
    anharmonic term invariant, shifts every diagonal frequency down by
    frame_freq, and multiplies each drive phasor by e^{i frame_freq t}.
    When all drive frequencies equal frame_freq, H becomes constant once the
    envelopes are (t >= longest ramp).
    """
    q, r1, r2 = lowering_ops(spec)
    qd = q.conj().T
    h_static = (spec.omega_r[0] - frame_freq) * (r1.conj().T @ r1)
    h_static = h_static + (spec.omega_r[1] - frame_freq) * (r2.conj().T @ r2)
    h_static = h_static + (spec.omega0 - frame_freq) * (qd @ q)
    if spec.qubit_levels > 2:
        h_static = h_static + 0.5 * spec.anharm * (qd @ qd @ q @ q)
    h_static = h_static + build_hc(spec)
    raising = (r1.conj().T, r2.conj().T)
    lowering = (r1, r2)

    def func(t: float) -> np.ndarray:
        h = h_static
        for drive, rd, r in zip(drives, raising, lowering):
            c = drive.envelope(t) * cmath.exp(
                1j * (frame_freq - drive.omega_d) * t + 1j * drive.phi_d
            )
            h = h + c * rd + c.conjugate() * r
        return h

    if drives[0].eps == 0.0 and drives[1].eps == 0.0:
        return HamiltonianModel.from_static(h_static)
    if all(d.omega_d == frame_freq or d.eps == 0.0 for d in drives):
        static_after = max(d.t_ramp for d in drives)
        return HamiltonianModel(dim=h_static.shape[0], func=func, static_after=static_after)
    return HamiltonianModel(dim=h_static.shape[0], func=func, static_after=math.inf)


def observable_ops(spec: CircuitSpec) -> dict[str, np.ndarray]:
    """Operators for the standard trajectory record.

    pe projects onto the first excited atom level only, i.e. the qubit
    subspace population even when qubit_levels = 3.
    """
    dims = spec.dims
    proj_e = np.zeros((spec.qubit_levels, spec.qubit_levels), dtype=complex)
    proj_e[1, 1] = 1.0
    _, r1, r2 = lowering_ops(spec)
    return {
        "pe": hilbert.embed(proj_e, 0, dims),
        "n_r1": r1.conj().T @ r1,
        "n_r2": r2.conj().T @ r2,
        "coh_r1": r1,
        "coh_r2": r2,
    }


def observables(psi: np.ndarray, spec: CircuitSpec) -> dict[str, complex | float]:
    """Single-state sample record: qubit population, photon numbers, coherences."""
    ops = observable_ops(spec)
    rec: dict[str, complex | float] = {}
    for name in ("pe", "n_r1", "n_r2"):
        rec[name] = hilbert.expectation(psi, ops[name]).real
    for name in ("coh_r1", "coh_r2"):
        rec[name] = hilbert.expectation(psi, ops[name])
    rec["norm_err"] = hilbert.norm_error(psi)
    return rec


def initial_ground_state(spec: CircuitSpec) -> np.ndarray:
    """|g, 0, 0> on the full space."""
    return hilbert.tensor(
        hilbert.basis_state(0, spec.qubit_levels),
        hilbert.basis_state(0, spec.resonator_levels),
        hilbert.basis_state(0, spec.resonator_levels),
    )
