"""Two non-overlapping field modes coupled to a single two-level emitter.

Implements the collective-mode algebra for two spatially separated modes a
and b interacting with one extended atom: the collective lowering operator,
its photon-number interference formula, the semi-classical resultant field,
and the full quantum simulation that exhibits bright and dark driving.

Subsystem ordering for the full quantum model is (atom, mode a, mode b);
the bare two-mode operators use (mode a, mode b).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import hilbert
from .dynamics import HamiltonianModel, TimeGrid, integrate


@dataclass(frozen=True)
class ModeGeometry:
    """Coupling-point geometry of the two modes, all lengths in units of lam."""

    r_a: float
    r_b: float
    theta_a: float
    theta_b: float
    lam: float

    def __post_init__(self):
        if self.lam <= 0:
            raise ValueError(f"wavelength must be positive, got {self.lam}")
        if self.r_a < 0 or self.r_b < 0:
            raise ValueError("coupling-point distances must be nonnegative")

    @property
    def phase_a(self) -> float:
        return geometric_phase(self.r_a, self.theta_a, self.lam)

    @property
    def phase_b(self) -> float:
        return geometric_phase(self.r_b, self.theta_b, self.lam)

    @property
    def path_difference(self) -> float:
        return self.r_b * math.cos(self.theta_b) - self.r_a * math.cos(self.theta_a)

    @classmethod
    def from_path_difference(cls, path_diff_over_lam: float) -> "ModeGeometry":
        """Geometry with phase_a = 0 and the given path difference in wavelengths."""
        return cls(r_a=0.0, r_b=abs(path_diff_over_lam), theta_a=0.0,
                   theta_b=0.0 if path_diff_over_lam >= 0 else math.pi, lam=1.0)


@dataclass(frozen=True)
class TwoModeState:
    """Product coherent state |alpha>_a |beta>_b."""

    alpha: complex
    beta: complex

    def __post_init__(self):
        if not (cmath.isfinite(self.alpha) and cmath.isfinite(self.beta)):
            raise ValueError("coherent amplitudes must be finite")


def geometric_phase(r: float, theta: float, lam: float) -> float:
    """Plane-wave phase k.r = 2 pi r cos(theta) / lam at a coupling point."""
    if lam <= 0:
        raise ValueError(f"wavelength must be positive, got {lam}")
    return 2.0 * math.pi * r * math.cos(theta) / lam


def collective_mode(phase_a: float, phase_b: float, levels: int) -> np.ndarray:
    """The collective lowering operator (a e^{i phase_a} + b e^{i phase_b}) / sqrt(2).

    Acts on the (mode a, mode b) product space with `levels` Fock levels each.
    """
    a = hilbert.annihilation(levels)
    dims = (levels, levels)
    op_a = hilbert.embed(a, 0, dims)
    op_b = hilbert.embed(a, 1, dims)
    return (op_a * cmath.exp(1j * phase_a) + op_b * cmath.exp(1j * phase_b)) / math.sqrt(2.0)


def ncol_expected_analytic(state: TwoModeState, phase_diff: float) -> float:
    """Collective-mode photon number for a product coherent state.

    N_total/2 + Re[beta conj(alpha) e^{i phase_diff}], with phase_diff the
    geometric phase of mode b minus that of mode a. Bounded by N_total.
    """
    alpha, beta = state.alpha, state.beta
    n_total = abs(alpha) ** 2 + abs(beta) ** 2
    return 0.5 * n_total + (beta * alpha.conjugate() * cmath.exp(1j * phase_diff)).real


def resultant_amplitude(state: TwoModeState, geom: ModeGeometry) -> float:
    """|alpha + beta e^{i 2 pi (path difference)/lam}|, proportionality constant 1."""
    phase = 2.0 * math.pi * geom.path_difference / geom.lam
    return abs(state.alpha + state.beta * cmath.exp(1j * phase))


def interference_class(state: TwoModeState, geom: ModeGeometry, tol: float) -> str:
    """Classify the resultant field as constructive, destructive, or partial."""
    if not 0 < tol < 0.5:
        raise ValueError(f"tol must lie in (0, 0.5), got {tol}")
    scale = abs(state.alpha) + abs(state.beta)
    if scale == 0.0:
        return "destructive"  # vacuum drives nothing
    e_res = resultant_amplitude(state, geom)
    if e_res <= tol * scale:
        return "destructive"
    if e_res >= (1.0 - tol) * scale:
        return "constructive"
    return "partial"


def semiclassical_hamiltonian(state: TwoModeState, geom: ModeGeometry, g: float) -> np.ndarray:
    """2x2 drive Hamiltonian g [alpha e^{i phi_a} + beta e^{i phi_b}] sigma_+ + h.c."""
    lam = g * (state.alpha * cmath.exp(1j * geom.phase_a)
               + state.beta * cmath.exp(1j * geom.phase_b))
    return lam * hilbert.sigma_plus() + lam.conjugate() * hilbert.sigma_minus()


@dataclass
class TwoModeTrajectory:
    times: np.ndarray
    pe: np.ndarray
    n_a: np.ndarray
    n_b: np.ndarray
    n_col: np.ndarray
    norm_err: np.ndarray


def simulate_two_mode_quantum(
    state: TwoModeState,
    geom: ModeGeometry,
    g: float,
    omega: float,
    omega0: float,
    levels: int,
    grid: TimeGrid,
) -> TwoModeTrajectory:
    """Full quantum evolution of the two-mode + atom model from |g, alpha, beta>.

    Works in the frame rotating at the mode frequency omega on every
    subsystem, where the RWA Hamiltonian is time-independent:

        H = (omega0 - omega) sigma_+ sigma_-
            + g (a e^{i phi_a} + b e^{i phi_b}) sigma_+ + h.c.

    Truncation guard: |alpha|^2 and |beta|^2 must not exceed levels/4.
    """
    if max(abs(state.alpha) ** 2, abs(state.beta) ** 2) > levels / 4.0:
        raise ValueError(
            f"photon occupation too close to the truncation: need |amp|^2 <= levels/4 = {levels / 4.0}"
        )
    dims = (2, levels, levels)
    a_op = hilbert.annihilation(levels)
    atom_a = hilbert.embed(a_op, 1, dims)
    atom_b = hilbert.embed(a_op, 2, dims)
    sp = hilbert.embed(hilbert.sigma_plus(), 0, dims)
    drive = g * (atom_a * cmath.exp(1j * geom.phase_a) + atom_b * cmath.exp(1j * geom.phase_b))
    interaction = sp @ drive  # sigma_+ and the mode operators act on disjoint slots
    h = (omega0 - omega) * hilbert.embed(hilbert.excited_projector(), 0, dims)
    h = h + interaction + interaction.conj().T

    c_modes = collective_mode(geom.phase_a, geom.phase_b, levels)
    n_col_modes = c_modes.conj().T @ c_modes
    ops = {
        "pe": hilbert.embed(hilbert.excited_projector(), 0, dims),
        "n_a": atom_a.conj().T @ atom_a,
        "n_b": atom_b.conj().T @ atom_b,
        "n_col": np.kron(np.eye(2), n_col_modes),
    }

    psi0 = hilbert.tensor(
        hilbert.basis_state(0, 2),
        hilbert.coherent_state(state.alpha, levels),
        hilbert.coherent_state(state.beta, levels),
    )
    raw = integrate(HamiltonianModel.from_static(h), psi0, grid, ops=ops)
    return TwoModeTrajectory(
        times=raw.times,
        pe=raw.expect["pe"].real,
        n_a=raw.expect["n_a"].real,
        n_b=raw.expect["n_b"].real,
        n_col=raw.expect["n_col"].real,
        norm_err=raw.norm_err,
    )
