"""Dispersive reduction of the circuit model to a driven two-level atom.

Each off-resonantly driven resonator settles into a coherent state whose
amplitude follows the drive quasi-statically, and its drive line turns into
a direct atomic drive with effective amplitude Omega_{0,k} = g_k eps_k /
(omega_{r,k} - omega_{d,k}). The two contributions add as phasors, so the
atomic Rabi rate carries the interference of the two spatially separated
drives.

Sign convention for the resonator coherence: integrating the displaced-frame
condition i d(xi)/dt = (omega_r - omega_d) xi + eps e^{i phi} (frame rotating
at omega_d) gives the steady amplitude xi = eps e^{i phi} / (omega_d -
omega_r). This is the amplitude the exact dynamics actually develops, and is
what `displacement_amplitude` returns.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass

import numpy as np

from . import hilbert
from .circuit import CircuitSpec, DrivePair
from .dynamics import HamiltonianModel, TimeGrid, integrate


@dataclass(frozen=True)
class EffectiveParams:
    """Derived dispersive quantities, all angular frequencies in rad/ns."""

    delta: tuple[float, float]          # omega_{r,k} - omega0
    delta_ds: tuple[float, float]       # per-resonator shift g_k^2 / Delta_k
    omega0k: tuple[float, float]        # effective drive amplitudes (signed, real)
    drive_freqs: tuple[float, float]
    drive_phases: tuple[float, float]
    eps: tuple[float, float]
    t_ramp: tuple[float, float]
    drive_detuning: tuple[float, float]  # omega_{r,k} - omega_{d,k}

    @property
    def delta_ds_total(self) -> float:
        return self.delta_ds[0] + self.delta_ds[1]

    def envelope_scale(self, k: int, t: float) -> float:
        tr = self.t_ramp[k]
        if tr > 0 and t < tr:
            return max(t, 0.0) / tr
        return 1.0


def derive_effective(spec: CircuitSpec, drives: DrivePair) -> EffectiveParams:
    """Dispersive shifts and effective drive amplitudes for a driven circuit."""
    delta = spec.delta
    for k in (0, 1):
        if delta[k] == 0.0:
            raise ValueError(f"resonator {k + 1} is resonant with the atom")
        if spec.omega_r[k] == drives[k].omega_d:
            raise ValueError(
                f"drive {k + 1} is resonant with its resonator; the effective amplitude diverges"
            )
    delta_ds = tuple(spec.g[k] ** 2 / delta[k] for k in (0, 1))
    drive_det = tuple(spec.omega_r[k] - drives[k].omega_d for k in (0, 1))
    omega0k = tuple(spec.g[k] * drives[k].eps / drive_det[k] for k in (0, 1))
    for k in (0, 1):
        if abs(omega0k[k]) > 0.1 * abs(delta[k]):
            warnings.warn(
                f"effective amplitude Omega_0,{k + 1} is not small against Delta_{k + 1}; "
                "the dispersive reduction is unreliable",
                stacklevel=2,
            )
    return EffectiveParams(
        delta=delta,
        delta_ds=delta_ds,
        omega0k=omega0k,
        drive_freqs=(drives[0].omega_d, drives[1].omega_d),
        drive_phases=(drives[0].phi_d, drives[1].phi_d),
        eps=(drives[0].eps, drives[1].eps),
        t_ramp=(drives[0].t_ramp, drives[1].t_ramp),
        drive_detuning=drive_det,
    )


def displacement_amplitude(params: EffectiveParams, k: int, t: float, frame_freq: float = 0.0) -> complex:
    """Quasi-static coherent amplitude of resonator k at time t.

    frame_freq = 0 gives the lab-frame amplitude rotating at -omega_{d,k};
    pass the integration frame frequency to compare against rotating-frame
    trajectory coherences.
    """
    # omega_d - omega_r in the denominator: see the module docstring.
    base = params.eps[k] * params.envelope_scale(k, t) / (-params.drive_detuning[k])
    return base * cmath.exp(1j * (frame_freq - params.drive_freqs[k]) * t + 1j * params.drive_phases[k])


def resultant_phasor(params: EffectiveParams, t: float) -> complex:
    """Omega_res(t) = sum_k Omega_{0,k}(t) e^{-i omega_{d,k} t + i phi_{d,k}}."""
    total = 0.0 + 0.0j
    for k in (0, 1):
        total += (
            params.omega0k[k]
            * params.envelope_scale(k, t)
            * cmath.exp(-1j * params.drive_freqs[k] * t + 1j * params.drive_phases[k])
        )
    return total


def phasor_magnitude_constant(params: EffectiveParams) -> float:
    """|Omega_res| after ramps, valid when both drives share one frequency."""
    if params.drive_freqs[0] != params.drive_freqs[1] and min(params.eps) > 0:
        raise ValueError("drives at different frequencies have no constant phasor magnitude")
    total = sum(
        params.omega0k[k] * cmath.exp(1j * params.drive_phases[k]) for k in (0, 1)
    )
    return abs(total)


def effective_hamiltonian(params: EffectiveParams, omega0: float, t: float) -> np.ndarray:
    """2x2 qubit Hamiltonian (omega0 + delta_ds) |e><e| - [Omega_res sigma_+ + h.c.]."""
    om = resultant_phasor(params, t)
    h = (omega0 + params.delta_ds_total) * hilbert.excited_projector()
    return h - om * hilbert.sigma_plus() - om.conjugate() * hilbert.sigma_minus()


def effective_population(params: EffectiveParams, omega0: float, times: np.ndarray) -> np.ndarray:
    """Qubit excited-state population of the effective model at the given times.

    When both drives sit at the shifted atomic frequency the analytic
    resonant solution P_e = sin^2(integral |Omega_res|) is used; otherwise
    the 2x2 model is integrated numerically in the frame rotating at the
    first drive frequency.
    """
    times = np.asarray(times, dtype=float)
    shifted = omega0 + params.delta_ds_total
    resonant = all(
        params.drive_freqs[k] == shifted or params.eps[k] == 0.0 for k in (0, 1)
    )
    if resonant:
        # |Omega_res(t)| reduces to |sum_k Omega0k e^{i phi_k} s_k(t)| with
        # s_k the ramp scale; accumulate the Rabi phase by trapezoid rule.
        fine = np.linspace(0.0, times[-1], max(4 * times.size, 2001))
        mags = np.array(
            [
                abs(
                    sum(
                        params.omega0k[k]
                        * params.envelope_scale(k, t)
                        * cmath.exp(1j * params.drive_phases[k])
                        for k in (0, 1)
                    )
                )
                for t in fine
            ]
        )
        phase = np.concatenate(([0.0], np.cumsum(0.5 * (mags[1:] + mags[:-1]) * np.diff(fine))))
        return np.sin(np.interp(times, fine, phase)) ** 2

    frame = params.drive_freqs[0]
    detune = shifted - frame

    def func(t: float) -> np.ndarray:
        om = resultant_phasor(params, t) * cmath.exp(1j * frame * t)
        return np.array([[0.0, -om.conjugate()], [-om, detune]], dtype=complex)

    dt = min(0.005 * 2 * math.pi / max(abs(detune), 1.0), times[1] - times[0] if times.size > 1 else 0.01)
    grid = TimeGrid(t_end=float(times[-1]), dt=dt, sample_stride=1)
    raw = integrate(
        HamiltonianModel(dim=2, func=func, static_after=math.inf),
        np.array([1.0, 0.0], dtype=complex),
        grid,
        ops={"pe": np.diag([0.0, 1.0]).astype(complex)},
    )
    return np.interp(times, raw.times, raw.expect["pe"].real)


def excitation_time(params: EffectiveParams) -> float:
    """Ideal inversion time pi / (2 |Omega_res|), ignoring ramps."""
    mag = phasor_magnitude_constant(params)
    if mag == 0.0:
        return math.inf
    return math.pi / (2.0 * mag)
