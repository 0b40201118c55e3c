import math

import numpy as np
import pytest

from giantatom.dynamics import (
    HamiltonianModel,
    IntegrationDivergedError,
    TimeGrid,
    estimate_inversion_time,
    integrate,
)

SIGMA_P = np.array([[0, 0], [1, 0]], dtype=complex)


def rabi_model(omega: complex) -> HamiltonianModel:
    h = -(omega * SIGMA_P + np.conj(omega) * SIGMA_P.conj().T)
    return HamiltonianModel.from_static(h)


GROUND = np.array([1.0, 0.0], dtype=complex)
PE = np.diag([0.0, 1.0]).astype(complex)


def test_zero_hamiltonian_is_identity_evolution():
    rng = np.random.default_rng(0)
    psi0 = rng.normal(size=4) + 1j * rng.normal(size=4)
    psi0 /= np.linalg.norm(psi0)
    model = HamiltonianModel.from_static(np.zeros((4, 4), dtype=complex))
    proj = np.outer(psi0, psi0.conj())
    raw = integrate(model, psi0, TimeGrid(t_end=3.0, dt=0.1), ops={"overlap": proj})
    assert np.allclose(raw.expect["overlap"].real, 1.0)
    assert raw.norm_err.max() < 1e-12


@pytest.mark.parametrize("method", ["auto", "rk4"])
def test_resonant_rabi_oscillation(method):
    omega = 0.3 * np.exp(0.4j)
    dt = 1e-3 / abs(omega)
    grid = TimeGrid(t_end=2 * math.pi / abs(omega), dt=dt, sample_stride=50)
    raw = integrate(rabi_model(omega), GROUND, grid, ops={"pe": PE}, method=method)
    expected = np.sin(abs(omega) * raw.times) ** 2
    assert np.abs(raw.expect["pe"].real - expected).max() < 1e-6


def test_exact_and_rk4_paths_agree():
    omega = 0.21
    grid = TimeGrid(t_end=20.0, dt=0.01, sample_stride=20)
    auto = integrate(rabi_model(omega), GROUND, grid, ops={"pe": PE}, method="auto")
    rk4 = integrate(rabi_model(omega), GROUND, grid, ops={"pe": PE}, method="rk4")
    assert np.abs(auto.expect["pe"].real - rk4.expect["pe"].real).max() < 1e-6


def test_rk4_fourth_order_self_convergence():
    # time-dependent drive so the RK4 path is actually exercised
    omega = 0.4

    def func(t):
        om = omega * (1 + 0.3 * math.sin(0.5 * t))
        return -om * (SIGMA_P + SIGMA_P.conj().T)

    def pe_with(dt):
        grid = TimeGrid(t_end=10.0, dt=dt, sample_stride=round(0.5 / dt))
        model = HamiltonianModel(dim=2, func=func, static_after=math.inf)
        return integrate(model, GROUND, grid, ops={"pe": PE}, method="rk4").expect["pe"].real

    ref = pe_with(0.1 / 8)
    errs = [np.abs(pe_with(dt) - ref).max() for dt in (0.1, 0.05)]
    assert errs[0] / errs[1] >= 12.0


def test_energy_conservation_static_h():
    rng = np.random.default_rng(5)
    m = rng.normal(size=(6, 6)) + 1j * rng.normal(size=(6, 6))
    h = m + m.conj().T
    psi0 = rng.normal(size=6) + 1j * rng.normal(size=6)
    psi0 /= np.linalg.norm(psi0)
    raw = integrate(HamiltonianModel.from_static(h), psi0,
                    TimeGrid(t_end=10.0, dt=0.01), ops={"h": h.astype(complex)})
    energies = raw.expect["h"].real
    assert np.abs(energies - energies[0]).max() < 1e-6 * np.linalg.norm(h)


def test_diverged_integration_raises():
    h = np.diag([0.0, 50.0]).astype(complex)  # RK4 wildly unstable at dt = 1
    psi0 = np.array([1.0, 1.0], dtype=complex) / math.sqrt(2)
    with pytest.raises(IntegrationDivergedError) as excinfo:
        integrate(HamiltonianModel(dim=2, func=lambda t: h, static_after=math.inf),
                  psi0, TimeGrid(t_end=20.0, dt=1.0), method="rk4")
    assert excinfo.value.time > 0


def test_estimate_inversion_time_sine_squared():
    omega = 0.11
    times = np.arange(0, 40.0, 0.25)
    pe = np.sin(omega * times) ** 2
    tau = estimate_inversion_time(times, pe, 0.9)
    assert abs(tau - math.pi / (2 * omega)) < 0.25


def test_estimate_inversion_time_absent():
    times = np.linspace(0, 10, 101)
    assert estimate_inversion_time(times, np.zeros_like(times), 0.5) is None
    assert estimate_inversion_time(times, 0.3 * np.ones_like(times), 0.5) is None


def test_estimate_inversion_time_plateau_prefers_earliest():
    times = np.linspace(0, 5, 6)
    pe = np.array([0.0, 0.5, 1.0, 1.0, 1.0, 0.2])
    tau = estimate_inversion_time(times, pe, 0.9)
    assert tau <= 3.0


def test_grid_validation():
    with pytest.raises(ValueError):
        TimeGrid(t_end=1.0, dt=0.0)
    with pytest.raises(ValueError):
        TimeGrid(t_end=0.05, dt=0.1)
    with pytest.raises(ValueError):
        TimeGrid(t_end=1.0, dt=0.1, sample_stride=0)


def test_dim_mismatch_errors():
    model = HamiltonianModel.from_static(np.zeros((3, 3), dtype=complex))
    with pytest.raises(ValueError):
        integrate(model, GROUND, TimeGrid(t_end=1.0, dt=0.1))
    psi0 = np.array([1.0, 0.0, 0.0], dtype=complex)
    with pytest.raises(ValueError):
        integrate(model, psi0, TimeGrid(t_end=1.0, dt=0.1), ops={"pe": PE})
