"""Numerical hygiene on the reference inversion run.

Three checks that the exact integration is trustworthy: fourth-order step
convergence of the forced-RK4 path, insensitivity to the resonator Fock
truncation, and agreement between lab-frame and rotating-frame propagation.
"""

import math

import numpy as np

from giantatom import circuit, dynamics

TWO_PI = 2 * math.pi
W0 = TWO_PI * 5.0

spec = circuit.CircuitSpec.from_ghz(5.0, (3.0, 7.0), (0.08, 0.08))
drives = (
    circuit.Drive(eps=TWO_PI * 0.1, omega_d=W0, phi_d=math.pi, t_ramp=1.0),
    circuit.Drive(eps=TWO_PI * 0.1, omega_d=W0, phi_d=0.0, t_ramp=1.0),
)
psi0 = circuit.initial_ground_state(spec)
ops = {"pe": circuit.observable_ops(spec)["pe"]}


def rotating(dt, method="auto", levels=4, t_end=20.0):
    s = circuit.CircuitSpec.from_ghz(5.0, (3.0, 7.0), (0.08, 0.08),
                                     resonator_levels=levels)
    grid = dynamics.TimeGrid(t_end=t_end, dt=dt, sample_stride=round(0.2 / dt))
    return dynamics.integrate(
        circuit.rotating_frame_model(s, drives, W0),
        circuit.initial_ground_state(s), grid,
        ops={"pe": circuit.observable_ops(s)["pe"]}, method=method,
    ).expect["pe"].real


print("== RK4 step convergence (errors vs dt/8 reference) ==")
ref = rotating(0.02 / 8, method="rk4")
prev = None
for dt in (0.02, 0.01, 0.005):
    err = np.abs(rotating(dt, method="rk4") - ref).max()
    note = f"  ratio {prev / err:.1f}" if prev else ""
    print(f"dt = {dt:5.3f} ns: max error {err:.2e}{note}")
    prev = err

print()
print("== Fock truncation (reference: 6 levels per resonator) ==")
ref = rotating(0.01, levels=6)
for levels in (3, 4, 5):
    err = np.abs(rotating(0.01, levels=levels) - ref).max()
    print(f"levels = {levels}: max P_e change {err:.2e}")

print()
print("== lab frame vs rotating frame ==")
lab = dynamics.integrate(
    circuit.lab_frame_model(spec, drives), psi0,
    dynamics.TimeGrid(t_end=20.0, dt=5e-4, sample_stride=400), ops=ops,
)
rot = rotating(0.01)
print(f"max P_e difference: {np.abs(lab.expect['pe'].real - rot).max():.2e}")
print(f"max norm drift (lab, no renormalization): {lab.norm_err.max():.2e}")
