"""Drive-phase interference in the circuit realization.

A qubit at 5.0 GHz sits between resonators at 3.0 and 7.0 GHz (g = 80 MHz).
Driving both resonators at the qubit frequency with a relative phase of pi
inverts the qubit twice as fast as a single drive; in phase, the effective
drives cancel and the qubit stays dark even though both resonators hold
photons.
"""

import math

import numpy as np

from giantatom import circuit, dynamics, effective

TWO_PI = 2 * math.pi
W0 = TWO_PI * 5.0

spec = circuit.CircuitSpec.from_ghz(5.0, (3.0, 7.0), (0.08, 0.08))


def run(dphi, single=False, t_end=60.0):
    drives = (
        circuit.Drive(eps=TWO_PI * 0.1, omega_d=W0, phi_d=dphi, t_ramp=1.0),
        circuit.Drive(eps=0.0 if single else TWO_PI * 0.1, omega_d=W0,
                      phi_d=0.0, t_ramp=1.0),
    )
    model = circuit.rotating_frame_model(spec, drives, W0)
    grid = dynamics.TimeGrid(t_end=t_end, dt=0.01)
    raw = dynamics.integrate(model, circuit.initial_ground_state(spec), grid,
                             ops=circuit.observable_ops(spec))
    return drives, raw


for label, dphi in (("out of phase (dphi = pi)", math.pi), ("in phase (dphi = 0)", 0.0)):
    drives, raw = run(dphi)
    pe = raw.expect["pe"].real
    tau = dynamics.estimate_inversion_time(raw.times, pe, 0.5)
    params = effective.derive_effective(spec, drives)
    pe_eff = effective.effective_population(params, W0, raw.times)
    print(f"== {label} ==")
    print(f"max P_e = {pe.max():.4f}, inversion at "
          f"{'%.2f ns' % tau if tau else 'never'}")
    print(f"mean resonator photons = {raw.expect['n_r1'].real[raw.times >= 5].mean():.4f}")
    print(f"effective-model deviation: {np.abs(pe - pe_eff).max():.4f}")
    print()

_, single = run(math.pi, single=True, t_end=80.0)
tau_s = dynamics.estimate_inversion_time(single.times, single.expect["pe"].real, 0.5)
print(f"single drive inverts at {tau_s:.2f} ns; two out-of-phase drives are twice as fast.")
