"""Interference between non-overlapping field modes coupled to one giant atom.

Library layout:
  hilbert    -- truncated-Fock-space operator algebra
  collective -- idealized two-mode model (bright/dark collective states)
  circuit    -- superconducting-circuit Hamiltonians and rotating frames
  dynamics   -- Schrodinger integration and observable extraction
  effective  -- dispersive two-level reduction and resultant drive phasor
  cli        -- scenario runner writing CSV trajectories and summaries
"""

__version__ = "0.1.0"
