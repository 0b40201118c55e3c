"""Dense operator algebra on truncated Fock spaces.

All operators are plain square complex ndarrays, all states are 1-D complex
ndarrays. Subsystem ordering conventions are fixed by the callers (see
`circuit` and `collective`); atom basis ordering is index 0 = |g>, index 1 =
|e>, so sigma_plus = dagger(annihilation(2)) on the two-level subspace.
"""

from __future__ import annotations

import math

import numpy as np

# Guard against accidental Hilbert-space blowup; everything here is dense.
MAX_TOTAL_DIM = 1_000_000


def annihilation(levels: int) -> np.ndarray:
    """Bosonic lowering operator on a `levels`-dimensional truncated space."""
    if levels < 2:
        raise ValueError(f"need at least 2 levels, got {levels}")
    return np.diag(np.sqrt(np.arange(1, levels)), 1).astype(complex)


def creation(levels: int) -> np.ndarray:
    return dagger(annihilation(levels))


def number(levels: int) -> np.ndarray:
    """n = a^dag a; diagonal (0, 1, ..., levels-1)."""
    if levels < 2:
        raise ValueError(f"need at least 2 levels, got {levels}")
    return np.diag(np.arange(levels, dtype=float)).astype(complex)


def identity(levels: int) -> np.ndarray:
    return np.eye(levels, dtype=complex)


def dagger(op: np.ndarray) -> np.ndarray:
    return op.conj().T


def total_dim(dims: tuple[int, ...]) -> int:
    """Product of subsystem dimensions, with sanity guards."""
    if not dims:
        raise ValueError("empty dimension list")
    for d in dims:
        if d < 2:
            raise ValueError(f"every subsystem dimension must be >= 2, got {d}")
    dim = math.prod(dims)
    if dim > MAX_TOTAL_DIM:
        raise ValueError(f"total dimension {dim} exceeds {MAX_TOTAL_DIM}")
    return dim


def embed(op: np.ndarray, slot: int, dims: tuple[int, ...]) -> np.ndarray:
    """Lift `op` acting on subsystem `slot` to the full tensor-product space.

    Kronecker product with identities on every other slot, in the order
    given by `dims` (slot 0 is the leftmost / most significant factor).
    """
    total_dim(dims)
    if not 0 <= slot < len(dims):
        raise ValueError(f"slot {slot} out of range for {len(dims)} subsystems")
    if op.shape != (dims[slot], dims[slot]):
        raise ValueError(
            f"operator shape {op.shape} does not match dim {dims[slot]} at slot {slot}"
        )
    out = np.eye(1, dtype=complex)
    for i, d in enumerate(dims):
        out = np.kron(out, op if i == slot else np.eye(d))
    return out


def basis_state(index: int, levels: int) -> np.ndarray:
    if not 0 <= index < levels:
        raise ValueError(f"index {index} out of range for {levels} levels")
    psi = np.zeros(levels, dtype=complex)
    psi[index] = 1.0
    return psi


def coherent_state(amp: complex, levels: int) -> np.ndarray:
    """Truncated coherent state |amp>, renormalized to unit norm.

    Amplitudes are proportional to amp^n / sqrt(n!); the truncation error is
    negligible when |amp|^2 << levels.
    """
    if levels < 2:
        raise ValueError(f"need at least 2 levels, got {levels}")
    psi = np.empty(levels, dtype=complex)
    psi[0] = 1.0
    for n in range(1, levels):
        psi[n] = psi[n - 1] * amp / math.sqrt(n)
    return psi / np.linalg.norm(psi)


def tensor(*states: np.ndarray) -> np.ndarray:
    """Tensor product of state vectors, leftmost factor most significant."""
    out = np.array([1.0 + 0.0j])
    for s in states:
        out = np.kron(out, s)
    return out


def expectation(state: np.ndarray, op: np.ndarray) -> complex:
    """<psi| op |psi>. Returns a complex scalar; take .real for Hermitian op."""
    if op.shape != (state.size, state.size):
        raise ValueError(f"operator shape {op.shape} does not match state dim {state.size}")
    return complex(np.vdot(state, op @ state))


def norm_error(state: np.ndarray) -> float:
    """|1 - ||psi|||, the unitarity drift monitor."""
    return abs(1.0 - float(np.linalg.norm(state)))


# Two-level atom operators, basis ordering |g> = 0, |e> = 1.
def sigma_z() -> np.ndarray:
    return np.diag([-1.0, 1.0]).astype(complex)


def sigma_plus() -> np.ndarray:
    return creation(2)


def sigma_minus() -> np.ndarray:
    return annihilation(2)


def excited_projector() -> np.ndarray:
    return np.diag([0.0, 1.0]).astype(complex)
