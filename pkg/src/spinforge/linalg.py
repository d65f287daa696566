"""Dense complex matrix helpers shared across the simulator.

Everything here operates on plain ``numpy.ndarray`` objects with dtype
complex128.  Dimensions stay tiny (at most 128x128 for seven spins), so
eigendecomposition-based routines are both exact enough and fast enough.
"""

from __future__ import annotations

import numpy as np

COMPLEX = np.complex128

# Single-spin operator blocks, spin-1/2 normalisation (eigenvalues +-1/2).
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=COMPLEX)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=COMPLEX)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=COMPLEX)
E2 = np.eye(2, dtype=COMPLEX)
IX = SIGMA_X / 2
IY = SIGMA_Y / 2
IZ = SIGMA_Z / 2


def dagger(a: np.ndarray) -> np.ndarray:
    return a.conj().T


def is_hermitian(a: np.ndarray, atol: float = 1e-12) -> bool:
    return bool(np.max(np.abs(a - dagger(a))) <= atol)


def is_unitary(a: np.ndarray, atol: float = 1e-10) -> bool:
    d = a.shape[0]
    return bool(np.max(np.abs(dagger(a) @ a - np.eye(d))) <= atol)


def expm_hermitian(h: np.ndarray, scale: complex = -1j) -> np.ndarray:
    """exp(scale * h) for Hermitian ``h`` via eigendecomposition.

    With the default ``scale=-1j`` this is the propagator of ``h`` for unit
    time; pass ``scale=-1j*t`` for duration ``t``.  Exact for Hermitian input
    up to the accuracy of ``eigh``.
    """
    w, v = np.linalg.eigh(h)
    return (v * np.exp(scale * w)) @ dagger(v)


def kron_all(factors: list[np.ndarray]) -> np.ndarray:
    out = factors[0]
    for f in factors[1:]:
        out = np.kron(out, f)
    return out


def single_spin_op(op: np.ndarray, spin: int, n: int) -> np.ndarray:
    """Embed a 2x2 operator on ``spin`` into the n-spin space.

    Spin 0 is the most significant bit of the basis index, i.e. basis state
    ``|b_0 b_1 ... b_{n-1}>`` has index ``sum(b_i << (n-1-i))``.
    """
    if not 0 <= spin < n:
        raise ValueError(f"spin index {spin} outside register of size {n}")
    return kron_all([op if i == spin else E2 for i in range(n)])


def collective_op(op: np.ndarray, n: int) -> np.ndarray:
    """Sum of a single-spin operator over all spins (e.g. total Ix)."""
    out = np.zeros((2**n, 2**n), dtype=COMPLEX)
    for i in range(n):
        out += single_spin_op(op, i, n)
    return out


def global_phase_between(u: np.ndarray, v: np.ndarray, atol: float = 1e-10):
    """Test whether ``v = exp(i*gamma) u`` and return (bool, gamma).

    gamma is reported in (-pi, pi].  When the matrices are not phase-related
    the returned gamma is the best candidate extracted from the largest
    element of ``u`` (useful in error messages) but the flag is False.
    """
    if u.shape != v.shape:
        raise ValueError("dimension mismatch")
    idx = np.unravel_index(np.argmax(np.abs(u)), u.shape)
    if np.abs(u[idx]) < atol:
        # u is (numerically) zero; phase is meaningless
        return bool(np.max(np.abs(v)) <= atol), 0.0
    ratio = v[idx] / u[idx]
    mag = np.abs(ratio)
    if mag < atol:
        return False, 0.0
    phase = ratio / mag
    gamma = float(np.angle(phase))
    ok = bool(np.max(np.abs(v - phase * u)) <= atol)
    return ok, gamma


def basis_ket(index: int, n: int) -> np.ndarray:
    amp = np.zeros(2**n, dtype=COMPLEX)
    amp[index] = 1.0
    return amp


def bits_of(index: int, n: int) -> tuple[int, ...]:
    """Bits of a basis index, spin 0 (MSB) first."""
    return tuple((index >> (n - 1 - i)) & 1 for i in range(n))


def index_of(bits) -> int:
    out = 0
    for b in bits:
        out = (out << 1) | int(b)
    return out
