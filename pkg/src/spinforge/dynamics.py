"""Free evolution of weakly coupled spins.

Hamiltonians are in rad/s.  The weak-coupling (Ising) free Hamiltonian in a
set of per-spin rotating frames with offsets ``off_i`` (Hz) is

    H = sum_i 2*pi*(nu_i - off_i) Iz_i  +  sum_{i<j} 2*pi*J_ij Iz_i Iz_j

which is diagonal in the computational basis.  Written with product-operator
normalisation the coupling term is pi*J * 2IzSz, so evolving for 1/(2J)
produces a controlled-Z up to single-spin z rotations and a global phase.
"""

from __future__ import annotations

import numpy as np

from .linalg import COMPLEX, dagger, expm_hermitian
from .states import DensityMatrix
from .system import SpinSystem


def free_hamiltonian(system: SpinSystem, frame_offsets=None) -> np.ndarray:
    """Diagonal weak-coupling Hamiltonian (rad/s) in the given rotating frames.

    frame_offsets: per-spin frame frequencies in Hz.  ``None`` means the
    laboratory rotating frame (all offsets zero, full Zeeman evolution);
    passing ``system.shift_hz`` puts every spin in its own resonant frame so
    only couplings evolve.
    """
    n = system.n
    if frame_offsets is None:
        frame_offsets = (0.0,) * n
    if len(frame_offsets) != n:
        raise ValueError("need one frame offset per spin")
    dim = system.dim
    diag = np.zeros(dim)
    for b in range(dim):
        m = [0.5 if ((b >> (n - 1 - i)) & 1) == 0 else -0.5 for i in range(n)]
        e = 0.0
        for i in range(n):
            e += 2 * np.pi * (system.shift_hz[i] - frame_offsets[i]) * m[i]
        for i in range(n):
            for j in range(i + 1, n):
                e += 2 * np.pi * float(system.j_hz[i, j]) * m[i] * m[j]
        diag[b] = e
    return np.diag(diag).astype(COMPLEX)


def resonant_frame_hamiltonian(system: SpinSystem) -> np.ndarray:
    """Free Hamiltonian with every spin in its own resonant frame (couplings only)."""
    return free_hamiltonian(system, frame_offsets=system.shift_hz)


def propagator(h: np.ndarray, t: float) -> np.ndarray:
    """U = exp(-i H t) for Hermitian H (rad/s) and duration t (s)."""
    if t < 0:
        raise ValueError("evolution time must be nonnegative")
    return expm_hermitian(h, scale=-1j * t)


def evolve(rho: DensityMatrix, h: np.ndarray, t: float) -> DensityMatrix:
    """rho -> U rho U+ under exp(-i H t); trace and spectrum preserved."""
    if h.shape[0] != rho.dim:
        raise ValueError("Hamiltonian dimension does not match state")
    u = propagator(h, t)
    return DensityMatrix(u @ rho.matrix @ dagger(u))
