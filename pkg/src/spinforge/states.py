"""Quantum states of the spin register: kets, density matrices, thermal states."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import COMPLEX, E2, IZ, dagger, is_hermitian
from .pauli import ProductOperatorExpansion, pauli_expand
from .system import SpinSystem

KET_NORM_TOL = 1e-12
HERM_TOL = 1e-12
TRACE_TOL = 1e-12
EIG_TOL = 1e-10


@dataclass(frozen=True)
class Ket:
    """Pure state of n qubits as a normalized complex amplitude vector.

    Spin 0 is the most significant bit of the amplitude index.  Global phase
    is physically meaningless; :meth:`canonical` fixes it by making the first
    nonzero amplitude real and nonnegative.
    """

    amplitudes: np.ndarray

    def __post_init__(self):
        amp = np.asarray(self.amplitudes, dtype=COMPLEX).reshape(-1).copy()
        n = int(round(np.log2(amp.size)))
        if 2**n != amp.size:
            raise ValueError(f"amplitude vector length {amp.size} is not a power of 2")
        norm = float(np.linalg.norm(amp))
        if abs(norm**2 - 1.0) > 1e-9:
            raise ValueError(f"ket is not normalized: |psi|^2 = {norm**2}")
        amp /= norm  # scrub residual rounding inside the tolerance
        amp.flags.writeable = False
        object.__setattr__(self, "amplitudes", amp)

    @property
    def n(self) -> int:
        return int(round(np.log2(self.amplitudes.size)))

    def canonical(self) -> "Ket":
        amp = self.amplitudes
        idx = np.flatnonzero(np.abs(amp) > KET_NORM_TOL)
        if idx.size == 0:
            return self
        pivot = amp[idx[0]]
        return Ket(amp * (abs(pivot) / pivot))

    def close_to(self, other: "Ket", atol: float = 1e-10) -> bool:
        a = self.canonical().amplitudes
        b = other.canonical().amplitudes
        return bool(np.max(np.abs(a - b)) <= atol)


@dataclass(frozen=True)
class DensityMatrix:
    """Mixed state: Hermitian, unit trace, positive semidefinite (to 1e-10)."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=COMPLEX).copy()
        dim = m.shape[0]
        n = int(round(np.log2(dim)))
        if m.shape != (dim, dim) or 2**n != dim:
            raise ValueError(f"density matrix shape {m.shape} is not 2^n x 2^n")
        if not is_hermitian(m, atol=HERM_TOL):
            raise ValueError("density matrix must be Hermitian")
        tr = np.trace(m)
        if abs(tr - 1.0) > TRACE_TOL:
            raise ValueError(f"density matrix trace {tr} != 1")
        evals = np.linalg.eigvalsh(m)
        if evals.min() < -EIG_TOL:
            raise ValueError(f"density matrix has negative eigenvalue {evals.min()}")
        m.flags.writeable = False
        object.__setattr__(self, "matrix", m)

    @property
    def n(self) -> int:
        return int(round(np.log2(self.matrix.shape[0])))

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def deviation(self) -> "DeviationDensityMatrix":
        """Traceless part, in the same absolute units as the density matrix."""
        dev = self.matrix - np.eye(self.dim) / self.dim
        return DeviationDensityMatrix(dev)

    def expansion(self) -> ProductOperatorExpansion:
        return pauli_expand(self.matrix)


@dataclass(frozen=True)
class DeviationDensityMatrix:
    """Traceless Hermitian 'deviation' part of a state.

    Not a physical state (it has negative eigenvalues); it is the NMR
    bookkeeping fiction obtained by dropping multiples of the identity.
    ``scale`` records the absolute size of the deviation relative to the
    working (often unit) normalisation.
    """

    matrix: np.ndarray
    scale: float = 1.0

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=COMPLEX).copy()
        if not is_hermitian(m, atol=HERM_TOL):
            raise ValueError("deviation matrix must be Hermitian")
        if abs(np.trace(m)) > max(TRACE_TOL, 1e-12 * np.abs(m).max() if m.size else 0):
            raise ValueError(f"deviation matrix trace {np.trace(m)} != 0")
        m.flags.writeable = False
        object.__setattr__(self, "matrix", m)

    @property
    def n(self) -> int:
        return int(round(np.log2(self.matrix.shape[0])))

    def expansion(self) -> ProductOperatorExpansion:
        return pauli_expand(self.matrix)


def density_from_ket(ket: Ket) -> DensityMatrix:
    """|psi><psi|; independent of the global phase of |psi> by construction."""
    amp = ket.amplitudes
    return DensityMatrix(np.outer(amp, amp.conj()))


def mix(components: list[tuple[float, DensityMatrix]]) -> DensityMatrix:
    """Statistical mixture sum_i p_i rho_i.

    Probabilities must be nonnegative and sum to 1 within 1e-12; all matrices
    must share one dimension.
    """
    if not components:
        raise ValueError("mix() needs at least one component")
    probs = np.array([p for p, _ in components], dtype=float)
    if probs.min() < 0:
        raise ValueError("mixture probabilities must be nonnegative")
    if abs(probs.sum() - 1.0) > 1e-12:
        raise ValueError(f"mixture probabilities sum to {probs.sum()} != 1")
    dim = components[0][1].dim
    out = np.zeros((dim, dim), dtype=COMPLEX)
    for p, rho in components:
        if rho.dim != dim:
            raise ValueError("mixture components have mismatched dimensions")
        out += p * rho.matrix
    return DensityMatrix(out)


def purity(rho: DensityMatrix) -> float:
    """tr(rho^2), in (0, 1]; equals 1 exactly for pure states."""
    return float(np.real(np.trace(rho.matrix @ rho.matrix)))


def bloch(rho: DensityMatrix) -> tuple[float, float, float, float]:
    """(s0, sx, sy, sz) Pauli coefficients of a single-qubit state.

    s0 is always 1 for a unit-trace state and the (sx, sy, sz) vector has
    length <= 1, with equality exactly for pure states.
    """
    if rho.n != 1:
        raise ValueError("bloch() requires a single-qubit state")
    m = rho.matrix
    s0 = float(np.real(np.trace(m)))
    sx = float(np.real(np.trace(m @ np.array([[0, 1], [1, 0]]))))
    sy = float(np.real(np.trace(m @ np.array([[0, -1j], [1j, 0]]))))
    sz = float(np.real(np.trace(m @ np.array([[1, 0], [0, -1]]))))
    return (s0, sx, sy, sz)


def ket_from_angles(theta: float, phi: float) -> Ket:
    """Bloch-sphere ket cos(theta/2)|0> + sin(theta/2) e^{i phi} |1>.

    theta is the co-latitude in [0, pi], phi the azimuth in [0, 2*pi).
    """
    if not 0 <= theta <= np.pi:
        raise ValueError(f"theta must be in [0, pi], got {theta}")
    if not 0 <= phi < 2 * np.pi:
        raise ValueError(f"phi must be in [0, 2*pi), got {phi}")
    return Ket(np.array([np.cos(theta / 2), np.sin(theta / 2) * np.exp(1j * phi)]))


def thermal_state(system: SpinSystem) -> DensityMatrix:
    """Exact high-temperature thermal state: tensor product of E/2 + delta_i Iz.

    For equal small polarisations this reduces to the familiar first-order
    form (identity plus delta * sum Iz) but the product form is exact and
    stays positive for any delta in (0, 1].
    """
    rho = np.eye(1, dtype=COMPLEX)
    for delta in system.polarisation:
        rho = np.kron(rho, E2 / 2 + delta * IZ)
    return DensityMatrix(rho)


def partial_trace(matrix: np.ndarray, keep: list[int], n: int) -> np.ndarray:
    """Trace out all spins except ``keep`` (order preserved, spin 0 = MSB)."""
    keep = list(keep)
    tensor = matrix.reshape([2] * (2 * n))
    drop = [i for i in range(n) if i not in keep]
    for count, spin in enumerate(sorted(drop)):
        axis = spin - count  # axes shift left after each trace
        ndim_half = tensor.ndim // 2
        tensor = np.trace(tensor, axis1=axis, axis2=axis + ndim_half)
    d = 2 ** len(keep)
    return tensor.reshape(d, d)
