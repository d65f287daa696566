"""Product-operator algebra over tensor products of {E/2, Ix, Iy, Iz}.

Basis convention (Sorensen normalisation): the operator for an active-spin
subset S of size q is ``2**(q-1)`` times the tensor product of sigma/2 on the
active spins and the 2x2 identity elsewhere; the q = 0 element is the full
identity divided by 2.  All basis elements then satisfy
``tr(B_i B_j) = 2**(n-2) * delta_ij`` so expansion coefficients are plain
scaled traces.

Labels name the active spins and axes, e.g. ``"Iz"``, ``"IzSz"``, ``"IxSyTz"``;
the identity element is labelled ``"E/2"``.  Spin letters run I, S, T, U, V,
W, Y in register order (spin 0 first), matching two-spin NMR usage.  The
``2**(q-1)`` prefix is part of the basis definition and not written in the
label, so the coefficient of ``"IzSz"`` multiplies the operator 2IzSz.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

import numpy as np

from .linalg import COMPLEX, E2, IX, IY, IZ, is_hermitian, kron_all

SPIN_LETTERS = "ISTUVWY"
AXIS_OPS = {"x": IX, "y": IY, "z": IZ}
IDENTITY_LABEL = "E/2"


def spin_letter(i: int) -> str:
    if i < len(SPIN_LETTERS):
        return SPIN_LETTERS[i]
    return f"Q{i}"


def basis_label(axes: tuple[str, ...]) -> str:
    """Label for a per-spin axis tuple ('' marks an inactive spin)."""
    parts = [spin_letter(i) + ax for i, ax in enumerate(axes) if ax]
    return "".join(parts) if parts else IDENTITY_LABEL


def basis_operator(axes: tuple[str, ...]) -> np.ndarray:
    """Matrix of the product-operator basis element for an axis tuple."""
    n = len(axes)
    active = sum(1 for ax in axes if ax)
    factors = [AXIS_OPS[ax] if ax else E2 for ax in axes]
    mat = kron_all(factors) if n > 0 else np.eye(1, dtype=COMPLEX)
    if active == 0:
        return mat / 2
    return (2 ** (active - 1)) * mat


def iter_axis_tuples(n: int):
    yield from product(("", "x", "y", "z"), repeat=n)


def parse_label(label: str, n: int) -> tuple[str, ...]:
    """Inverse of :func:`basis_label`; raises on malformed labels."""
    if label == IDENTITY_LABEL:
        return ("",) * n
    axes = [""] * n
    i = 0
    while i < len(label):
        letter = label[i]
        if letter == "Q":
            j = i + 1
            while j < len(label) and label[j].isdigit():
                j += 1
            spin = int(label[i + 1 : j])
            i = j
        else:
            try:
                spin = SPIN_LETTERS.index(letter)
            except ValueError as exc:
                raise ValueError(f"unknown spin letter {letter!r} in {label!r}") from exc
            i += 1
        if i >= len(label) or label[i] not in "xyz":
            raise ValueError(f"missing axis after spin letter in {label!r}")
        if spin >= n:
            raise ValueError(f"label {label!r} refers to spin {spin} but n={n}")
        if axes[spin]:
            raise ValueError(f"label {label!r} repeats spin {spin}")
        axes[spin] = label[i]
        i += 1
    return tuple(axes)


@dataclass(frozen=True)
class ProductOperatorExpansion:
    """Real coefficients of a Hermitian matrix over the product-operator basis."""

    n: int
    terms: dict[str, float] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "terms", dict(self.terms))

    def coefficient(self, label: str) -> float:
        return self.terms.get(label, 0.0)

    def drop_identity(self) -> "ProductOperatorExpansion":
        terms = {k: v for k, v in self.terms.items() if k != IDENTITY_LABEL}
        return ProductOperatorExpansion(self.n, terms)

    def scaled(self, factor: float) -> "ProductOperatorExpansion":
        return ProductOperatorExpansion(self.n, {k: v * factor for k, v in self.terms.items()})

    def __len__(self) -> int:
        return len(self.terms)


def pauli_expand(matrix: np.ndarray, zero_tol: float = 1e-14) -> ProductOperatorExpansion:
    """Expand a Hermitian matrix in the product-operator basis.

    Coefficients below ``zero_tol`` in magnitude are dropped, so the zero
    matrix expands to an empty term map.  Raises on non-Hermitian input.
    """
    dim = matrix.shape[0]
    n = int(round(np.log2(dim)))
    if 2**n != dim or matrix.shape != (dim, dim):
        raise ValueError(f"matrix shape {matrix.shape} is not 2^n x 2^n")
    if not is_hermitian(matrix, atol=1e-10):
        raise ValueError("pauli_expand requires a Hermitian matrix")
    norm = 2.0 ** (n - 2)
    terms: dict[str, float] = {}
    for axes in iter_axis_tuples(n):
        op = basis_operator(axes)
        c = float(np.real(np.trace(op @ matrix))) / norm
        if abs(c) > zero_tol:
            terms[basis_label(axes)] = c
    return ProductOperatorExpansion(n, terms)


def pauli_assemble(expansion: ProductOperatorExpansion) -> np.ndarray:
    """Rebuild the matrix from an expansion (inverse of :func:`pauli_expand`)."""
    n = expansion.n
    out = np.zeros((2**n, 2**n), dtype=COMPLEX)
    for label, coeff in expansion.terms.items():
        out += coeff * basis_operator(parse_label(label, n))
    return out


def operator_from_label(label: str, n: int) -> np.ndarray:
    """Matrix for a single product-operator label on an n-spin register."""
    return basis_operator(parse_label(label, n))


def coherence_order_matrix(n: int) -> np.ndarray:
    """order[a, b] = total Iz eigenvalue difference between bra and ket.

    Computed as popcount(b) - popcount(a): flipping one spin from |0> to |1>
    lowers total Iz by one, so single-quantum coherences carry order +-1.
    """
    pops = np.array([bin(k).count("1") for k in range(2**n)])
    return pops[None, :] - pops[:, None]
