"""Standard quantum logic gates and their embedding into an n-spin register.

Gate matrices come in two flavours where it matters: the textbook form (T,
controlled-T) placing the energy zero at the ground state, and the NMR form
(T_nmr) placing it between the two levels, which differs by a global phase
e^{-i pi/8}.  For controlled gates that phase placement is *not* global, so
only the textbook controlled-T is provided as `CT`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .linalg import COMPLEX, bits_of, index_of

SQRT2 = np.sqrt(2.0)

X = np.array([[0, 1], [1, 0]], dtype=COMPLEX)
Y = np.array([[0, -1j], [1j, 0]], dtype=COMPLEX)
Z = np.array([[1, 0], [0, -1]], dtype=COMPLEX)
H = np.array([[1, 1], [1, -1]], dtype=COMPLEX) / SQRT2
# Pseudo-Hadamard: a bare 90 degree y rotation (and its inverse).
PSEUDO_H = np.array([[1, -1], [1, 1]], dtype=COMPLEX) / SQRT2
PSEUDO_H_INV = np.array([[1, 1], [-1, 1]], dtype=COMPLEX) / SQRT2
T = np.diag([1, np.exp(1j * np.pi / 4)]).astype(COMPLEX)
T_NMR = np.diag([np.exp(-1j * np.pi / 8), np.exp(1j * np.pi / 8)]).astype(COMPLEX)

CNOT = np.array(
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=COMPLEX
)
CZ = np.diag([1, 1, 1, -1]).astype(COMPLEX)
SWAP = np.array(
    [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=COMPLEX
)
CT = np.diag([1, 1, 1, np.exp(1j * np.pi / 4)]).astype(COMPLEX)
TOFFOLI = np.eye(8, dtype=COMPLEX)
TOFFOLI[6:, 6:] = X

GATES: dict[str, np.ndarray] = {
    "I": np.eye(2, dtype=COMPLEX),
    "X": X,
    "Y": Y,
    "Z": Z,
    "H": H,
    "h": PSEUDO_H,
    "h_inv": PSEUDO_H_INV,
    "T": T,
    "T_nmr": T_NMR,
    "S": np.diag([1, 1j]).astype(COMPLEX),
    "T_dag": T.conj().T,
    "CNOT": CNOT,
    "CZ": CZ,
    "SWAP": SWAP,
    "CT": CT,
    "TOFFOLI": TOFFOLI,
}


def rotation(theta: float, phi: float = 0.0, psi: float = np.pi / 2) -> np.ndarray:
    """Single-qubit rotation exp[-i theta (Ix sin(psi)cos(phi) + Iy sin(psi)sin(phi) + Iz cos(psi))]."""
    nx = np.sin(psi) * np.cos(phi)
    ny = np.sin(psi) * np.sin(phi)
    nz = np.cos(psi)
    gen = (nx * X + ny * Y + nz * Z) / 2
    c = np.cos(theta / 2)
    s = np.sin(theta / 2)
    return c * np.eye(2, dtype=COMPLEX) - 2j * s * gen


def rz(angle: float) -> np.ndarray:
    """exp(-i angle Iz) = diag(e^{-i angle/2}, e^{+i angle/2})."""
    return np.diag([np.exp(-0.5j * angle), np.exp(0.5j * angle)]).astype(COMPLEX)


@dataclass(frozen=True)
class GateSpec:
    """A named gate applied to specific spins of the register.

    ``targets`` lists the spins the gate acts on, in gate-qubit order (for
    CNOT the first target is the control).  ``control_state`` selects the
    controlling basis value for transition-selective variants.
    """

    name: str
    targets: tuple[int, ...]
    control_state: int = 1

    def __post_init__(self):
        object.__setattr__(self, "targets", tuple(int(t) for t in self.targets))
        if len(set(self.targets)) != len(self.targets):
            raise ValueError(f"gate targets must be distinct, got {self.targets}")


def embed(u: np.ndarray, targets: tuple[int, ...], n: int) -> np.ndarray:
    """Embed a k-qubit unitary on the given target spins, identity elsewhere.

    Gate qubit q corresponds to targets[q]; spin 0 is the register MSB.
    """
    k = len(targets)
    if u.shape != (2**k, 2**k):
        raise ValueError(f"unitary shape {u.shape} does not match {k} targets")
    for t in targets:
        if not 0 <= t < n:
            raise ValueError(f"target {t} outside register of size {n}")
    if len(set(targets)) != k:
        raise ValueError("targets must be distinct")
    dim = 2**n
    rest = [i for i in range(n) if i not in targets]
    out = np.zeros((dim, dim), dtype=COMPLEX)
    for a in range(dim):
        abits = bits_of(a, n)
        ga = index_of([abits[t] for t in targets])
        for b in range(dim):
            bbits = bits_of(b, n)
            if any(abits[r] != bbits[r] for r in rest):
                continue
            gb = index_of([bbits[t] for t in targets])
            out[a, b] = u[ga, gb]
    return out


def standard_gate(spec: GateSpec, n: int) -> np.ndarray:
    """Matrix of a named gate embedded in an n-spin register."""
    try:
        u = GATES[spec.name]
    except KeyError as exc:
        raise ValueError(f"unknown gate {spec.name!r}") from exc
    return embed(u, spec.targets, n)


def network_propagator(gates: list[GateSpec], n: int) -> np.ndarray:
    """Total propagator of a gate list written in time order (first gate first)."""
    u = np.eye(2**n, dtype=COMPLEX)
    for g in gates:
        u = standard_gate(g, n) @ u
    return u
