"""Static description of a weakly coupled spin-1/2 molecule.

Units follow NMR practice: chemical shifts and J couplings in Hz,
relaxation times in seconds, polarisations dimensionless.  Hamiltonians
built from a system are in rad/s (see :mod:`spinforge.dynamics`).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class SpinSystem:
    """An n-spin-1/2 molecule: species labels, shifts, couplings, relaxation.

    Spin 0 is the most significant bit of every basis index.  The coupling
    matrix is symmetric with zero diagonal, in Hz.  ``t1 >= t2 > 0`` per spin
    and polarisations lie in (0, 1].

    Args:
        species: nucleus label per spin (equal labels = homonuclear pair).
        shift_hz: chemical shift per spin, Hz.
        j_hz: symmetric coupling matrix, Hz.
        polarisation: thermal polarisation delta per spin.
        t1_s / t2_s: longitudinal / transverse relaxation times, seconds.
        labels: optional display names; default "s0", "s1", ...
    """

    species: tuple[str, ...]
    shift_hz: tuple[float, ...]
    j_hz: np.ndarray
    polarisation: tuple[float, ...]
    t1_s: tuple[float, ...]
    t2_s: tuple[float, ...]
    labels: tuple[str, ...] = field(default=())

    def __post_init__(self):
        n = len(self.species)
        object.__setattr__(self, "species", tuple(self.species))
        object.__setattr__(self, "shift_hz", tuple(float(x) for x in self.shift_hz))
        object.__setattr__(self, "polarisation", tuple(float(x) for x in self.polarisation))
        object.__setattr__(self, "t1_s", tuple(float(x) for x in self.t1_s))
        object.__setattr__(self, "t2_s", tuple(float(x) for x in self.t2_s))
        j = np.array(self.j_hz, dtype=float)
        j.flags.writeable = False
        object.__setattr__(self, "j_hz", j)
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"s{i}" for i in range(n)))
        else:
            object.__setattr__(self, "labels", tuple(self.labels))
        for name in ("shift_hz", "polarisation", "t1_s", "t2_s", "labels"):
            if len(getattr(self, name)) != n:
                raise ValueError(f"{name} must have one entry per spin ({n})")
        if j.shape != (n, n):
            raise ValueError(f"j_hz must be {n}x{n}")
        if np.max(np.abs(j - j.T), initial=0.0) > 0:
            raise ValueError("j_hz must be symmetric")
        if np.max(np.abs(np.diag(j)), initial=0.0) > 0:
            raise ValueError("j_hz must have zero diagonal")
        for i, (t1, t2) in enumerate(zip(self.t1_s, self.t2_s)):
            if not (t1 >= t2 > 0):
                raise ValueError(f"spin {i}: need t1 >= t2 > 0, got t1={t1}, t2={t2}")
        for i, d in enumerate(self.polarisation):
            if not (0 < d <= 1):
                raise ValueError(f"spin {i}: polarisation must be in (0, 1], got {d}")

    @property
    def n(self) -> int:
        return len(self.species)

    @property
    def dim(self) -> int:
        return 2**self.n

    def is_homonuclear(self) -> bool:
        return len(set(self.species)) == 1

    def coupled(self, i: int, j: int) -> bool:
        return abs(float(self.j_hz[i, j])) > 0.0

    # -- JSON round trip ---------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "spins": [
                {
                    "label": self.labels[i],
                    "species": self.species[i],
                    "shift_hz": self.shift_hz[i],
                    "polarisation": self.polarisation[i],
                    "t1_s": self.t1_s[i],
                    "t2_s": self.t2_s[i],
                }
                for i in range(self.n)
            ],
            "j_hz": [[float(x) for x in row] for row in self.j_hz],
        }

    @classmethod
    def from_json_dict(cls, doc: dict) -> "SpinSystem":
        spins = doc["spins"]
        return cls(
            species=tuple(s["species"] for s in spins),
            shift_hz=tuple(s["shift_hz"] for s in spins),
            j_hz=np.array(doc["j_hz"], dtype=float),
            polarisation=tuple(s["polarisation"] for s in spins),
            t1_s=tuple(s["t1_s"] for s in spins),
            t2_s=tuple(s["t2_s"] for s in spins),
            labels=tuple(s.get("label", f"s{i}") for i, s in enumerate(spins)),
        )

    def dumps(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True)

    @classmethod
    def loads(cls, text: str) -> "SpinSystem":
        return cls.from_json_dict(json.loads(text))


def two_spin(
    j: float = 10.0,
    shifts: tuple[float, float] = (0.0, 0.0),
    species: tuple[str, str] = ("1H", "1H"),
    polarisation: tuple[float, float] = (1e-5, 1e-5),
    t1: float = 10.0,
    t2: float = 1.0,
) -> SpinSystem:
    """Convenience two-spin system used throughout tests and examples."""
    return SpinSystem(
        species=species,
        shift_hz=shifts,
        j_hz=np.array([[0.0, j], [j, 0.0]]),
        polarisation=polarisation,
        t1_s=(t1, t1),
        t2_s=(t2, t2),
    )
