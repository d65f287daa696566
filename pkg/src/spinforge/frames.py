"""Abstract reference frames: deferred per-spin z rotations.

Rotating a spin's reference frame instead of the spin is free and perfect, so
z rotations are bookkeeping events.  Deferring a z rotation of ``chi`` past a
later pulse on the same spin shifts that pulse's phase by ``-chi``:

    P(theta, phi) Rz(chi)  =  Rz(chi) P(theta, phi - chi)

The tracker accumulates deferred angles per spin; pulses emitted afterwards
ask :meth:`pulse_phase` for their corrected phase, and the pending rotations
can finally be re-emitted (or cancel, as in Hadamard pairs).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .gates import rz
from .linalg import COMPLEX, single_spin_op

TWO_PI = 2 * np.pi


@dataclass
class FrameTracker:
    """Accumulated z-phase per spin plus the sequence time origin."""

    n: int
    accumulated: dict[int, float] = field(default_factory=dict)
    time_origin: float = 0.0

    def phase(self, spin: int) -> float:
        return self.accumulated.get(spin, 0.0) % TWO_PI

    def absorb(self, spin: int, angle: float) -> None:
        """Defer a z rotation by ``angle`` on ``spin`` into the frame."""
        if not 0 <= spin < self.n:
            raise ValueError(f"spin {spin} outside register of size {self.n}")
        self.accumulated[spin] = (self.accumulated.get(spin, 0.0) + angle) % TWO_PI

    def advance_time(self, dt: float) -> None:
        self.time_origin += dt

    def pulse_phase(self, spin: int, nominal_phase: float) -> float:
        """Phase a pulse must be played at, given the pending frame rotations."""
        return (nominal_phase - self.phase(spin)) % TWO_PI

    def emit(self) -> list[tuple[int, float]]:
        """Drain pending rotations as (spin, angle) pairs, then reset."""
        out = [(s, a % TWO_PI) for s, a in sorted(self.accumulated.items()) if a % TWO_PI != 0.0]
        self.accumulated.clear()
        return out

    def propagator(self) -> np.ndarray:
        """Unitary of all pending z rotations (without draining them)."""
        u = np.eye(2**self.n, dtype=COMPLEX)
        for spin, angle in sorted(self.accumulated.items()):
            u = single_spin_op(rz(angle % TWO_PI), spin, self.n) @ u
        return u
