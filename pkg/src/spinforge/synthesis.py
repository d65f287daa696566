"""NMR-native gate synthesis: coupling-evolution gates, pseudo-Hadamard
rewriting, transition-selective pulses, and Hadamard-matrix refocusing.

Everything emitted here is an event list in the shared pulse-program format
whose simulated propagator is checked (in tests) against the claimed gate.
Where a synthesized gate needs a pure z rotation it is emitted as a
``FrameZ`` event: frame rotations cost nothing and are exact.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .events import Delay, Event, FrameZ, GlobalPhase, Pulse, propagator_of, pulse_unitary
from .frames import FrameTracker
from .gates import CNOT, CZ, GateSpec, embed, rz, standard_gate
from .linalg import COMPLEX, single_spin_op
from .system import SpinSystem

TWO_PI = 2 * np.pi


class UncoupledSpinsError(ValueError):
    """Raised when a coupling gate is requested between uncoupled spins.

    Routing via SWAP chains is caller policy, so this module refuses rather
    than silently inserting a route.
    """


def _require_coupling(system: SpinSystem, i: int, j: int) -> float:
    if i == j:
        raise ValueError("need two distinct spins")
    jij = float(system.j_hz[i, j])
    if jij == 0.0:
        raise UncoupledSpinsError(
            f"spins {i} and {j} are not directly coupled; route via SWAPs first"
        )
    return jij


def cz_sequence(system: SpinSystem, i: int, j: int):
    """Controlled-Z between spins i and j from coupling evolution.

    Evolving the Ising coupling for 1/(2J) gives exp(-i (pi/2) 2IzSz); two
    -90 degree frame rotations and a global phase of -pi/4 complete the
    product-operator decomposition of controlled-Z.  Returns the event list
    and the claimed propagator (CZ embedded on the pair).

    Couplings of i or j to third spins are *not* refocused here; use
    :func:`refocus_schedule` to isolate the pair first.
    """
    jij = _require_coupling(system, i, j)
    events, _ = _controlled_phase_events(jij, i, j, np.pi)
    claimed = embed(CZ, (i, j), system.n)
    return events, claimed


def _controlled_phase_events(jij: float, i: int, j: int, theta: float):
    """Events implementing diag(1,1,1,e^{i theta}) on spins (i, j)."""
    theta = theta % TWO_PI
    if theta == 0.0:
        return [], 0.0
    a = theta / 2 - np.pi  # frame rotation on each spin
    beta = -a  # required 2IzSz coupling angle, in (0, pi]
    if jij > 0:
        t = beta / (np.pi * jij)
        beta_actual = beta
    else:
        t = (beta - TWO_PI) / (np.pi * jij)
        beta_actual = beta - TWO_PI
    phi00 = -beta_actual / 2 - a  # accumulated phase on |00>
    events: list[Event] = [
        Delay(t),
        FrameZ(i, a),
        FrameZ(j, a),
        GlobalPhase(-phi00),
    ]
    return events, t


def controlled_phase_sequence(system: SpinSystem, i: int, j: int, theta: float):
    """Controlled phase gate diag(1,1,1,e^{i theta}) between spins i and j.

    The global phase is tracked explicitly (a GlobalPhase event), so the
    simulated propagator equals the textbook controlled-phase matrix exactly;
    getting this wrong by applying the phase locally would produce an
    entirely different (and incorrect) gate.
    """
    jij = _require_coupling(system, i, j)
    events, _ = _controlled_phase_events(jij, i, j, theta)
    diag = np.diag([1, 1, 1, np.exp(1j * (theta % TWO_PI))]).astype(COMPLEX)
    claimed = embed(diag, (i, j), system.n)
    return events, claimed


def transition_selective_cnot(control: int, target: int, n: int, control_state: int = 1) -> np.ndarray:
    """Propagator of a transition-selective 180x pulse on one doublet line.

    Equals CNOT only up to a z rotation on the control spin: the 180 degree
    rotation contributes -i on the flipped block (spinor behaviour), and for
    a selective pulse that phase is local, not global.
    """
    if control == target:
        raise ValueError("control and target must differ")
    block = np.eye(4, dtype=COMPLEX)
    sel = slice(2, 4) if control_state == 1 else slice(0, 2)
    block[sel, sel] = np.array([[0, -1j], [-1j, 0]])
    return embed(block, (control, target), n)


def transition_selective_correction(control: int, n: int) -> np.ndarray:
    """Frame rotation making the transition-selective pulse a true CNOT.

    A -90 degree *frame* rotation on the control (equivalently the spin
    rotation exp(+i (pi/2) Iz)) repairs the local -i phase up to a global
    phase.
    """
    return single_spin_op(rz(-np.pi / 2), control, n)


RewriteItem = GateSpec | Pulse | FrameZ


def pseudo_hadamard_rewrite(network: list[GateSpec], n: int):
    """Replace Hadamard gates by pseudo-Hadamard pulses plus frame rotations.

    H = 90_{-y} followed by a 180_z rotation; the 180_z is absorbed into the
    spin's reference frame, shifting the phase of later pulses on that spin.
    Paired Hadamards cancel their frame rotations outright.  Gates other than
    H pass through unchanged, with any pending frame phase on their spins
    flushed as explicit FrameZ events first (z rotations do not generally
    commute through entangling gates).

    Returns the rewritten item list and the FrameTracker holding phases still
    pending at the end; re-emitting those reproduces the original propagator
    up to global phase.
    """
    tracker = FrameTracker(n)
    out: list[RewriteItem] = []
    for gate in network:
        if gate.name == "H":
            (q,) = gate.targets
            phase = tracker.pulse_phase(q, 3 * np.pi / 2)  # nominal 90 about -y
            out.append(Pulse(spins=(q,), theta=np.pi / 2, phase=phase))
            tracker.absorb(q, np.pi)
        else:
            for q in gate.targets:
                pending = tracker.phase(q)
                if pending != 0.0:
                    out.append(FrameZ(q, pending))
                    tracker.absorb(q, -pending)
            out.append(gate)
    return out, tracker


def rewrite_propagator(items: list[RewriteItem], n: int, tracker: FrameTracker | None = None) -> np.ndarray:
    """Propagator of a rewritten network, including pending frame rotations."""
    u = np.eye(2**n, dtype=COMPLEX)
    for item in items:
        if isinstance(item, GateSpec):
            u = standard_gate(item, n) @ u
        elif isinstance(item, Pulse):
            u = pulse_unitary(item, n) @ u
        elif isinstance(item, FrameZ):
            u = single_spin_op(rz(item.angle), item.spin, n) @ u
        else:
            raise TypeError(f"unexpected item {item!r}")
    if tracker is not None:
        u = tracker.propagator() @ u
    return u


# -- Hadamard-matrix refocusing ---------------------------------------------


@dataclass(frozen=True)
class EchoSchedule:
    """Per-spin +-1 sign rows over equal time slots of a refocusing sequence."""

    signs: np.ndarray  # shape (n_spins, n_slots), entries +-1
    keep: tuple[int, int] | None

    @property
    def n_spins(self) -> int:
        return self.signs.shape[0]

    @property
    def n_slots(self) -> int:
        return self.signs.shape[1]


def sylvester_hadamard(order: int) -> np.ndarray:
    if order < 1 or order & (order - 1):
        raise ValueError(f"Sylvester construction needs a power-of-two order, got {order}")
    h = np.array([[1]])
    while h.shape[0] < order:
        h = np.block([[h, h], [h, -h]])
    return h


def _next_pow2(k: int) -> int:
    m = 1
    while m < k:
        m *= 2
    return m


def refocus_schedule(n: int, keep: tuple[int, int] | None = None) -> EchoSchedule:
    """Echo schedule refocusing all shifts and couplings except an optional pair.

    Distinct non-constant rows of a Sylvester Hadamard matrix are assigned to
    the spins; orthogonality kills every coupling between spins on different
    rows and each non-constant row sums to zero, killing the Zeeman terms.
    Assigning one shared row to the kept pair retains exactly their mutual
    coupling for the full sequence duration.
    """
    if n < 2:
        raise ValueError("refocusing needs at least two spins")
    if keep is not None:
        i, j = keep
        if i == j or not (0 <= i < n and 0 <= j < n):
            raise ValueError(f"invalid kept pair {keep}")
        distinct_rows = n - 1
    else:
        distinct_rows = n
    order = _next_pow2(distinct_rows + 1)  # row 0 (all ones) is unusable
    h = sylvester_hadamard(order)
    signs = np.zeros((n, order), dtype=int)
    next_row = 1
    if keep is not None:
        i, j = keep
        signs[i] = signs[j] = h[next_row]
        next_row += 1
        for s in range(n):
            if s not in (i, j):
                signs[s] = h[next_row]
                next_row += 1
    else:
        for s in range(n):
            signs[s] = h[next_row]
            next_row += 1
    return EchoSchedule(signs=signs, keep=keep)


def schedule_events(schedule: EchoSchedule, total_time: float) -> list[Event]:
    """Realize an echo schedule as delays plus 180 degree pulses.

    Signs start at +1 for every spin; a 180x pulse is inserted wherever a
    spin's sign row changes between slots, and trailing pulses restore every
    sign to +1 so the net propagator is pure effective evolution (up to the
    global phase of the pulses).
    """
    n, m = schedule.signs.shape
    tau = total_time / m
    current = np.ones(n, dtype=int)
    events: list[Event] = []
    for k in range(m):
        flips = tuple(s for s in range(n) if current[s] != schedule.signs[s, k])
        if flips:
            events.append(Pulse(spins=flips, theta=np.pi, phase=0.0))
            current[list(flips)] *= -1
        events.append(Delay(tau))
    flips = tuple(s for s in range(n) if current[s] != 1)
    if flips:
        events.append(Pulse(spins=flips, theta=np.pi, phase=0.0))
    return events


def schedule_propagator(schedule: EchoSchedule, system: SpinSystem, total_time: float) -> np.ndarray:
    """Simulated propagator of the schedule under the full lab-frame Hamiltonian."""
    return propagator_of(schedule_events(schedule, total_time), system, frame="lab")
