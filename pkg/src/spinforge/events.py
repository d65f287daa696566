"""Pulse-program events and their ideal (unitary + crush) simulation.

An event list is the common currency between gate synthesis, state
preparation sequences and the CLI runner.  Events are written in time order;
propagators therefore compose with the *last* event leftmost.

Angles are radians here; the JSON wire format (schema ``spinforge/1``) uses
degrees, matching the CLI convention.

Pulses are ideal instantaneous rotations.  A nonzero ``duration`` is carried
for relaxation bookkeeping (see ``channels.segmented_relaxation_run``) but
adds no free evolution of its own.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .gates import rotation, rz
from .linalg import COMPLEX, dagger, single_spin_op
from .pauli import coherence_order_matrix
from .dynamics import free_hamiltonian, propagator
from .system import SpinSystem

TWO_PI = 2 * np.pi


@dataclass(frozen=True)
class Pulse:
    """Hard RF pulse: flip angle ``theta`` about the in-plane axis at ``phase``.

    Applied simultaneously to every spin in ``spins`` (e.g. a nonselective
    45 degree pulse on both spins of a pair).
    """

    spins: tuple[int, ...]
    theta: float
    phase: float = 0.0
    duration: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "spins", tuple(sorted(int(s) for s in self.spins)))
        if self.theta < 0:
            raise ValueError("pulse flip angle must be nonnegative")
        if self.duration < 0:
            raise ValueError("pulse duration must be nonnegative")
        object.__setattr__(self, "phase", float(self.phase) % TWO_PI)


@dataclass(frozen=True)
class Delay:
    t: float

    def __post_init__(self):
        if self.t < 0:
            raise ValueError("delay must be nonnegative")


@dataclass(frozen=True)
class FrameZ:
    """Instantaneous z rotation by ``angle`` on one spin (frame bookkeeping)."""

    spin: int
    angle: float


@dataclass(frozen=True)
class GlobalPhase:
    """Multiply the propagator by exp(i * angle)."""

    angle: float


@dataclass(frozen=True)
class Crush:
    """Gradient crush: remove coherences (see channels.crush_gradient).

    ``area`` is the signed gradient area in arbitrary units; the analytic
    model ignores its magnitude but the sign matters for gradient-echo
    hazards, which program validation guards against.
    """

    preserve_zero_quantum: bool = False
    area: float = 1.0


@dataclass(frozen=True)
class Measure:
    """Marks the acquisition point for the CLI runner."""


Event = Pulse | Delay | FrameZ | GlobalPhase | Crush | Measure

UNITARY_EVENTS = (Pulse, Delay, FrameZ, GlobalPhase)


def pulse_unitary(pulse: Pulse, n: int) -> np.ndarray:
    u = np.eye(2**n, dtype=COMPLEX)
    block = rotation(pulse.theta, pulse.phase)
    for s in pulse.spins:
        u = single_spin_op(block, s, n) @ u
    return u


def crush_matrix_mask(n: int, preserve_zero_quantum: bool) -> np.ndarray:
    """Boolean mask of density-matrix elements surviving a crush gradient."""
    order = coherence_order_matrix(n)
    if preserve_zero_quantum:
        return order == 0
    return np.eye(2**n, dtype=bool)


def apply_crush_matrix(mat: np.ndarray, preserve_zero_quantum: bool) -> np.ndarray:
    n = int(round(np.log2(mat.shape[0])))
    return np.where(crush_matrix_mask(n, preserve_zero_quantum), mat, 0.0)


def _resolve_offsets(system: SpinSystem, frame):
    if frame == "resonant":
        return system.shift_hz
    if frame == "lab":
        return (0.0,) * system.n
    return tuple(frame)


def propagator_of(events, system: SpinSystem, frame="resonant") -> np.ndarray:
    """Total unitary of a crush-free event list (time order, last leftmost)."""
    n = system.n
    h_free = free_hamiltonian(system, _resolve_offsets(system, frame))
    u = np.eye(2**n, dtype=COMPLEX)
    for k, ev in enumerate(events):
        if isinstance(ev, Pulse):
            _check_spins(ev.spins, n, k)
            u = pulse_unitary(ev, n) @ u
        elif isinstance(ev, Delay):
            u = propagator(h_free, ev.t) @ u
        elif isinstance(ev, FrameZ):
            _check_spins((ev.spin,), n, k)
            u = single_spin_op(rz(ev.angle), ev.spin, n) @ u
        elif isinstance(ev, GlobalPhase):
            u = np.exp(1j * ev.angle) * u
        else:
            raise ValueError(f"event {k}: {type(ev).__name__} has no unitary propagator")
    return u


def apply_events(mat: np.ndarray, events, system: SpinSystem, frame="resonant") -> np.ndarray:
    """Apply an event list to a (deviation or density) matrix.

    All events here are linear maps, so this works equally on proper density
    matrices and on traceless deviation matrices in relative units.
    Relaxation is not applied; see ``channels.segmented_relaxation_run``.
    """
    n = system.n
    h_free = free_hamiltonian(system, _resolve_offsets(system, frame))
    out = np.array(mat, dtype=COMPLEX)
    for k, ev in enumerate(events):
        if isinstance(ev, Crush):
            out = apply_crush_matrix(out, ev.preserve_zero_quantum)
        elif isinstance(ev, Measure):
            continue
        else:
            u = propagator_of([ev], system, frame)
            out = u @ out @ dagger(u)
    return out


def total_duration(events) -> float:
    t = 0.0
    for ev in events:
        if isinstance(ev, Delay):
            t += ev.t
        elif isinstance(ev, Pulse):
            t += ev.duration
    return t


def _check_spins(spins, n, event_index):
    for s in spins:
        if not 0 <= s < n:
            raise ProgramValidationError(
                f"event {event_index}: spin {s} outside register of size {n}"
            )


class ProgramValidationError(ValueError):
    """A pulse program referenced missing spins or carried invalid fields."""


class ProgramParseError(ValueError):
    """A pulse-program JSON document could not be interpreted."""


SCHEMA = "spinforge/1"


@dataclass(frozen=True)
class PulseProgram:
    """A parsed pulse program: events plus frame/guard options.

    ``frame`` selects the rotating frames for delays: "resonant" (each spin
    in its own frame; only couplings evolve) or "lab" (full Zeeman
    evolution).  Gradient-echo hazards: by default all crush events must
    share one sign of gradient area, otherwise validation fails unless
    ``allow_gradient_echo`` is set.
    """

    events: tuple[Event, ...]
    frame: str = "resonant"
    allow_gradient_echo: bool = False
    expect: dict | None = None

    def __post_init__(self):
        object.__setattr__(self, "events", tuple(self.events))
        if self.frame not in ("resonant", "lab"):
            raise ProgramValidationError(f"unknown frame {self.frame!r}")

    def validate(self, system: SpinSystem) -> None:
        n = system.n
        crush_signs = set()
        for k, ev in enumerate(self.events):
            if isinstance(ev, Pulse):
                _check_spins(ev.spins, n, k)
                if not ev.spins:
                    raise ProgramValidationError(f"event {k}: pulse with empty spin set")
            elif isinstance(ev, FrameZ):
                _check_spins((ev.spin,), n, k)
            elif isinstance(ev, Crush):
                if ev.area != 0.0:
                    crush_signs.add(ev.area > 0)
        if len(crush_signs) > 1 and not self.allow_gradient_echo:
            raise ProgramValidationError(
                "crush gradients with opposite signed areas can refocus as a "
                "gradient echo; set allow_gradient_echo to accept this program"
            )


def event_to_json(ev: Event) -> dict:
    if isinstance(ev, Pulse):
        return {
            "type": "pulse",
            "spins": list(ev.spins),
            "theta_deg": float(np.degrees(ev.theta)),
            "phase_deg": float(np.degrees(ev.phase)),
            "duration_s": ev.duration,
        }
    if isinstance(ev, Delay):
        return {"type": "delay", "t_s": ev.t}
    if isinstance(ev, FrameZ):
        return {"type": "frame_z", "spin": ev.spin, "angle_deg": float(np.degrees(ev.angle))}
    if isinstance(ev, GlobalPhase):
        return {"type": "global_phase", "angle_deg": float(np.degrees(ev.angle))}
    if isinstance(ev, Crush):
        return {
            "type": "crush",
            "preserve_zero_quantum": ev.preserve_zero_quantum,
            "area": ev.area,
        }
    if isinstance(ev, Measure):
        return {"type": "measure"}
    raise TypeError(f"unknown event {ev!r}")


def event_from_json(doc: dict, index: int) -> Event:
    try:
        kind = doc["type"]
        if kind == "pulse":
            return Pulse(
                spins=tuple(doc["spins"]),
                theta=np.radians(doc["theta_deg"]),
                phase=np.radians(doc.get("phase_deg", 0.0)),
                duration=doc.get("duration_s", 0.0),
            )
        if kind == "delay":
            return Delay(t=doc["t_s"])
        if kind == "frame_z":
            return FrameZ(spin=doc["spin"], angle=np.radians(doc["angle_deg"]))
        if kind == "global_phase":
            return GlobalPhase(angle=np.radians(doc["angle_deg"]))
        if kind == "crush":
            return Crush(
                preserve_zero_quantum=doc.get("preserve_zero_quantum", False),
                area=doc.get("area", 1.0),
            )
        if kind == "measure":
            return Measure()
    except (KeyError, TypeError, ValueError) as exc:
        raise ProgramParseError(f"event {index}: {exc}") from exc
    raise ProgramParseError(f"event {index}: unknown event type {kind!r}")


def program_to_json_dict(program: PulseProgram) -> dict:
    doc = {
        "schema": SCHEMA,
        "frame": program.frame,
        "events": [event_to_json(ev) for ev in program.events],
    }
    if program.allow_gradient_echo:
        doc["allow_gradient_echo"] = True
    if program.expect is not None:
        doc["expect"] = program.expect
    return doc


def program_from_json_dict(doc: dict) -> PulseProgram:
    if doc.get("schema") != SCHEMA:
        raise ProgramParseError(
            f"unsupported schema {doc.get('schema')!r}; expected {SCHEMA!r}"
        )
    events = tuple(event_from_json(e, i) for i, e in enumerate(doc.get("events", [])))
    return PulseProgram(
        events=events,
        frame=doc.get("frame", "resonant"),
        allow_gradient_echo=bool(doc.get("allow_gradient_echo", False)),
        expect=doc.get("expect"),
    )


def loads_program(text: str) -> PulseProgram:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProgramParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    return program_from_json_dict(doc)


def dumps_program(program: PulseProgram) -> str:
    return json.dumps(program_to_json_dict(program), indent=2, sort_keys=True)
