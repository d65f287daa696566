"""spinforge: a desk-scale simulator of liquid-state NMR quantum computing.

Density-matrix spin dynamics for weakly coupled spin-1/2 systems, NMR-native
gate synthesis, robust pulse design (composite pulses and gradient-ascent
optimal control), pseudo-pure state preparation, decoherence channels,
spectrum readout and tomography, and end-to-end quantum algorithm runs.

Conventions used throughout:
  - spin 0 is the most significant bit of every basis index;
  - shifts/couplings in Hz, Hamiltonians in rad/s, durations in seconds;
  - angles in radians at the API (degrees at the CLI and in program JSON);
  - propagators compose with the last event leftmost.
"""

from .system import SpinSystem, two_spin
from .states import (
    DensityMatrix,
    DeviationDensityMatrix,
    Ket,
    bloch,
    density_from_ket,
    ket_from_angles,
    mix,
    purity,
    thermal_state,
)
from .pauli import ProductOperatorExpansion, pauli_assemble, pauli_expand
from .dynamics import evolve, free_hamiltonian, propagator, resonant_frame_hamiltonian
from .gates import GateSpec, standard_gate
from .linalg import global_phase_between

__all__ = [
    "SpinSystem",
    "two_spin",
    "Ket",
    "DensityMatrix",
    "DeviationDensityMatrix",
    "ProductOperatorExpansion",
    "density_from_ket",
    "mix",
    "purity",
    "bloch",
    "ket_from_angles",
    "thermal_state",
    "pauli_expand",
    "pauli_assemble",
    "free_hamiltonian",
    "resonant_frame_hamiltonian",
    "propagator",
    "evolve",
    "GateSpec",
    "standard_gate",
    "global_phase_between",
]

__version__ = "0.1.0"
