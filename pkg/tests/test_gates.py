"""Standard gate matrices, embeddings, and universality smoke checks."""

import numpy as np
import pytest

from spinforge.gates import (
    CNOT,
    CT,
    CZ,
    GATES,
    SWAP,
    T,
    T_NMR,
    TOFFOLI,
    GateSpec,
    embed,
    network_propagator,
    rotation,
    rz,
    standard_gate,
)
from spinforge.linalg import basis_ket, global_phase_between
from spinforge.composite import propagator_fidelity

from conftest import random_unitary


class TestMatrices:
    def test_hadamard_on_zero_gives_plus(self):
        out = GATES["H"] @ basis_ket(0, 1)
        assert np.allclose(out, np.array([1, 1]) / np.sqrt(2))

    def test_cnot_matrix(self):
        expected = np.array(
            [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex
        )
        assert np.array_equal(standard_gate(GateSpec("CNOT", (0, 1)), 2), expected)

    def test_t_nmr_is_t_up_to_global_phase(self):
        ok, gamma = global_phase_between(T, T_NMR)
        assert ok and gamma == pytest.approx(-np.pi / 8)

    def test_unknown_gate(self):
        with pytest.raises(ValueError, match="unknown gate"):
            standard_gate(GateSpec("FROB", (0,)), 1)

    def test_bad_targets(self):
        with pytest.raises(ValueError):
            standard_gate(GateSpec("CNOT", (0, 3)), 2)
        with pytest.raises(ValueError):
            GateSpec("CNOT", (1, 1))


class TestEmbed:
    def test_single_qubit_embedding(self):
        x = GATES["X"]
        full = embed(x, (1,), 3)
        assert np.allclose(full, np.kron(np.kron(np.eye(2), x), np.eye(2)))

    def test_reversed_cnot(self):
        # control on spin 1, target on spin 0
        u = embed(CNOT, (1, 0), 2)
        amp = u @ basis_ket(0b01, 2)
        assert np.argmax(np.abs(amp)) == 0b11

    def test_embedding_unitary(self, rng):
        u = random_unitary(rng, 4)
        full = embed(u, (2, 0), 3)
        assert np.allclose(full @ full.conj().T, np.eye(8), atol=1e-12)


class TestCompositions:
    def test_swap_from_three_cnots(self):
        net = [GateSpec("CNOT", (0, 1)), GateSpec("CNOT", (1, 0)), GateSpec("CNOT", (0, 1))]
        assert np.allclose(network_propagator(net, 2), SWAP)

    def test_toffoli_from_cnot_and_singles(self):
        # standard T / T_dag decomposition; exact matrix equality
        a, b, c = 0, 1, 2
        net = [
            GateSpec("H", (c,)),
            GateSpec("CNOT", (b, c)),
            GateSpec("T_dag", (c,)),
            GateSpec("CNOT", (a, c)),
            GateSpec("T", (c,)),
            GateSpec("CNOT", (b, c)),
            GateSpec("T_dag", (c,)),
            GateSpec("CNOT", (a, c)),
            GateSpec("T", (b,)),
            GateSpec("T", (c,)),
            GateSpec("H", (c,)),
            GateSpec("CNOT", (a, b)),
            GateSpec("T", (a,)),
            GateSpec("T_dag", (b,)),
            GateSpec("CNOT", (a, b)),
        ]
        assert np.max(np.abs(network_propagator(net, 3) - TOFFOLI)) < 1e-12

    def test_h_t_words_approximate_random_unitary(self, rng):
        # universality smoke test: short <H, T> words already land close to a
        # generic single-qubit target (up to global phase)
        target = random_unitary(rng, 2)
        h, t = GATES["H"], GATES["T"]
        words = {0: [np.eye(2, dtype=complex)]}
        best = 0.0
        current = [np.eye(2, dtype=complex)]
        for _ in range(6):  # blocks of T^k H
            nxt = []
            for u in current:
                for k in range(8):
                    w = np.linalg.matrix_power(t, k) @ u
                    nxt.append(h @ w)
            current = nxt
            best = max(best, max(propagator_fidelity(target, u) for u in current))
            if best > 0.98:
                break
        assert best > 0.98


class TestRotations:
    def test_180x_is_minus_i_sigma_x(self):
        u = rotation(np.pi, 0.0)
        assert np.allclose(u, -1j * GATES["X"], atol=1e-12)

    def test_90y_is_pseudo_hadamard(self):
        assert np.allclose(rotation(np.pi / 2, np.pi / 2), GATES["h"], atol=1e-12)

    def test_rz_diag(self):
        assert np.allclose(rz(np.pi / 2), np.diag([np.exp(-1j * np.pi / 4), np.exp(1j * np.pi / 4)]))
