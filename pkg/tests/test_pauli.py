"""Product-operator expansion and reassembly."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spinforge.pauli import (
    ProductOperatorExpansion,
    basis_label,
    coherence_order_matrix,
    operator_from_label,
    parse_label,
    pauli_assemble,
    pauli_expand,
)

from conftest import random_hermitian


class TestLabels:
    def test_roundtrip(self):
        for axes in (("z", ""), ("", "z"), ("z", "z"), ("x", "y"), ("", "")):
            label = basis_label(axes)
            assert parse_label(label, 2) == axes

    def test_two_spin_names(self):
        assert basis_label(("z", "")) == "Iz"
        assert basis_label(("", "z")) == "Sz"
        assert basis_label(("z", "z")) == "IzSz"
        assert basis_label(("", "")) == "E/2"

    def test_bad_labels(self):
        with pytest.raises(ValueError):
            parse_label("Qz", 2)
        with pytest.raises(ValueError):
            parse_label("Iz Sz", 2)
        with pytest.raises(ValueError):
            parse_label("Tz", 2)  # spin 2 does not exist


class TestExpand:
    def test_ground_state_two_spins(self):
        rho = np.zeros((4, 4), dtype=complex)
        rho[0, 0] = 1.0
        exp = pauli_expand(rho)
        assert exp.terms == pytest.approx(
            {"E/2": 0.5, "Iz": 0.5, "Sz": 0.5, "IzSz": 0.5}
        )

    def test_ground_state_single_spin(self):
        exp = pauli_expand(np.diag([1.0, 0.0]).astype(complex))
        assert exp.terms == pytest.approx({"E/2": 1.0, "Iz": 1.0})

    def test_zero_matrix_empty(self):
        assert len(pauli_expand(np.zeros((4, 4), dtype=complex))) == 0

    def test_rejects_non_hermitian(self):
        m = np.array([[0, 1], [0, 0]], dtype=complex)
        with pytest.raises(ValueError, match="Hermitian"):
            pauli_expand(m)

    def test_normalisation_of_pair_label(self):
        # coefficient of "IzSz" multiplies the operator 2IzSz
        op = operator_from_label("IzSz", 2)
        assert np.allclose(op, np.diag([0.5, -0.5, -0.5, 0.5]))

    @given(st.integers(0, 2**30), st.integers(1, 4))
    @settings(max_examples=30, deadline=None)
    def test_roundtrip_random_hermitian(self, seed, n):
        m = random_hermitian(np.random.default_rng(seed), 2**n)
        exp = pauli_expand(m)
        assert all(isinstance(v, float) for v in exp.terms.values())
        back = pauli_assemble(exp)
        assert np.max(np.abs(back - m)) < 1e-12


class TestCoherenceOrder:
    def test_two_spin_orders(self):
        order = coherence_order_matrix(2)
        assert order[0, 3] == 2  # |00><11| is double quantum
        assert order[1, 2] == 0  # |01><10| is zero quantum
        assert order[0, 1] == 1
        assert np.all(np.diag(order) == 0)
        assert np.all(order == -order.T)
