"""Kets, density matrices, mixtures, Bloch coefficients, thermal states."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spinforge.linalg import basis_ket
from spinforge.pauli import operator_from_label
from spinforge.states import (
    DensityMatrix,
    Ket,
    bloch,
    density_from_ket,
    ket_from_angles,
    mix,
    purity,
    thermal_state,
)
from spinforge.system import two_spin

from conftest import random_density


def ket(*amps):
    return Ket(np.array(amps, dtype=complex))


KET_PLUS = ket(1 / np.sqrt(2), 1 / np.sqrt(2))
KET_MINUS = ket(1 / np.sqrt(2), -1 / np.sqrt(2))


class TestKet:
    def test_rejects_unnormalized(self):
        with pytest.raises(ValueError, match="normalized"):
            Ket(np.array([1.0, 1.0]))

    def test_rejects_bad_length(self):
        with pytest.raises(ValueError, match="power of 2"):
            Ket(np.array([1.0, 0.0, 0.0]))

    def test_canonical_fixes_global_phase(self):
        k = ket(np.exp(0.3j) / np.sqrt(2), np.exp(0.3j) * 1j / np.sqrt(2))
        c = k.canonical()
        assert c.amplitudes[0] == pytest.approx(1 / np.sqrt(2))
        assert c.close_to(ket(1 / np.sqrt(2), 1j / np.sqrt(2)))


class TestDensityFromKet:
    def test_basis_state(self):
        rho = density_from_ket(ket(1, 0))
        assert np.allclose(rho.matrix, np.diag([1, 0]))

    def test_plus_state_all_entries_half(self):
        rho = density_from_ket(KET_PLUS)
        assert np.allclose(rho.matrix, np.full((2, 2), 0.5))

    def test_global_phase_dropped(self):
        k = ket_from_angles(1.1, 2.2)
        shifted = Ket(np.exp(0.7j) * k.amplitudes)
        assert np.allclose(density_from_ket(k).matrix, density_from_ket(shifted).matrix)

    def test_pure(self):
        rho = density_from_ket(ket_from_angles(0.4, 5.0))
        assert purity(rho) == pytest.approx(1.0, abs=1e-10)

    @given(st.floats(0, 2 * np.pi - 1e-9))
    @settings(max_examples=20, deadline=None)
    def test_global_phase_quotient_exact(self, gamma):
        k = ket_from_angles(0.9, 1.3)
        shifted = Ket(np.exp(1j * gamma) * k.amplitudes)
        a = density_from_ket(k).matrix
        b = density_from_ket(shifted).matrix
        assert np.max(np.abs(a - b)) < 1e-15


class TestMix:
    def test_plus_minus_mixture_is_maximally_mixed(self):
        rho = mix([(0.5, density_from_ket(KET_PLUS)), (0.5, density_from_ket(KET_MINUS))])
        assert np.allclose(rho.matrix, np.eye(2) / 2)

    def test_mixture_nonuniqueness_bitwise(self):
        # |+>/|-> mixture versus |0>/|1> mixture with the exact half-entry
        # matrices: identical results, bit for bit
        rho_plus = DensityMatrix(np.array([[0.5, 0.5], [0.5, 0.5]]))
        rho_minus = DensityMatrix(np.array([[0.5, -0.5], [-0.5, 0.5]]))
        a = mix([(0.5, rho_plus), (0.5, rho_minus)])
        b = mix(
            [(0.5, density_from_ket(ket(1, 0))), (0.5, density_from_ket(ket(0, 1)))]
        )
        assert (a.matrix == b.matrix).all()

    def test_bell_mixture_equals_product_mixture(self):
        phi_p = ket(1 / np.sqrt(2), 0, 0, 1 / np.sqrt(2))
        phi_m = ket(1 / np.sqrt(2), 0, 0, -1 / np.sqrt(2))
        bell_mix = mix([(0.5, density_from_ket(phi_p)), (0.5, density_from_ket(phi_m))])
        prod_mix = mix(
            [
                (0.5, density_from_ket(Ket(basis_ket(0, 2)))),
                (0.5, density_from_ket(Ket(basis_ket(3, 2)))),
            ]
        )
        assert np.allclose(bell_mix.matrix, prod_mix.matrix, atol=1e-15)

    def test_single_component_identity(self):
        rho = density_from_ket(ket_from_angles(0.3, 0.0))
        assert np.allclose(mix([(1.0, rho)]).matrix, rho.matrix)

    def test_probability_sum_violation(self):
        rho = density_from_ket(ket(1, 0))
        with pytest.raises(ValueError, match="sum"):
            mix([(0.6, rho), (0.6, rho)])

    def test_dimension_mismatch(self):
        a = density_from_ket(ket(1, 0))
        b = density_from_ket(Ket(basis_ket(0, 2)))
        with pytest.raises(ValueError, match="dimension"):
            mix([(0.5, a), (0.5, b)])


class TestPurity:
    def test_maximally_mixed(self):
        assert purity(DensityMatrix(np.eye(2) / 2)) == pytest.approx(0.5)

    def test_werner_state_against_matrix_square(self):
        # eps = 1/3 Werner state; oracle is the dense matrix square
        bell = density_from_ket(ket(1 / np.sqrt(2), 0, 0, 1 / np.sqrt(2)))
        eps = 1 / 3
        rho = DensityMatrix((1 - eps) * np.eye(4) / 4 + eps * bell.matrix)
        oracle = float(np.real(np.trace(rho.matrix @ rho.matrix)))
        assert purity(rho) == pytest.approx(oracle, abs=1e-14)
        assert purity(rho) == pytest.approx(1 / 3, abs=1e-12)

    @given(st.integers(0, 2**30))
    @settings(max_examples=25, deadline=None)
    def test_purity_in_range(self, seed):
        rho = DensityMatrix(random_density(np.random.default_rng(seed), 4))
        p = purity(rho)
        assert 0 < p <= 1 + 1e-12


class TestBloch:
    def test_ground_state(self):
        assert bloch(density_from_ket(ket(1, 0))) == pytest.approx((1, 0, 0, 1))

    def test_plus_state(self):
        assert bloch(density_from_ket(KET_PLUS)) == pytest.approx((1, 1, 0, 0), abs=1e-12)

    def test_mixture_has_zero_vector(self):
        rho = mix([(0.5, density_from_ket(KET_PLUS)), (0.5, density_from_ket(KET_MINUS))])
        assert bloch(rho) == pytest.approx((1, 0, 0, 0), abs=1e-12)

    def test_vector_length_pure_vs_mixed(self):
        pure = density_from_ket(ket_from_angles(1.0, 0.5))
        s = bloch(pure)
        assert np.hypot(np.hypot(s[1], s[2]), s[3]) == pytest.approx(1.0, abs=1e-10)

    def test_rejects_two_qubits(self):
        with pytest.raises(ValueError, match="single-qubit"):
            bloch(density_from_ket(Ket(basis_ket(0, 2))))


class TestKetFromAngles:
    def test_north_pole(self):
        assert ket_from_angles(0, 0).close_to(ket(1, 0))

    def test_equator_plus(self):
        assert ket_from_angles(np.pi / 2, 0).close_to(KET_PLUS)

    def test_equator_minus(self):
        assert ket_from_angles(np.pi / 2, np.pi).close_to(KET_MINUS)

    def test_angle_range_rejected(self):
        with pytest.raises(ValueError):
            ket_from_angles(-0.1, 0)
        with pytest.raises(ValueError):
            ket_from_angles(0.5, 2 * np.pi)


class TestThermalState:
    def test_full_polarisation_single_spin(self):
        sys1 = two_spin()  # only need constructor pieces; build 1-spin directly
        from spinforge.system import SpinSystem

        s = SpinSystem(("1H",), (0.0,), np.zeros((1, 1)), (1.0,), (10.0,), (1.0,))
        assert np.allclose(thermal_state(s).matrix, np.diag([1.0, 0.0]))

    def test_small_polarisation_single_spin(self):
        from spinforge.system import SpinSystem

        d = 1e-5
        s = SpinSystem(("1H",), (0.0,), np.zeros((1, 1)), (d,), (10.0,), (1.0,))
        assert np.allclose(
            thermal_state(s).matrix, np.diag([(1 + d) / 2, (1 - d) / 2]), atol=1e-18
        )

    def test_homonuclear_first_order_deviation(self):
        d = 1e-6
        sys = two_spin(polarisation=(d, d))
        dev = thermal_state(sys).deviation().expansion()
        iz, sz = dev.coefficient("Iz"), dev.coefficient("Sz")
        izsz = dev.coefficient("IzSz")
        # first order: proportional to Iz + Sz; the 2IzSz term is O(delta^2)
        assert iz == pytest.approx(d / 2, rel=1e-9)
        assert sz == pytest.approx(d / 2, rel=1e-9)
        assert abs(izsz) < d * d
        rebuilt = d / 2 * (
            operator_from_label("Iz", 2) + operator_from_label("Sz", 2)
        )
        assert np.allclose(thermal_state(sys).deviation().matrix, rebuilt, atol=d * d)
