from math import sqrt

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from pbosc.matrix import SIGMA_1, SIGMA_2, SIGMA_3, commutator, identity
from pbosc.operators import (
    F_IDENTITIES,
    annihilation,
    bosonic_limit_check,
    creation,
    derived_generators,
    fermionic_check,
    number_deficit,
    pauli_reductions,
    phase_state,
    verify_commutator_table,
)


def delta(i, j):
    return 1.0 if i == j else 0.0


def from_deltas(s, f):
    d = s + 1
    return np.array([[f(m, n) for n in range(d)] for m in range(d)], dtype=complex)


# entrywise Kronecker-delta definitions
def a_oracle(s):
    return from_deltas(s, lambda m, n: sqrt(n) * delta(m, n - 1))


def ad_oracle(s):
    return from_deltas(s, lambda m, n: sqrt(n + 1) * delta(m, n + 1))


def A_oracle(s):
    return from_deltas(s, lambda m, n: delta(m, n) - (s + 1) * delta(m, s) * delta(n, s))


def M_oracle(s):
    return from_deltas(s, lambda m, n: -delta(m + 1, s) * delta(n, s))


def K_oracle(s):
    return from_deltas(s, lambda m, n: delta(m, s) * delta(n, s) - delta(m + 1, s) * delta(n + 1, s))


def F_oracle(s):
    return from_deltas(s, lambda m, n: delta(m + 1, s - 1) * delta(n, s))


class TestAnnihilation:
    def test_s1_pauli(self):
        np.testing.assert_array_equal(annihilation(1), [[0, 1], [0, 0]])
        np.testing.assert_array_equal(annihilation(1), (SIGMA_1 + 1j * SIGMA_2) / 2)

    def test_s2_entries(self):
        a = annihilation(2)
        assert a[0, 1] == 1 and a[1, 2] == sqrt(2)
        assert np.count_nonzero(a) == 2

    @pytest.mark.parametrize("s", [1, 2, 3, 7, 20])
    def test_matches_delta_form(self, s):
        np.testing.assert_array_equal(annihilation(s), a_oracle(s))
        np.testing.assert_array_equal(creation(s), ad_oracle(s))
        np.testing.assert_array_equal(number_deficit(s), A_oracle(s))

    def test_vacuum(self):
        e0 = np.zeros(6)
        e0[0] = 1
        np.testing.assert_array_equal(annihilation(5) @ e0, 0)

    @pytest.mark.parametrize("s", [0, -1, 1.5])
    def test_bad_cutoff(self, s):
        with pytest.raises(ValueError):
            annihilation(s)
        with pytest.raises(ValueError):
            derived_generators(s)

    @given(st.integers(1, 15), st.integers(1, 10))
    def test_nested(self, s, extra):
        np.testing.assert_array_equal(annihilation(s), annihilation(s + extra)[: s + 1, : s + 1])


class TestCreation:
    def test_s1(self):
        np.testing.assert_array_equal(creation(1), [[0, 0], [1, 0]])
        np.testing.assert_array_equal(creation(1), (SIGMA_1 - 1j * SIGMA_2) / 2)

    def test_top_state(self):
        top = np.zeros(5)
        top[4] = 1
        np.testing.assert_array_equal(creation(4) @ top, 0)

    def test_raises_level_one(self):
        e1 = np.array([0, 1, 0])
        np.testing.assert_allclose(creation(2) @ e1, [0, 0, sqrt(2)])


class TestNumberDeficit:
    def test_s1(self):
        np.testing.assert_array_equal(number_deficit(1), SIGMA_3)

    def test_s2(self):
        np.testing.assert_array_equal(number_deficit(2), np.diag([1, 1, -2]))

    @pytest.mark.parametrize("s", range(1, 21))
    def test_is_ladder_commutator(self, s):
        assert np.max(np.abs(commutator(annihilation(s), creation(s)) - number_deficit(s))) <= 1e-12


class TestDerivedGenerators:
    def test_s2(self):
        o = derived_generators(2)
        expected_M = np.zeros((3, 3))
        expected_M[1, 2] = -1
        np.testing.assert_array_equal(o.M, expected_M)
        np.testing.assert_array_equal(o.K, np.diag([0, -1, 1]))

    def test_s1_reductions(self):
        o = derived_generators(1)
        np.testing.assert_array_equal(o.M, -o.a)
        np.testing.assert_array_equal(o.M_dag, -o.a_dag)
        np.testing.assert_array_equal(o.K, -o.A)
        assert not np.any(o.F) and not np.any(o.F_dag)

    @pytest.mark.parametrize("s", [2, 3, 6, 13])
    def test_matches_delta_form(self, s):
        o = derived_generators(s)
        np.testing.assert_array_equal(o.M, M_oracle(s))
        np.testing.assert_array_equal(o.K, K_oracle(s))
        np.testing.assert_array_equal(o.F, F_oracle(s))

    @pytest.mark.parametrize("s", range(1, 21))
    def test_set_invariants(self, s):
        o = derived_generators(s)
        np.testing.assert_array_equal(o.a_dag, o.a.conj().T)
        np.testing.assert_array_equal(o.M_dag, o.M.conj().T)
        np.testing.assert_array_equal(o.F_dag, o.F.conj().T)
        for X in o.as_dict().values():
            assert abs(np.trace(X)) <= 1e-12


class TestCommutatorTable:
    def test_s2_all_pass(self):
        rep = verify_commutator_table(2)
        assert rep.passed and len(rep.checks) == 11 and not rep.skipped

    def test_s1_skips_f(self):
        rep = verify_commutator_table(1)
        assert rep.passed
        assert rep.skipped == list(F_IDENTITIES)
        assert sum(c.residual is not None for c in rep.checks) == 7

    @pytest.mark.parametrize("s", range(2, 21))
    def test_passes(self, s):
        rep = verify_commutator_table(s)
        assert rep.passed, [c for c in rep.checks if not c.passed]
        assert max(c.residual for c in rep.checks) <= 1e-12

    def test_s10_against_oracle(self):
        # recompute each bracket from the delta-form matrices
        s = 10
        a, ad, A, M, K, F = a_oracle(s), ad_oracle(s), A_oracle(s), M_oracle(s), K_oracle(s), F_oracle(s)
        Md, Fd = M.conj().T, F.conj().T
        c = commutator
        pairs = [
            (c(a, A), (s + 1) * sqrt(s) * M),
            (c(ad, A), -(s + 1) * sqrt(s) * Md),
            (c(M, Md), -K),
            (c(A, M), (1 + s) * M),
            (c(A, Md), -(1 + s) * Md),
            (c(a, M), -sqrt(s - 1) * F),
            (c(ad, Md), sqrt(s - 1) * Fd),
            (c(K, F), -F),
            (c(K, Fd), Fd),
            (c(M, K), 2 * M),
            (c(Md, K), -2 * Md),
        ]
        for lhs, rhs in pairs:
            assert np.max(np.abs(lhs - rhs)) <= 1e-12
        assert verify_commutator_table(s).passed

    def test_detects_wrong_generator(self):
        o = derived_generators(3)
        broken = type(o)(**{**o.__dict__, "K": 2 * o.K})
        assert not verify_commutator_table(3, broken).passed


class TestS1:
    def test_pauli_reductions_exact(self):
        rep = pauli_reductions()
        assert rep.passed and all(c.residual == 0 for c in rep.checks)

    def test_fermionic(self):
        rep = fermionic_check(1)
        assert rep.passed and rep.checks[0].residual == 0

    def test_fermionic_detects_perturbation(self):
        a = annihilation(1).copy()
        a[0, 1] += 0.1
        assert not fermionic_check(1, a).passed

    def test_fermionic_needs_s1(self):
        with pytest.raises(ValueError):
            fermionic_check(2)


class TestBosonicLimit:
    @pytest.mark.parametrize("s", [2, 5, 100])
    def test_zero(self, s):
        assert bosonic_limit_check(s) == (0.0, 0.0)

    def test_top_level_carries_the_deficit(self):
        A = number_deficit(6)
        np.testing.assert_array_equal((A - identity(7))[:6, :6], 0)
        assert A[6, 6] == -6

    def test_needs_s2(self):
        with pytest.raises(ValueError):
            bosonic_limit_check(1)


class TestPhaseState:
    def test_s1_zero_angle(self):
        np.testing.assert_allclose(phase_state(1, 0.0), [1 / sqrt(2), 1 / sqrt(2)])

    def test_quarter_turn(self):
        np.testing.assert_allclose(phase_state(3, np.pi / 2), 0.5 * np.array([1, 1j, -1, -1j]), atol=1e-15)

    @given(st.integers(1, 200), st.floats(-100, 100))
    def test_normalized(self, s, theta):
        v = phase_state(s, theta)
        assert abs(np.vdot(v, v) - 1) <= 1e-14
