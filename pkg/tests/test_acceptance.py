"""Acceptance criteria, one test per criterion, each at its stated tolerance.

The conftest prints a PASS/FAIL line for every criterion in the summary.
"""
import json
import time
from math import comb, sqrt

import numpy as np
import pytest

from pbosc.gellmann import basis_match, paper_lambda_su3, standard_gellmann
from pbosc.lie import closure, jacobi_residual, pb_seed, structure_constants, verify_su_n
from pbosc.masses import SpectrumInputs, lepton_mass, precision_table
from pbosc.operators import derived_generators, fermionic_check, pauli_reductions, verify_commutator_table
from pbosc.susy import (
    SusyConfig,
    build_jc_realization,
    doublet_action_check,
    jc_hamiltonian,
    nilpotent_exact,
    quasialgebra_check,
    spectrum_squared_check,
    verify_susy_relations,
)
from pbosc.verify import verify_all

INPUTS = SpectrumInputs(137.036, 0.51100)


def test_criterion_01_mass_spectrum():
    t0 = time.perf_counter()
    ms = [lepton_mass(n, INPUTS) for n in (1, 2, 3)]
    assert time.perf_counter() - t0 < 0.1
    assert abs(ms[0] - 105.55) <= 0.01
    assert abs(ms[1] - 1786.2) <= 0.1
    assert abs(ms[2] - 4622.2) <= 0.1


def test_criterion_02_relative_precision():
    mu, tau = precision_table(INPUTS, exp_mu=105.66, exp_tau=1784.2)
    assert abs(mu.rel_precision / -1.04e-3 - 1) <= 0.02
    assert abs(tau.rel_precision / 1.12e-3 - 1) <= 0.02


@pytest.mark.parametrize("s", [1, 2, 3, 4, 5])
def test_criterion_03_algebra_dimension(s):
    t0 = time.perf_counter()
    basis = closure(pb_seed(s))
    assert time.perf_counter() - t0 < 1.0
    assert basis.algebra_dim == (s + 1) ** 2 - 1


def test_criterion_04_commutator_table():
    for s in range(2, 21):
        rep = verify_commutator_table(s, tol=1e-12)
        assert len(rep.checks) == 11 and not rep.skipped
        assert rep.passed, (s, [(c.name, c.residual) for c in rep.checks if not c.passed])


def test_criterion_05_s1_reductions():
    rep = pauli_reductions(tol=0.0)
    assert rep.passed
    assert max(c.residual for c in rep.checks) == 0.0
    assert fermionic_check(1, tol=0.0).passed
    o = derived_generators(1)
    assert np.array_equal(o.a @ o.a_dag + o.a_dag @ o.a, np.eye(2))


def test_criterion_06_gellmann_match():
    built = paper_lambda_su3(derived_generators(2))
    std = standard_gellmann(3)
    rep = basis_match(built, std, tol=1e-12)
    assert all(d <= 1e-12 for d in rep.diffs[:7])
    assert rep.diffs[7] <= 1e-12
    assert any("lambda_8" in n for n in built.notes)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_criterion_07_susy_relations(k):
    alg = build_jc_realization(SusyConfig(k, 24))
    rep = verify_susy_relations(alg, tol=1e-10)
    assert len(rep.checks) == 13 and rep.passed
    assert nilpotent_exact(alg)
    for m in range(24 - k + 1):
        up = alg.basis_state("upper", m)
        amp = (alg.Q_dag @ up)[alg.index("lower", m + k)]
        assert abs(amp - sqrt(comb(m + k, k))) <= 1e-12
        assert doublet_action_check(alg, m, tol=1e-12).passed


@pytest.mark.parametrize("k", [1, 2, 3])
def test_criterion_08_quasialgebra(k):
    alg = build_jc_realization(SusyConfig(k, 24))
    for m in range(alg.safe_dim):
        rep = quasialgebra_check(alg, m, tol=1e-12)
        assert rep.passed, (m, [(c.name, c.residual) for c in rep.checks])


@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("g", [1.0, 0.6 + 0.8j, 2.5 - 1.0j])
def test_criterion_09_hamiltonian_spectrum(k, g):
    alg = build_jc_realization(SusyConfig(k, 24))
    rep = spectrum_squared_check(alg, g, tol=1e-10, eig_tol=1e-9)
    assert rep.passed
    # independent re-check on the safe doublets
    idx = alg.safe_doublet_indices()
    eps = np.linalg.eigvalsh(jc_hamiltonian(alg, g)[np.ix_(idx, idx)])
    spec = np.array([comb(m + k, k) for m in range(alg.safe_dim)], dtype=float)
    for e in eps:
        assert np.min(np.abs(e * e / abs(g) ** 2 - spec)) <= 1e-9


@pytest.mark.parametrize("s", [1, 2, 3, 4])
def test_criterion_10_group_elements(s):
    rep = verify_su_n(s, samples=50, tol=1e-9)
    assert rep.samples == 50
    assert rep.unitarity_residual <= 1e-9
    assert rep.det_residual <= 1e-9


def test_criterion_11_property_suites():
    for s in (1, 2, 3):
        basis = closure(pb_seed(s))
        sc = structure_constants(basis)
        T = sc.tensor()
        assert np.max(np.abs(T + T.transpose(1, 0, 2))) <= 1e-9
        assert sc.residual <= 1e-9
        assert jacobi_residual(basis) <= 1e-10

    t0 = time.perf_counter()
    first = verify_all()
    assert time.perf_counter() - t0 < 10.0
    assert first.passed
    second = verify_all()
    assert first.to_json() == second.to_json()
    json.loads(first.to_json())
