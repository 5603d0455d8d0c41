"""Finite-dimensional (Pegg-Barnett) oscillator operators.

The number-state space has levels 0..s, so every operator is an
(s+1) x (s+1) matrix.  Besides the ladder pair ``a``, ``a_dag`` and their
commutator ``A`` this module builds the first generators obtained by
repeated commutation (``M``, ``K``, ``F`` and adjoints) and checks the
commutation table they satisfy.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import sqrt

import numpy as np

from .matrix import (
    SIGMA_1,
    SIGMA_2,
    SIGMA_3,
    anticommutator,
    commutator,
    dagger,
    identity,
    unit,
)
from .report import TableReport

TABLE_TOL = 1e-12

GENERATOR_NAMES = ("a", "a_dag", "A", "M", "M_dag", "K", "F", "F_dag")


def _check_cutoff(s: int) -> int:
    if int(s) != s or s < 1:
        raise ValueError(f"cutoff s must be an integer >= 1, got {s!r}")
    return int(s)


def annihilation(s: int) -> np.ndarray:
    """Lowering operator with sqrt(n) at (n-1, n), n = 1..s."""
    s = _check_cutoff(s)
    a = np.zeros((s + 1, s + 1), dtype=np.complex128)
    for n in range(1, s + 1):
        a[n - 1, n] = sqrt(n)
    return a


def creation(s: int) -> np.ndarray:
    return dagger(annihilation(s))


def number_deficit(s: int) -> np.ndarray:
    """[a, a_dag] on the truncated space: diag(1, ..., 1, -s)."""
    s = _check_cutoff(s)
    A = identity(s + 1)
    A[s, s] -= s + 1
    return A


def number_operator(s: int) -> np.ndarray:
    s = _check_cutoff(s)
    return np.diag(np.arange(s + 1)).astype(np.complex128)


@dataclass(frozen=True)
class OperatorSet:
    s: int
    a: np.ndarray
    a_dag: np.ndarray
    A: np.ndarray
    M: np.ndarray
    M_dag: np.ndarray
    K: np.ndarray
    F: np.ndarray
    F_dag: np.ndarray

    def as_dict(self) -> dict[str, np.ndarray]:
        return {name: getattr(self, name) for name in GENERATOR_NAMES}


def derived_generators(s: int) -> OperatorSet:
    """Build the full operator set for cutoff ``s``.

    ``M = -E_{s-1,s}`` and ``K = E_{ss} - E_{s-1,s-1}``; ``F`` is the matrix
    unit ``E_{s-2,s}`` fixed by ``[a, M] = -sqrt(s-1) F``.  At s = 1 there is
    no level s-2, so ``F`` is the zero matrix.
    """
    s = _check_cutoff(s)
    d = s + 1
    a = annihilation(s)
    M = -unit(d, s - 1, s)
    K = unit(d, s, s) - unit(d, s - 1, s - 1)
    F = unit(d, s - 2, s) if s >= 2 else np.zeros((d, d), dtype=np.complex128)
    return OperatorSet(
        s=s,
        a=a,
        a_dag=dagger(a),
        A=number_deficit(s),
        M=M,
        M_dag=dagger(M),
        K=K,
        F=F,
        F_dag=dagger(F),
    )


F_IDENTITIES = ("[a,M] = -sqrt(s-1) F", "[a_dag,M_dag] = sqrt(s-1) F_dag", "[K,F] = -F", "[K,F_dag] = F_dag")


def verify_commutator_table(s: int, ops: OperatorSet | None = None, tol: float = TABLE_TOL) -> TableReport:
    """Evaluate every listed commutation identity as a max-abs entry residual.

    The four identities involving F need a level s-2 and are skipped at s = 1.
    """
    s = _check_cutoff(s)
    o = derived_generators(s) if ops is None else ops
    c = commutator
    rs = sqrt(s)
    rep = TableReport(tol)
    rep.add("[a,A] = (s+1)sqrt(s) M", c(o.a, o.A), (s + 1) * rs * o.M)
    rep.add("[a_dag,A] = -(s+1)sqrt(s) M_dag", c(o.a_dag, o.A), -(s + 1) * rs * o.M_dag)
    rep.add("[M,M_dag] = -K", c(o.M, o.M_dag), -o.K)
    rep.add("[A,M] = (1+s) M", c(o.A, o.M), (1 + s) * o.M)
    rep.add("[A,M_dag] = -(1+s) M_dag", c(o.A, o.M_dag), -(1 + s) * o.M_dag)
    if s >= 2:
        rf = sqrt(s - 1)
        rep.add(F_IDENTITIES[0], c(o.a, o.M), -rf * o.F)
        rep.add(F_IDENTITIES[1], c(o.a_dag, o.M_dag), rf * o.F_dag)
        rep.add(F_IDENTITIES[2], c(o.K, o.F), -o.F)
        rep.add(F_IDENTITIES[3], c(o.K, o.F_dag), o.F_dag)
    else:
        for name in F_IDENTITIES:
            rep.skip(name, "F = 0 at s = 1")
    rep.add("[M,K] = 2M", c(o.M, o.K), 2 * o.M)
    rep.add("[M_dag,K] = -2M_dag", c(o.M_dag, o.K), -2 * o.M_dag)
    return rep


def fermionic_check(s: int = 1, a: np.ndarray | None = None, tol: float = TABLE_TOL) -> TableReport:
    """At s = 1 the ladder pair anticommutes to the identity."""
    if s != 1:
        raise ValueError("the fermionic anticommutator only holds at s = 1")
    a = annihilation(1) if a is None else np.asarray(a, dtype=np.complex128)
    rep = TableReport(tol)
    rep.add("{a,a_dag} = I", anticommutator(a, dagger(a)), identity(2))
    return rep


def pauli_reductions(tol: float = 0.0) -> TableReport:
    """s = 1 identities: Pauli forms of a, a_dag, A and M = -a, K = -A, F = 0."""
    o = derived_generators(1)
    rep = TableReport(tol)
    rep.add("a = (sigma1 + i sigma2)/2", o.a, (SIGMA_1 + 1j * SIGMA_2) / 2)
    rep.add("a_dag = (sigma1 - i sigma2)/2", o.a_dag, (SIGMA_1 - 1j * SIGMA_2) / 2)
    rep.add("A = sigma3", o.A, SIGMA_3)
    rep.add("M = -a", o.M, -o.a)
    rep.add("M_dag = -a_dag", o.M_dag, -o.a_dag)
    rep.add("K = -A", o.K, -o.A)
    rep.add("F = 0", o.F, 0 * o.F)
    rep.add("F_dag = 0", o.F_dag, 0 * o.F_dag)
    return rep


def bosonic_limit_check(s: int) -> tuple[float, float]:
    """How far the low levels are from the unbounded oscillator.

    Returns ``(||P(A - I)P||_F, max ||P' X P'||_F over X in {M, K, F})``.
    P keeps levels 0..s-1, where A is exactly the identity.  K also touches
    level s-1, so the generators are checked with P' keeping levels 0..s-2.
    Both numbers are zero for every s.
    """
    s = _check_cutoff(s)
    if s < 2:
        raise ValueError("bosonic limit check needs s >= 2")
    o = derived_generators(s)
    lo = slice(0, s)
    dev = float(np.linalg.norm((o.A - identity(s + 1))[lo, lo]))
    lo2 = slice(0, s - 1)
    rest = max(float(np.linalg.norm(X[lo2, lo2])) for X in (o.M, o.K, o.F))
    return dev, rest


def phase_state(s: int, theta: float) -> np.ndarray:
    """Truncated phase state with amplitudes exp(i n theta)/sqrt(s+1)."""
    s = _check_cutoff(s)
    n = np.arange(s + 1)
    return np.exp(1j * n * theta) / np.sqrt(s + 1)
