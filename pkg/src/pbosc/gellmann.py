"""Generalized Gell-Mann matrices and their oscillator-operator form at n = 3."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import sqrt

import numpy as np

from .operators import OperatorSet

NORMALIZATION = "tr=2delta"
ORDERING = "for k = 1..n-1: symmetric/antisymmetric pairs (j,k), j<k; then diagonal l=k"


@dataclass
class GellMannBasis:
    n: int
    matrices: list[np.ndarray]
    notes: list[str] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.matrices)

    def __getitem__(self, i: int) -> np.ndarray:
        """1-based access, matching the usual lambda_1..lambda_{n^2-1} labels."""
        if not 1 <= i <= len(self.matrices):
            raise IndexError(i)
        return self.matrices[i - 1]


def _sym(n, j, k):
    E = np.zeros((n, n), dtype=np.complex128)
    E[j, k] = E[k, j] = 1.0
    return E


def _antisym(n, j, k):
    E = np.zeros((n, n), dtype=np.complex128)
    E[j, k] = -1j
    E[k, j] = 1j
    return E


def _diag(n, l):
    d = np.zeros(n)
    d[:l] = 1.0
    d[l] = -l
    return np.diag(d * sqrt(2.0 / (l * (l + 1)))).astype(np.complex128)


def standard_gellmann(n: int) -> GellMannBasis:
    """The n^2 - 1 generalized Gell-Mann matrices, tr(l_i l_j) = 2 delta_ij.

    For n = 3 the order reproduces the conventional lambda_1..lambda_8 and
    for n = 2 the Pauli matrices.
    """
    if int(n) != n or n < 2:
        raise ValueError(f"n must be an integer >= 2, got {n!r}")
    mats = []
    for k in range(1, n):
        for j in range(k):
            mats.append(_sym(n, j, k))
            mats.append(_antisym(n, j, k))
        mats.append(_diag(n, k))
    return GellMannBasis(n=n, matrices=mats, notes=[f"normalization {NORMALIZATION}", ORDERING])


def paper_lambda_su3(ops: OperatorSet) -> GellMannBasis:
    """lambda_1..lambda_8 written in the s = 2 oscillator generators.

    lambda_8 is taken as A / sqrt(3); the source line for it is
    self-referential, so this entry is a reconstruction and flagged as such.
    """
    if ops.s != 2:
        raise ValueError(f"su(3) construction needs s = 2, got s = {ops.s}")
    o = ops
    r2 = sqrt(2.0)
    lam = [
        o.a + o.a_dag + r2 * (o.M + o.M_dag),
        1j * (o.a_dag - o.a + r2 * (o.M_dag - o.M)),
        o.A + 2 * o.K,
        o.F + o.F_dag,
        1j * (o.F_dag - o.F),
        -(o.M + o.M_dag),
        -1j * (o.M_dag - o.M),
        o.A / sqrt(3.0),
    ]
    return GellMannBasis(n=3, matrices=lam, notes=["lambda_8 = A/sqrt(3) is an editorial reconstruction"])


@dataclass
class MatchReport:
    diffs: list[float]
    tol: float

    @property
    def failed_indices(self) -> list[int]:
        return [i + 1 for i, d in enumerate(self.diffs) if d > self.tol]

    @property
    def passed(self) -> bool:
        return not self.failed_indices


def basis_match(a: GellMannBasis, b: GellMannBasis, tol: float = 1e-12) -> MatchReport:
    """Per-index max-abs entry difference between two bases of the same size."""
    if a.n != b.n or len(a) != len(b):
        raise ValueError("bases have different sizes")
    diffs = [float(np.max(np.abs(x - y))) for x, y in zip(a.matrices, b.matrices)]
    return MatchReport(diffs=diffs, tol=tol)


def su_structure_constants(basis: GellMannBasis) -> np.ndarray:
    """Real f_ijk with [l_i, l_j] = 2i f_ijk l_k (0-based indices)."""
    L = basis.matrices
    m = len(L)
    f = np.zeros((m, m, m))
    for i in range(m):
        for j in range(m):
            C = L[i] @ L[j] - L[j] @ L[i]
            for k in range(m):
                # tr(l_k C) = 2 * 2i f_ijk
                f[i, j, k] = (np.trace(L[k] @ C) / 4j).real
    return f
