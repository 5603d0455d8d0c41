"""Supercharge algebra realized by the k-photon Jaynes-Cummings operators.

The space is spin (upper, lower) tensor a Fock space truncated at
``n_max`` photons, flattened as ``index = spin * (n_max + 1) + n`` with
spin 0 = upper.  ``Q = a^k sigma_+ / sqrt(k!)`` lowers the photon number by
k while flipping lower -> upper, so the doublets
{(upper, m), (lower, m + k)} are invariant and carry N' = C(m + k, k).
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial, sqrt

import numpy as np

from .matrix import SIGMA_3, SIGMA_PLUS, anticommutator, commutator, dagger, eigenvalues_hermitian, identity, kron
from .operators import annihilation, number_operator
from .report import TableReport

SUSY_TOL = 1e-10
DOUBLET_TOL = 1e-12


@dataclass(frozen=True)
class SusyConfig:
    k: int
    n_max: int

    def __post_init__(self):
        if int(self.k) != self.k or self.k < 1:
            raise ValueError(f"k must be an integer >= 1, got {self.k!r}")
        if int(self.n_max) != self.n_max or self.n_max < self.k:
            raise ValueError(f"n_max must be an integer >= k, got {self.n_max!r}")

    @property
    def fock_dim(self) -> int:
        return self.n_max + 1

    @property
    def dim(self) -> int:
        return 2 * (self.n_max + 1)


@dataclass(frozen=True)
class SusyAlgebra:
    config: SusyConfig
    Q: np.ndarray
    Q_dag: np.ndarray
    N: np.ndarray
    N_prime: np.ndarray
    Sigma3: np.ndarray

    @property
    def safe_dim(self) -> int:
        """Number of photon levels (0..n_max-k) unaffected by the truncation."""
        return self.config.n_max - self.config.k + 1

    def index(self, spin: str, n: int) -> int:
        if not 0 <= n <= self.config.n_max:
            raise ValueError(f"photon number {n} outside 0..{self.config.n_max}")
        return {"upper": 0, "lower": 1}[spin] * self.config.fock_dim + n

    def basis_state(self, spin: str, n: int) -> np.ndarray:
        e = np.zeros(self.config.dim, dtype=np.complex128)
        e[self.index(spin, n)] = 1.0
        return e

    def safe_indices(self) -> np.ndarray:
        """Both spin slots with photon number <= n_max - k."""
        D = self.config.fock_dim
        lo = np.arange(self.safe_dim)
        return np.concatenate([lo, D + lo])

    def doublet_indices(self, m: int) -> tuple[int, int]:
        k = self.config.k
        if m < 0 or m + k > self.config.n_max:
            raise ValueError(f"doublet m={m} needs 0 <= m <= n_max - k")
        return self.index("upper", m), self.index("lower", m + k)

    def safe_doublet_indices(self) -> np.ndarray:
        return np.array([i for m in range(self.safe_dim) for i in self.doublet_indices(m)])

    def generators(self) -> dict[str, np.ndarray]:
        return {"Q": self.Q, "Q_dag": self.Q_dag, "N": self.N, "N_prime": self.N_prime, "Sigma3": self.Sigma3}


def build_jc_realization(config: SusyConfig) -> SusyAlgebra:
    k = config.k
    D = config.fock_dim
    ak = np.linalg.matrix_power(annihilation(config.n_max), k)
    Q = kron(SIGMA_PLUS, ak) / sqrt(factorial(k))
    Q_dag = dagger(Q)
    return SusyAlgebra(
        config=config,
        Q=Q,
        Q_dag=Q_dag,
        N=kron(identity(2), number_operator(config.n_max)) / k,
        N_prime=anticommutator(Q, Q_dag),
        Sigma3=kron(SIGMA_3, identity(D)),
    )


def nprime_eigenvalue(m: int, k: int) -> int:
    """(m + k)! / (m! k!) in exact integer arithmetic."""
    if m < 0 or k < 1:
        raise ValueError(f"need m >= 0 and k >= 1, got m={m}, k={k}")
    return comb(m + k, k)


def _restrict(X: np.ndarray, idx: np.ndarray) -> np.ndarray:
    return X[np.ix_(idx, idx)]


def verify_susy_relations(alg: SusyAlgebra, tol: float = SUSY_TOL) -> TableReport:
    """All thirteen supercharge relations as Frobenius residuals.

    Relations whose untruncated form involves a^k a_dag^k are compared on
    the safe subspace only; the spin-structural ones on the whole space.
    """
    Q, Qd, N, Np, S3 = alg.Q, alg.Q_dag, alg.N, alg.N_prime, alg.Sigma3
    c, ac = commutator, anticommutator
    idx = alg.safe_indices()
    rep = TableReport(tol, metric="fro")
    zero = np.zeros_like(Q)

    def full(name, *pairs):
        rep.add_residual(name, max(rep.residual_of(l - r) for l, r in pairs), "full space")

    def safe(name, lhs, rhs):
        rep.add_residual(name, rep.residual_of(_restrict(lhs - rhs, idx)), "safe subspace")

    full("Q^2 = (Q_dag)^2 = 0", (Q @ Q, zero), (Qd @ Qd, zero))
    safe("[Q,Q_dag] = N' sigma3", c(Q, Qd), Np @ S3)
    safe("[N,N'] = 0", c(N, Np), zero)
    full("[N,Q] = -Q", (c(N, Q), -Q))
    full("[N,Q_dag] = Q_dag", (c(N, Qd), Qd))
    full("{Q,Q_dag} = N'", (ac(Q, Qd), Np))
    full("{Q,sigma3} = {Q_dag,sigma3} = 0", (ac(Q, S3), zero), (ac(Qd, S3), zero))
    safe("[N',Q] = 0", c(Np, Q), zero)
    safe("[N',Q_dag] = 0", c(Np, Qd), zero)
    full("[Q,sigma3] = -2Q", (c(Q, S3), -2 * Q))
    full("[Q_dag,sigma3] = 2Q_dag", (c(Qd, S3), 2 * Qd))
    safe("(Q_dag - Q)^2 = -N'", (Qd - Q) @ (Qd - Q), -Np)
    safe("[N',sigma3] = 0", c(Np, S3), zero)
    return rep


def nilpotent_exact(alg: SusyAlgebra) -> bool:
    """Q^2 and (Q_dag)^2 vanish entry for entry, with no tolerance."""
    return bool(np.all(alg.Q @ alg.Q == 0) and np.all(alg.Q_dag @ alg.Q_dag == 0))


def doublet_action_check(alg: SusyAlgebra, m: int, tol: float = DOUBLET_TOL) -> TableReport:
    """Ladder action on the doublet (upper, m), (lower, m + k).

    Amplitudes of Q_dag and Q must be sqrt(C) with C = C(m + k, k); N' must
    act as C on both states (compared relative to max(1, C)).
    """
    k = alg.config.k
    i_up, i_dn = alg.doublet_indices(m)
    C = nprime_eigenvalue(m, k)
    amp = sqrt(C)
    up = alg.basis_state("upper", m)
    dn = alg.basis_state("lower", m + k)
    rep = TableReport(tol)
    rep.add("Q_dag (m,0) = sqrt(C) (0,m+k)", alg.Q_dag @ up, amp * dn)
    rep.add("Q (0,m+k) = sqrt(C) (m,0)", alg.Q @ dn, amp * up)
    scale = max(1.0, float(C))
    rep.add_residual("N' (m,0) = C (m,0)", rep.residual_of(alg.N_prime @ up - C * up) / scale, "relative")
    rep.add_residual("N' (0,m+k) = C (0,m+k)", rep.residual_of(alg.N_prime @ dn - C * dn) / scale, "relative")
    return rep


def quasialgebra_check(alg: SusyAlgebra, m: int, tol: float = DOUBLET_TOL) -> TableReport:
    """Relations with N' replaced by its doublet eigenvalue C, on the 2x2 block."""
    idx = np.array(alg.doublet_indices(m))
    C = nprime_eigenvalue(m, alg.config.k)
    Q = _restrict(alg.Q, idx)
    Qd = _restrict(alg.Q_dag, idx)
    I2 = np.eye(2)
    rep = TableReport(tol)
    rep.add("[Q,Q_dag] = C sigma3", commutator(Q, Qd), C * SIGMA_3)
    rep.add("{Q,Q_dag} = C", anticommutator(Q, Qd), C * I2)
    rep.add("(Q_dag - Q)^2 = -C", (Qd - Q) @ (Qd - Q), -C * I2)
    return rep


def susy_hamiltonian(alg: SusyAlgebra, omega: float) -> np.ndarray:
    if not np.isfinite(omega):
        raise ValueError("omega must be finite")
    return 0.5 * omega * alg.N_prime


def jc_hamiltonian(alg: SusyAlgebra, g: complex) -> np.ndarray:
    g = complex(g)
    if not np.isfinite(g):
        raise ValueError("coupling must be finite")
    return g * alg.Q + g.conjugate() * alg.Q_dag


@dataclass
class SpectrumReport:
    table: TableReport
    energies: list[float]
    nprime_spectrum: list[float]

    @property
    def passed(self) -> bool:
        return self.table.passed


def spectrum_squared_check(alg: SusyAlgebra, g: complex, tol: float = SUSY_TOL,
                           eig_tol: float = 1e-9) -> SpectrumReport:
    """H^2 = |g|^2 N' on the safe subspace, and eps^2/|g|^2 in spec(N').

    Energies come from H restricted to the span of the safe doublets, which
    H leaves invariant.
    """
    g = complex(g)
    if g == 0:
        raise ValueError("coupling must be nonzero")
    g2 = abs(g) ** 2
    H = jc_hamiltonian(alg, g)
    rep = TableReport(tol, metric="fro")
    idx = alg.safe_indices()
    rep.add_residual("H^2 = |g|^2 N'", rep.residual_of(_restrict(H @ H - g2 * alg.N_prime, idx)), "safe subspace")
    didx = alg.safe_doublet_indices()
    energies = eigenvalues_hermitian(_restrict(H, didx))
    levels = eigenvalues_hermitian(_restrict(alg.N_prime, didx))
    lv = np.array(levels)
    worst = max(float(np.min(np.abs(lv - e * e / g2))) for e in energies)
    rep.add_residual("eps^2/|g|^2 in spec(N')", worst, "safe doublets", tol=eig_tol)
    return SpectrumReport(rep, energies, levels)
