"""Lie algebra generated by a set of matrices under the commutator.

The closure is computed over the complex span with Gram-Schmidt against the
Hilbert-Schmidt inner product.  ``verify_su_n`` then passes to the compact
real form spanned by Hermitian combinations and checks the su(n) group
properties of exp(iG).
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .matrix import as_matrix, commutator, determinant, identity, matrix_exp
from .operators import annihilation, creation, number_deficit

CLOSURE_TOL = 1e-8
PHASE_CUTOFF = 1e-9


@dataclass
class LieBasis:
    dim_space: int
    basis: list[np.ndarray]
    rounds: int = 0

    @property
    def algebra_dim(self) -> int:
        return len(self.basis)


@dataclass
class StructureConstants:
    triples: list[tuple[int, int, int, complex]]
    residual: float
    dim: int

    def tensor(self) -> np.ndarray:
        c = np.zeros((self.dim,) * 3, dtype=np.complex128)
        for i, j, k, v in self.triples:
            c[i, j, k] = v
        return c


@dataclass
class SuNReport:
    s: int
    expected_dim: int
    found_dim: int
    complex_dim: int
    traceless_ok: bool
    jacobi_residual: float
    unitarity_residual: float
    det_residual: float
    samples: int
    tol: float = 1e-9
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (
            self.found_dim == self.expected_dim
            and self.complex_dim == self.expected_dim
            and self.traceless_ok
            and self.jacobi_residual <= self.tol
            and self.unitarity_residual <= self.tol
            and self.det_residual <= self.tol
        )


def _orthogonalize(X: np.ndarray, basis: list[np.ndarray]) -> np.ndarray:
    # two passes of modified Gram-Schmidt
    R = X.copy()
    for _ in range(2):
        for B in basis:
            R = R - np.vdot(B, R) * B
    return R


def _fix_phase(X: np.ndarray) -> np.ndarray:
    flat = X.ravel()
    idx = np.flatnonzero(np.abs(flat) > PHASE_CUTOFF)
    if idx.size == 0:
        return X
    z = flat[idx[0]]
    return X * (abs(z) / z)


def _try_add(X: np.ndarray, basis: list[np.ndarray], threshold: float) -> bool:
    R = _orthogonalize(X, basis)
    norm = np.linalg.norm(R)
    if norm <= threshold:
        return False
    basis.append(_fix_phase(R / norm))
    return True


def closure(seed, tol: float = CLOSURE_TOL) -> LieBasis:
    """Smallest commutator-closed complex span containing ``seed``.

    Seeds are orthonormalized first, in order.  Each round commutes every
    (older, newer) pair involving an element found in the previous round,
    in lexicographic index order, and keeps any commutator whose component
    orthogonal to the current span has HS norm above ``tol`` times the
    largest seed norm.  Rounds repeat until one adds nothing.
    """
    mats = [as_matrix(X) for X in seed]
    if not mats:
        raise ValueError("empty seed")
    dim = mats[0].shape[0]
    if any(X.shape[0] != dim for X in mats):
        raise ValueError("seed matrices have mixed dimensions")
    scale = max(np.linalg.norm(X) for X in mats)
    threshold = tol * scale if scale > 0 else tol
    for X in mats:
        if abs(np.trace(X)) > threshold:
            raise ValueError("seed matrices must be traceless")

    basis: list[np.ndarray] = []
    for X in mats:
        _try_add(X, basis, threshold)

    new = list(range(len(basis)))
    rounds = 0
    while new:
        rounds += 1
        if rounds > dim * dim:
            raise RuntimeError("closure did not terminate")
        pairs = sorted((i, j) for j in new for i in range(j))
        candidates = [commutator(basis[i], basis[j]) for i, j in pairs]
        start = len(basis)
        for C in candidates:
            _try_add(C, basis, threshold)
        new = list(range(start, len(basis)))
    return LieBasis(dim_space=dim, basis=basis, rounds=rounds)


def pb_seed(s: int) -> list[np.ndarray]:
    return [annihilation(s), creation(s), number_deficit(s)]


def projection_residual(X, basis: LieBasis | list[np.ndarray]) -> float:
    """HS norm of the part of ``X`` orthogonal to an orthonormal basis."""
    B = basis.basis if isinstance(basis, LieBasis) else basis
    return float(np.linalg.norm(_orthogonalize(as_matrix(X), list(B))))


def structure_constants(basis: LieBasis, cutoff: float = 1e-13) -> StructureConstants:
    """c_ijk = <B_k, [B_i, B_j]>, kept when |c_ijk| > cutoff.

    ``residual`` is the worst Frobenius error in rebuilding [B_i, B_j]
    from the kept triples.
    """
    B = basis.basis
    n = len(B)
    triples = []
    worst = 0.0
    for i in range(n):
        for j in range(n):
            C = commutator(B[i], B[j])
            rebuilt = np.zeros_like(C)
            for k in range(n):
                c = complex(np.vdot(B[k], C))
                if abs(c) > cutoff:
                    triples.append((i, j, k, c))
                    rebuilt += c * B[k]
            worst = max(worst, float(np.linalg.norm(C - rebuilt)))
    return StructureConstants(triples=triples, residual=worst, dim=n)


def jacobi_residual(basis: LieBasis | list[np.ndarray], trials: int = 100, seed: int = 0) -> float:
    B = basis.basis if isinstance(basis, LieBasis) else list(basis)
    rng = np.random.default_rng(seed)
    c = commutator
    worst = 0.0
    for _ in range(trials):
        i, j, k = rng.integers(0, len(B), size=3)
        X, Y, Z = B[i], B[j], B[k]
        J = c(X, c(Y, Z)) + c(Y, c(Z, X)) + c(Z, c(X, Y))
        worst = max(worst, float(np.linalg.norm(J)))
    return worst


def hermitian_basis(basis: LieBasis, tol: float = CLOSURE_TOL) -> list[np.ndarray]:
    """Real-orthonormal Hermitian basis of the real span of B + B^dag, i(B - B^dag)."""
    herm = []
    for B in basis.basis:
        Bd = B.conj().T
        herm.append(B + Bd)
        herm.append(1j * (B - Bd))
    d = basis.dim_space
    V = np.array([np.concatenate([H.real.ravel(), H.imag.ravel()]) for H in herm])
    _, sv, Vt = np.linalg.svd(V, full_matrices=False)
    rank = int(np.sum(sv > tol * sv[0])) if sv.size and sv[0] > 0 else 0
    out = []
    for row in Vt[:rank]:
        H = (row[: d * d] + 1j * row[d * d:]).reshape(d, d)
        out.append(0.5 * (H + H.conj().T))
    return out


def sample_group_elements(herm: list[np.ndarray], samples: int, seed: int = 0):
    """Yield (G, exp(iG)) for G with uniform[-1, 1] coefficients over ``herm``."""
    rng = np.random.default_rng(seed)
    for _ in range(samples):
        coef = rng.uniform(-1.0, 1.0, size=len(herm))
        G = sum(c * H for c, H in zip(coef, herm))
        yield G, matrix_exp(1j * G)


def verify_su_n(s: int, basis: LieBasis | None = None, samples: int = 50, seed: int = 0,
                tol: float = 1e-9) -> SuNReport:
    if basis is None:
        basis = closure(pb_seed(s))
    n = s + 1
    if basis.dim_space != n:
        raise ValueError(f"basis acts on dimension {basis.dim_space}, expected {n}")
    herm = hermitian_basis(basis)
    traceless = all(abs(np.trace(B)) <= 1e-10 for B in basis.basis)
    I = identity(n)
    unitarity = 0.0
    det_err = 0.0
    for _, U in sample_group_elements(herm, samples, seed):
        unitarity = max(unitarity, float(np.linalg.norm(U.conj().T @ U - I)))
        det_err = max(det_err, abs(determinant(U) - 1.0))
    return SuNReport(
        s=s,
        expected_dim=n * n - 1,
        found_dim=len(herm),
        complex_dim=basis.algebra_dim,
        traceless_ok=traceless,
        jacobi_residual=jacobi_residual(basis),
        unitarity_residual=unitarity,
        det_residual=det_err,
        samples=samples,
        tol=tol,
    )
