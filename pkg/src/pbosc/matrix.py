"""Dense complex matrix primitives.

Matrices are plain ``numpy`` arrays of dtype ``complex128``; every function
here is pure and returns a fresh array.
"""
from __future__ import annotations

import os

import numpy as np

DEFAULT_TOL = float(os.environ.get("PB_TOL", "1e-10"))


def as_matrix(X) -> np.ndarray:
    """Coerce ``X`` to a finite square complex matrix or raise ``ValueError``."""
    M = np.asarray(X, dtype=np.complex128)
    if M.ndim != 2 or M.shape[0] != M.shape[1] or M.shape[0] < 1:
        raise ValueError(f"expected a non-empty square matrix, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        raise ValueError("matrix has non-finite entries")
    return M


def as_vector(v) -> np.ndarray:
    x = np.asarray(v, dtype=np.complex128)
    if x.ndim != 1 or x.shape[0] < 1:
        raise ValueError(f"expected a non-empty vector, got shape {x.shape}")
    if not np.all(np.isfinite(x)):
        raise ValueError("vector has non-finite entries")
    return x


def _pair(X, Y):
    X, Y = as_matrix(X), as_matrix(Y)
    if X.shape != Y.shape:
        raise ValueError(f"dimension mismatch: {X.shape[0]} vs {Y.shape[0]}")
    return X, Y


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.complex128)


def unit(n: int, i: int, j: int) -> np.ndarray:
    """Matrix unit E_ij of size n."""
    E = np.zeros((n, n), dtype=np.complex128)
    E[i, j] = 1.0
    return E


def commutator(X, Y) -> np.ndarray:
    X, Y = _pair(X, Y)
    return X @ Y - Y @ X


def anticommutator(X, Y) -> np.ndarray:
    X, Y = _pair(X, Y)
    return X @ Y + Y @ X


def dagger(X) -> np.ndarray:
    return as_matrix(X).conj().T.copy()


def trace(X) -> complex:
    return complex(np.trace(as_matrix(X)))


def hs_inner(X, Y) -> complex:
    """Hilbert-Schmidt inner product tr(X^dagger Y)."""
    X, Y = _pair(X, Y)
    return complex(np.vdot(X, Y))


def hs_norm(X) -> float:
    return float(np.linalg.norm(as_matrix(X)))


def kron(X, Y) -> np.ndarray:
    return np.kron(as_matrix(X), as_matrix(Y))


def is_hermitian(X, tol: float = DEFAULT_TOL) -> bool:
    X = as_matrix(X)
    return np.linalg.norm(X - X.conj().T) <= tol * max(1.0, np.linalg.norm(X))


def allclose(X, Y, tol: float | None = None) -> bool:
    """Frobenius-norm comparison with absolute tolerance."""
    X, Y = _pair(X, Y)
    tol = DEFAULT_TOL if tol is None else tol
    return np.linalg.norm(X - Y) <= tol


def _taylor(A: np.ndarray) -> np.ndarray:
    n = A.shape[0]
    result = np.eye(n, dtype=np.complex128)
    term = np.eye(n, dtype=np.complex128)
    for k in range(1, 40):
        term = term @ A / k
        result = result + term
        if np.linalg.norm(term, 1) <= 1e-18 * np.linalg.norm(result, 1):
            break
    return result


def matrix_exp(X) -> np.ndarray:
    """exp(X) by scaling and squaring around a truncated Taylor series.

    The argument is scaled by 2**-j until its 1-norm is at most 1/2, where
    the series converges to machine precision in under 20 terms, and the
    result is squared j times.
    """
    A = as_matrix(X)
    norm = np.linalg.norm(A, 1)
    j = 0
    if norm > 0.5:
        j = int(np.ceil(np.log2(norm / 0.5)))
    E = _taylor(A / 2.0**j)
    for _ in range(j):
        E = E @ E
    return E


def determinant(X) -> complex:
    # LAPACK getrf: LU with partial pivoting
    return complex(np.linalg.det(as_matrix(X)))


def eigenvalues_hermitian(X, tol: float = DEFAULT_TOL) -> list[float]:
    """Ascending real spectrum of a Hermitian matrix."""
    X = as_matrix(X)
    if not is_hermitian(X, tol):
        raise ValueError("matrix is not Hermitian")
    H = 0.5 * (X + X.conj().T)
    return [float(w) for w in np.linalg.eigvalsh(H)]


def eigh(X, tol: float = DEFAULT_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Eigenpairs of a Hermitian matrix, eigenvalues ascending."""
    X = as_matrix(X)
    if not is_hermitian(X, tol):
        raise ValueError("matrix is not Hermitian")
    return np.linalg.eigh(0.5 * (X + X.conj().T))


# Pauli matrices, spinor order (upper, lower)
SIGMA_1 = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SIGMA_2 = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SIGMA_3 = np.array([[1, 0], [0, -1]], dtype=np.complex128)
SIGMA_PLUS = np.array([[0, 1], [0, 0]], dtype=np.complex128)
SIGMA_MINUS = np.array([[0, 0], [1, 0]], dtype=np.complex128)

for _m in (SIGMA_1, SIGMA_2, SIGMA_3, SIGMA_PLUS, SIGMA_MINUS):
    _m.flags.writeable = False
del _m
