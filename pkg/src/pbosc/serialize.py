"""JSON encoding of matrices and the objects built from them.

Matrix schema: ``{"dim": n, "entries": [[[re, im], ...], ...]}`` row-major.
Floats are written with ``repr`` precision, so a parse of a serialized
matrix reproduces it bit for bit.
"""
from __future__ import annotations

import json

import numpy as np

from .lie import LieBasis, StructureConstants
from .gellmann import NORMALIZATION, ORDERING, GellMannBasis
from .operators import GENERATOR_NAMES, OperatorSet
from .susy import SusyAlgebra


class MatrixFormatError(ValueError):
    """Input text is not valid JSON or does not follow the matrix schema."""


def matrix_to_obj(M) -> dict:
    M = np.asarray(M, dtype=np.complex128)
    return {
        "dim": int(M.shape[0]),
        "entries": [[[float(z.real), float(z.imag)] for z in row] for row in M],
    }


def matrix_from_obj(obj) -> np.ndarray:
    try:
        n = obj["dim"]
        rows = obj["entries"]
    except (KeyError, TypeError) as exc:
        raise MatrixFormatError(f"matrix object needs 'dim' and 'entries': {exc}") from None
    if not isinstance(n, int) or n < 1 or len(rows) != n or any(len(r) != n for r in rows):
        raise MatrixFormatError(f"entries must be a {n}x{n} array")
    M = np.empty((n, n), dtype=np.complex128)
    for i, row in enumerate(rows):
        for j, z in enumerate(row):
            if not isinstance(z, (list, tuple)) or len(z) != 2:
                raise MatrixFormatError(f"entry ({i},{j}) must be [re, im]")
            M[i, j] = complex(float(z[0]), float(z[1]))
    if not np.all(np.isfinite(M)):
        raise MatrixFormatError("matrix has non-finite entries")
    return M


def _loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MatrixFormatError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def serialize_matrix(M, format: str = "json") -> str:
    if format != "json":
        raise ValueError(f"unsupported matrix format {format!r}")
    return json.dumps(matrix_to_obj(M))


def parse_matrix(text: str) -> np.ndarray:
    return matrix_from_obj(_loads(text))


def operator_set_to_obj(ops: OperatorSet) -> dict:
    return {"s": ops.s, "generators": {k: matrix_to_obj(v) for k, v in ops.as_dict().items()}}


def operator_set_from_obj(obj) -> OperatorSet:
    gens = obj["generators"]
    return OperatorSet(s=int(obj["s"]), **{k: matrix_from_obj(gens[k]) for k in GENERATOR_NAMES})


def serialize_operator_set(ops: OperatorSet) -> str:
    return json.dumps(operator_set_to_obj(ops))


def parse_operator_set(text: str) -> OperatorSet:
    try:
        return operator_set_from_obj(_loads(text))
    except (KeyError, TypeError) as exc:
        raise MatrixFormatError(f"malformed operator set: {exc}") from None


def lie_basis_to_obj(basis: LieBasis) -> dict:
    return {
        "dim_space": basis.dim_space,
        "algebra_dim": basis.algebra_dim,
        "rounds": basis.rounds,
        "basis": [matrix_to_obj(B) for B in basis.basis],
    }


def lie_basis_from_obj(obj) -> LieBasis:
    return LieBasis(
        dim_space=int(obj["dim_space"]),
        basis=[matrix_from_obj(m) for m in obj["basis"]],
        rounds=int(obj["rounds"]),
    )


def structure_constants_to_obj(sc: StructureConstants) -> dict:
    return {
        "triples": [[i, j, k, [float(c.real), float(c.imag)]] for i, j, k, c in sc.triples],
        "residual": sc.residual,
    }


def structure_constants_from_obj(obj, dim: int) -> StructureConstants:
    triples = [(int(i), int(j), int(k), complex(c[0], c[1])) for i, j, k, c in obj["triples"]]
    return StructureConstants(triples=triples, residual=float(obj["residual"]), dim=dim)


def gellmann_to_obj(basis: GellMannBasis) -> dict:
    return {
        "n": basis.n,
        "normalization": NORMALIZATION,
        "ordering": ORDERING,
        "notes": list(basis.notes),
        "matrices": [matrix_to_obj(L) for L in basis.matrices],
    }


def susy_algebra_to_obj(alg: SusyAlgebra) -> dict:
    return {
        "config": {"k": alg.config.k, "n_max": alg.config.n_max},
        "safe_dim": alg.safe_dim,
        "ordering": "index = spin * (n_max + 1) + n, spin 0 = upper",
        "generators": {k: matrix_to_obj(v) for k, v in alg.generators().items()},
    }
