"""Charged-lepton masses from the binomial-weighted l^4 magnetic series.

    m_n = m_e * (1 + (alpha_inv / 2) * sum_{l=0}^{n} C(3, l) * l^4),  n = 0..3

The binomial C(3, l) vanishes beyond l = 3, which caps the chain at four
generations.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass
from math import comb

ALPHA_INV = 137.036
M_E = 0.51100  # MeV
EXP_MU = 105.66
EXP_TAU = 1784.2
EXP_TAU_1992 = 1776.9
LABELS = ("e", "mu", "tau", "fourth")
MAX_GENERATION = 3


@dataclass(frozen=True)
class SpectrumInputs:
    alpha_inv: float = ALPHA_INV
    m_e: float = M_E

    def __post_init__(self):
        if not self.alpha_inv > 0:
            raise ValueError("alpha_inv must be positive")
        if not self.m_e > 0:
            raise ValueError("m_e must be positive")


@dataclass(frozen=True)
class MassRow:
    n: int
    label: str
    mass_mev: float
    cumulative_sum: int


@dataclass(frozen=True)
class PrecisionRow:
    particle: str
    predicted: float
    experimental: float
    rel_precision: float


def binomial(n: int, k: int) -> int:
    if n < 0 or k < 0 or k > n:
        raise ValueError(f"binomial({n}, {k}) needs 0 <= k <= n")
    return comb(n, k)


def magnetic_term(l: int) -> int:
    if l < 0:
        raise ValueError("angular quantum number must be >= 0")
    return l**4


def cumulative_sum(n: int) -> int:
    """sum_{l=0}^{n} C(3, l) l^4, exact."""
    _check_generation(n)
    return sum(binomial(3, l) * magnetic_term(l) for l in range(n + 1))


def _check_generation(n: int) -> None:
    if int(n) != n or not 0 <= n <= MAX_GENERATION:
        raise ValueError(f"generation index must be 0..{MAX_GENERATION}, got {n!r}")


def lepton_mass(n: int, inputs: SpectrumInputs = SpectrumInputs()) -> float:
    """Mass of generation ``n`` in MeV."""
    return inputs.m_e * (1.0 + 0.5 * inputs.alpha_inv * cumulative_sum(n))


def full_spectrum(inputs: SpectrumInputs = SpectrumInputs()) -> list[MassRow]:
    return [MassRow(n, LABELS[n], lepton_mass(n, inputs), cumulative_sum(n)) for n in range(MAX_GENERATION + 1)]


def relative_precision(predicted: float, experimental: float) -> float:
    if not experimental > 0:
        raise ValueError("experimental mass must be positive")
    return (predicted - experimental) / experimental


def round_sig(x: float, digits: int = 5) -> float:
    return float(f"{x:.{digits}g}")


def precision_table(inputs: SpectrumInputs = SpectrumInputs(), exp_mu: float = EXP_MU,
                    exp_tau: float = EXP_TAU, sig_figs: int | None = 5) -> list[PrecisionRow]:
    """Signed relative deviations for mu and tau.

    Predictions are first rounded to ``sig_figs`` significant figures, the
    precision at which masses are reported; ``None`` keeps full precision.
    """
    rows = []
    for n, label, exp in ((1, "mu", exp_mu), (2, "tau", exp_tau)):
        m = lepton_mass(n, inputs)
        if sig_figs is not None:
            m = round_sig(m, sig_figs)
        rows.append(PrecisionRow(label, m, exp, relative_precision(m, exp)))
    return rows


def alpha_sensitivity(n: int, alpha_inv_values, m_e: float = M_E) -> list[tuple[float, float]]:
    """(alpha_inv, mass) for each coupling in the sweep."""
    return [(a, lepton_mass(n, SpectrumInputs(a, m_e))) for a in alpha_inv_values]


def rows_to_csv(rows) -> str:
    rows = list(rows)
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(asdict(rows[0])), lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow(asdict(r))
    return buf.getvalue()


def rows_to_json(rows) -> str:
    return json.dumps([asdict(r) for r in rows])
