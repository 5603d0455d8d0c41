"""Report builders behind the CLI subcommands, and the aggregate verify-all run."""
from __future__ import annotations

from dataclasses import replace
from math import sqrt

import numpy as np

from . import lie
from . import gellmann, masses, operators, susy
from .report import Report, TableReport

REFERENCE_MASSES = {1: (105.55, 0.01), 2: (1786.2, 0.1), 3: (4622.2, 0.1)}
REFERENCE_PRECISION = {"mu": -1.04e-3, "tau": 1.12e-3}
PRECISION_REL_TOL = 0.02
DEFAULT_SUSY_CONFIGS = ((1, 24), (2, 24), (3, 24))
SU_N_MAX = 6


def _pick(tol, default):
    return default if tol is None else tol


def ops_report(s: int, tol: float | None = None) -> Report:
    t = _pick(tol, operators.TABLE_TOL)
    rep = Report("ops", {"s": s, "tol": tol})
    o = operators.derived_generators(s)
    table = operators.verify_commutator_table(s, o, tol=t)
    rep.check("[a,a_dag] = A", float(np.max(np.abs(o.a @ o.a_dag - o.a_dag @ o.a - o.A))), t)
    rep.extend(table)
    for name, X in o.as_dict().items():
        rep.check(f"tr {name} = 0", abs(np.trace(X)), t)
    if s == 1:
        rep.extend(operators.pauli_reductions(tol=_pick(tol, 0.0)), "s=1: ")
        rep.extend(operators.fermionic_check(1, tol=t), "s=1: ")
    else:
        dev, rest = operators.bosonic_limit_check(s)
        rep.check("low levels: A = I", dev, t)
        rep.check("low levels: M, K, F = 0", rest, t)
    rep.data = {"dim": s + 1, "skipped": table.skipped}
    return rep


def closure_report(s: int, tol: float | None = None, samples: int = 50) -> Report:
    ctol = _pick(tol, lie.CLOSURE_TOL)
    rep = Report("closure", {"s": s, "tol": tol})
    basis = lie.closure(lie.pb_seed(s), tol=ctol)
    su = lie.verify_su_n(s, basis, samples=samples)
    sc = lie.structure_constants(basis)
    c = sc.tensor()
    rep.check("algebra_dim = (s+1)^2 - 1", abs(basis.algebra_dim - su.expected_dim), 0)
    rep.check("compact real dim = (s+1)^2 - 1", abs(su.found_dim - su.expected_dim), 0)
    rep.flag("basis traceless", su.traceless_ok)
    gram = np.array([[np.vdot(X, Y) for Y in basis.basis] for X in basis.basis])
    rep.check("orthonormal basis", float(np.max(np.abs(gram - np.eye(len(gram))))), 1e-10)
    rep.check("structure constants: antisymmetry", float(np.max(np.abs(c + c.transpose(1, 0, 2)))), 1e-10)
    rep.check("structure constants: reconstruction", sc.residual, 1e-9)
    rep.check("Jacobi identity", su.jacobi_residual, 1e-10)
    rep.check("exp(iG) unitary", su.unitarity_residual, 1e-9, f"{samples} samples")
    rep.check("det exp(iG) = 1", su.det_residual, 1e-9, f"{samples} samples")
    for name, X in operators.derived_generators(s).as_dict().items():
        rep.check(f"{name} in span", lie.projection_residual(X, basis), 1e-10)
    rep.data = {
        "algebra_dim": basis.algebra_dim,
        "expected_dim": su.expected_dim,
        "found_dim": su.found_dim,
        "rounds": basis.rounds,
        "n_structure_constants": len(sc.triples),
    }
    return rep


def _basis_properties(rep: Report, basis: gellmann.GellMannBasis, prefix: str = "") -> None:
    L = basis.matrices
    rep.check(prefix + "count = n^2 - 1", abs(len(L) - (basis.n**2 - 1)), 0)
    rep.check(prefix + "Hermitian", max(float(np.max(np.abs(X - X.conj().T))) for X in L), 1e-13)
    rep.check(prefix + "traceless", max(abs(np.trace(X)) for X in L), 1e-13)
    gram = np.array([[np.vdot(X, Y) for Y in L] for X in L])
    rep.check(prefix + "tr(l_i l_j) = 2 delta_ij", float(np.max(np.abs(gram - 2 * np.eye(len(L))))), 1e-12)


def gellmann_report(n: int = 3, paper_su3: bool = False, tol: float | None = None) -> Report:
    t = _pick(tol, 1e-12)
    if not paper_su3:
        rep = Report("gellmann", {"n": n, "paper_su3": False, "tol": tol})
        std = gellmann.standard_gellmann(n)
        _basis_properties(rep, std)
        if n == 3:
            f = gellmann.su_structure_constants(std)
            rep.check("f_123 = 1", abs(f[0, 1, 2] - 1.0), t)
            rep.check("f_458 = sqrt(3)/2", abs(f[3, 4, 7] - sqrt(3) / 2), t)
        rep.data = {"normalization": gellmann.NORMALIZATION, "ordering": gellmann.ORDERING}
        return rep

    rep = Report("gellmann", {"n": 3, "paper_su3": True, "tol": tol})
    ops = operators.derived_generators(2)
    built = gellmann.paper_lambda_su3(ops)
    std = gellmann.standard_gellmann(3)
    match = gellmann.basis_match(built, std, tol=t)
    for i, d in enumerate(match.diffs, start=1):
        note = "reconstructed as A/sqrt(3)" if i == 8 else ""
        rep.check(f"lambda_{i} matches standard", d, t, note)
    _basis_properties(rep, built, "oscillator form: ")
    basis = lie.closure(lie.pb_seed(2))
    span = max(lie.projection_residual(L, basis) for L in built.matrices)
    # closure basis is orthonormal; normalize lambdas before the reverse projection
    lam_on = [L / sqrt(2) for L in built.matrices]
    back = max(lie.projection_residual(B, lam_on) for B in basis.basis)
    rep.check("lambdas lie in the s=2 closure", span, 1e-10)
    rep.check("s=2 closure lies in the lambda span", back, 1e-10)
    rep.data = {
        "normalization": gellmann.NORMALIZATION,
        "reconstructed": ["lambda_8 = A/sqrt(3)"],
        "failed_indices": match.failed_indices,
    }
    return rep


def susy_report(k: int, n_max: int, g: complex = 1.0, tol: float | None = None) -> Report:
    rep = Report("susy", {"k": k, "nmax": n_max, "g": complex(g), "tol": tol})
    alg = susy.build_jc_realization(susy.SusyConfig(k, n_max))
    rel = susy.verify_susy_relations(alg, tol=_pick(tol, susy.SUSY_TOL))
    rep.extend(rel)
    rep.flag("Q^2 = 0 exactly", susy.nilpotent_exact(alg))
    dt = _pick(tol, susy.DOUBLET_TOL)
    worst_d = TableReport(dt)
    worst_q = TableReport(dt)
    for m in range(alg.safe_dim):
        d = susy.doublet_action_check(alg, m, tol=dt)
        q = susy.quasialgebra_check(alg, m, tol=dt)
        worst_d.add_residual(f"m={m}", max(c.residual for c in d.checks))
        worst_q.add_residual(f"m={m}", max(c.residual for c in q.checks))
    rep.check("doublet amplitudes sqrt(C) and N' = C", max(c.residual for c in worst_d.checks), dt,
              f"m = 0..{alg.safe_dim - 1}")
    rep.check("quasialgebra with N' -> C", max(c.residual for c in worst_q.checks), dt,
              f"m = 0..{alg.safe_dim - 1}")
    sp = susy.spectrum_squared_check(alg, g, tol=_pick(tol, susy.SUSY_TOL), eig_tol=_pick(tol, 1e-9))
    rep.extend(sp.table)
    rep.data = {
        "dim": alg.config.dim,
        "safe_dim": alg.safe_dim,
        "relations": len(rel.checks),
        "nprime_levels": [susy.nprime_eigenvalue(m, k) for m in range(alg.safe_dim)],
    }
    return rep


def masses_report(alpha_inv: float = masses.ALPHA_INV, m_e: float = masses.M_E,
                  exp_mu: float = masses.EXP_MU, exp_tau: float = masses.EXP_TAU,
                  sweep=None, table: str = "masses") -> Report:
    inputs = masses.SpectrumInputs(alpha_inv, m_e)
    rep = Report("masses", {"alpha_inv": alpha_inv, "me": m_e, "exp_mu": exp_mu, "exp_tau": exp_tau})
    spectrum = masses.full_spectrum(inputs)
    prec = masses.precision_table(inputs, exp_mu, exp_tau)
    ms = [r.mass_mev for r in spectrum]
    rep.check("m_0 = m_e", abs(ms[0] - m_e), 0)
    rep.flag("masses strictly increasing", all(a < b for a, b in zip(ms, ms[1:])))
    rep.flag("cumulative sums 0, 3, 51, 132", [r.cumulative_sum for r in spectrum] == [0, 3, 51, 132])
    default_inputs = (alpha_inv, m_e) == (masses.ALPHA_INV, masses.M_E)
    if default_inputs:
        for n, (ref, tol) in REFERENCE_MASSES.items():
            rep.check(f"m_{n} = {ref} MeV", abs(ms[n] - ref), tol)
        if (exp_mu, exp_tau) == (masses.EXP_MU, masses.EXP_TAU):
            for row in prec:
                ref = REFERENCE_PRECISION[row.particle]
                rep.check(f"rel. precision {row.particle} = {ref:+.2e}", abs(row.rel_precision - ref) / abs(ref),
                          PRECISION_REL_TOL, "relative to reported value")
    shown = [replace(r, mass_mev=masses.round_sig(r.mass_mev)) for r in spectrum]
    data = {"masses": [r.mass_mev for r in shown], "precision": prec}
    sweep_rows = []
    if sweep:
        for n in range(1, masses.MAX_GENERATION + 1):
            pts = masses.alpha_sensitivity(n, sorted(sweep), m_e)
            rep.flag(f"m_{n} increasing in alpha_inv", all(a[1] < b[1] for a, b in zip(pts, pts[1:])))
        sweep_rows = [{"n": n, "alpha_inv": a, "mass_mev": masses.round_sig(m)}
                      for n in range(masses.MAX_GENERATION + 1)
                      for a, m in masses.alpha_sensitivity(n, sweep, m_e)]
        data["sweep"] = sweep_rows
    rep.data = data
    rep.rows = {"masses": shown, "precision": prec, "sweep": sweep_rows}[table]
    return rep


def verify_all(max_s: int = 5, susy_configs=DEFAULT_SUSY_CONFIGS, tol: float | None = None) -> Report:
    """Every identity check in one report; check names carry their origin."""
    if max_s < 1:
        raise ValueError("max_s must be >= 1")
    rep = Report("verify-all", {"max_s": max_s, "susy_configs": [list(c) for c in susy_configs], "tol": tol})

    def absorb(sub: Report, prefix: str) -> None:
        for c in sub.checks:
            c.name = prefix + c.name
            rep.checks.append(c)

    dims = {}
    for s in range(1, max_s + 1):
        absorb(ops_report(s, tol), f"ops s={s}: ")
        if s <= SU_N_MAX:
            sub = closure_report(s)
            dims[s] = sub.data["algebra_dim"]
            absorb(sub, f"closure s={s}: ")
    if max_s >= 2:
        absorb(gellmann_report(paper_su3=True, tol=tol), "gellmann su3: ")
        absorb(gellmann_report(3, tol=tol), "gellmann standard: ")
    for k, n_max in susy_configs:
        absorb(susy_report(k, n_max, 1.0, tol), f"susy k={k} nmax={n_max}: ")
        absorb(susy_report(k, n_max, 0.6 + 0.8j, tol), f"susy k={k} nmax={n_max} g=0.6+0.8i: ")
    absorb(masses_report(sweep=[135.0, 136.0, masses.ALPHA_INV]), "masses: ")
    rep.data = {"algebra_dims": dims, "n_checks": len(rep.checks)}
    return rep
