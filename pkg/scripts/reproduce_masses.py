#!/usr/bin/env python3
"""Print the lepton mass table, the relative precisions and an alpha sweep."""
import argparse

from pbosc.masses import (
    ALPHA_INV,
    EXP_MU,
    EXP_TAU,
    M_E,
    SpectrumInputs,
    alpha_sensitivity,
    full_spectrum,
    precision_table,
)


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--alpha-inv", type=float, default=ALPHA_INV)
    p.add_argument("--me", type=float, default=M_E)
    p.add_argument("--sweep", default="135,136,137.036,138")
    args = p.parse_args()

    inputs = SpectrumInputs(args.alpha_inv, args.me)
    print(f"alpha^-1 = {inputs.alpha_inv}, m_e = {inputs.m_e} MeV\n")
    print(f"{'n':>2} {'label':>6} {'sum':>5} {'mass [MeV]':>12}")
    for r in full_spectrum(inputs):
        print(f"{r.n:>2} {r.label:>6} {r.cumulative_sum:>5} {r.mass_mev:>12.3f}")

    print("\nrelative precision (predictions at 5 s.f.)")
    for row in precision_table(inputs, EXP_MU, EXP_TAU):
        print(f"  {row.particle:>3}: {row.predicted:.5g} vs {row.experimental} -> {row.rel_precision:+.3e}")

    values = [float(v) for v in args.sweep.split(",")]
    print("\nalpha^-1 sweep")
    for n in (1, 2, 3):
        pts = ", ".join(f"{a:g}: {m:.1f}" for a, m in alpha_sensitivity(n, values, inputs.m_e))
        print(f"  n={n}  {pts}")


if __name__ == "__main__":
    main()
