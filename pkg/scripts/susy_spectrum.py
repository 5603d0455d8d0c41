#!/usr/bin/env python3
"""Doublet spectrum of the multiphoton Jaynes-Cummings supercharge."""
import argparse
from math import comb, sqrt

import numpy as np

from pbosc.susy import SusyConfig, build_jc_realization, jc_hamiltonian, verify_susy_relations


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--nmax", type=int, default=12)
    p.add_argument("--g", type=complex, default=1.0)
    args = p.parse_args()

    alg = build_jc_realization(SusyConfig(args.k, args.nmax))
    rep = verify_susy_relations(alg)
    print(f"k={args.k} n_max={args.nmax}: {sum(c.passed for c in rep.checks)}/{len(rep.checks)} relations pass")

    H = jc_hamiltonian(alg, args.g)
    print(f"\n{'m':>3} {'C':>10} {'+|g|sqrt(C)':>14} {'eigenvalues':>26}")
    for m in range(alg.safe_dim):
        idx = np.array(alg.doublet_indices(m))
        eps = np.linalg.eigvalsh(H[np.ix_(idx, idx)])
        C = comb(m + args.k, args.k)
        print(f"{m:>3} {C:>10} {abs(args.g) * sqrt(C):>14.6f} {eps[0]:>12.6f} {eps[1]:>12.6f}")


if __name__ == "__main__":
    main()
