#!/usr/bin/env python3
"""Closure dimension and su(n) group checks for a range of cutoffs."""
import argparse
import time

from pbosc.lie import closure, pb_seed, structure_constants, verify_su_n


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-s", type=int, default=8)
    p.add_argument("--samples", type=int, default=50)
    args = p.parse_args()

    print(f"{'s':>2} {'dim':>4} {'(s+1)^2-1':>9} {'rounds':>6} {'sc resid':>9} {'U resid':>9} {'det resid':>9} {'sec':>6}")
    for s in range(1, args.max_s + 1):
        t0 = time.perf_counter()
        basis = closure(pb_seed(s))
        sc = structure_constants(basis)
        su = verify_su_n(s, basis=basis, samples=args.samples)
        dt = time.perf_counter() - t0
        print(f"{s:>2} {basis.algebra_dim:>4} {(s + 1) ** 2 - 1:>9} {basis.rounds:>6} "
              f"{sc.residual:>9.1e} {su.unitarity_residual:>9.1e} {su.det_residual:>9.1e} {dt:>6.2f}")


if __name__ == "__main__":
    main()
