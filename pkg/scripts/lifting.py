"""Lift random signed tropical polynomials and count residue roots per edge."""

import argparse
import time

from signtrop.classical import lift, lift_root_counts
from signtrop.config import HarnessConfig
from signtrop.generators import random_tr_poly, rng_for
from signtrop.hahn import poly_valuation


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--config", help="key=value harness config")
    ap.add_argument("--show", type=int, default=2, help="print this many lifts in full")
    args = ap.parse_args()
    cfg = HarnessConfig.load(args.config) if args.config else HarnessConfig()
    start = time.perf_counter()
    edges = failures = 0
    for i in range(cfg.lift_samples):
        p = random_tr_poly(rng_for(cfg, "lift", i), cfg)
        P = lift(p)
        counts = lift_root_counts(p, P)
        if i < args.show:
            print(f"p = {p}\nP = {P}")
            for r, pos, mpos, neg, mneg in counts:
                print(f"  r={r}: positive {pos} (mult {mpos}), negative {neg} (mult {mneg})")
        failures += poly_valuation(P) != p
        for _, pos, mpos, neg, mneg in counts:
            edges += 1
            failures += (pos, neg) != (mpos, mneg)
    print(f"{cfg.lift_samples} lifts, {edges} edges, {failures} failures, {time.perf_counter() - start:.1f}s")


if __name__ == "__main__":
    main()
