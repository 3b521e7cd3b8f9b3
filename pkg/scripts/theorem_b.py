"""Real-root bound on random factored Hahn polynomials, edge by edge."""

import argparse
import time

from signtrop.config import HarnessConfig
from signtrop.generators import random_factored, rng_for


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--config", help="key=value harness config")
    ap.add_argument("--show", type=int, default=2, help="print this many instances in full")
    args = ap.parse_args()
    cfg = HarnessConfig.load(args.config) if args.config else HarnessConfig()
    start = time.perf_counter()
    edges = tight = failures = 0
    for i in range(cfg.b_samples):
        F = random_factored(rng_for(cfg, "thmB", i), cfg)
        reports = F.verify() + F.negate_x().verify()
        if i < args.show:
            print(F, "\n  " + "\n  ".join(r.line() for r in reports), "\n")
        for r in reports:
            edges += 1
            tight += r.delta == r.root_count
            failures += not (r.bound_ok and r.parity_ok)
    print(f"{cfg.b_samples} instances, {edges} edge reports, {tight} with equality, "
          f"{failures} failures, {time.perf_counter() - start:.1f}s")


if __name__ == "__main__":
    main()
