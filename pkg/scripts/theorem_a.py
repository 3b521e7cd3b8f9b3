"""Multiplicity over S and TR: closed formula against the factorization search."""

import argparse
import itertools
import time

from signtrop.config import HarnessConfig
from signtrop.generators import random_tr_poly, rng_for
from signtrop.hyperfield import INF, S
from signtrop.hyperpoly import (
    HPoly, factor_step, factorizations, is_factorization, mult, mult_recursive, substitute_neg,
)
from signtrop.newton import delta_at, sign_changes, tr_roots


def exhaustive_signs(max_degree: int) -> None:
    start = time.perf_counter()
    n = bad = 0
    for coeffs in itertools.product((0, 1, -1), repeat=max_degree + 1):
        p = HPoly(S, coeffs)
        if p.is_zero:
            continue
        n += 1
        bad += mult_recursive(p, 1, candidates=S.elements()) != sign_changes(p)
        bad += mult_recursive(p, -1, candidates=S.elements()) != sign_changes(substitute_neg(p))
    print(f"S, degree <= {max_degree}: {n} polynomials, {bad} mismatches, {time.perf_counter() - start:.1f}s")


def sampled_tr(cfg: HarnessConfig) -> None:
    start = time.perf_counter()
    roots = steps = searched = bad = 0
    histogram: dict[int, int] = {}
    for i in range(cfg.tr_samples):
        p = random_tr_poly(rng_for(cfg, "thmA", i), cfg)
        for a in tr_roots(p):
            roots += 1
            m = mult(p, a)
            histogram[m] = histogram.get(m, 0) + 1
            bad += mult_recursive(p, a) != m
            if a is INF or a.sign != 1:
                continue
            q = factor_step(p, a)
            steps += 1
            bad += not (is_factorization(p, a, q) and delta_at(q, a) == m - 1)
            for q in factorizations(p, a):
                searched += 1
                bad += not delta_at(q, a) < m
    print(f"TR: {cfg.tr_samples} polynomials, {roots} roots, {steps} constructed and {searched} searched "
          f"factorizations, {bad} failures, {time.perf_counter() - start:.1f}s")
    print("multiplicity histogram:", dict(sorted(histogram.items())))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--config", help="key=value harness config")
    ap.add_argument("--max-degree", type=int, default=6, help="degree bound for the S sweep")
    args = ap.parse_args()
    cfg = HarnessConfig.load(args.config) if args.config else HarnessConfig()
    exhaustive_signs(args.max_degree)
    sampled_tr(cfg)


if __name__ == "__main__":
    main()
