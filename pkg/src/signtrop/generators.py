"""Seeded random instances for the randomized harnesses."""

from __future__ import annotations

import random
from fractions import Fraction

from .classical import FactoredHahnPoly
from .config import HarnessConfig
from .hahn import HahnReal
from .hyperfield import INF, TR, TRElem
from .hyperpoly import HPoly


def rng_for(config: HarnessConfig, stream: str, index: int) -> random.Random:
    """Independent, reproducible stream per (seed, purpose, instance)."""
    return random.Random(f"{config.seed}:{stream}:{index}")


def random_tr_poly(rng: random.Random, config: HarnessConfig, min_degree: int = 1) -> HPoly:
    """Random nonzero ``TR`` polynomial with valuations on ``config.valuation_grid``."""
    n = rng.randint(min_degree, config.max_degree)
    coeffs = []
    for i in range(n + 1):
        if i < n and rng.random() < config.zero_probability:
            coeffs.append(INF)
        else:
            coeffs.append(TRElem(rng.choice((1, -1)), rng.choice(config.valuation_grid)))
    return HPoly(TR, tuple(coeffs))


def random_series(rng: random.Random, config: HarnessConfig, allow_zero: bool = False) -> HahnReal:
    lo = 0 if allow_zero else 1
    k = rng.randint(lo, config.max_terms)
    exps = rng.sample(config.exponent_grid, min(k, len(config.exponent_grid)))
    return HahnReal.from_dict({e: rng.choice(config.coefficient_grid) for e in exps})


def random_positive_series(rng: random.Random, config: HarnessConfig) -> HahnReal:
    s = random_series(rng, config)
    return s if s.leading_coefficient > 0 else -s


def random_factored(rng: random.Random, config: HarnessConfig) -> FactoredHahnPoly:
    """``c * prod (x - a_i)^m_i * prod (x^2 + b x + c)`` with no real roots in the quadratics.

    Each quadratic is ``(x + b/2)^2 + d`` with ``d > 0``, i.e. ``c = b^2/4 + d``,
    so its discriminant ``-4d`` is negative for every ordering-compatible ``t``.
    """
    lead = HahnReal.monomial(rng.choice(config.coefficient_grid), rng.choice(config.exponent_grid))
    total = rng.randint(1, config.max_factors)
    roots: dict[HahnReal, int] = {}
    quads = []
    for _ in range(total):
        if rng.random() < 0.25:
            b = random_series(rng, config, allow_zero=True)
            d = random_positive_series(rng, config)
            quads.append((b, b * b * HahnReal.const(Fraction(1, 4)) + d))
        elif roots and rng.random() < config.repeat_probability:
            a = rng.choice(sorted(roots, key=str))
            roots[a] += 1
        else:
            a = random_series(rng, config, allow_zero=rng.random() < 0.05)
            roots[a] = roots.get(a, 0) + 1
    return FactoredHahnPoly(lead, tuple(roots.items()), tuple(quads))
