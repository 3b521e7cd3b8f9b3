"""Randomized checks of the hyperring axioms and of morphism laws.

Every check returns an :class:`AxiomReport`; nothing raises on a failed law so
a harness can print the full picture.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from itertools import islice

from .config import HarnessConfig
from .generators import random_tr_poly
from .hyperfield import (
    INF, MORPHISMS, TR, BalancedRay, FiniteSet, Hyperfield, K, Morphism, S, T, TRay, TRElem,
)
from .hyperpoly import factor_step, factorization_pushes_forward, factorizations
from .newton import tr_roots


@dataclass
class LawResult:
    law: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, ok: bool, witness) -> None:
        self.checked += 1
        if not ok and len(self.failures) < 5:
            self.failures.append(witness)
        elif not ok:
            self.failures.append(None)


@dataclass
class AxiomReport:
    subject: str
    laws: dict[str, LawResult] = field(default_factory=dict)

    def law(self, name: str) -> LawResult:
        return self.laws.setdefault(name, LawResult(name))

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.laws.values())

    def lines(self) -> list[str]:
        out = []
        for r in self.laws.values():
            status = "ok" if r.ok else f"FAIL ({len(r.failures)})"
            out.append(f"{self.subject:>6} {r.law:<14} {r.checked:>7} {status}")
        return out


def check_hyperfield(H: Hyperfield, samples: int, rng: random.Random, grid=None) -> AxiomReport:
    """M1-M3, H1-H5 and existence of inverses on ``samples`` random triples."""
    rep = AxiomReport(H.name)
    pool = H.sample_grid(grid)
    draw = lambda: H.sample(rng, grid)  # noqa: E731
    zero, one = H.zero, H.one

    for _ in range(samples):
        a, b, c = draw(), draw(), draw()

        rep.law("M1-assoc").record(H.mul(H.mul(a, b), c) == H.mul(a, H.mul(b, c)), (a, b, c))
        rep.law("M1-comm").record(H.mul(a, b) == H.mul(b, a), (a, b))
        rep.law("M2").record(H.mul(one, a) == a, a)
        rep.law("M3").record(H.mul(zero, a) == zero, a)
        u = a
        while H.is_zero(u):
            u = draw()
        try:
            has_inverse = H.mul(u, H.inv(u)) == one
        except ZeroDivisionError:
            has_inverse = False
        rep.law("inverse").record(has_inverse, u)

        rep.law("H1-comm").record(H.add(a, b) == H.add(b, a), (a, b))
        left = H.add_set(H.add(a, b), c)
        right = H.add_set(H.add(b, c), a)
        rep.law("H1-assoc").record(left == right, (a, b, c))
        rep.law("H2").record(H.add(zero, a) == H.single(a), a)

        negs = [y for y in pool if H.contains(H.add(a, y), zero)]
        rep.law("H3").record(negs == [H.neg(a)], (a, negs))

        rep.law("H4").record(H.scale_set(a, H.add(b, c)) == H.add(H.mul(a, b), H.mul(a, c)), (a, b, c))

        # reversibility, with the sign on a: a in b+c  <=>  -b in -a+c
        rep.law("H5").record(
            H.contains(H.add(b, c), a) == H.contains(H.add(H.neg(a), c), H.neg(b)), (a, b, c)
        )
    return rep


def check_morphism(f: Morphism, samples: int, rng: random.Random, grid=None) -> AxiomReport:
    """``f(0)=0``, ``f(1)=1``, multiplicativity and ``f(a [+] b) <= f(a) [+] f(b)``."""
    rep = AxiomReport(f.name)
    src, dst = f.source, f.target

    def draw():
        while True:
            x = src.sample(rng, grid)
            if f.domain(x):
                return x

    rep.law("zero").record(f(src.zero) == dst.zero, src.zero)
    rep.law("one").record(f(src.one) == dst.one, src.one)
    for _ in range(samples):
        a, b = draw(), draw()
        rep.law("mul").record(f(src.mul(a, b)) == dst.mul(f(a), f(b)), (a, b))
        rep.law("subset").record(dst.is_subset(f.image(src.add(a, b)), dst.add(f(a), f(b))), (a, b))
    return rep


def enumerate_ray(A, grid) -> list:
    """Grid points of a symbolic hyperset, for elementwise cross-checks."""
    if isinstance(A, FiniteSet):
        return list(A.elements)
    if isinstance(A, TRay):
        return [INF] + [v for v in grid if v >= A.a]
    if isinstance(A, BalancedRay):
        return [INF] + [TRElem(s, v) for v in grid if v >= A.r for s in (1, -1)]
    raise TypeError(A)


def check_pushforward(samples: int, rng: random.Random, config: HarnessConfig | None = None,
                      searched: int = 1) -> AxiomReport:
    """Images of ``TR`` factorizations under ``sign`` and ``abs`` are factorizations.

    Factorizations come from random polynomials: the explicit construction at
    every positive root, plus up to ``searched`` grid-search results at every
    root. Stops after ``samples`` factorizations.
    """
    config = config or HarnessConfig()
    rep = AxiomReport("pushfw")
    done = 0
    while done < samples:
        p = random_tr_poly(rng, config)
        for a in tr_roots(p):
            qs = list(islice(factorizations(p, a), searched))
            if a is not INF and a.sign == 1:
                qs.append(factor_step(p, a))
            for q in qs:
                for name in ("sign", "abs"):
                    rep.law(name).record(factorization_pushes_forward(p, a, q, MORPHISMS[name]), (p, a, q))
                done += 1
    return rep


def run_suite(samples: int, seed: int, grid=None, pushforward: bool = True) -> list[AxiomReport]:
    """All four hyperfields, every named morphism and the pushforward check."""
    reports = []
    for i, H in enumerate((K, S, T, TR)):
        reports.append(check_hyperfield(H, samples, random.Random(f"{seed}:{i}"), grid))
    for name, f in MORPHISMS.items():
        reports.append(check_morphism(f, samples, random.Random(f"{seed}:{name}"), grid))
    if pushforward:
        reports.append(check_pushforward(samples, random.Random(f"{seed}:pushforward")))
    return reports
