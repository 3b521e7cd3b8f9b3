"""Univariate polynomials over Q and exact real-root counting."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .hyperfield import DomainError, as_rat


@dataclass(frozen=True)
class RatPoly:
    coeffs: tuple = ()

    def __post_init__(self):
        cs = [as_rat(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def from_roots(cls, roots: Iterable, lead=1) -> RatPoly:
        out = cls((lead,))
        for r in roots:
            out = out * cls((-as_rat(r), 1))
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1]

    def __add__(self, other: RatPoly) -> RatPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        return RatPoly(tuple(self[i] + other[i] for i in range(n)))

    def __neg__(self) -> RatPoly:
        return RatPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: RatPoly) -> RatPoly:
        return self + (-other)

    def __mul__(self, other) -> RatPoly:
        if not isinstance(other, RatPoly):
            return RatPoly(tuple(c * as_rat(other) for c in self.coeffs))
        if not self or not other:
            return RatPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RatPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> RatPoly:
        out = RatPoly((1,))
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divmod(self, other: RatPoly) -> tuple[RatPoly, RatPoly]:
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 1)
        d = other.degree
        while len(rem) - 1 >= d and any(rem):
            k = len(rem) - 1 - d
            f = rem[-1] / other.lead
            q[k] = f
            for j, b in enumerate(other.coeffs):
                rem[j + k] -= f * b
            rem.pop()
            while rem and rem[-1] == 0:
                rem.pop()
        return RatPoly(tuple(q)), RatPoly(tuple(rem))

    def __mod__(self, other: RatPoly) -> RatPoly:
        return self.divmod(other)[1]

    def __floordiv__(self, other: RatPoly) -> RatPoly:
        q, r = self.divmod(other)
        if r:
            raise ValueError("inexact polynomial division")
        return q

    def derivative(self) -> RatPoly:
        return RatPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def monic(self) -> RatPoly:
        return self * (1 / self.lead) if self else self

    def substitute_neg(self) -> RatPoly:
        return RatPoly(tuple(-c if i % 2 else c for i, c in enumerate(self.coeffs)))

    def signs(self) -> list[int]:
        return [(c > 0) - (c < 0) for c in self.coeffs]

    def __str__(self):
        return "; ".join(str(c) for c in self.coeffs) if self.coeffs else "0"


def poly_gcd(a: RatPoly, b: RatPoly) -> RatPoly:
    """Monic gcd (zero if both inputs are zero)."""
    while b:
        a, b = b, a % b
    return a.monic()


def squarefree_decomposition(f: RatPoly) -> list[tuple[RatPoly, int]]:
    """Yun's algorithm: ``f = lc * prod g_k^k`` with ``g_k`` squarefree, coprime."""
    if not f:
        raise DomainError("zero polynomial")
    out = []
    fm = f.monic()
    a0 = poly_gcd(fm, fm.derivative())
    b = fm // a0
    c = fm.derivative() // a0
    d = c - b.derivative()
    k = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree > 0:
            out.append((a, k))
        b = b // a
        c = d // a
        d = c - b.derivative()
        k += 1
    return out


def sturm_sequence(f: RatPoly) -> list[RatPoly]:
    seq = [f, f.derivative()]
    while seq[-1]:
        r = seq[-2] % seq[-1]
        if not r:
            break
        seq.append(-r)
    return seq


def _variations(signs: list[int]) -> int:
    nz = [s for s in signs if s]
    return sum(1 for u, v in zip(nz, nz[1:]) if u != v)


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def distinct_roots_in_open_0_inf(f: RatPoly) -> int:
    """Distinct roots of ``f`` in ``(0, inf)`` via Sturm; ``f(0)`` may vanish."""
    if f.degree < 1:
        return 0
    while f[0] == 0:
        f = RatPoly(f.coeffs[1:])
    if f.degree < 1:
        return 0
    seq = sturm_sequence(f)
    at_zero = _variations([_sign(p[0]) for p in seq])
    at_inf = _variations([_sign(p.lead) for p in seq])
    return at_zero - at_inf


def count_positive_roots(q: RatPoly) -> int:
    """Roots in ``(0, inf)`` counted with multiplicity, exactly."""
    if not q:
        raise DomainError("the zero polynomial has every number as a root")
    return sum(k * distinct_roots_in_open_0_inf(g) for g, k in squarefree_decomposition(q))


def count_negative_roots(q: RatPoly) -> int:
    return count_positive_roots(q.substitute_neg())
