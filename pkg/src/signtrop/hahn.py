"""Finitely-supported Hahn series ``sum a_g t^g`` with rational exponents.

This is the subring of ``R[[t^Q]]`` (and ``C[[t^Q]]``) where every operation
used here -- ring arithmetic, valuations, residues, the ordering -- is exact
and terminates. There is no inversion and no root finding.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .hyperfield import INF, TR, ParseError, TRElem, as_rat
from .hyperpoly import HPoly

__all__ = [
    "HahnReal", "HahnComplex", "HahnPoly", "hahn_add", "hahn_mul", "hahn_neg", "v_R", "v_C",
    "hahn_positive", "hahn_less", "poly_valuation", "t",
]


def _canon(items: Iterable[tuple[Fraction, Fraction]]) -> tuple:
    acc: dict[Fraction, Fraction] = {}
    for e, c in items:
        e, c = as_rat(e), as_rat(c)
        acc[e] = acc.get(e, 0) + c
    return tuple(sorted((e, c) for e, c in acc.items() if c != 0))


@dataclass(frozen=True)
class HahnReal:
    """A finite sum of real (rational) monomials ``c t^e``.

    ``terms`` is the canonical tuple of ``(exponent, coefficient)`` pairs,
    sorted by exponent with no zero coefficients.
    """

    terms: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "terms", _canon(self.terms))

    @classmethod
    def monomial(cls, coef=1, exp=0) -> HahnReal:
        return cls(((as_rat(exp), as_rat(coef)),))

    @classmethod
    def const(cls, c) -> HahnReal:
        return cls.monomial(c, 0)

    @classmethod
    def from_dict(cls, m: Mapping) -> HahnReal:
        return cls(tuple((e, c) for e, c in m.items()))

    @staticmethod
    def coerce(x) -> HahnReal:
        if isinstance(x, HahnReal):
            return x
        return HahnReal.const(x)

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, exp) -> Fraction:
        exp = as_rat(exp)
        for e, c in self.terms:
            if e == exp:
                return c
        return Fraction(0)

    @property
    def valuation(self):
        return self.terms[0][0] if self.terms else INF

    @property
    def leading_coefficient(self) -> Fraction:
        return self.terms[0][1] if self.terms else Fraction(0)

    def shift(self, e) -> HahnReal:
        """Multiply by ``t^e``."""
        e = as_rat(e)
        return HahnReal(tuple((x + e, c) for x, c in self.terms))

    def scale(self, k) -> HahnReal:
        k = as_rat(k)
        return HahnReal(tuple((e, c * k) for e, c in self.terms))

    def __neg__(self) -> HahnReal:
        return HahnReal(tuple((e, -c) for e, c in self.terms))

    def __add__(self, other) -> HahnReal:
        other = HahnReal.coerce(other)
        return HahnReal(self.terms + other.terms)

    __radd__ = __add__

    def __sub__(self, other) -> HahnReal:
        return self + (-HahnReal.coerce(other))

    def __rsub__(self, other) -> HahnReal:
        return HahnReal.coerce(other) - self

    def __mul__(self, other) -> HahnReal:
        other = HahnReal.coerce(other)
        return HahnReal(tuple((e1 + e2, c1 * c2) for e1, c1 in self.terms for e2, c2 in other.terms))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> HahnReal:
        out = HahnReal.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __lt__(self, other) -> bool:
        return hahn_less(self, HahnReal.coerce(other))

    def __gt__(self, other) -> bool:
        return hahn_less(HahnReal.coerce(other), self)

    def __le__(self, other) -> bool:
        return not self > other

    def __ge__(self, other) -> bool:
        return not self < other

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k, (e, c) in enumerate(self.terms):
            mag = abs(c)
            body = f"t^({e})" if mag == 1 else f"{mag}*t^({e})"
            if k == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return f"HahnReal({self})"

    @classmethod
    def parse(cls, text: str, column: int = 1, line: int = 1) -> HahnReal:
        return _HahnParser(text, column, line).parse()


def t(exp=1, coef=1) -> HahnReal:
    """Shorthand for the monomial ``coef * t^exp``."""
    return HahnReal.monomial(coef, exp)


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<op>[-+*^()/])|(?P<t>t))")


class _HahnParser:
    """Sums of terms ``[coef][*]t^exp``, ``coef``, or ``t``; exponents may be parenthesized."""

    def __init__(self, text: str, column: int, line: int):
        self.text = text
        self.col0 = column
        self.line = line
        self.toks: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                self.fail("unexpected character", pos + len(text[pos:]) - len(text[pos:].lstrip()))
            kind = m.lastgroup
            start = m.start(kind)
            self.toks.append((kind, m.group(kind), start))
            pos = m.end()
        self.i = 0

    def fail(self, msg, pos=None):
        if pos is None:
            pos = self.toks[self.i][2] if self.i < len(self.toks) else len(self.text)
        raise ParseError(msg, column=self.col0 + pos, line=self.line)

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None, len(self.text))

    def take(self, kind, value=None):
        k, v, _ = self.peek()
        if k != kind or (value is not None and v != value):
            self.fail(f"expected {value or kind}")
        self.i += 1
        return v

    def rational(self) -> Fraction:
        sign = 1
        k, v, _ = self.peek()
        if k == "op" and v in "+-":
            self.i += 1
            sign = -1 if v == "-" else 1
        return sign * Fraction(self.take("num"))

    def parse(self) -> HahnReal:
        if not self.toks:
            self.fail("empty series")
        out = []
        sign = 1
        k, v, _ = self.peek()
        if k == "op" and v in "+-":
            self.i += 1
            sign = -1 if v == "-" else 1
        while True:
            out.append(self.term(sign))
            k, v, _ = self.peek()
            if k is None:
                break
            if k == "op" and v in "+-":
                self.i += 1
                sign = -1 if v == "-" else 1
                continue
            self.fail("expected + or -")
        return HahnReal(tuple(out))

    def term(self, sign) -> tuple[Fraction, Fraction]:
        coef = Fraction(1)
        k, v, _ = self.peek()
        if k == "num":
            coef = Fraction(self.take("num"))
            k, v, _ = self.peek()
            if k == "op" and v == "*":
                self.i += 1
            elif k != "t":
                return (Fraction(0), sign * coef)
        self.take("t")
        exp = Fraction(1)
        k, v, _ = self.peek()
        if k == "op" and v == "^":
            self.i += 1
            k, v, _ = self.peek()
            if k == "op" and v == "(":
                self.i += 1
                exp = self.rational()
                self.take("op", ")")
            else:
                exp = self.rational()
        return (exp, sign * coef)


@dataclass(frozen=True)
class HahnComplex:
    re: HahnReal = HahnReal()
    im: HahnReal = HahnReal()

    def __add__(self, other: HahnComplex) -> HahnComplex:
        return HahnComplex(self.re + other.re, self.im + other.im)

    def __mul__(self, other: HahnComplex) -> HahnComplex:
        return HahnComplex(self.re * other.re - self.im * other.im,
                           self.re * other.im + self.im * other.re)

    def __neg__(self) -> HahnComplex:
        return HahnComplex(-self.re, -self.im)


def hahn_add(a: HahnReal, b: HahnReal) -> HahnReal:
    return a + b


def hahn_mul(a: HahnReal, b: HahnReal) -> HahnReal:
    return a * b


def hahn_neg(a: HahnReal) -> HahnReal:
    return -a


def v_R(a: HahnReal):
    """Signed valuation: ``(sign of leading coefficient, leading exponent)``."""
    if not a:
        return INF
    e, c = a.terms[0]
    return TRElem(1 if c > 0 else -1, e)


def v_C(z: HahnComplex):
    exps = [e for e, _ in z.re.terms] + [e for e, _ in z.im.terms]
    return min(exps) if exps else INF


def hahn_positive(a: HahnReal) -> bool:
    return bool(a) and a.leading_coefficient > 0


def hahn_less(a: HahnReal, b: HahnReal) -> bool:
    return hahn_positive(b - a)


@dataclass(frozen=True)
class HahnPoly:
    """Polynomial ``c_0 + ... + c_n x^n`` with :class:`HahnReal` coefficients."""

    coeffs: tuple = ()

    def __post_init__(self):
        cs = [HahnReal.coerce(c) for c in self.coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def x_minus(cls, root) -> HahnPoly:
        return cls((-HahnReal.coerce(root), 1))

    @classmethod
    def from_roots(cls, roots: Iterable, lead=1) -> HahnPoly:
        out = cls((lead,))
        for r in roots:
            out = out * cls.x_minus(r)
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> HahnReal:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else HahnReal()

    def __add__(self, other: HahnPoly) -> HahnPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        return HahnPoly(tuple(self[i] + other[i] for i in range(n)))

    def __neg__(self) -> HahnPoly:
        return HahnPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: HahnPoly) -> HahnPoly:
        return self + (-other)

    def __mul__(self, other) -> HahnPoly:
        if not isinstance(other, HahnPoly):
            other = HahnPoly((other,))
        if not self.coeffs or not other.coeffs:
            return HahnPoly()
        out = [HahnReal()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return HahnPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> HahnPoly:
        out = HahnPoly((1,))
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, x) -> HahnReal:
        acc = HahnReal()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divide_linear(self, root) -> tuple[HahnPoly, HahnReal]:
        """Synthetic division by ``x - root``: ``(quotient, remainder)``."""
        root = HahnReal.coerce(root)
        if self.degree < 1:
            return HahnPoly(), self[0]
        q = [HahnReal()] * self.degree
        acc = HahnReal()
        for i in range(self.degree, 0, -1):
            acc = acc * root + self.coeffs[i]
            q[i - 1] = acc
        rem = acc * root + self.coeffs[0]
        return HahnPoly(tuple(q)), rem

    def substitute_neg(self) -> HahnPoly:
        return HahnPoly(tuple(-c if i % 2 else c for i, c in enumerate(self.coeffs)))

    def __str__(self):
        return "; ".join(str(c) for c in self.coeffs) if self.coeffs else "0"

    @classmethod
    def parse(cls, text: str, line: int = 1) -> HahnPoly:
        coeffs, col = [], 1
        for piece in text.split(";"):
            coeffs.append(HahnReal.parse(piece, column=col, line=line))
            col += len(piece) + 1
        return cls(tuple(coeffs))


def poly_valuation(P: HahnPoly) -> HPoly:
    """Coefficientwise ``v_R``; a polynomial over ``TR``."""
    return HPoly(TR, tuple(v_R(c) for c in P.coeffs))
