"""Newton polygons, initial forms and sign changes over ``T`` and ``TR``."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .hyperfield import INF, TR, DomainError, K, S, T, TRElem, as_rat
from .hyperpoly import HPoly, eval_contains_zero

Point = tuple[int, Fraction]


@dataclass(frozen=True)
class Edge:
    left: Point
    right: Point
    slope: Fraction
    hlen: int
    support: tuple[int, ...]


@dataclass(frozen=True)
class NewtonPolygon:
    """Bounded part of the lower convex hull of ``(i, v(c_i))``.

    ``vertices`` excludes collinear points; those only show up in the
    ``support`` of the edge they lie on.
    """

    points: tuple[Point, ...]
    vertices: tuple[Point, ...]
    edges: tuple[Edge, ...]

    def edge_with_slope(self, slope) -> Edge | None:
        slope = as_rat(slope)
        return next((e for e in self.edges if e.slope == slope), None)


def _valuations(p: HPoly) -> list[Point]:
    if p.field is T:
        return [(i, c) for i, c in enumerate(p.coeffs) if c is not INF]
    if p.field is TR:
        return [(i, c.val) for i, c in enumerate(p.coeffs) if c is not INF]
    raise DomainError(f"Newton polygons are defined over T and TR, not {p.field.name}")


def _cross(o: Point, a: Point, b: Point) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def lower_hull(points: Iterable[Point]) -> list[Point]:
    """Monotone chain over exact rationals; collinear middle points dropped."""
    hull: list[Point] = []
    for pt in sorted(points):
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], pt) <= 0:
            hull.pop()
        hull.append(pt)
    return hull


def newton_polygon(p: HPoly) -> NewtonPolygon:
    if p.is_zero:
        raise DomainError("the zero polynomial has no Newton polygon")
    pts = _valuations(p)
    verts = lower_hull(pts)
    edges = []
    for (x0, y0), (x1, y1) in zip(verts, verts[1:]):
        slope = Fraction(y1 - y0, x1 - x0)
        on = tuple(i for i, v in pts if x0 <= i <= x1 and v == y0 + slope * (i - x0))
        edges.append(Edge((x0, y0), (x1, y1), slope, x1 - x0, on))
    return NewtonPolygon(tuple(pts), tuple(verts), tuple(edges))


def initial_form_T(p: HPoly, a) -> HPoly:
    """``In_a(p)``: the monomials minimizing ``c_i + a i``, as a ``K`` polynomial."""
    if p.field is not T:
        raise DomainError("initial_form_T expects a polynomial over T")
    if p.is_zero:
        raise DomainError("zero polynomial")
    a = as_rat(a)
    weights = {i: c + a * i for i, c in enumerate(p.coeffs) if c is not INF}
    C = min(weights.values())
    return HPoly(K, tuple(1 if weights.get(i) == C else 0 for i in range(len(p.coeffs))))


def initial_form_TR(p: HPoly, a) -> HPoly:
    """``In_a(p)``: signs of the monomials minimizing ``|c_i| + a i``."""
    if p.field is not TR:
        raise DomainError("initial_form_TR expects a polynomial over TR")
    if p.is_zero:
        raise DomainError("zero polynomial")
    a = as_rat(a)
    weights = {i: c.val + a * i for i, c in enumerate(p.coeffs) if c is not INF}
    C = min(weights.values())
    return HPoly(S, tuple(p.coeffs[i].sign if weights.get(i) == C else 0 for i in range(len(p.coeffs))))


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def sign_changes(p) -> int:
    """Number of sign flips in the coefficient sequence, zeros skipped.

    Accepts an ``S`` polynomial or any sequence of real numbers.
    """
    if isinstance(p, HPoly):
        if p.field is not S:
            raise DomainError("sign_changes expects an S polynomial")
        signs = p.coeffs
    else:
        signs = [_sign(x) for x in p]
    nz = [s for s in signs if s]
    return sum(1 for u, v in zip(nz, nz[1:]) if u != v)


def delta_at(p: HPoly, a) -> int:
    """Sign changes along the edge of slope ``-|a|``, or 0 when ``a`` is no root.

    Meaningful for positive ``a``; the additive zero has no edge and gives 0.
    """
    if p.field is not TR:
        raise DomainError("delta_at expects a polynomial over TR")
    if a is INF or not eval_contains_zero(p, a):
        return 0
    return sign_changes(initial_form_TR(p, a.val))


def tr_roots(p: HPoly) -> list:
    """All roots of a nonzero ``TR`` polynomial.

    A nonzero root must have ``|a| = -slope`` of some edge; both signs are
    tested. The additive zero is a root iff ``c_0`` is.
    """
    if p.field is not TR:
        raise DomainError("tr_roots expects a polynomial over TR")
    out = [INF] if p[0] is INF else []
    for e in newton_polygon(p).edges:
        for s in (1, -1):
            a = TRElem(s, -e.slope)
            if eval_contains_zero(p, a):
                out.append(a)
    return out
