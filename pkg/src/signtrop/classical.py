"""Classical side: Newton-polygon root counts over real Hahn series.

The verification pipeline for one edge of slope ``-r``::

    P  --edge_transform(r, gamma)-->  R = t^-gamma P(t^r x)  --residue-->  R(t=0) in Q[x]

and the positive roots of the residue are counted exactly with Sturm
sequences. :func:`lift` runs the converse direction: from a ``TR``
polynomial to a Hahn polynomial realizing the maximal root counts.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .hahn import HahnPoly, HahnReal, poly_valuation
from .hyperfield import INF, MORPHISMS, TR, DomainError, ParseError, S, TRElem, as_rat
from .hyperpoly import HPoly, mult, substitute_neg
from .newton import Edge, initial_form_TR, newton_polygon, sign_changes
from .ratpoly import RatPoly, count_negative_roots, count_positive_roots, poly_gcd

__all__ = [
    "RatPoly", "EdgeReport", "edge_transform", "residue", "count_positive_roots",
    "verify_theorem_B", "converse_descartes", "lift", "ConstructionFailed", "edge_gamma",
    "edge_residue", "lift_root_counts", "reports_json", "FactoredHahnPoly",
]


class ConstructionFailed(RuntimeError):
    """A Sturm-verified construction did not succeed within its budget."""


@dataclass(frozen=True)
class EdgeReport:
    edge: Edge
    delta: int
    root_count: int

    @property
    def bound_ok(self) -> bool:
        return self.delta >= self.root_count

    @property
    def parity_ok(self) -> bool:
        return (self.delta - self.root_count) % 2 == 0

    def line(self) -> str:
        return (f"slope={self.edge.slope} hlen={self.edge.hlen} delta={self.delta} "
                f"roots={self.root_count} bound={'ok' if self.bound_ok else 'FAIL'} "
                f"parity={'ok' if self.parity_ok else 'FAIL'}")

    def to_dict(self) -> dict:
        e = asdict(self.edge)
        return {
            "slope": str(self.edge.slope),
            "hlen": self.edge.hlen,
            "left": [e["left"][0], str(e["left"][1])],
            "right": [e["right"][0], str(e["right"][1])],
            "support": list(self.edge.support),
            "delta": self.delta,
            "roots": self.root_count,
            "bound_ok": self.bound_ok,
            "parity_ok": self.parity_ok,
        }


def reports_json(reports: Sequence[EdgeReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2)


def edge_gamma(P: HahnPoly, r) -> Fraction:
    """Common valuation ``min v(c_i) + i r`` of the monomials on the edge of slope ``-r``."""
    r = as_rat(r)
    return min(c.valuation + i * r for i, c in enumerate(P.coeffs) if c)


def edge_transform(P: HahnPoly, r, gamma) -> HahnPoly:
    """``R(x) = t^-gamma P(t^r x)``; must land in ``O[x]`` with the edge on the axis."""
    r, gamma = as_rat(r), as_rat(gamma)
    R = HahnPoly(tuple(c.shift(i * r - gamma) for i, c in enumerate(P.coeffs)))
    vals = [c.valuation for c in R.coeffs if c]
    if not vals or min(vals) != 0:
        raise DomainError(
            f"gamma={gamma} does not put the edge of slope {-r} on the axis "
            f"(minimal valuation after transform: {min(vals) if vals else 'inf'})"
        )
    return R


def residue(R: HahnPoly) -> RatPoly:
    """Constant terms of the coefficients, i.e. reduction mod the maximal ideal."""
    for i, c in enumerate(R.coeffs):
        if c and c.valuation < 0:
            raise DomainError(f"coefficient {i} has negative valuation {c.valuation}")
    return RatPoly(tuple(c.coefficient(0) for c in R.coeffs))


def verify_theorem_B(P: HahnPoly, known_roots: Iterable[tuple[HahnReal, int]]) -> list[EdgeReport]:
    """Compare, per edge, sign changes of the initial form with known positive roots.

    ``known_roots`` must be every real root of ``P`` with its multiplicity;
    each one is checked by repeated synthetic division. Roots are attributed
    to the edge whose slope is minus their valuation.
    """
    known = [(HahnReal.coerce(a), int(m)) for a, m in known_roots]
    rest = P
    for a, m in known:
        for _ in range(m):
            rest, rem = rest.divide_linear(a)
            if rem:
                raise DomainError(f"{a} is not a root of multiplicity {m}")
    p = poly_valuation(P)
    reports = []
    for e in newton_polygon(p).edges:
        r = -e.slope
        delta = sign_changes(initial_form_TR(p, r))
        count = sum(m for a, m in known if a > 0 and a.valuation == r)
        reports.append(EdgeReport(e, delta, count))
    return reports


def _simple_nonzero_roots(q: RatPoly) -> bool:
    core = q
    while core[0] == 0:
        core = RatPoly(core.coeffs[1:])
    return poly_gcd(core, core.derivative()).degree == 0


def converse_descartes(s: HPoly, base: int = 4, attempts: int = 12) -> RatPoly:
    """A rational polynomial with sign pattern exactly ``s`` and maximal real roots.

    Coefficients are ``s_i * B^(n^2 - i^2)``: the exponents are strictly
    concave, so for large ``B`` each pair of consecutive nonzero
    coefficients governs its own cluster of roots, which realizes the
    Descartes bound for ``s`` and for ``s(-x)`` at once. ``B`` is doubled
    until Sturm counting confirms the result.
    """
    if s.field is not S:
        raise DomainError("converse_descartes expects a sign polynomial")
    if s.is_zero:
        raise DomainError("zero polynomial")
    want_pos = sign_changes(s)
    want_neg = sign_changes(substitute_neg(s))
    n = s.degree
    B = base
    for _ in range(attempts):
        q = RatPoly(tuple(c * B ** (n * n - i * i) for i, c in enumerate(s.coeffs)))
        if (q.signs() == list(s.coeffs) and count_positive_roots(q) == want_pos
                and count_negative_roots(q) == want_neg and _simple_nonzero_roots(q)):
            return q
        B *= 2
    raise ConstructionFailed(
        f"no lift of sign pattern {s} with {want_pos} positive / {want_neg} negative "
        f"simple roots found up to base {B // 2}"
    )


def _shifted_rat(R: RatPoly, r: Fraction) -> HahnPoly:
    """``R(t^-r x)`` as a Hahn polynomial."""
    return HahnPoly(tuple(HahnReal.monomial(c, -i * r) for i, c in enumerate(R.coeffs)))


def lift(p: HPoly) -> HahnPoly:
    """A Hahn polynomial ``P`` with ``v_R(P) = p`` and maximal root counts per edge.

    Product of edge factors ``R_sigma(t^-r x)`` (each from
    :func:`converse_descartes` applied to the edge's sign pattern), a power
    of ``x`` for the zero roots, then scaled by ``+-t^delta`` to match a
    vertex; coefficients off the edges are replaced by the monomial
    ``sign(c_i) t^|c_i|`` (or 0) so the valuation matches ``p`` everywhere.
    """
    if p.field is S:
        p = p.map(MORPHISMS["S->TR"])
    if p.field is not TR:
        raise DomainError("lift expects a polynomial over TR")
    if p.is_zero:
        raise DomainError("zero polynomial")
    poly = newton_polygon(p)
    m = p.support()[0]
    P = HahnPoly((0,) * m + (1,))
    on_edge = set()
    for e in poly.edges:
        r = -e.slope
        signs = initial_form_TR(p, r).coeffs[e.left[0]: e.right[0] + 1]
        R = converse_descartes(HPoly(S, signs))
        P = P * _shifted_rat(R, r)
        on_edge.update(e.support)

    v0 = p.coeffs[m]
    lead0 = P[m]
    scale = HahnReal.monomial(v0.sign * (1 if lead0.leading_coefficient > 0 else -1),
                              v0.val - lead0.valuation)
    P = P * scale
    coeffs = []
    for i, c in enumerate(p.coeffs):
        if i in on_edge or (i == m and not poly.edges):
            coeffs.append(P[i])
        elif c is INF:
            coeffs.append(HahnReal())
        else:
            coeffs.append(HahnReal.monomial(c.sign, c.val))
    out = HahnPoly(tuple(coeffs))
    if poly_valuation(out) != p:
        raise ConstructionFailed(f"lift of {p} does not valuate back: {poly_valuation(out)}")
    return out


def edge_residue(P: HahnPoly, r) -> RatPoly:
    """Residue of ``P`` along the edge of slope ``-r``."""
    return residue(edge_transform(P, r, edge_gamma(P, r)))


def lift_root_counts(p: HPoly, P: HahnPoly) -> list[tuple[Fraction, int, int, int, int]]:
    """Per edge: ``(r, positive, mult at (+1,r), negative, mult at (-1,r))``."""
    out = []
    for e in newton_polygon(p).edges:
        r = -e.slope
        res = edge_residue(P, r)
        out.append((r, count_positive_roots(res), mult(p, TRElem(1, r)),
                    count_negative_roots(res), mult(p, TRElem(-1, r))))
    return out


@dataclass(frozen=True)
class FactoredHahnPoly:
    """``lead * prod (x - a)^m * prod (x^2 + b x + c)``.

    The quadratic factors are meant to have negative discriminant, i.e. no
    real roots, so ``roots`` lists every real root of the expansion.

    Text form, one factor per line (``;`` also separates)::

        lead: 1
        root: t^(1)
        root: 1 @ 2
        quad: t^(2), t^(1)
    """

    lead: HahnReal
    roots: tuple[tuple[HahnReal, int], ...] = ()
    quadratics: tuple[tuple[HahnReal, HahnReal], ...] = ()

    def expand(self) -> HahnPoly:
        P = HahnPoly((self.lead,))
        for a, m in self.roots:
            P = P * HahnPoly.x_minus(a) ** m
        for b, c in self.quadratics:
            P = P * HahnPoly((c, b, 1))
        return P

    def negate_x(self) -> FactoredHahnPoly:
        """Factors of ``P(-x)``, normalized back to monic factors."""
        sign = -1 if (sum(m for _, m in self.roots) + 2 * len(self.quadratics)) % 2 else 1
        return FactoredHahnPoly(
            self.lead.scale(sign),
            tuple((-a, m) for a, m in self.roots),
            tuple((-b, c) for b, c in self.quadratics),
        )

    def verify(self) -> list[EdgeReport]:
        return verify_theorem_B(self.expand(), self.roots)

    def __str__(self):
        lines = [f"lead: {self.lead}"]
        lines += [f"root: {a}" + (f" @ {m}" if m != 1 else "") for a, m in self.roots]
        lines += [f"quad: {b}, {c}" for b, c in self.quadratics]
        return "\n".join(lines)

    @classmethod
    def parse(cls, text: str) -> FactoredHahnPoly:
        lead = HahnReal.const(1)
        roots: list = []
        quads: list = []
        for lineno, raw in enumerate(text.replace(";", "\n").splitlines(), start=1):
            line = raw.split("#", 1)[0]
            if not line.strip():
                continue
            key, sep, body = line.partition(":")
            if not sep:
                raise ParseError("expected 'lead:', 'root:' or 'quad:'", column=1, line=lineno)
            key = key.strip()
            col = len(key) + 2 + (len(raw) - len(raw.lstrip()))
            if key == "lead":
                lead = HahnReal.parse(body, column=col, line=lineno)
            elif key == "root":
                series, at, mult_text = body.partition("@")
                m = 1
                if at:
                    if not mult_text.strip().isdigit() or int(mult_text) < 1:
                        raise ParseError("multiplicity must be a positive integer",
                                         column=col + len(series) + 1, line=lineno)
                    m = int(mult_text)
                roots.append((HahnReal.parse(series, column=col, line=lineno), m))
            elif key == "quad":
                b, comma, c = body.partition(",")
                if not comma:
                    raise ParseError("quad needs 'b, c'", column=col, line=lineno)
                quads.append((HahnReal.parse(b, column=col, line=lineno),
                              HahnReal.parse(c, column=col + len(b) + 1, line=lineno)))
            else:
                raise ParseError(f"unknown factor kind {key!r}", column=1, line=lineno)
        if not lead:
            raise ParseError("leading coefficient must be nonzero", line=1)
        return cls(lead, tuple(roots), tuple(quads))
