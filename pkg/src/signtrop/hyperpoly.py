"""Polynomials over a hyperfield: roots, factorizations and multiplicities.

``p in (x - a) q`` means, for ``p = sum c_i x^i`` of degree ``n`` and
``q = sum d_i x^i`` of degree ``n - 1``::

    c_0 = -a d_0,   c_i in (-a d_i) [+] d_{i-1}  (0 < i < n),   c_n = d_{n-1}

Multiplicity is the recursive quantity ``1 + max mult(q)`` over all such ``q``.
:func:`mult` evaluates it by the closed formulas (sign changes of initial
forms); :func:`mult_recursive` is the brute-force oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .hyperfield import (
    INF, MORPHISMS, TR, DomainError, Hyperfield, Morphism, ParseError, S, T, TRElem,
)

__all__ = [
    "HPoly", "Factorization", "SearchBudget", "SearchTruncated", "eval_contains_zero",
    "is_factorization", "factor_step", "mult", "mult_recursive", "substitute_neg",
    "scale_transform", "unscale_transform", "candidate_grid", "factorizations", "push_forward",
    "factorization_pushes_forward", "first_nonzero_index",
]


@dataclass(frozen=True)
class HPoly:
    """Dense polynomial ``c_0 + c_1 x + ... + c_n x^n`` over ``field``.

    Trailing additive zeros are trimmed on construction, so ``coeffs[-1]`` is
    never zero; the zero polynomial has ``coeffs == ()``.
    """

    field: Hyperfield
    coeffs: tuple

    def __post_init__(self):
        cs = list(self.coeffs)
        for c in cs:
            self.field.check_element(c)
        while cs and self.field.is_zero(cs[-1]):
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero

    def __len__(self):
        return len(self.coeffs)

    def support(self) -> list[int]:
        return [i for i, c in enumerate(self.coeffs) if not self.field.is_zero(c)]

    def __str__(self):
        if self.is_zero:
            return self.field.format(self.field.zero)
        return "; ".join(self.field.format(c) for c in self.coeffs)

    def __repr__(self):
        return f"HPoly({self.field.name}, {self})"

    @classmethod
    def parse(cls, field: Hyperfield, text: str) -> HPoly:
        coeffs = []
        col = 1
        for piece in text.split(";"):
            try:
                coeffs.append(field.parse(piece))
            except ParseError as exc:
                lead = len(piece) - len(piece.lstrip())
                raise ParseError(str(exc).split(": ", 1)[1], column=col + lead) from None
            col += len(piece) + 1
        return cls(field, tuple(coeffs))

    def map(self, f: Morphism) -> HPoly:
        return HPoly(f.target, tuple(f(c) for c in self.coeffs))


@dataclass(frozen=True)
class Factorization:
    a: object
    q: HPoly


class SearchTruncated(RuntimeError):
    """The factorization search hit its budget; the result would be a guess."""


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = 5_000_000


def _require_nonzero(p: HPoly) -> None:
    if p.is_zero:
        raise DomainError("the zero polynomial has no well-defined roots")


def first_nonzero_index(p: HPoly) -> int:
    _require_nonzero(p)
    return p.support()[0]


def eval_contains_zero(p: HPoly, a) -> bool:
    """Whether ``a`` is a root, i.e. ``0 in c_0 [+] c_1 a [+] ... [+] c_n a^n``."""
    _require_nonzero(p)
    H = p.field
    H.check_element(a)
    terms = [H.mul(c, H.power(a, i)) for i, c in enumerate(p.coeffs)]
    return H.sum_contains_zero(terms)


def is_factorization(p: HPoly, a, q: HPoly) -> bool:
    H = p.field
    n = p.degree
    if q.field is not H or n < 1 or q.degree != n - 1:
        return False
    neg_a = H.neg(a)
    if p[0] != H.mul(neg_a, q[0]):
        return False
    for i in range(1, n):
        if not H.contains(H.add(H.mul(neg_a, q[i]), q[i - 1]), p[i]):
            return False
    return p[n] == q[n - 1]


def substitute_neg(p: HPoly) -> HPoly:
    """``p(-x)``: coefficient ``c_i`` becomes ``(-1)^i c_i``."""
    H = p.field
    return HPoly(H, tuple(H.neg(c) if i % 2 else c for i, c in enumerate(p.coeffs)))


# ---------------------------------------------------------------------------
# the edge normalisation r(x) = gamma^-1 p(a x)


def scale_transform(p: HPoly, a) -> tuple[HPoly, TRElem]:
    """Move the edge of slope ``-|a|`` onto the x-axis.

    Returns ``(r, gamma)`` with ``r(x) = gamma^-1 p(a x)``, ``gamma = (+1, C)``
    and ``C = min |c_i| + i|a|``. ``r`` lies in ``O_TR[x]``.
    """
    _require_nonzero(p)
    if p.field is not TR:
        raise DomainError("scale_transform works over TR")
    if a is INF:
        raise DomainError("cannot rescale by the additive zero")
    C = min(c.val + i * a.val for i, c in enumerate(p.coeffs) if c is not INF)
    gamma = TRElem(1, C)
    ginv = TR.inv(gamma)
    r = tuple(TR.mul(ginv, TR.mul(c, TR.power(a, i))) for i, c in enumerate(p.coeffs))
    return HPoly(TR, r), gamma


def unscale_transform(r: HPoly, a, gamma) -> HPoly:
    """Inverse of :func:`scale_transform`: ``p(x) = gamma r(x / a)``."""
    ainv = TR.inv(a)
    return HPoly(TR, tuple(TR.mul(gamma, TR.mul(c, TR.power(ainv, i))) for i, c in enumerate(r.coeffs)))


def factor_step(p: HPoly, a) -> HPoly:
    """Explicit ``q`` with ``p in (x - a) q`` and one fewer sign change on the edge.

    ``a`` must be a root with sign ``+1``. Sign-hyperfield input is routed
    through the inclusion ``S -> TR`` and back.
    """
    if p.field is S:
        if a != 1:
            raise DomainError("factor_step needs the positive root +1")
        incl = MORPHISMS["S->TR"]
        q = factor_step(p.map(incl), TR.one)
        return q.map(MORPHISMS["sign"])
    if p.field is not TR:
        raise DomainError("factor_step works over TR (or S)")
    if a is INF or a.sign != 1:
        raise DomainError("factor_step needs a root with sign +1")
    if not eval_contains_zero(p, a):
        raise DomainError(f"{TR.format(a)} is not a root of {p}")

    r, gamma = scale_transform(p, a)
    c = r.coeffs
    n = r.degree
    on_axis = [i for i, x in enumerate(c) if x is not INF and x.val == 0]
    n1 = on_axis[0]
    lead = c[n1]
    first_change = next(i for i in on_axis if c[i].sign != lead.sign)

    d = []
    for i in range(n):
        if i < first_change and i <= n1:
            k = _argmin_first(c, range(i + 1))
            d.append(INF if k is None else TR.neg(c[k]))
        elif i < first_change:
            d.append(TR.neg(lead))
        else:
            d.append(c[_argmin_first(c, range(i + 1, n + 1))])
    s = HPoly(TR, tuple(d))
    # r in (x - 1) s  pulls back to  p in (x - a) q  with  q(x) = gamma a^-1 s(x / a)
    return unscale_transform(s, a, TR.mul(gamma, TR.inv(a)))


def _argmin_first(c: Sequence, indices) -> int:
    """Smallest index attaining the minimal valuation among ``indices``."""
    best = None
    for k in indices:
        if c[k] is INF:
            continue
        if best is None or c[k].val < c[best].val:
            best = k
    return best


# ---------------------------------------------------------------------------
# multiplicities


def mult(p: HPoly, a) -> int:
    """Root multiplicity by the closed formulas.

    * ``a`` the additive zero: index of the first nonzero coefficient
    * ``S``: sign changes of ``p`` (at ``+1``) or of ``p(-x)`` (at ``-1``)
    * ``K``: ``n - m`` for the extreme support indices ``m <= n``
    * ``T``: horizontal length of the edge of slope ``-a``
    * ``TR``: sign changes of the initial form on the edge of slope ``-|a|``,
      after ``x -> -x`` when ``a`` is negative
    """
    from . import newton

    _require_nonzero(p)
    H = p.field
    H.check_element(a)
    if H.is_zero(a):
        return first_nonzero_index(p)
    if H is TR:
        if a.sign == 1:
            return newton.delta_at(p, a)
        return newton.delta_at(substitute_neg(p), TR.neg(a))
    if H is T:
        sup = newton.initial_form_T(p, a).support()
        return sup[-1] - sup[0]
    if H is S:
        return newton.sign_changes(p if a == 1 else substitute_neg(p))
    if H.name == "K":
        sup = p.support()
        return sup[-1] - sup[0]
    return mult_recursive(p, a)


def candidate_grid(p: HPoly, a) -> list:
    """Coefficient candidates for the factorization search.

    Finite fields: every element. ``T``/``TR``: valuations
    ``|c_j| + m |a|`` for ``-n <= m <= n`` (both signs over ``TR``) and
    the zero. The explicit factor construction only ever produces values of
    this shape, which is what makes the grid search meaningful.
    """
    H = p.field
    if H is not T and H is not TR:
        return list(H.elements())
    n = p.degree
    vals = [c if H is T else c.val for c in p.coeffs if c is not INF]
    if H.is_zero(a):
        shifts = set(vals)
    else:
        step = a if H is T else a.val
        shifts = {v + m * step for v in vals for m in range(-n, n + 1)}
    out = [INF]
    for v in sorted(shifts):
        if H is T:
            out.append(v)
        else:
            out.extend((TRElem(1, v), TRElem(-1, v)))
    return out


class _Counter:
    def __init__(self, budget: SearchBudget):
        self.left = budget.max_nodes

    def tick(self, k: int = 1) -> None:
        self.left -= k
        if self.left < 0:
            raise SearchTruncated("factorization search exceeded its node budget")


def factorizations(p: HPoly, a, candidates=None, budget: SearchBudget | None = None,
                   _counter: _Counter | None = None) -> Iterator[HPoly]:
    """Every ``q`` over the candidate set with ``p in (x - a) q``.

    Exhaustive when ``candidates`` is the whole (finite) hyperfield. Backward
    reachability sets prune the depth-first search so each visited branch
    completes to a genuine factorization.
    """
    _require_nonzero(p)
    H = p.field
    n = p.degree
    if n < 1:
        return
    counter = _counter or _Counter(budget or SearchBudget())
    cands = list(candidate_grid(p, a) if candidates is None else candidates)
    neg_a = H.neg(a)
    c = p.coeffs

    if H.is_zero(a):
        if not H.is_zero(c[0]):
            return
        first = cands
    else:
        first = [H.mul(H.neg(c[0]), H.inv(a))]

    # reach[i]: admissible values of d_i from which d_{n-1} = c_n is reachable
    reach: list[list] = [[] for _ in range(n)]
    reach[n - 1] = [c[n]]
    for i in range(n - 2, -1, -1):
        pool = first if i == 0 else cands
        nxt = reach[i + 1]
        counter.tick(len(pool) * max(1, len(nxt)))
        reach[i] = [w for w in pool
                    if any(H.contains(H.add(H.mul(neg_a, u), w), c[i + 1]) for u in nxt)]
    if n == 1:
        reach[0] = [w for w in first if w == c[1]]
    if not reach[0]:
        return

    def extend(prefix):
        i = len(prefix)
        if i == n:
            yield HPoly(H, tuple(prefix))
            return
        counter.tick()
        for w in reach[i]:
            if H.contains(H.add(H.mul(neg_a, w), prefix[-1]), c[i]):
                yield from extend(prefix + [w])

    for d0 in reach[0]:
        if c[0] == H.mul(neg_a, d0):
            yield from extend([d0])


def mult_recursive(p: HPoly, a, candidates=None, budget: SearchBudget | None = None) -> int:
    """Multiplicity straight from the recursive definition, by search.

    With ``candidates=None`` the candidate set is :func:`candidate_grid`
    recomputed at each level. Over finite hyperfields this is the exact
    value; over ``TR`` it is a lower bound. Raises :class:`SearchTruncated`
    rather than return a partial answer.
    """
    _require_nonzero(p)
    counter = _Counter(budget or SearchBudget())
    memo: dict = {}

    def rec(f: HPoly) -> int:
        if f in memo:
            return memo[f]
        if not eval_contains_zero(f, a):
            memo[f] = 0
            return 0
        best = None
        for q in factorizations(f, a, candidates, _counter=counter):
            m = rec(q)
            if best is None or m > best:
                best = m
            if best == q.degree:
                break  # mult(q) <= deg q, no factorization can beat this
        if best is None:
            raise SearchTruncated(f"root {f.field.format(a)} of {f} has no factorization over the candidate set")
        memo[f] = 1 + best
        return memo[f]

    return rec(p)


# ---------------------------------------------------------------------------
# morphisms


def push_forward(p: HPoly, f: Morphism) -> HPoly:
    if p.field is not f.source:
        raise TypeError(f"{f.name} is defined on {f.source.name}, not {p.field.name}")
    return p.map(f)


def factorization_pushes_forward(p: HPoly, a, q: HPoly, f: Morphism) -> bool:
    """Image of ``p in (x - a) q`` under ``f`` is again a factorization."""
    return is_factorization(push_forward(p, f), f(a), push_forward(q, f))
