"""Exact models of the Krasner, sign, tropical and signed tropical hyperfields.

Elements are plain immutable values:

* ``K``  -- the ints ``0`` and ``1``
* ``S``  -- the ints ``-1``, ``0``, ``+1``
* ``T``  -- a :class:`fractions.Fraction` or the sentinel :data:`INF`
* ``TR`` -- a :class:`TRElem` ``(sign, valuation)`` or :data:`INF`

Hyperaddition returns a :data:`HyperSet`, which is kept symbolic because
sums in ``T`` and ``TR`` can be infinite sets.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Union

__all__ = [
    "INF", "Infinity", "TRElem", "FiniteSet", "TRay", "BalancedRay", "HyperSet",
    "DomainError", "ParseError", "Hyperfield", "K", "S", "T", "TR", "FIELDS",
    "tr_mul", "tr_add", "s_add", "t_add", "hyperset_contains", "sum_contains_zero",
    "iterated_sum", "morphism_sign", "morphism_abs", "morphism_t0", "tr_less",
    "Morphism", "MORPHISMS", "as_rat", "DEFAULT_GRID",
]

Rat = Fraction


class DomainError(ValueError):
    """An operation was applied outside its mathematical domain."""


class ParseError(ValueError):
    def __init__(self, message: str, column: int = 1, line: int = 1):
        self.column = column
        self.line = line
        super().__init__(f"line {line}, column {column}: {message}")


def as_rat(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


class Infinity:
    """The additive zero of ``T`` and ``TR``. Equal only to itself."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "inf"

    def __reduce__(self):
        return (Infinity, ())


INF = Infinity()


@dataclass(frozen=True)
class TRElem:
    """A nonzero element ``(sign, valuation)`` of the signed tropical hyperfield."""

    sign: int
    val: Fraction

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")
        object.__setattr__(self, "val", as_rat(self.val))

    def __neg__(self) -> TRElem:
        return TRElem(-self.sign, self.val)

    def __repr__(self):
        return f"({'+' if self.sign > 0 else '-'},{self.val})"


# ---------------------------------------------------------------------------
# symbolic hypersets


@dataclass(frozen=True)
class FiniteSet:
    field: str
    elements: frozenset

    def __post_init__(self):
        object.__setattr__(self, "elements", frozenset(self.elements))
        if not self.elements:
            raise ValueError("a hypersum is never empty")

    def __repr__(self):
        fld = FIELDS[self.field]
        items = sorted(self.elements, key=fld.sort_key)
        return "{" + ", ".join(fld.format(x) for x in items) + "}"


@dataclass(frozen=True)
class TRay:
    """The interval ``[a, inf]`` of ``T``."""

    a: Fraction
    field = "T"

    def __repr__(self):
        return f"[{self.a}, inf]"


@dataclass(frozen=True)
class BalancedRay:
    """``{(+-1, t) : t >= r} U {inf}`` in ``TR``."""

    r: Fraction
    field = "TR"

    def __repr__(self):
        return f"B({self.r})"


HyperSet = Union[FiniteSet, TRay, BalancedRay]


# ---------------------------------------------------------------------------
# hyperfields


class Hyperfield:
    """Common surface of the four hyperfields.

    Subclasses supply the element-level operations; set-level closures
    (``add_set``, ``scale_set``, ``contains``, ``is_subset``) are what make
    n-ary sums and the axiom checks possible without enumerating rays.
    """

    name: str
    zero: object
    one: object

    def __repr__(self):
        return self.name

    def __reduce__(self):
        return (_field_by_name, (self.name,))

    def single(self, x) -> FiniteSet:
        return FiniteSet(self.name, (x,))

    def is_zero(self, x) -> bool:
        return x == self.zero

    def power(self, a, k: int):
        out = self.one
        for _ in range(k):
            out = self.mul(out, a)
        return out

    def add_set(self, A: HyperSet, b) -> HyperSet:
        """``U_{x in A} x [+] b``."""
        if isinstance(A, FiniteSet):
            return self.union(self.add(x, b) for x in A.elements)
        raise TypeError(f"{self.name} has no ray-valued sums")

    def scale_set(self, a, A: HyperSet) -> HyperSet:
        if self.is_zero(a):
            return self.single(self.zero)
        if isinstance(A, FiniteSet):
            return FiniteSet(self.name, (self.mul(a, x) for x in A.elements))
        raise TypeError(f"{self.name} has no ray-valued sums")

    def union(self, sets: Iterable[HyperSet]) -> HyperSet:
        elems: set = set()
        for A in sets:
            if not isinstance(A, FiniteSet):
                raise TypeError(f"{self.name} has no ray-valued sums")
            elems |= A.elements
        return FiniteSet(self.name, elems)

    def contains(self, A: HyperSet, x) -> bool:
        self._check_set(A)
        self.check_element(x)
        if isinstance(A, FiniteSet):
            return x in A.elements
        return self._ray_contains(A, x)

    def _ray_contains(self, A, x) -> bool:
        raise TypeError(f"{self.name} has no ray-valued sums")

    def is_subset(self, A: HyperSet, B: HyperSet) -> bool:
        self._check_set(A)
        self._check_set(B)
        if isinstance(A, FiniteSet):
            return all(self.contains(B, x) for x in A.elements)
        return self._ray_subset(A, B)

    def _ray_subset(self, A, B) -> bool:
        raise TypeError(f"{self.name} has no ray-valued sums")

    def _check_set(self, A: HyperSet) -> None:
        if A.field != self.name:
            raise TypeError(f"hyperset over {A.field} used with {self.name}")

    def check_element(self, x) -> None:
        if not self.is_element(x):
            raise TypeError(f"{x!r} is not an element of {self.name}")

    def iterated_sum(self, terms) -> HyperSet:
        terms = list(terms)
        if not terms:
            raise ValueError("empty sum")
        acc: HyperSet = self.single(terms[0])
        for b in terms[1:]:
            acc = self.add_set(acc, b)
        return acc

    def sum_contains_zero(self, terms) -> bool:
        return self.contains(self.iterated_sum(terms), self.zero)

    def parse_poly_coeff(self, text: str):
        return self.parse(text)


class _Krasner(Hyperfield):
    name = "K"
    zero = 0
    one = 1

    def is_element(self, x) -> bool:
        return type(x) is int and x in (0, 1)

    def elements(self):
        return (0, 1)

    def mul(self, a, b):
        return a * b

    def add(self, a, b) -> FiniteSet:
        if a == 0:
            return self.single(b)
        if b == 0:
            return self.single(a)
        return FiniteSet("K", (0, 1))

    def neg(self, a):
        return a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return 1

    def sum_contains_zero(self, terms) -> bool:
        return sum(1 for x in terms if x) != 1

    def sample(self, rng: random.Random, grid=None):
        return rng.choice((0, 1))

    def sample_grid(self, grid=None):
        return [0, 1]

    def sort_key(self, x):
        return x

    def format(self, x) -> str:
        return str(x)

    def parse(self, text: str):
        s = text.strip()
        if s in ("0", "1"):
            return int(s)
        raise ParseError(f"expected a K element 0 or 1, got {text!r}")


_S_TABLE = {
    (0, 0): (0,), (0, -1): (-1,), (0, 1): (1,),
    (-1, 0): (-1,), (-1, -1): (-1,), (-1, 1): (0, 1, -1),
    (1, 0): (1,), (1, -1): (0, 1, -1), (1, 1): (1,),
}


def s_add(a: int, b: int) -> FiniteSet:
    """Hyperaddition of signs, straight from the table."""
    return FiniteSet("S", _S_TABLE[a, b])


class _Signs(Hyperfield):
    name = "S"
    zero = 0
    one = 1

    def is_element(self, x) -> bool:
        return type(x) is int and x in (-1, 0, 1)

    def elements(self):
        return (0, 1, -1)

    def mul(self, a, b):
        return a * b

    def add(self, a, b) -> FiniteSet:
        return s_add(a, b)

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return a

    def sum_contains_zero(self, terms) -> bool:
        signs = {x for x in terms if x}
        return len(signs) != 1

    def sample(self, rng: random.Random, grid=None):
        return rng.choice((-1, 0, 1))

    def sample_grid(self, grid=None):
        return [0, 1, -1]

    def sort_key(self, x):
        return (0, 1, -1).index(x)

    def format(self, x) -> str:
        return {1: "+", -1: "-", 0: "0"}[x]

    def parse(self, text: str):
        s = text.strip()
        table = {"+": 1, "+1": 1, "1": 1, "-": -1, "-1": -1, "0": 0}
        if s in table:
            return table[s]
        raise ParseError(f"expected a sign +, - or 0, got {text!r}")


_RAT_RE = r"[+-]?\d+(?:/\d+)?"


def _parse_rat(text: str) -> Fraction:
    s = text.strip()
    if not re.fullmatch(_RAT_RE, s):
        raise ParseError(f"expected an exact rational like 3/2, got {text!r}")
    return Fraction(s)


def t_add(a, b) -> HyperSet:
    if a is INF:
        return T.single(b)
    if b is INF:
        return T.single(a)
    if a < b:
        return T.single(a)
    if b < a:
        return T.single(b)
    return TRay(a)


class _Tropical(Hyperfield):
    name = "T"
    zero = INF
    one = Fraction(0)

    def is_element(self, x) -> bool:
        return x is INF or isinstance(x, Fraction)

    def mul(self, a, b):
        if a is INF or b is INF:
            return INF
        return a + b

    def add(self, a, b) -> HyperSet:
        return t_add(a, b)

    def neg(self, a):
        return a

    def inv(self, a):
        if a is INF:
            raise ZeroDivisionError("inf has no inverse")
        return -a

    def add_set(self, A: HyperSet, b) -> HyperSet:
        if isinstance(A, TRay):
            if b is not INF and b < A.a:
                return self.single(b)
            return A
        return super().add_set(A, b)

    def scale_set(self, a, A: HyperSet) -> HyperSet:
        if isinstance(A, TRay):
            return self.single(INF) if a is INF else TRay(A.a + a)
        return super().scale_set(a, A)

    def union(self, sets) -> HyperSet:
        sets = list(sets)
        rays = [A for A in sets if isinstance(A, TRay)]
        if not rays:
            return super().union(sets)
        ray = TRay(min(A.a for A in rays))
        for A in sets:
            if isinstance(A, FiniteSet) and not all(self._ray_contains(ray, x) for x in A.elements):
                raise ValueError("union is not a single ray; not representable")
        return ray

    def _ray_contains(self, A: TRay, x) -> bool:
        return x is INF or x >= A.a

    def _ray_subset(self, A: TRay, B) -> bool:
        return isinstance(B, TRay) and A.a >= B.a

    def sum_contains_zero(self, terms) -> bool:
        finite = [x for x in terms if x is not INF]
        if not finite:
            return True
        m = min(finite)
        return finite.count(m) >= 2

    def sample(self, rng: random.Random, grid=None):
        grid = DEFAULT_GRID if grid is None else grid
        if rng.random() < 0.15:
            return INF
        return rng.choice(grid)

    def sample_grid(self, grid=None):
        grid = DEFAULT_GRID if grid is None else grid
        return [INF, *grid]

    def sort_key(self, x):
        return (1, 0) if x is INF else (0, x)

    def format(self, x) -> str:
        return "inf" if x is INF else str(x)

    def parse(self, text: str):
        s = text.strip()
        if s == "inf":
            return INF
        return _parse_rat(s)


def tr_mul(a, b):
    """Signs multiply, valuations add; ``inf`` absorbs."""
    if a is INF or b is INF:
        return INF
    return TRElem(a.sign * b.sign, a.val + b.val)


def tr_add(a, b) -> HyperSet:
    if a is INF:
        return TR.single(b)
    if b is INF:
        return TR.single(a)
    if a.val < b.val:
        return TR.single(a)
    if b.val < a.val:
        return TR.single(b)
    if a.sign == b.sign:
        return TR.single(a)
    return BalancedRay(a.val)


_TR_RE = re.compile(r"\(\s*([+-])\s*,\s*(" + _RAT_RE + r")\s*\)")


class _SignedTropical(Hyperfield):
    name = "TR"
    zero = INF
    one = TRElem(1, Fraction(0))

    def is_element(self, x) -> bool:
        return x is INF or isinstance(x, TRElem)

    def mul(self, a, b):
        return tr_mul(a, b)

    def add(self, a, b) -> HyperSet:
        return tr_add(a, b)

    def neg(self, a):
        return INF if a is INF else -a

    def inv(self, a):
        if a is INF:
            raise ZeroDivisionError("inf has no inverse")
        return TRElem(a.sign, -a.val)

    def add_set(self, A: HyperSet, b) -> HyperSet:
        # B(r) [+] b is {b} when |b| < r and B(r) otherwise
        if isinstance(A, BalancedRay):
            if b is not INF and b.val < A.r:
                return self.single(b)
            return A
        return super().add_set(A, b)

    def scale_set(self, a, A: HyperSet) -> HyperSet:
        if isinstance(A, BalancedRay):
            return self.single(INF) if a is INF else BalancedRay(A.r + a.val)
        return super().scale_set(a, A)

    def union(self, sets) -> HyperSet:
        sets = list(sets)
        rays = [A for A in sets if isinstance(A, BalancedRay)]
        if not rays:
            return super().union(sets)
        ray = BalancedRay(min(A.r for A in rays))
        for A in sets:
            if isinstance(A, FiniteSet) and not all(self._ray_contains(ray, x) for x in A.elements):
                raise ValueError("union is not a single balanced ray; not representable")
        return ray

    def _ray_contains(self, A: BalancedRay, x) -> bool:
        return x is INF or x.val >= A.r

    def _ray_subset(self, A: BalancedRay, B) -> bool:
        return isinstance(B, BalancedRay) and A.r >= B.r

    def sum_contains_zero(self, terms) -> bool:
        finite = [x for x in terms if x is not INF]
        if not finite:
            return True
        m = min(x.val for x in finite)
        signs = {x.sign for x in finite if x.val == m}
        return len(signs) == 2

    def sample(self, rng: random.Random, grid=None):
        grid = DEFAULT_GRID if grid is None else grid
        if rng.random() < 0.15:
            return INF
        return TRElem(rng.choice((1, -1)), rng.choice(grid))

    def sample_grid(self, grid=None):
        grid = DEFAULT_GRID if grid is None else grid
        return [INF] + [TRElem(s, v) for v in grid for s in (1, -1)]

    def sort_key(self, x):
        return (1, 0, 0) if x is INF else (0, x.val, -x.sign)

    def format(self, x) -> str:
        if x is INF:
            return "inf"
        return f"({'+' if x.sign > 0 else '-'},{x.val})"

    def parse(self, text: str):
        s = text.strip()
        if s == "inf":
            return INF
        m = _TR_RE.fullmatch(s)
        if not m:
            raise ParseError(f"expected (+,r), (-,r) or inf, got {text!r}")
        return TRElem(1 if m.group(1) == "+" else -1, Fraction(m.group(2)))


K = _Krasner()
S = _Signs()
T = _Tropical()
TR = _SignedTropical()
FIELDS = {"K": K, "S": S, "T": T, "TR": TR}

DEFAULT_GRID = tuple(Fraction(x) for x in ("-2", "-1", "-1/2", "0", "1/2", "1", "2"))


def _field_by_name(name: str) -> Hyperfield:
    return FIELDS[name]


def register_field(field: Hyperfield) -> None:
    """Make a (finite, table-driven) hyperfield resolvable from hyperset tags."""
    FIELDS.setdefault(field.name, field)


# ---------------------------------------------------------------------------
# module-level operations


def hyperset_contains(A: HyperSet, x) -> bool:
    return FIELDS[A.field].contains(A, x)


def sum_contains_zero(terms) -> bool:
    """Whether ``inf`` lies in the ``TR`` hypersum of ``terms``.

    True iff the minimal finite valuation is attained with both signs, or every
    term is ``inf``.
    """
    terms = list(terms)
    if not terms:
        raise ValueError("empty sum")
    return TR.sum_contains_zero(terms)


def iterated_sum(terms, field: Hyperfield = TR) -> HyperSet:
    """Left fold of hyperaddition, extended elementwise over hypersets."""
    return field.iterated_sum(terms)


def tr_less(a, b) -> bool:
    """Order on ``TR`` induced by the ordering of real Hahn series."""
    if a == b:
        return False
    diff = tr_add(b, TR.neg(a))
    if isinstance(diff, FiniteSet):
        (d,) = diff.elements
        if d is not INF and d.sign == 1:
            return True
    if a is not INF and b is not INF:
        return a.val == b.val and a.sign < b.sign
    return False


# ---------------------------------------------------------------------------
# morphisms


def morphism_sign(a) -> int:
    return 0 if a is INF else a.sign


def morphism_abs(a):
    return INF if a is INF else a.val


def morphism_t0(a) -> int:
    """Residue map ``O_TR -> S``: ``(s,0) -> s`` and ``(s,r) -> 0`` for ``r > 0``."""
    if a is INF:
        return 0
    if a.val < 0:
        raise DomainError(f"{TR.format(a)} is not in O_TR (negative valuation)")
    return a.sign if a.val == 0 else 0


def _incl_s_tr(a: int):
    return INF if a == 0 else TRElem(a, Fraction(0))


def _incl_k_t(a: int):
    return INF if a == 0 else Fraction(0)


def _sign_image(A: HyperSet) -> HyperSet:
    if isinstance(A, BalancedRay):
        return FiniteSet("S", (0, 1, -1))
    return FiniteSet("S", (morphism_sign(x) for x in A.elements))


def _abs_image(A: HyperSet) -> HyperSet:
    if isinstance(A, BalancedRay):
        return TRay(A.r)
    return FiniteSet("T", (morphism_abs(x) for x in A.elements))


def _t0_image(A: HyperSet) -> HyperSet:
    if isinstance(A, BalancedRay):
        if A.r < 0:
            raise DomainError("hyperset leaves O_TR")
        return FiniteSet("S", (0, 1, -1) if A.r == 0 else (0,))
    return FiniteSet("S", (morphism_t0(x) for x in A.elements))


@dataclass(frozen=True)
class Morphism:
    """A hyperfield morphism together with its action on symbolic hypersets."""

    name: str
    source: Hyperfield
    target: Hyperfield
    fn: Callable
    set_image: Callable
    domain: Callable = lambda x: True

    def __call__(self, x):
        return self.fn(x)

    def image(self, A: HyperSet) -> HyperSet:
        return self.set_image(A)


def _finite_image(fn, target):
    return lambda A: FiniteSet(target, (fn(x) for x in A.elements))


MORPHISMS = {
    "sign": Morphism("sign", TR, S, morphism_sign, _sign_image),
    "abs": Morphism("abs", TR, T, morphism_abs, _abs_image),
    "t0": Morphism("t0", TR, S, morphism_t0, _t0_image,
                   domain=lambda x: x is INF or x.val >= 0),
    "S->TR": Morphism("S->TR", S, TR, _incl_s_tr, _finite_image(_incl_s_tr, "TR")),
    "K->T": Morphism("K->T", K, T, _incl_k_t, _finite_image(_incl_k_t, "T")),
}
