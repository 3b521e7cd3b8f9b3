"""Table-driven finite hyperfields and the coset construction ``R/G``."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .hyperfield import FiniteSet, Hyperfield, ParseError, register_field

MAX_ORDER = 64


@dataclass(frozen=True)
class FiniteRing:
    """A finite commutative ring on the labels ``0..n-1``."""

    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]
    zero: int = 0
    one: int = 1
    name: str = "R"

    @property
    def order(self) -> int:
        return len(self.add)

    def units(self) -> list[int]:
        n = self.order
        return [a for a in range(n) if any(self.mul[a][b] == self.one for b in range(n))]


def zmod(n: int) -> FiniteRing:
    if not 2 <= n <= MAX_ORDER:
        raise ValueError(f"ring order must be in [2, {MAX_ORDER}]")
    add = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    mul = tuple(tuple((a * b) % n for b in range(n)) for a in range(n))
    return FiniteRing(add, mul, name=f"Z/{n}")


class FiniteHyperfield(Hyperfield):
    """A hyperfield (or hyperring) given by explicit tables on ``0..n-1``."""

    def __init__(self, name, labels, zero, one, mul_table, add_table):
        self.name = name
        self.labels = tuple(labels)
        self.zero = zero
        self.one = one
        self._mul = mul_table
        self._add = add_table
        self._neg = {}
        for a in range(len(self.labels)):
            negs = [b for b in range(len(self.labels)) if zero in add_table[a, b]]
            self._neg[a] = negs[0] if len(negs) == 1 else None
        register_field(self)

    @classmethod
    def from_hyperfield(cls, field: Hyperfield, name: str | None = None) -> FiniteHyperfield:
        elems = list(field.elements())
        idx = {x: i for i, x in enumerate(elems)}
        mul = {(i, j): idx[field.mul(a, b)] for (i, a), (j, b) in itertools.product(enumerate(elems), repeat=2)}
        add = {
            (i, j): frozenset(idx[c] for c in field.add(a, b).elements)
            for (i, a), (j, b) in itertools.product(enumerate(elems), repeat=2)
        }
        return cls(name or f"{field.name}-table", [field.format(x) for x in elems],
                   idx[field.zero], idx[field.one], mul, add)

    @property
    def order(self) -> int:
        return len(self.labels)

    def elements(self):
        return tuple(range(self.order))

    def is_element(self, x) -> bool:
        return type(x) is int and 0 <= x < self.order

    def mul(self, a, b):
        return self._mul[a, b]

    def add(self, a, b) -> FiniteSet:
        return FiniteSet(self.name, self._add[a, b])

    def neg(self, a):
        b = self._neg[a]
        if b is None:
            raise ValueError(f"{self.labels[a]} has no unique negative")
        return b

    def inv(self, a):
        for b in range(self.order):
            if self._mul[a, b] == self.one:
                return b
        raise ZeroDivisionError(f"{self.labels[a]} is not invertible")

    def sample(self, rng, grid=None):
        return rng.randrange(self.order)

    def sample_grid(self, grid=None):
        return list(range(self.order))

    def sort_key(self, x):
        return x

    def format(self, x) -> str:
        return self.labels[x]

    def parse(self, text: str):
        s = text.strip()
        if s in self.labels:
            return self.labels.index(s)
        raise ParseError(f"unknown element {text!r} of {self.name}")


def quotient_hyperfield(ring: FiniteRing, subgroup) -> FiniteHyperfield:
    """Cosets ``R/G`` with ``[a][b] = [ab]`` and ``[a] [+] [b] = {[a'+b']}``."""
    n = ring.order
    if n > MAX_ORDER:
        raise ValueError(f"ring order {n} exceeds {MAX_ORDER}")
    G = frozenset(subgroup)
    units = set(ring.units())
    if not G:
        raise ValueError("subgroup must be nonempty")
    if not G <= units:
        raise ValueError(f"{sorted(G - units)} are not units of {ring.name}")
    if any(ring.mul[g][h] not in G for g in G for h in G):
        raise ValueError("subgroup is not closed under multiplication")

    coset_of: dict[int, frozenset] = {}
    for a in range(n):
        coset_of[a] = frozenset(ring.mul[a][g] for g in G)
    cosets = sorted(set(coset_of.values()), key=min)
    index = {c: i for i, c in enumerate(cosets)}
    cls = {a: index[coset_of[a]] for a in range(n)}

    mul, add = {}, {}
    for i, ci in enumerate(cosets):
        for j, cj in enumerate(cosets):
            mul[i, j] = cls[ring.mul[min(ci)][min(cj)]]
            add[i, j] = frozenset(cls[ring.add[a][b]] for a in ci for b in cj)
    labels = ["[" + ",".join(map(str, sorted(c))) + "]" for c in cosets]
    name = f"{ring.name}/{{{','.join(map(str, sorted(G)))}}}"
    return FiniteHyperfield(name, labels, cls[ring.zero], cls[ring.one], mul, add)


def find_isomorphism(H1: FiniteHyperfield, H2: FiniteHyperfield) -> dict | None:
    """Brute-force a table isomorphism ``H1 -> H2`` fixing 0 and 1, or ``None``."""
    if H1.order != H2.order:
        return None
    if H1.order > 9:
        raise ValueError("brute-force isomorphism search limited to order <= 9")
    rest1 = [x for x in H1.elements() if x not in (H1.zero, H1.one)]
    rest2 = [x for x in H2.elements() if x not in (H2.zero, H2.one)]
    if H1.zero == H1.one or H2.zero == H2.one:
        return None
    for perm in itertools.permutations(rest2):
        f = {H1.zero: H2.zero, H1.one: H2.one, **dict(zip(rest1, perm))}
        if all(
            f[H1.mul(a, b)] == H2.mul(f[a], f[b])
            and frozenset(f[c] for c in H1.add(a, b).elements) == H2.add(f[a], f[b]).elements
            for a in H1.elements() for b in H1.elements()
        ):
            return f
    return None
