"""Harness configuration: seeded grids for the randomized checks.

The on-disk format is flat ``key = value`` lines (``#`` comments allowed).
Grids are comma-separated rationals, e.g. ``exponent_grid = -1, -1/2, 0, 1/2, 1``.
"""

from __future__ import annotations

import configparser
from dataclasses import dataclass, field, fields, replace
from fractions import Fraction
from pathlib import Path


def _grid(*xs) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in xs)


@dataclass(frozen=True)
class HarnessConfig:
    seed: int = 20240601
    # random TR polynomials for factorization and lifting checks
    tr_samples: int = 500
    lift_samples: int = 100
    max_degree: int = 5
    valuation_grid: tuple[Fraction, ...] = field(default_factory=lambda: _grid(-1, "-1/2", 0, "1/2", 1))
    zero_probability: float = 0.15
    # factored Hahn polynomial instances
    b_samples: int = 200
    max_factors: int = 4
    max_terms: int = 3
    exponent_grid: tuple[Fraction, ...] = field(default_factory=lambda: _grid(-1, "-1/2", 0, "1/2", 1))
    coefficient_grid: tuple[Fraction, ...] = field(default_factory=lambda: _grid(-3, -2, -1, "-1/2", "1/2", 1, 2, 3))
    repeat_probability: float = 0.2
    # axiom suite
    axiom_samples: int = 10_000
    axiom_grid: tuple[Fraction, ...] = field(default_factory=lambda: _grid(-2, -1, "-1/2", 0, "1/2", 1, 2))
    # Descartes base case
    descartes_samples: int = 1000
    descartes_max_degree: int = 8

    @classmethod
    def from_text(cls, text: str) -> HarnessConfig:
        parser = configparser.ConfigParser(inline_comment_prefixes=("#",))
        parser.read_string("[harness]\n" + text)
        known = {f.name: f for f in fields(cls)}
        updates = {}
        for key, raw in parser["harness"].items():
            if key not in known:
                raise ValueError(f"unknown config key {key!r}")
            default = getattr(cls(), key)
            if isinstance(default, tuple):
                updates[key] = tuple(Fraction(x.strip()) for x in raw.split(",") if x.strip())
            elif isinstance(default, float):
                updates[key] = float(raw)
            else:
                updates[key] = int(raw)
        return replace(cls(), **updates)

    @classmethod
    def load(cls, path: str | Path) -> HarnessConfig:
        return cls.from_text(Path(path).read_text())

    def to_text(self) -> str:
        lines = []
        for f in fields(self):
            v = getattr(self, f.name)
            lines.append(f"{f.name} = " + (", ".join(map(str, v)) if isinstance(v, tuple) else str(v)))
        return "\n".join(lines) + "\n"
