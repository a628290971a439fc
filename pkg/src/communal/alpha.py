"""Bound systems alpha = (m_1/n_1, ..., m_k/n_k) and their derived constants.

A composition [g_1, ..., g_k] of g is *communal* for alpha when
0 <= g_i <= alpha_i * g for every i.  An admissible system has every
(k-1)-subset of the alpha_i summing to at most 1 and the full sum
exceeding 1.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import ArityMismatch, BadShape, PartnerSumExceeded, TrivialSystem

RawBound = Union[Fraction, int, str, Sequence[int]]


@dataclass(frozen=True)
class AlphaSystem:
    alphas: tuple[Fraction, ...]
    N: int = field(init=False)
    A: int = field(init=False)
    L: int = field(init=False)
    alpha_hat: tuple[Fraction, ...] = field(init=False)
    m: tuple[int, ...] = field(init=False, repr=False, compare=False)
    n: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        N = math.prod(a.denominator for a in self.alphas)
        # integer route; the rational route is checked in the tests
        A = sum(N // a.denominator * a.numerator for a in self.alphas) - N
        total = sum(self.alphas)
        object.__setattr__(self, "m", tuple(a.numerator for a in self.alphas))
        object.__setattr__(self, "n", tuple(a.denominator for a in self.alphas))
        object.__setattr__(self, "N", N)
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "L", math.lcm(*(a.denominator for a in self.alphas)))
        object.__setattr__(self, "alpha_hat", tuple(1 - (total - a) for a in self.alphas))

    @property
    def k(self) -> int:
        return len(self.alphas)

    def floors(self, g: int) -> list[int]:
        """The upper bounds floor(alpha_i * g), by integer division."""
        return [m * g // n for m, n in zip(self.m, self.n)]

    def __str__(self):
        return format_alpha(self)


@dataclass(frozen=True)
class Composition:
    parts: tuple[int, ...]

    def __post_init__(self):
        if type(self.parts) is not tuple:
            object.__setattr__(self, "parts", tuple(self.parts))
        if self.parts and min(self.parts) < 0:
            raise ValueError(f"negative part in {list(self.parts)}")

    @property
    def total(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __add__(self, other: "Composition") -> "Composition":
        if len(self) != len(other):
            raise ArityMismatch(f"cannot add {len(self)}-tuple and {len(other)}-tuple")
        return Composition(tuple(x + y for x, y in zip(self, other)))

    def scaled(self, c: int) -> "Composition":
        return Composition(tuple(c * x for x in self.parts))

    def __lt__(self, other: "Composition"):
        return self.parts < other.parts

    def __repr__(self):
        return f"Composition({list(self.parts)})"


def _to_fraction(x: RawBound) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    if isinstance(x, str):
        return _parse_fraction(x)
    try:
        m, n = x
    except (TypeError, ValueError):
        raise BadShape(f"cannot read {x!r} as a rational bound") from None
    if not isinstance(m, int) or not isinstance(n, int):
        raise BadShape(f"non-integer pair {x!r}")
    if m <= 0 or n <= 0:
        raise BadShape(f"bound {m}/{n} needs positive numerator and denominator")
    return Fraction(m, n)


_FRACTION_RE = re.compile(r"^([+-]?\d+)(?:/([+-]?\d+))?$")


def _parse_fraction(text: str) -> Fraction:
    match = _FRACTION_RE.match(text)
    if not match:
        raise BadShape(f"malformed fraction {text!r}")
    m = int(match.group(1))
    n = int(match.group(2)) if match.group(2) is not None else 1
    if m <= 0 or n <= 0:
        raise BadShape(f"bound {text!r} needs positive numerator and denominator")
    return Fraction(m, n)


def validate_alpha(raw: Iterable[RawBound]) -> AlphaSystem:
    """Build an :class:`AlphaSystem`, reducing every bound to lowest terms.

    Each entry may be a ``(m, n)`` pair, a :class:`~fractions.Fraction`,
    an int, or a string ``"m/n"``.
    """
    alphas = tuple(_to_fraction(x) for x in raw)
    if len(alphas) < 2:
        raise BadShape(f"need at least two bounds, got {len(alphas)}")
    if any(a <= 0 for a in alphas):
        raise BadShape("bounds must be positive")
    total = sum(alphas)
    if total <= 1:
        raise TrivialSystem(f"bounds sum to {total} <= 1")
    for j, a in enumerate(alphas):
        if total - a > 1:
            raise PartnerSumExceeded(
                f"the bounds other than #{j + 1} sum to {total - a} > 1")
    return AlphaSystem(alphas)


def parse_alpha(text: str) -> AlphaSystem:
    """Parse ``"m1/n1,m2/n2,..."``; whitespace is ignored."""
    text = re.sub(r"\s+", "", text)
    if not text:
        raise BadShape("empty alpha")
    return validate_alpha(text.split(","))


def format_alpha(sys: AlphaSystem) -> str:
    return ",".join(f"{a.numerator}/{a.denominator}" for a in sys.alphas)


def as_composition(parts) -> Composition:
    return parts if isinstance(parts, Composition) else Composition(tuple(parts))


def is_communal(sys: AlphaSystem, c) -> bool:
    c = as_composition(c)
    if len(c) != sys.k:
        raise ArityMismatch(f"expected {sys.k} parts, got {len(c)}")
    g = c.total
    return all(n * gi <= m * g for gi, m, n in zip(c, sys.m, sys.n))
