"""Counting and listing communal compositions of a fixed total.

With eps_i = floor(alpha_i g) - g_i, communal compositions of g correspond
one-to-one with nonnegative k-tuples eps summing to the slack
s_g = sum_i floor(alpha_i g) - g, so f(g) = C(s_g + k - 1, k - 1).
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .alpha import AlphaSystem, Composition
from .errors import ResultTooLarge

DEFAULT_ENUM_CAP = 10**6


@dataclass(frozen=True)
class SlackValue:
    g: int
    s_g: int


def slack(sys: AlphaSystem, g: int) -> SlackValue:
    if g < 0:
        raise ValueError("g must be nonnegative")
    return SlackValue(g, sum(sys.floors(g)) - g)


def multiset_count(m: int, k: int) -> int:
    """Nonnegative integer solutions of x_1 + ... + x_k = m (0 when m < 0)."""
    if m < 0:
        return 0
    return comb(m + k - 1, k - 1)


def count(sys: AlphaSystem, g: int) -> int:
    return multiset_count(slack(sys, g).s_g, sys.k)


def _weak_compositions(total: int, k: int):
    # lexicographic order of eps; caller maps it to descending g order
    if k == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _weak_compositions(total - first, k - 1):
            yield (first,) + rest


def to_epsilon(sys: AlphaSystem, c: Composition) -> tuple[int, ...]:
    return tuple(f - gi for f, gi in zip(sys.floors(c.total), c))


def from_epsilon(sys: AlphaSystem, g: int, eps) -> Composition:
    return Composition(tuple(f - e for f, e in zip(sys.floors(g), eps)))


def enumerate_bijective(sys: AlphaSystem, g: int,
                        cap: int = DEFAULT_ENUM_CAP) -> list[Composition]:
    """All communal compositions of ``g``, built from slack distributions."""
    s = slack(sys, g).s_g
    if s < 0:
        return []
    total = multiset_count(s, sys.k)
    if total > cap:
        raise ResultTooLarge(f"f({g}) = {total} exceeds cap {cap}")
    floors = sys.floors(g)
    # every floor dominates the slack, so each g_i = floor_i - eps_i >= 0
    assert all(s <= f for f in floors), (s, floors)
    out = [Composition(tuple(f - e for f, e in zip(floors, eps)))
           for eps in _weak_compositions(s, sys.k)]
    # lexicographically increasing eps gives decreasing parts
    out.reverse()
    return out


def enumerate_oracle(sys: AlphaSystem, g: int,
                     cap: int = DEFAULT_ENUM_CAP) -> list[Composition]:
    """Brute-force listing by nested loops over bounded parts.

    Independent of the slack bijection; used to cross-check it.
    """
    if g < 0:
        raise ValueError("g must be nonnegative")
    k = sys.k
    m, n = sys.m, sys.n
    found: list[Composition] = []
    prefix = [0] * k

    def walk(i: int, used: int):
        if i == k - 1:
            last = g - used
            if n[i] * last <= m[i] * g:
                if len(found) >= cap:
                    raise ResultTooLarge(f"more than {cap} compositions of {g}")
                prefix[i] = last
                found.append(Composition(tuple(prefix)))
            return
        v = 0
        while v <= g - used and n[i] * v <= m[i] * g:
            prefix[i] = v
            walk(i + 1, used + v)
            v += 1

    walk(0, 0)
    return found
