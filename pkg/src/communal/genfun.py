"""Rational generating functions  P(x) / prod_e (1 - x^e).

The numerator is a sparse integer polynomial kept as sorted
``(exponent, coefficient)`` pairs; the denominator is a multiset of
positive exponents.  No GCD simplification is ever attempted: equality is
decided by cross-multiplication.
"""
from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Iterable

from .alpha import AlphaSystem
from .monoid import BaseElement, base_set


def _normalize(terms) -> tuple[tuple[int, int], ...]:
    acc: dict[int, int] = defaultdict(int)
    for e, c in terms:
        if e < 0:
            raise ValueError(f"negative exponent {e}")
        acc[e] += c
    return tuple(sorted((e, c) for e, c in acc.items() if c))


@dataclass(frozen=True)
class RationalGF:
    numerator: tuple[tuple[int, int], ...]
    denominator_exponents: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "numerator", _normalize(self.numerator))
        dens = tuple(sorted(int(e) for e in self.denominator_exponents))
        if any(e <= 0 for e in dens):
            raise ValueError(f"denominator exponents must be positive: {dens}")
        object.__setattr__(self, "denominator_exponents", dens)

    def __str__(self):
        return f"({render_poly(self.numerator)}) / {render_denominator(self.denominator_exponents)}"


def poly_mul(p, q) -> tuple[tuple[int, int], ...]:
    acc: dict[int, int] = defaultdict(int)
    for e1, c1 in p:
        for e2, c2 in q:
            acc[e1 + e2] += c1 * c2
    return _normalize(acc.items())


def _expand_factors(exponents: Iterable[int]):
    out = ((0, 1),)
    for e in exponents:
        out = poly_mul(out, ((0, 1), (e, -1)))
    return out


def build_gf(sys: AlphaSystem, base: list[BaseElement] | None = None) -> RationalGF:
    """Sum of x^weight over the base set, over prod_i (1 - x^(N/n_i))."""
    if base is None:
        base = base_set(sys)
    weights = Counter(elem.weight for elem in base)
    return RationalGF(tuple(weights.items()), tuple(sys.N // n for n in sys.n))


def series(gf: RationalGF, order: int) -> list[int]:
    """Coefficients of x^0 .. x^order of the power series expansion."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    coeffs = [0] * (order + 1)
    for e, c in gf.numerator:
        if e <= order:
            coeffs[e] += c
    # dividing by (1 - x^e) is a running sum with stride e
    for e in gf.denominator_exponents:
        for t in range(e, order + 1):
            coeffs[t] += coeffs[t - e]
    return coeffs


def gf_equal(lhs: RationalGF, rhs: RationalGF) -> bool:
    left = poly_mul(lhs.numerator, _expand_factors(rhs.denominator_exponents))
    right = poly_mul(rhs.numerator, _expand_factors(lhs.denominator_exponents))
    return left == right


def closed_form_andrews(k: int) -> RationalGF:
    """(1 - x^(k(k-1))) / ((1 - x^k)(1 - x^(k-1))^k), all bounds 1/(k-1)."""
    if k < 2:
        raise ValueError("k must be at least 2")
    return RationalGF(((0, 1), (k * (k - 1), -1)), (k,) + (k - 1,) * k)


def closed_form_half_half_n(n: int) -> RationalGF:
    """Closed form for the bounds (1/2, 1/2, 1/n)."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if n % 2:
        return RationalGF(((0, 1), (n + 1, 2), (2 * n, 1)), (2, n, 2 * n))
    return RationalGF(((0, 1), (n + 1, 1)), (2, n, n))


def andrews_numerator(k: int) -> tuple[tuple[int, int], ...]:
    """(1 + x^k + ... + x^(k(k-2))) (1 + x^(k-1) + ... + x^((k-2)(k-1)))^k."""
    out = tuple((k * s, 1) for s in range(k - 1))
    inner = tuple(((k - 1) * s, 1) for s in range(k - 1))
    for _ in range(k):
        out = poly_mul(out, inner)
    return out


def _term(e: int, c: int, first: bool) -> str:
    sign = "-" if c < 0 else "+"
    mag = abs(c)
    if e == 0:
        body = str(mag)
    else:
        var = "x" if e == 1 else f"x^{e}"
        body = var if mag == 1 else f"{mag}{var}"
    if first:
        return f"-{body}" if c < 0 else body
    return f" {sign} {body}"


def render_poly(terms) -> str:
    """Ascending-exponent text form, e.g. ``1 + x^18 + 2x^25``."""
    if not terms:
        return "0"
    return "".join(_term(e, c, i == 0) for i, (e, c) in enumerate(terms))


def render_denominator(exponents) -> str:
    if not exponents:
        return "1"
    return "".join("(1-x)" if e == 1 else f"(1-x^{e})" for e in exponents)
