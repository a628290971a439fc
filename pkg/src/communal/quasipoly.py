"""f(g) as a quasi-polynomial: one polynomial per residue of g mod L.

Within a residue class r (mod L = lcm of the denominators) the slack grows
linearly in g, so f is a polynomial of degree at most k-1 there once the
slack is nonnegative.  Smaller g in the class are excluded from the
validated range rather than guessed at.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .alpha import AlphaSystem
from .counting import count, slack
from .errors import OutOfValidatedRange, ValidationFailed


@dataclass(frozen=True)
class QuasiPolynomial:
    period: int
    polys: tuple[tuple[Fraction, ...], ...]
    starts: tuple[int, ...]
    """Smallest validated g in each residue class."""

    def __call__(self, g: int) -> int:
        return eval_quasipoly(self, g)


def poly_eval(coeffs, x):
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def lagrange_interpolate(xs, ys) -> tuple[Fraction, ...]:
    """Monomial coefficients (ascending) of the interpolant through (xs, ys)."""
    n = len(xs)
    out = [Fraction(0)] * n
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            # multiply basis by (x - xj)
            basis = [Fraction(0)] + basis
            for t in range(len(basis) - 1):
                basis[t] -= xj * basis[t + 1]
            denom *= xi - xj
        scale = Fraction(yi) / denom
        for t, b in enumerate(basis):
            out[t] += scale * b
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


def extract_quasipoly(sys: AlphaSystem, verify_points: int | None = None) -> QuasiPolynomial:
    k, L = sys.k, sys.L
    held_out = k if verify_points is None else verify_points
    polys, starts = [], []
    for r in range(L):
        t0 = 0
        while slack(sys, r + t0 * L).s_g < 0:
            t0 += 1
        xs = [r + (t0 + t) * L for t in range(k)]
        coeffs = lagrange_interpolate(xs, [count(sys, g) for g in xs])
        for t in range(k, k + held_out):
            g = r + (t0 + t) * L
            got = poly_eval(coeffs, g)
            if got != count(sys, g):
                raise ValidationFailed(
                    f"residue {r} mod {L}: polynomial gives {got} at g={g}, "
                    f"count is {count(sys, g)}")
        polys.append(coeffs)
        starts.append(xs[0])
    return QuasiPolynomial(L, tuple(polys), tuple(starts))


def eval_quasipoly(qp: QuasiPolynomial, g: int) -> int:
    r = g % qp.period
    if g < qp.starts[r]:
        raise OutOfValidatedRange(
            f"g={g} is below the validated start {qp.starts[r]} for residue {r}")
    value = poly_eval(qp.polys[r], g)
    if value.denominator != 1:
        raise ValidationFailed(f"non-integral value {value} at g={g}")
    return int(value)


def render_poly(coeffs, var: str = "g") -> str:
    """Descending degree with exact fractions, e.g. ``1/8 g^2 + 3/4 g + 1``."""
    terms = []
    for d, c in reversed(list(enumerate(coeffs))):
        if c == 0 and len(coeffs) > 1:
            continue
        mag = abs(c)
        mono = "" if d == 0 else (var if d == 1 else f"{var}^{d}")
        if d == 0:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag} {mono}"
        if not terms:
            terms.append(f"-{body}" if c < 0 else body)
        else:
            terms.append(f" {'-' if c < 0 else '+'} {body}")
    return "".join(terms) or "0"
