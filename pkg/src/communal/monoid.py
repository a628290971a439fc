"""Generators and base tuples of the monoid of communal compositions.

Coordinatewise sums of communal tuples are communal.  Every communal tuple
is uniquely ``b(a) + sum_j c_j x_j`` where the x_j are the k generators
below and ``b(a) = (1/A) sum_i a_i x_i`` for a residue tuple ``a`` in
``[0, A)^k`` making ``b(a)`` integral.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .alpha import AlphaSystem, Composition, as_composition, is_communal
from .errors import NotCommunal, ScanCapExceeded

DEFAULT_SCAN_CAP = 10**7


@dataclass(frozen=True)
class GeneratorSet:
    gens: tuple[Composition, ...]

    def __iter__(self):
        return iter(self.gens)

    def __getitem__(self, i):
        return self.gens[i]

    def __len__(self):
        return len(self.gens)


@dataclass(frozen=True)
class BaseElement:
    a: tuple[int, ...]
    b: Composition
    weight: int


@dataclass(frozen=True)
class Decomposition:
    base: BaseElement
    coeffs: tuple[int, ...]


def generators(sys: AlphaSystem) -> GeneratorSet:
    """x_i = (N/n_i) [alpha_1, ..., alpha_hat_i, ..., alpha_k]."""
    cached = sys.__dict__.get("_generators")
    if cached is None:
        cached = _build_generators(sys)
        object.__setattr__(sys, "_generators", cached)
    return cached


def _build_generators(sys: AlphaSystem) -> GeneratorSet:
    gens = []
    for i in range(sys.k):
        scale = sys.N // sys.n[i]
        row = []
        for j in range(sys.k):
            v = scale * (sys.alpha_hat[i] if j == i else sys.alphas[j])
            assert v.denominator == 1 and v >= 0, (i, j, v)
            row.append(int(v))
        gens.append(Composition(tuple(row)))
    return GeneratorSet(tuple(gens))


def congruence_matrix(sys: AlphaSystem) -> list[list[int]]:
    """C[j][i]: coefficient of a_i in A * b_j, i.e. the j-th entry of x_i."""
    gens = generators(sys)
    return [[gens[i][j] for i in range(sys.k)] for j in range(sys.k)]


def _base_element(sys: AlphaSystem, a, gens: GeneratorSet) -> BaseElement:
    cache = sys.__dict__.get("_base_cache")
    if cache is None:
        cache = {}
        object.__setattr__(sys, "_base_cache", cache)
    elem = cache.get(a)
    if elem is None:
        elem = cache[a] = _make_base_element(sys, a, gens)
    return elem


def _make_base_element(sys: AlphaSystem, a, gens: GeneratorSet) -> BaseElement:
    A = sys.A
    scaled = [sum(ai * x[j] for ai, x in zip(a, gens)) for j in range(sys.k)]
    assert all(v % A == 0 for v in scaled), (a, scaled)
    b = Composition(tuple(v // A for v in scaled))
    return BaseElement(tuple(a), b, weight_of(sys, a))


def weight_of(sys: AlphaSystem, a) -> int:
    """(N/A) * sum_i a_i / n_i for a residue tuple in the base set."""
    num = sum(sys.N // n * ai for ai, n in zip(a, sys.n))
    q, r = divmod(num, sys.A)
    assert r == 0, (a, num, sys.A)
    return q


def weight(elem: BaseElement, sys: AlphaSystem | None = None) -> int:
    if sys is not None:
        w = weight_of(sys, elem.a)
        assert w == elem.weight
    assert elem.weight == elem.b.total
    return elem.weight


def _row_solver(c: int, A: int):
    """Data for solving c*t = rhs (mod A): (gcd, period, inverse of c/gcd)."""
    d = math.gcd(c, A)
    step = A // d
    inv = pow(c // d, -1, step) if step > 1 else 0
    return d, step, inv


def _last_coordinate(solvers, partial, A):
    """All a_k in [0, A) that complete ``partial`` row sums to 0 mod A."""
    start, step = 0, 1
    for (d, st, inv), s in zip(solvers, partial):
        rhs = -s % A
        if rhs % d:
            return ()
        if st == 1:
            continue
        t0 = (rhs // d) * inv % st
        # intersect t = start (mod step) with t = t0 (mod st)
        g = math.gcd(step, st)
        if (t0 - start) % g:
            return ()
        m = st // g
        if m > 1:
            u = ((t0 - start) // g) * pow(step // g, -1, m) % m
            start += step * u
        step *= m
        start %= step
    return range(start, A, step)


def base_set(sys: AlphaSystem, scan_cap: int = DEFAULT_SCAN_CAP) -> list[BaseElement]:
    """The residue tuples a in [0, A)^k with integral base tuple, sorted.

    Scans the first k-1 residues exhaustively and solves the k congruences
    for the last residue exactly, which visits the same candidate set as a
    full scan of [0, A)^k.
    """
    A, k = sys.A, sys.k
    if A ** k > scan_cap:
        raise ScanCapExceeded(f"A^k = {A}^{k} exceeds scan cap {scan_cap}")
    cached = sys.__dict__.get("_base_set")
    if cached is None:
        cached = tuple(_scan_base_set(sys))
        object.__setattr__(sys, "_base_set", cached)
    return list(cached)


def _scan_base_set(sys: AlphaSystem) -> list[BaseElement]:
    A, k = sys.A, sys.k
    C = congruence_matrix(sys)
    last_col = [C[j][k - 1] for j in range(k)]
    solvers = [_row_solver(c % A, A) for c in last_col]
    steps = [sys.N // n for n in sys.n]
    out = []

    def walk(i, prefix, partial):
        if i == k - 1:
            for last in _last_coordinate(solvers, partial, A):
                a = prefix + (last,)
                b = tuple((p + c * last) // A for p, c in zip(partial, last_col))
                w, r = divmod(sum(s * ai for s, ai in zip(steps, a)), A)
                assert r == 0 and w == sum(b), (a, b, w)
                out.append(BaseElement(a, Composition(b), w))
            return
        col = [C[j][i] for j in range(k)]
        for v in range(A):
            walk(i + 1, prefix + (v,), [p + c * v for p, c in zip(partial, col)])

    walk(0, (), [0] * k)
    return out


def base_set_bruteforce(sys: AlphaSystem, scan_cap: int = DEFAULT_SCAN_CAP) -> list[BaseElement]:
    """Reference scan testing all k congruences on every tuple of [0, A)^k."""
    A, k = sys.A, sys.k
    if A ** k > scan_cap:
        raise ScanCapExceeded(f"A^k = {A}^{k} exceeds scan cap {scan_cap}")
    gens = generators(sys)
    C = congruence_matrix(sys)
    return [_make_base_element(sys, a, gens)
            for a in itertools.product(range(A), repeat=k)
            if all(sum(cj * ai for cj, ai in zip(row, a)) % A == 0 for row in C)]


def decompose(sys: AlphaSystem, c) -> Decomposition:
    c = as_composition(c)
    if not is_communal(sys, c):
        raise NotCommunal(f"{list(c)} is not communal for {sys}")
    g, A = c.total, sys.A
    gaps = [m * g - n * gi for m, n, gi in zip(sys.m, sys.n, c)]
    a = tuple(d % A for d in gaps)
    coeffs = tuple((d - r) // A for d, r in zip(gaps, a))
    base = _base_element(sys, a, generators(sys))
    return Decomposition(base, coeffs)


def recompose(sys: AlphaSystem, d: Decomposition) -> Composition:
    if any(c < 0 for c in d.coeffs):
        raise ValueError(f"negative coefficient in {d.coeffs}")
    out = list(d.base.b.parts)
    for c, x in zip(d.coeffs, generators(sys)):
        if c:
            for j, xj in enumerate(x.parts):
                out[j] += c * xj
    return Composition(tuple(out))


def base_element(sys: AlphaSystem, a) -> BaseElement:
    """The base element for residue tuple ``a``; raises if ``a`` is not in the base set."""
    a = tuple(a)
    if len(a) != sys.k or any(not 0 <= ai < sys.A for ai in a):
        raise ValueError(f"residue tuple {a} outside [0, {sys.A})^{sys.k}")
    C = congruence_matrix(sys)
    if any(sum(cj * ai for cj, ai in zip(row, a)) % sys.A for row in C):
        raise ValueError(f"{a} is not in the base set")
    return _base_element(sys, a, generators(sys))
