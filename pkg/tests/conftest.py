import random
from fractions import Fraction

import pytest

from communal import validate_alpha
from communal.errors import InvalidAlpha

CANDY = ("1/3", "2/5", "2/7")
EX_A1 = ("1/2", "1/3", "1/5")
ANDREWS3 = ("1/2", "1/2", "1/2")
HALF_HALF_3 = ("1/2", "1/2", "1/3")

FIXTURES = {"candy": CANDY, "ex_a1": EX_A1, "andrews3": ANDREWS3, "half_half_3": HALF_HALF_3}


def random_admissible(rng, k, scan_cap=10**7, max_den=9):
    """Rejection-sample an admissible k-part system with A^k <= scan_cap."""
    while True:
        alphas = []
        for _ in range(k):
            n = rng.randint(1, max_den)
            alphas.append(Fraction(rng.randint(1, n), n))
        try:
            sys_ = validate_alpha(alphas)
        except InvalidAlpha:
            continue
        if sys_.A ** sys_.k <= scan_cap:
            return sys_


def random_systems(count, seed, ks=(2, 3, 4), **kw):
    """``count`` systems with k cycling through ``ks``."""
    rng = random.Random(seed)
    return [random_admissible(rng, ks[i % len(ks)], **kw) for i in range(count)]


@pytest.fixture
def candy():
    return validate_alpha(CANDY)


@pytest.fixture
def ex_a1():
    return validate_alpha(EX_A1)


@pytest.fixture
def andrews3():
    return validate_alpha(ANDREWS3)


@pytest.fixture
def half_half_3():
    return validate_alpha(HALF_HALF_3)


@pytest.fixture(params=sorted(FIXTURES))
def fixture_system(request):
    return validate_alpha(FIXTURES[request.param])


def pytest_terminal_summary(terminalreporter):
    import sys
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.report_lines():
        terminalreporter.write_line(line)
