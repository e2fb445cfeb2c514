import random
from fractions import Fraction
from itertools import product

import pytest

from multjump.documents import read_document, surface_from_document
from multjump.newton import MonomialIdeal

SEED = 20240611
SURFACE_FIXTURES = ["x5_plus_y3_y4", "x5_plus_y3_y4_with_k", "single_blowup", "chain_2", "x2_y3_resolution"]
MONOMIAL_FIXTURES = ["maximal_ideal_2d", "maximal_ideal_3d", "x3_y2", "x2_y2_z", "x4_y4_z4_xyz"]

ACCEPTANCE: list[str] = []


def random_ideal(rng: random.Random, d: int, top: int = 6) -> MonomialIdeal:
    """Pure powers ``x_j^a_j`` with ``2 <= a_j <= top`` and one to four mixed terms.

    Most mixed terms are drawn strictly below the simplex of the pure powers
    so that the Newton polyhedron usually has several bounded facets; the
    rest are uniform in ``[0, top]^d``.
    """
    powers = [rng.randint(2, top) for _ in range(d)]
    gens = [tuple(powers[i] if j == i else 0 for j in range(d)) for i in range(d)]
    below = [
        g for g in product(*(range(a) for a in powers))
        if sum(1 for x in g if x) >= 2 and sum(Fraction(x, a) for x, a in zip(g, powers)) < 1
    ]
    for _ in range(rng.randint(1, 4)):
        if below and rng.random() < 0.75:
            g = rng.choice(below)
        else:
            g = tuple(rng.randint(0, top) for _ in range(d))
        if any(g):
            gens.append(g)
    return MonomialIdeal(tuple(gens))


def random_ideals(count: int = 60, seed: int = SEED) -> list[MonomialIdeal]:
    rng = random.Random(seed)
    return [random_ideal(rng, 2 if k % 2 == 0 else 3) for k in range(count)]


@pytest.fixture(scope="session")
def ideals() -> list[MonomialIdeal]:
    return random_ideals()


@pytest.fixture(scope="session")
def surfaces():
    return {name: surface_from_document(read_document(name)) for name in SURFACE_FIXTURES}


@pytest.fixture
def acceptance_report():
    def report(number: int, passed: bool, detail: str) -> None:
        ACCEPTANCE.append(f"{'PASS' if passed else 'FAIL'} criterion {number:>2}: {detail}")

    return report


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
