import random
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from multjump.errors import DegenerateFacet, InputError, NotCofinite
from multjump.newton import (
    Facet,
    MonomialIdeal,
    build_newton,
    hilbert_samuel,
    minimalize,
    normalized_volume,
    pulling_triangulation,
)
from multjump.oracle import colength, ehrhart_volume, power_generators

from conftest import random_ideal


def facets(gens):
    P = build_newton(MonomialIdeal(gens))
    return [(f.normal, f.offset, f.normalized_volume) for f in P.facets]


def test_minimalize_drops_dominated():
    assert minimalize([(2, 1), (1, 1), (0, 3), (1, 1)]) == ((0, 3), (1, 1))


def test_ideal_validation():
    with pytest.raises(InputError):
        MonomialIdeal(())
    with pytest.raises(InputError):
        MonomialIdeal(((1, -1),))
    with pytest.raises(InputError):
        MonomialIdeal(((1, 0), (1,)))
    with pytest.raises(NotCofinite):
        build_newton(MonomialIdeal(((1, 1),)))
    assert not MonomialIdeal(((1, 1), (2, 0))).is_cofinite()


def test_small_polyhedra():
    # hand computed: one segment each, lattice length 1
    assert facets(((1, 0), (0, 1))) == [((1, 1), 1, 1)]
    assert facets(((3, 0), (0, 2))) == [((2, 3), 6, 1)]
    assert facets(((4, 0), (0, 4), (1, 1))) == [((1, 3), 4, 1), ((3, 1), 4, 1)]
    # (2,0),(0,4),(1,2) are collinear: one facet containing three generators
    assert facets(((2, 0), (0, 4), (1, 2))) == [((2, 1), 4, 2)]
    assert facets(((2, 0, 0), (0, 2, 0), (0, 0, 1))) == [((1, 1, 2), 2, 1)]


def test_simplex_volumes():
    # standard simplex of dimension d-1 has normalized volume 1/(d-1)!
    for d in (2, 3, 4):
        (f,) = build_newton(MonomialIdeal.maximal(d)).facets
        assert f.normalized_volume == Fraction(1, factorial(d - 1))
        assert hilbert_samuel(build_newton(MonomialIdeal.maximal(d))) == 1


def test_hilbert_samuel_of_known_ideals():
    # diagonal ideals: e = product of the exponents
    assert hilbert_samuel(build_newton(MonomialIdeal(((3, 0), (0, 2))))) == 6
    assert hilbert_samuel(build_newton(MonomialIdeal(((2, 0, 0), (0, 2, 0), (0, 0, 1))))) == 4
    assert hilbert_samuel(build_newton(MonomialIdeal(((4, 0, 0), (0, 4, 0), (0, 0, 4), (1, 1, 1))))) == 48


def test_degenerate_facet_is_reported():
    bad = Facet((1, 1, 1), 3, ((3, 0, 0), (2, 1, 0), (1, 2, 0)))
    with pytest.raises(DegenerateFacet):
        normalized_volume(bad)


def test_pulling_triangulation_of_square():
    square = [(0, 0), (1, 0), (0, 1), (1, 1)]
    simplices = pulling_triangulation(square)
    assert len(simplices) == 2
    assert all(s[0] == 0 for s in simplices)


def test_contains():
    P = build_newton(MonomialIdeal(((3, 0), (0, 2))))
    assert P.contains((3, 0)) and P.contains((2, 1)) and not P.contains((1, 1))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([2, 3]))
def test_facets_support_every_generator(seed, d):
    ideal = random_ideal(random.Random(seed), d)
    P = build_newton(ideal)
    assert P.facets
    for g in ideal.generators:
        assert P.contains(g)
    for f in P.facets:
        assert all(x > 0 for x in f.normal)
        assert min(sum(a * b for a, b in zip(f.normal, g)) for g in ideal.generators) == f.offset
        assert f.normalized_volume == ehrhart_volume(f)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_plane_hilbert_samuel_is_twice_the_staircase_area(seed):
    """In the plane, e(a) = 2 * area under the Newton polygon, by the shoelace rule."""
    ideal = random_ideal(random.Random(seed), 2)
    P = build_newton(ideal)
    # facet vertices are sorted, so the first and last are the segment ends
    hull = {f.vertices[0] for f in P.facets} | {f.vertices[-1] for f in P.facets}
    poly = [(0, 0)] + sorted(hull, key=lambda v: (v[1], -v[0]))
    twice_area = sum(poly[i][0] * poly[(i + 1) % len(poly)][1] - poly[(i + 1) % len(poly)][0] * poly[i][1]
                     for i in range(len(poly)))
    assert hilbert_samuel(P) == abs(twice_area)


def test_colength_of_powers():
    m = MonomialIdeal.maximal(2)
    assert [colength(power_generators(m, n)) for n in range(1, 5)] == [1, 3, 6, 10]
