from fractions import Fraction

import pytest

from multjump import surface
from multjump.errors import AdjunctionMismatch, InputError, NonIntegralCanonical, NotAntiNef, NotNegativeDefinite
from multjump.monomial import jumping_spectrum
from multjump.newton import MonomialIdeal, build_newton

F = Fraction


def test_example_data(surfaces):
    R = surfaces["x5_plus_y3_y4"]
    assert R.k == (1, 2, 4, 7, 8, 9, 10, 11, 12) and R.k_derived
    assert surfaces["x5_plus_y3_y4_with_k"].k == R.k and not surfaces["x5_plus_y3_y4_with_k"].k_derived
    assert surface.rees_valuations(R) == {9}
    # F . E_4 = 5 + 9 - 2*15 + 16
    assert R.f_dot_curves()[3] == 0
    assert -R.intersect(R.f, R.f) == 20


def test_example_first_jumps(surfaces):
    R = surfaces["x5_plus_y3_y4"]
    assert surface.log_canonical_threshold(R) == F(8, 15)
    records = surface.surface_spectrum(R, 1)
    assert [r.c for r in records] == [F(8, 15), F(11, 15), F(13, 15), F(14, 15)]
    # at 8/15, floor(cF) = (1,2,4,8,8,9,9,10,10); E_4 . (K + E_4 - 2 floor(cF)) = 2
    assert [r.multiplicity for r in records] == [1, 1, 1, 1]
    assert all(r.jumping_divisor == {4} and r.rees_coefficient == 0 for r in records)
    assert surface.multiplicity(R, 1) == 0


def test_example_rees_coefficients(surfaces):
    R = surfaces["x5_plus_y3_y4"]
    for c in surface.candidates(R, 1):
        assert (surface.rees_coefficient(R, c) > 0) == ((20 * c).denominator == 1)
    assert sum(surface.rees_coefficient(R, c) for c in surface.candidates(R, 1)) == 20
    rec = surface.record(R, 2)
    assert rec.multiplicity == surface.multiplicity(R, 1) + surface.rees_coefficient(R, 1)
    assert 9 in rec.contributors


def test_zero_candidates_are_listed_on_request(surfaces):
    R = surfaces["x5_plus_y3_y4"]
    everything = surface.surface_spectrum(R, 1, include_zero=True)
    assert len(everything) == len(surface.candidates(R, 1))
    assert any(r.multiplicity == 0 for r in everything)


def test_single_blowup():
    R = surface.load_resolution([[-1]], [1])
    assert R.k == (1,)
    assert surface.spectrum_dict(R, 4) == {F(2): 1, F(3): 2, F(4): 3}
    assert surface.contribution_check(R, 2, 1)
    assert not surface.contribution_check(R, 1, 1)
    assert not surface.contribution_check(R, F(1, 2), 1)


def test_chain_matches_monomial_engine(surfaces):
    # two blow-ups resolve (x^2, y): rays (1,1) and (1,2)
    mono = jumping_spectrum(build_newton(MonomialIdeal(((2, 0), (0, 1)))), 6).entries
    assert surface.spectrum_dict(surfaces["chain_2"], 6) == mono
    cusp = jumping_spectrum(build_newton(MonomialIdeal(((3, 0), (0, 2)))), 6).entries
    assert surface.spectrum_dict(surfaces["x2_y3_resolution"], 6) == cusp


def test_surface_classes(surfaces):
    classes = {c.representative: c for c in surface.surface_classes(surfaces["x5_plus_y3_y4"])}
    assert str(classes[F(8, 15)].polynomial) == "1"
    assert classes[F(1)].rees_coefficient == 1
    assert str(classes[F(1)].polynomial) == "n"


@pytest.mark.parametrize(
    "matrix, f, k, error",
    [
        ([[1]], [1], None, NotNegativeDefinite),
        ([[-1, 2], [2, -1]], [1, 1], None, NotNegativeDefinite),
        ([[-1, 1], [0, -1]], [1, 1], None, InputError),
        ([[-1, -1], [-1, -3]], [1, 1], None, InputError),
        ([[-2, 1], [1, -1]], [2, 1], None, NotAntiNef),
        ([[-1]], [1], [2], AdjunctionMismatch),
        ([[-3]], [1], None, NonIntegralCanonical),
        ([[-1]], [0], None, InputError),
        ([[-1]], [1, 1], None, InputError),
        ([[-1]], [1], [1, 1], InputError),
        ([], [], None, InputError),
    ],
)
def test_validation(matrix, f, k, error):
    with pytest.raises(error):
        surface.load_resolution(matrix, f, k)


def test_bound_must_be_positive():
    with pytest.raises(InputError):
        surface.surface_spectrum(surface.load_resolution([[-1]], [1]), 0)
