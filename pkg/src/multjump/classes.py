"""Jumping classes: the polynomial ``n -> m(c0 + n)`` attached to ``c0 in (0, 1]``."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable

from .errors import PolynomialityViolation
from .exact import RationalPolynomial, interpolate, to_binomial_basis


@dataclass(frozen=True)
class JumpingClass:
    representative: Fraction
    polynomial: RationalPolynomial
    rees_coefficient: Fraction
    gammas: tuple[Fraction, ...]
    dimension: int

    def multiplicity(self, n: int) -> Fraction:
        return self.polynomial(n)


def fit_class(
    representative: Fraction,
    dimension: int,
    multiplicity: Callable[[Fraction], int],
    rees_coefficient: Fraction,
) -> JumpingClass:
    """Interpolate on ``n = 0..d-1`` and insist on agreement for ``n = d..2d``."""
    d = dimension
    c0 = Fraction(representative)
    samples = [(n, multiplicity(c0 + n)) for n in range(d)]
    poly = interpolate(samples)
    for n in range(d, 2 * d + 1):
        got = multiplicity(c0 + n)
        if poly(n) != got:
            raise PolynomialityViolation(
                f"class {c0}: fitted {poly} predicts {poly(n)} at n={n}, scan gives {got}"
            )
    rho = Fraction(rees_coefficient)
    if poly.coefficient(d - 1) != rho:
        raise PolynomialityViolation(
            f"class {c0}: coefficient of n^{d - 1} is {poly.coefficient(d - 1)}, Rees coefficient {rho}"
        )
    gammas = tuple(to_binomial_basis(poly))
    assert not gammas or gammas[0] == samples[0][1]
    if len(gammas) == d:
        assert gammas[-1] == factorial(d - 1) * rho
    return JumpingClass(c0, poly, rho, gammas, d)
