"""Poincare series of jumping numbers as a rational function of ``z = T^(1/l)``.

Each class ``c0 in (0, 1]`` contributes

    T^c0 * sum_i gamma_i * sum_n p_i(n) T^n,

and ``sum_n p_i(n) T^n`` is ``1/(1-T)`` for ``i = 0`` and ``T/(1-T)^(i+1)``
otherwise.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .classes import JumpingClass
from .exact import format_fraction, from_binomial_basis, lcm_all


@dataclass(frozen=True)
class SeriesTerm:
    representative: Fraction
    gammas: tuple[Fraction, ...]


@dataclass(frozen=True)
class PoincareSeries:
    denominator_exponent: int
    terms: tuple[SeriesTerm, ...]
    dimension: int = 0


@dataclass(frozen=True)
class SeriesExpansion:
    order: int
    coefficients: dict = field(default_factory=dict)

    def to_json(self) -> list[dict]:
        return [
            {"exponent": format_fraction(c), "coefficient": format_fraction(v)}
            for c, v in sorted(self.coefficients.items())
        ]


def assemble(classes: Iterable[JumpingClass]) -> PoincareSeries:
    """One term per class with a non-zero polynomial.

    ``l`` is the lcm of the denominators of those representatives, so every
    exponent of the series lies in ``(1/l) Z``.
    """
    terms = []
    dim = 0
    for cls in sorted(classes, key=lambda c: c.representative):
        dim = max(dim, cls.dimension)
        if cls.polynomial.is_zero():
            continue
        terms.append(SeriesTerm(cls.representative, tuple(cls.gammas)))
    ell = lcm_all(t.representative.denominator for t in terms)
    return PoincareSeries(ell, tuple(terms), dim)


def expand(series: PoincareSeries, N: int) -> SeriesExpansion:
    """Coefficients of ``T^c`` for ``c <= N``; zero coefficients are dropped."""
    if N < 1:
        raise ValueError("expansion order must be >= 1")
    coeffs = {}
    for term in series.terms:
        n = 0
        while term.representative + n <= N:
            value = from_binomial_basis(term.gammas, n)
            if value:
                c = term.representative + n
                coeffs[c] = coeffs.get(c, 0) + value
            n += 1
    return SeriesExpansion(N, dict(sorted((c, v) for c, v in coeffs.items() if v)))


def _z_power(e: int) -> str:
    if e == 0:
        return ""
    return "z" if e == 1 else f"z^{e}"


def _piece(gamma: Fraction, num_exp: int, ell: int, power: int) -> str:
    base = "(1-z)" if ell == 1 else f"(1-z^{ell})"
    den = base if power == 1 else f"{base}^{power}"
    mag = abs(gamma)
    monomial = _z_power(num_exp)
    if monomial:
        head = monomial if mag == 1 else f"{format_fraction(mag)}*{monomial}"
    else:
        head = format_fraction(mag)
    return f"{head}/{den}"


def render(series: PoincareSeries) -> str:
    """Deterministic text, terms by increasing ``c0`` then basis index."""
    ell = series.denominator_exponent
    parts = []
    for term in series.terms:
        shift = int(term.representative * ell)
        for i, gamma in enumerate(term.gammas):
            if gamma == 0:
                continue
            num_exp = shift + (ell if i else 0)
            body = _piece(gamma, num_exp, ell, i + 1)
            if not parts:
                parts.append(body if gamma > 0 else f"-{body}")
            else:
                parts.append(("+ " if gamma > 0 else "- ") + body)
    return " ".join(parts) if parts else "0"


def spectrum_mismatches(expansion: SeriesExpansion, spectrum: dict, up_to) -> list[tuple]:
    """Exponents ``<= up_to`` where series and spectrum disagree."""
    keys = {c for c in expansion.coefficients if c <= up_to} | {c for c in spectrum if c <= up_to}
    return [
        (c, expansion.coefficients.get(c, 0), spectrum.get(c, 0))
        for c in sorted(keys)
        if expansion.coefficients.get(c, 0) != spectrum.get(c, 0)
    ]
