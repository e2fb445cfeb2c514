"""Jumping numbers on a surface from log-resolution data.

Input is the intersection matrix ``A`` of the exceptional curves ``E_i``
(all smooth rational), the coefficients ``f`` of ``F`` with
``a . O_Y = O_Y(-F)`` and optionally the coefficients ``k`` of ``K_{Y|X}``.

With ``E = E^c`` the reduced divisor of curves having ``c f_i`` integral and
``L = K - floor(cF) + E``, the multiplicity is ``chi(L|_E)``.  Riemann-Roch on
a curve together with ``chi(O_E) = -(E^2 + E.K) / 2`` gives

    m(c) = E . (K + E - 2 floor(cF)) / 2.

The Rees coefficient is ``-F . E^c`` and the Rees valuations are the curves
with ``F . E_i < 0``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import Sequence

from .classes import JumpingClass, fit_class
from .errors import (
    AdjunctionMismatch,
    InputError,
    NegativeChi,
    NoReesValuation,
    NonIntegralCanonical,
    NotAntiNef,
    NotNegativeDefinite,
)
from .exact import as_fraction, determinant, solve_linear_system


@dataclass(frozen=True)
class SurfaceResolution:
    matrix: tuple[tuple[int, ...], ...]
    f: tuple[int, ...]
    k: tuple[int, ...]
    k_derived: bool = False

    @property
    def size(self) -> int:
        return len(self.f)

    def intersect(self, D1: Sequence, D2: Sequence):
        A = self.matrix
        return sum(D1[i] * A[i][j] * D2[j] for i in range(self.size) for j in range(self.size) if D1[i] and D2[j])

    def f_dot_curves(self) -> list[int]:
        """``F . E_i`` for every curve."""
        return [sum(a * x for a, x in zip(row, self.f)) for row in self.matrix]


def load_resolution(matrix, f, k=None) -> SurfaceResolution:
    try:
        A = tuple(tuple(int(x) for x in row) for row in matrix)
        f = tuple(int(x) for x in f)
    except (TypeError, ValueError) as exc:
        raise InputError(f"intersection data must be integers: {exc}") from exc
    g = len(A)
    if g == 0 or any(len(row) != g for row in A):
        raise InputError("intersection matrix must be square and non-empty")
    if len(f) != g:
        raise InputError(f"F has {len(f)} coefficients for {g} curves")
    if any(x < 1 for x in f):
        raise InputError("every coefficient of F must be >= 1")
    for i in range(g):
        for j in range(g):
            if A[i][j] != A[j][i]:
                raise InputError(f"intersection matrix not symmetric at ({i + 1},{j + 1})")
            if i != j and A[i][j] < 0:
                raise InputError(f"negative intersection number at ({i + 1},{j + 1})")
        if A[i][i] > -1:
            raise NotNegativeDefinite(f"self-intersection E_{i + 1}^2 = {A[i][i]} is not negative")
    for size in range(1, g + 1):
        minor = determinant([row[:size] for row in A[:size]])
        if (-1) ** size * minor <= 0:
            raise NotNegativeDefinite(f"leading principal minor of order {size} is {minor}")
    fdot = [sum(a * x for a, x in zip(row, f)) for row in A]
    if any(v > 0 for v in fdot):
        i = next(i for i, v in enumerate(fdot) if v > 0)
        raise NotAntiNef(f"F . E_{i + 1} = {fdot[i]} > 0")
    adjunction = [-2 - A[i][i] for i in range(g)]
    if k is None:
        sol = solve_linear_system(A, adjunction)
        if any(x.denominator != 1 for x in sol):
            raise NonIntegralCanonical(f"canonical divisor {[str(x) for x in sol]} is not integral")
        kk = tuple(int(x) for x in sol)
        if any(x < 0 for x in kk):
            raise NonIntegralCanonical(f"derived canonical divisor {kk} has a negative coefficient")
        derived = True
    else:
        kk = tuple(int(x) for x in k)
        if len(kk) != g:
            raise InputError(f"K has {len(kk)} coefficients for {g} curves")
        if any(x < 0 for x in kk):
            raise InputError("coefficients of K must be >= 0")
        got = [sum(a * x for a, x in zip(row, kk)) for row in A]
        if got != adjunction:
            i = next(i for i in range(g) if got[i] != adjunction[i])
            raise AdjunctionMismatch(
                f"K . E_{i + 1} = {got[i]} but a smooth rational curve needs {adjunction[i]}"
            )
        derived = False
    return SurfaceResolution(A, f, kk, derived)


@dataclass(frozen=True)
class SurfaceJumpRecord:
    c: Fraction
    jumping_divisor: frozenset
    multiplicity: int
    rees_coefficient: int
    contributors: frozenset


def jumping_divisor(R: SurfaceResolution, c) -> frozenset:
    """Curves (1-based) with ``c * f_i`` integral."""
    c = as_fraction(c)
    return frozenset(i + 1 for i, x in enumerate(R.f) if (c * x).denominator == 1)


def _floor_cf(R: SurfaceResolution, c: Fraction) -> list[int]:
    return [floor(c * x) for x in R.f]


def multiplicity(R: SurfaceResolution, c) -> int:
    c = as_fraction(c)
    E = jumping_divisor(R, c)
    if not E:
        return 0
    e = [int(i + 1 in E) for i in range(R.size)]
    D = [kk + ee - 2 * ff for kk, ee, ff in zip(R.k, e, _floor_cf(R, c))]
    twice = R.intersect(e, D)
    if twice < 0 or twice % 2:
        raise NegativeChi(f"Euler characteristic {Fraction(twice, 2)} at c = {c} is not a dimension")
    return twice // 2


def rees_coefficient(R: SurfaceResolution, c) -> int:
    fdot = R.f_dot_curves()
    return -sum(fdot[i - 1] for i in jumping_divisor(R, c))


def rees_valuations(R: SurfaceResolution) -> frozenset:
    out = frozenset(i + 1 for i, v in enumerate(R.f_dot_curves()) if v < 0)
    if not out:
        raise NoReesValuation("F . E_i = 0 for every curve; F is not the divisor of an ideal")
    return out


def contribution_check(R: SurfaceResolution, c, i: int) -> bool:
    """Whether ``E_i`` contributes ``c``: ``deg(K_{E_i} - floor(cF)|_{E_i}) >= 0``."""
    c = as_fraction(c)
    if i not in jumping_divisor(R, c):
        return False
    row = R.matrix[i - 1]
    return -2 - sum(a * x for a, x in zip(row, _floor_cf(R, c))) >= 0


def candidates(R: SurfaceResolution, bound) -> list[Fraction]:
    bound = as_fraction(bound)
    out = set()
    for x in R.f:
        for t in range(1, floor(bound * x) + 1):
            out.add(Fraction(t, x))
    return sorted(out)


def record(R: SurfaceResolution, c) -> SurfaceJumpRecord:
    c = as_fraction(c)
    E = jumping_divisor(R, c)
    return SurfaceJumpRecord(
        c,
        E,
        multiplicity(R, c),
        rees_coefficient(R, c),
        frozenset(i for i in E if contribution_check(R, c, i)),
    )


def surface_spectrum(R: SurfaceResolution, bound, include_zero: bool = False) -> list[SurfaceJumpRecord]:
    bound = as_fraction(bound)
    if bound <= 0:
        raise InputError("bound must be positive")
    records = [record(R, c) for c in candidates(R, bound)]
    if include_zero:
        return records
    return [r for r in records if r.multiplicity > 0]


def spectrum_dict(R: SurfaceResolution, bound) -> dict[Fraction, int]:
    return {r.c: r.multiplicity for r in surface_spectrum(R, bound)}


def log_canonical_threshold(R: SurfaceResolution) -> Fraction:
    # every class reaches a jump by c = 2 (the integers jump at 2)
    jumps = surface_spectrum(R, 2)
    return jumps[0].c


def surface_classes(R: SurfaceResolution) -> list[JumpingClass]:
    return [
        fit_class(c0, 2, lambda c: multiplicity(R, c), Fraction(rees_coefficient(R, c0)))
        for c0 in candidates(R, 1)
    ]
