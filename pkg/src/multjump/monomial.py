"""Jumping numbers of cofinite monomial ideals.

By Howald, ``x^u`` lies in the multiplier ideal of ``a^c`` iff ``u + 1`` is an
interior point of ``c P(a)``.  A point ``v`` of ``1 + N^d`` therefore leaves
the multiplier ideals exactly at its scaling value
``min_i <n_i, v> / b_i``, and ``m(c)`` counts the points with value ``c``.

The Rees coefficient of ``c`` is the total normalized volume of the facets
with ``c * b_i`` integral.  This divisibility test is the translation
invariant form of "the dilated hyperplane contains lattice points": for a
primitive positive normal, ``<n, x> = (c + k) b`` has solutions in ``N^d`` for
all large ``k`` iff ``c b`` is an integer.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import floor
from typing import Iterable, Sequence

from . import kernels
from .classes import JumpingClass, fit_class
from .errors import BadLatticePoint, InputError
from .exact import IntVector, as_fraction, dot
from .newton import NewtonPolyhedron, minimalize


@dataclass(frozen=True)
class JumpingSpectrum:
    """Jumping numbers ``0 < c <= bound`` with their multiplicities."""

    bound: Fraction
    entries: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "entries", dict(sorted(self.entries.items())))

    def m(self, c) -> int:
        c = Fraction(c)
        if c > self.bound:
            raise ValueError(f"{c} lies beyond the scanned bound {self.bound}")
        return self.entries.get(c, 0)

    def keys(self) -> list[Fraction]:
        return list(self.entries)

    def restrict(self, bound) -> "JumpingSpectrum":
        bound = Fraction(bound)
        return JumpingSpectrum(bound, {c: m for c, m in self.entries.items() if c <= bound})

    def __len__(self):
        return len(self.entries)


def _facet_data(P: NewtonPolyhedron):
    return [list(f.normal) for f in P.facets], [f.offset for f in P.facets]


def scaling_value(P: NewtonPolyhedron, v: Sequence[int]) -> Fraction:
    if len(v) != P.dimension or any(x < 1 for x in v):
        raise BadLatticePoint(f"{tuple(v)} is not in 1 + N^{P.dimension}")
    return min(Fraction(dot(f.normal, v), f.offset) for f in P.facets)


def scan_box(P: NewtonPolyhedron, bound: Fraction) -> list[int]:
    """Per-coordinate limit of points with scaling value at most ``bound``."""
    return [
        max(floor(bound * f.offset / f.normal[j]) for f in P.facets)
        for j in range(P.dimension)
    ]


def jumping_spectrum(P: NewtonPolyhedron, bound, backend=None) -> JumpingSpectrum:
    bound = as_fraction(bound)
    if bound <= 0:
        raise InputError("bound must be positive")
    normals, offsets = _facet_data(P)
    counts = kernels.scaling_counts(
        normals, offsets, scan_box(P, bound), bound.numerator, bound.denominator, backend=backend
    )
    return JumpingSpectrum(bound, {Fraction(p, q): m for (p, q), m in counts.items()})


def rees_coefficient(P: NewtonPolyhedron, c) -> Fraction:
    c = as_fraction(c)
    return sum(
        (f.normalized_volume for f in P.facets if (c * f.offset).denominator == 1),
        Fraction(0),
    )


def candidate_classes(P: NewtonPolyhedron) -> list[Fraction]:
    """Representatives ``c0 in (0, 1]`` with ``c0 * b_i`` integral for some facet."""
    return sorted({Fraction(t, f.offset) for f in P.facets for t in range(1, f.offset + 1)})


def class_polynomial(P: NewtonPolyhedron, c0, spectrum: JumpingSpectrum | None = None) -> JumpingClass:
    c0 = as_fraction(c0)
    if not 0 < c0 <= 1:
        raise InputError(f"class representative {c0} is not in (0, 1]")
    d = P.dimension
    if spectrum is None or spectrum.bound < c0 + 2 * d:
        spectrum = jumping_spectrum(P, c0 + 2 * d)
    return fit_class(c0, d, spectrum.m, rees_coefficient(P, c0))


def all_classes(P: NewtonPolyhedron, spectrum: JumpingSpectrum | None = None) -> list[JumpingClass]:
    d = P.dimension
    if spectrum is None or spectrum.bound < 2 * d + 1:
        spectrum = jumping_spectrum(P, 2 * d + 1)
    return [class_polynomial(P, c0, spectrum) for c0 in candidate_classes(P)]


def multiplier_ideal_generators(P: NewtonPolyhedron, c, backend=None) -> tuple[IntVector, ...]:
    """Minimal exponents of the multiplier ideal of ``a^c``.

    For each prefix ``u'`` the kernel returns the least last coordinate that
    makes ``(u', k)`` a member; ``(u', k)`` is a minimal generator iff every
    neighbour ``u' - e_j`` needs a strictly larger height.
    """
    c = as_fraction(c)
    if c <= 0:
        raise InputError("c must be positive")
    d = P.dimension
    powers = P.source.axis_powers()
    # a member needs u_j + 1 > c * a_j along any axis; minimal ones stay below
    prefix_upper = [floor(c * a) for a in powers[:-1]]
    normals, offsets = _facet_data(P)
    heights = kernels.staircase_heights(
        normals, offsets, prefix_upper, c.numerator, c.denominator, backend=backend
    )
    prefixes = list(product(*(range(u + 1) for u in prefix_upper)))
    table = dict(zip(prefixes, heights))
    gens = []
    for prefix, k in table.items():
        minimal = True
        for j in range(d - 1):
            if prefix[j] > 0:
                below = prefix[:j] + (prefix[j] - 1,) + prefix[j + 1:]
                if table[below] <= k:
                    minimal = False
                    break
        if minimal:
            gens.append(prefix + (k,))
    return tuple(sorted(gens))


def ideal_product(left: Iterable[Sequence[int]], right: Iterable[Sequence[int]]) -> tuple[IntVector, ...]:
    right = list(right)
    return minimalize(tuple(a + b for a, b in zip(g, h)) for g in left for h in right)


def skoda_check(P: NewtonPolyhedron, c, m: int) -> bool:
    c = as_fraction(c)
    if m < P.dimension:
        raise InputError(f"Skoda needs m >= d = {P.dimension}, got {m}")
    lhs = multiplier_ideal_generators(P, c + m)
    rhs = ideal_product(P.source.generators, multiplier_ideal_generators(P, c + m - 1))
    return lhs == rhs
