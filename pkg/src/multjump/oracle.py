"""Brute-force referees for the monomial engine.

Nothing here touches the facet list built by :mod:`multjump.newton`; the
only shared code is the exact linear algebra.

* :func:`colength` counts staircase complements by slicing.
* :func:`direct_multiplicities` decides Howald membership from the generators
  alone: ``y`` is interior to ``c P(a)`` iff ``<mu, y> > c * min_g <mu, g>`` for
  every weight ``mu`` in the standard simplex, and the minimum of
  ``mu -> <mu, y> - c * min_g <mu, g>`` over the simplex is attained where
  generators tie or coordinates vanish.  Those tie points do not depend on
  ``y`` or ``c``; we enumerate them once.
* :func:`ehrhart_volume` counts lattice points in dilates of a facet using
  barycentric coordinates over subsets of its vertices.
* :func:`colength_growth_multiplicity` fits the Hilbert polynomial of
  ``dim A / a^n``.
"""
from __future__ import annotations

from bisect import bisect_left, bisect_right
from fractions import Fraction
from itertools import combinations, product
from math import factorial, floor
from typing import Iterable, Sequence

from .errors import DegenerateFacet, NotCofinite, SingularMatrix, Unstable
from .exact import IntVector, as_fraction, interpolate, lcm_all, rank, solve_linear_system
from .newton import Facet, MonomialIdeal, minimalize, pure_powers

MAX_POWER = 10


def _check_cofinite(gens: Sequence[IntVector], d: int) -> list[int]:
    powers = pure_powers(gens, d)
    if any(p is None for p in powers):
        raise NotCofinite("generator set misses a pure power; colength is infinite")
    return powers  # type: ignore[return-value]


def colength(generators: Iterable[Sequence[int]]) -> int:
    """Number of exponents not dominated by any generator."""
    gens = [tuple(g) for g in generators]
    if not gens:
        raise NotCofinite("empty generator set")
    d = len(gens[0])
    if any(not any(g) for g in gens):
        return 0
    _check_cofinite(gens, d)
    return _slice_count(gens, d)


def _slice_count(gens: list[IntVector], d: int) -> int:
    if any(not any(g) for g in gens):
        return 0
    if d == 1:
        return min(g[0] for g in gens)
    top = min(g[-1] for g in gens if not any(g[:-1]))
    total = 0
    for k in range(top):
        # exponents with last coordinate k avoid g iff their prefix avoids g'
        total += _slice_count([g[:-1] for g in gens if g[-1] <= k], d - 1)
    return total


def power_generators(ideal: MonomialIdeal, n: int) -> tuple[IntVector, ...]:
    gens = ((0,) * ideal.dimension,)
    for _ in range(n):
        gens = minimalize(tuple(a + b for a, b in zip(g, h)) for g in gens for h in ideal.generators)
    return gens


class SupportFunction:
    """Integer weights ``mu`` with ``h(mu) = min_g <mu, g> > 0`` at tie points."""

    def __init__(self, ideal: MonomialIdeal):
        self.ideal = ideal
        d = ideal.dimension
        gens = ideal.generators
        found = set()
        for k in range(d):
            for tied in combinations(gens, k + 1):
                for zeros in combinations(range(d), d - 1 - k):
                    rows = [[a - b for a, b in zip(g, tied[0])] for g in tied[1:]]
                    rows += [[int(j == z) for j in range(d)] for z in zeros]
                    rows.append([1] * d)
                    try:
                        mu = solve_linear_system(rows, [0] * (d - 1) + [1])
                    except SingularMatrix:
                        continue
                    if any(x < 0 for x in mu):
                        continue
                    scale = lcm_all(x.denominator for x in mu)
                    weight = tuple(int(x * scale) for x in mu)
                    found.add(weight)
        self.weights = []
        for mu in sorted(found):
            h = min(sum(a * b for a, b in zip(mu, g)) for g in gens)
            if h > 0:
                self.weights.append((mu, h))

    def threshold(self, y: Sequence[int]) -> Fraction:
        """Sup of ``c`` with ``y`` interior to ``c P(a)``."""
        return min(Fraction(sum(a * b for a, b in zip(mu, y)), h) for mu, h in self.weights)

    def interior(self, y: Sequence[int], c: Fraction) -> bool:
        return all(sum(a * b for a, b in zip(mu, y)) > c * h for mu, h in self.weights)


def _thresholds(ideal: MonomialIdeal, bound: Fraction) -> list[Fraction]:
    support = SupportFunction(ideal)
    powers = _check_cofinite(ideal.generators, ideal.dimension)
    # y_j > bound * a_j already forces y into the interior of bound * P(a)
    box = [range(1, floor(bound * a) + 1) for a in powers]
    return sorted(t for t in (support.threshold(y) for y in product(*box)) if t <= bound)


def direct_multiplicities(ideal: MonomialIdeal, bound) -> dict[Fraction, int]:
    """``m(c) = colength I(a^c) - colength I(a^(c - eps))`` for ``c <= bound``.

    The colength of ``I(a^c)`` is the number of ``u`` with ``u + 1`` outside
    the interior of ``c P(a)``; only the jumps are reported.
    """
    bound = as_fraction(bound)
    ts = _thresholds(ideal, bound)
    out = {}
    for c in sorted(set(ts)):
        at = bisect_right(ts, c)
        below = bisect_left(ts, c)
        if at - below:
            out[c] = at - below
    return out


def direct_multiplier_ideal(ideal: MonomialIdeal, c) -> tuple[IntVector, ...]:
    """Minimal generators of ``I(a^c)`` by a full box scan."""
    c = as_fraction(c)
    support = SupportFunction(ideal)
    powers = _check_cofinite(ideal.generators, ideal.dimension)
    box = [range(floor(c * a) + 2) for a in powers]
    members = [u for u in product(*box) if support.interior([x + 1 for x in u], c)]
    return minimalize(members)


def _in_hull(x: Sequence[int], vertices: Sequence[IntVector], dim: int) -> bool:
    """``x`` (on the facet hyperplane) lies in some vertex simplex."""
    d = len(x)
    for simplex in combinations(vertices, dim + 1):
        # barycentric coordinates from the first d-1 coordinates and sum = 1;
        # the dropped coordinate is implied by the hyperplane equation.
        rows = [[v[j] for v in simplex] for j in range(d - 1)] + [[1] * (dim + 1)]
        try:
            lam = solve_linear_system(rows, list(x[: d - 1]) + [1])
        except SingularMatrix:
            continue
        if all(t >= 0 for t in lam):
            return True
    return False


def ehrhart_counts(facet: Facet, t_max: int) -> list[int]:
    normal, b, verts = facet.normal, facet.offset, facet.vertices
    d = len(normal)
    if len(verts) < d or rank([[a - c for a, c in zip(v, verts[0])] for v in verts[1:]]) != d - 1:
        raise DegenerateFacet(f"facet {normal} is degenerate")
    counts = []
    for t in range(t_max + 1):
        scaled = [tuple(t * x for x in v) for v in verts]
        lo = [min(v[j] for v in scaled) for j in range(d)]
        hi = [max(v[j] for v in scaled) for j in range(d)]
        n = 0
        for prefix in product(*(range(lo[j], hi[j] + 1) for j in range(d - 1))):
            rest = t * b - sum(a * x for a, x in zip(normal, prefix))
            if rest % normal[-1]:
                continue
            point = prefix + (rest // normal[-1],)
            if t == 0 or _in_hull(point, scaled, d - 1):
                n += 1
        counts.append(n)
    return counts


def ehrhart_volume(facet: Facet) -> Fraction:
    """Leading coefficient of the Ehrhart polynomial of the facet."""
    d = len(facet.normal)
    counts = ehrhart_counts(facet, d - 1)
    poly = interpolate(list(enumerate(counts)))
    return poly.coefficient(d - 1)


def colength_series(ideal: MonomialIdeal, n_max: int) -> list[int]:
    out = []
    gens = ((0,) * ideal.dimension,)
    for _ in range(n_max):
        gens = minimalize(tuple(a + b for a, b in zip(g, h)) for g in gens for h in ideal.generators)
        out.append(colength(gens))
    return out


def colength_growth_multiplicity(ideal: MonomialIdeal, N: int = 8) -> Fraction:
    """``d!`` times the leading coefficient of ``n -> dim A / a^n``.

    The polynomial through the last ``d + 1`` samples must also pass through
    the sample before them; otherwise the Hilbert function had not yet become
    polynomial and :class:`Unstable` is raised.
    """
    d = ideal.dimension
    _check_cofinite(ideal.generators, d)
    if N < d + 2:
        raise ValueError(f"need N >= d + 2 = {d + 2}")
    if N > MAX_POWER:
        raise ValueError(f"powers are capped at {MAX_POWER}")
    values = colength_series(ideal, N)
    window = [(n, values[n - 1]) for n in range(N - d, N + 1)]
    poly = interpolate(window)
    earlier = N - d - 1
    if poly(earlier) != values[earlier - 1]:
        raise Unstable(f"Hilbert function not yet polynomial by n = {N}")
    return factorial(d) * poly.coefficient(d)


def stable_growth_multiplicity(ideal: MonomialIdeal, start: int = 8) -> Fraction:
    """:func:`colength_growth_multiplicity`, retrying with more powers."""
    for N in range(max(start, ideal.dimension + 2), MAX_POWER + 1):
        try:
            return colength_growth_multiplicity(ideal, N)
        except Unstable:
            continue
    raise Unstable(f"no stable window up to n = {MAX_POWER}")
