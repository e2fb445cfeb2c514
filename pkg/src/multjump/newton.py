"""Newton polyhedra of cofinite monomial ideals.

Only the bounded facets are kept.  For an ideal with a pure power on every
axis a facet of ``P(a)`` is bounded exactly when its primitive normal is
strictly positive: a zero entry ``n_j`` would give ``<n, k e_j> = 0 < b`` for
the pure power ``k e_j``, so such a facet can only be a coordinate hyperplane.
The polyhedron is then ``{x >= 0 : <n_i, x> >= b_i for every facet i}``.

Volumes are measured against the lattice induced on each facet hyperplane
(covolume one), i.e. the leading coefficient of the facet's Ehrhart
polynomial.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import Iterable, Sequence

from .errors import DegenerateFacet, InputError, NotCofinite
from .exact import (
    IntVector,
    determinant,
    dot,
    hyperplane_normal,
    lattice_frame,
    rank,
)


def minimalize(vectors: Iterable[Sequence[int]]) -> tuple[IntVector, ...]:
    """Minimal elements under the componentwise order, sorted."""
    pts = sorted(set(tuple(v) for v in vectors), key=lambda v: (sum(v), v))
    kept: list[IntVector] = []
    for v in pts:
        if not any(all(a <= b for a, b in zip(g, v)) for g in kept):
            kept.append(v)
    return tuple(sorted(kept))


def pure_powers(generators: Iterable[Sequence[int]], dimension: int) -> list[int | None]:
    """Smallest pure power exponent on each axis (``None`` if absent)."""
    out: list[int | None] = [None] * dimension
    for g in generators:
        support = [j for j, x in enumerate(g) if x]
        if len(support) == 1:
            j = support[0]
            if out[j] is None or g[j] < out[j]:
                out[j] = g[j]
    return out


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal given by exponent vectors; dominated ones are dropped."""

    generators: tuple[IntVector, ...]
    dimension: int = 0

    def __post_init__(self):
        gens = [tuple(int(x) for x in g) for g in self.generators]
        if not gens:
            raise InputError("a monomial ideal needs at least one generator")
        d = self.dimension or len(gens[0])
        if d <= 0:
            raise InputError("dimension must be positive")
        for g in gens:
            if len(g) != d:
                raise InputError(f"generator {g} does not have length {d}")
            if any(x < 0 for x in g):
                raise InputError(f"generator {g} has a negative exponent")
        object.__setattr__(self, "generators", minimalize(gens))
        object.__setattr__(self, "dimension", d)

    @classmethod
    def maximal(cls, dimension: int) -> "MonomialIdeal":
        return cls(tuple(tuple(int(i == j) for j in range(dimension)) for i in range(dimension)))

    def axis_powers(self) -> list[int]:
        powers = pure_powers(self.generators, self.dimension)
        missing = [j for j, p in enumerate(powers) if p is None]
        if missing:
            raise NotCofinite(
                f"no pure power of x_{missing[0] + 1} among the generators; ideal is not cofinite"
            )
        return powers  # type: ignore[return-value]

    def is_cofinite(self) -> bool:
        return all(p is not None for p in pure_powers(self.generators, self.dimension))


@dataclass(frozen=True)
class Facet:
    normal: IntVector
    offset: int
    vertices: tuple[IntVector, ...]
    normalized_volume: Fraction = field(default=Fraction(0), compare=False)

    @property
    def dimension(self) -> int:
        return len(self.normal)


@dataclass(frozen=True)
class NewtonPolyhedron:
    dimension: int
    facets: tuple[Facet, ...]
    source: MonomialIdeal

    def contains(self, x: Sequence) -> bool:
        return all(v >= 0 for v in x) and all(dot(f.normal, x) >= f.offset for f in self.facets)

    @property
    def offsets(self) -> list[int]:
        return [f.offset for f in self.facets]


def build_newton(ideal: MonomialIdeal) -> NewtonPolyhedron:
    """Bounded facets of the Newton polyhedron.

    Every bounded facet is the convex hull of the generators lying on it, so
    it is spanned by some ``d`` affinely independent generators.  We try all
    ``d``-subsets and keep the hyperplanes with a strictly positive normal
    that no generator undercuts.
    """
    ideal.axis_powers()
    d = ideal.dimension
    gens = ideal.generators
    seen: dict[tuple[IntVector, int], tuple[IntVector, ...]] = {}
    for subset in combinations(gens, d):
        n = hyperplane_normal(subset)
        if not any(n):
            continue
        if n[0] < 0 or (n[0] == 0 and any(x < 0 for x in n)):
            n = tuple(-x for x in n)
        if not all(x > 0 for x in n):
            continue
        b = dot(n, subset[0])
        if (n, b) in seen:
            continue
        if any(dot(n, g) < b for g in gens):
            continue
        seen[(n, b)] = tuple(g for g in gens if dot(n, g) == b)
    facets = []
    for (n, b), verts in sorted(seen.items()):
        facets.append(Facet(n, b, verts, _facet_volume(n, verts)))
    return NewtonPolyhedron(d, tuple(facets), ideal)


# -- volumes -------------------------------------------------------------------

def _hull_facets(points: Sequence[IntVector]) -> list[tuple[IntVector, int, tuple[int, ...]]]:
    """Facets ``<n, x> >= b`` of the full dimensional hull of ``points`` in Z^k.

    Returns ``(normal, offset, indices of points on the facet)``.
    """
    k = len(points[0])
    out = {}
    for subset in combinations(range(len(points)), k):
        n = hyperplane_normal([points[i] for i in subset])
        if not any(n):
            continue
        b = dot(n, points[subset[0]])
        values = [dot(n, p) for p in points]
        if all(v >= b for v in values):
            pass
        elif all(v <= b for v in values):
            n, b = tuple(-x for x in n), -b
            values = [-v for v in values]
        else:
            continue
        tight = tuple(i for i, v in enumerate(values) if v == b)
        out.setdefault(tight, (n, b, tight))
    return list(out.values())


def _project(normal: IntVector, points: Sequence[IntVector]) -> list[IntVector]:
    """Integral coordinates of points of one hyperplane in its own lattice."""
    _, Uinv = lattice_frame(normal)
    base = points[0]
    out = []
    for p in points:
        diff = [a - b for a, b in zip(p, base)]
        y = [dot(row, diff) for row in Uinv]
        assert y[0] == 0
        out.append(tuple(y[1:]))
    return out


def pulling_triangulation(points: Sequence[IntVector]) -> list[tuple[int, ...]]:
    """Triangulate the hull of full dimensional ``points`` in Z^k.

    Cones from ``points[0]`` over the facets that miss it, recursively.
    Simplices are returned as tuples of indices into ``points``.
    """
    k = len(points[0]) if points else 0
    if k == 0:
        return [(0,)]
    if k == 1:
        lo = min(range(len(points)), key=lambda i: points[i][0])
        hi = max(range(len(points)), key=lambda i: points[i][0])
        return [(lo, hi)]
    simplices = []
    for n, b, tight in _hull_facets(points):
        if 0 in tight:
            continue
        sub = _project(n, [points[i] for i in tight])
        for s in pulling_triangulation(sub):
            simplices.append((0,) + tuple(tight[i] for i in s))
    return simplices


def _facet_volume(normal: IntVector, vertices: Sequence[IntVector]) -> Fraction:
    d = len(normal)
    if len(vertices) < d:
        raise DegenerateFacet(f"facet {normal} has only {len(vertices)} vertices")
    base = vertices[0]
    if rank([[a - b for a, b in zip(v, base)] for v in vertices[1:]]) != d - 1:
        raise DegenerateFacet(f"vertices of facet {normal} do not span a hyperplane")
    U, _ = lattice_frame(normal)
    w = [U[r][0] for r in range(d)]
    coords = _project(normal, vertices)
    if d == 1:
        return Fraction(1)
    total = 0
    for simplex in pulling_triangulation(coords):
        v0 = vertices[simplex[0]]
        rows = [[a - b for a, b in zip(vertices[i], v0)] for i in simplex[1:]]
        rows.append(w)
        total += abs(determinant(rows))
    return Fraction(total, factorial(d - 1))


def normalized_volume(facet: Facet) -> Fraction:
    """Lattice-normalized ``(d-1)``-volume of a facet.

    Sum over a triangulation of ``|det(v_1 - v_0, ..., v_{d-1} - v_0, w)| / (d-1)!``
    with ``<normal, w> = 1``.
    """
    return _facet_volume(facet.normal, facet.vertices)


def hilbert_samuel(P: NewtonPolyhedron) -> Fraction:
    """Hilbert-Samuel multiplicity from the facets.

    The staircase region under ``P(a)`` splits into cones from the origin over
    the bounded facets, each of normalized volume ``b_i * nvol(P_i) / d``.
    """
    d = P.dimension
    return factorial(d - 1) * sum((f.offset * f.normalized_volume for f in P.facets), Fraction(0))
