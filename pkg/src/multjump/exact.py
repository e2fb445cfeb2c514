"""Exact scalars, integer linear algebra and polynomial interpolation.

Rationals are :class:`fractions.Fraction` throughout; they are always kept in
lowest terms with a positive denominator.  Integer vectors are plain tuples.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, gcd
from typing import Iterable, Sequence

from .errors import DuplicateAbscissa, InputError, SingularMatrix

IntVector = tuple  # tuple[int, ...]


def as_fraction(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings; floats are refused."""
    if isinstance(value, float):
        raise InputError(f"floating point value {value!r} not accepted; use 'p/q'")
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"cannot parse rational {value!r}") from exc
    return Fraction(value)


def format_fraction(value) -> str:
    return str(Fraction(value))


def dot(u: Sequence[int], v: Sequence[int]):
    return sum(a * b for a, b in zip(u, v))


def primitive(v: Sequence[int]) -> IntVector:
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        return tuple(v)
    return tuple(x // g for x in v)


def lcm_all(values: Iterable[int]) -> int:
    out = 1
    for v in values:
        out = out * v // gcd(out, v)
    return out


# -- Bareiss elimination -------------------------------------------------------

def _bareiss(rows: list[list[int]], ncols: int) -> tuple[list[list[int]], list[int], int]:
    """Fraction-free forward elimination in place.

    Returns the echelon rows, the pivot columns and the sign of the row
    permutation.  Entries stay integral: every division below is exact.
    """
    m = len(rows)
    pivots = []
    sign = 1
    prev = 1
    r = 0
    for col in range(ncols):
        if r == m:
            break
        p = next((i for i in range(r, m) if rows[i][col] != 0), None)
        if p is None:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
            sign = -sign
        piv = rows[r][col]
        for i in range(r + 1, m):
            ri = rows[i]
            a = ri[col]
            rr = rows[r]
            for j in range(col + 1, len(ri)):
                ri[j] = (piv * ri[j] - a * rr[j]) // prev
            ri[col] = 0
        prev = piv
        pivots.append(col)
        r += 1
    return rows, pivots, sign


def determinant(matrix: Sequence[Sequence[int]]) -> int:
    n = len(matrix)
    if n == 0:
        return 1
    rows = [list(map(int, row)) for row in matrix]
    if any(len(row) != n for row in rows):
        raise ValueError("determinant of a non-square matrix")
    rows, pivots, sign = _bareiss(rows, n)
    if len(pivots) < n:
        return 0
    return sign * rows[n - 1][n - 1]


def rank(matrix: Sequence[Sequence[int]]) -> int:
    if not matrix:
        return 0
    rows = [list(map(int, row)) for row in matrix]
    _, pivots, _ = _bareiss(rows, len(rows[0]))
    return len(pivots)


def solve_linear_system(matrix: Sequence[Sequence[int]], rhs: Sequence[int]) -> list[Fraction]:
    """Solve ``matrix @ x = rhs`` exactly.

    Fraction-free elimination on the augmented matrix keeps every
    intermediate entry an integer; only back substitution creates fractions.
    """
    n = len(matrix)
    if len(rhs) != n or any(len(row) != n for row in matrix):
        raise ValueError("solve_linear_system needs a square system")
    rows = [list(map(int, row)) + [int(b)] for row, b in zip(matrix, rhs)]
    rows, pivots, _ = _bareiss(rows, n)
    if len(pivots) < n:
        raise SingularMatrix("matrix is singular")
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = Fraction(rows[i][n])
        for j in range(i + 1, n):
            acc -= rows[i][j] * x[j]
        x[i] = acc / rows[i][i]
    return x


def lattice_frame(normal: Sequence[int]) -> tuple[list[list[int]], list[list[int]]]:
    """Unimodular ``U`` (and its inverse) with ``normal @ U == e_1``.

    ``normal`` must be primitive.  Column 0 of ``U`` is then an integer vector
    ``w`` with ``<normal, w> = 1`` and the remaining columns are a basis of the
    lattice ``normal^perp ∩ Z^d``.  Row 0 of ``U^{-1}`` equals ``normal``.
    """
    d = len(normal)
    row = list(normal)
    U = [[int(i == j) for j in range(d)] for i in range(d)]
    Uinv = [[int(i == j) for j in range(d)] for i in range(d)]
    while sum(1 for x in row if x) > 1:
        p = min((j for j in range(d) if row[j]), key=lambda j: abs(row[j]))
        for j in range(d):
            if j == p or row[j] == 0:
                continue
            q = row[j] // row[p]
            row[j] -= q * row[p]
            for r in range(d):
                U[r][j] -= q * U[r][p]
            Uinv[p] = [a + q * b for a, b in zip(Uinv[p], Uinv[j])]
    p = next(j for j in range(d) if row[j])
    if abs(row[p]) != 1:
        raise ValueError(f"normal {tuple(normal)} is not primitive")
    if p != 0:
        for r in range(d):
            U[r][0], U[r][p] = U[r][p], U[r][0]
        Uinv[0], Uinv[p] = Uinv[p], Uinv[0]
        row[0], row[p] = row[p], row[0]
    if row[0] < 0:
        for r in range(d):
            U[r][0] = -U[r][0]
        Uinv[0] = [-a for a in Uinv[0]]
    return U, Uinv


def hyperplane_normal(points: Sequence[Sequence[int]]) -> IntVector:
    """Primitive integer normal of the hyperplane through ``d`` points of Z^d.

    The zero vector comes back when the points are affinely dependent.
    Sign is whatever the cofactor expansion produces.
    """
    d = len(points[0])
    base = points[0]
    diffs = [[a - b for a, b in zip(p, base)] for p in points[1:]]
    normal = []
    for j in range(d):
        minor = [r[:j] + r[j + 1:] for r in diffs]
        normal.append((-1) ** j * determinant(minor))
    return primitive(normal)


# -- polynomials ---------------------------------------------------------------

def _trim(coefficients: Iterable) -> tuple[Fraction, ...]:
    cs = [Fraction(c) for c in coefficients]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


@dataclass(frozen=True)
class RationalPolynomial:
    """Polynomial in one variable ``n``; ``coefficients[k]`` multiplies ``n**k``."""

    coefficients: tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coefficients", _trim(self.coefficients))

    @property
    def degree(self) -> int | None:
        """Degree, or ``None`` for the zero polynomial."""
        return len(self.coefficients) - 1 if self.coefficients else None

    def is_zero(self) -> bool:
        return not self.coefficients

    def coefficient(self, k: int) -> Fraction:
        return self.coefficients[k] if 0 <= k < len(self.coefficients) else Fraction(0)

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __add__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        n = max(len(self.coefficients), len(other.coefficients))
        return RationalPolynomial(tuple(self.coefficient(k) + other.coefficient(k) for k in range(n)))

    def __sub__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        return self + other.scale(-1)

    def scale(self, factor) -> "RationalPolynomial":
        return RationalPolynomial(tuple(c * factor for c in self.coefficients))

    def __mul__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        if self.is_zero() or other.is_zero():
            return RationalPolynomial()
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return RationalPolynomial(tuple(out))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for k in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "n" if k == 1 else f"n^{k}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def to_json(self) -> list[str]:
        return [format_fraction(c) for c in self.coefficients]


def interpolate(samples: Sequence[tuple[int, object]]) -> RationalPolynomial:
    """Unique polynomial of degree < len(samples) through the given points.

    Newton divided differences, expanded into the monomial basis at the end.
    """
    xs = [Fraction(x) for x, _ in samples]
    if len(set(xs)) != len(xs):
        raise DuplicateAbscissa(f"repeated abscissa among {[x for x, _ in samples]}")
    table = [Fraction(y) for _, y in samples]
    n = len(xs)
    newton = []
    for level in range(n):
        newton.append(table[0])
        table = [(table[i + 1] - table[i]) / (xs[i + level + 1] - xs[i]) for i in range(n - level - 1)]
    # Horner on the Newton form: p = c0 + (n - x0)(c1 + (n - x1)(c2 + ...))
    poly = RationalPolynomial()
    for k in range(n - 1, -1, -1):
        poly = poly * RationalPolynomial((-xs[k], Fraction(1))) + RationalPolynomial((newton[k],))
    return poly


def binomial_basis_polynomial(i: int) -> RationalPolynomial:
    """``p_0 = 1`` and ``p_i(n) = C(n + i - 1, i)`` for ``i >= 1``."""
    if i == 0:
        return RationalPolynomial((Fraction(1),))
    poly = RationalPolynomial((Fraction(1),))
    for j in range(i):
        poly = poly * RationalPolynomial((Fraction(j), Fraction(1)))
    return poly.scale(Fraction(1, factorial(i)))


def to_binomial_basis(p: RationalPolynomial) -> list[Fraction]:
    """Coordinates of ``p`` in the basis ``p_0, p_1, ...``.

    ``p_i`` has degree ``i`` and leading coefficient ``1/i!``, so peeling off
    the top degree each round recovers the coordinates exactly.
    """
    if p.is_zero():
        return []
    gammas = [Fraction(0)] * (p.degree + 1)
    rest = p
    for k in range(p.degree, -1, -1):
        g = rest.coefficient(k) * factorial(k)
        gammas[k] = g
        if g:
            rest = rest - binomial_basis_polynomial(k).scale(g)
    assert rest.is_zero()
    return gammas


def from_binomial_basis(gammas: Sequence, n: int) -> Fraction:
    """Evaluate ``sum_i gammas[i] * p_i(n)`` at an integer ``n >= 0``."""
    total = Fraction(0)
    for i, g in enumerate(gammas):
        total += Fraction(g) * (1 if i == 0 else comb(n + i - 1, i))
    return total
