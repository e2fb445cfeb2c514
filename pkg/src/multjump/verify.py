"""Verification suites run by ``multjump verify``.

Each suite returns a list of :class:`Check` records carrying the values that
were compared, so a failure report is self-explanatory.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, floor

from . import monomial, oracle, series, surface
from .errors import MultJumpError, PolynomialityViolation
from .exact import format_fraction
from .newton import MonomialIdeal, build_newton, hilbert_samuel
from .surface import SurfaceResolution

SUITES = (
    "all",
    "hilbert-samuel",
    "polynomiality",
    "monotonicity",
    "skoda",
    "positivity",
    "poincare",
    "cross-engine",
    "oracle",
)


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.suite}: {self.name}: {self.detail}"


def _fmt(values) -> str:
    return "{" + ", ".join(str(v) for v in sorted(values)) + "}"


def monotonicity_checks(suite: str, spectrum: dict, bound: Fraction, d: int) -> list[Check]:
    """``m(c+1) >= m(c)``, and ``c`` jumps iff ``c+1`` does once ``c > d-1``."""
    bad_mono = [c for c, m in spectrum.items() if c + 1 <= bound and spectrum.get(c + 1, 0) < m]
    keys = set(spectrum)
    bad_period = [
        c
        for c in keys | {k - 1 for k in keys}
        if c > d - 1 and c + 1 <= bound and ((c in keys) != (c + 1 in keys))
    ]
    return [
        Check(suite, "m(c+1) >= m(c)", not bad_mono,
              f"{len(spectrum)} keys up to {bound}" + (f"; violated at {_fmt(bad_mono)}" if bad_mono else "")),
        Check(suite, "periodicity past d-1", not bad_period,
              f"d = {d}" + (f"; violated at {_fmt(bad_period)}" if bad_period else "")),
    ]


# -- monomial ------------------------------------------------------------------

class MonomialSubject:
    def __init__(self, ideal: MonomialIdeal, bound=None):
        self.ideal = ideal
        self.d = ideal.dimension
        self.P = build_newton(ideal)
        self.bound = Fraction(bound) if bound is not None else Fraction(self.d + 1)
        scan = max(self.bound, Fraction(3 * self.d))
        self._spectrum = monomial.jumping_spectrum(self.P, scan)
        self._classes = None

    @property
    def spectrum(self):
        return self._spectrum.restrict(self.bound).entries

    def classes(self):
        if self._classes is None:
            self._classes = monomial.all_classes(self.P, self._spectrum)
        return self._classes

    def hilbert_samuel(self) -> list[Check]:
        s = "hilbert-samuel"
        rho_sum = factorial(self.d - 1) * sum(
            (monomial.rees_coefficient(self.P, c0) for c0 in monomial.candidate_classes(self.P)), Fraction(0)
        )
        e = hilbert_samuel(self.P)
        growth = oracle.stable_growth_multiplicity(self.ideal)
        return [Check(s, "(d-1)! * sum rho = e = colength growth", rho_sum == e == growth,
                      f"{format_fraction(rho_sum)}, {format_fraction(e)}, {format_fraction(growth)}")]

    def polynomiality(self) -> list[Check]:
        s = "polynomiality"
        try:
            classes = self.classes()
        except PolynomialityViolation as exc:
            return [Check(s, "class polynomials", False, str(exc))]
        too_high = [str(c.representative) for c in classes
                    if c.polynomial.degree is not None and c.polynomial.degree > self.d - 1]
        return [Check(s, "fit on n<d reproduces n=d..2d", not too_high,
                      f"{len(classes)} classes" + (f"; degree too high for {too_high}" if too_high else ""))]

    def monotonicity(self) -> list[Check]:
        return monotonicity_checks("monotonicity", self.spectrum, self.bound, self.d)

    def skoda(self) -> list[Check]:
        s = "skoda"
        out = []
        for m in (self.d, self.d + 1):
            bad = [c0 for c0 in monomial.candidate_classes(self.P) if not monomial.skoda_check(self.P, c0, m)]
            out.append(Check(s, f"I(a^(c+{m})) = a * I(a^(c+{m - 1}))", not bad,
                             "all candidate c in (0,1]" + (f"; fails at {_fmt(bad)}" if bad else "")))
        return out

    def positivity(self) -> list[Check]:
        s = "positivity"
        zero = [c for c in self.spectrum if monomial.rees_coefficient(self.P, c) <= 0]
        missing = []
        for f in self.P.facets:
            for ell in range((self.d - 1) * f.offset + 1, self.d * f.offset + 1):
                c = Fraction(ell, f.offset)
                if c <= self._spectrum.bound and c not in self._spectrum.entries:
                    missing.append(c)
        rho1 = factorial(self.d - 1) * monomial.rees_coefficient(self.P, 1)
        return [
            Check(s, "rho_c > 0 for every jumping number", not zero,
                  f"{len(self.spectrum)} jumping numbers" + (f"; rho = 0 at {_fmt(zero)}" if zero else "")),
            Check(s, "(d-1)! rho_1 >= number of Rees valuations", rho1 >= len(self.P.facets),
                  f"{format_fraction(rho1)} >= {len(self.P.facets)}"),
            Check(s, "l/b_i in (d-1, d] are jumping numbers", not missing,
                  f"{len(self.P.facets)} facets" + (f"; missing {_fmt(missing)}" if missing else "")),
        ]

    def poincare(self) -> list[Check]:
        s = "poincare"
        N = 3 * self.d
        ps = series.assemble(self.classes())
        bad = series.spectrum_mismatches(series.expand(ps, N), self._spectrum.entries, N)
        return [Check(s, f"expansion matches spectrum up to T^{N}", not bad,
                      f"l = {ps.denominator_exponent}, {len(ps.terms)} terms" + (f"; mismatches {bad[:5]}" if bad else ""))]

    def oracle(self) -> list[Check]:
        s = "oracle"
        B = Fraction(self.d + 1)
        direct = oracle.direct_multiplicities(self.ideal, B)
        engine = self._spectrum.restrict(B).entries
        vols = [(f.normal, oracle.ehrhart_volume(f), f.normalized_volume) for f in self.P.facets]
        bad_vol = [v for v in vols if v[1] != v[2]]
        return [
            Check(s, f"colength differences = spectrum up to {B}", direct == engine,
                  f"{len(direct)} vs {len(engine)} jumping numbers"),
            Check(s, "Ehrhart volume = normalized volume", not bad_vol,
                  f"{len(vols)} facets" + (f"; differ {bad_vol}" if bad_vol else "")),
        ]


# -- surface -------------------------------------------------------------------

class SurfaceSubject:
    d = 2

    def __init__(self, R: SurfaceResolution, bound=None):
        self.R = R
        self.bound = Fraction(bound) if bound is not None else Fraction(2)
        self.rees = surface.rees_valuations(R)

    @property
    def spectrum(self):
        return surface.spectrum_dict(self.R, self.bound)

    def hilbert_samuel(self) -> list[Check]:
        rho_sum = sum(surface.rees_coefficient(self.R, c0) for c0 in surface.candidates(self.R, 1))
        e = -self.R.intersect(self.R.f, self.R.f)
        return [Check("hilbert-samuel", "sum rho = -F.F", rho_sum == e, f"{rho_sum}, {e}")]

    def polynomiality(self) -> list[Check]:
        s = "polynomiality"
        try:
            classes = surface.surface_classes(self.R)
        except PolynomialityViolation as exc:
            return [Check(s, "class polynomials", False, str(exc))]
        bad = []
        for c in surface.candidates(self.R, self.bound):
            c0 = c - floor(c) if c != floor(c) else Fraction(1)
            n = int(c - c0)
            if surface.multiplicity(self.R, c) != surface.multiplicity(self.R, c0) + n * surface.rees_coefficient(self.R, c0):
                bad.append(c)
        return [Check(s, "m(c+n) = m(c) + n rho_c", not bad,
                      f"{len(classes)} classes" + (f"; fails at {_fmt(bad)}" if bad else ""))]

    def monotonicity(self) -> list[Check]:
        return monotonicity_checks("monotonicity", self.spectrum, self.bound, 2)

    def skoda(self) -> list[Check]:
        return [Check("skoda", "not applicable", True, "surface input carries no ideal generators")]

    def positivity(self) -> list[Check]:
        s = "positivity"
        R = self.R
        cands = surface.candidates(R, self.bound)
        bad_equiv = [c for c in cands
                     if (surface.rees_coefficient(R, c) > 0) != bool(surface.jumping_divisor(R, c) & self.rees)]
        rho1 = surface.rees_coefficient(R, 1)
        bad_contrib = []
        for c in cands:
            if surface.rees_coefficient(R, c) > 0 and c + 1 <= self.bound:
                hit = [i for i in surface.jumping_divisor(R, c) & self.rees
                       if surface.contribution_check(R, c + 1, i)]
                if not hit or surface.multiplicity(R, c + 1) <= 0:
                    bad_contrib.append(c)
        missing = []
        for i in self.rees:
            fi = R.f[i - 1]
            for ell in range(fi + 1, 2 * fi + 1):
                if surface.multiplicity(R, Fraction(ell, fi)) <= 0:
                    missing.append(Fraction(ell, fi))
        return [
            Check(s, "rho_c > 0 iff E^c meets the Rees set", not bad_equiv,
                  f"Rees set {_fmt(self.rees)}, {len(cands)} candidates" + (f"; fails at {_fmt(bad_equiv)}" if bad_equiv else "")),
            Check(s, "rho_1 >= number of Rees valuations", rho1 >= len(self.rees), f"{rho1} >= {len(self.rees)}"),
            Check(s, "c+1 contributed by a Rees valuation when rho_c > 0", not bad_contrib,
                  "checked" + (f"; fails at {_fmt(bad_contrib)}" if bad_contrib else "")),
            Check(s, "l/f_i in (1, 2] are jumping numbers", not missing,
                  f"{len(self.rees)} Rees valuations" + (f"; missing {_fmt(missing)}" if missing else "")),
        ]

    def poincare(self) -> list[Check]:
        N = 6
        ps = series.assemble(surface.surface_classes(self.R))
        bad = series.spectrum_mismatches(series.expand(ps, N), surface.spectrum_dict(self.R, N), N)
        return [Check("poincare", f"expansion matches spectrum up to T^{N}", not bad,
                      f"l = {ps.denominator_exponent}, {len(ps.terms)} terms" + (f"; mismatches {bad[:5]}" if bad else ""))]

    def oracle(self) -> list[Check]:
        return [Check("oracle", "not applicable", True, "no independent oracle for surface data")]


def cross_engine(bound=10) -> list[Check]:
    bound = Fraction(bound)
    mono = monomial.jumping_spectrum(build_newton(MonomialIdeal.maximal(2)), bound).entries
    surf = surface.spectrum_dict(surface.load_resolution([[-1]], [1], [1]), bound)
    return [Check("cross-engine", "maximal ideal, monomial vs single blow-up", mono == surf,
                  ", ".join(f"{c}:{m}" for c, m in mono.items()) + ("" if mono == surf else f" vs {surf}"))]


def run(subject, suite: str) -> list[Check]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    names = SUITES[1:] if suite == "all" else (suite,)
    out = []
    for name in names:
        if name == "cross-engine":
            out.extend(cross_engine())
            continue
        method = getattr(subject, name.replace("-", "_"))
        try:
            out.extend(method())
        except MultJumpError as exc:
            out.append(Check(name, "error", False, f"{type(exc).__name__}: {exc}"))
    return out
