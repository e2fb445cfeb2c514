"""Command-line front end.

    multjump monomial --input x3_y2 --bound 2 --series
    multjump surface --input x5_plus_y3_y4 --bound 1
    multjump poincare --input maximal_ideal_2d
    multjump verify --input x5_plus_y3_y4 --suite positivity

``--input`` takes a JSON path or the name of a bundled fixture.  Exit codes:
0 on success, 1 when a verification check fails, 2 on invalid input.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import monomial, series, surface, verify
from .documents import (
    document_kind,
    fixture_names,
    monomial_from_document,
    read_document,
    surface_from_document,
)
from .errors import InputError, ValidationError
from .exact import as_fraction, format_fraction
from .newton import build_newton

EXIT_OK, EXIT_FAILED, EXIT_INVALID = 0, 1, 2


def _bound(text: str | None) -> Fraction | None:
    if text is None:
        return None
    try:
        value = as_fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bound {text!r} is not a rational P/Q") from exc
    if value <= 0:
        raise InputError("bound must be positive")
    return value


def _subset(indices) -> str:
    return "{" + ",".join(str(i) for i in sorted(indices)) + "}"


def _table(header: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(h), *(len(r[j]) for r in rows)) if rows else len(h) for j, h in enumerate(header)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(x.ljust(w) for x, w in zip(r, widths)).rstrip() for r in rows]
    return "\n".join(lines) + "\n"


def _csv(header: list[str], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _class_of(c: Fraction) -> Fraction:
    c0 = c - (c.numerator // c.denominator)
    return c0 if c0 else Fraction(1)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# -- subcommands ---------------------------------------------------------------

def run_monomial(args) -> str:
    ideal = monomial_from_document(read_document(args.input))
    P = build_newton(ideal)
    d = ideal.dimension
    bound = _bound(args.bound) or Fraction(d + 1)
    spectrum = monomial.jumping_spectrum(P, max(bound, Fraction(2 * d + 1)))
    classes = {cls.representative: cls for cls in monomial.all_classes(P, spectrum)}
    shown = spectrum.restrict(bound).entries
    if args.include_zero_candidates:
        for c0 in classes:
            n = 0
            while c0 + n <= bound:
                shown.setdefault(c0 + n, 0)
                n += 1
        shown = dict(sorted(shown.items()))
    rows = []
    for c, m in shown.items():
        cls = classes[_class_of(c)]
        rows.append((c, m, cls))
    ps = series.assemble(classes.values()) if args.series else None

    if args.format == "json":
        data = [{"c": format_fraction(c), "m": m, "rho": format_fraction(cls.rees_coefficient)} for c, m, cls in rows]
        if ps is None:
            return _dump(data)
        return _dump({"spectrum": data, "series": series.render(ps)})
    header = ["c", "m(c)", "rho", "class", "polynomial"]
    body = [
        [format_fraction(c), str(m), format_fraction(cls.rees_coefficient),
         format_fraction(cls.representative), str(cls.polynomial)]
        for c, m, cls in rows
    ]
    if args.format == "csv":
        return _csv(header, body)
    out = _table(header, body)
    if ps is not None:
        out += f"\nl = {ps.denominator_exponent}\nseries: {series.render(ps)}\n"
    return out


def run_surface(args) -> str:
    R = surface_from_document(read_document(args.input))
    bound = _bound(args.bound) or Fraction(2)
    rees = surface.rees_valuations(R)
    records = surface.surface_spectrum(R, bound, include_zero=args.include_zero_candidates)
    classes = {cls.representative: cls for cls in surface.surface_classes(R)}
    ps = series.assemble(classes.values()) if args.series else None

    if args.format == "json":
        data = {
            "K": list(R.k),
            "K_derived": R.k_derived,
            "rees_valuations": sorted(rees),
            "records": [
                {"c": format_fraction(r.c), "m": r.multiplicity, "rho": str(r.rees_coefficient),
                 "E": sorted(r.jumping_divisor), "contributors": sorted(r.contributors)}
                for r in records
            ],
        }
        if ps is not None:
            data["series"] = series.render(ps)
        return _dump(data)
    header = ["c", "m(c)", "rho", "E^c", "polynomial", "contributors"]
    body = [
        [format_fraction(r.c), str(r.multiplicity), str(r.rees_coefficient), _subset(r.jumping_divisor),
         str(classes[_class_of(r.c)].polynomial), _subset(r.contributors)]
        for r in records
    ]
    if args.format == "csv":
        return _csv(header, body)
    k_label = "K (derived)" if R.k_derived else "K"
    out = f"{k_label} = ({', '.join(map(str, R.k))})\nRees valuations: {_subset(rees)}\n\n"
    out += _table(header, body)
    if ps is not None:
        out += f"\nl = {ps.denominator_exponent}\nseries: {series.render(ps)}\n"
    return out


def _load_classes(doc: dict):
    if document_kind(doc) == "monomial":
        P = build_newton(monomial_from_document(doc))
        return P.dimension, monomial.all_classes(P)
    return 2, surface.surface_classes(surface_from_document(doc))


def run_poincare(args) -> str:
    d, classes = _load_classes(read_document(args.input))
    ps = series.assemble(classes)
    order = _bound(args.bound) or Fraction(3 * d)
    if order.denominator != 1:
        raise InputError("expansion order for poincare must be an integer")
    expansion = series.expand(ps, int(order))
    if args.format == "json":
        return _dump({"ell": ps.denominator_exponent, "series": series.render(ps), "expansion": expansion.to_json()})
    if args.format == "csv":
        return _csv(["exponent", "coefficient"],
                    [[format_fraction(c), format_fraction(v)] for c, v in expansion.coefficients.items()])
    return series.render(ps) + "\n"


def run_verify(args) -> tuple[str, bool]:
    if args.input is None:
        if args.suite != "cross-engine":
            raise InputError("--input is required for this suite")
        checks = verify.cross_engine()
    else:
        doc = read_document(args.input)
        bound = _bound(args.bound)
        if document_kind(doc) == "monomial":
            subject = verify.MonomialSubject(monomial_from_document(doc), bound)
        else:
            subject = verify.SurfaceSubject(surface_from_document(doc), bound)
        checks = verify.run(subject, args.suite)
    ok = all(c.passed for c in checks)
    lines = [c.line() for c in checks]
    lines.append(f"{sum(c.passed for c in checks)}/{len(checks)} checks passed")
    return "\n".join(lines) + "\n", ok


# -- entry point ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="multjump", description="Jumping numbers of multiplier ideals.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, need_input=True):
        p.add_argument("--input", required=need_input, metavar="PATH",
                       help="JSON document, or a bundled fixture: " + ", ".join(fixture_names()))
        p.add_argument("--bound", metavar="P/Q", help="largest c reported")
        p.add_argument("--format", choices=("table", "json", "csv"), default="table")

    for name in ("monomial", "surface"):
        p = sub.add_parser(name, help=f"jumping numbers of a {name} input")
        common(p)
        p.add_argument("--series", action="store_true", help="also print the Poincare series")
        p.add_argument("--include-zero-candidates", action="store_true",
                       help="list candidates with m(c) = 0 as well")
    p = sub.add_parser("poincare", help="Poincare series and its expansion")
    common(p)
    p = sub.add_parser("verify", help="run verification suites")
    common(p, need_input=False)
    p.add_argument("--suite", choices=verify.SUITES, default="all")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            text, ok = run_verify(args)
            sys.stdout.write(text)
            return EXIT_OK if ok else EXIT_FAILED
        handler = {"monomial": run_monomial, "surface": run_surface, "poincare": run_poincare}[args.command]
        if args.command == "monomial" and document_kind(read_document(args.input)) != "monomial":
            raise InputError("the monomial command needs a document with 'generators'")
        if args.command == "surface" and document_kind(read_document(args.input)) != "surface":
            raise InputError("the surface command needs a document with 'matrix'")
        sys.stdout.write(handler(args))
    except ValidationError as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return EXIT_INVALID
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
