"""JSON input documents and the bundled fixtures.

Monomial documents look like ``{"dimension": 2, "generators": [[3, 0], [0, 2]]}``;
surface documents like ``{"matrix": [[-1]], "F": [1], "K": [1]}`` with ``K``
optional.
"""
from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from .errors import InputError
from .newton import MonomialIdeal
from .surface import SurfaceResolution, load_resolution


def fixture_names() -> list[str]:
    root = resources.files("multjump") / "fixtures"
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def read_document(source: str) -> dict:
    """Load ``source`` as a path, falling back to a bundled fixture name."""
    path = Path(source)
    if path.is_file():
        text = path.read_text(encoding="utf-8")
    else:
        name = source[:-5] if source.endswith(".json") else source
        res = resources.files("multjump") / "fixtures" / f"{name}.json"
        if not res.is_file():
            raise InputError(f"no such file or bundled fixture: {source}")
        text = res.read_text(encoding="utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{source}: invalid JSON ({exc})") from exc
    if not isinstance(doc, dict):
        raise InputError(f"{source}: expected a JSON object")
    return doc


def document_kind(doc: dict) -> str:
    if "generators" in doc:
        return "monomial"
    if "matrix" in doc:
        return "surface"
    raise InputError("document has neither 'generators' nor 'matrix'")


def _int_rows(value, what: str) -> list[list[int]]:
    if not isinstance(value, list) or not all(isinstance(r, list) for r in value):
        raise InputError(f"{what} must be a list of integer lists")
    for row in value:
        for x in row:
            if not isinstance(x, int) or isinstance(x, bool):
                raise InputError(f"{what} entry {x!r} is not an integer")
    return value


def _int_list(value, what: str) -> list[int]:
    if not isinstance(value, list):
        raise InputError(f"{what} must be a list of integers")
    return _int_rows([value], what)[0]


def monomial_from_document(doc: dict) -> MonomialIdeal:
    gens = _int_rows(doc.get("generators"), "generators")
    if not gens:
        raise InputError("generators must be non-empty")
    widths = {len(g) for g in gens}
    if len(widths) != 1:
        raise InputError("generator matrix is not rectangular")
    d = doc.get("dimension", widths.pop())
    if not isinstance(d, int) or d != len(gens[0]):
        raise InputError(f"dimension {d!r} does not match generator length {len(gens[0])}")
    if any(x < 0 for g in gens for x in g):
        raise InputError("exponents must be non-negative")
    return MonomialIdeal(tuple(tuple(g) for g in gens), d)


def surface_from_document(doc: dict) -> SurfaceResolution:
    matrix = _int_rows(doc.get("matrix"), "matrix")
    f = _int_list(doc.get("F"), "F")
    k = doc.get("K")
    if k is not None:
        k = _int_list(k, "K")
    return load_resolution(matrix, f, k)
