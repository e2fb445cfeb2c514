"""Jumping numbers of multiplier ideals.

Two engines share one output model: cofinite monomial ideals through their
Newton polyhedra, and surface ideals through the intersection data of a log
resolution.  All arithmetic is exact.
"""
from .errors import MultJumpError, ValidationError
from .kernels import BACKEND
from .monomial import (
    JumpingSpectrum,
    all_classes,
    class_polynomial,
    jumping_spectrum,
    multiplier_ideal_generators,
    rees_coefficient,
    skoda_check,
)
from .newton import MonomialIdeal, NewtonPolyhedron, build_newton, hilbert_samuel
from .series import PoincareSeries, assemble, expand, render
from .surface import (
    SurfaceResolution,
    load_resolution,
    log_canonical_threshold,
    surface_classes,
    surface_spectrum,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "JumpingSpectrum",
    "MonomialIdeal",
    "MultJumpError",
    "NewtonPolyhedron",
    "PoincareSeries",
    "SurfaceResolution",
    "ValidationError",
    "all_classes",
    "assemble",
    "build_newton",
    "class_polynomial",
    "expand",
    "hilbert_samuel",
    "jumping_spectrum",
    "load_resolution",
    "log_canonical_threshold",
    "multiplier_ideal_generators",
    "rees_coefficient",
    "render",
    "skoda_check",
    "surface_classes",
    "surface_spectrum",
]
