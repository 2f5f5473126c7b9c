"""Verification and classification engine for crossing-minimal drawings of
K_{5,n} represented as rotation systems."""

from .cyclic import (
    CyclicPermutation,
    Transposition,
    antidistance,
    canonicalize,
    parse_rotation,
    reverse,
)
from .drawing import (
    AbstractDrawing,
    clean,
    is_clean,
    is_optimal,
    total_crossings,
    validate,
    zarankiewicz_number,
)
from .keycore import KeyGraph, build_key, core_of
from .construct import build_drs, build_zarankiewicz, decompose, identify_drs
from .classify import classify_antipodal_free_optimal

__version__ = "1.0.0"

__all__ = [
    "AbstractDrawing",
    "CyclicPermutation",
    "KeyGraph",
    "Transposition",
    "antidistance",
    "build_drs",
    "build_key",
    "build_zarankiewicz",
    "canonicalize",
    "classify_antipodal_free_optimal",
    "clean",
    "core_of",
    "decompose",
    "identify_drs",
    "is_clean",
    "is_optimal",
    "parse_rotation",
    "reverse",
    "total_crossings",
    "validate",
    "zarankiewicz_number",
]
