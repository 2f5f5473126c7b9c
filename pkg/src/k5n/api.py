"""Dict-in/dict-out handlers shared by the CLI and the HTTP service.

Each handler takes plain JSON-compatible data and returns JSON-compatible
data; domain failures raise :class:`DomainError` so both front ends can
map them uniformly (CLI exit code 1, HTTP status 400).
"""

from __future__ import annotations

from . import classify as _classify
from . import construct, jsonio
from .cyclic import antidistance, parse_rotation
from .drawing import (
    antipodal_pairs,
    is_clean,
    is_optimal,
    total_crossings,
    validate,
    zarankiewicz_number,
)
from .keycore import NotCleanError, build_key, core_of, structure_report
from .linsys import build_system, positive_integral_solutions, render_equations
from .realize import fragment_realizable


class DomainError(Exception):
    """A well-formed request whose answer is a refusal (validation failed,
    precondition unmet, residual unidentified, ...)."""

    def __init__(self, message: str, payload: dict | None = None):
        super().__init__(message)
        self.payload = payload or {}


def handle_antidist(rot1: str, rot2: str) -> dict:
    a = parse_rotation(rot1)
    b = parse_rotation(rot2)
    if a.symbols != b.symbols:
        raise DomainError("rotations are on different symbol sets")
    return {"rot1": str(a), "rot2": str(b), "antidistance": antidistance(a, b)}


def handle_gen_drs(r: int, s: int) -> dict:
    if r < 0 or s < 0:
        raise DomainError("r and s must be nonnegative")
    return jsonio.drawing_to_dict(construct.build_drs(r, s))


def handle_gen_zar(n: int) -> dict:
    if n < 0:
        raise DomainError("n must be nonnegative")
    return jsonio.drawing_to_dict(construct.build_zarankiewicz(n))


def handle_verify(doc: dict) -> dict:
    d = jsonio.drawing_from_dict(doc)
    report = validate(d)
    clean_report = is_clean(d)
    result = {
        "format": jsonio.FORMAT,
        "kind": "verify-report",
        "n": d.n,
        "valid": report.ok,
        "validation": report.as_dict(),
        "crossings": total_crossings(d),
        "zarankiewicz": zarankiewicz_number(5, d.n),
        "optimal": is_optimal(d),
        "clean": clean_report.clean,
        "clean_violations": clean_report.violations,
        "antipodal_pairs": [list(p) for p in antipodal_pairs(d)],
        "antipodal_free": not antipodal_pairs(d),
    }
    if not report.ok:
        raise DomainError("drawing failed validation", result)
    return result


def handle_key(doc: dict) -> dict:
    d = jsonio.drawing_from_dict(doc)
    try:
        k = build_key(d)
    except NotCleanError as exc:
        raise DomainError(str(exc)) from exc
    c = core_of(k)
    out = jsonio.key_to_dict(k)
    out["core"] = jsonio.core_to_dict(c)
    out["core_structure"] = structure_report(c).as_dict()
    return out


def handle_solve_key(doc: dict, n: int) -> dict:
    k = jsonio.key_from_dict(doc)
    sys = build_system(k)
    sols = positive_integral_solutions(sys, n)
    return {
        "format": jsonio.FORMAT,
        "kind": "solution-set",
        "n": n,
        "equations": render_equations(sys),
        "kernel_rank": sols.kernel_rank,
        "solutions": [list(t) for t in sols.solutions],
    }


def handle_forbid_check(doc: dict) -> dict:
    k = jsonio.key_from_dict(doc)
    if "rotations" not in doc:
        raise DomainError("fragment check requires rotation-labeled vertices")
    realizable, certificate = fragment_realizable(k.vertices, k.labels)
    return {
        "format": jsonio.FORMAT,
        "kind": "realizability-certificate",
        "realizable": realizable,
        "certificate": certificate,
    }


def handle_classify(n: int) -> dict:
    try:
        result = _classify.classify_antipodal_free_optimal(n)
    except ValueError as exc:
        raise DomainError(str(exc)) from exc
    out = result.as_dict()
    out["format"] = jsonio.FORMAT
    out["kind"] = "classification"
    return out


def handle_decompose(doc: dict) -> dict:
    d = jsonio.drawing_from_dict(doc)
    try:
        dec = construct.decompose(d)
    except (ValueError, construct.DecompositionError) as exc:
        raise DomainError(str(exc)) from exc
    r, s = dec.identified
    return {
        "format": jsonio.FORMAT,
        "kind": "decomposition",
        "pairs": [list(p) for p in dec.pairs],
        "residual": jsonio.drawing_to_dict(dec.residual),
        "r": r,
        "s": s,
    }
