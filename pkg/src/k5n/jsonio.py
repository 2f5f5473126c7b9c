"""Versioned JSON codecs for drawings, keys, and reports.

Every document carries ``"format": "k5n/1"`` plus a ``"kind"`` tag so
stored artifacts stay self-describing. Rotations are serialized as their
canonical digit strings.
"""

from __future__ import annotations

from typing import Any

from .cyclic import CyclicPermutation, parse_rotation
from .drawing import AbstractDrawing
from .keycore import CoreGraph, KeyGraph

FORMAT = "k5n/1"


class FormatError(ValueError):
    """The document is not a well-formed k5n/1 payload."""


def _require(doc: Any, kind: str) -> dict:
    if not isinstance(doc, dict):
        raise FormatError("document must be a JSON object")
    if doc.get("format") != FORMAT:
        raise FormatError(f"unsupported format {doc.get('format')!r}")
    if doc.get("kind") != kind:
        raise FormatError(f"expected kind {kind!r}, got {doc.get('kind')!r}")
    return doc


def drawing_to_dict(d: AbstractDrawing) -> dict:
    return {
        "format": FORMAT,
        "kind": "drawing",
        "n": d.n,
        "rotations": [str(r) for r in d.rotations],
        "lambda": [list(row) for row in d.lam],
    }


def drawing_from_dict(doc: dict) -> AbstractDrawing:
    _require(doc, "drawing")
    try:
        rotations = tuple(parse_rotation(r) for r in doc["rotations"])
        lam = tuple(tuple(int(x) for x in row) for row in doc["lambda"])
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed drawing document: {exc}") from exc
    if "n" in doc and doc["n"] != len(rotations):
        raise FormatError("declared n disagrees with rotation count")
    try:
        return AbstractDrawing(rotations, lam)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def key_to_dict(k: KeyGraph) -> dict:
    doc: dict = {"format": FORMAT, "kind": "key"}
    if all(isinstance(v, CyclicPermutation) for v in k.vertices):
        doc["rotations"] = [str(v) for v in k.vertices]
    else:
        doc["vertices"] = list(k.vertices)
    doc["labels"] = [list(row) for row in k.labels]
    return doc


def key_from_dict(doc: dict) -> KeyGraph:
    _require(doc, "key")
    try:
        if "rotations" in doc:
            vertices: tuple = tuple(parse_rotation(r) for r in doc["rotations"])
        else:
            vertices = tuple(doc["vertices"])
        labels = tuple(tuple(int(x) for x in row) for row in doc["labels"])
        return KeyGraph(vertices, labels)
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed key document: {exc}") from exc


def core_to_dict(c: CoreGraph) -> dict:
    return {
        "format": FORMAT,
        "kind": "core",
        "vertices": [str(v) for v in c.vertices],
        "edges": sorted([i, j] for i, j in c.edges),
    }
