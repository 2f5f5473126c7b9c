"""Rotation-multiset model of drawings of K_{5,n}.

A drawing is abstracted to its white-vertex rotations together with the
symmetric matrix of pairwise crossing counts; every quantity manipulated
here is a function of that data.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from .cyclic import (
    CyclicPermutation,
    all_relabellings,
    antidistance,
    relabel,
)


class InvalidDrawingError(ValueError):
    """Raised when rotation/label data is structurally malformed."""


@dataclass(frozen=True)
class AbstractDrawing:
    """Rotations of the n white vertices plus the pairwise crossing matrix."""

    rotations: tuple[CyclicPermutation, ...]
    lam: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.rotations)
        if len(self.lam) != n or any(len(row) != n for row in self.lam):
            raise InvalidDrawingError("crossing matrix shape does not match n")
        for rot in self.rotations:
            if rot.symbols != frozenset(range(5)):
                raise InvalidDrawingError(f"white rotation {rot} is not on {{0..4}}")
        if any(x < 0 for row in self.lam for x in row):
            raise InvalidDrawingError("negative crossing count")

    @property
    def n(self) -> int:
        return len(self.rotations)

    def row_sum(self, i: int) -> int:
        """Crossings involving the star of vertex i."""
        return sum(self.lam[i])


EMPTY_DRAWING = AbstractDrawing((), ())


@dataclass
class ValidationReport:
    """Per-invariant outcome of :func:`validate`, with offending indices."""

    symmetric: bool = True
    zero_diagonal: bool = True
    triangle_condition: bool = True
    antidistance_bound: bool = True
    asymmetric_pairs: list[tuple[int, int]] = field(default_factory=list)
    nonzero_diagonal: list[int] = field(default_factory=list)
    bad_triples: list[tuple[int, int, int]] = field(default_factory=list)
    bad_pairs: list[tuple[int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (self.symmetric and self.zero_diagonal
                and self.triangle_condition and self.antidistance_bound)

    def as_dict(self) -> dict:
        return {
            "symmetric": self.symmetric,
            "zero_diagonal": self.zero_diagonal,
            "triangle_condition": self.triangle_condition,
            "antidistance_bound": self.antidistance_bound,
            "asymmetric_pairs": [list(p) for p in self.asymmetric_pairs],
            "nonzero_diagonal": list(self.nonzero_diagonal),
            "bad_triples": [list(t) for t in self.bad_triples],
            "bad_pairs": [list(p) for p in self.bad_pairs],
        }


@dataclass
class CleanReport:
    """Outcome of the three cleanliness conditions with violating pairs."""

    clean: bool
    violations: list[dict] = field(default_factory=list)


def zarankiewicz_number(m: int, n: int) -> int:
    """floor(m/2) floor((m-1)/2) floor(n/2) floor((n-1)/2)."""
    if m < 0 or n < 0:
        raise ValueError("vertex counts must be nonnegative")
    return (m // 2) * ((m - 1) // 2) * (n // 2) * ((n - 1) // 2)


def total_crossings(d: AbstractDrawing) -> int:
    """Sum of pairwise crossing counts over unordered white pairs."""
    return sum(d.lam[i][j] for i in range(d.n) for j in range(i + 1, d.n))


def is_optimal(d: AbstractDrawing) -> bool:
    """Crossing total meets the (known-tight) Zarankiewicz bound."""
    return total_crossings(d) == zarankiewicz_number(5, d.n)


def antipodal_pairs(d: AbstractDrawing) -> list[tuple[int, int]]:
    """Index pairs whose stars do not cross each other."""
    return [(i, j) for i in range(d.n) for j in range(i + 1, d.n)
            if d.lam[i][j] == 0]


def is_clean(d: AbstractDrawing) -> CleanReport:
    """Check the three cleanliness conditions:

    (1) same-rotation pairs cross exactly 4 times;
    (2) crossings depend only on the rotation classes of the two vertices;
    (3) no pair crosses more than 4 times.
    """
    violations: list[dict] = []
    for i, j in combinations(range(d.n), 2):
        if d.rotations[i] == d.rotations[j] and d.lam[i][j] != 4:
            violations.append({"condition": 1, "pair": [i, j], "value": d.lam[i][j]})
        if d.lam[i][j] > 4:
            violations.append({"condition": 3, "pair": [i, j], "value": d.lam[i][j]})
    class_of: dict[CyclicPermutation, list[int]] = {}
    for i, rot in enumerate(d.rotations):
        class_of.setdefault(rot, []).append(i)
    classes = sorted(class_of.values())
    for ca, cb in combinations(classes, 2):
        vals = {d.lam[i][j] for i in ca for j in cb}
        if len(vals) > 1:
            violations.append({"condition": 2, "classes": [ca[0], cb[0]],
                               "values": sorted(vals)})
    return CleanReport(not violations, violations)


def _class_distance(lam: list[list[int]], rotations: list[CyclicPermutation],
                    i: int) -> int:
    """Crossings of vertex i against vertices of other rotation classes."""
    return sum(lam[i][k] for k in range(len(rotations))
               if rotations[k] != rotations[i])


def clean(d: AbstractDrawing) -> AbstractDrawing:
    """Produce an isomorphic clean drawing.

    Within each rotation class, every vertex's crossings are replaced by
    those of the classmate with the fewest out-of-class crossings, and
    in-class counts are set to 4. Any remaining pair crossing more than 4
    times is resolved by merging the costlier vertex into the other's
    class; ties break toward the lower index. Crossings never increase on
    valid input.
    """
    rot = list(d.rotations)
    lam = [list(row) for row in d.lam]
    n = d.n
    while True:
        class_of: dict[CyclicPermutation, list[int]] = {}
        for i, r in enumerate(rot):
            class_of.setdefault(r, []).append(i)
        # equalize rows class by class, then pin in-class counts to 4;
        # the representative is re-chosen on the current matrix each time
        for r in sorted(class_of):
            dists = [_class_distance(lam, rot, i) for i in range(n)]
            rep = min(class_of[r], key=lambda i: (dists[i], i))
            for j in class_of[r]:
                if j == rep:
                    continue
                for k in range(n):
                    if rot[k] != r:
                        lam[j][k] = lam[k][j] = lam[rep][k]
        for members in class_of.values():
            for a, b in combinations(members, 2):
                lam[a][b] = lam[b][a] = 4
        over = next(((i, k) for i in range(n) for k in range(i + 1, n)
                     if lam[i][k] > 4), None)
        if over is None:
            break
        i, k = over
        dists = [_class_distance(lam, rot, v) for v in range(n)]
        keep, move = (i, k) if (dists[i], i) <= (dists[k], k) else (k, i)
        rot[move] = rot[keep]
        for l in range(n):
            if l not in (keep, move):
                lam[move][l] = lam[l][move] = lam[keep][l]
        lam[move][keep] = lam[keep][move] = 4
    return AbstractDrawing(tuple(rot), tuple(tuple(row) for row in lam))


def are_isomorphic(
    d1: AbstractDrawing, d2: AbstractDrawing
) -> tuple[bool, Optional[dict[int, int]]]:
    """Whether some relabelling of {0..4} carries the rotation multiset of
    d1 onto that of d2. The crossing matrix plays no role."""
    if d1.n != d2.n:
        return False, None
    target = sorted(d2.rotations)
    for sigma in all_relabellings(range(5)):
        if sorted(relabel(r, sigma) for r in d1.rotations) == target:
            return True, sigma
    return False, None


def validate(d: AbstractDrawing) -> ValidationReport:
    """Check symmetry, zero diagonal, the parity/size condition on every
    triple, and the antiroute lower bound on every pair."""
    report = ValidationReport()
    for i in range(d.n):
        if d.lam[i][i] != 0:
            report.zero_diagonal = False
            report.nonzero_diagonal.append(i)
        for j in range(i + 1, d.n):
            if d.lam[i][j] != d.lam[j][i]:
                report.symmetric = False
                report.asymmetric_pairs.append((i, j))
    for i, j in combinations(range(d.n), 2):
        if d.lam[i][j] < antidistance(d.rotations[i], d.rotations[j]):
            report.antidistance_bound = False
            report.bad_pairs.append((i, j))
    for i, j, k in combinations(range(d.n), 3):
        s = d.lam[i][j] + d.lam[j][k] + d.lam[i][k]
        if s % 2 != 0 or s < 4:
            report.triangle_condition = False
            report.bad_triples.append((i, j, k))
    return report
