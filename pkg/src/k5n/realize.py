"""Coupled-antiroute consistency engine.

Given white rotations and prescribed pairwise crossing labels, this module
searches for black-vertex rotations compatible with them: each white pair
(i,j) must carry an antiroute P_ij of size label_ij, and the induced sets
Q_kl (pair (i,j) contributes the white transposition (a_i a_j) to Q_kl
exactly when (k l) is in P_ij) must each be an antiroute between the black
rotations gamma_k and gamma_l. A failed exhaustive search is a refutation
certificate; success only shows the necessary conditions are satisfiable.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Mapping, Optional, Sequence

from .cyclic import (
    CyclicPermutation,
    Transposition,
    all_cyclic_permutations,
    antidistance,
    is_route,
    routes_of_size,
)

WhitePair = tuple[int, int]
BlackPair = tuple[int, int]
QMapping = Mapping[BlackPair, frozenset[Transposition]]


@dataclass(frozen=True)
class AntirouteAssignment:
    """A choice of antiroute P_ij for every unordered white pair."""

    white_rotations: tuple[CyclicPermutation, ...]
    routes: Mapping[WhitePair, frozenset[Transposition]]


@dataclass(frozen=True)
class BlackRotationProfile:
    """Five black rotations plus the antiroute sets coupling them."""

    gamma: tuple[CyclicPermutation, ...]
    q: Mapping[BlackPair, frozenset[Transposition]]


def induced_q(a: AntirouteAssignment) -> dict[BlackPair, frozenset[Transposition]]:
    """Q_kl = { (a_i a_j) : (k l) in P_ij } for every black pair k < l."""
    r = len(a.white_rotations)
    q: dict[BlackPair, set[Transposition]] = {
        (k, l): set() for k, l in combinations(range(5), 2)}
    for (i, j), route in a.routes.items():
        if not (0 <= i < j < r):
            raise ValueError(f"bad white pair {(i, j)}")
        for t in route:
            q[(t.a, t.b)].add(Transposition(i, j))
    return {kl: frozenset(ts) for kl, ts in q.items()}


def profile_exists(q: QMapping, r: int) -> Optional[BlackRotationProfile]:
    """Search all black rotation assignments consistent with the Q sets.

    Each gamma_k ranges over the (r-1)! cyclic permutations of the r white
    indices; for every black pair, Q_kl must be an antiroute from gamma_k
    to gamma_l (an empty Q_kl forces gamma_l = reverse(gamma_k)).
    """
    if r < 3:
        raise ValueError("black rotations need at least 3 white vertices")
    candidates = all_cyclic_permutations(range(r))
    gammas: list[CyclicPermutation] = []

    def consistent(new: CyclicPermutation) -> bool:
        l = len(gammas)
        for k, gk in enumerate(gammas):
            if not is_route(gk, new, q.get((k, l), frozenset()), anti=True):
                return False
        return True

    def dfs() -> Optional[tuple[CyclicPermutation, ...]]:
        if len(gammas) == 5:
            return tuple(gammas)
        for cand in candidates:
            if consistent(cand):
                gammas.append(cand)
                hit = dfs()
                if hit is not None:
                    return hit
                gammas.pop()
        return None

    hit = dfs()
    if hit is None:
        return None
    return BlackRotationProfile(hit, dict(q))


def _route_options(
    rotations: Sequence[CyclicPermutation], labels: Sequence[Sequence[int]]
) -> dict[WhitePair, list[frozenset[Transposition]]]:
    options = {}
    for i, j in combinations(range(len(rotations)), 2):
        routes = routes_of_size(rotations[i], rotations[j], labels[i][j], anti=True)
        options[(i, j)] = sorted(
            (r.transpositions for r in routes),
            key=lambda ts: sorted((t.a, t.b) for t in ts))
    return options


def fragment_realizable(
    rotations: Sequence[CyclicPermutation], labels: Sequence[Sequence[int]]
) -> tuple[bool, dict]:
    """Decide whether black rotations consistent with the labeled fragment
    can exist, by exhausting every antiroute combination.

    Returns (flag, certificate). The certificate replays the full case
    analysis: one record per antiroute combination with its induced Q sets
    and search outcome. Realizability here is a necessary condition for
    the fragment to be the key of a drawing, not a sufficient one.
    """
    rots = tuple(rotations)
    r = len(rots)
    certificate: dict = {
        "rotations": [str(p) for p in rots],
        "labels": [list(row) for row in labels],
        "cases": [],
    }
    options = _route_options(rots, labels)
    empty_pairs = [list(p) for p, opts in options.items() if not opts]
    if empty_pairs:
        certificate["no_antiroute_pairs"] = empty_pairs
        certificate["combination_count"] = 0
        return False, certificate
    pairs = sorted(options)
    certificate["combination_count"] = 1
    for p in pairs:
        certificate["combination_count"] *= len(options[p])
    for combo in product(*(options[p] for p in pairs)):
        assignment = AntirouteAssignment(rots, dict(zip(pairs, combo)))
        q = induced_q(assignment)
        profile = profile_exists(q, r)
        record = {
            "routes": {f"{i},{j}": sorted(str(t) for t in ts)
                       for (i, j), ts in zip(pairs, combo)},
            "induced_q": {f"{k},{l}": sorted(str(t) for t in ts)
                          for (k, l), ts in q.items() if ts},
            "outcome": "witness" if profile else "contradiction",
        }
        if profile:
            record["gamma"] = [str(g) for g in profile.gamma]
        certificate["cases"].append(record)
        if profile:
            certificate["realizable"] = True
            return True, certificate
    certificate["realizable"] = False
    return False, certificate


def verify_unique_hub(
    p1: CyclicPermutation, p2: CyclicPermutation, p3: CyclicPermutation
) -> int:
    """Count rotations at antidistance 1 from all three given rotations."""
    if len({p1, p2, p3}) != 3:
        raise ValueError("the three rotations must be pairwise distinct")
    count = 0
    for pi0 in all_cyclic_permutations(range(5)):
        if all(antidistance(pi0, p) == 1 for p in (p1, p2, p3)):
            count += 1
    return count
