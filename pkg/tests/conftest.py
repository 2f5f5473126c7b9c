"""Shared generators for the test suite.

All randomness is seeded per call site, so the suite is deterministic.
"""

from __future__ import annotations

import random

from k5n.construct import add_antipodal_pair, build_drs, build_zarankiewicz
from k5n.cyclic import all_relabellings, relabel
from k5n.drawing import AbstractDrawing, validate


def relabelled(d: AbstractDrawing, sigma) -> AbstractDrawing:
    return AbstractDrawing(tuple(relabel(r, sigma) for r in d.rotations), d.lam)


def bump_pairs(d: AbstractDrawing, rng: random.Random, count: int) -> AbstractDrawing:
    """Add 2 to a few off-diagonal entries: keeps validity (symmetry, parity
    of triangle sums, antidistance bounds) while usually breaking cleanliness."""
    if d.n < 2:
        return d
    lam = [list(row) for row in d.lam]
    for _ in range(count):
        i = rng.randrange(d.n)
        j = rng.randrange(d.n)
        if i == j:
            continue
        lam[i][j] += 2
        lam[j][i] += 2
    return AbstractDrawing(d.rotations, tuple(tuple(row) for row in lam))


def drawing_pool(seed: int, size: int, max_total: int = 4,
                 allow_dirty: bool = True) -> list[AbstractDrawing]:
    """A deterministic pool of valid drawings: relabelled family members,
    occasionally superimposed with an antipodal pair or bumped non-clean."""
    rng = random.Random(seed)
    sigmas = all_relabellings(range(5))
    pool = []
    while len(pool) < size:
        kind = rng.randrange(3)
        if kind == 0:
            total = rng.randint(1, max_total)
            r = rng.randint(0, total)
            d = build_drs(r, total - r)
        elif kind == 1:
            d = build_zarankiewicz(rng.randrange(0, 9, 2))
        else:
            total = rng.randint(1, 2)
            r = rng.randint(0, total)
            d = add_antipodal_pair(build_drs(r, total - r))
        d = relabelled(d, rng.choice(sigmas))
        if allow_dirty and d.n >= 2 and rng.random() < 0.5:
            d = bump_pairs(d, rng, rng.randint(1, 3))
        assert validate(d).ok
        pool.append(d)
    return pool
