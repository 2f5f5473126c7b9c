"""Algebra of cyclic permutations, adjacent transpositions, routes and antiroutes.

A white-vertex rotation is a cyclic permutation of the black labels {0..4};
a black-vertex rotation is a cyclic permutation of white indices. Both are
represented by :class:`CyclicPermutation` in canonical (least-symbol-first)
form, so equality of cyclic orders is plain tuple equality.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Iterator, Mapping


class NotApplicableError(ValueError):
    """Raised when a transposition's symbols are not cyclically adjacent."""


@dataclass(frozen=True, order=True)
class CyclicPermutation:
    """A cyclic ordering of distinct symbols, stored least-symbol-first."""

    word: tuple[int, ...]

    def __post_init__(self) -> None:
        w = self.word
        if len(set(w)) != len(w):
            raise ValueError(f"duplicate symbol in {w!r}")
        if w and min(w) != w[0]:
            raise ValueError(f"word {w!r} is not in canonical form")

    @property
    def symbols(self) -> frozenset[int]:
        return frozenset(self.word)

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        if all(0 <= x <= 9 for x in self.word):
            return "".join(str(x) for x in self.word)
        return ",".join(str(x) for x in self.word)

    def adjacent_pairs(self) -> Iterator[tuple[int, int]]:
        """Yield the cyclically adjacent symbol pairs, in word order."""
        k = len(self.word)
        for i in range(k):
            yield self.word[i], self.word[(i + 1) % k]


@dataclass(frozen=True, order=True)
class Transposition:
    """An unordered pair of distinct symbols, stored with a < b."""

    a: int
    b: int

    def __post_init__(self) -> None:
        if self.a == self.b:
            raise ValueError("transposition symbols must differ")
        if self.a > self.b:
            lo, hi = self.b, self.a
            object.__setattr__(self, "a", lo)
            object.__setattr__(self, "b", hi)

    def __str__(self) -> str:
        return f"({self.a} {self.b})"

    @property
    def pair(self) -> frozenset[int]:
        return frozenset((self.a, self.b))


@dataclass(frozen=True)
class Route:
    """A set of distinct transpositions orderable into a valid application
    sequence carrying a source rotation to a target.

    Two routes are the same route iff their transposition sets coincide;
    ``witness_order`` records one valid ordering and is ignored by equality.
    """

    transpositions: frozenset[Transposition]
    witness_order: tuple[Transposition, ...] = field(compare=False)

    def __len__(self) -> int:
        return len(self.transpositions)


def canonicalize(word: Iterable[int]) -> CyclicPermutation:
    """Rotate ``word`` so its least symbol comes first."""
    w = tuple(word)
    if not w:
        return CyclicPermutation(())
    if len(set(w)) != len(w):
        raise ValueError(f"duplicate symbol in {w!r}")
    i = w.index(min(w))
    return CyclicPermutation(w[i:] + w[:i])


def reverse(pi: CyclicPermutation) -> CyclicPermutation:
    """The same cyclic order traversed backwards."""
    return canonicalize(tuple(reversed(pi.word)))


def apply_transposition(pi: CyclicPermutation, t: Transposition) -> CyclicPermutation:
    """Exchange two cyclically adjacent symbols of ``pi``.

    Raises :class:`NotApplicableError` when the symbols are not adjacent in
    the cyclic word; route search relies on this restriction.
    """
    w = pi.word
    if t.a not in w or t.b not in w:
        raise NotApplicableError(f"{t} has a symbol missing from {pi}")
    k = len(w)
    ia = w.index(t.a)
    if w[(ia + 1) % k] != t.b and w[(ia - 1) % k] != t.b:
        raise NotApplicableError(f"{t} is not applicable to {pi}: symbols not adjacent")
    swapped = tuple(t.b if x == t.a else t.a if x == t.b else x for x in w)
    return canonicalize(swapped)


def applicable_transpositions(pi: CyclicPermutation) -> list[Transposition]:
    """The transpositions that may be applied to ``pi`` (its adjacent pairs)."""
    return sorted({Transposition(a, b) for a, b in pi.adjacent_pairs()})


def routes_of_size(
    gamma: CyclicPermutation,
    kappa: CyclicPermutation,
    s: int,
    anti: bool = False,
) -> set[Route]:
    """All routes (or antiroutes, with ``anti``) of exactly ``s`` distinct
    transpositions from ``gamma`` to ``kappa``.

    Exhaustive depth-first search over application sequences, deduplicated
    by transposition set.
    """
    if gamma.symbols != kappa.symbols:
        raise ValueError("rotations are on different symbol sets")
    if s < 0:
        raise ValueError("route size must be nonnegative")
    return set(_routes_cached(gamma, kappa, s, anti))


@lru_cache(maxsize=None)
def _routes_cached(
    gamma: CyclicPermutation, kappa: CyclicPermutation, s: int, anti: bool
) -> frozenset[Route]:
    target = reverse(kappa) if anti else kappa
    found: dict[frozenset[Transposition], Route] = {}

    def dfs(cur: CyclicPermutation, used: frozenset[Transposition],
            order: tuple[Transposition, ...]) -> None:
        if len(used) == s:
            if cur == target and used not in found:
                found[used] = Route(used, order)
            return
        for t in applicable_transpositions(cur):
            if t in used:
                continue
            dfs(apply_transposition(cur, t), used | {t}, order + (t,))

    dfs(gamma, frozenset(), ())
    return frozenset(found.values())


def is_route(gamma: CyclicPermutation, kappa: CyclicPermutation,
             transpositions: Iterable[Transposition], anti: bool = False) -> bool:
    """Whether the given transposition set is a route (antiroute) gamma -> kappa."""
    ts = frozenset(transpositions)
    target = reverse(kappa) if anti else kappa
    if not ts:
        return gamma == target
    for order in permutations(ts):
        cur = gamma
        try:
            for t in order:
                cur = apply_transposition(cur, t)
        except NotApplicableError:
            continue
        if cur == target:
            return True
    return False


@lru_cache(maxsize=None)
def antidistance(gamma: CyclicPermutation, kappa: CyclicPermutation) -> int:
    """Smallest size of an antiroute between two cyclic permutations."""
    if gamma.symbols != kappa.symbols:
        raise ValueError("rotations are on different symbol sets")
    max_size = len(gamma) * (len(gamma) - 1) // 2
    for s in range(max_size + 1):
        if _routes_cached(gamma, kappa, s, True):
            return s
    raise RuntimeError(f"no antiroute between {gamma} and {kappa}")


def relabel(pi: CyclicPermutation, sigma: Mapping[int, int]) -> CyclicPermutation:
    """Apply a symbol relabelling (a bijection) to ``pi``."""
    if len(set(sigma.values())) != len(sigma):
        raise ValueError("relabelling is not a bijection")
    try:
        mapped = tuple(sigma[x] for x in pi.word)
    except KeyError as exc:
        raise ValueError(f"relabelling undefined on symbol {exc.args[0]}") from exc
    return canonicalize(mapped)


def all_cyclic_permutations(symbols: Iterable[int]) -> list[CyclicPermutation]:
    """Every cyclic permutation of the given symbols, sorted. (k-1)! of them."""
    syms = sorted(set(symbols))
    if not syms:
        return [CyclicPermutation(())]
    first, rest = syms[0], syms[1:]
    return sorted(CyclicPermutation((first,) + tail) for tail in permutations(rest))


def all_relabellings(symbols: Iterable[int] = range(5)) -> list[dict[int, int]]:
    """Every self-bijection of the symbol set, in a deterministic order."""
    syms = sorted(set(symbols))
    return [dict(zip(syms, img)) for img in permutations(syms)]


def all_transpositions(symbols: Iterable[int]) -> list[Transposition]:
    return [Transposition(a, b) for a, b in combinations(sorted(set(symbols)), 2)]


def parse_rotation(text: str) -> CyclicPermutation:
    """Parse a rotation string such as ``"01234"`` or ``"0,10,3"``."""
    text = text.strip().strip("()")
    if "," in text:
        parts = [int(p) for p in text.split(",")]
    else:
        parts = [int(c) for c in text]
    return canonicalize(parts)
