"""Key and core graphs of clean drawings, and their structural predicates.

The key of a clean drawing is the edge-labeled complete graph on its
distinct rotations; the core keeps only the label-1 edges. All predicates
here operate on graphs with at most a couple of dozen vertices, so the
subgraph checks are exhaustive embedding searches.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Hashable, Optional, Sequence

import networkx as nx
from networkx.algorithms import isomorphism as nxiso

from .cyclic import CyclicPermutation, all_relabellings, relabel
from .drawing import AbstractDrawing, is_clean


class NotCleanError(ValueError):
    """The drawing must be clean for its key to be well-defined."""


class InconsistentKeyError(ValueError):
    """Two same-rotation classes disagree on a cross label."""


@dataclass(frozen=True)
class KeyGraph:
    """Edge-labeled complete graph on distinct rotations.

    ``vertices`` may also hold abstract placeholders (ints) for candidate
    keys that have not been assigned rotations yet.
    """

    vertices: tuple[Hashable, ...]
    labels: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        m = len(self.vertices)
        if len(set(self.vertices)) != m:
            raise ValueError("key vertices must be pairwise distinct")
        if len(self.labels) != m or any(len(row) != m for row in self.labels):
            raise ValueError("label matrix shape does not match vertex count")
        for i, j in combinations(range(m), 2):
            if self.labels[i][j] != self.labels[j][i]:
                raise ValueError("label matrix must be symmetric")
            if not 0 <= self.labels[i][j] <= 4:
                raise ValueError("key labels lie in {0,...,4}")

    @property
    def m(self) -> int:
        return len(self.vertices)

    def label(self, i: int, j: int) -> int:
        return self.labels[i][j]


@dataclass(frozen=True)
class CoreGraph:
    """The label-1 subgraph of a key (vertices indexed as in the key)."""

    vertices: tuple[Hashable, ...]
    edges: frozenset[tuple[int, int]]

    @property
    def m(self) -> int:
        return len(self.vertices)

    def graph(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.m))
        g.add_edges_from(self.edges)
        return g


@dataclass
class CoreStructure:
    """Exactly computed structural predicates of a core graph."""

    vertex_count: int
    min_degree: int
    max_degree: int
    connected: bool
    bipartite: bool
    girth: Optional[int]  # None when the graph is acyclic
    contains_k23: bool
    contains_tripod: bool  # K4 with one triangle's edges each split once
    degree2_on_4cycle: bool
    is_4_cycle: bool
    is_c6bar: bool

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def build_key(d: AbstractDrawing) -> KeyGraph:
    """One vertex per distinct rotation, labeled by class-to-class crossings."""
    report = is_clean(d)
    if not report.clean:
        raise NotCleanError(f"drawing is not clean: {report.violations}")
    class_of: dict[CyclicPermutation, list[int]] = {}
    for i, rot in enumerate(d.rotations):
        class_of.setdefault(rot, []).append(i)
    verts = tuple(sorted(class_of))
    m = len(verts)
    labels = [[0] * m for _ in range(m)]
    for a, b in combinations(range(m), 2):
        vals = {d.lam[i][j] for i in class_of[verts[a]] for j in class_of[verts[b]]}
        if len(vals) != 1:
            raise InconsistentKeyError(
                f"classes {verts[a]} and {verts[b]} cross non-uniformly: {sorted(vals)}")
        labels[a][b] = labels[b][a] = vals.pop()
    return KeyGraph(verts, tuple(tuple(row) for row in labels))


def core_of(k: KeyGraph) -> CoreGraph:
    edges = frozenset((i, j) for i, j in combinations(range(k.m), 2)
                      if k.labels[i][j] == 1)
    return CoreGraph(k.vertices, edges)


def key_triangle_check(k: KeyGraph) -> bool:
    """Every label triple around a vertex triangle sums to an even number >= 4."""
    for i, j, l in combinations(range(k.m), 3):
        s = k.labels[i][j] + k.labels[j][l] + k.labels[i][l]
        if s % 2 != 0 or s < 4:
            return False
    return True


def _girth(g: nx.Graph) -> Optional[int]:
    """Length of a shortest cycle; None for forests. BFS from every vertex."""
    best: Optional[int] = None
    for src in g.nodes:
        depth = {src: 0}
        parent = {src: None}
        queue = [src]
        while queue:
            nxt = []
            for u in queue:
                for v in g.neighbors(u):
                    if v not in depth:
                        depth[v] = depth[u] + 1
                        parent[v] = u
                        nxt.append(v)
                    elif parent[u] != v:
                        cyc = depth[u] + depth[v] + 1
                        if best is None or cyc < best:
                            best = cyc
            queue = nxt
    return best


def _contains_subgraph(g: nx.Graph, pattern: nx.Graph) -> bool:
    """Exhaustive (non-induced) subgraph embedding test."""
    if g.number_of_nodes() < pattern.number_of_nodes():
        return False
    return nxiso.GraphMatcher(g, pattern).subgraph_is_monomorphic()


def _tripod_pattern() -> nx.Graph:
    """K4 with the three edges of one triangle each subdivided once."""
    g = nx.complete_graph(4)  # vertices 0..3; triangle 0,1,2 gets subdivided
    for a, b in [(0, 1), (1, 2), (0, 2)]:
        g.remove_edge(a, b)
        mid = g.number_of_nodes()
        g.add_edge(a, mid)
        g.add_edge(mid, b)
    return g


def c6bar_graph() -> nx.Graph:
    """The 6-cycle plus an edge joining two diametrically opposed vertices."""
    g = nx.cycle_graph(6)
    g.add_edge(0, 3)
    return g


_K23 = nx.complete_bipartite_graph(2, 3)
_TRIPOD = _tripod_pattern()
_C4 = nx.cycle_graph(4)
_C6BAR = c6bar_graph()


def structure_report(c: CoreGraph) -> CoreStructure:
    g = c.graph()
    degs = [d for _, d in g.degree()]
    girth = _girth(g)
    deg2_ok = True
    cycles4 = {frozenset(q) for q in _4cycles(g)}
    on_4cycle = set().union(*cycles4) if cycles4 else set()
    for v, d in g.degree():
        if d == 2 and v not in on_4cycle:
            deg2_ok = False
    return CoreStructure(
        vertex_count=c.m,
        min_degree=min(degs) if degs else 0,
        max_degree=max(degs) if degs else 0,
        connected=nx.is_connected(g) if c.m > 0 else True,
        bipartite=nx.is_bipartite(g),
        girth=girth,
        contains_k23=_contains_subgraph(g, _K23),
        contains_tripod=_contains_subgraph(g, _TRIPOD),
        degree2_on_4cycle=deg2_ok,
        is_4_cycle=nx.is_isomorphic(g, _C4),
        is_c6bar=nx.is_isomorphic(g, _C6BAR),
    )


def _4cycles(g: nx.Graph) -> list[tuple]:
    out = []
    nodes = list(g.nodes)
    for quad in combinations(nodes, 4):
        sub = g.subgraph(quad)
        if sub.number_of_edges() >= 4 and any(
            sub.has_edge(a, b) and sub.has_edge(b, c)
            and sub.has_edge(c, d) and sub.has_edge(d, a)
            for a, b, c, d in _quad_orders(quad)
        ):
            out.append(quad)
    return out


def _quad_orders(quad: Sequence) -> list[tuple]:
    a, b, c, d = quad
    return [(a, b, c, d), (a, b, d, c), (a, c, b, d)]


def keys_isomorphic(k1: KeyGraph, k2: KeyGraph) -> tuple[bool, Optional[dict[int, int]]]:
    """Whether a relabelling of {0..4} maps the rotation-vertex set of k1
    onto that of k2 while preserving every edge label."""
    if k1.m != k2.m:
        return False, None
    if not all(isinstance(v, CyclicPermutation) for v in k1.vertices + k2.vertices):
        raise TypeError("keys_isomorphic requires rotation-labeled keys")
    index2 = {v: i for i, v in enumerate(k2.vertices)}
    for sigma in all_relabellings(range(5)):
        mapped = [relabel(v, sigma) for v in k1.vertices]
        if set(mapped) != set(k2.vertices):
            continue
        perm = [index2[v] for v in mapped]
        if all(k1.labels[i][j] == k2.labels[perm[i]][perm[j]]
               for i, j in combinations(range(k1.m), 2)):
            return True, sigma
    return False, None
