import networkx as nx
import pytest

from k5n.construct import DRS_KEY_LABELS, build_drs
from k5n.cyclic import parse_rotation
from k5n.drawing import AbstractDrawing
from k5n.keycore import (
    CoreGraph,
    InconsistentKeyError,
    KeyGraph,
    NotCleanError,
    build_key,
    c6bar_graph,
    core_of,
    key_triangle_check,
    keys_isomorphic,
    structure_report,
)

P = parse_rotation


def test_key_of_drs_has_six_vertices_and_drs_labels():
    k = build_key(build_drs(2, 1))
    assert k.m == 6
    # vertices are sorted; label multiset must match the fixed table
    from collections import Counter
    got = Counter(k.labels[i][j] for i in range(6) for j in range(i + 1, 6))
    want = Counter(DRS_KEY_LABELS[i][j] for i in range(6) for j in range(i + 1, 6))
    assert got == want


def test_key_requires_clean_drawing():
    d = build_drs(1, 1)
    lam = [list(r) for r in d.lam]
    lam[0][1] += 2
    lam[1][0] += 2
    dirty = AbstractDrawing(d.rotations, tuple(tuple(r) for r in lam))
    with pytest.raises(NotCleanError):
        build_key(dirty)


def test_key_label_matrix_validation():
    with pytest.raises(ValueError):
        KeyGraph((0, 1), ((0, 5), (5, 0)))
    with pytest.raises(ValueError):
        KeyGraph((0, 1), ((0, 1), (2, 0)))


def test_core_is_label1_subgraph():
    k = build_key(build_drs(1, 1))
    c = core_of(k)
    assert all(k.labels[i][j] == 1 for i, j in c.edges)
    assert structure_report(c).is_c6bar


def test_key_triangle_check():
    good = KeyGraph((0, 1, 2), ((0, 1, 1), (1, 0, 2), (1, 2, 0)))
    assert key_triangle_check(good)
    bad = KeyGraph((0, 1, 2), ((0, 1, 1), (1, 0, 1), (1, 1, 0)))  # sum 3
    assert not key_triangle_check(bad)


def test_structure_report_on_4_cycle():
    c = CoreGraph((0, 1, 2, 3), frozenset([(0, 1), (1, 2), (2, 3), (0, 3)]))
    s = structure_report(c)
    assert s.is_4_cycle and not s.is_c6bar
    assert s.girth == 4 and s.bipartite and s.connected
    assert s.min_degree == 2 and s.max_degree == 2
    assert not s.contains_k23 and not s.contains_tripod
    assert s.degree2_on_4cycle


def test_structure_report_detects_k23():
    g = nx.complete_bipartite_graph(2, 3)
    c = CoreGraph(tuple(g.nodes), frozenset(g.edges))
    assert structure_report(c).contains_k23


def test_structure_report_detects_subdivided_triangle():
    g = nx.complete_graph(4)
    for a, b in [(0, 1), (1, 2), (0, 2)]:
        g.remove_edge(a, b)
        m = g.number_of_nodes()
        g.add_edge(a, m)
        g.add_edge(m, b)
    c = CoreGraph(tuple(g.nodes), frozenset(g.edges))
    assert structure_report(c).contains_tripod


def test_girth_none_for_forest():
    c = CoreGraph((0, 1, 2), frozenset([(0, 1), (1, 2)]))
    assert structure_report(c).girth is None


def test_c6bar_shape():
    g = c6bar_graph()
    assert g.number_of_nodes() == 6 and g.number_of_edges() == 7
    degs = sorted(d for _, d in g.degree())
    assert degs == [2, 2, 2, 2, 3, 3]


def test_keys_of_different_parameters_are_isomorphic():
    k1 = build_key(build_drs(1, 1))
    k2 = build_key(build_drs(2, 2))
    iso, sigma = keys_isomorphic(k1, k2)
    assert iso and sigma is not None


def test_keys_isomorphic_distinguishes_labels():
    k1 = build_key(build_drs(1, 1))
    k2 = build_key(build_drs(2, 0))
    assert keys_isomorphic(k1, k2) == (False, None)


def test_inconsistent_key_error():
    # two classes crossing non-uniformly: engineered matrix that is clean
    # by conditions 1 and 3 but fails the class-uniformity used by the key
    rots = (P("01234"), P("01234"), P("04321"))
    lam = ((0, 4, 0), (4, 0, 2), (0, 2, 0))
    d = AbstractDrawing(rots, lam)
    with pytest.raises((InconsistentKeyError, NotCleanError)):
        build_key(d)
