import pytest

from k5n.classify import (
    classify_antipodal_free_optimal,
    enumerate_feasible_cores,
    generate_candidate_keys,
    realize_core_rotations,
    replay_certificate,
    run_filters,
    verify_decomposition_theorem,
)
from k5n.construct import add_antipodal_pair, build_drs, build_zarankiewicz
from k5n.cyclic import parse_rotation, relabel
from k5n.keycore import KeyGraph, build_key, core_of, structure_report

P = parse_rotation


def test_candidate_generation_shape():
    keys = generate_candidate_keys()
    assert all(1 <= k.m <= 7 for k in keys)
    for k in keys[:50]:
        labels = {k.labels[i][j] for i in range(k.m) for j in range(i + 1, k.m)}
        assert labels <= {1, 2, 3}


def test_candidates_all_pass_triangle_check():
    from k5n.keycore import key_triangle_check

    assert all(key_triangle_check(k) for k in generate_candidate_keys())


def test_enumerate_survivor_cores_at_12():
    survivors = enumerate_feasible_cores(12)
    shapes = sorted(
        "c4" if structure_report(core_of(c.key)).is_4_cycle else "c6bar"
        for c in survivors)
    assert shapes == ["c4", "c6bar"]


def test_enumerate_empty_at_6():
    assert enumerate_feasible_cores(6) == []


def test_enumerate_only_c4_at_4():
    survivors = enumerate_feasible_cores(4)
    assert len(survivors) == 1
    assert structure_report(core_of(survivors[0].key)).is_4_cycle


def test_enumerate_rejects_odd_n():
    with pytest.raises(ValueError):
        enumerate_feasible_cores(7)


def test_certificates_replay():
    _, eliminated = enumerate_feasible_cores(8, include_eliminated=True)
    assert eliminated
    for cand in eliminated[:200]:
        cert = {"labels": [list(r) for r in cand.key.labels],
                "filter": cand.eliminated_by}
        assert replay_certificate(cert, 8)


def test_pipeline_never_eliminates_known_keys():
    for r, s in ((1, 1), (2, 1), (1, 0), (2, 0)):
        k = build_key(build_drs(r, s))
        abstract = KeyGraph(tuple(range(k.m)), k.labels)
        cand = run_filters(abstract, 4 * (r + s))
        assert cand.eliminated_by is None


def test_classify_verdicts():
    assert classify_antipodal_free_optimal(10).verdict == "none"
    r8 = classify_antipodal_free_optimal(8)
    assert r8.verdict == "families" and r8.families == ((2, 0), (1, 1))
    r4 = classify_antipodal_free_optimal(4)
    assert r4.families == ((1, 0),)


def test_classify_rejects_out_of_range():
    with pytest.raises(ValueError):
        classify_antipodal_free_optimal(26)
    with pytest.raises(ValueError):
        classify_antipodal_free_optimal(3)


def test_classification_result_serializes():
    out = classify_antipodal_free_optimal(8).as_dict()
    assert out["verdict"] == "families"
    assert out["families"] == [[2, 0], [1, 1]]
    assert out["certificates"]


def test_realize_core_rotations_counts():
    assert len(realize_core_rotations("c4")) == 2
    assert len(realize_core_rotations("c6bar")) == 2
    with pytest.raises(ValueError):
        realize_core_rotations("pentagon")


def _orbit(tup):
    stab = [{j: (j + m) % 5 for j in range(5)} for m in range(5)]
    return {tuple(str(relabel(x, s)) for x in tup) for s in stab}


def test_realize_c4_normal_forms():
    reps = realize_core_rotations("c4")
    expected = [("01234", "04231", "01342", "04312"),
                ("01234", "04312", "01342", "04231")]
    for e in expected:
        assert any(e in _orbit(tuple(r)) for r in reps)


def test_realize_c6bar_normal_forms():
    reps = realize_core_rotations("c6bar")
    expected = [("01234", "04231", "01342", "04312", "01432", "02314"),
                ("01234", "01432", "02314", "04312", "04231", "01342")]
    for e in expected:
        assert any(e in _orbit(tuple(r)) for r in reps)


def test_verify_decomposition_reports():
    rep = verify_decomposition_theorem(add_antipodal_pair(build_drs(1, 1)))
    assert rep["ok"] and len(rep["pairs"]) == 1 and (rep["r"], rep["s"]) == (1, 1)
    assert all(c["ok"] for c in rep["checks"])

    rep = verify_decomposition_theorem(build_zarankiewicz(6))
    assert rep["ok"] and len(rep["pairs"]) == 3 and rep["residual_n"] == 0

    rep = verify_decomposition_theorem(build_drs(3, 0))
    assert rep["ok"] and rep["pairs"] == [] and (rep["r"], rep["s"]) == (3, 0)


def test_verify_decomposition_flags_non_optimal():
    from k5n.drawing import AbstractDrawing

    d = build_drs(1, 1)
    lam = [list(r) for r in d.lam]
    lam[0][1] += 2
    lam[1][0] += 2
    rep = verify_decomposition_theorem(
        AbstractDrawing(d.rotations, tuple(tuple(r) for r in lam)))
    assert not rep["ok"] and "failure" in rep
