import random
from itertools import combinations

import pytest

from k5n.cyclic import (
    Transposition,
    all_cyclic_permutations,
    antidistance,
    parse_rotation,
    routes_of_size,
)
from k5n.realize import (
    AntirouteAssignment,
    fragment_realizable,
    induced_q,
    profile_exists,
    verify_unique_hub,
)

P = parse_rotation

STAR_FRAGMENT = (
    [P("01234"), P("01432"), P("04312"), P("03421")],
    [[0, 1, 1, 1], [1, 0, 2, 2], [1, 2, 0, 2], [1, 2, 2, 0]],
)
CYCLE_FRAGMENT = (
    [P("01234"), P("01432"), P("03241"), P("04231")],
    [[0, 1, 2, 1], [1, 0, 1, 2], [2, 1, 0, 1], [1, 2, 1, 0]],
)


def test_coupling_symmetry_on_random_assignments():
    rng = random.Random(5)
    pool = all_cyclic_permutations(range(5))
    for _ in range(50):
        rots = tuple(rng.sample(pool, 4))
        routes = {}
        for i, j in combinations(range(4), 2):
            size = rng.randint(0, 3)
            ts = rng.sample(
                [Transposition(a, b) for a, b in combinations(range(5), 2)], size)
            routes[(i, j)] = frozenset(ts)
        q = induced_q(AntirouteAssignment(rots, routes))
        for (k, l), qs in q.items():
            for t in qs:
                assert Transposition(k, l) in routes[(t.a, t.b)]
        for (i, j), ts in routes.items():
            for t in ts:
                assert Transposition(i, j) in q[(t.a, t.b)]


def test_profile_exists_rejects_all_empty_q_on_4_symbols():
    # gamma_1 = gamma_2 = reverse(gamma_0) forces gamma_0 to equal its own
    # reverse, impossible on 4 symbols
    assert profile_exists({}, 4) is None


def test_profile_exists_finds_witness_for_realizable_fragment():
    rots, labels = (
        [P("01234"), P("01432"), P("02314"), P("04312")],
        [[0, 1, 2, 1], [1, 0, 1, 2], [2, 1, 0, 1], [1, 2, 1, 0]],
    )
    ok, cert = fragment_realizable(rots, labels)
    assert ok
    witness = next(c for c in cert["cases"] if c["outcome"] == "witness")
    assert len(witness["gamma"]) == 5


def test_star_fragment_unrealizable_with_4_combinations():
    ok, cert = fragment_realizable(*STAR_FRAGMENT)
    assert not ok
    assert cert["combination_count"] == 4
    assert all(c["outcome"] == "contradiction" for c in cert["cases"])


def test_cycle_fragment_unrealizable_with_4_combinations():
    ok, cert = fragment_realizable(*CYCLE_FRAGMENT)
    assert not ok
    assert cert["combination_count"] == 4
    assert len(cert["cases"]) == 4


def test_cycle_fragment_forced_antiroutes():
    # the size-1 antiroutes of the cycle fragment are forced
    rots, _ = CYCLE_FRAGMENT
    forced = {(0, 1): {(0, 1)}, (2, 3): {(0, 1)}, (1, 2): {(2, 3)}, (0, 3): {(2, 3)}}
    for (i, j), expected in forced.items():
        routes = routes_of_size(rots[i], rots[j], 1, anti=True)
        assert {frozenset((t.a, t.b) for t in r.transpositions)
                for r in routes} == {frozenset(expected)}


def test_unrealizable_when_no_antiroute_of_required_size():
    rots = [P("01234"), P("01234"), P("01432"), P("04312")]
    labels = [[0, 1, 1, 1], [1, 0, 1, 1], [1, 1, 0, 1], [1, 1, 1, 0]]
    # antidistance between equal rotations is 4, so label 1 admits no antiroute
    ok, cert = fragment_realizable(rots, labels)
    assert not ok
    assert [0, 1] in cert["no_antiroute_pairs"]


def test_verify_unique_hub_examples():
    assert verify_unique_hub(P("01432"), P("03214"), P("03421")) == 1
    with pytest.raises(ValueError):
        verify_unique_hub(P("01234"), P("01234"), P("01432"))


def test_hub_count_at_most_one_for_sample():
    pool = all_cyclic_permutations(range(5))
    rng = random.Random(9)
    for _ in range(30):
        a, b, c = rng.sample(pool, 3)
        assert verify_unique_hub(a, b, c) <= 1
