import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twistcat import (
    MatchedPair,
    SearchSpaceError,
    TwistingSystem,
    enumerate_twisting_systems,
    extract_simple,
    from_monoid,
    from_preorder,
    matched_pair_to_twisting,
    sample_twisting_system,
    twisting_search_bound,
    twisting_to_matched_pair,
    validate_matched_pair,
    validate_twisting_system,
)
from twistcat.catalog import all_posets, chain, cyclic_group, discrete, symmetric_group, two_object_groupoid

from oracles import all_twisting_systems, twisting_laws_hold

G2 = two_object_groupoid()
ID0, ID1, U, UINV = 0, 1, 2, 3


def groupoid_system() -> TwistingSystem:
    (R,) = enumerate_twisting_systems(G2, G2)
    return R


def inversion_pair() -> MatchedPair:
    Z3, Z2 = cyclic_group(3), cyclic_group(2)
    left = {(f, g): (g if f == 0 else (-g) % 3) for f in range(2) for g in range(3)}
    right = {(f, g): f for f in range(2) for g in range(3)}
    return MatchedPair(Z3, Z2, {(0, 0, 0): 0}, left, right)


def test_groupoid_has_exactly_one_system_with_the_expected_bracket():
    systems = enumerate_twisting_systems(G2, G2)
    assert len(systems) == 1
    st_ = extract_simple(systems[0])
    assert st_ is not None
    assert st_.bracket[(0, 1, 0)] == 1 and st_.bracket[(1, 0, 1)] == 0
    for x in range(2):
        for y in range(2):
            assert st_.bracket[(x, x, y)] == y
            assert st_.bracket[(x, y, y)] == x


def test_groupoid_system_validates():
    assert validate_twisting_system(groupoid_system()).ok


@pytest.mark.parametrize("n", [1, 2, 3])
def test_discrete_has_only_the_forced_system(n):
    D = discrete(n)
    (R,) = enumerate_twisting_systems(D, D)
    assert validate_twisting_system(R).ok
    st_ = extract_simple(R)
    assert all(st_.bracket[(x, x, x)] == x for x in range(n))


def test_corrupted_entry_is_caught_by_a_diagram():
    R = groupoid_system()
    entries = dict(R.entries)
    # R(u^-1, u) has two well-typed candidates: (0, u^-1, u) and (1, Id_1, Id_1); take the wrong one
    options = [(0, UINV, U), (1, ID1, ID1)]
    options.remove(entries[(UINV, U)])
    entries[(UINV, U)] = options[0]
    bad = TwistingSystem(G2, G2, entries)
    rep = validate_twisting_system(bad)
    assert not rep.ok
    assert rep.tags() & {"D1", "D2", "D3", "D4"}
    assert all(len(v.witness) >= 2 for v in rep)


def test_typing_errors_precede_diagram_checks():
    R = groupoid_system()
    entries = dict(R.entries)
    entries[(U, UINV)] = (0, U, U)  # u is not in A(0, 0)
    rep = validate_twisting_system(TwistingSystem(G2, G2, entries))
    assert rep.tags() == {"entry-typing"}
    entries = dict(R.entries)
    del entries[(U, UINV)]
    assert "entry-missing" in validate_twisting_system(TwistingSystem(G2, G2, entries)).tags()


def test_different_object_counts_are_rejected():
    with pytest.raises(ValueError):
        TwistingSystem(discrete(1), discrete(2), {})


@pytest.mark.parametrize(
    "A,B",
    [
        (G2, G2),
        (chain(2), chain(2)),
        (discrete(2), chain(2)),
        (cyclic_group(2), cyclic_group(2)),
        (cyclic_group(3), cyclic_group(2)),
        (cyclic_group(2), cyclic_group(3)),
        (from_monoid([[0, 1], [1, 1]], 0), cyclic_group(2)),
        (from_monoid([[0, 1], [1, 1]], 0), from_monoid([[0, 1], [1, 1]], 0)),
        (from_monoid([[0, 1, 2], [1, 1, 1], [2, 2, 2]], 0), cyclic_group(2)),
    ],
)
def test_enumeration_matches_exhaustive_oracle(A, B):
    got = [R.key() for R in enumerate_twisting_systems(A, B)]
    want = {TwistingSystem(A, B, R).key() for R in all_twisting_systems(A, B)}
    assert len(got) == len(set(got))
    assert set(got) == want


def test_z3_by_z2_has_two_systems():
    systems = enumerate_twisting_systems(cyclic_group(3), cyclic_group(2))
    assert len(systems) == 2
    for R in systems:
        assert twisting_laws_hold(R.A, R.B, dict(R.entries))


def test_s3_by_z2_count_and_validity():
    systems = enumerate_twisting_systems(symmetric_group(3), cyclic_group(2))
    assert len(systems) == 4
    assert all(validate_twisting_system(R).ok for R in systems)


def test_search_limit():
    A, B = cyclic_group(3), cyclic_group(2)
    bound = twisting_search_bound(A, B)
    assert bound > 1
    with pytest.raises(SearchSpaceError):
        enumerate_twisting_systems(A, B, limit=1)
    assert len(enumerate_twisting_systems(A, B, limit=bound)) == 2


def test_groupoid_matched_pair_round_trip():
    st_ = extract_simple(groupoid_system())
    mp = twisting_to_matched_pair(st_)
    assert validate_matched_pair(mp).ok
    back = matched_pair_to_twisting(mp)
    assert back == st_
    assert twisting_to_matched_pair(back) == mp
    assert back.to_twisting() == groupoid_system()


def test_inversion_matched_pair_is_valid():
    mp = inversion_pair()
    assert validate_matched_pair(mp).ok
    assert validate_twisting_system(mp.to_twisting()).ok


def test_non_action_left_table_is_condition_ii():
    mp = inversion_pair()
    left = dict(mp.left)
    left[(1, 1)] = 1  # the generator no longer inverts
    bad = MatchedPair(mp.A, mp.B, mp.bracket, left, mp.right)
    tags = validate_matched_pair(bad).tags()
    assert any(t.startswith("(ii)") for t in tags)


def test_semidirect_style_right_action_ignores_g():
    st_ = matched_pair_to_twisting(inversion_pair())
    for (f, g), (gp, fp) in st_.tilde.items():
        assert fp == f


def test_thin_systems_are_always_simple():
    for rel in all_posets(3)[:8]:
        A = from_preorder(3, rel)
        for R in enumerate_twisting_systems(A, A):
            assert extract_simple(R) is not None


def _small_monoids():
    tables = [
        ([[0]], 0),
        ([[0, 1], [1, 0]], 0),
        ([[0, 1], [1, 1]], 0),
        ([[0, 1, 2], [1, 2, 0], [2, 0, 1]], 0),
        ([[0, 1, 2], [1, 1, 1], [2, 2, 2]], 0),
        ([[0, 1, 2], [1, 1, 2], [2, 2, 2]], 0),
    ]
    return [from_monoid(t, u) for t, u in tables]


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(_small_monoids()), st.sampled_from(_small_monoids()))
def test_every_enumerated_system_passes_and_round_trips(A, B):
    for R in enumerate_twisting_systems(A, B):
        assert validate_twisting_system(R).ok
        st_ = extract_simple(R)
        assert st_ is not None  # one object: the middle object is forced
        mp = twisting_to_matched_pair(st_)
        assert validate_matched_pair(mp).ok
        assert matched_pair_to_twisting(mp).to_twisting() == R


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10_000))
def test_sampled_systems_are_valid(seed):
    rng = random.Random(seed)
    R = sample_twisting_system(G2, G2, rng)
    assert R is not None and validate_twisting_system(R).ok
    A = from_preorder(3, rng.choice(all_posets(3)))
    R = sample_twisting_system(A, A, rng)
    assert R is not None and validate_twisting_system(R).ok
