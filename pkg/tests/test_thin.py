import random

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from twistcat import (
    BracketFunction,
    MalformedError,
    NotThinError,
    bracket_to_twisting,
    compute_T,
    construct_CST,
    default_poset_bracket,
    enumerate_brackets,
    enumerate_twisting_systems,
    from_preorder,
    is_groupoid,
    twisted_tensor_product,
    twisting_to_bracket,
    validate_bracket,
    validate_poset_bracket,
    validate_twisting_system,
)
from twistcat.catalog import all_posets, chain, cyclic_group, discrete

from helpers import G2
from oracles import all_poset_brackets


def groupoid_bracket() -> BracketFunction:
    (bf,) = enumerate_brackets(G2, G2)
    return bf


def test_T_for_chain_groupoid_and_discrete():
    assert set(compute_T(chain(2), chain(2))) == {(0, 0, 0), (0, 0, 1), (0, 1, 1), (1, 1, 1)}
    assert len(compute_T(G2, G2)) == 8
    assert compute_T(discrete(3), discrete(3)) == ((0, 0, 0), (1, 1, 1), (2, 2, 2))


def test_non_thin_input_is_rejected():
    with pytest.raises(NotThinError):
        compute_T(cyclic_group(2), cyclic_group(2))


def test_groupoid_bracket():
    bf = groupoid_bracket()
    assert bf(0, 1, 0) == 1 and bf(1, 0, 1) == 0
    assert validate_bracket(G2, G2, bf).ok


def test_wrong_groupoid_bracket_violates_condition_ii():
    bf = groupoid_bracket()
    values = dict(bf.values)
    values[(0, 1, 0)] = 0
    tags = validate_bracket(G2, G2, BracketFunction(bf.T, values)).tags()
    assert "(ii)" in tags


def test_bracket_domain_must_equal_T():
    bf = groupoid_bracket()
    values = dict(bf.values)
    del values[(0, 1, 0)]
    with pytest.raises(MalformedError):
        BracketFunction(bf.T, values)
    short = BracketFunction(bf.T[:-1], {t: bf.values[t] for t in bf.T[:-1]})
    with pytest.raises(MalformedError):
        validate_bracket(G2, G2, short)


@pytest.mark.parametrize("rel", all_posets(3))
def test_default_bracket_is_valid_on_every_three_point_poset(rel):
    A = from_preorder(3, rel)
    bf = default_poset_bracket(A, A)
    assert validate_bracket(A, A, bf).ok
    assert validate_poset_bracket(rel, rel, 3, bf).ok


def test_counts_for_named_pairs():
    assert len(enumerate_brackets(G2, G2)) == 1
    assert len(enumerate_brackets(chain(2), chain(2))) == 1


def _pair_cases(n):
    posets = all_posets(n)
    return [(le, pr) for le in posets for pr in posets]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_brackets_match_the_order_theoretic_oracle(n):
    for le, pr in _pair_cases(n):
        A, B = from_preorder(n, le), from_preorder(n, pr)
        got = {bf.key() for bf in enumerate_brackets(A, B)}
        want = {BracketFunction(compute_T(A, B), v).key() for v in all_poset_brackets(set(le), set(pr), n)}
        assert got == want


def test_three_chain_brackets_convert_to_valid_systems():
    A = chain(3)
    brackets = enumerate_brackets(A, A)
    assert len(brackets) == len(all_poset_brackets(set(_rel(A)), set(_rel(A)), 3))
    for bf in brackets:
        R = bracket_to_twisting(A, A, bf)
        assert validate_twisting_system(R).ok
        assert twisting_to_bracket(R) == bf


def _rel(C):
    return {(x, y) for x in range(C.n_objects) for y in range(C.n_objects) if C.hom(x, y)}


def test_groupoid_round_trip():
    bf = groupoid_bracket()
    (R,) = enumerate_twisting_systems(G2, G2)
    assert bracket_to_twisting(G2, G2, bf) == R
    assert twisting_to_bracket(R) == bf


def test_discrete_bracket_is_forced():
    D = discrete(2)
    (bf,) = enumerate_brackets(D, D)
    assert all(bf(x, x, x) == x for x in range(2))
    assert twisting_to_bracket(bracket_to_twisting(D, D, bf)) == bf


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000))
def test_random_three_point_brackets_round_trip(seed):
    rng = random.Random(seed)
    posets = all_posets(3)
    A, B = from_preorder(3, rng.choice(posets)), from_preorder(3, rng.choice(posets))
    brackets = enumerate_brackets(A, B)
    assume(brackets)  # unrelated orders may admit no bracket at all
    bf = rng.choice(brackets)
    assert twisting_to_bracket(bracket_to_twisting(A, B, bf)) == bf


def test_groupoid_cst():
    res = construct_CST(G2, G2, groupoid_bracket())
    C = res.category
    assert all(len(C.hom(x, y)) == 2 for x in range(2) for y in range(2))
    assert res.iso.validate().ok and res.iso.is_isomorphism()
    assert is_groupoid(C) is not None


def test_discrete_cst_is_discrete():
    D = discrete(3)
    (bf,) = enumerate_brackets(D, D)
    res = construct_CST(D, D, bf)
    assert res.category == D


@pytest.mark.parametrize("n", [2, 3])
def test_cst_iso_for_every_poset_pair(n):
    for le, pr in _pair_cases(n):
        A, B = from_preorder(n, le), from_preorder(n, pr)
        for bf in enumerate_brackets(A, B):
            res = construct_CST(A, B, bf)
            assert res.iso.is_isomorphism()
            assert res.iso.target == twisted_tensor_product(bracket_to_twisting(A, B, bf)).category
