import itertools
import random

import pytest

from twistcat import (
    AxiomError,
    FactorizationError,
    NotGroupoidError,
    TwistingSystem,
    bicrossed_groupoid_inverse,
    check_factorization,
    derive_twisting,
    enumerate_twisting_systems,
    extract_simple,
    find_isomorphism,
    from_group,
    is_groupoid,
    semidirect_matched_pair,
    semidirect_product,
    twisted_tensor_product,
    twisting_to_matched_pair,
    validate_category,
)
from twistcat.catalog import chain, cyclic_group, discrete, permutations, symmetric_group, symmetric_table

from helpers import G2, ID0, ID1, U, UINV, groupoid_system, inversion_pair, random_systems
from oracles import hom, inverse_table, order_six_group_class


def test_groupoid_product_shape():
    P = twisted_tensor_product(groupoid_system())
    C = P.category
    assert C.n_morphisms == 8
    assert all(len(C.hom(x, y)) == 2 for x in range(2) for y in range(2))
    assert validate_category(C).ok
    assert is_groupoid(C) is not None


def test_groupoid_product_involution():
    P = twisted_tensor_product(groupoid_system())
    idx = P.index()
    f = idx[(1, U, UINV)]  # the pair (u, u^-1), an endomorphism of object 0
    assert P.category.src[f] == P.category.tgt[f] == 0
    assert P.category.compose(f, f) == idx[(0, ID0, ID0)]


def test_alpha_beta_are_wide_embeddings():
    P = twisted_tensor_product(groupoid_system())
    for F in (P.alpha, P.beta):
        assert F.validate().ok and F.is_injective()
    assert [P.tagging[P.alpha(g)] for g in range(4)] == [(G2.src[g], g, G2.identity[G2.src[g]]) for g in range(4)]


def test_discrete_b_gives_a_copy_of_a():
    for A in (G2, chain(3)):
        (R,) = enumerate_twisting_systems(A, discrete(A.n_objects))
        P = twisted_tensor_product(R)
        assert P.alpha.is_isomorphism()


def test_inversion_pair_gives_s3():
    P = twisted_tensor_product(inversion_pair().to_twisting())
    assert find_isomorphism(P.category, symmetric_group(3)) is not None
    assert order_six_group_class(P.category) == "S3"


def test_invalid_system_is_rejected():
    R = groupoid_system()
    entries = dict(R.entries)
    options = [(0, UINV, U), (1, ID1, ID1)]
    options.remove(entries[(UINV, U)])
    entries[(UINV, U)] = options[0]
    with pytest.raises(AxiomError):
        twisted_tensor_product(TwistingSystem(G2, G2, entries))


def test_factorization_of_a_product_recovers_the_tagging():
    P = twisted_tensor_product(groupoid_system())
    fac = check_factorization(P.category, P.alpha, P.beta)
    assert fac is not None
    assert dict(fac.psi) == dict(enumerate(P.tagging))


def test_z4_does_not_factor_through_its_subgroup_twice():
    assert check_factorization(cyclic_group(4), [0, 2], [0, 2]) is None


def _s3_subgroups():
    perms = permutations(3)
    rot = [i for i, p in enumerate(perms) if p == (0, 1, 2) or all(p[k] != k for k in range(3))]
    swap = [perms.index((0, 1, 2)), perms.index((1, 0, 2))]
    return rot, swap


def test_s3_factors_through_rotations_and_a_swap():
    rot, swap = _s3_subgroups()
    S3 = symmetric_group(3)
    fac = check_factorization(S3, rot, swap)
    assert fac is not None and len(fac.psi) == 6


def test_s3_derived_system_is_the_conjugation_pair():
    rot, swap = _s3_subgroups()
    S3 = symmetric_group(3)
    table = symmetric_table(3)
    R = derive_twisting(S3, rot, swap)
    mp = twisting_to_matched_pair(extract_simple(R))
    # subcategory ids follow ascending ids of S3
    for f in range(2):
        for g in range(3):
            sf, sg = swap[f], rot[g]
            inv_f = next(k for k in range(6) if table[sf][k] == 0)
            conj = table[table[sf][sg]][inv_f]
            assert rot[mp.left[(f, g)]] == conj
            assert mp.right[(f, g)] == f
            # the defining equation f o g = (f |> g) o (f <| g)
            assert table[sf][sg] == table[rot[mp.left[(f, g)]]][swap[mp.right[(f, g)]]]


def test_discrete_derived_system_is_forced():
    D = discrete(3)
    R = derive_twisting(D, range(3), range(3))
    assert R == enumerate_twisting_systems(D, D)[0]


def test_non_bijective_factorization_is_an_error():
    with pytest.raises(FactorizationError):
        derive_twisting(cyclic_group(4), [0, 2], [0, 2])
    with pytest.raises(FactorizationError):
        check_factorization(cyclic_group(4), [0, 1], [0])


def test_round_trip_through_functors_is_exact():
    for R in random_systems(random.Random(7), 40):
        P = twisted_tensor_product(R)
        assert derive_twisting(P.category, P.alpha, P.beta) == R


def test_round_trip_through_subsets_reindexes_ids():
    for R in random_systems(random.Random(8), 25):
        P = twisted_tensor_product(R)
        a_ids = sorted(P.alpha.image())
        b_ids = sorted(P.beta.image())
        R2 = derive_twisting(P.category, a_ids, b_ids)
        ga = {g: a_ids.index(P.alpha(g)) for g in range(R.A.n_morphisms)}
        fb = {f: b_ids.index(P.beta(f)) for f in range(R.B.n_morphisms)}
        for (f, g), (u, gp, fp) in R.entries.items():
            assert R2(fb[f], ga[g]) == (u, ga[gp], fb[fp])


def test_groupoid_inverse_closed_form():
    mp = twisting_to_matched_pair(extract_simple(groupoid_system()))
    assert bicrossed_groupoid_inverse(mp, (U, UINV)) == (U, UINV)
    for x in range(2):
        assert bicrossed_groupoid_inverse(mp, (G2.identity[x], G2.identity[x])) == (x, x)
    P = twisted_tensor_product(mp.to_twisting())
    inv = inverse_table(P.category)
    idx = P.index()
    for c, (u, g, f) in enumerate(P.tagging):
        gp, fp = bicrossed_groupoid_inverse(mp, (g, f))
        assert idx[(G2.src[gp], gp, fp)] == inv[c]


def test_group_pairs_inverse_matches_exhaustive_table():
    for A, B in [(cyclic_group(3), cyclic_group(2)), (symmetric_group(3), cyclic_group(2)), (cyclic_group(2), cyclic_group(3))]:
        for R in enumerate_twisting_systems(A, B):
            mp = twisting_to_matched_pair(extract_simple(R))
            P = twisted_tensor_product(R)
            inv = inverse_table(P.category)
            idx = P.index()
            for c, (u, g, f) in enumerate(P.tagging):
                gp, fp = bicrossed_groupoid_inverse(mp, (g, f))
                assert idx[(A.src[gp], gp, fp)] == inv[c]


def test_inverse_needs_groupoids():
    idem = chain(2)
    (R,) = enumerate_twisting_systems(idem, idem)
    mp = twisting_to_matched_pair(extract_simple(R))
    with pytest.raises(NotGroupoidError):
        bicrossed_groupoid_inverse(mp, (0, 0))


def test_trivial_action_semidirect_is_direct_product():
    A, M = cyclic_group(3), cyclic_group(2)
    C = semidirect_product(A, M, {(b, g): g for b in range(2) for g in range(3)})
    direct = from_group([[(a1 + a2) % 3 * 2 + (b1 + b2) % 2 for a2 in range(3) for b2 in range(2)] for a1 in range(3) for b1 in range(2)], 0)
    assert find_isomorphism(C, direct) is not None
    assert order_six_group_class(C) == "Z6"


def test_inversion_semidirect_is_s3():
    C = semidirect_product(cyclic_group(3), cyclic_group(2), {(b, g): (g if b == 0 else (-g) % 3) for b in range(2) for g in range(3)})
    assert find_isomorphism(C, symmetric_group(3)) is not None


def test_semidirect_over_groupoid_has_eight_morphisms():
    C = semidirect_product(G2, cyclic_group(2), {(b, g): g for b in range(2) for g in range(4)})
    assert C.n_morphisms == 8 and validate_category(C).ok
    assert all(len(C.hom(x, y)) == 2 for x, y in itertools.product(range(2), repeat=2))


def test_semidirect_rejects_non_actions():
    with pytest.raises(AxiomError) as exc:
        semidirect_matched_pair(cyclic_group(3), cyclic_group(2), {(b, g): (g + b) % 3 for b in range(2) for g in range(3)})
    assert exc.value.report.tags() & {"action-unit", "action-composition", "action-identity", "action-distributive"}
    with pytest.raises(FactorizationError):
        semidirect_matched_pair(G2, G2, {})


def test_semidirect_right_action_is_trivial():
    mp = semidirect_matched_pair(cyclic_group(3), cyclic_group(2), {(b, g): (g if b == 0 else (-g) % 3) for b in range(2) for g in range(3)})
    assert all(v == f for (f, g), v in mp.right.items())


def test_product_hom_sets_match_pair_counts():
    for R in random_systems(random.Random(9), 30):
        C = twisted_tensor_product(R).category
        A, B = R.A, R.B
        for x, y in itertools.product(range(A.n_objects), repeat=2):
            expected = sum(len(hom(A, x, u)) * len(hom(B, u, y)) for u in range(A.n_objects))
            assert len(C.hom(x, y)) == expected
