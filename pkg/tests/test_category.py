import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twistcat import (
    AxiomError,
    FiniteCategory,
    MalformedError,
    find_isomorphism,
    from_group,
    from_monoid,
    from_preorder,
    is_groupoid,
    is_thin,
    validate_category,
    wide_subcategory_check,
)
from twistcat.catalog import (
    all_posets,
    chain,
    codiscrete,
    cyclic_group,
    cyclic_table,
    discrete,
    symmetric_group,
    two_object_groupoid,
)

from oracles import inverse_table

G2 = two_object_groupoid()
ID0, ID1, U, UINV = 0, 1, 2, 3


def test_terminal_category_is_valid():
    C = FiniteCategory(1, [0], [0], [0], {(0, 0): 0})
    assert validate_category(C).ok


def test_groupoid_is_valid_and_hom_sets():
    assert validate_category(G2).ok
    assert G2.hom(0, 1) == (U,)
    assert G2.hom(1, 0) == (UINV,)
    assert G2.compose(U, UINV) == ID0 and G2.compose(UINV, U) == ID1


def test_wrong_target_of_composite_is_a_single_typing_violation():
    comp = dict(G2.composition)
    comp[(U, UINV)] = ID1
    C = FiniteCategory(2, G2.src, G2.tgt, G2.identity, comp)
    rep = validate_category(C)
    typing = [v for v in rep if v.tag == "typing"]
    assert len(typing) == 1 and typing[0].witness == (U, UINV)


def test_missing_composite_is_malformed():
    comp = dict(G2.composition)
    del comp[(U, UINV)]
    with pytest.raises(MalformedError):
        FiniteCategory(2, G2.src, G2.tgt, G2.identity, comp)


def test_out_of_range_ids_are_malformed():
    with pytest.raises(MalformedError):
        FiniteCategory(1, [0], [1], [0], {(0, 0): 0})


def test_associativity_violation_names_a_triple():
    # 0 is the unit; a*b = b except a*a = b and b*a = a breaks associativity.
    table = [[0, 1, 2], [1, 2, 2], [2, 1, 2]]
    with pytest.raises(AxiomError) as exc:
        from_monoid(table, 0)
    tags = exc.value.report.tags()
    assert "associativity" in tags
    witness = next(v.witness for v in exc.value.report if v.tag == "associativity")
    assert len(witness) == 3


def test_groupoid_inverse_table():
    assert is_groupoid(G2) == {ID0: ID0, ID1: ID1, U: UINV, UINV: U}


def test_idempotent_monoid_is_not_a_groupoid():
    assert is_groupoid(from_monoid([[0, 1], [1, 1]], 0)) is None


def test_discrete_inverse_is_identity_map():
    C = discrete(3)
    assert is_groupoid(C) == {m: m for m in range(C.n_morphisms)}


def test_thinness():
    assert is_thin(chain(2))
    assert is_thin(G2)
    assert not is_thin(cyclic_group(2))


def test_group_constructors():
    Z2 = from_group(cyclic_table(2), 0)
    assert Z2.n_objects == 1 and Z2.n_morphisms == 2 and validate_category(Z2).ok
    inv = is_groupoid(cyclic_group(3))
    assert inv == {0: 0, 1: 2, 2: 1}


def test_non_latin_monoid_is_not_a_group():
    with pytest.raises(AxiomError) as exc:
        from_group([[0, 1], [1, 1]], 0)
    assert "latin-square" in exc.value.report.tags()


def test_preorder_constructor():
    assert chain(2).n_morphisms == 3
    assert discrete(2).n_morphisms == 2
    with pytest.raises(AxiomError) as exc:
        from_preorder(3, [(0, 0), (1, 1), (2, 2), (0, 1), (1, 2)])
    assert "transitivity" in exc.value.report.tags()


def test_wide_subcategories():
    inc = wide_subcategory_check(G2, [ID0, ID1])
    assert inc is not None and inc.source.n_morphisms == 2
    full = wide_subcategory_check(G2, range(4))
    assert full is not None and full.morphism_map == (0, 1, 2, 3)
    half = wide_subcategory_check(G2, [ID0, ID1, U])
    assert half is not None and half.morphism_map == (ID0, ID1, U)
    assert wide_subcategory_check(G2, [ID0, U]) is None  # missing Id_1
    assert wide_subcategory_check(cyclic_group(4), [0, 1]) is None  # 1+1 escapes


def test_isomorphism_search():
    Z6 = cyclic_group(6)
    S3 = symmetric_group(3)
    assert find_isomorphism(Z6, S3) is None
    iso = find_isomorphism(S3, S3)
    assert iso is not None and iso.is_isomorphism()
    assert find_isomorphism(chain(2), discrete(2)) is None


def test_posets_on_three_elements():
    # labelled partial orders on 3 points
    assert len(all_posets(3)) == 19


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=1, max_value=4), st.randoms(use_true_random=False))
def test_random_preorders_are_valid_thin_categories(n, rnd):
    rel = {(x, x) for x in range(n)} | {(x, y) for x in range(n) for y in range(n) if rnd.random() < 0.3}
    # transitive closure
    changed = True
    while changed:
        extra = {(x, z) for x, y in rel for y2, z in rel if y == y2} - rel
        rel |= extra
        changed = bool(extra)
    C = from_preorder(n, rel)
    assert validate_category(C).ok and is_thin(C)
    symmetric = all((y, x) in rel for x, y in rel)
    assert (is_groupoid(C) is not None) == symmetric
    assert is_groupoid(C) == inverse_table(C)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_cyclic_inverse_matches_oracle(n):
    C = cyclic_group(n)
    assert is_groupoid(C) == inverse_table(C)


def test_codiscrete_is_thin_groupoid():
    C = codiscrete(3)
    assert is_thin(C) and is_groupoid(C) == inverse_table(C)


def test_functor_inverse_round_trip():
    iso = find_isomorphism(G2, G2)
    inv = iso.inverse()
    for m in range(4):
        assert inv(iso(m)) == m


def test_category_equality_is_structural():
    assert chain(2) == from_preorder(2, [(0, 0), (0, 1), (1, 1)])
    assert chain(2) != discrete(2)
    for a, b in itertools.combinations([chain(2), discrete(2), codiscrete(2), G2], 2):
        assert a != b
