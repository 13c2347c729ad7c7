from fractions import Fraction as Q

import pytest

from twistcat import MalformedError, enumerate_brackets, twisted_tensor_product
from twistcat import io
from twistcat.catalog import chain, cyclic_table, discrete
from twistcat.linear import (
    HModuleAction,
    LinearCategory,
    group_algebra,
    group_like_coalgebra,
    linearize,
    matrix,
    truncated_polynomial,
)
from twistcat.linear.matrix import equal
from twistcat.twisting import twisting_to_matched_pair, extract_simple

from helpers import G2, groupoid_system


def test_category_round_trip_and_canonical_text():
    d = io.category_to_json(G2)
    assert io.category_from_json(d) == G2
    assert io.dumps(d) == io.dumps(io.category_to_json(io.category_from_json(io.loads(io.dumps(d)))))
    assert d["compose"] == sorted(d["compose"])


@pytest.mark.parametrize(
    "mutate",
    [
        lambda d: d.update(extra=1),
        lambda d: d.pop("identity"),
        lambda d: d["morphisms"].append({"id": 9, "src": 0, "tgt": 0}),
        lambda d: d["morphisms"][0].update(id=1),
        lambda d: d["compose"].append(list(d["compose"][0])),
        lambda d: d["compose"].pop(),
        lambda d: d.update(objects=True),
        lambda d: d["compose"][0].append(0),
    ],
)
def test_category_reader_rejects_malformed_input(mutate):
    d = io.category_to_json(G2)
    mutate(d)
    with pytest.raises(MalformedError):
        io.category_from_json(d)


def test_bad_json_text():
    with pytest.raises(MalformedError):
        io.loads("{")


def test_twisting_and_matched_pair_round_trip():
    R = groupoid_system()
    assert io.twisting_from_json(io.twisting_to_json(R), G2, G2) == R
    mp = twisting_to_matched_pair(extract_simple(R))
    assert io.matched_pair_from_json(io.matched_pair_to_json(mp), G2, G2) == mp
    with pytest.raises(MalformedError):
        io.twisting_from_json({"entries": [[0, 0, 0, 0]]}, G2, G2)
    with pytest.raises(MalformedError):
        io.matched_pair_from_json({"bracket": [], "left": []}, G2, G2)


def test_bracket_round_trip():
    (bf,) = enumerate_brackets(G2, G2)
    assert io.bracket_from_json(io.bracket_to_json(bf)) == bf
    d = io.bracket_to_json(bf)
    d["values"].pop()
    with pytest.raises(MalformedError):
        io.bracket_from_json(d)


def test_product_carries_tagging():
    P = twisted_tensor_product(groupoid_system())
    d = io.product_to_json(P)
    assert io.tagging_from_json(d) == dict(enumerate(P.tagging))
    assert io.category_from_json(d, ("tagging",)) == P.category
    with pytest.raises(MalformedError):
        io.category_from_json(d)


def test_rationals_are_written_as_fractions():
    d = io.linear_to_json(matrix([[1, "1/2"], [-3, 0]]))
    assert d["matrix"] == [["1/1", "1/2"], ["-3/1", "0/1"]]
    assert d["convention"] == "left factor is the slow index"
    assert equal(io.linear_from_json(d), matrix([[1, Q(1, 2)], [-3, 0]]))


@pytest.mark.parametrize(
    "obj",
    [
        truncated_polynomial(3),
        group_like_coalgebra(3),
        group_algebra(cyclic_table(3), 0),
        linearize(chain(2)),
        linearize(discrete(2)),
    ],
)
def test_linear_round_trip(obj):
    d = io.linear_to_json(obj)
    assert io.linear_from_json(io.loads(io.dumps(d))) == obj
    bare = {k: v for k, v in d.items() if k not in ("kind", "convention")}
    assert io.linear_from_json(bare) == obj  # kind inferred from the keys


def test_module_category_round_trip():
    H = group_algebra(cyclic_table(2), 0)
    A = LinearCategory.from_algebra(truncated_polynomial(2))
    act = HModuleAction(H, A, {(0, 0): matrix([[1, 0, 1, 0], [0, 1, 0, -1]])})
    back = io.linear_from_json(io.linear_to_json(act))
    assert back.H == H and back.A == A and equal(back.action[(0, 0)], act.action[(0, 0)])


@pytest.mark.parametrize(
    "bad",
    [
        {"kind": "algebra", "dim": 1, "mult": [[0, 0, 0, 0.5]], "unit": ["1"]},
        {"kind": "algebra", "dim": 1, "mult": [[0, 0, 1, "1"]], "unit": ["1"]},
        {"kind": "algebra", "dim": 1, "mult": [], "unit": ["1"], "junk": 0},
        {"kind": "nonsense"},
        {"dim": 1},
        {"kind": "linear-map", "rows": 1, "cols": 2, "matrix": [["1"]]},
    ],
)
def test_linear_reader_rejects_malformed_input(bad):
    with pytest.raises(MalformedError):
        io.linear_from_json(bad)


def test_action_file_round_trip():
    act = {(b, g): g for b in range(2) for g in range(3)}
    assert io.action_from_json(io.action_to_json(act)) == act
