"""
Brackets on posets
==================

Between thin categories a twisting system is the same thing as a bracket
``|xyz|`` obeying five conditions. We count brackets for every pair of
partial orders on three points and rebuild each product from the bracket
alone.
"""

import collections
import itertools

from twistcat import (
    bracket_to_twisting,
    construct_CST,
    default_poset_bracket,
    enumerate_brackets,
    enumerate_twisting_systems,
    from_preorder,
    twisted_tensor_product,
    validate_bracket,
)
from twistcat.catalog import all_posets, chain

posets = all_posets(3)
histogram = collections.Counter()
for le, pr in itertools.product(posets, repeat=2):
    A, B = from_preorder(3, le), from_preorder(3, pr)
    brackets = enumerate_brackets(A, B)
    assert len(brackets) == len(enumerate_twisting_systems(A, B))
    for bf in brackets:
        # C(S, T, |...|) has one arrow x -> y per admissible middle object.
        res = construct_CST(A, B, bf)
        assert res.iso.target == twisted_tensor_product(bracket_to_twisting(A, B, bf)).category
    histogram[len(brackets)] += 1

print("pairs of orders on 3 points:", len(posets) ** 2)
for count, pairs in sorted(histogram.items()):
    print(f"  {pairs:4d} pairs admit {count} bracket(s)")

# When both orders agree, |xyz| = z (or x when y = z) always works.
A = chain(3)
print("default bracket valid on the 3-chain:", validate_bracket(A, A, default_poset_bracket(A, A)).ok)
print("brackets on the 3-chain:", len(enumerate_brackets(A, A)))
