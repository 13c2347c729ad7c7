"""
Groups of order six as products of Z3 and Z2
============================================

A twisting system between two one-object categories is a matched pair of
monoids. For Z3 and Z2 there are two, and their products are the two
groups of order six.
"""

from twistcat import (
    check_factorization,
    derive_twisting,
    enumerate_twisting_systems,
    extract_simple,
    find_isomorphism,
    twisted_tensor_product,
    twisting_to_matched_pair,
)
from twistcat.catalog import cyclic_group, permutations, symmetric_group

Z3, Z2 = cyclic_group(3), cyclic_group(2)

for R in enumerate_twisting_systems(Z3, Z2):
    C = twisted_tensor_product(R).category
    name = "Z6" if find_isomorphism(C, cyclic_group(6)) else "S3"
    mp = twisting_to_matched_pair(extract_simple(R))
    action = [mp.left[(1, g)] for g in range(3)]
    print(f"generator of Z2 acts on Z3 as {action} -> product is {name}")

# Going the other way: S3 factors through the rotations and one swap,
# and the induced system is the inversion action.
S3 = symmetric_group(3)
perms = permutations(3)
rotations = [i for i, p in enumerate(perms) if p == (0, 1, 2) or all(p[k] != k for k in range(3))]
swap = [perms.index((0, 1, 2)), perms.index((1, 0, 2))]
print("S3 = rotations * swap:", check_factorization(S3, rotations, swap) is not None)
mp = twisting_to_matched_pair(extract_simple(derive_twisting(S3, rotations, swap)))
print("swap acts on rotations as", [mp.left[(1, g)] for g in range(3)])

# The cyclic group of order 4 does not factor through {0, 2} twice.
print("Z4 = {0,2} * {0,2}:", check_factorization(cyclic_group(4), [0, 2], [0, 2]) is not None)
