"""
Exact linear twisted products
=============================

Structure constants are rationals, stored exactly. In ``X (x) Y`` the left
factor is the slow index, matching ``numpy.kron``.
"""

from fractions import Fraction

from twistcat.catalog import cyclic_table
from twistcat.linear import (
    HModuleAction,
    LinearCategory,
    double_cross_product,
    group_algebra,
    matrix,
    smash_product,
    truncated_polynomial,
    twisted_tensor_algebra,
    validate_bialgebra,
    validate_twisting_map,
)
from twistcat.linear.matrix import zeros

# A truncated quantum plane: y x = 2 x y inside Q[x]/(x^2) (x) Q[y]/(y^2).
P = truncated_polynomial(2)
R = zeros(4, 4)
for i in range(2):
    for j in range(2):
        R[j * 2 + i, i * 2 + j] = Fraction(2) ** (i * j)
print("twisting map laws hold:", validate_twisting_map(P, P, R).ok)
T = twisted_tensor_algebra(P, P, R)
print("(1 (x) y)(x (x) 1) =", [str(c) for c in T.product(1, 2)], "in the basis 1, y, x, xy")

# Z2 inverting Z3 gives a matched pair of group bialgebras; the double
# cross product is the group algebra of S3.
Z3, Z2 = group_algebra(cyclic_table(3), 0), group_algebra(cyclic_table(2), 0)
left, right = zeros(3, 6), zeros(2, 6)
for b in range(2):
    for g in range(3):
        left[g if b == 0 else (-g) % 3, b * 3 + g] = 1
        right[b, b * 3 + g] = 1
D = double_cross_product(Z3, Z2, left, right)
commutes = all((D.mult[:, i * 6 + j] == D.mult[:, j * 6 + i]).all() for i in range(6) for j in range(6))
print("double cross product: dim", D.dim, "bialgebra:", validate_bialgebra(D).ok, "commutative:", commutes)

# Z2 acting on Q[x]/(x^2) by x -> -x; the smash product is 4-dimensional.
act = HModuleAction(Z2, LinearCategory.from_algebra(P), {(0, 0): matrix([[1, 0, 1, 0], [0, 1, 0, -1]])})
S = smash_product(act).to_algebra()
names = ["1#1", "1#t", "x#1", "x#t"]
for a, b in [(3, 2), (3, 1), (1, 2)]:
    coeffs = {names[k]: str(c) for k, c in enumerate(S.product(a, b)) if c}
    print(f"({names[a]})({names[b]}) = {coeffs or 0}")
