"""Shared fixtures: the standard small categories and a random pool of twisting systems."""

from __future__ import annotations

import random

from twistcat import (
    MatchedPair,
    TwistingSystem,
    enumerate_twisting_systems,
    from_monoid,
    from_preorder,
    sample_twisting_system,
    twisted_tensor_product,
)
from twistcat.catalog import all_posets, codiscrete, cyclic_group, discrete, symmetric_group, two_object_groupoid
from twistcat.product import semidirect_product

G2 = two_object_groupoid()
ID0, ID1, U, UINV = 0, 1, 2, 3


def groupoid_system() -> TwistingSystem:
    (R,) = enumerate_twisting_systems(G2, G2)
    return R


def inversion_pair() -> MatchedPair:
    """``Z2`` acting on ``Z3`` by inversion, trivial right action."""
    Z3, Z2 = cyclic_group(3), cyclic_group(2)
    left = {(f, g): (g if f == 0 else (-g) % 3) for f in range(2) for g in range(3)}
    right = {(f, g): f for f in range(2) for g in range(3)}
    return MatchedPair(Z3, Z2, {(0, 0, 0): 0}, left, right)


def category_zoo():
    """Categories with at most 4 objects and 12 morphisms, grouped by object count."""
    zoo = {1: [], 2: [], 3: [], 4: []}
    for n in (1, 2, 3, 4):
        for rel in all_posets(n):
            zoo[n].append(from_preorder(n, rel))
        zoo[n].append(codiscrete(n))
    zoo[1] += [cyclic_group(k) for k in (2, 3, 4, 5, 6)] + [symmetric_group(3)]
    zoo[1] += [
        from_monoid([[0, 1], [1, 1]], 0),
        from_monoid([[0, 1, 2], [1, 1, 1], [2, 2, 2]], 0),
        from_monoid([[0, 1, 2], [1, 1, 2], [2, 2, 2]], 0),
    ]
    zoo[2].append(G2)
    zoo[2].append(twisted_tensor_product(groupoid_system()).category)
    chain2 = from_preorder(2, [(0, 0), (0, 1), (1, 1)])
    zoo[2].append(semidirect_product(chain2, cyclic_group(2), {(b, g): g for b in range(2) for g in range(3)}))
    zoo[2].append(semidirect_product(G2, cyclic_group(2), {(b, g): g for b in range(2) for g in range(4)}))
    zoo[3].append(discrete(3))
    return {n: [C for C in cats if C.n_morphisms <= 12] for n, cats in zoo.items()}


def random_systems(rng: random.Random, count: int) -> list[TwistingSystem]:
    """``count`` randomly sampled valid systems over random pairs from the zoo."""
    zoo = category_zoo()
    out = []
    while len(out) < count:
        n = rng.choice((1, 1, 2, 2, 3, 4))
        A, B = rng.choice(zoo[n]), rng.choice(zoo[n])
        R = sample_twisting_system(A, B, rng)
        if R is not None:
            out.append(R)
    return out
