"""Small named categories used in examples, tests and demos."""

from __future__ import annotations

import itertools

from .category import FiniteCategory, from_group, from_preorder


def cyclic_table(n: int) -> list[list[int]]:
    return [[(a + b) % n for b in range(n)] for a in range(n)]


def cyclic_group(n: int) -> FiniteCategory:
    """Z_n as a one-object category; morphism ``k`` is the residue ``k``."""
    return from_group(cyclic_table(n), 0)


def permutations(n: int) -> list[tuple[int, ...]]:
    return list(itertools.permutations(range(n)))


def symmetric_table(n: int) -> list[list[int]]:
    """Cayley table of S_n on lexicographically ordered permutations; ``p*q = p o q``."""
    perms = permutations(n)
    index = {p: i for i, p in enumerate(perms)}
    return [[index[tuple(p[q[i]] for i in range(n))] for q in perms] for p in perms]


def symmetric_group(n: int) -> FiniteCategory:
    return from_group(symmetric_table(n), 0)


def discrete(n: int) -> FiniteCategory:
    """Identities only."""
    return from_preorder(n, [(x, x) for x in range(n)])


def chain(n: int) -> FiniteCategory:
    """The total order ``0 <= 1 <= ... <= n-1``; ``hom(x, y)`` is non-empty iff ``x <= y``."""
    return from_preorder(n, [(x, y) for x in range(n) for y in range(n) if x <= y])


def codiscrete(n: int) -> FiniteCategory:
    """Exactly one morphism between any two objects (a thin groupoid)."""
    return from_preorder(n, [(x, y) for x in range(n) for y in range(n)])


def two_object_groupoid() -> FiniteCategory:
    """Objects 0 and 1 with ``u: 1 -> 0`` and its inverse ``u^-1: 0 -> 1``.

    Morphism ids: ``0 = Id_0``, ``1 = Id_1``, ``2 = u``, ``3 = u^-1``.
    """
    src = [0, 1, 1, 0]
    tgt = [0, 1, 0, 1]
    compose = {
        (0, 0): 0, (1, 1): 1,
        (0, 2): 2, (2, 1): 2,
        (1, 3): 3, (3, 0): 3,
        (2, 3): 0, (3, 2): 1,
    }
    return FiniteCategory(2, src, tgt, [0, 1], compose)


def all_posets(n: int) -> list[frozenset[tuple[int, int]]]:
    """Every partial order on ``{0..n-1}`` (labelled), as sets of pairs ``(x, y)`` with ``x <= y``."""
    off = [(x, y) for x in range(n) for y in range(n) if x != y]
    refl = {(x, x) for x in range(n)}
    found = []
    for bits in itertools.product((0, 1), repeat=len(off)):
        rel = refl | {p for p, b in zip(off, bits) if b}
        if any((y, x) in rel for x, y in rel if x != y):
            continue
        if any((x, z) not in rel for x, y in rel for y2, z in rel if y == y2):
            continue
        found.append(frozenset(rel))
    return found
