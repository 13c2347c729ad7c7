"""Finite categories stored as explicit tables.

Conventions: objects are ``0..n-1`` and morphisms are dense integer ids.
A morphism ``f`` with ``tgt(f) == x`` and ``src(f) == y`` lies in the hom-set
``hom(x, y)``, i.e. it is an arrow ``y -> x``. ``compose(f, g)`` is ``f o g``
and is defined iff ``src(f) == tgt(g)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, NamedTuple, Optional, Sequence

from .errors import AxiomError, MalformedError, ReportBuilder, ValidationReport


class Morphism(NamedTuple):
    id: int
    src: int
    tgt: int


@dataclass(frozen=True, eq=False)
class FiniteCategory:
    n_objects: int
    src: tuple[int, ...]
    tgt: tuple[int, ...]
    identity: tuple[int, ...]
    composition: Mapping[tuple[int, int], int]
    _hom: Mapping[tuple[int, int], tuple[int, ...]] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "src", tuple(int(s) for s in self.src))
        object.__setattr__(self, "tgt", tuple(int(t) for t in self.tgt))
        object.__setattr__(self, "identity", tuple(int(i) for i in self.identity))
        object.__setattr__(
            self,
            "composition",
            MappingProxyType({(int(f), int(g)): int(h) for (f, g), h in self.composition.items()}),
        )
        self._check_well_formed()
        hom: dict[tuple[int, int], list[int]] = {}
        for m in range(self.n_morphisms):
            hom.setdefault((self.tgt[m], self.src[m]), []).append(m)
        object.__setattr__(self, "_hom", MappingProxyType({k: tuple(v) for k, v in hom.items()}))

    def _check_well_formed(self) -> None:
        n, m = self.n_objects, len(self.src)
        if n < 0:
            raise MalformedError("negative object count")
        if len(self.tgt) != m:
            raise MalformedError("src and tgt tables differ in length")
        for i, (s, t) in enumerate(zip(self.src, self.tgt)):
            if not (0 <= s < n and 0 <= t < n):
                raise MalformedError(f"morphism {i} has endpoint out of range")
        if len(self.identity) != n:
            raise MalformedError(f"identity table has {len(self.identity)} entries, expected {n}")
        for x, e in enumerate(self.identity):
            if not 0 <= e < m:
                raise MalformedError(f"identity of object {x} is not a morphism id")
        for (f, g), h in self.composition.items():
            if not (0 <= f < m and 0 <= g < m and 0 <= h < m):
                raise MalformedError(f"composition entry ({f},{g})->{h} out of range")
            if self.src[f] != self.tgt[g]:
                raise MalformedError(f"composition entry for non-composable pair ({f},{g})")
        for f in range(m):
            for g in range(m):
                if self.src[f] == self.tgt[g] and (f, g) not in self.composition:
                    raise MalformedError(f"missing composite for composable pair ({f},{g})")

    # construction helpers

    @classmethod
    def from_tables(
        cls,
        n_objects: int,
        morphisms: Sequence[tuple[int, int]],
        identity: Sequence[int],
        compose: Mapping[tuple[int, int], int],
    ) -> "FiniteCategory":
        """Build from a list of ``(src, tgt)`` pairs indexed by morphism id."""
        return cls(n_objects, [s for s, _ in morphisms], [t for _, t in morphisms], identity, compose)

    # queries

    @property
    def n_morphisms(self) -> int:
        return len(self.src)

    @property
    def objects(self) -> range:
        return range(self.n_objects)

    def morphisms(self) -> list[Morphism]:
        return [Morphism(i, s, t) for i, (s, t) in enumerate(zip(self.src, self.tgt))]

    def hom(self, x: int, y: int) -> tuple[int, ...]:
        """Morphisms ``y -> x`` in ascending id order."""
        return self._hom.get((x, y), ())

    def compose(self, f: int, g: int) -> int:
        return self.composition[(f, g)]

    def composable_pairs(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self.composition))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteCategory):
            return NotImplemented
        return (
            self.n_objects == other.n_objects
            and self.src == other.src
            and self.tgt == other.tgt
            and self.identity == other.identity
            and dict(self.composition) == dict(other.composition)
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"FiniteCategory(objects={self.n_objects}, morphisms={self.n_morphisms})"


@dataclass(frozen=True, eq=False)
class Functor:
    source: FiniteCategory
    target: FiniteCategory
    object_map: tuple[int, ...]
    morphism_map: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "object_map", tuple(self.object_map))
        object.__setattr__(self, "morphism_map", tuple(self.morphism_map))
        if len(self.object_map) != self.source.n_objects:
            raise MalformedError("object map has wrong length")
        if len(self.morphism_map) != self.source.n_morphisms:
            raise MalformedError("morphism map has wrong length")
        if any(not 0 <= x < self.target.n_objects for x in self.object_map):
            raise MalformedError("object map leaves the target")
        if any(not 0 <= m < self.target.n_morphisms for m in self.morphism_map):
            raise MalformedError("morphism map leaves the target")

    def __call__(self, f: int) -> int:
        return self.morphism_map[f]

    def validate(self) -> ValidationReport:
        C, D, ob, mor = self.source, self.target, self.object_map, self.morphism_map
        rep = ReportBuilder()
        for f in range(C.n_morphisms):
            if D.src[mor[f]] != ob[C.src[f]] or D.tgt[mor[f]] != ob[C.tgt[f]]:
                rep.add("functor-typing", (f,), f"image of {f} has wrong endpoints")
        for x in C.objects:
            if mor[C.identity[x]] != D.identity[ob[x]]:
                rep.add("functor-identity", (x,), f"identity of {x} not preserved")
        if rep:
            return rep.build()
        for (f, g), h in sorted(C.composition.items()):
            if D.compose(mor[f], mor[g]) != mor[h]:
                rep.add("functor-composition", (f, g), f"F({f} o {g}) != F({f}) o F({g})")
        return rep.build()

    def is_injective(self) -> bool:
        return len(set(self.morphism_map)) == len(self.morphism_map) and len(set(self.object_map)) == len(
            self.object_map
        )

    def is_isomorphism(self) -> bool:
        return (
            self.validate().ok
            and self.is_injective()
            and self.source.n_morphisms == self.target.n_morphisms
            and self.source.n_objects == self.target.n_objects
        )

    def inverse(self) -> "Functor":
        if not self.is_isomorphism():
            raise ValueError("functor is not an isomorphism")
        ob = [0] * self.target.n_objects
        for x, y in enumerate(self.object_map):
            ob[y] = x
        mor = [0] * self.target.n_morphisms
        for f, g in enumerate(self.morphism_map):
            mor[g] = f
        return Functor(self.target, self.source, tuple(ob), tuple(mor))

    def image(self) -> frozenset[int]:
        return frozenset(self.morphism_map)


def identity_functor(C: FiniteCategory) -> Functor:
    return Functor(C, C, tuple(C.objects), tuple(range(C.n_morphisms)))


def validate_category(C: FiniteCategory) -> ValidationReport:
    """Report every typing, unit and associativity violation of ``C``."""
    rep = ReportBuilder()
    for x in C.objects:
        e = C.identity[x]
        if C.src[e] != x or C.tgt[e] != x:
            rep.add("identity-typing", (x, e), f"identity {e} of object {x} is not an endomorphism of {x}")
    ill_typed = set()
    for (f, g), h in sorted(C.composition.items()):
        if C.tgt[h] != C.tgt[f] or C.src[h] != C.src[g]:
            ill_typed.add((f, g))
            rep.add(
                "typing",
                (f, g),
                f"{f} o {g} = {h} is {C.src[h]}->{C.tgt[h]}, expected {C.src[g]}->{C.tgt[f]}",
            )
    for f in range(C.n_morphisms):
        left = C.composition.get((C.identity[C.tgt[f]], f))
        if left is not None and left != f:
            rep.add("left-unit", (f,), f"1 o {f} = {left}")
        right = C.composition.get((f, C.identity[C.src[f]]))
        if right is not None and right != f:
            rep.add("right-unit", (f,), f"{f} o 1 = {right}")
    into = {x: _into(C, x) for x in C.objects}
    for (f, g), fg in sorted(C.composition.items()):
        if (f, g) in ill_typed:
            continue
        for h in into[C.src[g]]:
            if (g, h) in ill_typed:
                continue
            gh = C.composition[(g, h)]
            lhs = C.composition.get((fg, h))
            rhs = C.composition.get((f, gh))
            if lhs is None or rhs is None:
                continue
            if lhs != rhs:
                rep.add("associativity", (f, g, h), f"({f} o {g}) o {h} = {lhs} but {f} o ({g} o {h}) = {rhs}")
    return rep.build()


def _into(C: FiniteCategory, x: int) -> list[int]:
    """All morphisms with target ``x``."""
    return [h for y in C.objects for h in C.hom(x, y)]


def is_groupoid(C: FiniteCategory) -> Optional[dict[int, int]]:
    """Two-sided inverse table if every morphism is invertible, else ``None``."""
    inverse: dict[int, int] = {}
    for f in range(C.n_morphisms):
        x, y = C.tgt[f], C.src[f]
        for g in C.hom(y, x):
            if C.compose(f, g) == C.identity[x] and C.compose(g, f) == C.identity[y]:
                inverse[f] = g
                break
        else:
            return None
    return inverse


def is_thin(C: FiniteCategory) -> bool:
    return all(len(C.hom(x, y)) <= 1 for x in C.objects for y in C.objects)


def from_monoid(table: Sequence[Sequence[int]], unit: int) -> FiniteCategory:
    """One-object category whose endomorphisms are the monoid elements.

    ``table[a][b]`` is the product ``a*b``, which becomes ``compose(a, b)``.
    Raises :class:`AxiomError` if the table is not associative and unital.
    """
    n = len(table)
    if n == 0 or any(len(row) != n for row in table):
        raise MalformedError("multiplication table must be square and non-empty")
    if not 0 <= unit < n:
        raise MalformedError("unit index out of range")
    compose = {(a, b): int(table[a][b]) for a in range(n) for b in range(n)}
    C = FiniteCategory(1, [0] * n, [0] * n, [unit], compose)
    report = validate_category(C)
    if not report.ok:
        raise AxiomError("table is not a monoid", report)
    return C


def from_group(table: Sequence[Sequence[int]], unit: int) -> FiniteCategory:
    C = from_monoid(table, unit)
    n = len(table)
    rep = ReportBuilder()
    for a in range(n):
        if len(set(table[a])) != n:
            rep.add("latin-square", (a,), f"row {a} repeats an entry")
        if len({table[b][a] for b in range(n)}) != n:
            rep.add("latin-square", (a,), f"column {a} repeats an entry")
    if rep:
        raise AxiomError("table is not a group", rep.build())
    return C


def from_preorder(n: int, relation: Iterable[tuple[int, int]]) -> FiniteCategory:
    """Thin category with one morphism in ``hom(x, y)`` for each related pair ``(x, y)``.

    Morphism ids follow the sorted order of the pairs.
    """
    pairs = sorted({(int(x), int(y)) for x, y in relation})
    rel = set(pairs)
    for x, y in pairs:
        if not (0 <= x < n and 0 <= y < n):
            raise MalformedError(f"pair {(x, y)} out of range")
    rep = ReportBuilder()
    for x in range(n):
        if (x, x) not in rel:
            rep.add("reflexivity", (x, x), f"({x},{x}) missing")
    for x, y in pairs:
        for z in range(n):
            if (y, z) in rel and (x, z) not in rel:
                rep.add("transitivity", (x, y, z), f"({x},{y}) and ({y},{z}) present but ({x},{z}) missing")
    if rep:
        raise AxiomError("relation is not a preorder", rep.build())
    index = {p: i for i, p in enumerate(pairs)}
    compose = {}
    for (x, y), f in index.items():
        for (y2, z), g in index.items():
            if y2 == y:
                compose[(f, g)] = index[(x, z)]
    return FiniteCategory(n, [y for _, y in pairs], [x for x, _ in pairs], [index[(x, x)] for x in range(n)], compose)


def subcategory(C: FiniteCategory, morphisms: Iterable[int]) -> Optional[Functor]:
    """Wide subcategory on ``morphisms`` (ascending ids re-indexed densely) with its inclusion."""
    keep = sorted(set(int(m) for m in morphisms))
    kept = set(keep)
    if any(not 0 <= m < C.n_morphisms for m in keep):
        raise MalformedError("subset contains an id that is not a morphism")
    if any(C.identity[x] not in kept for x in C.objects):
        return None
    for f, g in itertools.product(keep, repeat=2):
        if C.src[f] == C.tgt[g] and C.compose(f, g) not in kept:
            return None
    index = {m: i for i, m in enumerate(keep)}
    compose = {
        (index[f], index[g]): index[C.compose(f, g)]
        for f in keep
        for g in keep
        if C.src[f] == C.tgt[g]
    }
    sub = FiniteCategory(
        C.n_objects, [C.src[m] for m in keep], [C.tgt[m] for m in keep], [index[e] for e in C.identity], compose
    )
    return Functor(sub, C, tuple(C.objects), tuple(keep))


def wide_subcategory_check(C: FiniteCategory, morphisms: Iterable[int]) -> Optional[Functor]:
    """Inclusion functor if ``morphisms`` contains all identities and is closed under composition."""
    return subcategory(C, morphisms)


def find_isomorphism(C: FiniteCategory, D: FiniteCategory) -> Optional[Functor]:
    """Brute-force search for an isomorphism ``C -> D`` (small categories only)."""
    if C.n_objects != D.n_objects or C.n_morphisms != D.n_morphisms:
        return None
    hom_size_C = sorted(len(C.hom(x, y)) for x in C.objects for y in C.objects)
    hom_size_D = sorted(len(D.hom(x, y)) for x in D.objects for y in D.objects)
    if hom_size_C != hom_size_D:
        return None
    for perm in itertools.permutations(range(D.n_objects)):
        if any(len(C.hom(x, y)) != len(D.hom(perm[x], perm[y])) for x in C.objects for y in C.objects):
            continue
        found = _match_morphisms(C, D, perm)
        if found is not None:
            return Functor(C, D, perm, tuple(found))
    return None


def _match_morphisms(C: FiniteCategory, D: FiniteCategory, perm: tuple[int, ...]) -> Optional[list[int]]:
    m = C.n_morphisms
    mapping: list[int] = [-1] * m
    used = [False] * D.n_morphisms
    for x in C.objects:
        mapping[C.identity[x]] = D.identity[perm[x]]
        used[D.identity[perm[x]]] = True
    order = [f for f in range(m) if mapping[f] < 0]

    def consistent(f: int) -> bool:
        for g in range(m):
            if mapping[g] < 0:
                continue
            for a, b in ((f, g), (g, f)):
                if C.src[a] != C.tgt[b]:
                    continue
                h = C.compose(a, b)
                if mapping[h] >= 0 and D.compose(mapping[a], mapping[b]) != mapping[h]:
                    return False
        return True

    def search(k: int) -> bool:
        if k == len(order):
            return all(D.compose(mapping[a], mapping[b]) == mapping[h] for (a, b), h in C.composition.items())
        f = order[k]
        for cand in D.hom(perm[C.tgt[f]], perm[C.src[f]]):
            if used[cand]:
                continue
            mapping[f] = cand
            used[cand] = True
            if consistent(f) and search(k + 1):
                return True
            mapping[f] = -1
            used[cand] = False
        return False

    return mapping if search(0) else None
