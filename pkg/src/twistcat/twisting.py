"""Twisting systems between two finite categories on the same objects.

A twisting system ``R`` between ``B`` and ``A`` sends every composable pair
``(f, g)`` with ``f`` in ``hom_B(x, y)`` and ``g`` in ``hom_A(y, z)`` to a
triple ``(u, g', f')`` with ``g'`` in ``hom_A(x, u)`` and ``f'`` in
``hom_B(u, z)``. Read it as "``f o g`` rewritten as ``g' o f'``".
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterator, Mapping, Optional

from .category import FiniteCategory
from .errors import MalformedError, ReportBuilder, SearchSpaceError, ValidationReport

Entry = tuple[int, int, int]
Pair = tuple[int, int]
Triple = tuple[int, int, int]

DEFAULT_LIMIT = 10**8


def _freeze(mapping: Mapping) -> Mapping:
    return MappingProxyType({tuple(k): (tuple(v) if isinstance(v, (tuple, list)) else v) for k, v in mapping.items()})


def _check_same_objects(A: FiniteCategory, B: FiniteCategory) -> None:
    if A.n_objects != B.n_objects:
        raise MalformedError(f"object sets differ: {A.n_objects} vs {B.n_objects}")


def composable_pairs(A: FiniteCategory, B: FiniteCategory) -> list[Pair]:
    """All ``(f, g)`` with ``f`` in ``B``, ``g`` in ``A`` and ``src(f) == tgt(g)``, ascending."""
    return [(f, g) for f in range(B.n_morphisms) for g in range(A.n_morphisms) if B.src[f] == A.tgt[g]]


def nonempty_triples(A: FiniteCategory, B: FiniteCategory) -> list[Triple]:
    """Triples ``(x, y, z)`` where ``hom_B(x, y) x hom_A(y, z)`` is non-empty."""
    S = range(A.n_objects)
    return [(x, y, z) for x in S for y in S for z in S if B.hom(x, y) and A.hom(y, z)]


@dataclass(frozen=True, eq=False)
class TwistingSystem:
    A: FiniteCategory
    B: FiniteCategory
    entries: Mapping[Pair, Entry]

    def __post_init__(self) -> None:
        _check_same_objects(self.A, self.B)
        object.__setattr__(self, "entries", _freeze(self.entries))

    def __call__(self, f: int, g: int) -> Entry:
        return self.entries[(f, g)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TwistingSystem):
            return NotImplemented
        return self.A == other.A and self.B == other.B and dict(self.entries) == dict(other.entries)

    __hash__ = None  # type: ignore[assignment]

    def key(self) -> tuple:
        """Hashable canonical form of the entry table."""
        return tuple(sorted(self.entries.items()))


@dataclass(frozen=True, eq=False)
class SimpleTwisting:
    """A twisting system whose entries for each triple ``(x, y, z)`` share the summand ``bracket[x, y, z]``."""

    A: FiniteCategory
    B: FiniteCategory
    bracket: Mapping[Triple, int]
    tilde: Mapping[Pair, tuple[int, int]]

    def __post_init__(self) -> None:
        _check_same_objects(self.A, self.B)
        object.__setattr__(self, "bracket", _freeze(self.bracket))
        object.__setattr__(self, "tilde", _freeze(self.tilde))

    def to_twisting(self) -> TwistingSystem:
        entries = {}
        for (f, g), (gp, fp) in self.tilde.items():
            x, y, z = self.B.tgt[f], self.B.src[f], self.A.src[g]
            entries[(f, g)] = (self.bracket[(x, y, z)], gp, fp)
        return TwistingSystem(self.A, self.B, entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimpleTwisting):
            return NotImplemented
        return (
            self.A == other.A
            and self.B == other.B
            and dict(self.bracket) == dict(other.bracket)
            and dict(self.tilde) == dict(other.tilde)
        )

    __hash__ = None  # type: ignore[assignment]


@dataclass(frozen=True, eq=False)
class MatchedPair:
    """Left action ``left[f, g] = f |> g`` and right action ``right[f, g] = f <| g`` with their bracket."""

    A: FiniteCategory
    B: FiniteCategory
    bracket: Mapping[Triple, int]
    left: Mapping[Pair, int]
    right: Mapping[Pair, int]

    def __post_init__(self) -> None:
        _check_same_objects(self.A, self.B)
        for name in ("bracket", "left", "right"):
            object.__setattr__(self, name, _freeze(getattr(self, name)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MatchedPair):
            return NotImplemented
        return (
            self.A == other.A
            and self.B == other.B
            and dict(self.bracket) == dict(other.bracket)
            and dict(self.left) == dict(other.left)
            and dict(self.right) == dict(other.right)
        )

    __hash__ = None  # type: ignore[assignment]

    def to_twisting(self) -> TwistingSystem:
        return matched_pair_to_twisting(self).to_twisting()


def validate_twisting_system(R: TwistingSystem) -> ValidationReport:
    """Check entry typing, then the four compatibility diagrams element-wise.

    D1: ``R(f o f', g) = (v, g2, f2 o f1)`` where ``(u, g1, f1) = R(f', g)`` and ``(v, g2, f2) = R(f, g1)``.
    D2: ``R(f, g o g') = (w, g1 o g2, f2)`` where ``(u, g1, f1) = R(f, g)`` and ``(w, g2, f2) = R(f1, g')``.
    D3: ``R(1_x, g) = (y, g, 1_y)``.  D4: ``R(f, 1_y) = (x, 1_x, f)``.
    """
    A, B, E = R.A, R.B, R.entries
    rep = ReportBuilder()
    pairs = composable_pairs(A, B)
    expected = set(pairs)
    for f, g in pairs:
        if (f, g) not in E:
            rep.add("entry-missing", (f, g), f"no entry for composable pair ({f},{g})")
            continue
        u, gp, fp = E[(f, g)]
        x, z = B.tgt[f], A.src[g]
        ok = 0 <= u < A.n_objects and 0 <= gp < A.n_morphisms and 0 <= fp < B.n_morphisms
        if not ok or gp not in A.hom(x, u) or fp not in B.hom(u, z):
            rep.add("entry-typing", (f, g), f"R({f},{g}) = {(u, gp, fp)} is not in A({x},{u}) x B({u},{z})")
    for key in E:
        if key not in expected:
            rep.add("entry-extra", tuple(key), f"entry {tuple(key)} is not a composable pair")
    if rep:
        return rep.build()

    b_after = _after(B)
    a_before = _before(A)
    for (fp_, g), (u, g1, f1) in sorted(E.items()):
        for f in b_after[B.tgt[fp_]]:
            v, g2, f2 = E[(f, g1)]
            want = (v, g2, B.compose(f2, f1))
            got = E[(B.compose(f, fp_), g)]
            if got != want:
                rep.add("D1", (f, fp_, g), f"R({f} o {fp_}, {g}) = {got}, diagram gives {want}")
    for (f, g), (u, g1, f1) in sorted(E.items()):
        for gq in a_before[A.src[g]]:
            w, g2, f2 = E[(f1, gq)]
            want = (w, A.compose(g1, g2), f2)
            got = E[(f, A.compose(g, gq))]
            if got != want:
                rep.add("D2", (f, g, gq), f"R({f}, {g} o {gq}) = {got}, diagram gives {want}")
    for g in range(A.n_morphisms):
        x, y = A.tgt[g], A.src[g]
        want = (y, g, B.identity[y])
        got = E[(B.identity[x], g)]
        if got != want:
            rep.add("D3", (B.identity[x], g), f"R(1_{x}, {g}) = {got}, expected {want}")
    for f in range(B.n_morphisms):
        x, y = B.tgt[f], B.src[f]
        want = (x, A.identity[x], f)
        got = E[(f, A.identity[y])]
        if got != want:
            rep.add("D4", (f, A.identity[y]), f"R({f}, 1_{y}) = {got}, expected {want}")
    return rep.build()


def _after(B: FiniteCategory) -> dict[int, list[int]]:
    """``after[y]``: morphisms of ``B`` with source ``y``."""
    out: dict[int, list[int]] = {y: [] for y in B.objects}
    for f in range(B.n_morphisms):
        out[B.src[f]].append(f)
    return out


def _before(A: FiniteCategory) -> dict[int, list[int]]:
    """``before[z]``: morphisms of ``A`` with target ``z``."""
    out: dict[int, list[int]] = {z: [] for z in A.objects}
    for g in range(A.n_morphisms):
        out[A.tgt[g]].append(g)
    return out


def extract_simple(R: TwistingSystem) -> Optional[SimpleTwisting]:
    """Return the simple form of ``R`` if every triple's entries use one summand."""
    A, B = R.A, R.B
    bracket: dict[Triple, int] = {}
    tilde: dict[Pair, tuple[int, int]] = {}
    for (f, g), (u, gp, fp) in sorted(R.entries.items()):
        t = (B.tgt[f], B.src[f], A.src[g])
        if bracket.setdefault(t, u) != u:
            return None
        tilde[(f, g)] = (gp, fp)
    for (x, y, z), u in bracket.items():
        if not (A.hom(x, u) and B.hom(u, z)):
            return None
    return SimpleTwisting(A, B, bracket, tilde)


def matched_pair_to_twisting(mp: MatchedPair) -> SimpleTwisting:
    tilde = {k: (mp.left[k], mp.right[k]) for k in mp.left}
    return SimpleTwisting(mp.A, mp.B, mp.bracket, tilde)


def twisting_to_matched_pair(st: SimpleTwisting) -> MatchedPair:
    left = {k: gp for k, (gp, _) in st.tilde.items()}
    right = {k: fp for k, (_, fp) in st.tilde.items()}
    return MatchedPair(st.A, st.B, st.bracket, left, right)


def validate_matched_pair(mp: MatchedPair) -> ValidationReport:
    """Check typing and the five matched-pair conditions over Set.

    Tags are ``"(i)"`` .. ``"(v)"`` optionally followed by ``bracket``,
    ``left`` or ``right`` naming the equation that fails.
    """
    A, B, br, L, Rt = mp.A, mp.B, mp.bracket, mp.left, mp.right
    rep = ReportBuilder()
    triples = nonempty_triples(A, B)
    tset = set(triples)
    for t in triples:
        if t not in br:
            rep.add("typing", t, f"bracket undefined on {t}")
    for t in br:
        if tuple(t) not in tset:
            rep.add("typing", tuple(t), f"bracket defined off the non-empty triples at {tuple(t)}")
    pairs = composable_pairs(A, B)
    pset = set(pairs)
    for k in set(L) | set(Rt):
        if k not in pset:
            rep.add("typing", tuple(k), f"action defined on non-composable pair {tuple(k)}")
    if rep:
        return rep.build()
    for (x, y, z) in triples:
        u = br[(x, y, z)]
        if not (0 <= u < A.n_objects and A.hom(x, u) and B.hom(u, z)):
            rep.add("(i)", (x, y, z), f"A({x},{u}) x B({u},{z}) is empty although B({x},{y}) x A({y},{z}) is not")
    for f, g in pairs:
        if (f, g) not in L or (f, g) not in Rt:
            rep.add("typing", (f, g), f"action undefined on ({f},{g})")
            continue
        x, y, z = B.tgt[f], B.src[f], A.src[g]
        u = br[(x, y, z)]
        if L[(f, g)] not in A.hom(x, u):
            rep.add("typing", (f, g), f"{f} |> {g} = {L[(f, g)]} is not in A({x},{u})")
        if Rt[(f, g)] not in B.hom(u, z):
            rep.add("typing", (f, g), f"{f} <| {g} = {Rt[(f, g)]} is not in B({u},{z})")
    if rep:
        return rep.build()

    b_after, a_before = _after(B), _before(A)
    for fp_, g in pairs:
        y, z, t = B.tgt[fp_], B.src[fp_], A.src[g]
        yzt = br[(y, z, t)]
        for f in b_after[y]:
            x = B.tgt[f]
            if br[(x, y, yzt)] != br[(x, z, t)]:
                rep.add("(ii) bracket", (x, y, z, t), f"|xy|yzt|| != |xzt| at x,y,z,t={x},{y},{z},{t}")
            ffp = B.compose(f, fp_)
            lhs = L[(ffp, g)]
            rhs = L[(f, L[(fp_, g)])]
            if lhs != rhs:
                rep.add("(ii) left", (f, fp_, g), f"({f} o {fp_}) |> {g} = {lhs} but {f} |> ({fp_} |> {g}) = {rhs}")
            lhs = Rt[(ffp, g)]
            rhs = B.compose(Rt[(f, L[(fp_, g)])], Rt[(fp_, g)])
            if lhs != rhs:
                rep.add("(ii) right", (f, fp_, g), f"({f} o {fp_}) <| {g} = {lhs}, expected {rhs}")
    for f, g in pairs:
        x, y, z = B.tgt[f], B.src[f], A.src[g]
        xyz = br[(x, y, z)]
        for gq in a_before[z]:
            t = A.src[gq]
            if br[(xyz, z, t)] != br[(x, y, t)]:
                rep.add("(iii) bracket", (x, y, z, t), f"||xyz|zt| != |xyt| at x,y,z,t={x},{y},{z},{t}")
            ggq = A.compose(g, gq)
            lhs = Rt[(f, ggq)]
            rhs = Rt[(Rt[(f, g)], gq)]
            if lhs != rhs:
                rep.add("(iii) right", (f, g, gq), f"{f} <| ({g} o {gq}) = {lhs} but ({f} <| {g}) <| {gq} = {rhs}")
            lhs = L[(f, ggq)]
            rhs = A.compose(L[(f, g)], L[(Rt[(f, g)], gq)])
            if lhs != rhs:
                rep.add("(iii) left", (f, g, gq), f"{f} |> ({g} o {gq}) = {lhs}, expected {rhs}")
    for g in range(A.n_morphisms):
        x, y = A.tgt[g], A.src[g]
        one = B.identity[x]
        if br[(x, x, y)] != y:
            rep.add("(iv) bracket", (x, x, y), f"|xxy| != y at x,y={x},{y}")
        if L[(one, g)] != g:
            rep.add("(iv) left", (one, g), f"1 |> {g} = {L[(one, g)]}")
        if Rt[(one, g)] != B.identity[y]:
            rep.add("(iv) right", (one, g), f"1 <| {g} = {Rt[(one, g)]}, expected 1_{y}")
    for f in range(B.n_morphisms):
        x, y = B.tgt[f], B.src[f]
        one = A.identity[y]
        if br[(x, y, y)] != x:
            rep.add("(v) bracket", (x, y, y), f"|xyy| != x at x,y={x},{y}")
        if L[(f, one)] != A.identity[x]:
            rep.add("(v) left", (f, one), f"{f} |> 1 = {L[(f, one)]}, expected 1_{x}")
        if Rt[(f, one)] != f:
            rep.add("(v) right", (f, one), f"{f} <| 1 = {Rt[(f, one)]}")
    return rep.build()


class _Search:
    """Backtracking over entry tables with D3/D4 seeding and D1/D2 forward propagation.

    D1 and D2 are functional: two known entries determine a third. Whenever an
    entry is assigned, every instance in which it is an input and whose other
    input is known either forces the output entry or detects a conflict.
    """

    def __init__(self, A: FiniteCategory, B: FiniteCategory):
        _check_same_objects(A, B)
        self.A, self.B = A, B
        self.vars = composable_pairs(A, B)
        self.domain: dict[Pair, list[Entry]] = {}
        for f, g in self.vars:
            x, z = B.tgt[f], A.src[g]
            self.domain[(f, g)] = [
                (u, gp, fp) for u in A.objects for gp in A.hom(x, u) for fp in B.hom(u, z)
            ]
        self.b_after = _after(B)
        self.a_before = _before(A)
        self.value: dict[Pair, Entry] = {}
        self.trail: list[Pair] = []
        self.by_gp: dict[int, list[Pair]] = {g: [] for g in range(A.n_morphisms)}
        self.by_fp: dict[int, list[Pair]] = {f: [] for f in range(B.n_morphisms)}
        self.consistent = self._seed()
        self.base = len(self.trail)

    def _seed(self) -> bool:
        A, B = self.A, self.B
        forced: list[tuple[Pair, Entry]] = []
        for g in range(A.n_morphisms):
            x, y = A.tgt[g], A.src[g]
            forced.append(((B.identity[x], g), (y, g, B.identity[y])))
        for f in range(B.n_morphisms):
            x, y = B.tgt[f], B.src[f]
            forced.append(((f, A.identity[y]), (x, A.identity[x], f)))
        return all(self.assign(var, val) for var, val in forced)

    def bound(self) -> int:
        return math.prod(len(self.domain[v]) for v in self.vars if v not in self.value)

    def assign(self, var: Pair, val: Entry) -> bool:
        queue = [(var, val)]
        while queue:
            p, v = queue.pop()
            cur = self.value.get(p)
            if cur is not None:
                if cur != v:
                    return False
                continue
            self.value[p] = v
            self.trail.append(p)
            self.by_gp[v[1]].append(p)
            self.by_fp[v[2]].append(p)
            queue.extend(self._implied(p, v))
        return True

    def _implied(self, p: Pair, val: Entry) -> list[tuple[Pair, Entry]]:
        A, B, value = self.A, self.B, self.value
        a, b = p
        u, g1, f1 = val
        out = []
        # D1, p = (f', g) as first input
        for f in self.b_after[B.tgt[a]]:
            q = value.get((f, g1))
            if q is not None:
                v, g2, f2 = q
                out.append(((B.compose(f, a), b), (v, g2, B.compose(f2, f1))))
        # D1, p = (f, g1) as second input
        for fp_, g in self.by_gp[b]:
            _, _, f1q = value[(fp_, g)]
            out.append(((B.compose(a, fp_), g), (u, g1, B.compose(f1, f1q))))
        # D2, p = (f, g) as first input
        for gq in self.a_before[A.src[b]]:
            q = value.get((f1, gq))
            if q is not None:
                w, g2, f2 = q
                out.append(((a, A.compose(b, gq)), (w, A.compose(g1, g2), f2)))
        # D2, p = (f1, g') as second input
        for f, g in self.by_fp[a]:
            _, g1q, _ = value[(f, g)]
            out.append(((f, A.compose(g, b)), (u, A.compose(g1q, g1), f1)))
        return out

    def undo(self, mark: int) -> None:
        while len(self.trail) > mark:
            p = self.trail.pop()
            v = self.value.pop(p)
            self.by_gp[v[1]].pop()
            self.by_fp[v[2]].pop()

    def solutions(self, rng: Optional[random.Random] = None) -> Iterator[dict[Pair, Entry]]:
        if not self.consistent:
            return
        yield from self._dfs(0, rng)

    def _dfs(self, start: int, rng: Optional[random.Random]) -> Iterator[dict[Pair, Entry]]:
        i = start
        while i < len(self.vars) and self.vars[i] in self.value:
            i += 1
        if i == len(self.vars):
            yield dict(self.value)
            return
        var = self.vars[i]
        candidates = list(self.domain[var])
        if rng is not None:
            rng.shuffle(candidates)
        for val in candidates:
            mark = len(self.trail)
            if self.assign(var, val):
                yield from self._dfs(i + 1, rng)
            self.undo(mark)


def twisting_search_bound(A: FiniteCategory, B: FiniteCategory) -> int:
    """Product of candidate-set sizes of the entries not forced by D3/D4 (or their propagation)."""
    s = _Search(A, B)
    return s.bound() if s.consistent else 0


def iter_twisting_systems(A: FiniteCategory, B: FiniteCategory, limit: Optional[int] = DEFAULT_LIMIT) -> Iterator[TwistingSystem]:
    s = _Search(A, B)
    if limit is not None and s.consistent:
        bound = s.bound()
        if bound > limit:
            raise SearchSpaceError(bound, limit)
    for entries in s.solutions():
        yield TwistingSystem(A, B, entries)


def enumerate_twisting_systems(
    A: FiniteCategory, B: FiniteCategory, limit: Optional[int] = DEFAULT_LIMIT
) -> list[TwistingSystem]:
    """Every twisting system between ``B`` and ``A``, in lexicographic order of entry tables.

    ``limit`` caps the product of candidate-set sizes left after the D3/D4
    entries are fixed; ``None`` disables the guard.
    """
    return list(iter_twisting_systems(A, B, limit))


def sample_twisting_system(A: FiniteCategory, B: FiniteCategory, rng: random.Random) -> Optional[TwistingSystem]:
    """First system found by a randomised depth-first search, or ``None`` if there is none."""
    s = _Search(A, B)
    for entries in s.solutions(rng):
        return TwistingSystem(A, B, entries)
    return None
