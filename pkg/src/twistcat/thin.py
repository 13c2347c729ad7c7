"""Twisting systems between thin categories, described by a bracket function on triples.

For thin ``A`` and ``B`` a twisting system is the same thing as a function
``|xyz|`` on the set ``T`` of triples with ``hom_B(x, y)`` and
``hom_A(y, z)`` both non-empty, subject to five conditions:

(i)   ``hom_A(x, |xyz|)`` and ``hom_B(|xyz|, z)`` are non-empty;
(ii)  ``|x y |yzt|| = |xzt|`` whenever both sides are defined;
(iii) ``||xyz| z t| = |xyt|`` whenever both sides are defined;
(iv)  ``|xxy| = y``;
(v)   ``|xyy| = x``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from types import MappingProxyType
from typing import Collection, Iterator, Mapping, NamedTuple, Optional

from .category import FiniteCategory, Functor, is_thin
from .errors import AxiomError, MalformedError, NotThinError, ReportBuilder, SearchSpaceError, ValidationReport
from .product import twisted_tensor_product
from .twisting import DEFAULT_LIMIT, TwistingSystem, extract_simple, nonempty_triples

Triple = tuple[int, int, int]


@dataclass(frozen=True, eq=False)
class BracketFunction:
    T: tuple[Triple, ...]
    values: Mapping[Triple, int]

    def __post_init__(self) -> None:
        T = tuple(sorted(tuple(t) for t in self.T))
        values = {tuple(k): int(v) for k, v in self.values.items()}
        if set(values) != set(T):
            extra = sorted(set(values) - set(T))
            missing = sorted(set(T) - set(values))
            raise MalformedError(f"bracket must be defined exactly on T (extra {extra}, missing {missing})")
        object.__setattr__(self, "T", T)
        object.__setattr__(self, "values", MappingProxyType(values))

    def __call__(self, x: int, y: int, z: int) -> int:
        return self.values[(x, y, z)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BracketFunction):
            return NotImplemented
        return self.T == other.T and dict(self.values) == dict(other.values)

    __hash__ = None  # type: ignore[assignment]

    def key(self) -> tuple[int, ...]:
        return tuple(self.values[t] for t in self.T)


def _require_thin(A: FiniteCategory, B: FiniteCategory) -> None:
    if A.n_objects != B.n_objects:
        raise MalformedError("object sets differ")
    if not is_thin(A) or not is_thin(B):
        raise NotThinError("both categories must be thin")


def compute_T(A: FiniteCategory, B: FiniteCategory) -> tuple[Triple, ...]:
    """Triples ``(x, y, z)`` with ``hom_B(x, y)`` and ``hom_A(y, z)`` non-empty, ascending."""
    _require_thin(A, B)
    return tuple(nonempty_triples(A, B))


def validate_bracket(A: FiniteCategory, B: FiniteCategory, bf: BracketFunction) -> ValidationReport:
    """Check conditions (i)-(v); tags are ``"(i)"`` .. ``"(v)"``."""
    T = compute_T(A, B)
    if bf.T != T:
        raise MalformedError("bracket domain differs from the non-empty triples of the given categories")
    v = bf.values
    n = A.n_objects
    rep = ReportBuilder()
    for x, y, z in T:
        u = v[(x, y, z)]
        if not (0 <= u < n and A.hom(x, u) and B.hom(u, z)):
            rep.add("(i)", (x, y, z), f"|{x}{y}{z}| = {u} but A({x},{u}) x B({u},{z}) is empty")
    if rep:
        return rep.build()
    for y, z, t in T:
        w = v[(y, z, t)]
        for x in range(n):
            lhs = v.get((x, y, w))
            rhs = v.get((x, z, t))
            if lhs is not None and rhs is not None and lhs != rhs:
                rep.add("(ii)", (x, y, z, t), f"|x y |yzt|| = {lhs} but |xzt| = {rhs} at x,y,z,t={x},{y},{z},{t}")
    for x, y, z in T:
        u = v[(x, y, z)]
        for t in range(n):
            lhs = v.get((u, z, t))
            rhs = v.get((x, y, t))
            if lhs is not None and rhs is not None and lhs != rhs:
                rep.add("(iii)", (x, y, z, t), f"||xyz| z t| = {lhs} but |xyt| = {rhs} at x,y,z,t={x},{y},{z},{t}")
    for x, y, z in T:
        if x == y and v[(x, y, z)] != z:
            rep.add("(iv)", (x, y, z), f"|{x}{x}{z}| = {v[(x, y, z)]}, expected {z}")
        if y == z and v[(x, y, z)] != x:
            rep.add("(v)", (x, y, z), f"|{x}{y}{y}| = {v[(x, y, z)]}, expected {x}")
    return rep.build()


class _BracketSearch:
    """Backtracking over bracket values with (iv)/(v) seeding.

    Conditions (ii) and (iii) become equalities between two unknowns once a
    third value is fixed; such equalities are watched and propagated.
    """

    def __init__(self, A: FiniteCategory, B: FiniteCategory):
        self.A, self.B = A, B
        self.T = compute_T(A, B)
        self.tset = set(self.T)
        n = A.n_objects
        self.n = n
        self.domain = {(x, y, z): [u for u in range(n) if A.hom(x, u) and B.hom(u, z)] for x, y, z in self.T}
        self.b_into = {y: [x for x in range(n) if B.hom(x, y)] for y in range(n)}
        self.value: dict[Triple, int] = {}
        self.watch: dict[Triple, list[Triple]] = {t: [] for t in self.T}
        self.trail: list[tuple] = []
        self.consistent = self._seed()

    def _seed(self) -> bool:
        for x, y, z in self.T:
            if x == y and not self.assign((x, y, z), z):
                return False
            if y == z and not self.assign((x, y, z), x):
                return False
        return True

    def bound(self) -> int:
        return math.prod(len(self.domain[t]) for t in self.T if t not in self.value)

    def assign(self, var: Triple, val: int) -> bool:
        queue: list[tuple[Triple, int]] = [(var, val)]
        while queue:
            p, u = queue.pop()
            cur = self.value.get(p)
            if cur is not None:
                if cur != u:
                    return False
                continue
            if u not in self.domain[p]:
                return False
            self.value[p] = u
            self.trail.append(("a", p))
            for q in self.watch[p]:
                queue.append((q, u))
            for a, b in self._equalities(p, u):
                va, vb = self.value.get(a), self.value.get(b)
                if va is not None and vb is not None:
                    if va != vb:
                        return False
                elif va is not None:
                    queue.append((b, va))
                elif vb is not None:
                    queue.append((a, vb))
                else:
                    self.watch[a].append(b)
                    self.watch[b].append(a)
                    self.trail.append(("w", a, b))
        return True

    def _equalities(self, p: Triple, u: int) -> Iterator[tuple[Triple, Triple]]:
        y, z, t = p
        # (ii) with p = (y, z, t): |x y u| = |x z t|
        for x in self.b_into[y]:
            a, b = (x, y, u), (x, z, t)
            if a in self.tset and b in self.tset and a != b:
                yield a, b
        # (iii) with p = (x, y, z): |u z t| = |x y t|
        x, y, z = p
        for t in range(self.n):
            a, b = (u, z, t), (x, y, t)
            if a in self.tset and b in self.tset and a != b:
                yield a, b

    def undo(self, mark: int) -> None:
        while len(self.trail) > mark:
            item = self.trail.pop()
            if item[0] == "a":
                del self.value[item[1]]
            else:
                _, a, b = item
                self.watch[a].pop()
                self.watch[b].pop()

    def solutions(self) -> Iterator[dict[Triple, int]]:
        if self.consistent:
            yield from self._dfs(0)

    def _dfs(self, i: int) -> Iterator[dict[Triple, int]]:
        while i < len(self.T) and self.T[i] in self.value:
            i += 1
        if i == len(self.T):
            yield dict(self.value)
            return
        var = self.T[i]
        for u in self.domain[var]:
            mark = len(self.trail)
            if self.assign(var, u):
                yield from self._dfs(i + 1)
            self.undo(mark)


def enumerate_brackets(
    A: FiniteCategory, B: FiniteCategory, limit: Optional[int] = DEFAULT_LIMIT
) -> list[BracketFunction]:
    """All valid bracket functions, ordered lexicographically by their values along ascending ``T``."""
    s = _BracketSearch(A, B)
    if limit is not None and s.consistent and s.bound() > limit:
        raise SearchSpaceError(s.bound(), limit)
    return [BracketFunction(s.T, sol) for sol in s.solutions()]


def bracket_to_twisting(A: FiniteCategory, B: FiniteCategory, bf: BracketFunction) -> TwistingSystem:
    """``R(f, g) = (|xyz|, the arrow of A(x, |xyz|), the arrow of B(|xyz|, z))``."""
    _require_thin(A, B)
    entries = {}
    for f in range(B.n_morphisms):
        for g in range(A.n_morphisms):
            if B.src[f] != A.tgt[g]:
                continue
            x, y, z = B.tgt[f], B.src[f], A.src[g]
            u = bf(x, y, z)
            gs, fs = A.hom(x, u), B.hom(u, z)
            if not gs or not fs:
                rep = ReportBuilder()
                rep.add("(i)", (x, y, z), f"A({x},{u}) x B({u},{z}) is empty")
                raise AxiomError("bracket violates non-emptiness", rep.build())
            entries[(f, g)] = (u, gs[0], fs[0])
    return TwistingSystem(A, B, entries)


def twisting_to_bracket(R: TwistingSystem) -> BracketFunction:
    _require_thin(R.A, R.B)
    st = extract_simple(R)
    if st is None:
        raise MalformedError("twisting system between thin categories is not simple; is it valid?")
    return BracketFunction(compute_T(R.A, R.B), st.bracket)


class CSTResult(NamedTuple):
    """``iso`` maps onto the twisted tensor product of ``bracket_to_twisting(A, B, bf)``.

    ``labels[m] = (x, y, u)``: morphism ``m`` is ``u`` viewed in the hom-set ``(x, y)``.
    """

    category: FiniteCategory
    iso: Functor
    labels: tuple[Triple, ...]


def construct_CST(A: FiniteCategory, B: FiniteCategory, bf: BracketFunction) -> CSTResult:
    """Category on the objects with ``hom(x, y) = {u : A(x, u) and B(u, y) non-empty}`` and ``u o v = |u y v|``."""
    _require_thin(A, B)
    n = A.n_objects
    labels = [(x, y, u) for x in range(n) for y in range(n) for u in range(n) if A.hom(x, u) and B.hom(u, y)]
    index = {lab: m for m, lab in enumerate(labels)}
    compose = {}
    for (x, y, u), m in index.items():
        for (y2, z, w), k in index.items():
            if y2 == y:
                compose[(m, k)] = index[(x, z, bf(u, y, w))]
    C = FiniteCategory(n, [y for _, y, _ in labels], [x for x, _, _ in labels], [index[(x, x, x)] for x in range(n)], compose)
    P = twisted_tensor_product(bracket_to_twisting(A, B, bf))
    pidx = P.index()
    mor = tuple(pidx[(u, A.hom(x, u)[0], B.hom(u, y)[0])] for x, y, u in labels)
    return CSTResult(C, Functor(C, P.category, tuple(range(n)), mor), tuple(labels))


def default_poset_bracket(A: FiniteCategory, B: FiniteCategory) -> BracketFunction:
    """``|xyz| = z`` if ``y != z`` else ``x``; valid when both orders coincide."""
    T = compute_T(A, B)
    return BracketFunction(T, {(x, y, z): (z if y != z else x) for x, y, z in T})


def validate_poset_bracket(
    leq: Collection[tuple[int, int]], preceq: Collection[tuple[int, int]], n: int, bf: BracketFunction
) -> ValidationReport:
    """Order-theoretic form of the bracket conditions for ``A = (S, leq)`` and ``B = (S, preceq)``.

    Pairs ``(x, y)`` in a relation mean ``x <= y``. Written directly in terms
    of the orders, independently of the hom-set formulation above.
    """
    le, pr = set(leq), set(preceq)
    v = bf.values
    rep = ReportBuilder()
    S = range(n)
    for x in S:
        for y in S:
            for z in S:
                if (x, y) in pr and (y, z) in le:
                    u = v.get((x, y, z))
                    if u is None or (x, u) not in le or (u, z) not in pr:
                        rep.add("(i)", (x, y, z), f"x <= |xyz| <= z fails at {(x, y, z)}")
    if rep:
        return rep.build()
    for x in S:
        for y in S:
            for z in S:
                for t in S:
                    if (x, y) in pr and (y, z) in pr and (z, t) in le:
                        if v[(x, y, v[(y, z, t)])] != v[(x, z, t)]:
                            rep.add("(ii)", (x, y, z, t), "|xy|yzt|| != |xzt|")
                    if (x, y) in pr and (y, z) in le and (z, t) in le:
                        if v[(v[(x, y, z)], z, t)] != v[(x, y, t)]:
                            rep.add("(iii)", (x, y, z, t), "||xyz|zt| != |xyt|")
    for x in S:
        for y in S:
            if (x, y) in le and v[(x, x, y)] != y:
                rep.add("(iv)", (x, x, y), "|xxy| != y")
            if (x, y) in pr and v[(x, y, y)] != x:
                rep.add("(v)", (x, y, y), "|xyy| != x")
    return rep.build()
