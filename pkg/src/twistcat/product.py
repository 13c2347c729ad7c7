"""Twisted tensor products, factorizations and the twisting systems they induce."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple, Optional, Union

from .category import FiniteCategory, Functor, is_groupoid, validate_category, wide_subcategory_check
from .errors import AxiomError, FactorizationError, NotGroupoidError, ReportBuilder
from .twisting import MatchedPair, TwistingSystem, nonempty_triples, validate_matched_pair, validate_twisting_system

Tag = tuple[int, int, int]
Part = Union[Functor, Iterable[int]]


class TwistedProduct(NamedTuple):
    """``tagging[c] = (u, g, f)``: product morphism ``c`` is the pair ``g o f`` through ``u``."""

    category: FiniteCategory
    alpha: Functor
    beta: Functor
    tagging: tuple[Tag, ...]

    def index(self) -> dict[Tag, int]:
        return {t: c for c, t in enumerate(self.tagging)}


def twisted_tensor_product(R: TwistingSystem, *, check: bool = True) -> TwistedProduct:
    """Build ``A (x)_R B``.

    Morphisms are triples ``(u, g, f)`` with ``g`` in ``hom_A(x, u)`` and ``f``
    in ``hom_B(u, y)``, numbered in lexicographic order. Composition is
    ``(g, f) o (g', f') = (g o g1, f1 o f')`` where ``(w, g1, f1) = R(f, g')``.
    The input is validated first and the result is re-validated as a category.
    """
    A, B = R.A, R.B
    if check:
        report = validate_twisting_system(R)
        if not report.ok:
            raise AxiomError("not a twisting system", report)
    tags = sorted((A.src[g], g, f) for g in range(A.n_morphisms) for f in range(B.n_morphisms) if A.src[g] == B.tgt[f])
    index = {t: c for c, t in enumerate(tags)}
    src = [B.src[f] for _, _, f in tags]
    tgt = [A.tgt[g] for _, g, _ in tags]
    by_tgt: dict[int, list[int]] = {x: [] for x in A.objects}
    for c, x in enumerate(tgt):
        by_tgt[x].append(c)
    compose = {}
    for c, (_, g, f) in enumerate(tags):
        for d in by_tgt[B.src[f]]:
            _, gq, fq = tags[d]
            w, g1, f1 = R(f, gq)
            compose[(c, d)] = index[(w, A.compose(g, g1), B.compose(f1, fq))]
    identity = [index[(x, A.identity[x], B.identity[x])] for x in A.objects]
    C = FiniteCategory(A.n_objects, src, tgt, identity, compose)
    if check:
        report = validate_category(C)
        if not report.ok:
            raise AxiomError("product is not a category", report)
    alpha = Functor(A, C, tuple(A.objects), tuple(index[(A.src[g], g, B.identity[A.src[g]])] for g in range(A.n_morphisms)))
    beta = Functor(B, C, tuple(B.objects), tuple(index[(B.tgt[f], A.identity[B.tgt[f]], f)] for f in range(B.n_morphisms)))
    return TwistedProduct(C, alpha, beta, tuple(tags))


@dataclass(frozen=True)
class Factorization:
    alpha: Functor
    beta: Functor
    phi: Mapping[Tag, int]
    psi: Mapping[int, Tag]


def as_embedding(C: FiniteCategory, part: Part) -> Functor:
    """Turn a morphism subset into its inclusion, or check that a functor is a wide embedding into ``C``."""
    if isinstance(part, Functor):
        if part.target != C:
            raise FactorizationError("embedding does not land in the given category")
        if part.object_map != tuple(C.objects) or not part.is_injective() or not part.validate().ok:
            raise FactorizationError("functor is not a wide embedding")
        return part
    inc = wide_subcategory_check(C, part)
    if inc is None:
        raise FactorizationError("subset is not a wide subcategory")
    return inc


def check_factorization(C: FiniteCategory, a_part: Part, b_part: Part) -> Optional[Factorization]:
    """Return ``phi`` and ``psi`` if ``(g, f) -> g o f`` is a bijection onto the morphisms of ``C``."""
    alpha, beta = as_embedding(C, a_part), as_embedding(C, b_part)
    A, B = alpha.source, beta.source
    phi: dict[Tag, int] = {}
    psi: dict[int, Tag] = {}
    for g in range(A.n_morphisms):
        u = A.src[g]
        for f in range(B.n_morphisms):
            if B.tgt[f] != u:
                continue
            c = C.compose(alpha(g), beta(f))
            if c in psi:
                return None
            phi[(u, g, f)] = c
            psi[c] = (u, g, f)
    if len(psi) != C.n_morphisms:
        return None
    return Factorization(alpha, beta, phi, psi)


def derive_twisting(C: FiniteCategory, a_part: Part, b_part: Part) -> TwistingSystem:
    """``R(f, g) = psi(beta(f) o alpha(g))``, expressed in the ids of the two factors."""
    fac = check_factorization(C, a_part, b_part)
    if fac is None:
        raise FactorizationError("composition does not induce a bijection")
    A, B = fac.alpha.source, fac.beta.source
    entries = {}
    for f in range(B.n_morphisms):
        for g in range(A.n_morphisms):
            if B.src[f] == A.tgt[g]:
                entries[(f, g)] = fac.psi[C.compose(fac.beta(f), fac.alpha(g))]
    R = TwistingSystem(A, B, entries)
    report = validate_twisting_system(R)
    if not report.ok:
        raise AxiomError("derived system fails the twisting diagrams", report)
    return R


def bicrossed_groupoid_inverse(mp: MatchedPair, morphism: tuple[int, int]) -> tuple[int, int]:
    """Inverse of ``(g, f)`` in the bicrossed product of two groupoids.

    ``g' = f^-1 |> g^-1`` and ``f' = (f <| g')^-1``.
    """
    inv_a, inv_b = is_groupoid(mp.A), is_groupoid(mp.B)
    if inv_a is None or inv_b is None:
        raise NotGroupoidError("both factors must be groupoids")
    g, f = morphism
    if mp.A.src[g] != mp.B.tgt[f]:
        raise FactorizationError(f"({g},{f}) is not a composable pair")
    gp = mp.left[(inv_b[f], inv_a[g])]
    fp = inv_b[mp.right[(f, gp)]]
    return gp, fp


def _monoid_copies(M: FiniteCategory, n: int) -> FiniteCategory:
    """``n`` disjoint copies of the one-object category ``M``; the copy of ``b`` at ``x`` has id ``x*|M| + b``."""
    m = M.n_morphisms
    compose = {(x * m + a, x * m + b): x * m + M.compose(a, b) for x in range(n) for a in range(m) for b in range(m)}
    objs = [x for x in range(n) for _ in range(m)]
    return FiniteCategory(n, objs, objs, [x * m + M.identity[0] for x in range(n)], compose)


def semidirect_matched_pair(A: FiniteCategory, M: FiniteCategory, act: Mapping[tuple[int, int], int]) -> MatchedPair:
    """Matched pair for a monoid ``M`` acting on the hom-sets of ``A``, with trivial right action.

    ``act[(b, g)]`` is ``b |> g``. Raises :class:`AxiomError` if the action is
    not a monoid action by functors fixing objects.
    """
    if M.n_objects != 1:
        raise FactorizationError("acting category must have exactly one object")
    rep = ReportBuilder()
    m = M.n_morphisms
    for b in range(m):
        for g in range(A.n_morphisms):
            h = act.get((b, g))
            if h is None or not 0 <= h < A.n_morphisms:
                rep.add("action-typing", (b, g), f"{b} |> {g} undefined or out of range")
            elif (A.src[h], A.tgt[h]) != (A.src[g], A.tgt[g]):
                rep.add("action-typing", (b, g), f"{b} |> {g} = {h} changes endpoints")
    if rep:
        raise AxiomError("invalid action", rep.build())
    one = M.identity[0]
    for g in range(A.n_morphisms):
        if act[(one, g)] != g:
            rep.add("action-unit", (one, g), f"1 |> {g} = {act[(one, g)]}")
        for b in range(m):
            for bq in range(m):
                if act[(M.compose(b, bq), g)] != act[(b, act[(bq, g)])]:
                    rep.add("action-composition", (b, bq, g), f"({b}{bq}) |> {g} != {b} |> ({bq} |> {g})")
    for b in range(m):
        for x in A.objects:
            e = A.identity[x]
            if act[(b, e)] != e:
                rep.add("action-identity", (b, e), f"{b} |> 1_{x} = {act[(b, e)]}")
        for (g, gq), h in sorted(A.composition.items()):
            if act[(b, h)] != A.compose(act[(b, g)], act[(b, gq)]):
                rep.add("action-distributive", (b, g, gq), f"{b} |> ({g} o {gq}) != ({b} |> {g}) o ({b} |> {gq})")
    if rep:
        raise AxiomError("invalid action", rep.build())
    n = A.n_objects
    B = _monoid_copies(M, n)
    bracket = {(x, y, z): z for x, y, z in nonempty_triples(A, B)}
    left, right = {}, {}
    for f in range(B.n_morphisms):
        b = f % m
        for g in range(A.n_morphisms):
            if B.src[f] == A.tgt[g]:
                left[(f, g)] = act[(b, g)]
                right[(f, g)] = A.src[g] * m + b
    mp = MatchedPair(A, B, bracket, left, right)
    report = validate_matched_pair(mp)
    if not report.ok:
        raise AxiomError("semidirect data is not a matched pair", report)
    return mp


def semidirect_product(A: FiniteCategory, M: FiniteCategory, act: Mapping[tuple[int, int], int]) -> FiniteCategory:
    """Composition ``(g, f) o (g', f') = (g o (f |> g'), f f')``."""
    return twisted_tensor_product(semidirect_matched_pair(A, M, act).to_twisting()).category
