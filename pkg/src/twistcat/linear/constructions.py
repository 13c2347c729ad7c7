"""Twisting maps, twisted tensor algebras, double cross products and smash products over the rationals."""

from __future__ import annotations

from typing import Mapping

import numpy as np

from ..category import FiniteCategory
from ..errors import AxiomError, MalformedError, ReportBuilder, ValidationReport
from .matrix import as_exact, check_shape, dense, flip, identity, is_zero, kron, mul, zeros
from .structures import (
    FinDimAlgebra,
    FinDimBialgebra,
    FinDimCoalgebra,
    HModuleAction,
    LinearCategory,
    _check_identity,
    validate_algebra,
    validate_bialgebra,
    validate_linear_category,
    validate_module_category,
)

Triple = tuple[int, int, int]


# tensor products


def tensor_coalgebra(C1: FinDimCoalgebra, C2: FinDimCoalgebra) -> FinDimCoalgebra:
    """``D = (I (x) flip (x) I)(D1 (x) D2)``, ``eps = eps1 (x) eps2``."""
    n1, n2 = C1.dim, C2.dim
    d = mul(kron(identity(n1), flip(n1, n2), identity(n2)), kron(C1.comult, C2.comult))
    return FinDimCoalgebra(d, kron(C1.counit, C2.counit))


def tensor_algebra(A: FinDimAlgebra, B: FinDimAlgebra) -> FinDimAlgebra:
    """Ordinary tensor product algebra: ``(a (x) b)(a' (x) b') = aa' (x) bb'``."""
    nA, nB = A.dim, B.dim
    m = mul(kron(A.mult, B.mult), kron(identity(nA), flip(nB, nA), identity(nB)))
    return FinDimAlgebra(m, kron(A.unit, B.unit))


def tensor_bialgebra(A: FinDimBialgebra, B: FinDimBialgebra) -> FinDimBialgebra:
    return FinDimBialgebra(tensor_algebra(A.algebra, B.algebra), tensor_coalgebra(A.coalgebra, B.coalgebra))


def flip_twisting(A: FinDimAlgebra, B: FinDimAlgebra) -> np.ndarray:
    """``R(b (x) a) = a (x) b``."""
    return dense(flip(B.dim, A.dim))


# twisting maps between algebras


def _twisting_shape(A: FinDimAlgebra, B: FinDimAlgebra, R: np.ndarray) -> np.ndarray:
    R = as_exact(R)
    check_shape("twisting map", R, (A.dim * B.dim, B.dim * A.dim))
    return R


def validate_twisting_map(A: FinDimAlgebra, B: FinDimAlgebra, R: np.ndarray) -> ValidationReport:
    """Check the four twisting-map identities for ``R: B (x) A -> A (x) B``; tags ``fm1`` .. ``fm4``.

    fm1: ``R(b (x) A) = (A (x) b)(R (x) B)(B (x) R)``
    fm2: ``R(B (x) a) = (a (x) B)(A (x) R)(R (x) A)``
    fm3: ``R(1_B (x) A) = A (x) 1_B``
    fm4: ``R(B (x) 1_A) = 1_A (x) B``
    """
    R = _twisting_shape(A, B, R)
    IA, IB = identity(A.dim), identity(B.dim)
    rep = ReportBuilder()
    _check_identity(rep, "fm1", mul(R, kron(B.mult, IA)), mul(kron(IA, B.mult), kron(R, IB), kron(IB, R)))
    _check_identity(rep, "fm2", mul(R, kron(IB, A.mult)), mul(kron(A.mult, IB), kron(IA, R), kron(R, IA)))
    _check_identity(rep, "fm3", mul(R, kron(B.unit, IA)), kron(IA, B.unit))
    _check_identity(rep, "fm4", mul(R, kron(IB, A.unit)), kron(A.unit, IB))
    return rep.build()


def twisted_tensor_algebra(A: FinDimAlgebra, B: FinDimAlgebra, R: np.ndarray, *, check: bool = True) -> FinDimAlgebra:
    """Algebra on ``A (x) B`` with ``m = (a (x) b)(A (x) R (x) B)`` and unit ``1_A (x) 1_B``.

    The result is validated independently of the twisting-map identities.
    """
    R = _twisting_shape(A, B, R)
    if check:
        report = validate_twisting_map(A, B, R)
        if not report.ok:
            raise AxiomError("not a twisting map", report)
    m = mul(kron(A.mult, B.mult), kron(identity(A.dim), R, identity(B.dim)))
    out = FinDimAlgebra(m, kron(A.unit, B.unit))
    if check:
        report = validate_algebra(out)
        if not report.ok:
            raise AxiomError("twisted tensor product is not associative and unital", report)
    return out


# coalgebra maps


def validate_coalgebra_map(f: np.ndarray, C: FinDimCoalgebra, D: FinDimCoalgebra) -> ValidationReport:
    f = as_exact(f)
    check_shape("coalgebra map", f, (D.dim, C.dim))
    rep = ReportBuilder()
    _check_identity(rep, "coalgebra-map-comult", mul(D.comult, f), mul(kron(f, f), C.comult))
    _check_identity(rep, "coalgebra-map-counit", mul(D.counit, f), C.counit)
    return rep.build()


def split_coalgebra_map(
    f: np.ndarray, C: FinDimCoalgebra, D1: FinDimCoalgebra, D2: FinDimCoalgebra
) -> tuple[np.ndarray, np.ndarray]:
    """``f1 = (D1 (x) eps2) f`` and ``f2 = (eps1 (x) D2) f`` for a coalgebra map ``f: C -> D1 (x) D2``."""
    f = as_exact(f)
    check_shape("coalgebra map", f, (D1.dim * D2.dim, C.dim))
    report = validate_coalgebra_map(f, C, tensor_coalgebra(D1, D2))
    if not report.ok:
        raise AxiomError("input is not a coalgebra map", report)
    f1 = mul(kron(identity(D1.dim), D2.counit), f)
    f2 = mul(kron(D1.counit, identity(D2.dim)), f)
    rep = ReportBuilder()
    _check_identity(rep, "reassembly", mul(kron(f1, f2), C.comult), f)
    if rep:
        raise AxiomError("split maps do not reassemble", rep.build())
    return dense(f1), dense(f2)


def assemble_coalgebra_map(
    f1: np.ndarray, f2: np.ndarray, C: FinDimCoalgebra, D1: FinDimCoalgebra, D2: FinDimCoalgebra
) -> np.ndarray:
    """``f = (f1 (x) f2) D_C``, after checking that ``(f2 (x) f1) D_C = flip (f1 (x) f2) D_C``."""
    f1, f2 = as_exact(f1), as_exact(f2)
    rep = ReportBuilder()
    for name, g, D in (("f1", f1, D1), ("f2", f2, D2)):
        sub = validate_coalgebra_map(g, C, D)
        for v in sub:
            rep.add(v.tag, v.witness, f"{name}: {v.message}")
    if rep:
        raise AxiomError("input is not a coalgebra map", rep.build())
    _check_identity(
        rep, "flip-condition", mul(kron(f2, f1), C.comult), mul(flip(D1.dim, D2.dim), kron(f1, f2), C.comult)
    )
    if rep:
        raise AxiomError("flip condition violated", rep.build())
    return dense(mul(kron(f1, f2), C.comult))


# matched pairs of bialgebras


def _comult_BA(A: FinDimBialgebra, B: FinDimBialgebra) -> np.ndarray:
    """Comultiplication of the tensor coalgebra ``B (x) A``."""
    return tensor_coalgebra(B.coalgebra, A.coalgebra).comult


def _action_shapes(A: FinDimBialgebra, B: FinDimBialgebra, left: np.ndarray, right: np.ndarray) -> tuple:
    left, right = as_exact(left), as_exact(right)
    check_shape("left action", left, (A.dim, B.dim * A.dim))
    check_shape("right action", right, (B.dim, B.dim * A.dim))
    return left, right


def validate_bialgebra_matched_pair(
    A: FinDimBialgebra, B: FinDimBialgebra, left: np.ndarray, right: np.ndarray
) -> ValidationReport:
    """Check that ``left: B (x) A -> A`` and ``right: B (x) A -> B`` form a matched pair.

    Covers both bialgebras, the module laws, the coalgebra-map property of
    each action, the flip symmetry ``bi1`` and the compatibilities ``bi2`` .. ``bi5``.
    """
    left, right = _action_shapes(A, B, left, right)
    rep = ReportBuilder()
    validate_bialgebra(A, rep)
    validate_bialgebra(B, rep)
    nA, nB = A.dim, B.dim
    IA, IB = identity(nA), identity(nB)
    D = _comult_BA(A, B)
    eps_BA = kron(B.counit, A.counit)
    _check_identity(rep, "left-module", mul(left, kron(B.mult, IA)), mul(left, kron(IB, left)))
    _check_identity(rep, "left-module-unit", mul(left, kron(B.unit, IA)), IA)
    _check_identity(rep, "right-module", mul(right, kron(IB, A.mult)), mul(right, kron(right, IA)))
    _check_identity(rep, "right-module-unit", mul(right, kron(IB, A.unit)), IB)
    _check_identity(rep, "left-coalgebra-map", mul(A.comult, left), mul(kron(left, left), D))
    _check_identity(rep, "left-coalgebra-map", mul(A.counit, left), eps_BA)
    _check_identity(rep, "right-coalgebra-map", mul(B.comult, right), mul(kron(right, right), D))
    _check_identity(rep, "right-coalgebra-map", mul(B.counit, right), eps_BA)
    _check_identity(rep, "bi1", mul(flip(nA, nB), kron(left, right), D), mul(kron(right, left), D))
    _check_identity(
        rep,
        "bi2",
        mul(right, kron(B.mult, IA)),
        mul(B.mult, kron(right, IB), kron(IB, left, right), kron(IB, D)),
    )
    _check_identity(
        rep,
        "bi3",
        mul(left, kron(IB, A.mult)),
        mul(A.mult, kron(IA, left), kron(left, right, IA), kron(D, IA)),
    )
    _check_identity(rep, "bi4", mul(right, kron(B.unit, IA)), mul(B.unit, A.counit))
    _check_identity(rep, "bi5", mul(left, kron(IB, A.unit)), mul(A.unit, B.counit))
    return rep.build()


def matched_pair_twisting_map(
    A: FinDimBialgebra, B: FinDimBialgebra, left: np.ndarray, right: np.ndarray
) -> np.ndarray:
    """``R = (left (x) right) D_{B (x) A}``."""
    left, right = _action_shapes(A, B, left, right)
    return dense(mul(kron(left, right), _comult_BA(A, B)))


def twisting_map_actions(A: FinDimBialgebra, B: FinDimBialgebra, R: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Recover ``left = (A (x) eps_B) R`` and ``right = (eps_A (x) B) R``."""
    R = _twisting_shape(A.algebra, B.algebra, R)
    return dense(mul(kron(identity(A.dim), B.counit), R)), dense(mul(kron(A.counit, identity(B.dim)), R))


def double_cross_product(
    A: FinDimBialgebra, B: FinDimBialgebra, left: np.ndarray, right: np.ndarray
) -> FinDimBialgebra:
    """Bialgebra on ``A (x) B`` with ``(f (x) g)(f' (x) g') = sum f (g1 |> f'1) (x) (g2 <| f'2) g'``."""
    report = validate_bialgebra_matched_pair(A, B, left, right)
    if not report.ok:
        raise AxiomError("not a matched pair of bialgebras", report)
    R = matched_pair_twisting_map(A, B, left, right)
    alg = twisted_tensor_algebra(A.algebra, B.algebra, R)
    out = FinDimBialgebra(alg, tensor_coalgebra(A.coalgebra, B.coalgebra))
    report = validate_bialgebra(out)
    if not report.ok:
        raise AxiomError("double cross product is not a bialgebra", report)
    return out


# linear categories and simple twisting


def linearize(C: FiniteCategory) -> LinearCategory:
    """Linear category spanned by the morphisms of ``C``; hom basis in ascending id order."""
    n = C.n_objects
    dims = [[len(C.hom(x, y)) for y in range(n)] for x in range(n)]
    pos = {m: i for x in range(n) for y in range(n) for i, m in enumerate(C.hom(x, y))}
    compose = {}
    for x in range(n):
        for y in range(n):
            for z in range(n):
                mat = zeros(dims[x][z], dims[x][y] * dims[y][z])
                for i, f in enumerate(C.hom(x, y)):
                    for j, g in enumerate(C.hom(y, z)):
                        mat[pos[C.compose(f, g)], i * dims[y][z] + j] = 1
                compose[(x, y, z)] = mat
    ident = {}
    for x in range(n):
        v = zeros(dims[x][x], 1)
        v[pos[C.identity[x]], 0] = 1
        ident[x] = v
    return LinearCategory(n, tuple(map(tuple, dims)), compose, ident)


def bialgebra_category(H: FinDimBialgebra, n_objects: int) -> LinearCategory:
    """``hom(x, x) = H`` and ``hom(x, y) = 0`` for ``x != y``."""
    h = H.dim
    dims = tuple(tuple(h if x == y else 0 for y in range(n_objects)) for x in range(n_objects))
    compose = {(x, x, x): H.mult for x in range(n_objects)}
    return LinearCategory(n_objects, dims, compose, {x: H.unit for x in range(n_objects)})


def _check_simple_data(
    A: LinearCategory, B: LinearCategory, bracket: Mapping[Triple, int], tilde: Mapping[Triple, np.ndarray]
) -> dict[Triple, np.ndarray]:
    if A.n_objects != B.n_objects:
        raise MalformedError("object sets differ")
    n = A.n_objects
    out = {}
    for x in range(n):
        for y in range(n):
            for z in range(n):
                t = (x, y, z)
                if t not in bracket or not 0 <= bracket[t] < n:
                    raise MalformedError(f"bracket undefined or out of range at {t}")
                u = bracket[t]
                shape = (A.dim(x, u) * B.dim(u, z), B.dim(x, y) * A.dim(y, z))
                mat = tilde.get(t)
                if mat is None:
                    if shape[0] * shape[1]:
                        raise MalformedError(f"missing map for triple {t}")
                    mat = zeros(*shape)
                mat = as_exact(mat)
                check_shape(f"map for triple {t}", mat, shape)
                out[t] = mat
    return out


def validate_linear_simple_twisting(
    A: LinearCategory, B: LinearCategory, bracket: Mapping[Triple, int], tilde: Mapping[Triple, np.ndarray]
) -> ValidationReport:
    """Check the four conditions for ``tilde[(x,y,z)]: hom_B(x,y) (x) hom_A(y,z) -> hom_A(x,u) (x) hom_B(u,z)``.

    ``u = bracket[(x,y,z)]`` must be given on every triple. When the bracket
    equality attached to a condition holds, the matrix identity must hold;
    otherwise both sides must be zero maps (tag suffix ``zero-branch``).
    """
    R = _check_simple_data(A, B, bracket, tilde)
    br = bracket
    n = A.n_objects
    dA, dB = A.dim, B.dim
    cA, cB = A.compose, B.compose
    rep = ReportBuilder()

    def compare(tag: str, same: bool, lhs: np.ndarray, rhs: np.ndarray, witness: tuple) -> None:
        if same:
            _check_identity(rep, tag, lhs, rhs, witness)
        elif not (is_zero(lhs) and is_zero(rhs)):
            rep.add(tag + " zero-branch", witness, f"{tag}: brackets disagree at {witness} but a side is non-zero")

    for x in range(n):
        for y in range(n):
            for z in range(n):
                for t in range(n):
                    if dB(x, y) * dB(y, z) * dA(z, t):
                        v = br[(y, z, t)]
                        w, w2 = br[(x, y, v)], br[(x, z, t)]
                        lhs = mul(
                            kron(identity(dA(x, w)), cB[(w, v, t)]),
                            kron(R[(x, y, v)], identity(dB(v, t))),
                            kron(identity(dB(x, y)), R[(y, z, t)]),
                        )
                        rhs = mul(R[(x, z, t)], kron(cB[(x, y, z)], identity(dA(z, t))))
                        compare("(i)", w == w2, lhs, rhs, (x, y, z, t))
                    if dB(x, y) * dA(y, z) * dA(z, t):
                        u = br[(x, y, z)]
                        s, s2 = br[(u, z, t)], br[(x, y, t)]
                        lhs = mul(
                            kron(cA[(x, u, s)], identity(dB(s, t))),
                            kron(identity(dA(x, u)), R[(u, z, t)]),
                            kron(R[(x, y, z)], identity(dA(z, t))),
                        )
                        rhs = mul(R[(x, y, t)], kron(identity(dB(x, y)), cA[(y, z, t)]))
                        compare("(ii)", s == s2, lhs, rhs, (x, y, z, t))
            if dA(x, y):
                lhs = mul(R[(x, x, y)], kron(B.identity[x], identity(dA(x, y))))
                rhs = kron(identity(dA(x, y)), B.identity[y])
                compare("(iii)", br[(x, x, y)] == y, lhs, rhs, (x, y))
            if dB(x, y):
                lhs = mul(R[(x, y, y)], kron(identity(dB(x, y)), A.identity[y]))
                rhs = kron(A.identity[x], identity(dB(x, y)))
                compare("(iv)", br[(x, y, y)] == x, lhs, rhs, (x, y))
    return rep.build()


def linear_twisted_product(
    A: LinearCategory,
    B: LinearCategory,
    bracket: Mapping[Triple, int],
    tilde: Mapping[Triple, np.ndarray],
    *,
    check: bool = True,
) -> LinearCategory:
    """``hom(x, y) = sum_u hom_A(x, u) (x) hom_B(u, y)`` with composition routed through ``tilde``.

    Summands are laid out in ascending ``u``; inside a summand the ``A`` factor is slow.
    """
    R = _check_simple_data(A, B, bracket, tilde)
    if check:
        report = validate_linear_simple_twisting(A, B, bracket, R)
        if not report.ok:
            raise AxiomError("not a simple twisting system", report)
    n = A.n_objects
    dA, dB = A.dim, B.dim
    size = {(x, y, u): dA(x, u) * dB(u, y) for x in range(n) for y in range(n) for u in range(n)}
    offset: dict[tuple[int, int, int], int] = {}
    dC = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            for u in range(n):
                offset[(x, y, u)] = dC[x][y]
                dC[x][y] += size[(x, y, u)]
    compose = {}
    for x in range(n):
        for y in range(n):
            for z in range(n):
                mat = zeros(dC[x][z], dC[x][y] * dC[y][z])
                for u in range(n):
                    p = size[(x, y, u)]
                    if not p:
                        continue
                    for v in range(n):
                        q = size[(y, z, v)]
                        if not q:
                            continue
                        w = bracket[(u, y, v)]
                        block = mul(
                            kron(A.compose[(x, u, w)], B.compose[(w, v, z)]),
                            kron(identity(dA(x, u)), R[(u, y, v)], identity(dB(v, z))),
                        )
                        rows = offset[(x, z, w)] + np.arange(size[(x, z, w)])
                        cols = (
                            (offset[(x, y, u)] + np.arange(p))[:, None] * dC[y][z] + offset[(y, z, v)] + np.arange(q)[None, :]
                        ).ravel()
                        if len(rows):
                            mat[np.ix_(rows, cols)] += dense(block)
                compose[(x, y, z)] = mat
    ident = {}
    for x in range(n):
        e = zeros(dC[x][x], 1)
        k = size[(x, x, x)]
        e[offset[(x, x, x)] : offset[(x, x, x)] + k, :] = dense(kron(A.identity[x], B.identity[x]))
        ident[x] = e
    out = LinearCategory(n, tuple(map(tuple, dC)), compose, ident)
    if check:
        report = validate_linear_category(out)
        if not report.ok:
            raise AxiomError("product is not a linear category", report)
    return out


def algebra_twisting_as_simple(A: FinDimAlgebra, B: FinDimAlgebra, R: np.ndarray):
    """One-object view of a twisting map: ``(A, B, bracket, tilde)`` as linear categories."""
    R = _twisting_shape(A, B, R)
    return LinearCategory.from_algebra(A), LinearCategory.from_algebra(B), {(0, 0, 0): 0}, {(0, 0, 0): R}


# smash products


def smash_twisting_data(act: HModuleAction):
    """``(H-category, bracket, tilde)`` with ``|xyz| = z`` and ``tilde(h (x) f) = sum h1 . f (x) h2`` on ``x = y``."""
    H, A = act.H, act.A
    n, h = A.n_objects, H.dim
    Hcat = bialgebra_category(H, n)
    bracket = {(x, y, z): z for x in range(n) for y in range(n) for z in range(n)}
    tilde = {}
    for x in range(n):
        for y in range(n):
            for z in range(n):
                d = A.dim(x, z)
                if x == y:
                    tilde[(x, y, z)] = dense(
                        mul(
                            kron(act.action[(x, z)], identity(h)),
                            kron(identity(h), flip(h, d)),
                            kron(H.comult, identity(d)),
                        )
                    )
                else:
                    tilde[(x, y, z)] = zeros(d * h, 0)
    return Hcat, bracket, tilde


def smash_product(act: HModuleAction, *, check: bool = True) -> LinearCategory:
    """``(f (x) h)(f' (x) h') = sum f (h1 . f') (x) h2 h'`` on ``hom(x, y) (x) H``."""
    if check:
        report = validate_module_category(act)
        if not report.ok:
            raise AxiomError("not an H-module category", report)
    H, A = act.H, act.A
    n, h = A.n_objects, H.dim
    Ih = identity(h)
    compose = {}
    for x in range(n):
        for y in range(n):
            for z in range(n):
                dxy, dyz = A.dim(x, y), A.dim(y, z)
                Ixy, Iyz = identity(dxy), identity(dyz)
                compose[(x, y, z)] = mul(
                    kron(A.compose[(x, y, z)], H.mult),
                    kron(Ixy, act.action[(y, z)], Ih, Ih),
                    kron(Ixy, Ih, flip(h, dyz), Ih),
                    kron(Ixy, H.comult, Iyz, Ih),
                )
    ident = {x: kron(A.identity[x], H.unit) for x in range(n)}
    dims = tuple(tuple(A.dim(x, y) * h for y in range(n)) for x in range(n))
    out = LinearCategory(n, dims, compose, ident)
    if check:
        report = validate_linear_category(out)
        if not report.ok:
            raise AxiomError("smash product is not a linear category", report)
    return out


__all__ = [
    "algebra_twisting_as_simple",
    "assemble_coalgebra_map",
    "bialgebra_category",
    "double_cross_product",
    "flip_twisting",
    "linear_twisted_product",
    "linearize",
    "matched_pair_twisting_map",
    "smash_product",
    "smash_twisting_data",
    "split_coalgebra_map",
    "tensor_algebra",
    "tensor_bialgebra",
    "tensor_coalgebra",
    "twisted_tensor_algebra",
    "twisting_map_actions",
    "validate_bialgebra_matched_pair",
    "validate_coalgebra_map",
    "validate_linear_simple_twisting",
    "validate_twisting_map",
]
