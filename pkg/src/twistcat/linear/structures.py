"""Finite-dimensional algebras, coalgebras, bialgebras and linear categories over the rationals.

Every structure map is an exact matrix (see :mod:`twistcat.linear.matrix`):

* multiplication ``m: A (x) A -> A`` has shape ``(n, n*n)``; column ``i*n + j`` is ``e_i e_j``;
* unit ``u: Q -> A`` has shape ``(n, 1)``;
* comultiplication ``D: C -> C (x) C`` has shape ``(n*n, n)``;
* counit ``eps: C -> Q`` has shape ``(1, n)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Any, Mapping, Optional, Sequence

import numpy as np

from ..errors import MalformedError, ReportBuilder, ShapeError, ValidationReport
from .matrix import (
    MatrixLike,
    SparseQ,
    as_exact,
    basis,
    check_shape,
    entry,
    equal,
    first_difference,
    flip,
    freeze,
    identity,
    kron,
    mul,
    zeros,
)


def _check_identity(rep: ReportBuilder, tag: str, lhs: MatrixLike, rhs: MatrixLike, witness: tuple = ()) -> None:
    if not equal(lhs, rhs):
        i, j = first_difference(lhs, rhs)
        rep.add(tag, witness + (i, j), f"{tag} fails at entry ({i},{j}): {entry(lhs, i, j)} != {entry(rhs, i, j)}")


def _exact_or_zeros(value: Any, shape: tuple[int, int]) -> np.ndarray:
    if isinstance(value, SparseQ):
        return value.to_dense()
    arr = np.asarray(value, dtype=object)
    if arr.size == 0:
        return zeros(*shape)
    return as_exact(arr)


@dataclass(frozen=True, eq=False)
class FinDimAlgebra:
    mult: np.ndarray
    unit: np.ndarray

    def __post_init__(self) -> None:
        m, u = as_exact(self.mult), as_exact(self.unit)
        n = m.shape[0]
        check_shape("multiplication", m, (n, n * n))
        check_shape("unit", u, (n, 1))
        object.__setattr__(self, "mult", freeze(m))
        object.__setattr__(self, "unit", freeze(u))

    @property
    def dim(self) -> int:
        return self.mult.shape[0]

    @classmethod
    def from_constants(cls, dim: int, constants: Mapping[tuple[int, int, int], Any], unit: Sequence[Any]) -> "FinDimAlgebra":
        """``constants[(i, j, k)]`` is the coefficient of ``e_k`` in ``e_i e_j``."""
        m = zeros(dim, dim * dim)
        for (i, j, k), c in constants.items():
            m[k, i * dim + j] += as_exact([[c]])[0, 0]
        return cls(m, as_exact([[v] for v in unit]) if dim else zeros(0, 1))

    def product(self, i: int, j: int) -> np.ndarray:
        """Coordinates of ``e_i e_j``."""
        return self.mult[:, i * self.dim + j]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FinDimAlgebra):
            return NotImplemented
        return equal(self.mult, other.mult) and equal(self.unit, other.unit)

    __hash__ = None  # type: ignore[assignment]


@dataclass(frozen=True, eq=False)
class FinDimCoalgebra:
    comult: np.ndarray
    counit: np.ndarray

    def __post_init__(self) -> None:
        d, e = as_exact(self.comult), as_exact(self.counit)
        n = d.shape[1]
        check_shape("comultiplication", d, (n * n, n))
        check_shape("counit", e, (1, n))
        object.__setattr__(self, "comult", freeze(d))
        object.__setattr__(self, "counit", freeze(e))

    @property
    def dim(self) -> int:
        return self.comult.shape[1]

    @classmethod
    def from_constants(
        cls, dim: int, constants: Mapping[tuple[int, int, int], Any], counit: Sequence[Any]
    ) -> "FinDimCoalgebra":
        """``constants[(k, i, j)]`` is the coefficient of ``e_i (x) e_j`` in ``D(e_k)``."""
        d = zeros(dim * dim, dim)
        for (k, i, j), c in constants.items():
            d[i * dim + j, k] += as_exact([[c]])[0, 0]
        return cls(d, as_exact([list(counit)]) if dim else zeros(1, 0))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FinDimCoalgebra):
            return NotImplemented
        return equal(self.comult, other.comult) and equal(self.counit, other.counit)

    __hash__ = None  # type: ignore[assignment]


@dataclass(frozen=True, eq=False)
class FinDimBialgebra:
    algebra: FinDimAlgebra
    coalgebra: FinDimCoalgebra

    def __post_init__(self) -> None:
        if self.algebra.dim != self.coalgebra.dim:
            raise ShapeError("algebra and coalgebra dimensions differ")

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def mult(self) -> np.ndarray:
        return self.algebra.mult

    @property
    def unit(self) -> np.ndarray:
        return self.algebra.unit

    @property
    def comult(self) -> np.ndarray:
        return self.coalgebra.comult

    @property
    def counit(self) -> np.ndarray:
        return self.coalgebra.counit

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FinDimBialgebra):
            return NotImplemented
        return self.algebra == other.algebra and self.coalgebra == other.coalgebra

    __hash__ = None  # type: ignore[assignment]


@dataclass(frozen=True, eq=False)
class LinearCategory:
    """Hom-spaces of dimension ``dims[x][y]``; ``compose[(x, y, z)]`` maps ``hom(x,y) (x) hom(y,z) -> hom(x,z)``."""

    n_objects: int
    dims: tuple[tuple[int, ...], ...]
    compose: Mapping[tuple[int, int, int], np.ndarray]
    identity: Mapping[int, np.ndarray]

    def __post_init__(self) -> None:
        n = self.n_objects
        dims = tuple(tuple(int(d) for d in row) for row in self.dims)
        if len(dims) != n or any(len(row) != n for row in dims) or any(d < 0 for row in dims for d in row):
            raise ShapeError("dims must be an n x n table of non-negative integers")
        object.__setattr__(self, "dims", dims)
        comp = {}
        for x in range(n):
            for y in range(n):
                for z in range(n):
                    key = (x, y, z)
                    shape = (dims[x][z], dims[x][y] * dims[y][z])
                    if key in self.compose:
                        mat = _exact_or_zeros(self.compose[key], shape)
                        check_shape(f"composition {key}", mat, shape)
                    elif shape[0] * shape[1] == 0:
                        mat = zeros(*shape)
                    else:
                        raise MalformedError(f"missing composition for {key}")
                    comp[key] = freeze(mat)
        ident = {}
        for x in range(n):
            if x not in self.identity:
                raise MalformedError(f"missing identity for object {x}")
            v = self.identity[x]
            v = _exact_or_zeros(v, (dims[x][x], 1))
            check_shape(f"identity {x}", v, (dims[x][x], 1))
            ident[x] = freeze(v)
        object.__setattr__(self, "compose", MappingProxyType(comp))
        object.__setattr__(self, "identity", MappingProxyType(ident))

    def dim(self, x: int, y: int) -> int:
        return self.dims[x][y]

    @classmethod
    def from_algebra(cls, alg: FinDimAlgebra) -> "LinearCategory":
        return cls(1, ((alg.dim,),), {(0, 0, 0): alg.mult}, {0: alg.unit})

    def to_algebra(self) -> FinDimAlgebra:
        if self.n_objects != 1:
            raise MalformedError("only one-object linear categories are algebras")
        return FinDimAlgebra(self.compose[(0, 0, 0)], self.identity[0])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearCategory):
            return NotImplemented
        return (
            self.n_objects == other.n_objects
            and self.dims == other.dims
            and all(equal(self.compose[k], other.compose[k]) for k in self.compose)
            and all(equal(self.identity[x], other.identity[x]) for x in self.identity)
        )

    __hash__ = None  # type: ignore[assignment]


@dataclass(frozen=True, eq=False)
class HModuleAction:
    """``action[(x, y)]`` is ``H (x) hom(x, y) -> hom(x, y)``, shape ``(d, dim H * d)``."""

    H: FinDimBialgebra
    A: LinearCategory
    action: Mapping[tuple[int, int], np.ndarray] = field(default_factory=dict)

    def __post_init__(self) -> None:
        acts = {}
        h = self.H.dim
        for x in range(self.A.n_objects):
            for y in range(self.A.n_objects):
                d = self.A.dim(x, y)
                mat = self.action.get((x, y))
                if mat is None:
                    if d:
                        raise MalformedError(f"missing action on hom({x},{y})")
                    mat = zeros(0, 0)
                mat = _exact_or_zeros(mat, (d, h * d))
                check_shape(f"action on hom({x},{y})", mat, (d, h * d))
                acts[(x, y)] = freeze(mat)
        object.__setattr__(self, "action", MappingProxyType(acts))


def trivial_action(H: FinDimBialgebra, A: LinearCategory) -> HModuleAction:
    """``h . f = eps(h) f``."""
    return HModuleAction(
        H, A, {(x, y): kron(H.counit, identity(A.dim(x, y))) for x in range(A.n_objects) for y in range(A.n_objects)}
    )


# validators


def validate_algebra(alg: FinDimAlgebra, rep: Optional[ReportBuilder] = None) -> ValidationReport:
    rep = rep if rep is not None else ReportBuilder()
    n, m, u = alg.dim, alg.mult, alg.unit
    I = identity(n)
    _check_identity(rep, "associativity", mul(m, kron(m, I)), mul(m, kron(I, m)))
    _check_identity(rep, "left-unit", mul(m, kron(u, I)), I)
    _check_identity(rep, "right-unit", mul(m, kron(I, u)), I)
    return rep.build()


def validate_coalgebra(co: FinDimCoalgebra, rep: Optional[ReportBuilder] = None) -> ValidationReport:
    rep = rep if rep is not None else ReportBuilder()
    n, d, e = co.dim, co.comult, co.counit
    I = identity(n)
    _check_identity(rep, "coassociativity", mul(kron(d, I), d), mul(kron(I, d), d))
    _check_identity(rep, "left-counit", mul(kron(e, I), d), I)
    _check_identity(rep, "right-counit", mul(kron(I, e), d), I)
    return rep.build()


def validate_bialgebra(bi: FinDimBialgebra, rep: Optional[ReportBuilder] = None) -> ValidationReport:
    rep = rep if rep is not None else ReportBuilder()
    validate_algebra(bi.algebra, rep)
    validate_coalgebra(bi.coalgebra, rep)
    n = bi.dim
    I = identity(n)
    m, u, d, e = bi.mult, bi.unit, bi.comult, bi.counit
    mid = kron(I, flip(n, n), I)
    _check_identity(rep, "comult-multiplicative", mul(d, m), mul(kron(m, m), mid, kron(d, d)))
    _check_identity(rep, "comult-unit", mul(d, u), kron(u, u))
    _check_identity(rep, "counit-multiplicative", mul(e, m), kron(e, e))
    _check_identity(rep, "counit-unit", mul(e, u), identity(1))
    return rep.build()


def validate_linear_category(C: LinearCategory, rep: Optional[ReportBuilder] = None) -> ValidationReport:
    rep = rep if rep is not None else ReportBuilder()
    n, c = C.n_objects, C.compose
    for x in range(n):
        for y in range(n):
            Ixy = identity(C.dim(x, y))
            _check_identity(rep, "left-unit", mul(c[(x, x, y)], kron(C.identity[x], Ixy)), Ixy, (x, y))
            _check_identity(rep, "right-unit", mul(c[(x, y, y)], kron(Ixy, C.identity[y])), Ixy, (x, y))
            for z in range(n):
                for w in range(n):
                    lhs = mul(c[(x, z, w)], kron(c[(x, y, z)], identity(C.dim(z, w))))
                    rhs = mul(c[(x, y, w)], kron(Ixy, c[(y, z, w)]))
                    _check_identity(rep, "associativity", lhs, rhs, (x, y, z, w))
    return rep.build()


def validate_module_category(act: HModuleAction, rep: Optional[ReportBuilder] = None) -> ValidationReport:
    """Module laws on every hom-space, plus H-linearity of composition and identities."""
    rep = rep if rep is not None else ReportBuilder()
    H, A = act.H, act.A
    validate_bialgebra(H, rep)
    validate_linear_category(A, rep)
    h = H.dim
    Ih = identity(h)
    n = A.n_objects
    for x in range(n):
        for y in range(n):
            d = A.dim(x, y)
            Id, a = identity(d), act.action[(x, y)]
            _check_identity(rep, "module-associativity", mul(a, kron(H.mult, Id)), mul(a, kron(Ih, a)), (x, y))
            _check_identity(rep, "module-unit", mul(a, kron(H.unit, Id)), Id, (x, y))
            for z in range(n):
                dyz = A.dim(y, z)
                c = A.compose[(x, y, z)]
                lhs = mul(act.action[(x, z)], kron(Ih, c))
                rhs = mul(
                    c,
                    kron(a, act.action[(y, z)]),
                    kron(Ih, flip(h, d), identity(dyz)),
                    kron(H.comult, Id, identity(dyz)),
                )
                _check_identity(rep, "composition-linearity", lhs, rhs, (x, y, z))
        e = A.identity[x]
        _check_identity(rep, "identity-linearity", mul(act.action[(x, x)], kron(Ih, e)), kron(e, H.counit), (x,))
    return rep.build()


_VALIDATORS = {
    "algebra": (FinDimAlgebra, validate_algebra),
    "coalgebra": (FinDimCoalgebra, validate_coalgebra),
    "bialgebra": (FinDimBialgebra, validate_bialgebra),
    "linear-category": (LinearCategory, validate_linear_category),
    "module-category": (HModuleAction, validate_module_category),
}


def validate_linear_structure(kind: str, data: Any) -> ValidationReport:
    """Dispatch on ``kind``: one of ``algebra``, ``coalgebra``, ``bialgebra``, ``linear-category``, ``module-category``."""
    if kind not in _VALIDATORS:
        raise MalformedError(f"unknown structure kind {kind!r}")
    cls, fn = _VALIDATORS[kind]
    if not isinstance(data, cls):
        raise MalformedError(f"expected {cls.__name__} for kind {kind!r}")
    return fn(data)


def group_algebra(table: Sequence[Sequence[int]], unit: int) -> FinDimBialgebra:
    """``Q[G]`` with group-like basis: ``e_a e_b = e_{table[a][b]}``, ``D e_a = e_a (x) e_a``, ``eps e_a = 1``."""
    n = len(table)
    alg = FinDimAlgebra.from_constants(n, {(a, b, table[a][b]): 1 for a in range(n) for b in range(n)}, basis(n, unit)[:, 0])
    return FinDimBialgebra(alg, group_like_coalgebra(n))


def group_like_coalgebra(n: int) -> FinDimCoalgebra:
    return FinDimCoalgebra.from_constants(n, {(k, k, k): 1 for k in range(n)}, [1] * n)


def truncated_polynomial(n: int) -> FinDimAlgebra:
    """``Q[x]/(x^n)`` on the basis ``1, x, ..., x^(n-1)``."""
    consts = {(i, j, i + j): 1 for i in range(n) for j in range(n) if i + j < n}
    return FinDimAlgebra.from_constants(n, consts, [1] + [0] * (n - 1))
