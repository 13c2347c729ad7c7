"""Exact rational matrices.

Stored structure maps are numpy object arrays of ``Fraction``. Arithmetic goes
through :class:`SparseQ`, a dictionary-of-keys matrix, because structure
constants are sparse and the Kronecker products involved grow quickly.

Tensor convention: in ``X (x) Y`` the factor ``X`` is the slow (outer) index,
so basis vector ``e_i (x) e_j`` has position ``i * dim(Y) + j``. This matches
``numpy.kron``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from typing import Any, Iterable, Optional, Sequence, Union

import numpy as np

from ..errors import MalformedError, ShapeError

KRONECKER_CONVENTION = "left factor is the slow index"


def rational(value: Any) -> Fraction:
    """Parse an int, ``Fraction`` or a string ``"p"``/``"p/q"``; floats are rejected."""
    if isinstance(value, bool):
        raise MalformedError(f"not a rational: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise MalformedError(f"not a rational: {value!r}") from exc
    raise MalformedError(f"not an exact rational: {value!r}")


def format_rational(q: Any) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


class SparseQ:
    """Sparse exact matrix: ``shape`` plus a dict of non-zero ``Fraction`` entries."""

    __slots__ = ("shape", "data")

    def __init__(self, shape: tuple[int, int], data: Optional[dict[tuple[int, int], Fraction]] = None):
        self.shape = (int(shape[0]), int(shape[1]))
        self.data = {k: v for k, v in (data or {}).items() if v != 0}

    @classmethod
    def from_dense(cls, a: np.ndarray) -> "SparseQ":
        return cls(a.shape, {(int(i), int(j)): Fraction(v) for (i, j), v in np.ndenumerate(a) if v != 0})

    def to_dense(self) -> np.ndarray:
        out = zeros(*self.shape)
        for (i, j), v in self.data.items():
            out[i, j] = v
        return out

    def __matmul__(self, other: "SparseQ") -> "SparseQ":
        if self.shape[1] != other.shape[0]:
            raise ShapeError(f"cannot compose {self.shape} after {other.shape}")
        rows: dict[int, list[tuple[int, Fraction]]] = {}
        for (k, j), b in other.data.items():
            rows.setdefault(k, []).append((j, b))
        out: dict[tuple[int, int], Fraction] = {}
        for (i, k), a in self.data.items():
            for j, b in rows.get(k, ()):
                key = (i, j)
                out[key] = out.get(key, 0) + a * b
        return SparseQ((self.shape[0], other.shape[1]), out)

    def kron(self, other: "SparseQ") -> "SparseQ":
        r, c = other.shape
        out = {}
        for (i, j), a in self.data.items():
            for (k, l), b in other.data.items():
                out[(i * r + k, j * c + l)] = a * b
        return SparseQ((self.shape[0] * r, self.shape[1] * c), out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseQ):
            return NotImplemented
        return self.shape == other.shape and self.data == other.data

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"SparseQ({self.shape}, nnz={len(self.data)})"


MatrixLike = Union[np.ndarray, SparseQ]


def sparse(a: MatrixLike) -> SparseQ:
    if isinstance(a, SparseQ):
        return a
    return SparseQ.from_dense(np.asarray(a, dtype=object))


def dense(a: MatrixLike) -> np.ndarray:
    return a.to_dense() if isinstance(a, SparseQ) else a


def freeze(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


def matrix(rows: Iterable[Iterable[Any]], shape: Optional[tuple[int, int]] = None) -> np.ndarray:
    """Build an exact dense matrix. ``shape`` is needed when there are no rows or no columns."""
    data = [[rational(v) for v in row] for row in rows]
    if shape is None:
        if not data:
            raise ShapeError("empty matrix needs an explicit shape")
        shape = (len(data), len(data[0]))
    if len(data) != shape[0] or any(len(row) != shape[1] for row in data):
        raise ShapeError(f"rows do not match shape {shape}")
    out = zeros(*shape)
    for i, row in enumerate(data):
        for j, v in enumerate(row):
            out[i, j] = v
    return out


def as_exact(a: Any) -> np.ndarray:
    """Copy any 2-d array-like (or :class:`SparseQ`) into a dense ``Fraction`` object array."""
    if isinstance(a, SparseQ):
        return a.to_dense()
    arr = np.asarray(a, dtype=object)
    if arr.ndim != 2:
        raise ShapeError(f"expected a 2-d array, got {arr.ndim}-d")
    out = zeros(*arr.shape)
    for idx, v in np.ndenumerate(arr):
        out[idx] = rational(v)
    return out


def zeros(r: int, c: int) -> np.ndarray:
    out = np.empty((r, c), dtype=object)
    out.fill(Fraction(0))
    return out


def identity(n: int) -> SparseQ:
    return SparseQ((n, n), {(i, i): Fraction(1) for i in range(n)})


def column(values: Sequence[Any]) -> np.ndarray:
    out = zeros(len(values), 1)
    for i, v in enumerate(values):
        out[i, 0] = rational(v)
    return out


def basis(n: int, i: int) -> np.ndarray:
    out = zeros(n, 1)
    out[i, 0] = Fraction(1)
    return out


def mul(*ms: MatrixLike) -> SparseQ:
    """Matrix product ``ms[0] @ ms[1] @ ...``, evaluated right to left."""
    return reduce(lambda acc, m: sparse(m) @ acc, reversed(ms[:-1]), sparse(ms[-1]))


def kron(*ms: MatrixLike) -> SparseQ:
    return reduce(lambda a, b: a.kron(sparse(b)), ms[1:], sparse(ms[0]))


def flip(m: int, n: int) -> SparseQ:
    """The symmetry ``V_m (x) V_n -> V_n (x) V_m``."""
    return SparseQ((n * m, m * n), {(j * m + i, i * n + j): Fraction(1) for i in range(m) for j in range(n)})


def equal(a: MatrixLike, b: MatrixLike) -> bool:
    return sparse(a) == sparse(b)


def is_zero(a: MatrixLike) -> bool:
    return not sparse(a).data


def first_difference(a: MatrixLike, b: MatrixLike) -> tuple[int, int]:
    sa, sb = sparse(a), sparse(b)
    diff = [k for k in set(sa.data) | set(sb.data) if sa.data.get(k, 0) != sb.data.get(k, 0)]
    return min(diff) if diff else (-1, -1)


def entry(a: MatrixLike, i: int, j: int) -> Fraction:
    if isinstance(a, SparseQ):
        return a.data.get((i, j), Fraction(0))
    return Fraction(a[i, j])


def check_shape(name: str, a: MatrixLike, shape: tuple[int, int]) -> None:
    if tuple(a.shape) != tuple(shape):
        raise ShapeError(f"{name} has shape {tuple(a.shape)}, expected {shape}")
