"""JSON file formats for every structure in the package.

All writers emit canonically ordered data (ascending ids, sorted keys,
rationals as reduced ``"p/q"`` strings) so output is byte-deterministic.
Readers reject unknown keys and malformed entries with :class:`MalformedError`.
"""

from __future__ import annotations

import json
from typing import Any, Iterable, Mapping, Optional

import numpy as np

from .category import FiniteCategory
from .errors import MalformedError
from .linear.matrix import KRONECKER_CONVENTION, format_rational, rational, zeros
from .linear.structures import FinDimAlgebra, FinDimBialgebra, FinDimCoalgebra, HModuleAction, LinearCategory
from .product import TwistedProduct
from .thin import BracketFunction
from .twisting import MatchedPair, TwistingSystem


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedError(f"invalid JSON: {exc}") from exc


def _keys(d: Any, required: Iterable[str], optional: Iterable[str] = ()) -> None:
    if not isinstance(d, dict):
        raise MalformedError("expected a JSON object")
    req, opt = set(required), set(optional)
    missing = req - set(d)
    extra = set(d) - req - opt
    if missing:
        raise MalformedError(f"missing keys: {sorted(missing)}")
    if extra:
        raise MalformedError(f"unknown keys: {sorted(extra)}")


def _int(v: Any, what: str = "value") -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise MalformedError(f"{what} must be an integer, got {v!r}")
    return v


def _rows(v: Any, width: int, what: str) -> list[list[Any]]:
    if not isinstance(v, list):
        raise MalformedError(f"{what} must be a list")
    for row in v:
        if not isinstance(row, list) or len(row) != width:
            raise MalformedError(f"each entry of {what} must be a list of length {width}")
    return v


def _int_rows(v: Any, width: int, what: str) -> list[tuple[int, ...]]:
    return [tuple(_int(x, what) for x in row) for row in _rows(v, width, what)]


def _unique(keys: list[tuple], what: str) -> None:
    if len(set(keys)) != len(keys):
        raise MalformedError(f"duplicate entries in {what}")


# categories


def category_to_json(C: FiniteCategory) -> dict[str, Any]:
    return {
        "objects": C.n_objects,
        "morphisms": [{"id": m.id, "src": m.src, "tgt": m.tgt} for m in C.morphisms()],
        "identity": list(C.identity),
        "compose": [[f, g, h] for (f, g), h in sorted(C.composition.items())],
    }


def category_from_json(d: Any, optional: Iterable[str] = ()) -> FiniteCategory:
    _keys(d, ("objects", "morphisms", "identity", "compose"), optional)
    n = _int(d["objects"], "objects")
    mors = d["morphisms"]
    if not isinstance(mors, list):
        raise MalformedError("morphisms must be a list")
    table = {}
    for m in mors:
        _keys(m, ("id", "src", "tgt"))
        i = _int(m["id"], "morphism id")
        if i in table:
            raise MalformedError(f"duplicate morphism id {i}")
        table[i] = (_int(m["src"], "src"), _int(m["tgt"], "tgt"))
    if set(table) != set(range(len(table))):
        raise MalformedError("morphism ids must be 0..m-1")
    ident = d["identity"]
    if not isinstance(ident, list):
        raise MalformedError("identity must be a list")
    compose_rows = _int_rows(d["compose"], 3, "compose")
    _unique([r[:2] for r in compose_rows], "compose")
    return FiniteCategory(
        n,
        [table[i][0] for i in range(len(table))],
        [table[i][1] for i in range(len(table))],
        [_int(e, "identity") for e in ident],
        {(f, g): h for f, g, h in compose_rows},
    )


def product_to_json(P: TwistedProduct) -> dict[str, Any]:
    out = category_to_json(P.category)
    out["tagging"] = [[c, u, g, f] for c, (u, g, f) in enumerate(P.tagging)]
    return out


def tagging_from_json(d: Any) -> Optional[dict[int, tuple[int, int, int]]]:
    if "tagging" not in d:
        return None
    rows = _int_rows(d["tagging"], 4, "tagging")
    _unique([r[0] for r in rows], "tagging")
    return {c: (u, g, f) for c, u, g, f in rows}


# twisting systems, matched pairs, brackets


def twisting_to_json(R: TwistingSystem) -> dict[str, Any]:
    return {"entries": [[f, g, u, gp, fp] for (f, g), (u, gp, fp) in sorted(R.entries.items())]}


def twisting_from_json(d: Any, A: FiniteCategory, B: FiniteCategory) -> TwistingSystem:
    _keys(d, ("entries",))
    rows = _int_rows(d["entries"], 5, "entries")
    _unique([r[:2] for r in rows], "entries")
    return TwistingSystem(A, B, {(f, g): (u, gp, fp) for f, g, u, gp, fp in rows})


def matched_pair_to_json(mp: MatchedPair) -> dict[str, Any]:
    return {
        "bracket": [[x, y, z, u] for (x, y, z), u in sorted(mp.bracket.items())],
        "left": [[f, g, v] for (f, g), v in sorted(mp.left.items())],
        "right": [[f, g, v] for (f, g), v in sorted(mp.right.items())],
    }


def matched_pair_from_json(d: Any, A: FiniteCategory, B: FiniteCategory) -> MatchedPair:
    _keys(d, ("bracket", "left", "right"))
    br = _int_rows(d["bracket"], 4, "bracket")
    left = _int_rows(d["left"], 3, "left")
    right = _int_rows(d["right"], 3, "right")
    _unique([r[:3] for r in br], "bracket")
    _unique([r[:2] for r in left], "left")
    _unique([r[:2] for r in right], "right")
    return MatchedPair(
        A,
        B,
        {(x, y, z): u for x, y, z, u in br},
        {(f, g): v for f, g, v in left},
        {(f, g): v for f, g, v in right},
    )


def bracket_to_json(bf: BracketFunction) -> dict[str, Any]:
    return {"T": [list(t) for t in bf.T], "values": [[x, y, z, bf(x, y, z)] for x, y, z in bf.T]}


def bracket_from_json(d: Any) -> BracketFunction:
    _keys(d, ("T", "values"))
    T = _int_rows(d["T"], 3, "T")
    vals = _int_rows(d["values"], 4, "values")
    _unique(T, "T")
    _unique([r[:3] for r in vals], "values")
    return BracketFunction(tuple(T), {(x, y, z): u for x, y, z, u in vals})


# linear structures


def _q(v: Any) -> str:
    return format_rational(v)


def _sparse_entries(mat: np.ndarray) -> list[tuple[tuple[int, int], Any]]:
    return [((int(i), int(j)), v) for (i, j), v in np.ndenumerate(mat) if v != 0]


def linear_map_to_json(mat: np.ndarray) -> dict[str, Any]:
    r, c = mat.shape
    return {
        "kind": "linear-map",
        "convention": KRONECKER_CONVENTION,
        "rows": r,
        "cols": c,
        "matrix": [[_q(v) for v in row] for row in mat.tolist()] if c else [[] for _ in range(r)],
    }


def _vector(v: Any, n: int, what: str) -> np.ndarray:
    if not isinstance(v, list) or len(v) != n:
        raise MalformedError(f"{what} must be a list of {n} rationals")
    out = zeros(n, 1)
    for i, x in enumerate(v):
        out[i, 0] = rational(x)
    return out


def _dim(d: Any) -> int:
    n = _int(d, "dim")
    if n < 0:
        raise MalformedError("dim must be non-negative")
    return n


def _index(v: Any, bound: int, what: str) -> int:
    i = _int(v, what)
    if not 0 <= i < bound:
        raise MalformedError(f"{what} {i} out of range")
    return i


def _mult_from(rows: Any, n: int) -> np.ndarray:
    m = zeros(n, n * n)
    seen = set()
    for row in _rows(rows, 4, "mult"):
        i, j, k = (_index(x, n, "basis index") for x in row[:3])
        if (i, j, k) in seen:
            raise MalformedError("duplicate entries in mult")
        seen.add((i, j, k))
        m[k, i * n + j] = rational(row[3])
    return m


def _comult_from(rows: Any, n: int) -> np.ndarray:
    d = zeros(n * n, n)
    seen = set()
    for row in _rows(rows, 4, "comult"):
        k, i, j = (_index(x, n, "basis index") for x in row[:3])
        if (k, i, j) in seen:
            raise MalformedError("duplicate entries in comult")
        seen.add((k, i, j))
        d[i * n + j, k] = rational(row[3])
    return d


def _mult_rows(mult: np.ndarray, n: int) -> list[list[Any]]:
    return sorted([[col // n, col % n, k, _q(v)] for (k, col), v in _sparse_entries(mult)])


def _comult_rows(comult: np.ndarray, n: int) -> list[list[Any]]:
    return sorted([[k, row // n, row % n, _q(v)] for (row, k), v in _sparse_entries(comult)])


_HEADER = ("kind", "convention")


def _kind(d: dict[str, Any]) -> str:
    if "kind" in d:
        return d["kind"]
    keys = set(d) - set(_HEADER)
    if keys == {"dim", "mult", "unit"}:
        return "algebra"
    if keys == {"dim", "comult", "counit"}:
        return "coalgebra"
    if keys == {"dim", "mult", "unit", "comult", "counit"}:
        return "bialgebra"
    if keys == {"objects", "dims", "compose", "identity"}:
        return "linear-category"
    if keys == {"bialgebra", "category", "action"}:
        return "module-category"
    if keys == {"rows", "cols", "matrix"}:
        return "linear-map"
    raise MalformedError(f"cannot infer structure kind from keys {sorted(keys)}")


def linear_to_json(obj: Any) -> dict[str, Any]:
    """Serialize any linear structure or an exact matrix (as a linear map)."""
    if isinstance(obj, np.ndarray):
        return linear_map_to_json(obj)
    head = {"convention": KRONECKER_CONVENTION}
    if isinstance(obj, FinDimAlgebra):
        n = obj.dim
        return {**head, "kind": "algebra", "dim": n, "mult": _mult_rows(obj.mult, n), "unit": [_q(v) for v in obj.unit[:, 0]]}
    if isinstance(obj, FinDimCoalgebra):
        n = obj.dim
        return {
            **head,
            "kind": "coalgebra",
            "dim": n,
            "comult": _comult_rows(obj.comult, n),
            "counit": [_q(v) for v in obj.counit[0, :]],
        }
    if isinstance(obj, FinDimBialgebra):
        a, c = linear_to_json(obj.algebra), linear_to_json(obj.coalgebra)
        return {**head, "kind": "bialgebra", "dim": obj.dim, "mult": a["mult"], "unit": a["unit"], "comult": c["comult"], "counit": c["counit"]}
    if isinstance(obj, LinearCategory):
        n = obj.n_objects
        comp = []
        for (x, y, z), mat in sorted(obj.compose.items()):
            dyz = obj.dim(y, z)
            for (k, col), v in _sparse_entries(mat):
                comp.append([x, y, z, col // dyz, col % dyz, k, _q(v)])
        ident = [[x, i, _q(v)] for x in range(n) for (i, _), v in _sparse_entries(obj.identity[x])]
        return {**head, "kind": "linear-category", "objects": n, "dims": [list(r) for r in obj.dims], "compose": sorted(comp), "identity": ident}
    if isinstance(obj, HModuleAction):
        acts = []
        A = obj.A
        for (x, y), mat in sorted(obj.action.items()):
            d = A.dim(x, y)
            for (k, col), v in _sparse_entries(mat):
                acts.append([x, y, col // d, col % d, k, _q(v)])
        return {
            **head,
            "kind": "module-category",
            "bialgebra": linear_to_json(obj.H),
            "category": linear_to_json(obj.A),
            "action": sorted(acts),
        }
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def linear_from_json(d: Any) -> Any:
    """Parse any linear structure; the kind is read from ``"kind"`` or inferred from the keys."""
    if not isinstance(d, dict):
        raise MalformedError("expected a JSON object")
    kind = _kind(d)
    if kind == "linear-map":
        _keys(d, ("rows", "cols", "matrix"), _HEADER)
        r, c = _dim(d["rows"]), _dim(d["cols"])
        rows = d["matrix"]
        if not isinstance(rows, list) or len(rows) != r:
            raise MalformedError("matrix must have one list per row")
        out = zeros(r, c)
        for i, row in enumerate(rows):
            if not isinstance(row, list) or len(row) != c:
                raise MalformedError("matrix row has the wrong length")
            for j, v in enumerate(row):
                out[i, j] = rational(v)
        return out
    if kind == "algebra":
        _keys(d, ("dim", "mult", "unit"), _HEADER)
        n = _dim(d["dim"])
        return FinDimAlgebra(_mult_from(d["mult"], n), _vector(d["unit"], n, "unit"))
    if kind == "coalgebra":
        _keys(d, ("dim", "comult", "counit"), _HEADER)
        n = _dim(d["dim"])
        return FinDimCoalgebra(_comult_from(d["comult"], n), _vector(d["counit"], n, "counit").T.copy())
    if kind == "bialgebra":
        _keys(d, ("dim", "mult", "unit", "comult", "counit"), _HEADER)
        n = _dim(d["dim"])
        return FinDimBialgebra(
            FinDimAlgebra(_mult_from(d["mult"], n), _vector(d["unit"], n, "unit")),
            FinDimCoalgebra(_comult_from(d["comult"], n), _vector(d["counit"], n, "counit").T.copy()),
        )
    if kind == "linear-category":
        _keys(d, ("objects", "dims", "compose", "identity"), _HEADER)
        n = _dim(d["objects"])
        dims_raw = d["dims"]
        if not isinstance(dims_raw, list) or len(dims_raw) != n:
            raise MalformedError("dims must be an n x n table")
        dims = tuple(tuple(_dim(v) for v in row) if isinstance(row, list) and len(row) == n else _bad_dims() for row in dims_raw)
        comp = {
            (x, y, z): zeros(dims[x][z], dims[x][y] * dims[y][z]) for x in range(n) for y in range(n) for z in range(n)
        }
        seen = set()
        for row in _rows(d["compose"], 7, "compose"):
            x, y, z = (_index(v, n, "object") for v in row[:3])
            i = _index(row[3], dims[x][y], "basis index")
            j = _index(row[4], dims[y][z], "basis index")
            k = _index(row[5], dims[x][z], "basis index")
            if (x, y, z, i, j, k) in seen:
                raise MalformedError("duplicate entries in compose")
            seen.add((x, y, z, i, j, k))
            comp[(x, y, z)][k, i * dims[y][z] + j] = rational(row[6])
        ident = {x: zeros(dims[x][x], 1) for x in range(n)}
        for row in _rows(d["identity"], 3, "identity"):
            x = _index(row[0], n, "object")
            ident[x][_index(row[1], dims[x][x], "basis index"), 0] = rational(row[2])
        return LinearCategory(n, dims, comp, ident)
    if kind == "module-category":
        _keys(d, ("bialgebra", "category", "action"), _HEADER)
        H = linear_from_json(d["bialgebra"])
        A = linear_from_json(d["category"])
        if not isinstance(H, FinDimBialgebra) or not isinstance(A, LinearCategory):
            raise MalformedError("module category needs a bialgebra and a linear category")
        n, h = A.n_objects, H.dim
        acts = {(x, y): zeros(A.dim(x, y), h * A.dim(x, y)) for x in range(n) for y in range(n)}
        for row in _rows(d["action"], 6, "action"):
            x, y = (_index(v, n, "object") for v in row[:2])
            dd = A.dim(x, y)
            hh = _index(row[2], h, "basis index")
            i, k = _index(row[3], dd, "basis index"), _index(row[4], dd, "basis index")
            acts[(x, y)][k, hh * dd + i] = rational(row[5])
        return HModuleAction(H, A, acts)
    raise MalformedError(f"unknown structure kind {kind!r}")


def _bad_dims() -> tuple:
    raise MalformedError("dims must be an n x n table")


def action_from_json(d: Any) -> dict[tuple[int, int], int]:
    """Monoid action file for semidirect products: ``{"action": [[b, g, b |> g], ...]}``."""
    _keys(d, ("action",))
    rows = _int_rows(d["action"], 3, "action")
    _unique([r[:2] for r in rows], "action")
    return {(b, g): h for b, g, h in rows}


def action_to_json(act: Mapping[tuple[int, int], int]) -> dict[str, Any]:
    return {"action": [[b, g, h] for (b, g), h in sorted(act.items())]}
