"""Command-line interface: ``twistcat <command> [flags]``.

Data goes to standard output (or ``--out``) as canonical JSON; diagnostics go
to standard error. Exit codes: 0 success, 1 validation failed (the report is
written as data), 2 malformed input, 3 search bound exceeded.
"""

from __future__ import annotations

import argparse
import sys
from typing import Any, Callable, Optional, Sequence

import numpy as np

from . import __version__
from . import io as tio
from .category import FiniteCategory, Functor, is_groupoid, is_thin, validate_category
from .errors import (
    AxiomError,
    FactorizationError,
    MalformedError,
    NotThinError,
    ReportBuilder,
    SearchSpaceError,
    ValidationReport,
)
from .linear import (
    FinDimAlgebra,
    FinDimBialgebra,
    FinDimCoalgebra,
    HModuleAction,
    LinearCategory,
    assemble_coalgebra_map,
    double_cross_product,
    smash_product,
    split_coalgebra_map,
    twisted_tensor_algebra,
    validate_bialgebra_matched_pair,
    validate_linear_structure,
    validate_twisting_map,
)
from .product import check_factorization, derive_twisting, semidirect_product, twisted_tensor_product
from .thin import construct_CST, enumerate_brackets, validate_bracket
from .twisting import (
    DEFAULT_LIMIT,
    enumerate_twisting_systems,
    extract_simple,
    twisting_to_matched_pair,
    validate_matched_pair,
    validate_twisting_system,
)

OK, INVALID, MALFORMED, LIMIT = 0, 1, 2, 3


class _Failed(Exception):
    def __init__(self, report: ValidationReport, message: str):
        self.report = report
        super().__init__(message)


def _read(path: Optional[str], flag: str) -> Any:
    if path is None:
        raise MalformedError(f"{flag} is required")
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise MalformedError(f"cannot read {path}: {exc.strerror}") from exc
    return tio.loads(text)


def _category(path: Optional[str], flag: str, optional: Sequence[str] = ()) -> FiniteCategory:
    return tio.category_from_json(_read(path, flag), optional)


def _ids(text: Optional[str], flag: str) -> list[int]:
    if text is None:
        raise MalformedError(f"{flag} is required")
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise MalformedError(f"{flag} must be a comma-separated list of integers") from exc


def _lin(args: argparse.Namespace, count: int) -> list[Any]:
    paths = args.lin or []
    if len(paths) != count:
        raise MalformedError(f"expected {count} --lin files, got {len(paths)}")
    return [tio.linear_from_json(_read(p, "--lin")) for p in paths]


def _expect(obj: Any, cls: type, what: str) -> Any:
    if not isinstance(obj, cls):
        raise MalformedError(f"{what} must be a {cls.__name__}")
    return obj


def _report_or_fail(report: ValidationReport, message: str) -> dict[str, Any]:
    if not report.ok:
        raise _Failed(report, message)
    return report.to_json()


def _single(tag: str, message: str) -> ValidationReport:
    rep = ReportBuilder()
    rep.add(tag, (), message)
    return rep.build()


def _valid_category(C: FiniteCategory, which: str) -> FiniteCategory:
    report = validate_category(C)
    if not report.ok:
        raise _Failed(report, f"{which} is not a category")
    return C


# commands


def cmd_check_category(args: argparse.Namespace) -> Any:
    return _report_or_fail(validate_category(_category(args.cat, "--cat", ("tagging",))), "category axioms fail")


def cmd_classify(args: argparse.Namespace) -> Any:
    C = _valid_category(_category(args.cat, "--cat", ("tagging",)), "input")
    inv = is_groupoid(C)
    return {
        "thin": is_thin(C),
        "groupoid": inv is not None,
        "inverse": None if inv is None else [[f, g] for f, g in sorted(inv.items())],
    }


def _factors(args: argparse.Namespace) -> tuple[FiniteCategory, FiniteCategory]:
    A = _valid_category(_category(args.cat_a, "--cat-a"), "--cat-a")
    B = _valid_category(_category(args.cat_b, "--cat-b"), "--cat-b")
    return A, B


def cmd_check_twisting(args: argparse.Namespace) -> Any:
    A, B = _factors(args)
    R = tio.twisting_from_json(_read(args.twist, "--twist"), A, B)
    return _report_or_fail(validate_twisting_system(R), "twisting diagrams fail")


def cmd_check_matched_pair(args: argparse.Namespace) -> Any:
    A, B = _factors(args)
    mp = tio.matched_pair_from_json(_read(args.twist, "--twist"), A, B)
    return _report_or_fail(validate_matched_pair(mp), "matched pair conditions fail")


def cmd_extract_simple(args: argparse.Namespace) -> Any:
    A, B = _factors(args)
    R = tio.twisting_from_json(_read(args.twist, "--twist"), A, B)
    report = validate_twisting_system(R)
    if not report.ok:
        raise _Failed(report, "input is not a twisting system")
    st = extract_simple(R)
    if st is None:
        raise _Failed(_single("not-simple", "middle object depends on more than the endpoints"), "not simple")
    return tio.matched_pair_to_json(twisting_to_matched_pair(st))


def cmd_enumerate_twisting(args: argparse.Namespace) -> Any:
    A, B = _factors(args)
    systems = enumerate_twisting_systems(A, B, limit=args.limit)
    return {"count": len(systems), "systems": [tio.twisting_to_json(R) for R in systems]}


def cmd_enumerate_brackets(args: argparse.Namespace) -> Any:
    A, B = _factors(args)
    brackets = enumerate_brackets(A, B, limit=args.limit)
    return {"count": len(brackets), "brackets": [tio.bracket_to_json(bf) for bf in brackets]}


def cmd_product(args: argparse.Namespace) -> Any:
    A, B = _factors(args)
    R = tio.twisting_from_json(_read(args.twist, "--twist"), A, B)
    return tio.product_to_json(twisted_tensor_product(R))


def _embedding_from_tagging(C: FiniteCategory, tagging: dict, factor: FiniteCategory, left: bool, other: FiniteCategory) -> Functor:
    index = {t: c for c, t in tagging.items()}
    mmap = []
    for m in range(factor.n_morphisms):
        if left:
            tag = (factor.src[m], m, other.identity[factor.src[m]])
        else:
            tag = (factor.tgt[m], other.identity[factor.tgt[m]], m)
        if tag not in index:
            raise MalformedError(f"tagging has no entry for {tag}")
        mmap.append(index[tag])
    return Functor(factor, C, tuple(range(C.n_objects)), tuple(mmap))


def cmd_derive_twisting(args: argparse.Namespace) -> Any:
    data = _read(args.cat, "--cat")
    C = _valid_category(tio.category_from_json(data, ("tagging",)), "--cat")
    if args.a_ids is not None or args.b_ids is not None:
        try:
            R = derive_twisting(C, _ids(args.a_ids, "--a-ids"), _ids(args.b_ids, "--b-ids"))
        except FactorizationError as exc:
            raise _Failed(_single("not-a-factorization", str(exc)), "no factorization") from exc
        return tio.twisting_to_json(R)
    tagging = tio.tagging_from_json(data)
    if tagging is None:
        raise MalformedError("--cat needs a tagging array, or pass --a-ids and --b-ids")
    A, B = _factors(args)
    alpha = _embedding_from_tagging(C, tagging, A, True, B)
    beta = _embedding_from_tagging(C, tagging, B, False, A)
    try:
        return tio.twisting_to_json(derive_twisting(C, alpha, beta))
    except FactorizationError as exc:
        raise _Failed(_single("not-a-factorization", str(exc)), "no factorization") from exc


def cmd_factorize(args: argparse.Namespace) -> Any:
    C = _valid_category(_category(args.cat, "--cat", ("tagging",)), "--cat")
    try:
        fac = check_factorization(C, _ids(args.a_ids, "--a-ids"), _ids(args.b_ids, "--b-ids"))
    except FactorizationError as exc:
        raise _Failed(_single("not-wide-subcategory", str(exc)), "no factorization") from exc
    if fac is None:
        raise _Failed(_single("not-bijective", "composition A x B -> C is not a bijection"), "no factorization")
    return {
        "a": tio.category_to_json(fac.alpha.source),
        "b": tio.category_to_json(fac.beta.source),
        "a_embedding": list(fac.alpha.morphism_map),
        "b_embedding": list(fac.beta.morphism_map),
        "phi": [[u, g, f, c] for (u, g, f), c in sorted(fac.phi.items())],
    }


def cmd_cst(args: argparse.Namespace) -> Any:
    A, B = _factors(args)
    bf = tio.bracket_from_json(_read(args.bracket, "--bracket"))
    report = validate_bracket(A, B, bf)
    if not report.ok:
        raise _Failed(report, "bracket conditions fail")
    res = construct_CST(A, B, bf)
    out = tio.category_to_json(res.category)
    out["labels"] = [[m, x, y, u] for m, (x, y, u) in enumerate(res.labels)]
    out["iso"] = [list(p) for p in enumerate(res.iso.morphism_map)]
    return out


def cmd_semidirect(args: argparse.Namespace) -> Any:
    A, M = _factors(args)
    act = tio.action_from_json(_read(args.action, "--action"))
    return tio.category_to_json(semidirect_product(A, M, act))


_KINDS = {
    FinDimAlgebra: "algebra",
    FinDimCoalgebra: "coalgebra",
    FinDimBialgebra: "bialgebra",
    LinearCategory: "linear-category",
    HModuleAction: "module-category",
}


def cmd_lin_check(args: argparse.Namespace) -> Any:
    (obj,) = _lin(args, 1)
    kind = _KINDS.get(type(obj))
    if kind is None:
        raise MalformedError("lin-check needs an algebraic structure, not a bare linear map")
    return _report_or_fail(validate_linear_structure(kind, obj), f"{kind} axioms fail")


def cmd_lin_twist_check(args: argparse.Namespace) -> Any:
    A, B, R = _lin(args, 3)
    A, B = _expect(A, FinDimAlgebra, "first --lin"), _expect(B, FinDimAlgebra, "second --lin")
    return _report_or_fail(validate_twisting_map(A, B, R), "twisting map conditions fail")


def cmd_lin_product(args: argparse.Namespace) -> Any:
    A, B, R = _lin(args, 3)
    A, B = _expect(A, FinDimAlgebra, "first --lin"), _expect(B, FinDimAlgebra, "second --lin")
    return tio.linear_to_json(twisted_tensor_algebra(A, B, _expect(R, np.ndarray, "third --lin")))


def cmd_lin_split(args: argparse.Namespace) -> Any:
    if args.assemble:
        f1, f2, C, D1, D2 = _lin(args, 5)
        f = assemble_coalgebra_map(f1, f2, *(_coalgebra(x) for x in (C, D1, D2)))
        return tio.linear_to_json(f)
    f, C, D1, D2 = _lin(args, 4)
    f1, f2 = split_coalgebra_map(f, *(_coalgebra(x) for x in (C, D1, D2)))
    return {"f1": tio.linear_to_json(f1), "f2": tio.linear_to_json(f2)}


def _coalgebra(x: Any) -> FinDimCoalgebra:
    if isinstance(x, FinDimBialgebra):
        return x.coalgebra
    return _expect(x, FinDimCoalgebra, "coalgebra --lin")


def cmd_double_cross(args: argparse.Namespace) -> Any:
    A, B, left, right = _lin(args, 4)
    A, B = _expect(A, FinDimBialgebra, "first --lin"), _expect(B, FinDimBialgebra, "second --lin")
    report = validate_bialgebra_matched_pair(A, B, left, right)
    if not report.ok:
        raise _Failed(report, "not a matched pair of bialgebras")
    return tio.linear_to_json(double_cross_product(A, B, left, right))


def cmd_smash(args: argparse.Namespace) -> Any:
    (act,) = _lin(args, 1)
    return tio.linear_to_json(smash_product(_expect(act, HModuleAction, "--lin")))


COMMANDS: dict[str, tuple[Callable[[argparse.Namespace], Any], str, tuple[str, ...]]] = {
    "check-category": (cmd_check_category, "validate the category axioms", ("cat",)),
    "classify": (cmd_classify, "report thinness and groupoid inverses", ("cat",)),
    "check-twisting": (cmd_check_twisting, "validate a twisting system", ("ab", "twist")),
    "check-matched-pair": (cmd_check_matched_pair, "validate a matched pair (--twist holds the pair)", ("ab", "twist")),
    "extract-simple": (cmd_extract_simple, "turn a simple twisting system into a matched pair", ("ab", "twist")),
    "enumerate-twisting": (cmd_enumerate_twisting, "list every twisting system", ("ab", "limit")),
    "enumerate-brackets": (cmd_enumerate_brackets, "list every bracket function of two thin categories", ("ab", "limit")),
    "product": (cmd_product, "build the twisted tensor product", ("ab", "twist")),
    "factorize": (cmd_factorize, "test whether two wide subcategories factorize a category", ("cat", "ids")),
    "derive-twisting": (cmd_derive_twisting, "recover the twisting system of a factorization", ("cat", "ab", "ids")),
    "cst": (cmd_cst, "build the thin category attached to a bracket", ("ab", "bracket")),
    "semidirect": (cmd_semidirect, "semidirect product of a category by a monoid action", ("ab", "action")),
    "lin-check": (cmd_lin_check, "validate a linear structure", ("lin",)),
    "lin-twist-check": (cmd_lin_twist_check, "validate a twisting map between algebras", ("lin",)),
    "lin-product": (cmd_lin_product, "twisted tensor product of algebras", ("lin",)),
    "lin-split": (cmd_lin_split, "split (or --assemble) a coalgebra map into a tensor product", ("lin", "assemble")),
    "double-cross": (cmd_double_cross, "double cross product of a matched pair of bialgebras", ("lin",)),
    "smash": (cmd_smash, "smash product of a module category", ("lin",)),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="twistcat", description="Twisting systems and twisted products of finite categories.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")
    for name, (_, help_text, groups) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text, description=help_text)
        if "cat" in groups:
            p.add_argument("--cat", help="category file ('-' for stdin)")
        if "ab" in groups:
            p.add_argument("--cat-a", dest="cat_a", help="first factor A")
            p.add_argument("--cat-b", dest="cat_b", help="second factor B")
        if "twist" in groups:
            p.add_argument("--twist", help="twisting system or matched pair file")
        if "bracket" in groups:
            p.add_argument("--bracket", help="bracket function file")
        if "action" in groups:
            p.add_argument("--action", help="monoid action file")
        if "ids" in groups:
            p.add_argument("--a-ids", dest="a_ids", help="comma-separated morphism ids of A inside C")
            p.add_argument("--b-ids", dest="b_ids", help="comma-separated morphism ids of B inside C")
        if "limit" in groups:
            p.add_argument("--limit", type=int, default=DEFAULT_LIMIT, help="search space bound (default 10^8)")
        if "lin" in groups:
            p.add_argument("--lin", action="append", help="linear structure file; repeat in order")
        if "assemble" in groups:
            p.add_argument("--assemble", action="store_true", help="inputs are f1 f2 C D1 D2; output f")
        p.add_argument("--out", help="write output here instead of stdout")
    return parser


def _emit(data: Any, out: Optional[str]) -> None:
    text = tio.dumps(data)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return MALFORMED if exc.code not in (0, None) else OK
    handler = COMMANDS[args.command][0]
    out = getattr(args, "out", None)
    try:
        _emit(handler(args), out)
        return OK
    except _Failed as exc:
        print(f"twistcat: {exc}", file=sys.stderr)
        _emit(exc.report.to_json(), out)
        return INVALID
    except AxiomError as exc:
        print(f"twistcat: {exc}", file=sys.stderr)
        _emit(exc.report.to_json(), out)
        return INVALID
    except SearchSpaceError as exc:
        print(f"twistcat: {exc}", file=sys.stderr)
        return LIMIT
    except (MalformedError, NotThinError) as exc:
        print(f"twistcat: malformed input: {exc}", file=sys.stderr)
        return MALFORMED


if __name__ == "__main__":
    sys.exit(main())
