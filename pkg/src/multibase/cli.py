"""Command line interface.

Exit status: 0 success, 2 domain or validation failure, 64 usage/parse error.
Exact scalars are always printed as "p/q" strings.
"""
from __future__ import annotations

import argparse
import json
import sys

from .bases import BaseTuple, InvalidBases, NotInDm, parse_bases
from .criteria import (
    DEFAULT_DEPTH,
    HypothesisNotMet,
    NotConstantBase,
    PreconditionFailed,
    classify_two_bases,
    classify_monotone,
    classify_single_base,
    classify_frontier,
    is_greedy,
    is_lazy,
    is_quasi_greedy,
    is_quasi_lazy,
    entry_indices,
)
from .enumeration import NodeBudgetExceeded, enumerate_expansions, is_unique_expansion
from .numerics import EXACT, BoundaryAmbiguity, FloatMode, format_scalar, parse_scalar
from .transforms import OutOfDomain, TransformKind, canonical_spec, expand, plot_data
from .words import AlphabetMismatch, EpWord, Word, digits_to_str, parse_word, project, weight

EXIT_OK = 0
EXIT_DOMAIN = 2
EXIT_USAGE = 64

DOMAIN_ERRORS = (
    InvalidBases, NotInDm, NotConstantBase, OutOfDomain, BoundaryAmbiguity, HypothesisNotMet,
    PreconditionFailed, AlphabetMismatch, NodeBudgetExceeded,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--bases", required=True,
                        help='comma separated bases, e.g. "2,3/2"; a single base is repeated m+1 times')
    common.add_argument("--m", type=_positive, default=None, help="largest digit when one base is given")
    common.add_argument("--arithmetic", choices=["exact", "float"], default="exact")
    common.add_argument("--epsilon", type=float, default=1e-12, help="float-mode ambiguity band")
    common.add_argument("--output", choices=["json", "plain"], default="json")

    parser = _Parser(prog="multibase", description="Expansions of reals in multiple bases.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("validate-bases", parents=[common], help="marks, frontier and D_m check")

    p = sub.add_parser("expand", parents=[common], help="expansion of x under a canonical map")
    p.add_argument("--x", required=True)
    p.add_argument("--mode", choices=[k.value for k in TransformKind], default="greedy")
    p.add_argument("--depth", type=_positive, default=DEFAULT_DEPTH)

    p = sub.add_parser("project", parents=[common], help="value of a digit word")
    p.add_argument("--word", required=True, help='"101" or "10(01)"')

    p = sub.add_parser("classify", parents=[common], help="greedy/lazy/unique verdicts for words")
    p.add_argument("--word", default="-", help='eventually periodic word; "-" reads one per line from stdin')
    p.add_argument("--depth", type=_positive, default=DEFAULT_DEPTH)

    p = sub.add_parser("enumerate", parents=[common], help="all expansion prefixes of x")
    p.add_argument("--x", required=True)
    p.add_argument("--depth", type=_positive, required=True)
    p.add_argument("--node-budget", type=_positive, default=1_000_000)
    p.add_argument("--full", action="store_true", help="include the tree with states")

    p = sub.add_parser("unique", parents=[common], help="decide whether x has a unique expansion")
    p.add_argument("--x", required=True)
    p.add_argument("--depth", type=_positive, default=DEFAULT_DEPTH)

    p = sub.add_parser("indices", parents=[common], help="first greedy/lazy iterates past the frontier")
    p.add_argument("--x", required=True)
    p.add_argument("--max-iter", type=_positive, default=10_000)

    p = sub.add_parser("plot", parents=[common], help="branch segments of a transformation as JSON")
    p.add_argument("--mode", choices=[k.value for k in TransformKind], default="greedy")
    p.add_argument("--samples", type=_positive, default=2)
    p.add_argument("--out", default="-", help="output file, - for stdout")
    return parser


def _mode(args):
    return FloatMode(args.epsilon) if args.arithmetic == "float" else EXACT


def _scalar(text: str, args):
    try:
        return parse_scalar(text, _mode(args))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _bases(args) -> BaseTuple:
    try:
        return parse_bases(args.bases, args.m, _mode(args))
    except InvalidBases:
        raise
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"bad --bases: {exc}") from None


def _word(text: str, bt: BaseTuple):
    try:
        return parse_word(text, bt.m)
    except AlphabetMismatch:
        raise
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(args, payload: dict, plain: str) -> None:
    if args.output == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(plain)


def cmd_validate(args, bt: BaseTuple) -> int:
    try:
        report = bt.validate()
    except BoundaryAmbiguity as exc:
        _emit(args, {"bases": bt.to_dict(), "valid": None, "error": str(exc)}, f"ambiguous: {exc}")
        return EXIT_DOMAIN
    marks = bt.marks
    payload = {
        "bases": bt.to_dict(),
        "a": [format_scalar(v) for v in marks.a],
        "b": [format_scalar(v) for v in marks.b],
        "upper": format_scalar(bt.upper),
        "monotone": bt.monotone_order().value,
        **report.to_dict(),
    }
    lines = [
        "a: " + " ".join(payload["a"]),
        "b: " + " ".join(payload["b"]),
    ]
    if report.valid:
        f = report.frontier
        lines.append("valid")
        lines.append(f"xi+ {format_scalar(f.xi_plus)}  xi- {format_scalar(f.xi_minus)}  "
                     f"eta+ {format_scalar(f.eta_plus)}  eta- {format_scalar(f.eta_minus)}")
    else:
        lines.append(f"invalid: {report.failure}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if report.valid else EXIT_DOMAIN


def cmd_expand(args, bt: BaseTuple) -> int:
    x = _scalar(args.x, args)
    e = expand(canonical_spec(bt, args.mode), x, args.depth)
    n = len(e.digits)
    payload = {
        "bases": bt.to_dict(),
        "x": format_scalar(x),
        "mode": args.mode,
        "word": str(e.word) if e.word is not None else None,
        "digits": digits_to_str(e.digits),
        "truncated": e.truncated,
        "approximate": e.approximate,
        "n": n,
        "residual": format_scalar(e.final_state / weight(bt, e.digits)),
        "residual_bound": format_scalar(bt.residual_bound(n)),
    }
    if e.word is not None:
        payload.update(e.word.to_dict())
    _emit(args, payload, str(e))
    return EXIT_OK


def cmd_project(args, bt: BaseTuple) -> int:
    w = _word(args.word, bt)
    value = project(bt, w)
    payload = {"bases": bt.to_dict(), "word": str(w), "value": format_scalar(value),
               "finite": isinstance(w, Word)}
    _emit(args, payload, format_scalar(value))
    return EXIT_OK


def _maybe(fn, *a):
    try:
        return fn(*a).to_dict()
    except (HypothesisNotMet, PreconditionFailed, NotConstantBase) as exc:
        return {"status": "not-applicable", "reason": str(exc)}


def classify_word(bt: BaseTuple, w: EpWord, depth: int) -> dict:
    return {
        "word": str(w),
        "value": format_scalar(project(bt, w)),
        "basic": {
            "greedy": is_greedy(bt, w).to_dict(),
            "quasi_greedy": _maybe(is_quasi_greedy, bt, w),
            "lazy": is_lazy(bt, w).to_dict(),
            "quasi_lazy": _maybe(is_quasi_lazy, bt, w),
        },
        "frontier": classify_frontier(bt, w, depth).to_dict(),
        "two_bases": _maybe(classify_two_bases, bt, w, depth),
        "monotone": _maybe(classify_monotone, bt, w, depth),
        "single_base": _maybe(classify_single_base, bt, w, depth),
    }


def cmd_classify(args, bt: BaseTuple) -> int:
    texts = [args.word] if args.word != "-" else [ln.strip() for ln in sys.stdin if ln.strip()]
    status = EXIT_OK
    for text in texts:
        w = _word(text, bt)
        if not isinstance(w, EpWord):
            raise UsageError(f"{text!r} is finite; classify needs an infinite word like 10(01)")
        result = classify_word(bt, w, args.depth)
        basic = result["basic"]
        plain = (f"{w}  greedy={basic['greedy']['status']} lazy={basic['lazy']['status']} "
                 f"unique(nec)={result['frontier']['unique_necessary']['status']} "
                 f"unique(suf)={result['frontier']['unique_sufficient']['status']}")
        _emit(args, result, plain)
    return status


def cmd_enumerate(args, bt: BaseTuple) -> int:
    x = _scalar(args.x, args)
    tree = enumerate_expansions(bt, x, args.depth, args.node_budget)
    payload = tree.to_dict(full=args.full)
    _emit(args, payload, "\n".join(payload["leaves"]))
    return EXIT_OK


def cmd_unique(args, bt: BaseTuple) -> int:
    x = _scalar(args.x, args)
    result = is_unique_expansion(bt, x, args.depth)
    payload = {"x": format_scalar(x), **result.to_dict()}
    _emit(args, payload, result.status.value)
    return EXIT_OK


def cmd_indices(args, bt: BaseTuple) -> int:
    x = _scalar(args.x, args)
    result = entry_indices(bt, x, args.max_iter)
    _emit(args, {"x": format_scalar(x), **result.to_dict()}, f"p={result.p} q={result.q}")
    return EXIT_OK


def cmd_plot(args, bt: BaseTuple) -> int:
    series = plot_data(canonical_spec(bt, args.mode), args.samples)
    text = json.dumps(series.to_dict(), sort_keys=True)
    if args.out == "-":
        print(text)
    else:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    return EXIT_OK


COMMANDS = {
    "validate-bases": cmd_validate,
    "expand": cmd_expand,
    "project": cmd_project,
    "classify": cmd_classify,
    "enumerate": cmd_enumerate,
    "unique": cmd_unique,
    "indices": cmd_indices,
    "plot": cmd_plot,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        bt = _bases(args)
        if args.command != "validate-bases":
            bt.require_dm()
        return COMMANDS[args.command](args, bt)
    except UsageError as exc:
        print(f"multibase: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DOMAIN_ERRORS as exc:
        print(f"multibase: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
