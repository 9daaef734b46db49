"""Command-line front end.

Exit codes: 0 ok, 1 usage, 2 domain error, 3 verification failure,
4 dataset integrity error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import duality
from .errors import DatasetUnavailable, DomainError, IntegrityError
from .exceptional import EXCEPTIONAL_GROUPS, load_group, load_path, to_poset, validate_dataset
from .marked import MarkedPartition
from .partitions import GroupType, Partition
from .poset import hasse
from .render import FORMATS, render_listing, render_poset
from .verification import SUITES, run_suite

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_VERIFY, EXIT_INTEGRITY = 0, 1, 2, 3, 4

MAPS = ("dls", "dbv", "ds", "dbar", "canonical-inverse", "specialize")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _add_target(p: argparse.ArgumentParser, exceptional: bool = True) -> None:
    p.add_argument("--group-type", choices=["B", "C", "D"], help="classical type")
    if exceptional:
        p.add_argument("--group", choices=EXCEPTIONAL_GROUPS, help="exceptional group")
    p.add_argument("--n", type=int, help="size of the partitions")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="orbit-duality", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", help="apply a duality map to one marked partition")
    p.add_argument("--group-type", choices=["B", "C", "D"], required=True)
    p.add_argument("--lam", required=True, help='partition, e.g. "7,5,4^2,3,2^2,1^2" or "[4,2]|[2]"')
    p.add_argument("--mark", default=None, help='marked parts, e.g. "3,1"')
    p.add_argument("--map", choices=MAPS, default="dbar")
    p.add_argument("--format", choices=["text", "structured"], default="text")

    p = sub.add_parser("enumerate", help="list labels with special flags and duals")
    _add_target(p)
    p.add_argument("--format", choices=["text", "structured"], default="text")

    p = sub.add_parser("hasse", help="render the Hasse diagram")
    _add_target(p)
    p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("verify", help="run an exhaustive verification suite")
    p.add_argument("--suite", choices=[*SUITES, "all"], default="all")
    p.add_argument("--max-size", type=int, default=12)
    p.add_argument("--format", choices=["text", "structured"], default="text")

    p = sub.add_parser("exceptional", help="query or validate an exceptional dataset")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--group", choices=EXCEPTIONAL_GROUPS)
    src.add_argument("--data", help="path to a dataset file")
    p.add_argument("--node", help="print the dual of this node id")
    p.add_argument("--format", choices=FORMATS, default="text")
    return parser


def _classical(args) -> tuple[GroupType, int]:
    if args.group_type is None or args.n is None:
        raise UsageError("need --group-type and --n (or --group)")
    return GroupType.parse(args.group_type), args.n


def _poset(args):
    if getattr(args, "group", None):
        if args.group_type is not None or args.n is not None:
            raise UsageError("--group cannot be combined with --group-type/--n")
        return to_poset(load_group(args.group))
    return hasse(*_classical(args))


def _compute(args, out) -> int:
    X = GroupType.parse(args.group_type)
    mp = MarkedPartition.parse(args.lam, X, args.mark)
    m = args.map
    if m == "dls":
        result, rtype = duality.d_ls(mp.lam, X), X
    elif m == "dbv":
        result, rtype = duality.d_bv(mp.lam, X), X.dual
    elif m == "ds":
        result, rtype = duality.d_s(mp), X.dual
    elif m == "dbar":
        result, rtype = duality.dbar(mp), X.dual
    elif m == "canonical-inverse":
        result, rtype = duality.canonical_inverse(mp.lam, X), X.dual
    else:
        result, rtype = duality.specialize(mp), X
    if args.format == "structured":
        print(json.dumps({"map": m, "input": str(mp), "input_type": str(X),
                          "result": str(result), "result_type": str(rtype)}, indent=2), file=out)
    else:
        print(result, file=out)
    return EXIT_OK


def _verify(args, out) -> int:
    if args.max_size < 0:
        raise UsageError("--max-size must be non-negative")
    reports = run_suite(args.suite, args.max_size)
    if args.format == "structured":
        print(json.dumps([r.as_dict() for r in reports], indent=2), file=out)
    else:
        for r in reports:
            print(r.to_text(), file=out)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_VERIFY


def _exceptional(args, out) -> int:
    ds = load_path(args.data) if args.data else load_group(args.group)
    poset = to_poset(ds)
    if args.node:
        dual = poset.duality.get(args.node)
        if dual is None:
            raise DomainError(f"{ds.group} has no node {args.node!r}")
        if args.format == "structured":
            print(json.dumps({"group": ds.group, "node": args.node, "dual": dual}), file=out)
        else:
            print(dual, file=out)
        return EXIT_OK
    if args.format == "text":
        print(validate_dataset(ds).to_text(), file=out)
    print(render_poset(poset, args.format), file=out)
    return EXIT_OK


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.command == "compute":
            return _compute(args, out)
        if args.command == "enumerate":
            print(render_listing(_poset(args), args.format), file=out)
            return EXIT_OK
        if args.command == "hasse":
            print(render_poset(_poset(args), args.format), file=out)
            return EXIT_OK
        if args.command == "verify":
            return _verify(args, out)
        return _exceptional(args, out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return EXIT_USAGE
    except IntegrityError as exc:
        print(f"integrity error: {exc}", file=err)
        return EXIT_INTEGRITY
    except (DomainError, DatasetUnavailable) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_DOMAIN
    except SystemExit as exc:  # --help
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
