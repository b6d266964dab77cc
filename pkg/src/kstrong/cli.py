"""Command-line interface.

Check subcommands use grep-style exit codes: 0 when the property holds, 1 when
it fails, 2 for usage, parse or domain errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import __version__
from .connectivity import connectivity_report, scc_report
from .constructions import KTreePlan, acyclic_tournament, du, is_directed_ctree, ktree, ktree_random
from .detection import contains_k_strong
from .digraph import DigraphError, read_dg
from .formulas import FormulaDomainError, bounds_report
from .oracle import oracle_sat_ex
from .saturation import is_saturated

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kstrong", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a directed c-tree, a D_U digraph or a tournament")
    p.add_argument("family", choices=["ktree", "du", "tournament"])
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--seed", type=int)
    group.add_argument("--plan", metavar="FILE", help="replay a ktree plan (JSON)")
    p.add_argument("--plan-out", metavar="FILE", help="write the ktree plan used (JSON)")
    p.add_argument("-o", "--output", metavar="FILE")

    p = sub.add_parser("check", help="test a property of a .dg file")
    p.add_argument("property", choices=["kappa", "scc", "ksub", "saturated", "ctree"])
    p.add_argument("file", metavar="FILE")
    p.add_argument("--k", type=int)
    p.add_argument("--c", type=int)
    p.add_argument("--expect", type=int)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("oracle", help="exhaustive sat/ex computation")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--canonical", action="store_true")
    p.add_argument("--json", action="store_true")
    p.add_argument("--allow-large", action="store_true")
    p.add_argument("--sample", type=int, help="number of random indices scanned at n=6")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--progress", action="store_true", help="'progress <done> <total>' lines on stderr")

    p = sub.add_parser("bounds", help="closed-form values for (n, k)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("export", help="convert a .dg file")
    p.add_argument("format", choices=["dot"])
    p.add_argument("file", metavar="FILE")
    p.add_argument("-o", "--output", metavar="FILE")
    return parser


class UsageError(Exception):
    pass


def _require(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.command} {getattr(args, 'family', getattr(args, 'property', ''))} "
                         f"requires {', '.join(missing)}")


def cmd_construct(args: argparse.Namespace) -> int:
    if args.family == "ktree":
        if args.plan:
            plan = KTreePlan.from_json(Path(args.plan).read_text())
            if args.n is not None and args.n != plan.n:
                raise UsageError(f"--n {args.n} disagrees with plan n={plan.n}")
            if args.k is not None and args.k - 1 != plan.c:
                raise UsageError(f"--k {args.k} disagrees with plan c={plan.c}")
            digraph = ktree(plan)
        else:
            _require(args, "n", "k")
            if args.k < 2:
                raise UsageError("ktree needs --k >= 2 (clique size k-1)")
            plan, digraph = ktree_random(args.k - 1, args.n, args.seed if args.seed is not None else 0)
        if args.plan_out:
            Path(args.plan_out).write_text(plan.to_json() + "\n")
    elif args.family == "du":
        _require(args, "n", "k")
        digraph = du(args.n, args.k)
    else:
        _require(args, "n")
        digraph = acyclic_tournament(args.n)
    _emit(digraph.serialize(), args.output)
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    digraph = read_dg(args.file)
    prop = args.property
    if prop == "kappa":
        doc = connectivity_report(digraph)
        holds = args.expect is None or doc["kappa"] == args.expect
        text = f"kappa {doc['kappa']}\nseparator {' '.join(map(str, doc['min_separator']))}\n"
    elif prop == "scc":
        doc = scc_report(digraph)
        count = len(doc["components"])
        holds = doc["strongly_connected"] if args.expect is None else count == args.expect
        text = "".join(" ".join(map(str, c)) + "\n" for c in doc["components"])
    elif prop == "ksub":
        _require(args, "k")
        doc = contains_k_strong(digraph, args.k).to_dict()
        holds = doc["contains"]
        text = f"contains {str(holds).lower()}\n"
        if holds:
            text += f"witness {' '.join(map(str, doc['witness']))}\n"
    elif prop == "saturated":
        _require(args, "k")
        report = is_saturated(digraph, args.k)
        doc = report.to_dict()
        holds = report.saturated
        text = f"saturated {str(holds).lower()}\nfree {str(report.free).lower()}\n"
        text += "".join(f"violating {u} {v}\n" for u, v in report.violating_arcs)
    else:
        if args.c is None and args.k is None:
            raise UsageError("check ctree requires --c or --k")
        c = args.c if args.c is not None else args.k - 1
        doc = is_directed_ctree(digraph, c).to_dict()
        holds = doc["accepted"]
        text = f"ctree {str(holds).lower()}\n"
    if args.json:
        sys.stdout.write(dumps(doc))
    else:
        sys.stdout.write(text)
    return EXIT_OK if holds else EXIT_FAIL


def cmd_oracle(args: argparse.Namespace) -> int:
    def progress(done: int, total: int) -> None:
        print(f"progress {done} {total}", file=sys.stderr, flush=True)

    result = oracle_sat_ex(
        args.n,
        args.k,
        jobs=args.jobs,
        canonical=args.canonical,
        allow_large=args.allow_large,
        sample=args.sample,
        seed=args.seed,
        progress=progress if args.progress else None,
    )
    if args.json:
        sys.stdout.write(dumps(result.to_dict()))
    else:
        print(f"n {result.n} k {result.k}")
        print(f"sat {result.sat}")
        print(f"ex {result.ex}")
        print(f"saturated {result.labeled_saturated_count} labelled", end="")
        if result.canonical_saturated_count is not None:
            print(f", {result.canonical_saturated_count} up to isomorphism", end="")
        print()
        print(f"scanned {result.enumerated_total}{'' if result.exhaustive else ' (sampled)'}")
    return EXIT_OK


def cmd_bounds(args: argparse.Namespace) -> int:
    report = bounds_report(args.n, args.k)
    doc = report.to_dict()
    if args.json:
        sys.stdout.write(dumps(doc))
        return EXIT_OK
    for key in ("sat_value", "ktree_arcs", "du_arcs"):
        print(f"{key} {doc[key] if doc[key] is not None else 'n/a'}")
    for key in ("conjecture_value", "free_bound", "refined_free_bound"):
        q = doc[key]
        if q is None:
            print(f"{key} n/a")
        elif q["den"] == 1:
            print(f"{key} {q['num']}")
        else:
            print(f"{key} {q['num']}/{q['den']} ({q['decimal']})")
    return EXIT_OK


def cmd_export(args: argparse.Namespace) -> int:
    _emit(read_dg(args.file).to_dot(), args.output)
    return EXIT_OK


COMMANDS = {
    "construct": cmd_construct,
    "check": cmd_check,
    "oracle": cmd_oracle,
    "bounds": cmd_bounds,
    "export": cmd_export,
}


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except (UsageError, DigraphError, FormulaDomainError, OSError) as exc:
        print(f"kstrong: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
