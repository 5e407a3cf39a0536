"""Command line front end.

Subcommands: construct, verify, exact, solve, dirac-solve, dirac-classify,
table.  Every run appends one JSON line to a manifest file recording the
command, parameters, content hashes of inputs and outputs, wall time and
exit code, so an experiment can be replayed and diffed byte for byte.

Exit codes: 0 success or confirmation, 1 witness found / search failure /
budget exhausted, 2 usage or parameter error.
"""

from __future__ import annotations

import argparse
import hashlib
import io
import json
import math
import sys
import time
from typing import TextIO

from .constructions import (
    build_field_colouring,
    build_general_n,
    build_sparse_cayley,
    build_three_block,
)
from .core import ColouredGraph, OddRamseyError, ParameterError
from .dirac import (
    build_agree_matrix,
    classify_two_colouring,
    even_hc_super_dirac,
    odd_cycle_from_triple,
)
from .core import CyclePath
from .occ import graph_to_json, graph_to_text, parse_graph
from .oracle import SearchBudget, SearchStatus, exact_odd_ramsey, find_even_coloured_hc
from .spicy import run_pipeline

__version__ = "0.1.0"


def _sha(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def _read_graph(path: str | None, inputs: dict) -> ColouredGraph:
    if path is None or path == "-":
        text = sys.stdin.read()
        inputs["<stdin>"] = _sha(text)
    else:
        try:
            with open(path, "r", encoding="utf-8") as fp:
                text = fp.read()
        except OSError as e:
            raise ParameterError(f"cannot read {path}: {e}") from None
        inputs[path] = _sha(text)
    return parse_graph(text)


def _budget(args: argparse.Namespace) -> SearchBudget | None:
    cycles = getattr(args, "budget_cycles", None)
    seconds = getattr(args, "budget_seconds", None)
    jobs = getattr(args, "jobs", None)
    if cycles is None and seconds is None and (jobs is None or jobs == 1):
        return None
    return SearchBudget(
        max_cycles=cycles, max_seconds=seconds, parallel_width=jobs or 1
    )


def cmd_construct(args, out: TextIO, inputs: dict, outputs: dict):
    if args.what == "field":
        g = build_field_colouring(args.m, args.t)
    elif args.what == "general":
        g = build_general_n(args.n)
    elif args.what == "blocks":
        g = build_three_block(args.n, args.k)
    else:
        g = build_sparse_cayley(args.n, args.c, args.seed)
    text = graph_to_json(g) if args.format == "json" else graph_to_text(g)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fp:
            fp.write(text)
        outputs[args.out] = _sha(text)
    else:
        out.write(text)
    return 0, f"constructed {args.what} n={g.n} r={g.r}"


def cmd_verify(args, out: TextIO, inputs: dict, outputs: dict):
    g = _read_graph(args.infile, inputs)
    res = find_even_coloured_hc(g, _budget(args))
    if res.status is SearchStatus.WITNESS:
        out.write(f"EVEN-HC {res.witness.to_line()}\n")
        return 1, "witness"
    if res.status is SearchStatus.NONE:
        out.write(
            f"NO-EVEN-HC n={g.n} r={g.r} cycles-examined={res.cycles_examined}\n"
        )
        return 0, "no-even-hc"
    out.write(f"BUDGET-EXHAUSTED cycles-examined={res.cycles_examined}\n")
    return 1, "budget-exhausted"


def cmd_exact(args, out: TextIO, inputs: dict, outputs: dict):
    res = exact_odd_ramsey(args.n, budget=_budget(args))
    if res.exact:
        out.write(f"EXACT {res.value}\n")
        return 0, f"exact {res.value}"
    out.write(f"BUDGET-EXHAUSTED lower={res.lower} upper={res.upper}\n")
    return 1, "budget-exhausted"


def cmd_solve(args, out: TextIO, inputs: dict, outputs: dict):
    g = _read_graph(args.infile, inputs)
    report = run_pipeline(
        g, best_effort=args.best_effort, collect_audit=True, trace=args.trace
    )
    for line in report.trace:
        out.write(f"trace: {line}\n")
    out.write(report.cycle.to_line() + "\n")
    odd = " ".join(str(c) for c in report.odd_colours) or "none"
    out.write(f"odd-colours: {odd}\n")
    if args.audit and report.audit is not None:
        for e in report.audit.entries:
            flag = "ok" if e.ok else "VIOLATION"
            out.write(f"audit: {flag} {e.stage} {e.detail}\n")
        out.write(f"audit: violations={len(report.audit.violations())}\n")
    return 0, f"solved case={report.case} odd-classes={len(report.odd_colours)}"


def cmd_dirac_solve(args, out: TextIO, inputs: dict, outputs: dict):
    g = _read_graph(args.infile, inputs)
    try:
        hc = even_hc_super_dirac(g)
    except ParameterError as e:
        out.write(f"REJECTED {e}\n")
        return 2, f"rejected: {e}"
    out.write(hc.to_line() + "\n")
    out.write("odd-colours: none\n")
    return 0, "even-hc"


def cmd_dirac_classify(args, out: TextIO, inputs: dict, outputs: dict):
    g = _read_graph(args.infile, inputs)
    am = build_agree_matrix(g)
    branch, payload = classify_two_colouring(g, am)
    if branch == "mixed":
        u, v = payload
        c4 = CyclePath((u, am.same_witness[(u, v)], v, am.diff_witness[(u, v)]))
        out.write(f"ODD-C4 {c4.to_line()}\n")
    elif branch in ("agree-violation", "agree-components"):
        c6 = odd_cycle_from_triple(g, *payload)
        out.write(f"ODD-C6 {c6.to_line()}\n")
    else:
        comps = payload
        out.write(f"TRANSITIVE classes={len(comps)}\n")
        for i, comp in enumerate(comps, start=1):
            out.write(f"class {i}: {' '.join(str(v) for v in comp)}\n")
    return 0, branch


def cmd_table(args, out: TextIO, inputs: dict, outputs: dict):
    rows: list[list[str]] = []
    header = ["n", "lower-asymptotic", "colours", "verified"]
    if args.sparse is not None:
        header += ["delta", "sparse-bound"]
    for n in args.n:
        g = build_general_n(n)
        lower = math.ceil(math.sqrt(2) / 2 * math.sqrt(n))
        if n > 12 or args.verify_seconds <= 0:
            verified = "-"
        else:
            budget = SearchBudget(
                max_seconds=args.verify_seconds, parallel_width=args.jobs
            )
            res = find_even_coloured_hc(g, budget)
            verified = {
                SearchStatus.NONE: "yes",
                SearchStatus.WITNESS: "counterexample",
                SearchStatus.EXHAUSTED: "timeout",
            }[res.status]
        row = [str(n), str(lower), str(g.r), verified]
        if args.sparse is not None:
            delta = n // 2 + args.sparse - 1
            bound = math.floor(
                min(2 * delta - n + 2, 3 * math.sqrt(2) / 2 * delta / math.sqrt(n) + 3)
            )
            row += [str(delta), str(bound)]
        rows.append(row)
    table = [header] + rows
    if args.pretty:
        widths = [max(len(r[i]) for r in table) for i in range(len(header))]
        for r in table:
            out.write("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() + "\n")
    else:
        for r in table:
            out.write("\t".join(r) + "\n")
    return 0, f"table rows={len(rows)}"


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--manifest",
        default="oddramsey_manifest.jsonl",
        help="manifest file to append the run record to",
    )
    # nested subparsers must not clobber a --manifest given before the
    # sub-subcommand, so their default is suppressed entirely
    nested = argparse.ArgumentParser(add_help=False)
    nested.add_argument("--manifest", default=argparse.SUPPRESS)
    parser = argparse.ArgumentParser(
        prog="oddramsey",
        description="odd-Ramsey colourings of Hamilton cycles: build, verify, solve",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common], help="emit an explicit colouring")
    csub = p.add_subparsers(dest="what", required=True)
    specs = {
        "field": [("--m", int, True), ("--t", int, True)],
        "general": [("--n", int, True)],
        "blocks": [("--n", int, True), ("--k", int, True)],
        "cayley": [("--n", int, True), ("--c", float, True), ("--seed", int, False)],
    }
    for what, flags in specs.items():
        cp = csub.add_parser(what, parents=[nested])
        for flag, typ, required in flags:
            cp.add_argument(flag, type=typ, required=required, default=0 if flag == "--seed" else None)
        cp.add_argument("--out", default=None, help="write to file instead of stdout")
        cp.add_argument("--format", choices=("occ", "json"), default="occ")
        cp.set_defaults(func=cmd_construct, what=what)

    p = sub.add_parser("verify", parents=[common], help="exhaustive even-cycle search")
    p.add_argument("--in", dest="infile", default=None, help="input graph, '-' for stdin")
    p.add_argument("--budget-cycles", type=int, default=None)
    p.add_argument("--budget-seconds", type=float, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("exact", parents=[common], help="exact odd-Ramsey value, tiny hosts")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--budget-cycles", type=int, default=None)
    p.add_argument("--budget-seconds", type=float, default=None)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("solve", parents=[common], help="Hamilton cycle with at most one odd class")
    p.add_argument("--in", dest="infile", default=None, help="input graph, '-' for stdin")
    p.add_argument("--best-effort", action="store_true")
    p.add_argument("--audit", action="store_true")
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("dirac-solve", parents=[common], help="even-coloured Hamilton cycle")
    p.add_argument("--in", dest="infile", default=None)
    p.set_defaults(func=cmd_dirac_solve)

    p = sub.add_parser("dirac-classify", parents=[common], help="agreement structure or odd cycle")
    p.add_argument("--in", dest="infile", default=None)
    p.set_defaults(func=cmd_dirac_classify)

    p = sub.add_parser("table", parents=[common], help="bound table for a list of sizes")
    p.add_argument("--n", type=int, nargs="+", required=True)
    p.add_argument("--pretty", action="store_true")
    p.add_argument("--verify-seconds", type=float, default=10.0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--sparse", type=int, default=None, help="surplus degree k for sparse bounds")
    p.set_defaults(func=cmd_table)
    return parser


def _append_manifest(
    args: argparse.Namespace,
    stdout_text: str,
    inputs: dict,
    outputs: dict,
    wall: float,
    outcome: str,
    code: int,
) -> None:
    path = getattr(args, "manifest", None) or "oddramsey_manifest.jsonl"
    params = {
        k: v
        for k, v in vars(args).items()
        if k not in ("func", "manifest") and not callable(v)
    }
    record = {
        "command": getattr(args, "command", None),
        "params": params,
        "seed": params.get("seed"),
        "inputs": inputs,
        "outputs": outputs,
        "stdout_sha256": _sha(stdout_text),
        "wall_seconds": round(wall, 6),
        "outcome": outcome,
        "exit_code": code,
        "version": __version__,
    }
    try:
        with open(path, "a", encoding="utf-8") as fp:
            fp.write(json.dumps(record, sort_keys=True) + "\n")
    except OSError as e:
        print(f"warning: could not append manifest to {path}: {e}", file=sys.stderr)


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        code = e.code
        return code if isinstance(code, int) else 2
    buf = io.StringIO()
    inputs: dict = {}
    outputs: dict = {}
    t0 = time.monotonic()
    try:
        code, outcome = args.func(args, buf, inputs, outputs)
    except ParameterError as e:
        print(f"error: {e}", file=sys.stderr)
        code, outcome = 2, f"parameter-error: {e}"
    except OddRamseyError as e:
        print(f"error: {e}", file=sys.stderr)
        code, outcome = 1, f"failure: {e}"
    sys.stdout.write(buf.getvalue())
    sys.stdout.flush()
    _append_manifest(args, buf.getvalue(), inputs, outputs, time.monotonic() - t0, outcome, code)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
