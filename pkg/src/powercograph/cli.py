"""Command-line interface: ``pcg check | family | graph | nice``.

Exit codes: 0 ok, 2 usage or parse error, 3 element cap exceeded,
4 the brute-force and criterion routes disagree.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .cograph import Cotree, P4Witness, cotree_text, decompose
from .criteria import (
    FAMILIES,
    IS,
    NOT,
    UNKNOWN_TAG,
    FamilyRow,
    PairWitness,
    Verdict,
    criterion_verdict,
    family_sweep,
    pcg_bruteforce,
)
from .groups import DEFAULT_CAP, CapExceeded, SpecError, build_group, expected_order, parse_spec
from .numtheory import DEFAULT_BUDGET, NEITHER, PRIME_POWER, TWO_DISTINCT, classify_nice, is_prime_power
from .powergraph import derived_graph, directed_power_graph, p2_restriction, power_graph
from .simple_table import SPORADIC, TABLE

SCHEMA = {"schema": "pcg-records/1"}

EXIT_OK, EXIT_USAGE, EXIT_CAP, EXIT_CONFLICT = 0, 2, 3, 4


class Output:
    """Single writer for everything a command prints."""

    def __init__(self, stream):
        self.stream = stream

    def line(self, text: str = "") -> None:
        self.stream.write(text + "\n")

    def record(self, obj: dict) -> None:
        self.line(json.dumps(obj, separators=(", ", ": ")))


def _default_budget() -> int:
    env = os.environ.get("PCG_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError:
            raise SystemExit(f"PCG_BUDGET must be an integer, got {env!r}")
    return DEFAULT_BUDGET


# -- check ---------------------------------------------------------------------


def _witness(v: Verdict, G) -> list | str | None:
    """Human-readable witness, or None for an IsCograph verdict."""
    if v.tag != NOT:
        return None
    ev = v.evidence
    if isinstance(ev, P4Witness):
        return [G.render(x) for x in ev.as_tuple()]
    if isinstance(ev, PairWitness):
        return {"g": G.render(ev.g), "h": G.render(ev.h), "p": ev.p, "q": ev.q, "r": ev.r}
    if isinstance(ev, tuple) and len(ev) == 2 and all(isinstance(x, int) for x in ev):
        return {"a": G.render(ev[0]), "b": G.render(ev[1])}
    if isinstance(ev, tuple):
        return [f"{c.n}: {c}" for c in ev if c.tag == NEITHER]
    return v.reason


def cmd_check(args, out: Output) -> int:
    spec = parse_spec(args.spec)
    routes = ["brute", "criterion"] if args.method == "both" else [args.method]
    verdicts: dict[str, Verdict] = {}
    G = None
    if "brute" in routes or (expected_order(spec) <= args.cap):
        G = build_group(spec, args.cap)
    for route in routes:
        if route == "brute":
            verdicts[route] = pcg_bruteforce(G)
        else:
            verdicts[route] = criterion_verdict(spec, args.budget, args.cap)
    order = expected_order(spec)
    tags = {v.tag for v in verdicts.values() if v.tag != UNKNOWN_TAG}
    conflict = len(tags) > 1
    if args.format == "records":
        out.record(SCHEMA)
        for route, v in verdicts.items():
            out.record({
                "type": "check", "group": str(spec), "order": order, "route": route,
                "tag": v.tag, "reason": v.reason, "witness": _witness(v, G),
            })
        if len(routes) == 2:
            out.record({"type": "agreement", "group": str(spec), "agree": not conflict})
    else:
        out.line(f"group      {spec}")
        out.line(f"order      {order}")
        for route, v in verdicts.items():
            out.line(f"{route:<10} {v.tag}  ({v.reason})")
            w = _witness(v, G)
            if w is not None:
                out.line(f"{'witness':<10} {json.dumps(w)}")
        if len(routes) == 2:
            out.line(f"agreement  {'no' if conflict else 'yes'}")
    return EXIT_CONFLICT if conflict else EXIT_OK


# -- family --------------------------------------------------------------------


def _prime_powers(lo: int, hi: int) -> list[int]:
    return [q for q in range(max(lo, 2), hi + 1) if is_prime_power(q)]


def family_params(family: str, maximum: int | None) -> list:
    if family == "sporadic":
        return list(SPORADIC)
    if maximum is None:
        raise ValueError(f"family {family} needs --max")
    if family in ("cyclic", "dihedral", "sym", "alt", "psl2-char2", "suzuki"):
        return list(range(1, maximum + 1))
    if family == "psl2":
        return _prime_powers(4, maximum)
    if family == "psl3":
        return _prime_powers(2, maximum)
    if family in TABLE:
        out = []
        for q in _prime_powers(2, maximum):
            if TABLE[family].check(q) is None:
                out.append(q)
        return out
    raise ValueError(f"family {family} takes explicit parameters and cannot be swept")


def _row_record(family: str, row: FamilyRow) -> dict:
    return {
        "type": "row", "family": family, "param": row.param,
        "numbers": list(row.numbers), "classes": [str(c) for c in row.classes],
        "tag": row.verdict.tag, "reason": row.verdict.reason, "notes": list(row.notes),
    }


def cmd_family(args, out: Output) -> int:
    if args.family not in FAMILIES:
        print(f"pcg: unknown family {args.family!r}; choose from {', '.join(FAMILIES)}", file=sys.stderr)
        return EXIT_USAGE
    try:
        params = family_params(args.family, args.max)
    except ValueError as e:
        print(f"pcg: {e}", file=sys.stderr)
        return EXIT_USAGE
    rows = family_sweep(args.family, params, args.budget, args.jobs)
    hits = [r.param for r in rows if r.verdict.tag == IS]
    unknown = [r.param for r in rows if r.verdict.tag == UNKNOWN_TAG]
    if args.format == "records":
        out.record(SCHEMA)
        for r in rows:
            out.record(_row_record(args.family, r))
        out.record({"type": "summary", "family": args.family, "IsCograph": hits, "Unknown": unknown})
        return EXIT_OK
    out.line(f"{'param':>8}  {'verdict':<11} numbers")
    for r in rows:
        nums = "  ".join(f"{c.n}={c}" for c in r.classes) if r.classes else r.verdict.reason
        note = f"  [{', '.join(r.notes)}]" if r.notes else ""
        out.line(f"{str(r.param):>8}  {r.verdict.tag:<11} {nums}{note}")
    out.line(f"IsCograph: {', '.join(map(str, hits)) or '-'}")
    if unknown:
        out.line(f"Unknown: {', '.join(map(str, unknown))}")
    return EXIT_OK


# -- graph ---------------------------------------------------------------------


def cmd_graph(args, out: Output) -> int:
    spec = parse_spec(args.spec)
    G = build_group(spec, args.cap)
    if args.kind == "directed":
        g = directed_power_graph(G)
    elif args.kind == "power":
        g = power_graph(G)
    elif args.kind == "p2":
        g = p2_restriction(G)
    else:
        g = derived_graph(G, args.kind)
    text = g.to_dot(f"{args.kind}({spec})") if args.format == "dot" else g.to_hex()
    if args.output:
        with open(args.output, "w") as f:
            f.write(text)
    else:
        out.stream.write(text)
    if args.cotree:
        if args.kind == "directed":
            print("pcg: --cotree needs an undirected graph kind", file=sys.stderr)
            return EXIT_USAGE
        if g.n == 0:
            result = "empty graph"
        else:
            t = decompose(g)
            result = cotree_text(t) if isinstance(t, Cotree) else "P4 {} {} {} {}".format(*t.as_tuple())
        with open(args.cotree, "w") as f:
            f.write(result + "\n")
    return EXIT_OK


# -- nice ----------------------------------------------------------------------


def cmd_nice(args, out: Output) -> int:
    if args.n < 1:
        print("pcg: n must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    c = classify_nice(args.n, args.budget)
    if c.tag == PRIME_POWER:
        detail = f"{c.witness[0]}^{c.witness[1]}"
    elif c.tag == TWO_DISTINCT:
        detail = f"{c.witness[0]} x {c.witness[1]}"
    elif c.tag == NEITHER:
        detail = f"{c.witness[0]} x {c.witness[1]}" if c.witness else "1"
    else:
        detail = f"unsplit composite {c.witness[0]} within budget {args.budget}"
    out.line(f"{args.n}: {c} [{detail}]")
    return EXIT_OK


# -- entry point ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pcg", description="Power-cograph checks for finite groups.")
    ap.add_argument("--cap", type=int, default=DEFAULT_CAP, help="element cap for enumerated groups")
    ap.add_argument("--jobs", type=int, default=1, help="worker processes for family sweeps")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide one group")
    p.add_argument("spec")
    p.add_argument("--method", choices=["brute", "criterion", "both"], default="both")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--format", choices=["table", "records"], default="table")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("family", help="sweep a family by parameter")
    p.add_argument("family")
    p.add_argument("--max", "--max-d", "--max-e", "--max-m", "--max-n", "--max-q", dest="max", type=int)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--format", choices=["table", "records"], default="table")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("graph", help="export a graph of a group")
    p.add_argument("spec")
    p.add_argument("--kind", choices=["power", "directed", "reduced", "enhanced", "gk", "p2"], default="power")
    p.add_argument("--format", choices=["dot", "hex"], default="dot")
    p.add_argument("--cotree", metavar="PATH", help="also write the cotree (or a P4) to PATH")
    p.add_argument("-o", "--output", metavar="PATH")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("nice", help="classify an integer")
    p.add_argument("n", type=int)
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=cmd_nice)
    return ap


def main(argv=None, stdout=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "budget", None) is None:
        args.budget = _default_budget()
    out = Output(stdout or sys.stdout)
    try:
        return args.func(args, out)
    except SpecError as e:
        print(f"pcg: {e}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as e:
        print(f"pcg: {e}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as e:
        print(f"pcg: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
