"""``orientkit`` command line.

Exit codes: 0 found/true/pass, 1 none/false, 2 unknown (budget),
64 usage error, 65 unreadable or ill-fitting input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .connectivity import (
    is_2vc_in,
    is_2vertex_connected,
    is_strongly_connected,
    min_arc_cut,
    min_edge_cut,
)
from .formats import (
    FormatError,
    format_mg,
    format_or,
    format_reduction_map,
    parse_mg,
    parse_or,
    parse_reduction_map,
)
from .graph import GraphError
from .harness import TRIALS, default_spec, verify_theorem
from .nae import NaeParseError, format_assignment, parse_assignment, parse_mnae
from .reduction import (
    assignment_to_orientation,
    lemma1_check,
    orientation_to_assignment,
    reduce,
)
from .search import DEFAULT_BUDGET, TargetSpec, exact_orientation_search
from .tconnect import construct_2T_orientation

EXIT_OK, EXIT_NO, EXIT_UNKNOWN, EXIT_USAGE, EXIT_DATA = 0, 1, 2, 64, 65

TARGETS = {"strong": "strong", "2arc": "two-arc", "2vc": "two-vertex", "2t": "two-T"}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _vertex_list(text: str | None) -> list[str]:
    if not text:
        return []
    return [v for v in text.split(",") if v]


def _emit(text: str, path: str | None) -> None:
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def _fmt_witness(w) -> str:
    if w is None:
        return ""
    if hasattr(w, "side"):
        return f"{w.kind} side={','.join(sorted(w.side))} value={w.value}"
    return f"vertex {w}"


def cmd_conn(args) -> int:
    G = parse_mg(Path(args.file).read_text())
    m = args.measure
    if m == "edge":
        cut = min_edge_cut(G)
        print("inf" if cut is None else cut.value)
        if cut is not None:
            print("witness", _fmt_witness(cut))
        return EXIT_OK
    if m == "arc":
        cut = min_arc_cut(G)
        print("inf" if cut is None else cut.value)
        if cut is not None:
            print("witness", _fmt_witness(cut))
        return EXIT_OK
    if m == "strong":
        ok = is_strongly_connected(G)
    elif m == "2vc":
        ok = is_2vertex_connected(G)
    else:
        ok = is_2vc_in(G, _vertex_list(args.set) or G.vertices)
    print("true" if ok else "false")
    return EXIT_OK if ok else EXIT_NO


def cmd_orient(args) -> int:
    G = parse_mg(Path(args.file).read_text())
    kind = TARGETS[args.target]
    T = frozenset(_vertex_list(args.T)) if kind == "two-T" else frozenset()
    res = exact_orientation_search(G, TargetSpec(kind, T), args.budget)
    print(f"# {res.status} after {res.nodes} nodes", file=sys.stderr)
    if res.status == "found":
        _emit(format_or(G, res.orientation), args.output)
        return EXIT_OK
    print(res.status)
    return EXIT_NO if res.status == "none" else EXIT_UNKNOWN


def cmd_reduce(args) -> int:
    art = reduce(parse_mnae(Path(args.file).read_text()))
    _emit(format_mg(art.graph), args.output)
    Path(args.map).write_text(format_reduction_map(art))
    return EXIT_OK


def cmd_embed(args) -> int:
    phi = parse_mnae(Path(args.file).read_text())
    art = reduce(phi)
    f = parse_assignment(phi, args.assign)
    O = assignment_to_orientation(art, f)
    _emit(format_or(art.graph, O), args.output)
    rep = lemma1_check(art, O)
    print(f"# feasible={str(phi.is_feasible(f)).lower()} "
          f"conditions={int(rep.holds1)}{int(rep.holds2)}{int(rep.holds3)}", file=sys.stderr)
    return EXIT_OK


def cmd_lift(args) -> int:
    G = parse_mg(Path(args.graph).read_text())
    O = parse_or(Path(args.orientation).read_text(), G)
    art = parse_reduction_map(Path(args.map).read_text(), G)
    try:
        f = orientation_to_assignment(art, O)
    except ValueError as exc:
        print(f"none: {exc}")
        return EXIT_NO
    print(format_assignment(art.instance, f))
    feasible = art.instance.is_feasible(f)
    print(f"# feasible={str(feasible).lower()}", file=sys.stderr)
    return EXIT_OK if feasible else EXIT_NO


def cmd_tconnect(args) -> int:
    G = parse_mg(Path(args.file).read_text())
    out = construct_2T_orientation(G, _vertex_list(args.T), args.budget)
    if args.emit_blowup and out.H is not None:
        Path(args.emit_blowup + ".mg").write_text(format_mg(out.H))
        Path(args.emit_blowup + ".map").write_text(out.blowup.to_text())
    if out.found:
        _emit(format_or(G, out.orientation), args.output)
        return EXIT_OK
    print(out.status, _fmt_witness(out.witness))
    return EXIT_NO if out.status == "none" else EXIT_UNKNOWN


def cmd_verify(args) -> int:
    spec = default_spec(args.theorem, args.trials, args.seed, args.max_n)
    rep = verify_theorem(args.theorem, spec, args.budget, workers=args.workers)
    sys.stdout.write(rep.to_text())
    if rep.passed:
        return EXIT_OK
    return EXIT_UNKNOWN if rep.unknowns and not rep.disagreements else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="orientkit", description="Connectivity-constrained graph orientations.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("conn", help="connectivity of a .mg graph")
    s.add_argument("file")
    s.add_argument("--measure", required=True, choices=["edge", "arc", "strong", "2vc", "2vc-in"])
    s.add_argument("--set", help="comma-separated vertices for 2vc-in")
    s.set_defaults(func=cmd_conn)

    s = sub.add_parser("orient", help="search for a constrained orientation")
    s.add_argument("file")
    s.add_argument("--target", required=True, choices=list(TARGETS))
    s.add_argument("--T", help="comma-separated vertices for the 2t target")
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_orient)

    s = sub.add_parser("reduce", help="compile an MNAE3SAT instance to a gadget graph")
    s.add_argument("file")
    s.add_argument("-o", "--output", required=True)
    s.add_argument("--map", required=True)
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("embed", help="orientation of the gadget graph from an assignment")
    s.add_argument("file")
    s.add_argument("--assign", required=True, help="one 0/1 character per variable")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_embed)

    s = sub.add_parser("lift", help="assignment read off a gadget orientation")
    s.add_argument("graph")
    s.add_argument("orientation")
    s.add_argument("--map", required=True)
    s.set_defaults(func=cmd_lift)

    s = sub.add_parser("tconnect", help="2T-connected orientation via blow-up and contraction")
    s.add_argument("file")
    s.add_argument("--T", required=True, help="comma-separated vertices (may be empty)")
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    s.add_argument("--emit-blowup", metavar="PREFIX", help="write PREFIX.mg and PREFIX.map")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_tconnect)

    s = sub.add_parser("verify", help="seeded theorem-verification run")
    s.add_argument("--theorem", required=True, choices=sorted(TRIALS))
    s.add_argument("--trials", type=int, required=True)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--max-n", type=int)
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (FormatError, NaeParseError) as exc:
        print(f"orientkit: parse error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except (GraphError, ValueError, OSError) as exc:
        print(f"orientkit: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
