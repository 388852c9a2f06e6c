"""Command-line front end.

Exit codes: 0 success, 1 malformed input, 2 precondition violated (or a
supplied partition is infeasible), 3 internal invariant failure.
Reports are JSON on stdout; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from collections.abc import Sequence
from typing import Any, Optional

from .edgelist import format_edge_list, graph_digest, parse_edge_list
from .errors import InputError, InvariantError, MdpartError, ParseError
from .generators import (
    gen_cubeH,
    gen_icosahedron,
    gen_random,
    gen_random_k4minus_free,
    gen_tk3,
    t_multiply,
)
from .multigraph import Multigraph
from .multiway import multiway_partition
from .niceness import DegreeFunction, is_meager, meager_violator, maximal_nice_subset, minimal_nice_subset
from .oracle import FAMILIES, certify_sharpness, check_multiway, check_partition, exists_feasible_partition, meager_by_enumeration
from .theorem_general import check_theorem1_precondition, theorem1_partition
from .theorem_k4free import check_theorem3_precondition, theorem3_partition

SCHEMA = 1
EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_INVARIANT = 0, 1, 2, 3


class CliFailure(Exception):
    def __init__(self, code: int, message: str, details: Optional[dict] = None) -> None:
        super().__init__(message)
        self.code = code
        self.details = details or {}


# -- input helpers ------------------------------------------------------------

def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(path: str) -> Multigraph:
    return parse_edge_list(_read_text(path))


def _load_json(path: str) -> Any:
    try:
        return json.loads(_read_text(path))
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc.msg})", exc.lineno) from None


def _int_list(value: Any, what: str, n: int) -> list[int]:
    if not isinstance(value, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in value):
        raise ParseError(f"{what} must be a list of integers")
    if len(value) != n:
        raise ParseError(f"{what} has {len(value)} entries, graph has {n} vertices")
    if any(x < 0 for x in value):
        raise ParseError(f"{what} must be nonnegative")
    return value


def _vertex_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise ParseError(f"invalid vertex list {text!r}") from None


def _pair_budgets(args: argparse.Namespace, n: int) -> tuple[list[int], list[int]]:
    if args.budgets is not None:
        if args.a_const is not None or args.b_const is not None:
            raise ParseError("use either --budgets or --a-const/--b-const")
        data = _load_json(args.budgets)
        if not isinstance(data, dict) or "a" not in data or "b" not in data:
            raise ParseError('budget file must be an object with arrays "a" and "b"')
        return _int_list(data["a"], "a", n), _int_list(data["b"], "b", n)
    if args.a_const is None or args.b_const is None:
        raise ParseError("budgets required: --budgets FILE or both --a-const and --b-const")
    if args.a_const < 0 or args.b_const < 0:
        raise ParseError("budgets must be nonnegative")
    return [args.a_const] * n, [args.b_const] * n


def _set_budget(args: argparse.Namespace, n: int) -> list[int]:
    if args.f is not None:
        data = _load_json(args.f)
        if isinstance(data, dict):
            data = data.get("f")
        return _int_list(data, "f", n)
    if args.f_const is None:
        raise ParseError("budget required: --f FILE or --f-const K")
    return [args.f_const] * n


def _vertex_set(args: argparse.Namespace, G: Multigraph) -> list[int]:
    X = list(range(G.n)) if args.set is None else _vertex_list(args.set)
    bad = [v for v in X if not 0 <= v < G.n]
    if bad:
        raise ParseError(f"vertex ids out of range: {bad}")
    return sorted(set(X))


def _emit(payload: dict) -> None:
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")


# -- commands -----------------------------------------------------------------

def cmd_partition(args: argparse.Namespace) -> int:
    G = _load_graph(args.graph)
    a, b = _pair_budgets(args, G.n)
    started = time.perf_counter()

    to_a, to_b = [], []
    for v in G.isolated_vertices():
        if a[v] == 0:
            to_a.append(v)
        elif b[v] == 0:
            to_b.append(v)
        else:
            raise CliFailure(EXIT_PRECONDITION,
                             f"isolated vertex {v} has positive budgets a={a[v]}, b={b[v]}; it fits neither side")

    core, removed = G.strip_isolated()
    keep = [v for v in G.vertices() if v not in set(removed)]
    sa = [a[v] for v in keep]
    sb = [b[v] for v in keep]
    mode = args.mode
    moves = 0
    how = "isolated-only"
    trace_text = ""
    if core.n == 0:
        A, B = set(to_a), set(to_b)
        mode = "none"
    else:
        mode = _select_mode(core, sa, sb, args.mode)
        solver = theorem1_partition if mode == "general" else theorem3_partition
        try:
            res = solver(core, sa, sb, check_invariants=args.check_invariants)
        except InvariantError as exc:
            raise CliFailure(EXIT_INVARIANT, str(exc)) from exc
        A = {keep[v] for v in res.A} | set(to_a)
        B = {keep[v] for v in res.B} | set(to_b)
        moves = len(res.trace)
        how = res.how
        trace_text = res.trace.to_text()

    problems = check_partition(G, A, B, a, b)
    if problems and core.n == 0:
        raise CliFailure(EXIT_PRECONDITION, "isolated vertices alone cannot form a partition: " + "; ".join(problems))
    if problems:
        raise CliFailure(EXIT_INVARIANT, "solver output failed verification: " + "; ".join(problems))
    if args.trace:
        with open(args.trace, "w", encoding="utf-8") as fh:
            fh.write(trace_text)

    report: dict[str, Any] = {
        "schema": SCHEMA,
        "command": "partition",
        "status": "ok",
        "mode": mode,
        "graph_digest": graph_digest(G),
        "n": G.n,
        "partition": [sorted(A), sorted(B)],
        "moves": moves,
        "final_weight": _weight(G, A, B, a, b),
        "how": how,
        "isolated": {"A": sorted(to_a), "B": sorted(to_b)},
        "validation": {"feasible": True, "problems": []},
    }
    if args.timing:
        report["wall_time_s"] = round(time.perf_counter() - started, 6)
    _emit(report)
    return EXIT_OK


def _weight(G: Multigraph, A: set[int], B: set[int], a: Sequence[int], b: Sequence[int]) -> int:
    return G.edges_within(A) + G.edges_within(B) + sum(b[v] for v in A) + sum(a[v] for v in B)


def _select_mode(G: Multigraph, a: list[int], b: list[int], requested: str) -> str:
    r1 = check_theorem1_precondition(G, a, b)
    if requested == "general":
        if not r1:
            raise CliFailure(EXIT_PRECONDITION, r1.message(), {"violations": r1.violations})
        return "general"
    r3 = check_theorem3_precondition(G, a, b)
    if requested == "k4free":
        if not r3:
            raise CliFailure(EXIT_PRECONDITION, r3.message(), {"violations": r3.violations})
        return "k4free"
    if r1:
        return "general"
    if r3:
        return "k4free"
    raise CliFailure(EXIT_PRECONDITION, "neither degree bound applies",
                     {"general": r1.violations, "k4free": r3.violations})


def cmd_multiway(args: argparse.Namespace) -> int:
    G = _load_graph(args.graph)
    fs, h = _multiway_budgets(args, G.n)
    started = time.perf_counter()
    try:
        parts = multiway_partition(G, fs, h, check_invariants=args.check_invariants)
    except InvariantError as exc:
        raise CliFailure(EXIT_INVARIANT, str(exc)) from exc
    problems = check_multiway(G, parts, fs)
    if problems:
        raise CliFailure(EXIT_INVARIANT, "solver output failed verification: " + "; ".join(problems))
    report: dict[str, Any] = {
        "schema": SCHEMA,
        "command": "multiway",
        "status": "ok",
        "h": h,
        "graph_digest": graph_digest(G),
        "n": G.n,
        "partition": [sorted(p) for p in parts],
        "validation": {"feasible": True, "problems": []},
    }
    if args.timing:
        report["wall_time_s"] = round(time.perf_counter() - started, 6)
    _emit(report)
    return EXIT_OK


def _multiway_budgets(args: argparse.Namespace, n: int) -> tuple[list[list[int]], int]:
    spec = args.budgets
    file_h = None
    if all(tok.strip().isdigit() for tok in spec.split(",")) and spec.strip():
        fs = [[int(tok)] * n for tok in spec.split(",")]
    else:
        data = _load_json(spec)
        if not isinstance(data, dict) or not isinstance(data.get("fs"), list):
            raise ParseError('multiway budget file must be an object with an array "fs"')
        fs = [_int_list(f, f"fs[{i}]", n) for i, f in enumerate(data["fs"])]
        file_h = data.get("h")
        if file_h is not None and file_h not in (1, 2):
            raise ParseError(f'"h" must be 1 or 2, got {file_h!r}')
    if args.h is not None and file_h is not None and args.h != file_h:
        raise ParseError(f"--h {args.h} conflicts with h={file_h} in the budget file")
    h = args.h if args.h is not None else (file_h if file_h is not None else 1)
    return fs, h


def cmd_verify(args: argparse.Namespace) -> int:
    G = _load_graph(args.graph)
    data = _load_json(args.partition)
    if isinstance(data, dict) and "partition" in data:
        parts = data["partition"]
    elif isinstance(data, dict) and "A" in data and "B" in data:
        parts = [data["A"], data["B"]]
    elif isinstance(data, list):
        parts = data
    else:
        raise ParseError('partition file must hold "partition", "A"/"B", or a list of parts')
    if not isinstance(parts, list) or not all(isinstance(p, list) for p in parts):
        raise ParseError("partition must be a list of vertex lists")
    for p in parts:
        if not all(isinstance(v, int) and not isinstance(v, bool) for v in p):
            raise ParseError("partition entries must be integers")
    if len(parts) == 2 and args.multiway is None:
        a, b = _pair_budgets(args, G.n)
        problems = check_partition(G, parts[0], parts[1], a, b)
    else:
        if args.multiway is None:
            raise ParseError(f"{len(parts)} parts given; pass --multiway BUDGETS")
        args.budgets, args.h = args.multiway, None
        fs, _ = _multiway_budgets(args, G.n)
        problems = check_multiway(G, parts, fs)
    _emit({
        "schema": SCHEMA,
        "command": "verify",
        "status": "ok" if not problems else "infeasible",
        "graph_digest": graph_digest(G),
        "feasible": not problems,
        "problems": problems,
    })
    return EXIT_OK if not problems else EXIT_PRECONDITION


def cmd_oracle(args: argparse.Namespace) -> int:
    if args.oracle_cmd == "certify":
        report = certify_sharpness(args.family, args.t)
        _emit({"schema": SCHEMA, "command": "oracle certify", **report.to_dict()})
        return EXIT_OK if report.certified else EXIT_INVARIANT
    G = _load_graph(args.graph)
    if args.oracle_cmd == "exists-feasible":
        a, b = _pair_budgets(args, G.n)
        found = exists_feasible_partition(G, a, b)
        _emit({
            "schema": SCHEMA,
            "command": "oracle exists-feasible",
            "graph_digest": graph_digest(G),
            "exists": found is not None,
            "witness": None if found is None else [sorted(found[0]), sorted(found[1])],
        })
        return EXIT_OK
    X = _vertex_set(args, G)
    f = _set_budget(args, G.n)
    _emit({
        "schema": SCHEMA,
        "command": "oracle check-meager",
        "graph_digest": graph_digest(G),
        "set": X,
        "meager": meager_by_enumeration(G, X, f),
    })
    return EXIT_OK


def cmd_check_meager(args: argparse.Namespace) -> int:
    G = _load_graph(args.graph)
    X = _vertex_set(args, G)
    f = _set_budget(args, G.n)
    violator = meager_violator(G, X, f)
    _emit({
        "schema": SCHEMA,
        "command": "check-meager",
        "graph_digest": graph_digest(G),
        "set": X,
        "meager": not violator,
        "violating_subset": sorted(violator),
    })
    return EXIT_OK


def cmd_nice_subset(args: argparse.Namespace) -> int:
    G = _load_graph(args.graph)
    X = _vertex_set(args, G)
    f = _set_budget(args, G.n)
    if args.minimal:
        found = minimal_nice_subset(G, X, f)
        subset = None if found is None else sorted(found)
    else:
        subset = sorted(maximal_nice_subset(G, X, f))
    _emit({
        "schema": SCHEMA,
        "command": "nice-subset",
        "graph_digest": graph_digest(G),
        "set": X,
        "kind": "minimal" if args.minimal else "maximal",
        "subset": subset,
    })
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    if args.family == "tk3":
        G = gen_tk3(args.t)
        note = f"tK3 with t={args.t}"
    elif args.family == "cubeH":
        G = t_multiply(gen_cubeH(), args.t)
        note = f"Figure-1 graph H scaled by t={args.t}"
    elif args.family == "icosa":
        G = t_multiply(gen_icosahedron(), args.t)
        note = f"icosahedron scaled by t={args.t}"
    else:
        gen = gen_random_k4minus_free if args.k4minus_free else gen_random
        G = gen(args.n, args.p, args.max_mult, args.seed)
        note = f"random n={args.n} p={args.p} max_mult={args.max_mult} seed={args.seed}"
        if args.k4minus_free:
            note += " (K4- free)"
    sys.stdout.write(format_edge_list(G, note))
    return EXIT_OK


# -- parser -------------------------------------------------------------------

def _add_pair_budgets(p: argparse.ArgumentParser) -> None:
    p.add_argument("--a-const", type=int, help="constant budget a")
    p.add_argument("--b-const", type=int, help="constant budget b")
    p.add_argument("--budgets", help='JSON file {"a": [...], "b": [...]}')


def _add_set_budget(p: argparse.ArgumentParser) -> None:
    p.add_argument("--set", help="comma-separated vertex ids (default: all vertices)")
    p.add_argument("--f-const", type=int, help="constant budget f")
    p.add_argument("--f", help='JSON file with a list (or {"f": [...]})')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mdpart", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("partition", help="compute an (a,b)-feasible bipartition")
    p.add_argument("graph", help="edge-list file, or - for stdin")
    _add_pair_budgets(p)
    p.add_argument("--mode", choices=("general", "k4free", "auto"), default="auto")
    p.add_argument("--trace", help="write the move log to this file")
    p.add_argument("--timing", action="store_true", help="include wall time in the report")
    p.add_argument("--check-invariants", action="store_true")
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("multiway", help="compute a p-way partition")
    p.add_argument("graph")
    p.add_argument("--h", type=int, choices=(1, 2))
    p.add_argument("--budgets", required=True,
                   help='constant list like 1,1,1 or JSON file {"fs": [[...], ...], "h": 1}')
    p.add_argument("--timing", action="store_true")
    p.add_argument("--check-invariants", action="store_true")
    p.set_defaults(func=cmd_multiway)

    p = sub.add_parser("verify", help="check a partition against budgets")
    p.add_argument("graph")
    p.add_argument("--partition", required=True, help="JSON report or {\"A\":..., \"B\":...}; - for stdin")
    _add_pair_budgets(p)
    p.add_argument("--multiway", help="p-way budgets (constant list or JSON file)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="exhaustive ground truth")
    osub = p.add_subparsers(dest="oracle_cmd", required=True)
    q = osub.add_parser("exists-feasible")
    q.add_argument("graph")
    _add_pair_budgets(q)
    q = osub.add_parser("check-meager")
    q.add_argument("graph")
    _add_set_budget(q)
    q = osub.add_parser("certify")
    q.add_argument("family", choices=FAMILIES)
    q.add_argument("t", type=int)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("check-meager", help="meagerness test by peeling")
    p.add_argument("graph")
    _add_set_budget(p)
    p.set_defaults(func=cmd_check_meager)

    p = sub.add_parser("nice-subset", help="maximal (or inclusion-minimal) nice subset")
    p.add_argument("graph")
    _add_set_budget(p)
    p.add_argument("--minimal", action="store_true")
    p.set_defaults(func=cmd_nice_subset)

    p = sub.add_parser("gen", help="emit a named or random graph")
    p.add_argument("family", choices=("tk3", "cubeH", "icosa", "random"))
    p.add_argument("--t", type=int, default=1, help="multiplicity scale for named graphs")
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--p", type=float, default=0.5, help="edge probability")
    p.add_argument("--max-mult", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--k4minus-free", action="store_true")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliFailure as exc:
        return _fail(exc.code, str(exc), exc.details)
    except ParseError as exc:
        return _fail(EXIT_PARSE, str(exc))
    except InvariantError as exc:
        return _fail(EXIT_INVARIANT, str(exc))
    except (InputError, MdpartError) as exc:
        return _fail(EXIT_PRECONDITION, str(exc))


def _fail(code: int, message: str, details: Optional[dict] = None) -> int:
    kind = {EXIT_PARSE: "parse", EXIT_PRECONDITION: "precondition", EXIT_INVARIANT: "invariant"}[code]
    _emit({"schema": SCHEMA, "status": "error", "kind": kind, "message": message, **(details or {})})
    print(f"mdpart: {kind} error: {message}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
