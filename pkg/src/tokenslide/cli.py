"""Command-line front end.

Exit codes: 0 success, 1 invalid input, 2 infeasible / unreachable / failed
verification.  Set REC_LOG=debug for trace logging of greedy scans and
matching repairs.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
import time

from .errors import FeasibilityError, InputError, StateCapExceeded
from .graphs import RootedTree
from .generators import gen_bench_interval_instance, gen_instance, heavy_path_instance
from .instances import Instance, emit_instance, emit_moves, parse_instance, parse_moves
from .interval_reconfig import reconf_interval
from .matching import fast_match_intervals, min_cost_matching
from .moves import MoveSequence
from .multiset import TokenMultiset
from .oracle import (
    DEFAULT_STATE_CAP,
    dominating_predicate,
    independent_set_predicate,
    reconfig_distance_bfs,
    verify_sequence,
)
from .tree_reconfig import reconf_tree_dominating

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_INFEASIBLE = 2


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def _load_instance(path: str) -> Instance:
    return parse_instance(_read(path))


def _solve_instance(inst: Instance, root: int) -> MoveSequence | None:
    if inst.kind == "tree":
        tree = RootedTree(inst.graph, root)
        return reconf_tree_dominating(tree, inst.d_s, inst.d_t)
    if inst.kind == "intervals":
        assert inst.rep is not None
        return reconf_interval(inst.rep, inst.d_s, inst.d_t)
    raise InputError("solve supports tree and intervals instances; use 'oracle' for graphs")


def _cmd_solve(args: argparse.Namespace) -> int:
    inst = _load_instance(args.file)
    seq = _solve_instance(inst, args.root)
    if seq is None:
        print("unreachable")
        return EXIT_INFEASIBLE
    sys.stdout.write(emit_moves(list(seq.moves), seq.total_length))
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    inst = _load_instance(args.file)
    _, triples = parse_moves(_read(args.moves))
    seq = MoveSequence(triples)
    pred = dominating_predicate(inst.graph)
    ok, final, failure = verify_sequence(inst.graph, pred, inst.d_s, seq)
    if not ok:
        print(f"invalid: {failure}")
        return EXIT_INFEASIBLE
    if final != inst.d_t:
        print("invalid: sequence does not end in the target configuration")
        return EXIT_INFEASIBLE
    if args.optimal:
        try:
            d = reconfig_distance_bfs(inst.graph, pred, inst.d_s, inst.d_t, cap=args.cap)
        except StateCapExceeded:
            print(f"undecided: more than {args.cap} configurations visited")
            return EXIT_INFEASIBLE
        if d != seq.total_length:
            print(f"suboptimal: sequence has {seq.total_length} moves, optimum is {d}")
            return EXIT_INFEASIBLE
        _, cost = min_cost_matching(inst.graph, inst.d_s, inst.d_t)
        if cost != seq.total_length:
            print(f"suboptimal: matching bound {cost} differs from length {seq.total_length}")
            return EXIT_INFEASIBLE
        print(f"valid optimal ({seq.total_length} moves)")
    else:
        print(f"valid ({seq.total_length} moves)")
    return EXIT_OK


def _config_label(tokens: TokenMultiset) -> str:
    parts = []
    for v, c in tokens.items():
        parts.extend([str(v)] * c)
    return ",".join(parts)


def _emit_dot(inst: Instance, pred, cap: int) -> None:
    """DOT drawing of the reachable component around the start configuration."""
    from collections import deque

    start = inst.d_s
    adj = inst.graph.adjacency
    seen = {start.key(): start}
    frontier = deque([start])
    edges = set()
    while frontier:
        cur = frontier.popleft()
        counts = dict(cur.items())
        for v in list(counts):
            for w in adj[v]:
                nxt = cur.slide(v, w)
                if not pred(nxt.support_mask):
                    continue
                a, b = sorted((cur.key(), nxt.key()))
                edges.add((a, b))
                if nxt.key() not in seen and len(seen) < cap:
                    seen[nxt.key()] = nxt
                    frontier.append(nxt)
    print("graph reconfiguration {")
    for key, tokens in sorted(seen.items()):
        label = _config_label(tokens)
        shape = ""
        if tokens == inst.d_s:
            shape = ", shape=box"
        elif tokens == inst.d_t:
            shape = ", shape=doublecircle"
        print(f'  "{label}" [label="{label}"{shape}];')
    for a, b in sorted(edges):
        if a in seen and b in seen:
            print(f'  "{_config_label(seen[a])}" -- "{_config_label(seen[b])}";')
    print("}")


def _cmd_oracle(args: argparse.Namespace) -> int:
    inst = _load_instance(args.file)
    if args.pred == "dominating":
        pred = dominating_predicate(inst.graph)
    else:
        pred = independent_set_predicate(inst.graph)
    if args.dot:
        _emit_dot(inst, pred, args.cap)
        return EXIT_OK
    try:
        d = reconfig_distance_bfs(inst.graph, pred, inst.d_s, inst.d_t, cap=args.cap)
    except StateCapExceeded:
        print(f"undecided: more than {args.cap} configurations visited")
        return EXIT_INFEASIBLE
    if d is None:
        print("unreachable")
        return EXIT_INFEASIBLE
    print(d)
    return EXIT_OK


def _cmd_gen(args: argparse.Namespace) -> int:
    inst = gen_instance(args.kind, args.n, args.k, args.seed)
    sys.stdout.write(emit_instance(inst))
    return EXIT_OK


def _cmd_match(args: argparse.Namespace) -> int:
    inst = _load_instance(args.file)
    if args.fast:
        if inst.kind != "intervals":
            raise InputError("--fast requires an intervals instance")
        assert inst.rep is not None
        m, cost = fast_match_intervals(inst.rep, inst.d_s, inst.d_t)
    else:
        m, cost = min_cost_matching(inst.graph, inst.d_s, inst.d_t)
    if cost is None or m is None:
        print("unreachable")
        return EXIT_INFEASIBLE
    print(f"cost {cost}")
    for (u, v), c in m.items():
        print(f"{u} {v} {c}")
    return EXIT_OK


def _bench_tree_point(n: int) -> tuple[int, float]:
    # heavy path traffic: quadratically many unit moves, linearly many triples
    graph, d_s, d_t = heavy_path_instance(n, max(1, n // 10))
    tree = RootedTree(graph, 0)
    t0 = time.perf_counter()
    seq = reconf_tree_dominating(tree, d_s, d_t)
    elapsed = time.perf_counter() - t0
    return seq.total_length, elapsed * 1000.0


def _bench_interval_point(n: int, seed: int) -> tuple[int, float]:
    inst = gen_bench_interval_instance(n, seed)
    assert inst.rep is not None
    t0 = time.perf_counter()
    seq = reconf_interval(inst.rep, inst.d_s, inst.d_t)
    elapsed = time.perf_counter() - t0
    return (seq.total_length if seq is not None else -1), elapsed * 1000.0


def _cmd_bench(args: argparse.Namespace) -> int:
    sizes = []
    for part in args.sizes.split(","):
        part = part.strip()
        if part:
            try:
                sizes.append(int(part))
            except ValueError:
                raise InputError(f"bad size {part!r}") from None
    if not sizes:
        raise InputError("no sizes given")
    print("n,total_moves,wall_ms")
    for n in sizes:
        if args.kind == "tree":
            total, ms = _bench_tree_point(n)
        else:
            total, ms = _bench_interval_point(n, args.seed + n)
        print(f"{n},{total},{ms:.2f}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tokenslide",
        description="Shortest token-sliding reconfiguration of dominating sets "
        "on trees and interval graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="compute a shortest reconfiguration sequence")
    p.add_argument("file")
    p.add_argument("--root", type=int, default=0, help="tree root (default 0)")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("verify", help="check a move sequence against an instance")
    p.add_argument("file")
    p.add_argument("moves")
    p.add_argument("--optimal", action="store_true", help="also certify optimality by BFS")
    p.add_argument("--cap", type=int, default=DEFAULT_STATE_CAP)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("oracle", help="exact reconfiguration distance by exhaustive BFS")
    p.add_argument("file")
    p.add_argument("--pred", choices=("dominating", "independent"), default="dominating")
    p.add_argument("--cap", type=int, default=DEFAULT_STATE_CAP)
    p.add_argument("--dot", action="store_true", help="emit the reachable component as DOT")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("gen", help="generate a random feasible instance")
    p.add_argument("--kind", choices=("tree", "interval"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("match", help="minimum-cost matching between the token sets")
    p.add_argument("file")
    p.add_argument("--fast", action="store_true", help="greedy interval matcher")
    p.set_defaults(func=_cmd_match)

    p = sub.add_parser("bench", help="CSV timing ladder")
    p.add_argument("--kind", choices=("tree", "interval"), required=True)
    p.add_argument("--sizes", required=True, help="comma-separated vertex counts")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    if os.environ.get("REC_LOG", "").lower() == "debug":
        logging.basicConfig(level=logging.DEBUG, format="%(name)s: %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FeasibilityError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
