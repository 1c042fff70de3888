#!/usr/bin/env python3
"""Timing ladders for the two solvers and the greedy interval matcher.

Prints three CSV tables: heavy path-tree instances (quadratically many unit
moves, linear solve time), random interval instances, and the interval
matcher at growing sizes.
"""

import argparse
import random
import time

import tokenslide as ts
from tokenslide.generators import (
    gen_bench_interval_instance,
    heavy_path_instance,
    random_interval_representation,
)


def bench_trees(sizes):
    print("# tree solver on heavy path instances")
    print("n,unit_moves,triples,wall_ms")
    for n in sizes:
        graph, d_s, d_t = heavy_path_instance(n, max(1, n // 10))
        tree = ts.RootedTree(graph, 0)
        t0 = time.perf_counter()
        seq = ts.reconf_tree_dominating(tree, d_s, d_t)
        ms = (time.perf_counter() - t0) * 1000
        print(f"{n},{seq.total_length},{len(seq.moves)},{ms:.2f}")


def bench_intervals(sizes, seed):
    print("# interval solver on random instances")
    print("n,tokens,moves,wall_ms")
    for n in sizes:
        inst = gen_bench_interval_instance(n, seed + n)
        t0 = time.perf_counter()
        seq = ts.reconf_interval(inst.rep, inst.d_s, inst.d_t)
        ms = (time.perf_counter() - t0) * 1000
        moves = seq.total_length if seq is not None else -1
        print(f"{n},{inst.d_s.total},{moves},{ms:.2f}")


def bench_matcher(sizes, seed):
    print("# greedy interval matcher, tokens on a twentieth of the vertices")
    print("n,cost,wall_ms")
    for n in sizes:
        rng = random.Random(seed + n)
        rep = random_interval_representation(n, rng, connected=True)
        verts = list(range(n))
        rng.shuffle(verts)
        k = max(1, n // 20)
        a = ts.TokenMultiset(verts[:k])
        b = ts.TokenMultiset(verts[k : 2 * k])
        t0 = time.perf_counter()
        _, cost = ts.fast_match_intervals(rep, a, b)
        ms = (time.perf_counter() - t0) * 1000
        print(f"{n},{cost},{ms:.2f}")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    bench_trees([10_000, 30_000, 100_000])
    print()
    bench_intervals([50, 100, 200], args.seed)
    print()
    bench_matcher([10_000, 30_000, 100_000], args.seed)


if __name__ == "__main__":
    main()
