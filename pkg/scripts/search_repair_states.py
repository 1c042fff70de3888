#!/usr/bin/env python3
"""Hunt for stuck matchings on small interval graphs and check the repair.

A stuck state is a pair of dominating sets plus a minimum-cost matching
under which no matched token can slide along a shortest path to its match
without breaking domination.  For every state found, the matching repair is
applied and its postconditions are checked: cost preserved, still minimum
(against brute force), and some token can move afterwards.
"""

import argparse
import itertools
import random

import tokenslide as ts
from tokenslide.generators import random_interval_representation


def all_min_matchings(g, d_s, d_t):
    _, best = ts.min_cost_matching(g, d_s, d_t)
    if best is None:
        return
    left = [v for v, c in d_s.items() for _ in range(c)]
    right = [v for v, c in d_t.items() for _ in range(c)]
    dist = {v: ts.distances_from(g, v) for v in set(left)}
    seen = set()
    for perm in itertools.permutations(range(len(right))):
        cost = 0
        ok = True
        for i, j in enumerate(perm):
            d = dist[left[i]][right[j]]
            if d < 0:
                ok = False
                break
            cost += d
        if not ok or cost != best:
            continue
        pairs = {}
        for i, j in enumerate(perm):
            key = (left[i], right[j])
            pairs[key] = pairs.get(key, 0) + 1
        frozen = tuple(sorted(pairs.items()))
        if frozen not in seen:
            seen.add(frozen)
            yield ts.Matching(pairs)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seeds", type=int, default=500)
    parser.add_argument("--max-n", type=int, default=9)
    args = parser.parse_args()

    found = 0
    for seed in range(args.seeds):
        rng = random.Random(seed)
        n = rng.randrange(4, args.max_n + 1)
        rep = random_interval_representation(n, rng, connected=rng.random() < 0.7)
        g = ts.intersection_graph(rep)
        pred = ts.dominating_predicate(g)
        doms = [
            ts.TokenMultiset(comb)
            for k in (2, 3)
            for comb in itertools.combinations(range(n), k)
            if pred(ts.TokenMultiset(comb).support_mask)
        ]
        for d_s, d_t in itertools.permutations(doms, 2):
            if d_s.total != d_t.total:
                continue
            for m in all_min_matchings(g, d_s, d_t):
                m = ts.normalize_matching(g, m, d_s, d_t)
                if ts.find_greedy_move(g, d_s, d_t, m) is not None:
                    continue
                found += 1
                print(f"seed {seed}: intervals {rep.intervals}")
                print(f"  start {dict(d_s.items())}  target {dict(d_t.items())}")
                print(f"  stuck matching {m.items()}")
                repaired = ts.fix_matching(rep, g, d_s, d_t, m)
                assert ts.matching_cost(g, repaired) == ts.matching_cost(g, m)
                assert ts.matching_cost(g, repaired) == ts.brute_force_matching(g, d_s, d_t)
                move = ts.find_greedy_move(g, d_s, d_t, repaired)
                assert move is not None
                print(f"  repaired to {repaired.items()}; move {move} now available")
                break
            else:
                continue
            break
    print(f"\n{found} stuck states found and repaired across {args.seeds} seeds")


if __name__ == "__main__":
    main()
