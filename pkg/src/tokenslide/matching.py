"""Minimum-cost matchings between equal-size token multisets under graph distance.

The exact solver expands multiplicities into unit tokens, prices them with
BFS distances and hands the square assignment problem to scipy's shortest
augmenting path solver.  A factorial brute-force oracle and a near-linear
greedy matcher for interval representations live alongside it.
"""

from __future__ import annotations

import itertools
from array import array
from collections import Counter
from collections.abc import Mapping
from heapq import heappop, heappush

import numpy as np
from scipy.optimize import linear_sum_assignment

from .errors import InputError, InvariantError, MatchingError
from .graphs import UNREACHABLE, Graph, distances_from, require_same_size, succ_set
from .intervals import IntervalRepresentation
from .multiset import TokenMultiset

#: Largest token count accepted by the brute-force oracle.
BRUTE_FORCE_CAP = 8


class Matching:
    """Multiset of ordered (source, target) vertex pairs with multiplicities."""

    __slots__ = ("_pairs", "total")

    def __init__(self, pairs: Mapping[tuple[int, int], int] = ()):
        cleaned: dict[tuple[int, int], int] = {}
        items = pairs.items() if isinstance(pairs, Mapping) else pairs
        for (u, v), c in items:
            if c < 0:
                raise MatchingError(f"negative multiplicity {c} for pair ({u}, {v})")
            if c:
                cleaned[(u, v)] = cleaned.get((u, v), 0) + c
        self._pairs = cleaned
        self.total = sum(cleaned.values())

    def multiplicity(self, u: int, v: int) -> int:
        return self._pairs.get((u, v), 0)

    def items(self) -> list[tuple[tuple[int, int], int]]:
        return sorted(self._pairs.items())

    @property
    def pairs(self) -> dict[tuple[int, int], int]:
        return dict(self._pairs)

    def matches_of(self, u: int) -> list[tuple[int, int]]:
        """Targets matched to source u as sorted (vertex, multiplicity) pairs."""
        return sorted((v, c) for (s, v), c in self._pairs.items() if s == u)

    def matches_to(self, v: int) -> list[tuple[int, int]]:
        """Sources matched to target v as sorted (vertex, multiplicity) pairs."""
        return sorted((u, c) for (u, t), c in self._pairs.items() if t == v)

    def inverse(self) -> "Matching":
        return Matching({(v, u): c for (u, v), c in self._pairs.items()})

    def validate_between(self, a: TokenMultiset, b: TokenMultiset) -> None:
        """Check row/column sums equal the multiset multiplicities."""
        left: Counter[int] = Counter()
        right: Counter[int] = Counter()
        for (u, v), c in self._pairs.items():
            left[u] += c
            right[v] += c
        if dict(left) != dict(a.items()):
            raise MatchingError("source marginals do not match the left multiset")
        if dict(right) != dict(b.items()):
            raise MatchingError("target marginals do not match the right multiset")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matching):
            return NotImplemented
        return self._pairs == other._pairs

    def __repr__(self) -> str:
        return f"Matching({self.items()!r})"


def matching_cost(g: Graph, m: Matching) -> int | None:
    """Sum of graph distances weighted by multiplicities; None if any pair is split across components."""
    dists: dict[int, list[int]] = {}
    total = 0
    for (u, v), c in m.items():
        if u not in dists:
            dists[u] = distances_from(g, u)
        d = dists[u][v]
        if d == UNREACHABLE:
            return None
        total += d * c
    return total


def _expand(tokens: TokenMultiset) -> list[int]:
    out = []
    for v, c in tokens.items():
        out.extend([v] * c)
    return out


def min_cost_matching(
    g: Graph, a: TokenMultiset, b: TokenMultiset
) -> tuple[Matching | None, int | None]:
    """Cheapest matching between a and b under graph distance.

    Returns (matching, cost); (None, None) when no finite-cost matching
    exists because matched tokens would have to cross components.
    """
    require_same_size(a, b)
    if a.total == 0:
        return Matching(), 0
    left = _expand(a)
    right = _expand(b)
    k = len(left)
    dist_rows = {v: distances_from(g, v) for v in a.support}
    # any value above the largest possible finite total makes the solver
    # avoid unreachable pairs whenever a finite assignment exists
    big = k * max(g.n, 1) + 1
    cost = np.empty((k, k), dtype=np.int64)
    for i, u in enumerate(left):
        row = dist_rows[u]
        for j, v in enumerate(right):
            d = row[v]
            cost[i, j] = big if d == UNREACHABLE else d
    rows, cols = linear_sum_assignment(cost)
    pairs: Counter[tuple[int, int]] = Counter()
    total = 0
    for i, j in zip(rows, cols):
        d = dist_rows[left[i]][right[j]]
        if d == UNREACHABLE:
            return None, None
        total += d
        pairs[(left[i], right[j])] += 1
    return Matching(pairs), total


def brute_force_matching(g: Graph, a: TokenMultiset, b: TokenMultiset) -> int | None:
    """Exact minimum cost by enumerating every bijection between token expansions.

    Independent of the assignment solver on purpose; capped at
    BRUTE_FORCE_CAP tokens.
    """
    require_same_size(a, b)
    k = a.total
    if k > BRUTE_FORCE_CAP:
        raise InputError(f"brute force capped at {BRUTE_FORCE_CAP} tokens, got {k}")
    if k == 0:
        return 0
    left = _expand(a)
    right = _expand(b)
    dist_rows = {v: distances_from(g, v) for v in a.support}
    table = [[dist_rows[u][v] for v in right] for u in left]
    best: int | None = None
    for perm in itertools.permutations(range(k)):
        total = 0
        for i, j in enumerate(perm):
            d = table[i][j]
            if d == UNREACHABLE:
                total = -1
                break
            total += d
        if total >= 0 and (best is None or total < best):
            best = total
    return best


def normalize_matching(
    g: Graph, m: Matching, a: TokenMultiset, b: TokenMultiset
) -> Matching:
    """Rewire m so every vertex in a ∩ b is fully self-matched.

    Repeatedly swaps (x, v), (v, y) for (v, v), (x, y); by the triangle
    inequality this never increases the cost, so a minimum-cost input stays
    minimum-cost.
    """
    m.validate_between(a, b)
    pairs = m.pairs
    inter = a.intersection(b)
    for v, want in inter.items():
        while pairs.get((v, v), 0) < want:
            x = min(u for (u, t) in pairs if t == v and u != v)
            y = min(t for (u, t) in pairs if u == v and t != v)
            for key in ((x, v), (v, y)):
                pairs[key] -= 1
                if not pairs[key]:
                    del pairs[key]
            pairs[(v, v)] = pairs.get((v, v), 0) + 1
            pairs[(x, y)] = pairs.get((x, y), 0) + 1
    return Matching(pairs)


def rematch_after_slide(g: Graph, m: Matching, u: int, u_next: int, target: int) -> Matching:
    """Replace one (u, target) pair by (u_next, target) after sliding u one step closer.

    u_next must be a neighbor of u on a shortest u-target path, which is
    exactly what makes the new matching cost one less.
    """
    if m.multiplicity(u, target) < 1:
        raise MatchingError(f"pair ({u}, {target}) is not in the matching")
    if u_next not in succ_set(g, u, target):
        raise MatchingError(f"{u_next} is not on a shortest path from {u} to {target}")
    pairs = m.pairs
    pairs[(u, target)] -= 1
    if not pairs[(u, target)]:
        del pairs[(u, target)]
    pairs[(u_next, target)] = pairs.get((u_next, target), 0) + 1
    return Matching(pairs)


def succ_toward_matches(g: Graph, m: Matching, u: int) -> tuple[int, ...]:
    """Neighbors of u on shortest paths toward any of its non-self matches."""
    out: set[int] = set()
    for v, _ in m.matches_of(u):
        if v != u:
            out.update(succ_set(g, u, v))
    return tuple(sorted(out))


# ---------------------------------------------------------------------------
# Greedy sweep matcher on interval representations
# ---------------------------------------------------------------------------


def _drain_match(
    left_recs: list[list[int]],
    right_recs: list[list[int]],
    amount: int,
    packed_pairs: Counter,
    n: int,
) -> None:
    """Pair off `amount` tokens from the tails of the two record stacks."""
    while amount:
        la = left_recs[-1]
        lb = right_recs[-1]
        take = min(amount, la[1], lb[1])
        packed_pairs[la[0] * n + lb[0]] += take
        la[1] -= take
        lb[1] -= take
        if not la[1]:
            left_recs.pop()
        if not lb[1]:
            right_recs.pop()
        amount -= take


def fast_match_intervals(
    rep: IntervalRepresentation, a: TokenMultiset, b: TokenMultiset
) -> tuple[Matching | None, int | None]:
    """Greedy minimum matching working directly on the representation.

    Shared tokens are stripped into zero-cost self-pairs first.  The rest is
    an event-driven sweep by increasing endpoint: a token pile that sees an
    opposite token on an adjacent vertex matches the one whose interval ends
    first, otherwise the whole pile slides to the neighbor reaching furthest
    right.  All per-vertex precomputation is vectorized, so the interpreted
    work is proportional to the number of tokens and slides, not to n.
    Returns (None, None) when some token can never reach the other side.
    """
    require_same_size(a, b)
    n = rep.n
    inter = a.intersection(b)
    rem_a = a.difference(b)
    rem_b = b.difference(a)
    remaining = rem_a.total
    if remaining == 0:
        return Matching({(v, v): c for v, c in inter._counts.items()}), 0
    for v in rem_a.support | rem_b.support:
        if not 0 <= v < n:
            raise InputError(f"token on vertex {v} outside the representation")

    right = rep.rights
    left = rep.lefts
    l_arr, r_arr = rep.endpoint_arrays()
    by_left = np.argsort(l_arr, kind="stable").astype(np.int32)
    lefts_sorted = l_arr[by_left]
    # best and second-best right endpoint over every prefix of the
    # left-sorted order; lets any vertex look up its furthest-right
    # neighbor (excluding itself) in O(log n)
    vals = r_arr[by_left]
    positions = np.arange(n, dtype=by_left.dtype)
    best_val = np.maximum.accumulate(vals)
    best_pos = np.maximum.accumulate(np.where(vals == best_val, positions, 0))
    best_vtx = by_left[best_pos]
    prev_best = np.empty(n, dtype=vals.dtype)
    prev_best[0] = -1
    prev_best[1:] = best_val[:-1]
    prev_best_vtx = np.empty(n, dtype=by_left.dtype)
    prev_best_vtx[0] = 0
    prev_best_vtx[1:] = best_vtx[:-1]
    contrib = np.minimum(vals, prev_best)
    second_val = np.maximum.accumulate(contrib)
    cand_vtx = np.where(vals < prev_best, by_left, prev_best_vtx)
    second_pos = np.maximum.accumulate(np.where(contrib >= second_val, positions, 0))
    second_vtx = cand_vtx[second_pos]
    searchsorted = lefts_sorted.searchsorted

    def slide_target(v: int, p: int) -> tuple[int, int]:
        """Neighbor of v with the largest right endpoint, as (vertex, right)."""
        j = int(searchsorted(p)) - 1  # all intervals with left end before p
        w, wr = int(best_vtx[j]), int(best_val[j])
        if w == v:
            w, wr = int(second_vtx[j]), int(second_val[j])
        return w, wr

    # events and heap entries are packed as coord * n + vertex, and matched
    # pairs as source * n + target: plain-int heaps, sorts and dict keys are
    # far cheaper than tuple ones, and coords are pairwise distinct so the
    # packed ordering is unchanged
    packed_pairs: Counter[int] = Counter()
    for v, c in inter._counts.items():
        packed_pairs[v * n + v] = c
    cur = (array("i", bytes(4 * n)), array("i", bytes(4 * n)))
    recs: tuple[dict[int, list[list[int]]], dict[int, list[list[int]]]] = ({}, {})
    scheduled: set[int] = set()
    proc_static: list[int] = []
    acts: tuple[list[int], list[int]] = ([], [])
    for side, ms in ((0, rem_a), (1, rem_b)):
        curd = cur[side]
        recd = recs[side]
        actd = acts[side]
        for v, c in ms._counts.items():
            curd[v] = c
            recd[v] = [[v, c]]
            actd.append(left[v] * n + v)
            if v not in scheduled:
                scheduled.add(v)
                proc_static.append(right[v] * n + v)
    proc_static.sort()
    acts[0].sort()
    acts[1].sort()
    proc_dynamic: list[int] = []  # arrivals of slid piles

    cur0, cur1 = cur
    acts0, acts1 = acts
    na0, na1 = len(acts0), len(acts1)
    active0: list[int] = []
    active1: list[int] = []
    a0 = a1 = 0
    sp = 0
    n_static = len(proc_static)
    total = 0
    while remaining:
        if proc_dynamic and (sp >= n_static or proc_dynamic[0] < proc_static[sp]):
            key = heappop(proc_dynamic)
        elif sp < n_static:
            key = proc_static[sp]
            sp += 1
        else:
            break
        p, v = divmod(key, n)
        pn = key - v  # p * n, for packed comparisons
        # activate token vertices whose interval has started before p
        while a0 < na0 and acts0[a0] < pn:
            x = acts0[a0] % n
            a0 += 1
            if cur0[x]:
                heappush(active0, right[x] * n + x)
        while a1 < na1 and acts1[a1] < pn:
            x = acts1[a1] % n
            a1 += 1
            if cur1[x]:
                heappush(active1, right[x] * n + x)
        c0 = cur0[v]
        c1 = cur1[v]
        if not (c0 or c1):
            continue
        if c0 and c1:
            # opposite piles met on the same vertex: match at distance zero
            met = c0 if c0 < c1 else c1
            _drain_match(recs[0][v], recs[1][v], met, packed_pairs, n)
            cur0[v] = c0 = c0 - met
            cur1[v] = c1 = c1 - met
            remaining -= met
        for side in (0, 1):
            cnt = c0 if side == 0 else c1
            if not cnt:
                continue
            own = cur0 if side == 0 else cur1
            opp = cur1 if side == 0 else cur0
            heap = active1 if side == 0 else active0
            while cnt:
                while heap and not opp[heap[0] % n]:
                    heappop(heap)
                if heap:
                    x = heap[0] % n
                    cx = opp[x]
                    met = cnt if cnt < cx else cx
                    if side == 0:
                        _drain_match(recs[0][v], recs[1][x], met, packed_pairs, n)
                    else:
                        _drain_match(recs[0][x], recs[1][v], met, packed_pairs, n)
                    total += met  # matched across one edge
                    opp[x] = cx - met
                    remaining -= met
                    cnt -= met
                else:
                    w, wr = slide_target(v, p)
                    if wr < p:
                        return None, None  # stranded in a component with no partner
                    total += cnt
                    if own[w]:
                        dst = recs[side][w]
                        src = recs[side][v]
                        if len(dst) < len(src):
                            src, dst = dst, src
                            recs[side][w] = dst
                        dst.extend(src)
                        own[w] += cnt
                    else:
                        recs[side][w] = recs[side][v]
                        own[w] = cnt
                        heappush(active0 if side == 0 else active1, wr * n + w)
                    recs[side][v] = []
                    if w not in scheduled:
                        scheduled.add(w)
                        heappush(proc_dynamic, wr * n + w)
                    cnt = 0
            own[v] = 0
    if remaining:
        raise InvariantError("sweep finished with unmatched tokens")
    return Matching((divmod(key, n), c) for key, c in packed_pairs.items()), total
