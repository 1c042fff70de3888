"""Shortest dominating-set reconfiguration on interval graphs.

The solver keeps a minimum-cost matching between the two configurations and
repeatedly slides some token one step along a shortest path to its match,
provided the configuration stays dominating.  When no matched token can
move, the matching is repaired by swapping the partners of two pairs; the
repair never increases the cost and always re-enables a move, so every
emitted move lowers the matching bound by exactly one.
"""

from __future__ import annotations

import logging
from typing import Callable

from .errors import InputError, InvariantError
from .graphs import Graph, distances_from, require_dominating, require_same_size
from .intervals import IntervalRepresentation, intersection_graph
from .matching import Matching, min_cost_matching, normalize_matching
from .moves import MoveSequence, compress_moves
from .multiset import TokenMultiset

logger = logging.getLogger(__name__)

FixListener = Callable[[TokenMultiset, TokenMultiset, Matching], None]


def _closed_sets(g: Graph) -> list[frozenset[int]]:
    return [frozenset((v, *g.neighbors(v))) for v in range(g.n)]


def _coverage(g: Graph, counts: list[int]) -> list[int]:
    """Per-vertex number of support vertices in its closed neighborhood."""
    cover = [0] * g.n
    for v in range(g.n):
        if counts[v]:
            cover[v] += 1
            for w in g.neighbors(v):
                cover[w] += 1
    return cover


def _slide_keeps_dominating(
    closed: list[frozenset[int]],
    counts: list[int],
    cover: list[int],
    u: int,
    u2: int,
) -> bool:
    """Would moving one token u -> u2 keep a dominating configuration?

    Assumes the current configuration dominates.  Only vertices around u can
    lose coverage, and only when u's last token leaves, so the check is
    O(deg(u)).
    """
    if u == u2 or counts[u] >= 2:
        return True
    gains = counts[u2] == 0
    near_u2 = closed[u2]
    for w in closed[u]:
        if cover[w] == 1 and not (gains and w in near_u2):
            return False
    return True


def _apply_slide(
    closed: list[frozenset[int]],
    counts: list[int],
    cover: list[int],
    other: list[int],
    mismatch: int,
    u: int,
    u2: int,
) -> int:
    """Move one token u -> u2, maintaining coverage counts; returns new mismatch."""
    mismatch -= abs(counts[u] - other[u]) + abs(counts[u2] - other[u2])
    if counts[u] == 1:
        for w in closed[u]:
            cover[w] -= 1
    counts[u] -= 1
    if counts[u2] == 0:
        for w in closed[u2]:
            cover[w] += 1
    counts[u2] += 1
    mismatch += abs(counts[u] - other[u]) + abs(counts[u2] - other[u2])
    return mismatch


def find_greedy_move(
    g: Graph,
    d_s: TokenMultiset,
    d_t: TokenMultiset,
    m: Matching,
    dist: list[list[int]] | None = None,
) -> tuple[str, int, int, int] | None:
    """Reference scan for a feasibility-preserving slide along the matching.

    Scans matched pairs in increasing (source, target) order, source side
    first, successor candidates by increasing id.  Returns
    ("s", u, u_next, target) or ("t", v, v_next, source), or None when both
    sides are stuck.
    """
    n = g.n
    cs = [0] * n
    ct = [0] * n
    for v, c in d_s.items():
        cs[v] = c
    for v, c in d_t.items():
        ct[v] = c
    closed = _closed_sets(g)
    cover_s = _coverage(g, cs)
    cover_t = _coverage(g, ct)
    if dist is None:
        dist = [distances_from(g, v) for v in range(n)]
    ordered = sorted(m.pairs)
    for u, v in ordered:
        if u == v:
            continue
        row = dist[v]
        target = row[u] - 1
        for u2 in g.neighbors(u):
            if row[u2] == target and _slide_keeps_dominating(closed, cs, cover_s, u, u2):
                return ("s", u, u2, v)
    for u, v in ordered:
        if u == v:
            continue
        row = dist[u]
        target = row[v] - 1
        for v2 in g.neighbors(v):
            if row[v2] == target and _slide_keeps_dominating(closed, ct, cover_t, v, v2):
                return ("t", v, v2, u)
    return None


def fix_matching(
    rep: IntervalRepresentation,
    g: Graph,
    d_s: TokenMultiset,
    d_t: TokenMultiset,
    m: Matching,
    _dist: list[list[int]] | None = None,
) -> Matching:
    """Swap partners of two matched pairs so that a greedy slide exists.

    Intended for the stuck state in which no matched token can slide along
    a shortest path without breaking domination.  Let v be the vertex of
    the symmetric difference whose interval ends first; when v carries
    target-side surplus the problem is solved transposed.  Candidates y
    (target-side surplus, adjacent to v) are scanned by increasing right
    endpoint, and the first exchange
    ``(v, v'), (y', y)  ->  (v, y), (y', v')``
    that keeps the slide v -> y dominating without raising the matching
    cost is applied.  Such an exchange always exists here; failing to find
    one is reported as an internal invariant violation.
    """
    if d_s == d_t:
        raise InputError("configurations are already equal; nothing to repair")
    m = normalize_matching(g, m, d_s, d_t)
    sym = d_s.symmetric_difference(d_t)
    v = min(sym.support, key=rep.right)
    if d_t.count(v) > d_s.count(v):
        flipped = fix_matching(rep, g, d_t, d_s, m.inverse(), _dist=_dist)
        return flipped.inverse()

    require_dominating(g, d_s, "source")
    if _dist is not None:
        def d(x: int, y: int) -> int:
            return _dist[x][y]
    else:
        rows: dict[int, list[int]] = {}

        def d(x: int, y: int) -> int:
            if x not in rows:
                rows[x] = distances_from(g, x)
            return rows[x][y]

    n = g.n
    cs = [0] * n
    for x, c in d_s.items():
        cs[x] = c
    closed = _closed_sets(g)
    cover = _coverage(g, cs)
    surplus = d_t.difference(d_s)
    for y in sorted(surplus.support, key=rep.right):
        if not g.has_edge(v, y):
            continue
        if not _slide_keeps_dominating(closed, cs, cover, v, y):
            continue
        for v2, _ in m.matches_of(v):
            if v2 == v:
                continue
            for y2, _ in m.matches_to(y):
                if y2 == y:
                    continue
                gap = 1 + d(y2, v2) - d(v, v2) - d(y2, y)
                if d(y2, v2) < 0 or d(v, v2) < 0 or d(y2, y) < 0:
                    continue
                if gap <= 0:
                    pairs = m.pairs
                    for key in ((v, v2), (y2, y)):
                        pairs[key] -= 1
                        if not pairs[key]:
                            del pairs[key]
                    for key in ((v, y), (y2, v2)):
                        pairs[key] = pairs.get(key, 0) + 1
                    logger.debug(
                        "repair: v=%d y=%d swapped partners v'=%d y'=%d", v, y, v2, y2
                    )
                    return normalize_matching(g, Matching(pairs), d_s, d_t)
    raise InvariantError(
        "no cost-preserving repair found; the matching was not minimum or a move existed"
    )


def reconf_interval(
    rep: IntervalRepresentation,
    d_s: TokenMultiset,
    d_t: TokenMultiset,
    on_fix: FixListener | None = None,
) -> MoveSequence | None:
    """Shortest move sequence between two dominating multisets, or None when
    tokens would have to cross between components.

    The sequence length always equals the minimum-cost matching bound.
    ``on_fix`` is a diagnostics hook called with (d_s, d_t, repaired
    matching) after every matching repair.
    """
    g = intersection_graph(rep)
    require_same_size(d_s, d_t)
    require_dominating(g, d_s, "start")
    require_dominating(g, d_t, "target")
    if d_s == d_t:
        return MoveSequence(())
    m, cost = min_cost_matching(g, d_s, d_t)
    if cost is None:
        return None
    m = normalize_matching(g, m, d_s, d_t)

    n = g.n
    dist = [distances_from(g, v) for v in range(n)]
    closed = _closed_sets(g)
    cs = [0] * n
    ct = [0] * n
    for x, c in d_s.items():
        cs[x] = c
    for x, c in d_t.items():
        ct[x] = c
    cover_s = _coverage(g, cs)
    cover_t = _coverage(g, ct)
    mismatch = sum(abs(cs[x] - ct[x]) for x in range(n))
    pairs = m.pairs
    succ_cache: dict[tuple[int, int], tuple[int, ...]] = {}

    def succ(u: int, v: int) -> tuple[int, ...]:
        got = succ_cache.get((u, v))
        if got is None:
            row = dist[v]
            tgt = row[u] - 1
            got = tuple(w for w in g.neighbors(u) if row[w] == tgt)
            succ_cache[(u, v)] = got
        return got

    front: list[tuple[int, int]] = []
    back: list[tuple[int, int]] = []
    emitted = 0
    repairs_without_progress = 0
    while mismatch:
        found = None
        for u, v in sorted(pairs):
            if u == v:
                continue
            for u2 in succ(u, v):
                if _slide_keeps_dominating(closed, cs, cover_s, u, u2):
                    found = ("s", u, u2, v)
                    break
            if found:
                break
        if found is None:
            for u, v in sorted(pairs):
                if u == v:
                    continue
                for v2 in succ(v, u):
                    if _slide_keeps_dominating(closed, ct, cover_t, v, v2):
                        found = ("t", v, v2, u)
                        break
                if found:
                    break
        if found is not None:
            repairs_without_progress = 0
            side, a, a2, other = found
            logger.debug("move %d: side=%s %d->%d toward %d", emitted, side, a, a2, other)
            if side == "s":
                front.append((a, a2))
                mismatch = _apply_slide(closed, cs, cover_s, ct, mismatch, a, a2)
                old, new = (a, other), (a2, other)
            else:
                back.append((a2, a))
                mismatch = _apply_slide(closed, ct, cover_t, cs, mismatch, a, a2)
                old, new = (other, a), (other, a2)
            pairs[old] -= 1
            if not pairs[old]:
                del pairs[old]
            pairs[new] = pairs.get(new, 0) + 1
            emitted += 1
            if emitted > cost:
                raise InvariantError("emitted more moves than the matching bound allows")
            continue
        if repairs_without_progress:
            raise InvariantError("matching repair did not enable a move")
        cur_s = TokenMultiset.from_counts_list(cs)
        cur_t = TokenMultiset.from_counts_list(ct)
        repaired = fix_matching(rep, g, cur_s, cur_t, Matching(pairs), _dist=dist)
        if on_fix is not None:
            on_fix(cur_s, cur_t, repaired)
        pairs = repaired.pairs
        repairs_without_progress += 1
    if emitted != cost:
        raise InvariantError(f"emitted {emitted} moves but the matching bound is {cost}")
    return compress_moves(front + back[::-1])
