"""Interval representations, pairwise relations and the derived graph."""

from __future__ import annotations

import enum
from bisect import bisect_left, bisect_right
from collections.abc import Iterable, Sequence

from .errors import InputError, InvariantError
from .graphs import Graph, distances_from

# Full pairwise re-verification after endpoint normalization is quadratic;
# above this size only the O(n log n) degree check runs.
_PAIRWISE_VERIFY_LIMIT = 500


class IntervalRepresentation:
    """Per-vertex closed intervals with pairwise-distinct integer endpoints."""

    __slots__ = ("_left", "_right", "_arrays")

    def __init__(self, intervals: Iterable[tuple[int, int]]):
        left = []
        right = []
        for i, (lo, hi) in enumerate(intervals):
            if lo >= hi:
                raise InputError(f"interval {i} is [{lo}, {hi}]; endpoints must satisfy l < r")
            left.append(lo)
            right.append(hi)
        endpoints = left + right
        if len(set(endpoints)) != len(endpoints):
            raise InputError("interval endpoints must be pairwise distinct")
        self._left = tuple(left)
        self._right = tuple(right)
        self._arrays = None

    def endpoint_arrays(self):
        """(lefts, rights) as numpy arrays, built once on demand; int32 when
        the coordinates allow it (halves the memory traffic of sweeps)."""
        import numpy as np

        if self._arrays is None:
            lefts = np.asarray(self._left, dtype=np.int64)
            rights = np.asarray(self._right, dtype=np.int64)
            lo = min(int(lefts.min()), -1) if len(self._left) else -1
            hi = int(rights.max()) if len(self._left) else 1
            if np.iinfo(np.int32).min < lo and hi < np.iinfo(np.int32).max:
                lefts = lefts.astype(np.int32)
                rights = rights.astype(np.int32)
            self._arrays = (lefts, rights)
        return self._arrays

    @property
    def n(self) -> int:
        return len(self._left)

    def left(self, v: int) -> int:
        return self._left[v]

    def right(self, v: int) -> int:
        return self._right[v]

    @property
    def lefts(self) -> tuple[int, ...]:
        return self._left

    @property
    def rights(self) -> tuple[int, ...]:
        return self._right

    @property
    def intervals(self) -> tuple[tuple[int, int], ...]:
        return tuple(zip(self._left, self._right))

    def intersects(self, u: int, v: int) -> bool:
        return self._left[u] < self._right[v] and self._left[v] < self._right[u]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntervalRepresentation):
            return NotImplemented
        return self._left == other._left and self._right == other._right

    def __repr__(self) -> str:
        return f"IntervalRepresentation(n={self.n})"


class Relation(enum.Enum):
    """How one interval sits relative to another; exactly one holds per pair."""

    LEFT_OF = "left_of"
    RIGHT_OF = "right_of"
    NESTED_IN = "nested_in"
    CONTAINS = "contains"
    LEFT_INTERSECTS = "left_intersects"
    RIGHT_INTERSECTS = "right_intersects"

    @property
    def mirror(self) -> "Relation":
        return _MIRROR[self]


_MIRROR = {
    Relation.LEFT_OF: Relation.RIGHT_OF,
    Relation.RIGHT_OF: Relation.LEFT_OF,
    Relation.NESTED_IN: Relation.CONTAINS,
    Relation.CONTAINS: Relation.NESTED_IN,
    Relation.LEFT_INTERSECTS: Relation.RIGHT_INTERSECTS,
    Relation.RIGHT_INTERSECTS: Relation.LEFT_INTERSECTS,
}


def classify_relation(rep: IntervalRepresentation, u: int, v: int) -> Relation:
    """Classify the ordered pair (u, v); u == v is rejected."""
    if u == v:
        raise InputError("cannot classify an interval against itself")
    lu, ru = rep.left(u), rep.right(u)
    lv, rv = rep.left(v), rep.right(v)
    if ru < lv:
        return Relation.LEFT_OF
    if rv < lu:
        return Relation.RIGHT_OF
    if lv < lu and ru < rv:
        return Relation.NESTED_IN
    if lu < lv and rv < ru:
        return Relation.CONTAINS
    if lu < lv < ru < rv:
        return Relation.LEFT_INTERSECTS
    return Relation.RIGHT_INTERSECTS


def _raw_closed_intersects(a: tuple[int, int], b: tuple[int, int]) -> bool:
    return a[0] <= b[1] and b[0] <= a[1]


def normalize_representation(raw: Sequence[tuple[int, int]]) -> IntervalRepresentation:
    """Rank-compress endpoints to 1..2n while preserving closed intersections.

    Coincident raw coordinates are ordered left endpoints first (so touching
    closed intervals stay adjacent), ties within a kind by vertex id.  Point
    intervals are allowed in the raw input.
    """
    for i, (lo, hi) in enumerate(raw):
        if lo > hi:
            raise InputError(f"interval {i} is [{lo}, {hi}]; endpoints must satisfy l <= r")
    events = []
    for i, (lo, hi) in enumerate(raw):
        events.append((lo, 0, i))
        events.append((hi, 1, i))
    events.sort()
    left = [0] * len(raw)
    right = [0] * len(raw)
    for rank, (_, kind, i) in enumerate(events, start=1):
        if kind == 0:
            left[i] = rank
        else:
            right[i] = rank
    rep = IntervalRepresentation(zip(left, right))
    _verify_normalization(raw, rep)
    return rep


def _verify_normalization(raw: Sequence[tuple[int, int]], rep: IntervalRepresentation) -> None:
    n = rep.n
    if n <= _PAIRWISE_VERIFY_LIMIT:
        for u in range(n):
            for v in range(u + 1, n):
                if _raw_closed_intersects(raw[u], raw[v]) != rep.intersects(u, v):
                    raise InvariantError(
                        f"normalization changed adjacency of vertices {u} and {v}"
                    )
        return
    # degree-preservation check: counts of disjoint-left / disjoint-right
    # intervals per vertex must agree between raw and normalized forms
    raw_lefts = sorted(lo for lo, _ in raw)
    raw_rights = sorted(hi for _, hi in raw)
    new_lefts = sorted(rep.left(v) for v in range(n))
    new_rights = sorted(rep.right(v) for v in range(n))
    for v in range(n):
        lo, hi = raw[v]
        raw_deg = n - 1 - bisect_left(raw_rights, lo) - (n - bisect_right(raw_lefts, hi))
        lo2, hi2 = rep.left(v), rep.right(v)
        new_deg = n - 1 - bisect_left(new_rights, lo2) - (n - bisect_right(new_lefts, hi2))
        if raw_deg != new_deg:
            raise InvariantError(f"normalization changed the degree of vertex {v}")


def intersection_graph(rep: IntervalRepresentation) -> Graph:
    """Graph with an edge wherever two intervals overlap; plane-sweep build."""
    events = []
    for v in range(rep.n):
        events.append((rep.left(v), 0, v))
        events.append((rep.right(v), 1, v))
    events.sort()
    active: set[int] = set()
    edges = []
    for _, kind, v in events:
        if kind == 0:
            edges.extend((v, u) for u in active)
            active.add(v)
        else:
            active.discard(v)
    return Graph(rep.n, edges)


def check_shortest_path_structure(rep: IntervalRepresentation, path: Sequence[int]) -> bool:
    """Structural oracle for shortest paths walked left to right.

    Requires ``path`` to be a shortest path in the intersection graph; for
    three or more vertices the first interval must end before the last one.
    Checks that each interval right-intersects its predecessor (the very
    first step may instead be covered entirely by its successor, which can
    happen when the path starts inside a long interval) and that intervals
    two apart are disjoint.
    """
    k = len(path)
    if k < 2:
        raise InputError("path needs at least two vertices")
    if len(set(path)) != k:
        raise InputError("path repeats a vertex")
    for a, b in zip(path, path[1:]):
        if not rep.intersects(a, b):
            raise InputError(f"consecutive vertices {a} and {b} are not adjacent")
    g = intersection_graph(rep)
    dist = distances_from(g, path[0])
    if dist[path[-1]] != k - 1:
        raise InputError("not a shortest path")
    if k == 2:
        return True
    if rep.right(path[0]) > rep.right(path[-1]):
        raise InputError("path must be oriented so the first interval ends before the last")
    for i in range(k - 2):
        rel = classify_relation(rep, path[i + 1], path[i])
        allowed = (Relation.RIGHT_INTERSECTS, Relation.CONTAINS) if i == 0 else (Relation.RIGHT_INTERSECTS,)
        if rel not in allowed:
            return False
        if rep.intersects(path[i + 2], path[i]):
            return False
    return True
