"""Undirected graphs, rooted trees, set systems and feasibility predicates.

Vertices are dense 0-based integers, so per-vertex maps are plain lists.
Unreachable distances use the integer sentinel ``UNREACHABLE`` (never a float).
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable

from .errors import FeasibilityError, InputError
from .multiset import TokenMultiset

#: Distance value reported for vertices in a different component.
UNREACHABLE = -1


class Graph:
    """Immutable undirected graph given by symmetric adjacency lists."""

    __slots__ = ("n", "_adj", "_adj_set")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise InputError(f"vertex count must be non-negative, got {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for {n} vertices")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        self._adj = tuple(tuple(sorted(s)) for s in adj)
        self._adj_set = tuple(frozenset(s) for s in adj)
        self.n = n

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self._adj

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n and 0 <= v < self.n):
            return False
        return v in self._adj_set[u]

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self._adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self._adj[u] if u < v]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


def distances_from(g: Graph, s: int) -> list[int]:
    """BFS distances from s; UNREACHABLE for other components."""
    if not 0 <= s < g.n:
        raise InputError(f"source {s} out of range")
    dist = [UNREACHABLE] * g.n
    dist[s] = 0
    queue = deque([s])
    adj = g.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u]
        for w in adj[u]:
            if dist[w] == UNREACHABLE:
                dist[w] = du + 1
                queue.append(w)
    return dist


def succ_set(g: Graph, u: int, v: int) -> tuple[int, ...]:
    """Neighbors of u that lie on some shortest u-v path, sorted.

    Empty for u == v.  Raises if v is unreachable from u.
    """
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise InputError("vertex out of range")
    if u == v:
        return ()
    dist = distances_from(g, v)
    if dist[u] == UNREACHABLE:
        raise InputError(f"vertex {v} is unreachable from {u}")
    target = dist[u] - 1
    return tuple(w for w in g.neighbors(u) if dist[w] == target)


class RootedTree:
    """A connected acyclic graph with parent/depth data and a processing order.

    ``order`` lists vertices by decreasing depth (ties by increasing id), so
    every vertex appears before its parent.  The root is its own parent.
    """

    __slots__ = ("graph", "root", "parent", "depth", "order")

    def __init__(self, graph: Graph, root: int = 0):
        n = graph.n
        if n == 0:
            raise InputError("tree needs at least one vertex")
        if not 0 <= root < n:
            raise InputError(f"root {root} out of range")
        if graph.edge_count != n - 1:
            raise InputError(f"tree on {n} vertices must have {n - 1} edges, got {graph.edge_count}")
        parent = [UNREACHABLE] * n
        depth = [UNREACHABLE] * n
        parent[root] = root
        depth[root] = 0
        queue = deque([root])
        seen = 1
        while queue:
            u = queue.popleft()
            for w in graph.neighbors(u):
                if depth[w] == UNREACHABLE:
                    depth[w] = depth[u] + 1
                    parent[w] = u
                    seen += 1
                    queue.append(w)
        if seen != n:
            raise InputError("graph is not connected, cannot root it")
        self.graph = graph
        self.root = root
        self.parent = parent
        self.depth = depth
        self.order = tuple(sorted(range(n), key=lambda v: (-depth[v], v)))

    @property
    def n(self) -> int:
        return self.graph.n

    def __repr__(self) -> str:
        return f"RootedTree(n={self.n}, root={self.root})"


class SetSystem:
    """A family of non-empty vertex sets.

    When built with a tree, every set is required to induce a connected
    subgraph of it; violations are rejected eagerly.
    """

    __slots__ = ("sets",)

    def __init__(self, sets: Iterable[Iterable[int]], tree: RootedTree | None = None):
        normalized = []
        for i, s in enumerate(sets):
            members = tuple(sorted(set(s)))
            if not members:
                raise InputError(f"set {i} is empty")
            normalized.append(members)
        self.sets = tuple(normalized)
        if tree is not None:
            self.ensure_subtrees(tree)

    def ensure_subtrees(self, tree: RootedTree) -> None:
        """Check every set induces a subtree; raises on the first offender."""
        n = tree.n
        parent = tree.parent
        member = [False] * n
        for i, s in enumerate(self.sets):
            for v in s:
                if not 0 <= v < n:
                    raise InputError(f"set {i} mentions vertex {v} outside the tree")
                member[v] = True
            # a set of size k induces a subtree iff k-1 members have their parent inside
            inner_edges = sum(1 for v in s if parent[v] != v and member[parent[v]])
            for v in s:
                member[v] = False
            if inner_edges != len(s) - 1:
                raise InputError(f"set {i} does not induce a subtree")

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SetSystem):
            return NotImplemented
        return self.sets == other.sets

    def __repr__(self) -> str:
        return f"SetSystem({len(self.sets)} sets)"


def is_dominating(g: Graph, tokens: TokenMultiset) -> bool:
    """True iff every vertex is in the support or adjacent to it."""
    covered = [False] * g.n
    for v in tokens.support:
        if not 0 <= v < g.n:
            raise InputError(f"token on vertex {v} outside the graph")
        covered[v] = True
        for w in g.neighbors(v):
            covered[w] = True
    return all(covered)


def is_hitting(system: SetSystem, tokens: TokenMultiset) -> bool:
    """True iff the support intersects every set of the system."""
    supp = tokens.support
    for s in system.sets:
        if not any(v in supp for v in s):
            return False
    return True


def closed_neighborhood_system(tree: RootedTree) -> SetSystem:
    """One set N[v] per vertex; hitting it is the same as dominating the tree."""
    g = tree.graph
    sets = [tuple(sorted((v, *g.neighbors(v)))) for v in range(g.n)]
    return SetSystem(sets, tree=tree)


def require_same_size(a: TokenMultiset, b: TokenMultiset) -> None:
    from .errors import SizeMismatchError

    if a.total != b.total:
        raise SizeMismatchError(f"token multisets differ in size: {a.total} vs {b.total}")


def require_dominating(g: Graph, tokens: TokenMultiset, label: str) -> None:
    if not is_dominating(g, tokens):
        raise FeasibilityError(f"{label} configuration is not dominating")


def require_hitting(system: SetSystem, tokens: TokenMultiset, label: str) -> None:
    if not is_hitting(system, tokens):
        raise FeasibilityError(f"{label} configuration is not a hitting set")
