"""Simple undirected graphs and the set-level quantities the spectral bounds use.

Vertices are the integers ``0 .. n-1``. Vertex sets are plain iterables of
ints; :func:`vertex_set` validates them and returns a ``frozenset``.

``e(X, Y)`` follows the ordered-pair convention: it counts pairs ``(u, v)``
with ``u`` in X, ``v`` in Y and ``uv`` an edge, so an edge inside
``X & Y`` is counted twice and ``e(X, X) == 2 * e(X)``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import DuplicateEdge, InvalidEdge, InvalidSize, VertexOutOfRange


@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: tuple[tuple[int, ...], ...]
    m: int

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(nbrs) for nbrs in self.adjacency)

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        """Adjacency rows as int bitmasks (bit v set iff v is a neighbor)."""
        masks = []
        for nbrs in self.adjacency:
            mask = 0
            for v in nbrs:
                mask |= 1 << v
            masks.append(mask)
        return tuple(masks)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nbrs) for nbrs in self.adjacency)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbor_sets[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if v > u:
                    yield (u, v)

    def vertices(self) -> range:
        return range(self.n)


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a :class:`Graph`, rejecting loops, duplicates and bad ids."""
    if n < 1:
        raise InvalidSize(f"vertex count must be >= 1, got {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    m = 0
    for u, v in edges:
        for x in (u, v):
            if not 0 <= x < n:
                raise VertexOutOfRange(f"vertex {x} not in [0, {n})")
        if u == v:
            raise InvalidEdge(f"self-loop at vertex {u}")
        if v in nbrs[u]:
            raise DuplicateEdge(f"edge ({u}, {v}) given twice")
        nbrs[u].add(v)
        nbrs[v].add(u)
        m += 1
    return Graph(n=n, adjacency=tuple(tuple(sorted(s)) for s in nbrs), m=m)


def vertex_set(g: Graph, members: Iterable[int]) -> frozenset[int]:
    out = frozenset(members)
    for v in out:
        if not 0 <= v < g.n:
            raise VertexOutOfRange(f"vertex {v} not in [0, {g.n})")
    return out


def complement(g: Graph, x: Iterable[int]) -> frozenset[int]:
    return frozenset(range(g.n)) - vertex_set(g, x)


def volume(g: Graph, x: Iterable[int]) -> int:
    """Sum of degrees over ``x``."""
    return sum(g.degree(v) for v in vertex_set(g, x))


def edge_count_between(g: Graph, x: Iterable[int], y: Iterable[int]) -> int:
    """Ordered-pair edge count ``e(X, Y)``."""
    xs = vertex_set(g, x)
    ys = vertex_set(g, y)
    sets = g.neighbor_sets
    return sum(len(sets[u] & ys) for u in xs)


def edges_inside(g: Graph, x: Iterable[int]) -> int:
    """Number of edges with both endpoints in ``x``, i.e. ``e(X)``."""
    xs = vertex_set(g, x)
    return edge_count_between(g, xs, xs) // 2


def neighborhood(g: Graph, x: Iterable[int]) -> frozenset[int]:
    """``N(X)``: vertices outside X with at least one neighbor in X."""
    xs = vertex_set(g, x)
    out: set[int] = set()
    for u in xs:
        out.update(g.adjacency[u])
    return frozenset(out - xs)


def connected_components(g: Graph) -> tuple[int, list[int]]:
    """Return ``(count, labels)``; labels are numbered in discovery order."""
    labels = [-1] * g.n
    count = 0
    for s in range(g.n):
        if labels[s] != -1:
            continue
        labels[s] = count
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in g.adjacency[u]:
                if labels[v] == -1:
                    labels[v] = count
                    queue.append(v)
        count += 1
    return count, labels


def is_connected(g: Graph) -> bool:
    return connected_components(g)[0] == 1


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    return build_graph(g.n, [(perm[u], perm[v]) for u, v in g.edges()])
