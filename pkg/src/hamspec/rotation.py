"""Posa rotations of a path with a fixed first endpoint.

For a path ``(v_1, ..., v_m)`` whose last vertex is adjacent to ``v_i``, the
rotation with pivot ``v_i`` yields ``(v_1, ..., v_i, v_m, v_{m-1}, ...,
v_{i+1})``; the edge ``v_i v_{i+1}`` is *broken*. Pivot positions are
1-based, as in that notation.

Endpoint sets only allow broken edges taken from the original path, so the
frontier search has to remember full path states, not just endpoints.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from .errors import BrokenEdgeNotOriginal, BudgetExceeded, InvalidPivot
from .graph import Graph, vertex_set


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def path_edges(sequence: Iterable[int]) -> frozenset[tuple[int, int]]:
    seq = list(sequence)
    return frozenset(_edge(a, b) for a, b in zip(seq, seq[1:]))


@dataclass(frozen=True)
class PathState:
    sequence: tuple[int, ...]
    original_edges: frozenset[tuple[int, int]]

    @classmethod
    def from_sequence(cls, sequence: Iterable[int]) -> "PathState":
        seq = tuple(sequence)
        return cls(seq, path_edges(seq))

    @property
    def first(self) -> int:
        return self.sequence[0]

    @property
    def last(self) -> int:
        return self.sequence[-1]

    def __len__(self) -> int:
        return len(self.sequence)


@dataclass(frozen=True)
class RotationFrontier:
    fixed_endpoint: int
    levels: tuple[frozenset[int], ...]
    pivot_restriction: Optional[frozenset[int]] = None
    truncated: bool = False
    states: int = 0

    def level(self, t: int) -> frozenset[int]:
        return self.levels[t]


def is_path(g: Graph, sequence) -> bool:
    seq = list(sequence)
    if len(set(seq)) != len(seq) or any(not 0 <= v < g.n for v in seq):
        return False
    return all(g.has_edge(a, b) for a, b in zip(seq, seq[1:]))


def rotate(g: Graph, p: PathState, pivot_index: int) -> PathState:
    """Rotate ``p`` at the 1-based pivot position, keeping ``p.first`` fixed."""
    seq = p.sequence
    m = len(seq)
    if not 1 <= pivot_index <= m - 2:
        raise InvalidPivot(f"pivot index must lie in [1, {m - 2}], got {pivot_index}")
    pivot = seq[pivot_index - 1]
    if not g.has_edge(seq[-1], pivot):
        raise InvalidPivot(f"endpoint {seq[-1]} is not adjacent to pivot {pivot}")
    broken = _edge(pivot, seq[pivot_index])
    if broken not in p.original_edges:
        raise BrokenEdgeNotOriginal(f"edge {broken} is not an edge of the original path")
    new = seq[:pivot_index] + seq[pivot_index:][::-1]
    return PathState(new, p.original_edges)


def _rotations(g: Graph, seq: tuple[int, ...], original, allowed=None):
    """Yield every legal one-step rotation of ``seq`` (fixed first vertex)."""
    m = len(seq)
    if m < 3:
        return
    pos = {v: i for i, v in enumerate(seq)}
    for w in g.adjacency[seq[-1]]:
        i = pos.get(w)
        # 0-based i <= m - 3 is pivot position <= m - 2
        if i is None or i > m - 3:
            continue
        if allowed is not None and w not in allowed:
            continue
        if _edge(w, seq[i + 1]) not in original:
            continue
        yield seq[: i + 1] + seq[i + 1 :][::-1]


def maximal_path(g: Graph, seed: int) -> PathState:
    """Greedy path that neither endpoint can extend.

    Starts at a seed-chosen vertex and repeatedly appends a seed-chosen
    unvisited neighbor at the tail, then does the same at the head.
    """
    rng = np.random.default_rng(seed)
    start = int(rng.integers(g.n))
    seq = [start]
    seen = {start}
    for _ in range(2):
        while True:
            options = [v for v in g.adjacency[seq[-1]] if v not in seen]
            if not options:
                break
            v = options[int(rng.integers(len(options)))]
            seq.append(v)
            seen.add(v)
        seq.reverse()
    return PathState.from_sequence(seq)


def endpoint_sets(
    g: Graph,
    p: PathState,
    t_max: int,
    pivot_restriction: Optional[Iterable[int]] = None,
    budget: int = 1_000_000,
    strict: bool = False,
) -> RotationFrontier:
    """Endpoints reachable by at most ``t`` rotations, for ``t = 0 .. t_max``.

    Breadth-first over distinct path states. ``levels[t]`` is cumulative.
    With ``pivot_restriction`` every pivot must come from that set. When
    more than ``budget`` states would be stored the search stops and the
    frontier is flagged ``truncated`` (or BudgetExceeded is raised when
    ``strict``; the partial frontier rides on the exception).
    """
    if t_max < 0:
        raise ValueError("t_max must be >= 0")
    allowed = None if pivot_restriction is None else vertex_set(g, pivot_restriction)
    start = p.sequence
    seen = {start}
    ends = {start[-1]}
    levels = [frozenset(ends)]
    layer = [start]
    truncated = False
    for _ in range(t_max):
        nxt = []
        for seq in layer:
            for new in _rotations(g, seq, p.original_edges, allowed):
                if new in seen:
                    continue
                if len(seen) >= budget:
                    truncated = True
                    break
                seen.add(new)
                ends.add(new[-1])
                nxt.append(new)
            if truncated:
                break
        levels.append(frozenset(ends))
        layer = nxt
        if truncated:
            break
    while len(levels) < t_max + 1:
        levels.append(frozenset(ends))
    frontier = RotationFrontier(p.first, tuple(levels), allowed, truncated, len(seen))
    if truncated and strict:
        raise BudgetExceeded(f"more than {budget} rotation states", frontier=frontier)
    return frontier


def interior_points(p: PathState, s: Iterable[int]) -> frozenset[int]:
    """Members of ``s`` whose two neighbors along the path are both in ``s``."""
    members = frozenset(s)
    seq = p.sequence
    return frozenset(
        seq[i] for i in range(1, len(seq) - 1) if seq[i] in members and seq[i - 1] in members and seq[i + 1] in members
    )


def dense_core(g: Graph, p: PathState, c: Iterable[int], tau: float) -> frozenset[int]:
    """Delete vertices with fewer than ``tau`` neighbors in the interior, until none remain.

    Deletes the lowest id first. A vertex that fails for some set fails for
    every subset of it, so the result is the unique largest set in which
    every member has at least ``tau`` neighbors among its interior points.
    """
    core = set(c)
    nbrs = g.neighbor_sets
    while True:
        inner = interior_points(p, core)
        weak = [v for v in sorted(core) if len(nbrs[v] & inner) < tau]
        if not weak:
            return frozenset(core)
        core.discard(weak[0])
