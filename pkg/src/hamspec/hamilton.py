"""Hamiltonian cycles: an exact subset DP for small graphs and a
rotation-extension search for larger ones.

The search is sound but incomplete: a returned cycle has been validated
against the graph, while ``None`` proves nothing.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

import numba
import numpy as np

from .errors import InvalidSize, TooLarge
from .graph import Graph, connected_components
from .rotation import _rotations, maximal_path, path_edges

HELD_KARP_MAX_N = 20
MAX_RESTARTS = 50


@dataclass(frozen=True)
class CycleCertificate:
    order: tuple[int, ...]

    def edges(self):
        k = len(self.order)
        return [(self.order[i], self.order[(i + 1) % k]) for i in range(k)]


def validate_cycle(g: Graph, order) -> bool:
    """True iff ``order`` lists every vertex once and closes into a cycle of ``g``."""
    order = list(order)
    if g.n < 3 or len(order) != g.n or sorted(order) != list(range(g.n)):
        return False
    return all(g.has_edge(order[i], order[(i + 1) % g.n]) for i in range(g.n))


@numba.njit(cache=True)
def _held_karp_reach(nbr, n):
    # reach[mask] has bit v set iff some path from vertex 0 covers exactly
    # mask and ends at v
    reach = np.zeros(1 << n, np.int64)
    reach[1] = 1
    for mask in range(1, 1 << n, 2):
        r = reach[mask]
        if r == 0:
            continue
        for v in range(n):
            if (r >> v) & 1:
                cand = nbr[v] & ~mask
                for u in range(n):
                    if (cand >> u) & 1:
                        reach[mask | (1 << u)] |= 1 << u
    return reach


def _lowest_bit(x: int) -> int:
    return (x & -x).bit_length() - 1


def held_karp(g: Graph) -> Optional[CycleCertificate]:
    """Exact Hamiltonicity test by dynamic programming over vertex subsets."""
    n = g.n
    if n > HELD_KARP_MAX_N:
        raise TooLarge(f"held_karp supports n <= {HELD_KARP_MAX_N}, got {n}")
    if n < 3:
        raise InvalidSize(f"held_karp needs n >= 3, got {n}")
    nbr = np.array(g.neighbor_masks, dtype=np.int64)
    reach = _held_karp_reach(nbr, n)
    full = (1 << n) - 1
    ends = int(reach[full]) & g.neighbor_masks[0]
    if not ends:
        return None
    cur = _lowest_bit(ends)
    mask = full
    order = [cur]
    while mask != 1:
        mask ^= 1 << cur
        cur = _lowest_bit(int(reach[mask]) & g.neighbor_masks[cur])
        order.append(cur)
    order.reverse()
    cert = CycleCertificate(tuple(order))
    assert validate_cycle(g, cert.order)
    return cert


def _extend_greedy(g: Graph, seq: list[int]) -> list[int]:
    on_path = set(seq)
    for _ in range(2):
        while True:
            nxt = next((v for v in g.adjacency[seq[-1]] if v not in on_path), None)
            if nxt is None:
                break
            seq.append(nxt)
            on_path.add(nxt)
        seq.reverse()
    return seq


def _progress(g: Graph, seq: tuple[int, ...]):
    """Longer path or Hamiltonian cycle obtainable from ``seq`` directly.

    Returns ``("cycle", order)``, ``("path", longer)`` or ``None``.
    """
    on_path = set(seq)
    for end in (seq[-1], seq[0]):
        if any(v not in on_path for v in g.adjacency[end]):
            longer = list(seq) if end == seq[-1] else list(seq[::-1])
            return "path", _extend_greedy(g, longer)
    if len(seq) >= 3 and g.has_edge(seq[0], seq[-1]):
        if len(seq) == g.n:
            return "cycle", seq
        # open the cycle next to a vertex with an outside neighbor
        for j, w in enumerate(seq):
            outside = next((u for u in g.adjacency[w] if u not in on_path), None)
            if outside is not None:
                opened = [outside] + list(seq[j:]) + list(seq[:j])
                return "path", _extend_greedy(g, opened)
    return None


def _canonical(seq: tuple[int, ...]) -> tuple[int, ...]:
    rev = seq[::-1]
    return seq if seq <= rev else rev


def _rotation_extension(g: Graph, seq: list[int], allowance: int):
    """Grow ``seq`` by rotations at either end until it closes into a Hamiltonian cycle.

    Broken edges are limited to the edges of the path at the start of the
    current phase; a phase ends at every extension. Returns
    ``(order or None, states_used)``.
    """
    used = 0
    current = tuple(seq)
    while True:
        original = path_edges(current)
        queue = deque([current])
        seen = {_canonical(current)}
        advanced = None
        while queue:
            state = queue.popleft()
            step = _progress(g, state)
            if step is not None:
                kind, value = step
                if kind == "cycle":
                    return tuple(value), used
                advanced = tuple(value)
                break
            for oriented in (state, state[::-1]):
                for new in _rotations(g, oriented, original):
                    key = _canonical(new)
                    if key in seen:
                        continue
                    used += 1
                    if used > allowance:
                        return None, used
                    seen.add(key)
                    queue.append(new)
        if advanced is None:
            return None, used
        current = advanced


def posa_find_hamiltonian(
    g: Graph, seed: int = 0, budget: int = 1_000_000, max_restarts: int = MAX_RESTARTS
) -> Optional[CycleCertificate]:
    """Rotation-extension search for a Hamiltonian cycle.

    Each restart begins from a fresh greedy maximal path and may explore
    ``10 * n * max_degree`` rotation states; ``budget`` caps the states
    explored over all restarts.
    """
    if g.n < 3:
        raise InvalidSize(f"need n >= 3, got {g.n}")
    if min(g.degrees) < 2 or connected_components(g)[0] != 1:
        return None
    rng = np.random.default_rng(seed)
    per_restart = 10 * g.n * max(g.degrees)
    spent = 0
    for _ in range(max_restarts):
        if spent >= budget:
            break
        start = maximal_path(g, int(rng.integers(2**63 - 1)))
        order, used = _rotation_extension(g, list(start.sequence), min(per_restart, budget - spent))
        spent += used
        if order is not None:
            if not validate_cycle(g, order):
                raise AssertionError(f"finder produced an invalid cycle {order}")
            return CycleCertificate(tuple(order))
    return None
