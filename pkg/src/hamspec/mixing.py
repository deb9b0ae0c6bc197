"""Expander-mixing bounds as concrete checks on graphs and vertex sets.

``lam`` is any upper bound on the spectral gap ``max_{i != 0} |1 - lambda_i|``
of the normalized Laplacian; the true gap is the sharpest valid choice and is
the default wherever a graph is at hand.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

import numpy as np

from .errors import EmptyGraph, IsolatedVertex
from .graph import (
    Graph,
    connected_components,
    edge_count_between,
    vertex_set,
    volume,
)
from .spectral import Operator, adjacency_matrix, degree_summary, spectral_gap, spectrum

TOL = 1e-9
EXHAUSTIVE_MAX_N = 12


@dataclass(frozen=True)
class MixingReport:
    x_size: int
    y_size: int
    e_xy: int
    expected: float
    discrepancy: float
    bound: float
    holds: bool


@dataclass(frozen=True)
class DegreeBoundsReport:
    lower: float
    upper: float
    violations: tuple[int, ...]


@dataclass
class PredicateResult:
    checked: int = 0
    violated: int = 0
    witness: Optional[tuple[tuple[int, ...], tuple[int, ...]]] = None
    note: str = ""


@dataclass
class AuditReport:
    hypotheses_met: bool
    gap: float
    degree_ratio_sq: float
    ratio_limit: float
    exhaustive: bool
    predicates: dict[str, PredicateResult] = field(default_factory=dict)

    @property
    def total_violations(self) -> int:
        return sum(p.violated for p in self.predicates.values())


def _require_edges(g: Graph) -> None:
    if g.m == 0:
        raise EmptyGraph("graph has no edges (vol(G) = 0)")


def true_gap(g: Graph) -> float:
    return spectral_gap(spectrum(g, Operator.NORMALIZED))


def mixing_check(g: Graph, x, y, lam: float) -> MixingReport:
    """Compare ``e(X, Y)`` with ``vol(X) vol(Y) / vol(G)``."""
    _require_edges(g)
    if lam < 0:
        raise ValueError(f"lam must be >= 0, got {lam}")
    xs = vertex_set(g, x)
    ys = vertex_set(g, y)
    vol_g = 2 * g.m
    vx = volume(g, xs)
    vy = volume(g, ys)
    e_xy = edge_count_between(g, xs, ys)
    expected = vx * vy / vol_g
    discrepancy = abs(e_xy - expected)
    bound = lam * math.sqrt(vx * (vol_g - vx) * vy * (vol_g - vy)) / vol_g
    return MixingReport(len(xs), len(ys), e_xy, expected, discrepancy, bound, discrepancy <= bound + TOL)


def subset_indicators(n: int) -> np.ndarray:
    """All ``2**n`` subsets as rows of a 0/1 matrix; row ``k`` is bitmask ``k``."""
    k = np.arange(1 << n)[:, None]
    return ((k >> np.arange(n)[None, :]) & 1).astype(np.float64)


def exhaustive_mixing(g: Graph, lam: float):
    """Check the mixing inequality over every ordered pair of subsets.

    Vectorized over ``4**n`` pairs, so keep ``n`` around 10 or below.
    Returns ``(pairs_checked, violations, witness)`` with ``witness`` the
    first violating ``(X, Y)`` as bitmasks, or ``None``.
    """
    _require_edges(g)
    a = adjacency_matrix(g)
    deg = a.sum(axis=1)
    vol_g = deg.sum()
    ind = subset_indicators(g.n)
    vol = ind @ deg
    e = ind @ a @ ind.T
    expected = np.outer(vol, vol) / vol_g
    spread = vol * (vol_g - vol)
    bound = lam * np.sqrt(np.outer(spread, spread)) / vol_g
    bad = np.abs(e - expected) > bound + TOL
    count = int(bad.sum())
    witness = None
    if count:
        i, j = np.argwhere(bad)[0]
        witness = (int(i), int(j))
    return bad.size, count, witness


def cor22_bounds(n, d, max_deg, min_deg, lam, x, y):
    """Degree-based sandwich for ``e(X, Y)`` given only ``|X| = x``, ``|Y| = y``.

    Works elementwise on numpy arrays. The lower value is not clamped at 0.
    """
    scale = 1.0 / (n * d)
    root = np.sqrt(x * (n - x) * y * (n - y))
    lower = min_deg**2 * scale * x * y - lam * max_deg**2 * scale * root
    upper = max_deg**2 * scale * (x * y + lam * root)
    return lower, upper


def degree_bounds_check(g: Graph, lam: float) -> DegreeBoundsReport:
    """Single-vertex case of :func:`cor22_bounds` applied to every degree."""
    _require_edges(g)
    s = degree_summary(g)
    n, d = g.n, s.average_degree
    lower = (n - 1) / n * s.min_degree**2 / d - s.max_degree**2 / d * lam
    upper = s.max_degree**2 / d * (1 + lam)
    bad = tuple(v for v, dv in enumerate(g.degrees) if not lower - TOL <= dv <= upper + TOL)
    return DegreeBoundsReport(lower, upper, bad)


def cor23_bounds(n, d, max_deg, min_deg, lam, x):
    """Sandwich for ``e(X)``, the edges inside a set of size ``x``."""
    inner = x * (x - 1)
    spread = x * (n - x / 2)
    lower = min_deg**2 / (2 * n * d) * inner - lam * max_deg**2 / (n * d) * spread
    upper = max_deg**2 / (2 * n * d) * (inner + 2 * lam * spread)
    return lower, upper


def split_sum(g: Graph, x) -> int:
    """Sum of ``e(X', X - X')`` over all ``X'`` in X of size ``floor(|X| / 2)``."""
    members = sorted(vertex_set(g, x))
    masks = g.neighbor_masks
    full = 0
    for v in members:
        full |= 1 << v
    total = 0
    for part in combinations(members, len(members) // 2):
        rest = full
        for v in part:
            rest &= ~(1 << v)
        total += sum((masks[v] & rest).bit_count() for v in part)
    return total


def _as_tuple(idx) -> tuple[int, ...]:
    return tuple(sorted(int(v) for v in idx))


def cor24_audit(g: Graph, sample_budget: int, seed: int, lam: float | None = None) -> AuditReport:
    """Check the five small-gap consequences on concrete vertex sets.

    The hypotheses are a gap below 1/8 and ``(Delta/delta)^2 <= 2(n-1)/n``.
    When they hold, predicates (a)-(c) are tested on subsets in their size
    ranges, (d) on disjoint non-adjacent pairs and (e) on connectivity.
    Graphs with ``n <= 12`` are enumerated exhaustively; larger ones use
    ``sample_budget`` seeded draws per predicate.
    """
    _require_edges(g)
    gap = true_gap(g) if lam is None else lam
    s = degree_summary(g)
    n, d = g.n, s.average_degree
    big, small = s.max_degree, s.min_degree
    if small == 0:
        raise IsolatedVertex("degree ratio undefined with an isolated vertex")
    ratio_sq = (big / small) ** 2
    ratio_limit = 2 * (n - 1) / n
    met = 0 < gap < 1 / 8 and ratio_sq <= ratio_limit
    exhaustive = n <= EXHAUSTIVE_MAX_N
    names = ("a", "b", "c", "d", "e")
    report = AuditReport(met, gap, ratio_sq, ratio_limit, exhaustive, {k: PredicateResult() for k in names})
    if not met:
        for p in report.predicates.values():
            p.note = "hypotheses not met"
        return report

    adj = np.zeros((n, n), dtype=bool)
    for u, nbrs in enumerate(g.adjacency):
        adj[u, list(nbrs)] = True

    a_limit = 3 * gap * big**2 / (2 * d)
    b_factor = (0.5 - 4 * gap) ** 2 / (3 * gap**2)
    c_floor = gap**2 * big**4 * n / small**4
    d_limit = gap**2 * big**4 * n**2 / small**4

    def nbhd_size(idx, inside):
        return int(np.count_nonzero(adj[idx].any(axis=0) & ~inside))

    def record(key, ok, xs, ys=()):
        res = report.predicates[key]
        res.checked += 1
        if not ok:
            res.violated += 1
            if res.witness is None:
                res.witness = (_as_tuple(xs), _as_tuple(ys))

    def check_set(idx):
        size = len(idx)
        inside = np.zeros(n, dtype=bool)
        inside[idx] = True
        if size < gap * n:
            e_in = int(adj[np.ix_(idx, idx)].sum()) // 2
            record("a", e_in <= a_limit * size + TOL, idx)
        if size < gap**2 * n:
            record("b", nbhd_size(idx, inside) > b_factor * size - TOL, idx)
        if size > c_floor:
            record("c", nbhd_size(idx, inside) > n / 2 - size - TOL, idx)

    def check_pair(idx):
        # the largest Y with X, Y disjoint and e(X, Y) = 0
        inside = np.zeros(n, dtype=bool)
        inside[idx] = True
        outside = ~(adj[idx].any(axis=0) | inside)
        y_idx = np.flatnonzero(outside)
        if y_idx.size == 0:
            return False
        record("d", len(idx) * y_idx.size < d_limit + TOL, idx, y_idx)
        return True

    if exhaustive:
        for mask in range(1, 1 << n):
            idx = np.array([v for v in range(n) if mask >> v & 1])
            check_set(idx)
            check_pair(idx)
    else:
        rng = np.random.default_rng(seed)
        ranges = {
            "a": (1, math.ceil(gap * n) - 1),
            "b": (1, math.ceil(gap**2 * n) - 1),
            "c": (math.floor(c_floor) + 1, n),
        }
        for key, (lo, hi) in ranges.items():
            if hi < lo:
                report.predicates[key].note = "empty size range"
                continue
            for _ in range(sample_budget):
                size = int(rng.integers(lo, hi + 1))
                check_set(np.sort(rng.choice(n, size=size, replace=False)))
        # shrink the size cap after each miss so the search settles on sizes
        # that leave a non-adjacent remainder
        cap = n - 1
        for _ in range(sample_budget):
            size = int(rng.integers(1, cap + 1))
            found = check_pair(np.sort(rng.choice(n, size=size, replace=False)))
            if not found:
                cap = max(1, size - 1)
    if report.predicates["d"].checked == 0:
        report.predicates["d"].note = "no witnesses sampled"

    count, labels = connected_components(g)
    report.predicates["e"].checked = 1
    if count != 1:
        # witness: the component of vertex 0 against the rest
        first = [v for v in range(n) if labels[v] == labels[0]]
        rest = [v for v in range(n) if labels[v] != labels[0]]
        report.predicates["e"].violated = 1
        report.predicates["e"].witness = (tuple(first), tuple(rest))
        report.predicates["e"].note = f"{count} components"
    return report
