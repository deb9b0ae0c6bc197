"""Deterministic graph families.

Random families draw from ``numpy.random.default_rng(seed)`` (PCG64, 64-bit
state); the same seed reproduces the same graph.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import GenerationFailure, InvalidSize, ParityError
from .graph import Graph, build_graph

NAMED_FAMILIES = ("complete", "cycle", "path", "star", "petersen")


def complete(n: int) -> Graph:
    if n < 3:
        raise InvalidSize(f"complete graph needs n >= 3, got {n}")
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidSize(f"cycle needs n >= 3, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise InvalidSize(f"path needs n >= 1, got {n}")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Graph:
    """``K_{1, n-1}`` with center 0."""
    if n < 2:
        raise InvalidSize(f"star needs n >= 2, got {n}")
    return build_graph(n, [(0, i) for i in range(1, n)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return build_graph(10, outer + inner + spokes)


def generate_named(family: str, n: int | None = None) -> Graph:
    if family == "petersen":
        return petersen()
    builders = {"complete": complete, "cycle": cycle, "path": path, "star": star}
    if family not in builders:
        raise InvalidSize(f"unknown family {family!r}")
    if n is None:
        raise InvalidSize(f"family {family!r} needs n")
    return builders[family](n)


def remark_family(n: int, beta: int) -> Graph:
    """``K_{n-1}`` on ``0..n-2`` plus vertex ``n-1`` joined to ``0..beta-1``."""
    if n < 3:
        raise InvalidSize(f"remark family needs n >= 3, got {n}")
    if not 1 <= beta <= n - 1:
        raise InvalidSize(f"beta must lie in [1, {n - 1}], got {beta}")
    k = n - 1
    edges = [(u, v) for u in range(k) for v in range(u + 1, k)]
    edges += [(u, k) for u in range(beta)]
    return build_graph(n, edges)


def remark_beta(n: int, alpha: float) -> int:
    """``ceil(alpha * (n - 1))``, guarded against float noise like 7.000000000000001."""
    return math.ceil(round(alpha * (n - 1), 9))


def remark_gap_formula(n: int, beta: int) -> float:
    """Closed-form ``max_{i != 0} |1 - lambda_i|`` for :func:`remark_family`.

    Matches the exact gap for ``beta < n - 1``; at ``beta = n - 1`` (which is
    ``K_n``) it gives ``1/(n-2)`` instead of the true ``1/(n-1)``.
    """
    if n < 4:
        raise InvalidSize(f"formula needs n >= 4, got {n}")
    if not 1 <= beta <= n - 1:
        raise InvalidSize(f"beta must lie in [1, {n - 1}], got {beta}")
    s = n - 2 + beta
    disc = s * s + 4 * (n - 1) * (n - 2) * (n - beta - 2)
    return (s + math.sqrt(disc)) / (2 * (n - 1) * (n - 2))


def erdos_renyi(n: int, p: float, seed: int) -> Graph:
    """``G(n, p)``: pairs ``(u, v)``, ``u < v``, drawn in lexicographic order."""
    if n < 1:
        raise InvalidSize(f"n must be >= 1, got {n}")
    if not 0.0 <= p <= 1.0:
        raise InvalidSize(f"p must lie in [0, 1], got {p}")
    rng = np.random.default_rng(seed)
    iu, ju = np.triu_indices(n, k=1)
    keep = rng.random(iu.size) < p
    return build_graph(n, zip(iu[keep].tolist(), ju[keep].tolist()))


def random_regular(n: int, d: int, seed: int, max_tries: int = 1000) -> Graph:
    """d-regular graph from the pairing model, rejecting loops and multi-edges.

    Not exactly uniform at small n; each rejected pairing is redrawn from
    scratch.
    """
    if (n * d) % 2:
        raise ParityError(f"n * d = {n * d} is odd")
    if not 0 <= d < n:
        raise InvalidSize(f"need 0 <= d < n, got d={d}, n={n}")
    rng = np.random.default_rng(seed)
    stubs = np.repeat(np.arange(n), d)
    for _ in range(max_tries):
        perm = rng.permutation(stubs)
        pairs = perm.reshape(-1, 2)
        u = np.minimum(pairs[:, 0], pairs[:, 1])
        v = np.maximum(pairs[:, 0], pairs[:, 1])
        if np.any(u == v):
            continue
        keys = u * n + v
        if np.unique(keys).size != keys.size:
            continue
        return build_graph(n, zip(u.tolist(), v.tolist()))
    raise GenerationFailure(f"no simple pairing in {max_tries} tries")
