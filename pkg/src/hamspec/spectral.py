"""Operator matrices, spectra and the three spectral Hamiltonicity conditions.

All logarithms are natural. The conditions involve ``ln ln ln n``, which is
positive only for ``n > e**e ~ 15.15``, so a verdict is *applicable* only
for ``n >= 16``. The normalized-Laplacian condition is an asymptotic
statement ("n sufficiently large"); a passing verdict records that the
measured quantity is under the threshold, nothing more.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from .errors import (
    InvalidConstant,
    InvalidSize,
    IsolatedVertex,
    NotRegular,
    WrongOperator,
)
from .graph import Graph
from .jacobi import jacobi_eigenvalues

MIN_APPLICABLE_N = 16
FAN_YU_DENOMINATOR = 7500


class Operator(str, Enum):
    ADJACENCY = "adjacency"
    LAPLACIAN = "laplacian"
    NORMALIZED = "normalized"


class Condition(str, Enum):
    FAN_YU = "fan_yu"
    BUTLER_CHUNG = "butler_chung"
    KRIVELEVICH_SUDAKOV = "krivelevich_sudakov"


@dataclass(frozen=True)
class Spectrum:
    operator: Optional[Operator]
    eigenvalues: tuple[float, ...]

    @property
    def n(self) -> int:
        return len(self.eigenvalues)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.eigenvalues)


@dataclass(frozen=True)
class DegreeSummary:
    max_degree: int
    min_degree: int
    average_degree: float


@dataclass(frozen=True)
class ConditionVerdict:
    condition: Condition
    n: int
    c: float
    applicable: bool
    measured: float
    threshold: Optional[float]
    passes: bool
    ratio_ok: Optional[bool] = None
    degree_ratio: Optional[float] = None


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    for u, nbrs in enumerate(g.adjacency):
        a[u, list(nbrs)] = 1.0
    return a


def operator_matrix(g: Graph, kind: Operator | str) -> np.ndarray:
    """Dense ``A``, ``L = D - A`` or ``D^-1/2 L D^-1/2``."""
    kind = Operator(kind)
    a = adjacency_matrix(g)
    if kind is Operator.ADJACENCY:
        return a
    deg = a.sum(axis=1)
    if kind is Operator.LAPLACIAN:
        return np.diag(deg) - a
    if np.any(deg == 0):
        v = int(np.flatnonzero(deg == 0)[0])
        raise IsolatedVertex(f"vertex {v} has degree 0; normalized Laplacian undefined")
    inv_sqrt = 1.0 / np.sqrt(deg)
    out = -a * inv_sqrt[:, None] * inv_sqrt[None, :]
    np.fill_diagonal(out, 1.0)
    return out


def eigenvalues(matrix, operator: Operator | str | None = None, max_sweeps: int = 100) -> Spectrum:
    """Full ascending spectrum of a symmetric matrix via cyclic Jacobi."""
    values, _ = jacobi_eigenvalues(matrix, max_sweeps=max_sweeps)
    op = None if operator is None else Operator(operator)
    return Spectrum(operator=op, eigenvalues=tuple(float(x) for x in values))


def spectrum(g: Graph, kind: Operator | str) -> Spectrum:
    return eigenvalues(operator_matrix(g, kind), kind)


def spectral_gap(s: Spectrum) -> float:
    """``max_{i != 0} |1 - lambda_i|`` over a normalized-Laplacian spectrum."""
    if s.operator is not Operator.NORMALIZED:
        raise WrongOperator(f"spectral gap needs the normalized spectrum, got {s.operator}")
    if s.n < 2:
        raise InvalidSize("spectral gap needs n >= 2")
    return max(abs(1.0 - x) for x in s.eigenvalues[1:])


def sigma_adjacency(s: Spectrum) -> float:
    """Second largest absolute adjacency eigenvalue, with multiplicity."""
    if s.operator is not Operator.ADJACENCY:
        raise WrongOperator(f"sigma needs the adjacency spectrum, got {s.operator}")
    if s.n < 2:
        raise InvalidSize("sigma needs n >= 2")
    return sorted((abs(x) for x in s.eigenvalues), reverse=True)[1]


def degree_summary(g: Graph) -> DegreeSummary:
    deg = g.degrees
    return DegreeSummary(max(deg), min(deg), 2 * g.m / g.n)


def log_factor(n: int) -> float:
    """``(ln ln n)^2 / (ln n * ln ln ln n)``, defined for ``n >= 16``."""
    if n < MIN_APPLICABLE_N:
        raise InvalidSize(f"log factor needs n >= {MIN_APPLICABLE_N}, got {n}")
    l1 = math.log(n)
    l2 = math.log(l1)
    return l2 * l2 / (l1 * math.log(l2))


def fan_yu_threshold(n: int) -> float:
    return log_factor(n) / FAN_YU_DENOMINATOR


def check_fan_yu(g: Graph, c: float) -> ConditionVerdict:
    """Normalized-Laplacian condition with degree-ratio constant ``c`` in (1, sqrt 2)."""
    if not 1.0 < c < math.sqrt(2.0):
        raise InvalidConstant(f"c must lie in (1, sqrt(2)), got {c}")
    summary = degree_summary(g)
    if summary.min_degree == 0:
        raise IsolatedVertex("graph has an isolated vertex")
    ratio = summary.max_degree / summary.min_degree
    ratio_ok = ratio < c
    measured = spectral_gap(spectrum(g, Operator.NORMALIZED)) if g.n >= 2 else 0.0
    applicable = g.n >= MIN_APPLICABLE_N
    threshold = fan_yu_threshold(g.n) if applicable else None
    passes = applicable and ratio_ok and measured <= threshold
    return ConditionVerdict(
        condition=Condition.FAN_YU,
        n=g.n,
        c=c,
        applicable=applicable,
        measured=measured,
        threshold=threshold,
        passes=passes,
        ratio_ok=ratio_ok,
        degree_ratio=ratio,
    )


def check_butler_chung(g: Graph, c: float) -> ConditionVerdict:
    """Laplacian condition ``|d - mu_i| <= c * log_factor(n) * d``."""
    if not c > 0:
        raise InvalidConstant(f"c must be positive, got {c}")
    d = 2 * g.m / g.n
    mu = spectrum(g, Operator.LAPLACIAN).eigenvalues
    measured = max((abs(d - x) for x in mu[1:]), default=0.0)
    applicable = g.n >= MIN_APPLICABLE_N
    threshold = c * log_factor(g.n) * d if applicable else None
    passes = applicable and measured <= threshold
    return ConditionVerdict(Condition.BUTLER_CHUNG, g.n, c, applicable, measured, threshold, passes)


def check_krivelevich_sudakov(g: Graph, c: float) -> ConditionVerdict:
    """Adjacency condition ``sigma <= c * log_factor(n) * d`` for d-regular graphs."""
    if not c > 0:
        raise InvalidConstant(f"c must be positive, got {c}")
    summary = degree_summary(g)
    if summary.max_degree != summary.min_degree:
        raise NotRegular(f"degrees range over [{summary.min_degree}, {summary.max_degree}]")
    measured = sigma_adjacency(spectrum(g, Operator.ADJACENCY)) if g.n >= 2 else 0.0
    applicable = g.n >= MIN_APPLICABLE_N
    threshold = c * log_factor(g.n) * summary.max_degree if applicable else None
    passes = applicable and measured <= threshold
    return ConditionVerdict(Condition.KRIVELEVICH_SUDAKOV, g.n, c, applicable, measured, threshold, passes)


def smallest_complete_graph_meeting_fan_yu(start: int = MIN_APPLICABLE_N, stop: int = 10**7) -> Optional[int]:
    """Scan for the first n with ``1/(n-1) <= fan_yu_threshold(n)``.

    Uses the closed-form gap of ``K_n``; no eigensolves.
    """
    for n in range(max(start, MIN_APPLICABLE_N), stop):
        if 1.0 / (n - 1) <= fan_yu_threshold(n):
            return n
    return None
