"""Numeric values of the constants driving the rotation argument at a given n.

``lam`` is the normalized-Laplacian threshold itself; ``t0`` bounds the
number of rotation rounds needed for the endpoint set to pass ``n/7``;
``rho = 2 * t0``; ``k`` is the number of path segments tracked and
``alpha = 1 / (49 * k! * 6**k)``. Logs are natural.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .spectral import MIN_APPLICABLE_N, fan_yu_threshold

# t0's denominator 2(ln(1/(2 lam)) - 4) - ln(sqrt 7) is positive iff lam is below this
LAMBDA_LIMIT = math.exp(-(4 + math.log(math.sqrt(7)) / 2)) / 2


@dataclass(frozen=True)
class ProofConstants:
    n: int
    lam: float
    t0: int
    rho: int
    k: int
    alpha: float
    alpha_denominator: int
    growth_ratio: float
    numerator_negative: bool


def t0_value(lam: float, n: int) -> tuple[int, bool]:
    """``t0`` and whether the log numerator ``ln(4 lam^2 n)`` is negative.

    The ceiling is floored at 0 before adding 2, so ``t0 >= 2``.
    """
    denom = 2 * (math.log(1 / (2 * lam)) - 4) - math.log(math.sqrt(7))
    if denom <= 0:
        raise DomainError(f"t0 denominator {denom:.4g} <= 0 for lam = {lam:.4g} (needs lam < {LAMBDA_LIMIT:.4g})")
    numer = math.log(4 * lam * lam * n)
    return max(0, math.ceil(numer / denom)) + 2, numer < 0


def proof_constants(n: int) -> ProofConstants:
    if n < MIN_APPLICABLE_N:
        raise DomainError(f"constants need n >= {MIN_APPLICABLE_N} (ln ln ln n > 0), got {n}")
    lam = fan_yu_threshold(n)
    t0, negative = t0_value(lam, n)
    rho = 2 * t0
    k = 2 * max(1, math.ceil(3000 * rho * lam))
    denominator = 49 * math.factorial(k) * 6**k
    return ProofConstants(
        n=n,
        lam=lam,
        t0=t0,
        rho=rho,
        k=k,
        alpha=1 / denominator,
        alpha_denominator=denominator,
        growth_ratio=(0.5 - 4 * lam) ** 2 / (7 * lam * lam),
        numerator_negative=negative,
    )
