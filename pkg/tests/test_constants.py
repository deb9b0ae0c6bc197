import math

import pytest

from hamspec.constants import LAMBDA_LIMIT, proof_constants, t0_value
from hamspec.errors import DomainError


def direct(n):
    """Straight-line evaluation of the constants, used as the oracle."""
    ln = math.log
    lam = ln(ln(n)) ** 2 / (7500 * ln(n) * ln(ln(ln(n))))
    ratio = ln(4 * lam**2 * n) / (2 * (ln(1 / (2 * lam)) - 4) - ln(math.sqrt(7)))
    t0 = max(0, math.ceil(ratio)) + 2
    rho = 2 * t0
    k = 2 * max(1, math.ceil(3000 * rho * lam))
    return lam, t0, rho, k, 49 * math.factorial(k) * 6**k


def test_billion():
    c = proof_constants(10**9)
    assert c.lam == pytest.approx(5.33e-5, abs=1e-7)
    assert (c.t0, c.rho, c.k) == (3, 6, 2)
    assert c.alpha_denominator == 3528
    assert c.alpha == pytest.approx(1 / 3528, rel=1e-15)
    assert not c.numerator_negative


def test_million():
    c = proof_constants(10**6)
    assert c.lam == pytest.approx(6.9e-5, abs=1e-6)
    assert c.numerator_negative
    assert (c.t0, c.rho, c.k, c.alpha_denominator) == (2, 4, 2, 3528)


@pytest.mark.parametrize("n", [16, 17, 100, 10**4, 10**6, 10**9, 10**12, 10**18])
def test_matches_direct_evaluation(n):
    c = proof_constants(n)
    lam, t0, rho, k, denom = direct(n)
    assert c.lam == pytest.approx(lam, rel=1e-14)
    assert (c.t0, c.rho, c.k, c.alpha_denominator) == (t0, rho, k, denom)
    assert c.rho == 2 * c.t0 and c.k % 2 == 0 and c.k >= 2 and c.t0 >= 2


def test_sixteen_is_valid():
    c = proof_constants(16)
    assert c.lam == pytest.approx(2.55e-3, abs=1e-5)
    assert math.log(1 / (2 * c.lam)) == pytest.approx(5.28, abs=0.01)
    assert c.t0 == 2 and c.k == 62


def test_domain_boundary():
    # every integer n >= 16 keeps lambda under the limit; lambda peaks at 16
    assert proof_constants(16).lam < LAMBDA_LIMIT
    assert all(proof_constants(n).lam <= proof_constants(16).lam for n in range(16, 400))
    with pytest.raises(DomainError):
        proof_constants(15)


def test_t0_denominator_sign():
    t0_value(0.99 * LAMBDA_LIMIT, 10**6)
    with pytest.raises(DomainError):
        t0_value(LAMBDA_LIMIT * 1.01, 10**6)
    # denominator vanishes exactly at the limit
    denom = 2 * (math.log(1 / (2 * LAMBDA_LIMIT)) - 4) - math.log(math.sqrt(7))
    assert denom == pytest.approx(0, abs=1e-12)
