import itertools
import math

import pytest

from hamspec.errors import EmptyGraph, IsolatedVertex
from hamspec.generators import complete, cycle, erdos_renyi, petersen, star
from hamspec.graph import build_graph, edge_count_between, edges_inside
from hamspec.mixing import (
    cor22_bounds,
    cor23_bounds,
    cor24_audit,
    degree_bounds_check,
    exhaustive_mixing,
    mixing_check,
    split_sum,
    true_gap,
)


def test_mixing_trivial_sets():
    g = cycle(6)
    r = mixing_check(g, [], range(6), 0.5)
    assert r.discrepancy == 0 and r.bound == 0 and r.holds
    r = mixing_check(g, range(6), range(6), 0.5)
    assert r.e_xy == 12 and r.expected == 12 and r.bound == 0 and r.holds


def test_mixing_errors():
    with pytest.raises(EmptyGraph):
        mixing_check(build_graph(3, []), [0], [1], 0.1)
    with pytest.raises(ValueError):
        mixing_check(cycle(4), [0], [1], -0.1)


def test_mixing_detects_too_small_lambda():
    g = cycle(6)
    assert not mixing_check(g, [0, 1, 2], [0, 1, 2], 0.0).holds
    pairs, bad, witness = exhaustive_mixing(g, 0.0)
    assert bad > 0 and witness is not None


def test_petersen_exhaustive_mixing():
    g = petersen()
    gap = true_gap(g)
    assert gap == pytest.approx(2 / 3, abs=1e-12)
    assert exhaustive_mixing(g, gap) == (1 << 20, 0, None)


def test_exhaustive_agrees_with_single_checks():
    g = erdos_renyi(7, 0.5, 4)
    lam = 0.6 * true_gap(g)
    bad = exhaustive_mixing(g, lam)[1]
    singles = 0
    for xm in range(1 << 7):
        for ym in range(1 << 7):
            x = [v for v in range(7) if xm >> v & 1]
            y = [v for v in range(7) if ym >> v & 1]
            singles += not mixing_check(g, x, y, lam).holds
    assert singles == bad


def test_cor22_examples():
    assert cor22_bounds(4, 3, 3, 3, 1 / 3, 0, 0) == (0, 0)
    lo, hi = cor22_bounds(4, 3, 3, 3, 1 / 3, 1, 1)
    assert lo == pytest.approx(0, abs=1e-15) and hi == pytest.approx(1.5)
    lo, hi = cor22_bounds(4, 3, 3, 3, 1 / 3, 4, 4)
    assert lo == pytest.approx(12) and hi == pytest.approx(12)


@pytest.mark.parametrize(
    "g, lam, lower, upper",
    [(complete(4), 1 / 3, 1.25, 4.0), (cycle(4), 1.0, -0.5, 4.0), (build_graph(2, [(0, 1)]), 1.0, -0.5, 2.0)],
)
def test_degree_bounds_examples(g, lam, lower, upper):
    r = degree_bounds_check(g, lam)
    assert r.lower == pytest.approx(lower) and r.upper == pytest.approx(upper)
    assert r.violations == ()


def test_cor23_examples():
    assert cor23_bounds(4, 3, 3, 3, 1 / 3, 0) == (0, 0)
    lo, hi = cor23_bounds(10, 3, 3, 3, 2 / 3, 1)
    assert lo <= 0 <= hi
    lo, hi = cor23_bounds(4, 3, 3, 3, 1 / 3, 4)
    # (9/24) * 12 - (1/3)(9/12) * 4 * 2 = 4.5 - 2
    assert lo == pytest.approx(2.5) and hi == pytest.approx(6.5)
    assert lo <= edges_inside(complete(4), range(4)) <= hi


def test_split_sum_against_direct_count():
    g = erdos_renyi(9, 0.5, 2)
    for x in [range(9), [0, 3, 5], [1, 2, 4, 6, 8]]:
        members = sorted(x)
        half = len(members) // 2
        direct = sum(
            edge_count_between(g, part, set(members) - set(part)) for part in itertools.combinations(members, half)
        )
        assert split_sum(g, x) == direct


def test_audit_petersen_hypotheses_fail():
    r = cor24_audit(petersen(), 100, 0)
    assert not r.hypotheses_met
    assert r.gap == pytest.approx(2 / 3)
    assert r.total_violations == 0


def test_audit_star_ratio_fails():
    r = cor24_audit(star(4), 100, 0)
    assert r.degree_ratio_sq == 9 and r.ratio_limit == 1.5
    assert not r.hypotheses_met


def test_audit_isolated_vertex():
    with pytest.raises(IsolatedVertex):
        cor24_audit(build_graph(3, [(0, 1)]), 10, 0, lam=0.1)


def test_audit_complete_exhaustive():
    g = complete(12)
    r = cor24_audit(g, 100, 0)
    assert r.hypotheses_met and r.exhaustive
    # (a) ranges over sizes < gap * n = 12/11, so only singletons
    assert r.predicates["a"].checked == 12
    assert r.predicates["e"].checked == 1
    assert r.total_violations == 0


def test_audit_reports_witness_when_lambda_understated():
    # a disconnected graph with a made-up tiny lambda must be caught by (e)
    g = build_graph(4, [(0, 1), (2, 3)])
    r = cor24_audit(g, 10, 0, lam=0.01)
    assert r.hypotheses_met
    assert r.predicates["e"].violated == 1
    assert r.predicates["e"].witness == ((0, 1), (2, 3))
    for p in r.predicates.values():
        assert p.violated == 0 or p.witness is not None


def test_audit_deterministic_for_seed():
    g = erdos_renyi(60, 0.9, 5)
    a = cor24_audit(g, 300, 1)
    b = cor24_audit(g, 300, 1)
    assert a == b


def test_degree_bounds_hold_with_true_gap():
    for seed in range(10):
        g = erdos_renyi(30, 0.3, seed)
        if min(g.degrees) == 0:
            continue
        assert degree_bounds_check(g, true_gap(g)).violations == ()


def test_larger_lambda_stays_valid():
    g = erdos_renyi(8, 0.6, 1)
    gap = true_gap(g)
    for lam in (gap, 1.5 * gap, 1.0):
        assert exhaustive_mixing(g, lam)[1] == 0
    assert math.isclose(gap, true_gap(g))
