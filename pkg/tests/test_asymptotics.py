from decimal import Decimal

import pytest

from corepart import asymptotics as asy


def test_d1_first_moment_envelope(table):
    tr = asy.moment_ratio_in_n("plus", 1, 1, [50, 100, 200, 400], table)
    err = tr.errors()
    assert tr.approaches_one()
    assert err[-1] <= Decimal("0.1")
    # exact formula: error is about 0.66/n
    assert all(Decimal("0.5") / n < e < Decimal("0.8") / n for e, n in zip(err, [50, 100, 200, 400]))


def test_d1_second_moment(table):
    tr = asy.moment_ratio_in_n("plus", 1, 2, [50, 100, 200], table)
    assert tr.approaches_one()


def test_minus_d2_converges_to_positive_constant(table):
    tr = asy.moment_ratio_in_n("minus", 2, 1, [50, 100, 200], table)
    assert tr.stabilizes() and all(r > 0 for r in tr.ratios)


@pytest.mark.parametrize("family,n", [("plus", 3), ("minus", 4)])
def test_ratio_in_d_stabilizes(family, n, table):
    assert asy.moment_ratio_in_d(family, n, 1, [10, 20, 40, 80], table).stabilizes()


def test_single_point_trace_has_no_trend(table):
    tr = asy.moment_ratio_in_d("plus", 2, 1, [1], table)
    assert tr.increments() == [] and tr.stabilizes() and tr.approaches_one()


def test_trace_requires_increasing_params(table):
    with pytest.raises(ValueError):
        asy.moment_ratio_in_n("plus", 1, 1, [20, 10], table)


def test_golden_fibonacci(table):
    assert asy.g_ratio_check(0, 0, [10, 20, 40], table).approaches_one()


@pytest.mark.parametrize("a,b", [(0, 0), (1, 0), (0, 1), (1, 1)])
def test_golden_ratio_improves(a, b, table):
    err = asy.g_ratio_check(a, b, [100, 200], table).errors()
    assert err[1] < err[0]


@pytest.mark.parametrize("a,b", [(1, 0), (0, 1)])
def test_golden_ratio_trend(a, b, table):
    assert asy.g_ratio_check(a, b, [50, 100, 200], table).approaches_one()
