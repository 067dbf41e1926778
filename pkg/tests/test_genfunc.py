import pytest

from corepart import genfunc as gf
from corepart.moments import m_seq


def test_psi_series_examples(table):
    assert gf.psi_series_dp(1, 0, 0, 0, 4, table).as_integers() == [1, 2, 3, 5, 8]
    assert gf.psi_series_dp(2, 0, 0, 0, 3, table).as_integers() == [1, 3, 5, 11]
    assert gf.psi_series_dp(3, 2, 1, 1, 5, table)[0] == 0


@pytest.mark.parametrize("which", gf.PSI_CLOSED)
@pytest.mark.parametrize("d", [1, 2, 3])
def test_psi_closed_matches_dp(which, d, table):
    for m in range(5):
        assert gf.psi_closed(d, m, which, 20) == gf.psi_series_dp(d, m, *which, 20, table)


def test_psi_closed_counts():
    assert gf.psi_closed(3, 0, (0, 0), 6).as_integers() == [m_seq(3, n + 1) for n in range(7)]


def test_psi_closed_rejects_other_pairs():
    with pytest.raises(ValueError):
        gf.psi_closed_form(2, 0, (1, 1))


def test_inv_power_examples():
    assert gf.inv_power_expand(2, 1, 6, "mbasis").as_integers() == [m_seq(2, n) for n in range(7)]
    assert gf.inv_power_expand(1, 2, 2, "mbasis")[2] == 5
    for method in ("direct", "partialfraction", "mbasis"):
        assert gf.inv_power_expand(3, 2, 0, method).as_integers() == [1]


@pytest.mark.parametrize("d", [1, 2, 3])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_inv_power_triple_agreement(d, k):
    direct = gf.inv_power_expand(d, k, 30, "direct")
    coeffs = gf.partial_fraction_coefficients(d, k, 30)
    assert all(c.is_rational() for c in coeffs)
    assert gf.inv_power_expand(d, k, 30, "partialfraction") == direct
    assert gf.inv_power_expand(d, k, 30, "mbasis") == direct


def test_inv_power_errors():
    with pytest.raises(ValueError):
        gf.inv_power_expand(1, 4, 5, "mbasis")
    with pytest.raises(ValueError):
        gf.inv_power_expand(1, 0, 5)


def test_structure_examples(table):
    r = gf.gf_structure_check(1, 0, 1, 20, table=table)
    assert r.ok and all(not any(c[4:]) for c in r.numerators.values())
    r = gf.gf_structure_check(2, 0, 0, 20, table=table)
    assert all(c[:2] == [1, 2] and not any(c[2:]) for c in r.numerators.values())
    assert gf.gf_structure_check(1, 1, 0, 20, table=table).m_degree_ok


@pytest.mark.parametrize("d", [1, 2, 3])
def test_structure_all_small_pairs(d, table):
    for a in range(4):
        for b in range(4 - a):
            r = gf.gf_structure_check(d, a, b, 30, table=table)
            assert r.ok
            assert r.observed_degree <= 4 * a + 2 * b + 1
