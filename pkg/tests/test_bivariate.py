from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rankcrank.bivariate import (PoleAtSample, ZLaurentSeries, asd_S, crank_gf, crank_star_at, pde_sides,
                                 rank_gf, rank_star_at, verify_asd_identity, verify_pde, verify_pde_star,
                                 verify_s_rank_identity)
from rankcrank.partitions import crank_table, rank_table
from rankcrank.series import partition_gf

laurent = st.dictionaries(st.integers(-3, 3), st.integers(-5, 5), max_size=4)
bseries = st.lists(laurent, min_size=6, max_size=6).map(lambda t: ZLaurentSeries(t, 5))


def test_generating_functions_match_enumeration():
    r, c = rank_gf(15), crank_gf(15)
    for n in range(2, 16):
        assert r.terms[n] == rank_table(n).counts
        assert c.terms[n] == crank_table(n).counts
    assert c.terms[1] == {-1: 1, 0: -1, 1: 1}


def test_both_reduce_to_partition_gf_at_one():
    assert rank_gf(30).at_one() == partition_gf(30)
    assert crank_gf(30).at_one() == partition_gf(30)


def test_z_symmetry():
    assert rank_gf(20).is_z_symmetric() and crank_gf(20).is_z_symmetric()


def test_crank_second_moment_values():
    s = crank_gf(6).delta_z(2).at_one()
    assert [s[n] for n in range(1, 7)] == [2, 8, 18, 40, 70, 132]


def test_pde_holds_at_order_30():
    rep = verify_pde(30)
    assert rep.passed and not any(rep.max_discrepancy)


def test_pde_sides_differ_when_perturbed():
    lhs, rhs = pde_sides(8)
    bumped = rhs + ZLaurentSeries([{}, {}, {}, {0: 1}], 8)
    assert lhs == rhs and lhs != bumped


@pytest.mark.parametrize("z, zeta", [(2, 3), (3, 2), (2, 5), (Fraction(1, 2), 3)])
def test_asd_identity(z, zeta):
    assert verify_asd_identity(z, zeta, 20).passed


@pytest.mark.parametrize("z", [2, 3, Fraction(-1, 3)])
def test_star_identities(z):
    assert verify_s_rank_identity(z, 25).passed
    assert verify_pde_star(z, 25).passed


def test_poles_are_reported():
    with pytest.raises(PoleAtSample):
        rank_star_at(1, 5)
    with pytest.raises(PoleAtSample):
        crank_star_at(1, 5)
    with pytest.raises(PoleAtSample):
        asd_S(1, 2, 5)
    with pytest.raises(PoleAtSample):
        verify_asd_identity(2, 1, 5)


def test_report_serialises():
    d = verify_asd_identity(2, 3, 6).to_dict()
    assert d == {"identity": "asd-identity", "order": 6, "samples": [["2", "3"]], "status": "pass",
                 "first_failure": None}


@given(bseries, bseries, bseries)
def test_bivariate_ring(a, b, c):
    assert a * b == b * a
    assert (a + b) * c == a * c + b * c


@given(bseries, bseries)
def test_euler_operators_are_derivations(a, b):
    assert (a * b).delta_z() == a.delta_z() * b + a * b.delta_z()
    assert (a * b).delta_q() == a.delta_q() * b + a * b.delta_q()


@given(bseries, st.sampled_from([Fraction(2), Fraction(-1, 3), Fraction(5, 7)]))
def test_evaluation_is_a_ring_map(a, z):
    b = ZLaurentSeries([{1: 1, -1: 2}, {0: 3}], 5)
    assert (a * b).at_z(z) == a.at_z(z) * b.at_z(z)
