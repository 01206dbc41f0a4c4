from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rankcrank.quasimodular import (NotInSpace, PhiPolynomial, basis_key, bernoulli, dim_M, dim_V, dim_W,
                                    E_poly, eisenstein, express_in_PW, generator_derivative, grade,
                                    monomial_basis_V, monomial_basis_W, phi_series, reduce_phi)
from rankcrank.relations import phi_from_text
from rankcrank.series import QSeries, partition_gf

F1, F3, F5 = (PhiPolynomial.generator(j) for j in (1, 3, 5))


def test_bernoulli():
    assert [bernoulli(n) for n in (0, 1, 2, 4, 6, 12)] == [1, Fraction(-1, 2), Fraction(1, 6), Fraction(-1, 30),
                                                          Fraction(1, 42), Fraction(-691, 2730)]


def test_eisenstein_normalisation():
    assert eisenstein(4, 5) == QSeries.one(5) + phi_series(3, 5) * 240
    assert eisenstein(6, 5) == QSeries.one(5) - phi_series(5, 5) * 504
    assert eisenstein(2, 5) == QSeries.one(5) - phi_series(1, 5) * 24


def test_phi_series():
    assert [phi_series(3, 6)[n] for n in range(7)] == [0, 1, 9, 28, 73, 126, 252]
    with pytest.raises(ValueError):
        phi_series(2, 4)


def test_generator_derivatives_closed_forms():
    assert generator_derivative(1) == phi_from_text("5/6*F3 + 1/6*F1 - 2*F1**2")
    assert generator_derivative(3) == phi_from_text("7/10*F5 + 1/3*F3 - 1/30*F1 - 8*F1*F3")
    assert generator_derivative(5) == phi_from_text("1/2*F5 + 1/42*F1 - 12*F1*F5 + 10/21*F3 + 400/7*F3**2")


@pytest.mark.parametrize("j", [1, 3, 5])
def test_generator_derivatives_as_series(j):
    assert generator_derivative(j).evaluate(40) == phi_series(j, 40).delta_q()


def test_ramanujan_system():
    E2, E4, E6 = (eisenstein(k, 40) for k in (2, 4, 6))
    assert E2.delta_q() * 12 == E2 * E2 - E4
    assert E4.delta_q() * 3 == E2 * E4 - E6
    assert E6.delta_q() * 2 == E2 * E6 - E4 * E4
    assert E_poly(4).evaluate(20) == eisenstein(4, 20)


def test_reductions():
    assert reduce_phi(7) == F3 + F3 * F3 * 120
    assert reduce_phi(11) == phi_from_text("1/13*(63*(F3 + 240*F3**2 + 19200*F3**3 + 200*F5**2) - 50*F5)")
    for j in (9, 13):
        assert reduce_phi(j).evaluate(40) == phi_series(j, 40)


def test_dimension_table():
    rows = [(k, dim_M(k), dim_V(k), dim_W(k)) for k in range(1, 11)]
    assert rows == [(1, 0, 1, 1), (2, 1, 2, 3), (3, 1, 3, 6), (4, 1, 4, 10), (5, 1, 5, 15), (6, 2, 7, 22),
                    (7, 1, 8, 30), (8, 2, 10, 40), (9, 2, 12, 52), (10, 2, 14, 66)]
    for k in range(1, 11):
        assert len(monomial_basis_W(k)) == dim_W(k)
        assert len(monomial_basis_V(k)) == dim_V(k)


def test_basis_order():
    assert monomial_basis_W(2) == ((1, 0, 0), (2, 0, 0), (0, 1, 0))
    assert list(monomial_basis_W(6)) == sorted(monomial_basis_W(6), key=basis_key)
    assert grade((1, 2, 1)) == 8


def test_express_in_PW():
    c2 = partition_gf(20).delta_q() * 2
    assert express_in_PW(c2, 1, 20) == F1 * 2
    with pytest.raises(NotInSpace):
        express_in_PW(partition_gf(20) * phi_series(7, 20) * F1.evaluate(20), 2, 20)
    with pytest.raises(ValueError):
        express_in_PW(c2, 6, 20)


polys = st.dictionaries(
    st.tuples(st.integers(0, 2), st.integers(0, 1), st.integers(0, 1)).filter(any),
    st.fractions(min_value=-5, max_value=5, max_denominator=4), max_size=4).map(PhiPolynomial)


@given(polys, polys)
def test_delta_q_is_a_derivation(a, b):
    assert (a * b).delta_q() == a.delta_q() * b + a * b.delta_q()


@given(polys)
def test_delta_q_commutes_with_evaluation(a):
    assert a.delta_q().evaluate(15) == a.evaluate(15).delta_q()


@given(polys)
def test_grade_bound_under_delta(a):
    n = max((grade(m) for m in a.terms), default=1)
    assert a.delta_q().in_W(n + 1) or not a


@given(polys)
def test_list_round_trip(a):
    assert PhiPolynomial.from_list(a.to_list()) == a
