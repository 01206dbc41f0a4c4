from fractions import Fraction
from itertools import count

import pytest
from hypothesis import given, strategies as st

from rankcrank.series import (QSeries, ZeroConstantTerm, delta_q, eta_power, partition_gf, partition_numbers,
                              pentagonal_terms, qs_add, qs_inv, qs_mul)

ORDER = 12
coeff = st.fractions(min_value=-50, max_value=50, max_denominator=12)
series = st.lists(coeff, min_size=ORDER + 1, max_size=ORDER + 1).map(lambda c: QSeries(c, ORDER))
unit_series = series.filter(lambda s: s[0] != 0)


def brute_partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        return 1
    return sum(brute_partitions(n - k, k) for k in range(1, min(n, largest) + 1))


def product_power(r, order):
    """prod (1 - q^k)^r by repeated multiplication of binomial factors."""
    out = QSeries.one(order)
    for k in range(1, order + 1):
        f = QSeries.one(order) - QSeries.monomial(k, order)
        out = out * (f ** r if r >= 0 else f.inv() ** (-r))
    return out


def test_partition_numbers_match_brute_force():
    ps = partition_numbers(25)
    assert list(ps) == [brute_partitions(n) for n in range(26)]
    assert partition_numbers(50)[50] == 204226


def test_partition_gf_is_inverse_of_euler_product():
    assert partition_gf(30) * eta_power(1, 30) == QSeries.one(30)


def test_pentagonal_terms():
    assert pentagonal_terms(15) == [(0, 1), (1, -1), (2, -1), (5, 1), (7, 1), (12, -1), (15, -1)]


@pytest.mark.parametrize("r", [-3, -1, 1, 2, 5, 23, 24])
def test_eta_power_matches_product(r):
    assert eta_power(r, 15) == product_power(r, 15)


def test_ramanujan_tau_from_eta_24():
    tau = eta_power(24, 10).shift(1)
    assert [tau[n] for n in range(1, 8)] == [1, -24, 252, -1472, 4830, -6048, -16744]


def test_p23_shift_example():
    # p_23(0) = 1 and p_23(1) = -23
    s = eta_power(23, 5)
    assert (s[0], s[1]) == (1, -23)


@given(series, series, series)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == QSeries.zero(ORDER)


@given(unit_series)
def test_inverse(a):
    assert a * a.inv() == QSeries.one(ORDER)
    assert qs_inv(a) == a.inv()


@given(series, series)
def test_delta_q_is_a_derivation(a, b):
    assert (a * b).delta_q() == a.delta_q() * b + a * b.delta_q()
    assert delta_q(a) == a.delta_q()


@given(series, series)
def test_spec_aliases(a, b):
    assert qs_add(a, b) == a + b
    assert qs_mul(a, b) == a * b


@given(series)
def test_json_round_trip(a):
    assert QSeries.from_json(a.to_json()) == a


def test_zero_constant_term_has_no_inverse():
    with pytest.raises(ZeroConstantTerm):
        QSeries([0, 1, 2], 2).inv()


def test_mixed_orders_truncate_to_the_smaller():
    a = QSeries([1, 2, 3, 4], 3)
    b = QSeries([1, 1], 1)
    assert (a + b).order == 1
    assert (a * b) == QSeries([1, 3], 1)


def test_truncate_cannot_extend():
    with pytest.raises(ValueError):
        QSeries([1, 2], 1).truncate(3)


def test_division_and_powers():
    a = QSeries([2, 1, Fraction(1, 3)], 2)
    assert (a / a) == QSeries.one(2)
    assert a ** 3 == a * a * a
    assert a ** -2 == (a * a).inv()


def test_valuation_and_shift():
    a = QSeries.monomial(3, 8, 5)
    assert a.valuation() == 3
    assert a.shift(2)[5] == 5
    assert QSeries.zero(4).valuation() is None


def test_large_order_inverse_is_exact():
    # p(200) = 3972999029388
    assert partition_gf(200)[200] == 3972999029388
    e = eta_power(1, 200)
    for n in count(1):
        if n > 200:
            break
        assert e.inv()[n] == partition_numbers(200)[n]
