"""Rank and crank moments and their generating functions.

R_j = sum_n N_j(n) q^n and C_j = sum_n M_j(n) q^n are read off the bivariate
generating functions by applying delta_z^j at z = 1. C_0 = P. The crank moments
also satisfy a recurrence in P and the Phi_j, used here as an independent route.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .bivariate import crank_gf, rank_gf
from .partitions import CRANK, RANK
from .quasimodular import (PhiPolynomial, dim_W, express_in_PW, generator_derivative,
                           phi_series, reduce_phi)
from .series import QSeries, partition_gf


@dataclass(frozen=True)
class MomentSeries:
    kind: str
    j: int
    series: QSeries

    def __getitem__(self, n):
        return self.series[n]

    def values(self) -> list[int]:
        return self.series.ints()


def _check_even(j: int, low: int = 2):
    if j < low or j % 2:
        raise ValueError(f"moment index must be even and >= {low}, got {j}")


@lru_cache(maxsize=128)
def _moment(kind: str, j: int, order: int) -> QSeries:
    if j == 0:
        # delta_z^0 at z = 1: R(1,q) = C(1,q) = P(q)
        return partition_gf(order)
    gf = rank_gf(order) if kind == RANK else crank_gf(order)
    return gf.moment(j)


def rank_moment_series(j: int, order: int) -> MomentSeries:
    _check_even(j)
    return MomentSeries(RANK, j, _moment(RANK, j, order))


def crank_moment_series_direct(j: int, order: int) -> MomentSeries:
    _check_even(j)
    return MomentSeries(CRANK, j, _moment(CRANK, j, order))


def R(j: int, order: int) -> QSeries:
    """R_j as a bare series (j = 0 gives P)."""
    _check_even(j, 0)
    return _moment(RANK, j, order)


def C(j: int, order: int) -> QSeries:
    _check_even(j, 0)
    return _moment(CRANK, j, order)


def crank_moment_series_rec(a: int, order: int) -> MomentSeries:
    """C_a = 2 sum_{j=1}^{a/2-1} binom(a-1, 2j-1) Phi_{2j-1} C_{a-2j} + 2 Phi_{a-1} P."""
    _check_even(a)
    P = partition_gf(order)
    cs = {0: P}
    for b in range(2, a + 1, 2):
        acc = phi_series(b - 1, order) * P
        for j in range(1, b // 2):
            acc = acc + phi_series(2 * j - 1, order) * cs[b - 2 * j] * comb(b - 1, 2 * j - 1)
        cs[b] = acc * 2
    return MomentSeries(CRANK, a, cs[a])


def crank_phi(a: int) -> PhiPolynomial:
    """Phi with C_a = P * Phi, from the recurrence, Phi_j (j >= 7) reduced to Phi_3, Phi_5."""
    _check_even(a)
    psi = {0: PhiPolynomial.constant(1)}
    for b in range(2, a + 1, 2):
        acc = _phi_gen(b - 1)
        for j in range(1, b // 2):
            acc = acc + _phi_gen(2 * j - 1) * psi[b - 2 * j] * comb(b - 1, 2 * j - 1)
        psi[b] = acc * 2
    return psi[a]


@lru_cache(maxsize=None)
def _phi_gen(j: int) -> PhiPolynomial:
    if j in (1, 3, 5):
        return PhiPolynomial.generator(j)
    return reduce_phi(j)


# --------------------------------------------------------------------------
# delta_q towers
# --------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _dqP_phi(m: int) -> PhiPolynomial:
    # delta^a P = sum_{j<a} binom(a-1, j) delta^j(Phi_1) delta^{a-1-j} P
    if m == 0:
        return PhiPolynomial.constant(1)
    out = PhiPolynomial()
    dphi = PhiPolynomial.generator(1)
    for j in range(m):
        out = out + dphi * _dqP_phi(m - 1 - j) * comb(m - 1, j)
        dphi = dphi.delta_q()
    return out


def deltaq_P_tower(m: int, order: int) -> tuple[QSeries, PhiPolynomial]:
    """delta_q^m(P) and the Phi in W_m with delta_q^m(P) = P * Phi."""
    if m < 1:
        raise ValueError("m must be at least 1")
    s = partition_gf(order)
    for _ in range(m):
        s = s.delta_q()
    return s, _dqP_phi(m)


def dq(s: QSeries, m: int) -> QSeries:
    for _ in range(m):
        s = s.delta_q()
    return s


def deltaq_crank_tower(n: int, m: int, order: int) -> tuple[QSeries, PhiPolynomial]:
    """delta_q^m(C_{2n}) and its Phi in W_{n+m}, found by exact fitting."""
    if n < 1 or m < 0:
        raise ValueError("need n >= 1 and m >= 0")
    fit_order = max(order, 2 * dim_W(n + m) + 4)
    phi = express_in_PW(dq(C(2 * n, fit_order), m), n + m, fit_order)
    return dq(C(2 * n, order), m), phi


def crank_tower_phi(n: int, m: int) -> PhiPolynomial:
    """Same Phi as :func:`deltaq_crank_tower`, by symbolic differentiation of P * Phi."""
    phi = crank_phi(2 * n)
    p1 = PhiPolynomial.generator(1)
    for _ in range(m):
        phi = phi.delta_q() + p1 * phi
    return phi


# --------------------------------------------------------------------------
# T_k and the family C_k
# --------------------------------------------------------------------------

def T_terms(k: int) -> list[tuple[int, int, int]]:
    """(j, c0, c1) with T_k = sum (c0 R_j + c1 delta_q R_j)."""
    if k < 1:
        raise ValueError("k must be positive")
    out = [(2 * k, (2 * k - 1) * (k - 1), 0)]
    for i in range(1, k):
        c1 = 6 * comb(2 * k, 2 * i) * (2 ** (2 * i - 1) - 1)
        c0 = (comb(2 * k, 2 * i + 2) * (2 ** (2 * i + 1) - 1)
              - 2 ** (2 * i) * comb(2 * k, 2 * i + 1) + comb(2 * k, 2 * i))
        out.append((2 * k - 2 * i, c0, c1))
    return out


@lru_cache(maxsize=64)
def T_series(k: int, order: int) -> QSeries:
    out = QSeries.zero(order)
    for j, c0, c1 in T_terms(k):
        r = R(j, order)
        out = out + r * c0 + r.delta_q() * c1
    return out


def C_family(k: int) -> list[tuple[int, int]]:
    """(j, m) for delta_q^m(C_{2j}), 1 <= j <= k, j + m <= k, ordered by j then m."""
    if k < 1:
        raise ValueError("k must be positive")
    return [(j, m) for j in range(1, k + 1) for m in range(k - j + 1)]


# --------------------------------------------------------------------------
# tables
# --------------------------------------------------------------------------

def moment_rows(order: int, js=(2, 4, 6, 8, 10, 12, 14)):
    """Rows (n, N_j(n)..., M_j(n)...) for 0 <= n <= order."""
    cols = [R(j, order).ints() for j in js] + [C(j, order).ints() for j in js]
    header = ["n"] + [f"N{j}" for j in js] + [f"M{j}" for j in js]
    rows = [[n] + [c[n] for c in cols] for n in range(order + 1)]
    return header, rows


def moment_csv(order: int, js=(2, 4, 6, 8, 10, 12, 14)) -> str:
    header, rows = moment_rows(order, js)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([str(x) for x in row])
    return buf.getvalue()


def generator_tower_check(n: int, m: int) -> bool:
    """delta_q^m maps each basis monomial of W_n into W_{n+m}."""
    from .quasimodular import monomial_basis_W

    for mono in monomial_basis_W(n):
        p = PhiPolynomial.monomial(mono)
        for _ in range(m):
            p = p.delta_q()
        if not p.in_W(n + m):
            return False
    return True


__all__ = [
    "MomentSeries", "rank_moment_series", "crank_moment_series_direct", "crank_moment_series_rec",
    "crank_phi", "deltaq_P_tower", "deltaq_crank_tower", "crank_tower_phi", "T_terms", "T_series",
    "C_family", "moment_csv", "moment_rows", "R", "C", "dq", "generator_derivative",
    "generator_tower_check",
]
