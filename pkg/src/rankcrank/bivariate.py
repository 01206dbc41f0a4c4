"""Series in q whose coefficients are Laurent polynomials in z.

Carries the rank and crank generating functions R(z,q), C(z,q), the Euler
operators in z and q, and exact checks of the rank-crank PDE and of the
Atkin-Swinnerton-Dyer identity at rational sample points.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from . import kernels
from .partitions import RANK, count_matrix
from .series import QSeries, _as_fraction, eta_power

ZLaurent = dict  # {z exponent: exact rational}, zeros never stored


class PoleAtSample(ZeroDivisionError):
    """A denominator vanishes at q^0 for the chosen sample point."""


def _clean(d: Mapping[int, object]) -> ZLaurent:
    return {m: c for m, c in d.items() if c}


def lp_add(a: Mapping, b: Mapping, sign=1) -> ZLaurent:
    out = dict(a)
    for m, c in b.items():
        out[m] = out.get(m, 0) + sign * c
    return _clean(out)


def lp_mul(a: Mapping, b: Mapping) -> ZLaurent:
    out: dict[int, object] = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out.get(i + j, 0) + x * y
    return _clean(out)


def lp_eval(a: Mapping, z: Fraction) -> Fraction:
    return sum((Fraction(c) * z**m for m, c in a.items()), Fraction(0))


class ZLaurentSeries:
    """sum_{n <= order} terms[n](z) q^n with exact Laurent-polynomial coefficients."""

    __slots__ = ("terms", "order")

    def __init__(self, terms: Iterable[Mapping[int, object]], order: int | None = None):
        terms = [_clean(t) for t in terms]
        if order is None:
            order = len(terms) - 1
        terms = (terms + [{} for _ in range(order + 1)])[: order + 1]
        self.terms = tuple(terms)
        self.order = order

    @classmethod
    def from_qseries(cls, s: QSeries) -> ZLaurentSeries:
        return cls([{0: c} for c in s.coeffs], s.order)

    @classmethod
    def from_table(cls, table, offset: int) -> ZLaurentSeries:
        """Dense table with row n and column m + offset."""
        terms = []
        for row in table:
            terms.append({j - offset: int(c) for j, c in enumerate(row) if c})
        return cls(terms)

    @classmethod
    def zlaurent(cls, poly: Mapping[int, object], order: int) -> ZLaurentSeries:
        """A z-only Laurent polynomial viewed as a series."""
        return cls([poly], order)

    def coefficient(self, n: int, m: int):
        return self.terms[n].get(m, 0)

    def __eq__(self, other):
        if not isinstance(other, ZLaurentSeries):
            return NotImplemented
        return self.order == other.order and self.terms == other.terms

    def __repr__(self):
        return f"ZLaurentSeries(order={self.order}, q0={self.terms[0]}, q1={self.terms[1] if self.order else {}})"

    # -- ring operations ------------------------------------------------------

    def __add__(self, other: ZLaurentSeries) -> ZLaurentSeries:
        order = min(self.order, other.order)
        return ZLaurentSeries([lp_add(a, b) for a, b in zip(self.terms[: order + 1], other.terms)], order)

    def __sub__(self, other: ZLaurentSeries) -> ZLaurentSeries:
        order = min(self.order, other.order)
        return ZLaurentSeries([lp_add(a, b, -1) for a, b in zip(self.terms[: order + 1], other.terms)], order)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> ZLaurentSeries:
        c = _as_fraction(c)
        if c.denominator == 1:
            c = c.numerator
        return ZLaurentSeries([{m: c * x for m, x in t.items()} for t in self.terms], self.order)

    def mul_z(self, poly: Mapping[int, object]) -> ZLaurentSeries:
        """Multiply every q-coefficient by a Laurent polynomial in z."""
        return ZLaurentSeries([lp_mul(t, poly) for t in self.terms], self.order)

    def __mul__(self, other):
        if not isinstance(other, ZLaurentSeries):
            return self.scale(other)
        order = min(self.order, other.order)
        out = [{} for _ in range(order + 1)]
        for i in range(order + 1):
            a = self.terms[i]
            if not a:
                continue
            for j in range(order + 1 - i):
                b = other.terms[j]
                if not b:
                    continue
                acc = out[i + j]
                for ma, ca in a.items():
                    for mb, cb in b.items():
                        acc[ma + mb] = acc.get(ma + mb, 0) + ca * cb
        return ZLaurentSeries(out, order)

    __rmul__ = __mul__

    # -- operators --------------------------------------------------------------

    def delta_z(self, times: int = 1) -> ZLaurentSeries:
        """(z d/dz)^times: z^m scales by m^times."""
        return ZLaurentSeries([{m: m**times * c for m, c in t.items()} for t in self.terms], self.order)

    def delta_q(self, times: int = 1) -> ZLaurentSeries:
        return ZLaurentSeries([{m: n**times * c for m, c in t.items()} for n, t in enumerate(self.terms)],
                              self.order)

    def at_z(self, z) -> QSeries:
        z = _as_fraction(z)
        if z == 0:
            raise PoleAtSample("z = 0")
        return QSeries([lp_eval(t, z) for t in self.terms], self.order)

    def at_one(self) -> QSeries:
        return QSeries([sum(t.values()) for t in self.terms], self.order)

    def moment(self, j: int) -> QSeries:
        """(delta_z^j F)(1, q) without materialising the intermediate series."""
        return QSeries([sum(m**j * c for m, c in t.items()) for t in self.terms], self.order)

    def truncate(self, order: int) -> ZLaurentSeries:
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return ZLaurentSeries(self.terms[: order + 1], order)

    def is_z_symmetric(self) -> bool:
        return all(t.get(-m, 0) == c for t in self.terms for m, c in t.items())


def bs_add(a: ZLaurentSeries, b: ZLaurentSeries) -> ZLaurentSeries:
    return a + b


def bs_mul(a: ZLaurentSeries, b: ZLaurentSeries) -> ZLaurentSeries:
    return a * b


def bs_scale(a: ZLaurentSeries, c) -> ZLaurentSeries:
    return a.scale(c)


def delta_z(a: ZLaurentSeries) -> ZLaurentSeries:
    return a.delta_z()


def delta_q_b(a: ZLaurentSeries) -> ZLaurentSeries:
    return a.delta_q()


# --------------------------------------------------------------------------
# generating functions
# --------------------------------------------------------------------------

@lru_cache(maxsize=8)
def rank_gf(order: int) -> ZLaurentSeries:
    """R(z,q), assembled from the single-sum count series for every |m| <= order."""
    t = count_matrix(RANK, order)
    terms = []
    for n in range(order + 1):
        d = {}
        for m in range(-n, n + 1):
            c = int(t[abs(m), n])
            if c:
                d[m] = c
        terms.append(d)
    return ZLaurentSeries(terms, order)


@lru_cache(maxsize=8)
def crank_gf(order: int) -> ZLaurentSeries:
    """C(z,q) from its infinite-product form."""
    return ZLaurentSeries.from_table(kernels.crank_product_table(order), order)


def rank_star_at(z, order: int) -> QSeries:
    """R*(z,q) = R(z,q)/(1-z) at a rational z != 1."""
    z = _as_fraction(z)
    if z == 1:
        raise PoleAtSample("R* has a pole at z = 1")
    return rank_gf(order).at_z(z) / (1 - z)


def crank_star_at(z, order: int) -> QSeries:
    z = _as_fraction(z)
    if z == 1:
        raise PoleAtSample("C* has a pole at z = 1")
    return crank_gf(order).at_z(z) / (1 - z)


# --------------------------------------------------------------------------
# verification reports
# --------------------------------------------------------------------------

def _fmt(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass
class IdentityReport:
    identity: str
    order: int
    samples: list = field(default_factory=list)
    status: str = "pass"
    first_failure: dict | None = None
    # largest |lhs - rhs| over z-powers, per q-power
    max_discrepancy: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "order": self.order,
            "samples": [[_fmt(v) for v in s] if isinstance(s, (tuple, list)) else _fmt(s)
                        for s in self.samples],
            "status": self.status,
            "first_failure": self.first_failure,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _compare_bivariate(name: str, lhs: ZLaurentSeries, rhs: ZLaurentSeries) -> IdentityReport:
    rep = IdentityReport(name, min(lhs.order, rhs.order))
    for n in range(rep.order + 1):
        a, b = lhs.terms[n], rhs.terms[n]
        worst = Fraction(0)
        for m in sorted(set(a) | set(b)):
            d = Fraction(a.get(m, 0) - b.get(m, 0))
            if d:
                worst = max(worst, abs(d))
                if rep.first_failure is None:
                    rep.status = "fail"
                    rep.first_failure = {"q_power": n, "z_power": m,
                                         "lhs": _fmt(a.get(m, 0)), "rhs": _fmt(b.get(m, 0))}
        rep.max_discrepancy.append(worst)
    return rep


def compare_series(name: str, lhs: QSeries, rhs: QSeries, samples=()) -> IdentityReport:
    rep = IdentityReport(name, min(lhs.order, rhs.order), samples=list(samples))
    for n in range(rep.order + 1):
        d = lhs[n] - rhs[n]
        rep.max_discrepancy.append(abs(d))
        if d and rep.first_failure is None:
            rep.status = "fail"
            rep.first_failure = {"q_power": n, "z_power": None, "lhs": _fmt(lhs[n]), "rhs": _fmt(rhs[n])}
    return rep


def pde_sides(order: int) -> tuple[ZLaurentSeries, ZLaurentSeries]:
    """Both sides of the rank-crank PDE in (C, R) form as exact Laurent series."""
    c = crank_gf(order)
    r = rank_gf(order)
    eta2 = ZLaurentSeries.from_qseries(eta_power(2, order))
    lhs = (eta2 * (c * c * c)).mul_z({1: 1})
    one_minus_z_sq = {0: 1, 1: -2, 2: 1}
    half = Fraction(1, 2)
    rhs = (r.delta_q().scale(3) + r.delta_z(2).scale(half)).mul_z(one_minus_z_sq)
    rhs = rhs - r.delta_z().mul_z({2: half, 0: -half}) + r.mul_z({1: 1})
    return lhs, rhs


def verify_pde(order: int) -> IdentityReport:
    if order < 1:
        raise ValueError("order must be at least 1")
    lhs, rhs = pde_sides(order)
    return _compare_bivariate("rank-crank-pde", lhs, rhs)


def verify_pde_star(z, order: int) -> IdentityReport:
    """The R*/C* form of the PDE at a rational z (carries 1/(1-z), so not polynomial in z)."""
    z = _as_fraction(z)
    if z in (0, 1):
        raise PoleAtSample(f"z = {z}")
    r = rank_gf(order)
    g0 = 1 / (1 - z)
    g1 = z / (1 - z) ** 2
    g2 = z * (1 + z) / (1 - z) ** 3
    R0, R1, R2 = r.at_z(z), r.delta_z().at_z(z), r.delta_z(2).at_z(z)
    star0 = R0 * g0
    star1 = R1 * g0 + R0 * g1
    star2 = R2 * g0 + R1 * g1 * 2 + R0 * g2
    rhs = star0.delta_q() * 3 + star1 * Fraction(1, 2) + star2 * Fraction(1, 2)
    cs = crank_star_at(z, order)
    lhs = eta_power(2, order) * cs * cs * cs * z
    return compare_series("rank-crank-pde-star", lhs, rhs, samples=[z])


# --------------------------------------------------------------------------
# Atkin-Swinnerton-Dyer functions
# --------------------------------------------------------------------------

def asd_S(z, zeta, order: int) -> QSeries:
    """S(z, zeta, q) = sum_n (-1)^n zeta^n q^{3n(n+1)/2} / (1 - z q^n), expanded in |q| < 1."""
    z, zeta = _as_fraction(z), _as_fraction(zeta)
    if z == 0 or zeta == 0:
        raise PoleAtSample("z and zeta must be nonzero")
    if z == 1:
        raise PoleAtSample("the n = 0 term 1/(1 - z) has a pole at z = 1")
    c = [Fraction(0)] * (order + 1)
    c[0] += 1 / (1 - z)
    n = 1
    while 3 * n * (n + 1) // 2 <= order:
        pref = (-1) ** n * zeta**n
        e = 3 * n * (n + 1) // 2
        k = 0
        while e + n * k <= order:
            c[e + n * k] += pref * z**k
            k += 1
        n += 1
    # n = -m: 1/(1 - z q^-m) = -sum_{k>=1} z^-k q^{mk}
    m = 1
    while 3 * m * (m - 1) // 2 + m <= order:
        pref = (-1) ** m * zeta ** (-m)
        e = 3 * m * (m - 1) // 2
        k = 1
        while e + m * k <= order:
            c[e + m * k] -= pref * z ** (-k)
            k += 1
        m += 1
    return QSeries(c, order)


def asd_J(z, order: int) -> QSeries:
    """J(z, q) = prod_{n>=1} (1 - q^n/z)(1 - z q^{n-1})."""
    z = _as_fraction(z)
    if z == 0:
        raise PoleAtSample("z must be nonzero")
    c = [Fraction(0)] * (order + 1)
    c[0] = 1 - z
    for n in range(1, order + 1):
        for f in (1 / z, z):
            for i in range(order, n - 1, -1):
                c[i] -= f * c[i - n]
    return QSeries(c, order)


def asd_identity_sides(z, zeta, order: int) -> tuple[QSeries, QSeries]:
    z, zeta = _as_fraction(z), _as_fraction(zeta)
    if zeta == 0 or z == 0:
        raise PoleAtSample("z and zeta must be nonzero")
    for label, v in (("z", z), ("z*zeta", z * zeta), ("z/zeta", z / zeta), ("zeta", zeta), ("zeta^2", zeta**2)):
        if v == 1:
            raise PoleAtSample(f"{label} = 1 makes a q^0 denominator vanish")
    j1 = asd_J(zeta, order)
    j2 = asd_J(zeta**2, order)
    lhs = (asd_S(z * zeta, zeta**3, order) * zeta**3
           + asd_S(z / zeta, zeta**-3, order)
           - j2 * j1.inv() * asd_S(z, 1, order) * zeta)
    den = asd_J(zeta * z, order) * asd_J(z, order) * asd_J(z / zeta, order)
    rhs = j1 * j2 * eta_power(2, order) * den.inv()
    return lhs, rhs


def verify_asd_identity(z, zeta, order: int) -> IdentityReport:
    lhs, rhs = asd_identity_sides(z, zeta, order)
    return compare_series("asd-identity", lhs, rhs, samples=[(_as_fraction(z), _as_fraction(zeta))])


def verify_s_rank_identity(z, order: int) -> IdentityReport:
    """z S(z,1,q) = (q)_inf (R*(z,q) - 1)."""
    z = _as_fraction(z)
    lhs = asd_S(z, 1, order) * z
    rhs = eta_power(1, order) * (rank_star_at(z, order) - 1)
    return compare_series("s-rank-identity", lhs, rhs, samples=[z])
