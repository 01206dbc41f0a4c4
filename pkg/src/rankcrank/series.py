"""Exact truncated power series in q.

A :class:`QSeries` is stored as integer numerators over one common positive
denominator, reduced so that the gcd of all numerators and the denominator is 1.
The public view (``coeffs``, indexing) is in :class:`fractions.Fraction`.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd, lcm
from numbers import Rational
from typing import Iterable, Sequence

import numpy as np


class ZeroConstantTerm(ZeroDivisionError):
    """Raised when inverting a series whose q^0 coefficient vanishes."""


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, np.integer)):
        return Fraction(int(x))
    if isinstance(x, Rational):
        return Fraction(int(x.numerator), int(x.denominator))
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


def _convolve(a: Sequence[int], b: Sequence[int], length: int) -> list[int]:
    # schoolbook product; swap in a subquadratic method here if orders grow past ~10^3
    a = list(a[:length])
    b = list(b[:length])
    if not any(a) or not any(b):
        return [0] * length
    sa = [(i, x) for i, x in enumerate(a) if x]
    if len(sa) * 4 < len(a):
        out = [0] * length
        for i, x in sa:
            for j, y in enumerate(b[: length - i]):
                if y:
                    out[i + j] += x * y
        return out
    c = np.convolve(np.array(a, dtype=object), np.array(b, dtype=object))
    return [int(v) for v in c[:length]]


class QSeries:
    """Immutable series c_0 + c_1 q + ... + c_N q^N, exact through q^N."""

    __slots__ = ("_num", "_den", "_order")

    def __init__(self, coeffs: Iterable = (), order: int | None = None):
        fr = [_as_fraction(c) for c in coeffs]
        if order is None:
            order = len(fr) - 1
        if order < 0:
            raise ValueError("order must be nonnegative")
        fr = (fr + [Fraction(0)] * (order + 1))[: order + 1]
        den = reduce(lcm, (c.denominator for c in fr), 1)
        self._set([c.numerator * (den // c.denominator) for c in fr], den, order)

    def _set(self, num, den, order):
        g = reduce(gcd, num, den)
        if g > 1:
            num = [x // g for x in num]
            den //= g
        self._num = tuple(num)
        self._den = den
        self._order = order

    @classmethod
    def _raw(cls, num, den, order) -> QSeries:
        obj = cls.__new__(cls)
        if den < 0:
            num = [-x for x in num]
            den = -den
        obj._set(list(num), den, order)
        return obj

    @classmethod
    def from_ints(cls, values: Iterable[int], order: int | None = None) -> QSeries:
        vals = [int(v) for v in values]
        if order is None:
            order = len(vals) - 1
        vals = (vals + [0] * (order + 1))[: order + 1]
        return cls._raw(vals, 1, order)

    @classmethod
    def zero(cls, order: int) -> QSeries:
        return cls._raw([0] * (order + 1), 1, order)

    @classmethod
    def one(cls, order: int) -> QSeries:
        return cls.monomial(0, order)

    @classmethod
    def monomial(cls, k: int, order: int, c=1) -> QSeries:
        """c q^k truncated at q^order."""
        c = _as_fraction(c)
        num = [0] * (order + 1)
        if k <= order:
            num[k] = c.numerator
        return cls._raw(num, c.denominator, order)

    # -- views ---------------------------------------------------------------

    @property
    def order(self) -> int:
        return self._order

    @property
    def numerators(self) -> tuple[int, ...]:
        return self._num

    @property
    def denominator(self) -> int:
        return self._den

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self._den) for x in self._num)

    def __getitem__(self, n: int) -> Fraction:
        if n < 0:
            return Fraction(0)
        if n > self._order:
            raise IndexError(f"q^{n} is beyond the truncation order {self._order}")
        return Fraction(self._num[n], self._den)

    def __len__(self):
        return self._order + 1

    def is_integral(self) -> bool:
        return self._den == 1

    def ints(self) -> list[int]:
        if self._den != 1:
            raise ValueError("series has non-integer coefficients")
        return list(self._num)

    def is_zero(self) -> bool:
        return not any(self._num)

    def valuation(self) -> int | None:
        return next((i for i, x in enumerate(self._num) if x), None)

    def __repr__(self):
        shown = ", ".join(str(c) for c in self.coeffs[:8])
        more = ", ..." if self._order >= 8 else ""
        return f"QSeries([{shown}{more}], order={self._order})"

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return (self._order, self._den, self._num) == (other._order, other._den, other._num)

    def __hash__(self):
        return hash((self._order, self._den, self._num))

    # -- arithmetic ----------------------------------------------------------

    def truncate(self, order: int) -> QSeries:
        if order > self._order:
            raise ValueError(f"cannot extend a series known to q^{self._order} up to q^{order}")
        return QSeries._raw(self._num[: order + 1], self._den, order)

    def _coerce(self, other) -> QSeries:
        if isinstance(other, QSeries):
            return other
        return QSeries.monomial(0, self._order, other)

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        order = min(self._order, other._order)
        d = lcm(self._den, other._den)
        fa, fb = d // self._den, d // other._den
        num = [x * fa + y * fb for x, y in zip(self._num[: order + 1], other._num[: order + 1])]
        return QSeries._raw(num, d, order)

    __radd__ = __add__

    def __neg__(self):
        return QSeries._raw([-x for x in self._num], self._den, self._order)

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> QSeries:
        c = _as_fraction(c)
        return QSeries._raw([x * c.numerator for x in self._num], self._den * c.denominator, self._order)

    def __mul__(self, other):
        if isinstance(other, QSeries):
            order = min(self._order, other._order)
            num = _convolve(self._num, other._num, order + 1)
            return QSeries._raw(num, self._den * other._den, order)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, QSeries):
            return self * other.inv()
        return self.scale(1 / _as_fraction(other))

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        base = self if e >= 0 else self.inv()
        e = abs(e)
        result = QSeries.one(self._order)
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def inv(self) -> QSeries:
        """Reciprocal via b_0 = 1/a_0, b_n = -(1/a_0) sum_{k=1..n} a_k b_{n-k}."""
        a0 = self._num[0]
        if a0 == 0:
            raise ZeroConstantTerm("constant term is zero")
        # a = A/d with integer A; 1/a = d/A, so invert the integer series A
        a = self._num
        nz = [(k, a[k]) for k in range(1, self._order + 1) if a[k]]
        # b_n kept as integers scaled by a0^(n+1)
        pw = [1] * (self._order + 1)
        for i in range(1, self._order + 1):
            pw[i] = pw[i - 1] * a0
        b = [1]
        for n in range(1, self._order + 1):
            s = 0
            for k, ak in nz:
                if k > n:
                    break
                s += ak * b[n - k] * pw[k - 1]
            b.append(-s)
        top = a0 ** (self._order + 1)
        num = [bn * pw[self._order - n] * self._den for n, bn in enumerate(b)]
        return QSeries._raw(num, top, self._order)

    def delta_q(self) -> QSeries:
        """q d/dq: the q^n coefficient is multiplied by n."""
        return QSeries._raw([n * x for n, x in enumerate(self._num)], self._den, self._order)

    def shift(self, k: int) -> QSeries:
        """Multiply by q^k (k >= 0), keeping the order."""
        num = ([0] * k + list(self._num))[: self._order + 1]
        return QSeries._raw(num, self._den, self._order)

    # -- serialisation -------------------------------------------------------

    def to_dict(self) -> dict:
        return {"order": self._order, "coeffs": [_fraction_str(c) for c in self.coeffs]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> QSeries:
        return cls([Fraction(s) for s in data["coeffs"]], order=int(data["order"]))

    @classmethod
    def from_json(cls, text: str) -> QSeries:
        return cls.from_dict(json.loads(text))


def _fraction_str(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


# spec-level names
def qs_add(a: QSeries, b: QSeries) -> QSeries:
    return a + b


def qs_mul(a: QSeries, b: QSeries) -> QSeries:
    return a * b


def qs_inv(a: QSeries) -> QSeries:
    return a.inv()


def delta_q(a: QSeries) -> QSeries:
    return a.delta_q()


# --------------------------------------------------------------------------
# eta-type products
# --------------------------------------------------------------------------

def pentagonal_terms(order: int):
    """(exponent, sign) pairs of sum_k (-1)^k q^{k(3k+1)/2}, exponents <= order, sorted."""
    out = [(0, 1)]
    k = 1
    while True:
        e1 = k * (3 * k - 1) // 2
        if e1 > order:
            break
        s = -1 if k % 2 else 1
        out.append((e1, s))
        e2 = k * (3 * k + 1) // 2
        if e2 <= order:
            out.append((e2, s))
        k += 1
    return sorted(out)


@lru_cache(maxsize=64)
def _euler(order: int) -> QSeries:
    num = [0] * (order + 1)
    for e, s in pentagonal_terms(order):
        num[e] = s
    return QSeries._raw(num, 1, order)


@lru_cache(maxsize=64)
def partition_numbers(order: int) -> tuple[int, ...]:
    """p(0..order) by the pentagonal recurrence."""
    terms = pentagonal_terms(order)[1:]
    p = [1]
    for n in range(1, order + 1):
        s = 0
        for e, sign in terms:
            if e > n:
                break
            s -= sign * p[n - e]
        p.append(s)
    return tuple(p)


def partition_gf(order: int) -> QSeries:
    """P(q) = 1/(q)_inf."""
    return QSeries._raw(list(partition_numbers(order)), 1, order)


@lru_cache(maxsize=256)
def eta_power(r: int, order: int) -> QSeries:
    """prod_{n>=1} (1 - q^n)^r through q^order."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    if r == 0:
        return QSeries.one(order)
    if r == 1:
        return _euler(order)
    if r == -1:
        return partition_gf(order)
    base = eta_power(1 if r > 0 else -1, order)
    e = abs(r)
    result = None
    while e:
        if e & 1:
            result = base if result is None else result * base
        e >>= 1
        if e:
            base = base * base
    return result
