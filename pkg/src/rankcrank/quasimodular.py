"""Eisenstein series and the algebra generated by Phi_1, Phi_3, Phi_5.

A :class:`PhiPolynomial` is a polynomial in the three Lambert series
Phi_j = sum sigma_j(n) q^n, j = 1, 3, 5. Its q-derivative is computed formally:
the derivatives of the generators are obtained from Ramanujan's differential
system for E_2, E_4, E_6, and the Leibniz rule does the rest.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Mapping

from .linalg import solve
from .series import QSeries, _as_fraction

Monomial = tuple[int, int, int]  # exponents of (Phi_1, Phi_3, Phi_5)

GENERATORS = {1: (1, 0, 0), 3: (0, 1, 0), 5: (0, 0, 1)}


class NotInSpace(ValueError):
    """The series is not P times an element of the requested W_n."""


class InconsistentSystem(ArithmeticError):
    pass


# --------------------------------------------------------------------------
# scalar ingredients
# --------------------------------------------------------------------------

@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """B_n with x/(e^x - 1) = sum B_n x^n/n!, so B_1 = -1/2."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return Fraction(1)
    if n > 1 and n % 2:
        return Fraction(0)
    # sum_{k=0}^{n} C(n+1, k) B_k = 0
    s = sum(comb(n + 1, k) * bernoulli(k) for k in range(n))
    return -s / (n + 1)


@lru_cache(maxsize=None)
def _sigma(j: int, order: int) -> tuple[int, ...]:
    s = [0] * (order + 1)
    for d in range(1, order + 1):
        dj = d**j
        for m in range(d, order + 1, d):
            s[m] += dj
    return tuple(s)


def phi_series(j: int, order: int) -> QSeries:
    """Phi_j(q) = sum_{n>=1} sigma_j(n) q^n for odd j >= 1."""
    if j < 1 or j % 2 == 0:
        raise ValueError("Phi_j is defined for odd j >= 1")
    return QSeries.from_ints(_sigma(j, order), order)


def eisenstein_constant(n: int) -> Fraction:
    """c with E_n = 1 + c Phi_{n-1}, i.e. c = -2n/B_n."""
    if n < 2 or n % 2:
        raise ValueError("E_n needs even n >= 2")
    return -Fraction(2 * n) / bernoulli(n)


def eisenstein(n: int, order: int) -> QSeries:
    return phi_series(n - 1, order) * eisenstein_constant(n) + 1


# --------------------------------------------------------------------------
# polynomials in Phi_1, Phi_3, Phi_5
# --------------------------------------------------------------------------

def grade(mono: Monomial) -> int:
    a, b, c = mono
    return a + 2 * b + 3 * c


def basis_key(mono: Monomial):
    # graded; within a grade, higher powers of Phi_1 first, then Phi_3
    a, b, c = mono
    return (grade(mono), -a, -b, -c)


class PhiPolynomial:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, object] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        out: dict[Monomial, Fraction] = {}
        for mono, c in items:
            mono = tuple(int(e) for e in mono)
            if len(mono) != 3 or min(mono) < 0:
                raise ValueError(f"bad monomial {mono}")
            out[mono] = out.get(mono, Fraction(0)) + _as_fraction(c)
        self.terms = {m: c for m, c in out.items() if c}

    @classmethod
    def generator(cls, j: int) -> PhiPolynomial:
        return cls({GENERATORS[j]: 1})

    @classmethod
    def constant(cls, c) -> PhiPolynomial:
        return cls({(0, 0, 0): c})

    @classmethod
    def monomial(cls, mono: Monomial, c=1) -> PhiPolynomial:
        return cls({tuple(mono): c})

    def __eq__(self, other):
        if isinstance(other, PhiPolynomial):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "PhiPolynomial(0)"
        return f"PhiPolynomial({self})"

    def __str__(self):
        parts = []
        for mono in sorted(self.terms, key=basis_key):
            c = self.terms[mono]
            names = [f"Phi{j}" + (f"^{e}" if e > 1 else "")
                     for j, e in zip((1, 3, 5), mono) if e]
            parts.append("*".join([f"({c})"] + names) if names else f"({c})")
        return " + ".join(parts) if parts else "0"

    def coefficient(self, mono: Monomial) -> Fraction:
        return self.terms.get(tuple(mono), Fraction(0))

    def __add__(self, other):
        if not isinstance(other, PhiPolynomial):
            other = PhiPolynomial.constant(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return PhiPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return PhiPolynomial({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, PhiPolynomial) else -_as_fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, PhiPolynomial):
            c = _as_fraction(other)
            return PhiPolynomial({m: c * v for m, v in self.terms.items()})
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])
                out[m] = out.get(m, Fraction(0)) + c1 * c2
        return PhiPolynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, c):
        return self * (1 / _as_fraction(c))

    def __pow__(self, e: int):
        out = PhiPolynomial.constant(1)
        for _ in range(e):
            out = out * self
        return out

    def degree(self) -> int:
        """Largest a + 2b + 3c (0 for the zero polynomial)."""
        return max((grade(m) for m in self.terms), default=0)

    def weights(self) -> set[int]:
        return {2 * grade(m) for m in self.terms}

    def in_W(self, n: int) -> bool:
        return all(0 < grade(m) <= n for m in self.terms)

    def in_V(self, n: int) -> bool:
        return all(grade(m) == n for m in self.terms)

    def delta_q(self) -> PhiPolynomial:
        out = PhiPolynomial()
        for (a, b, c), coef in self.terms.items():
            for idx, e in enumerate((a, b, c)):
                if not e:
                    continue
                rest = [a, b, c]
                rest[idx] -= 1
                out = out + PhiPolynomial.monomial(tuple(rest), coef * e) * generator_derivative((1, 3, 5)[idx])
        return out

    def evaluate(self, order: int) -> QSeries:
        out = QSeries.zero(order)
        for mono, c in self.terms.items():
            out = out + _monomial_series(mono, order) * c
        return out

    def to_list(self) -> list:
        return [[*m, f"{self.terms[m].numerator}/{self.terms[m].denominator}"]
                for m in sorted(self.terms, key=basis_key)]

    def to_json(self) -> str:
        return json.dumps(self.to_list())

    @classmethod
    def from_list(cls, data) -> PhiPolynomial:
        return cls({(a, b, c): Fraction(s) for a, b, c, s in data})


@lru_cache(maxsize=4096)
def _monomial_series(mono: Monomial, order: int) -> QSeries:
    a, b, c = mono
    if a:
        return _monomial_series((a - 1, b, c), order) * phi_series(1, order)
    if b:
        return _monomial_series((0, b - 1, c), order) * phi_series(3, order)
    if c:
        return _monomial_series((0, 0, c - 1), order) * phi_series(5, order)
    return QSeries.one(order)


def phi_poly_eval(p: PhiPolynomial, order: int) -> QSeries:
    return p.evaluate(order)


def delta_q_phi(p: PhiPolynomial) -> PhiPolynomial:
    return p.delta_q()


def E_poly(n: int) -> PhiPolynomial:
    """E_2, E_4, E_6 as polynomials in the Phi generators."""
    return PhiPolynomial.constant(1) + PhiPolynomial.generator(n - 1) * eisenstein_constant(n)


@lru_cache(maxsize=None)
def generator_derivative(j: int) -> PhiPolynomial:
    """delta_q(Phi_j) for j in {1, 3, 5}, from Ramanujan's system

    12 dE2 = E2^2 - E4,  3 dE4 = E2 E4 - E6,  2 dE6 = E2 E6 - E4^2.
    """
    E2, E4, E6 = E_poly(2), E_poly(4), E_poly(6)
    dE = {
        1: (E2 * E2 - E4) / 12,
        3: (E2 * E4 - E6) / 3,
        5: (E2 * E6 - E4 * E4) / 2,
    }[j]
    # E_{j+1} = 1 + c Phi_j
    return dE / eisenstein_constant(j + 1)


# --------------------------------------------------------------------------
# dimensions and bases
# --------------------------------------------------------------------------

def dim_M(k: int) -> int:
    """Dimension of the modular forms of weight 2k for SL_2(Z)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return k // 6 if k % 6 == 1 else k // 6 + 1


def dim_V(k: int) -> int:
    if k < 1:
        raise ValueError("k must be positive")
    return sum(dim_M(j) for j in range(k + 1))


def dim_W(k: int) -> int:
    if k < 1:
        raise ValueError("k must be positive")
    return k + sum((k - j + 1) * dim_M(j) for j in range(2, k + 1))


def dimension_table(kmax: int = 10) -> list[dict]:
    return [{"k": k, "dim_M": dim_M(k), "dim_V": dim_V(k), "dim_W": dim_W(k)} for k in range(1, kmax + 1)]


@lru_cache(maxsize=None)
def monomial_basis_W(n: int) -> tuple[Monomial, ...]:
    """All (a, b, c) with 0 < a + 2b + 3c <= n in basis order."""
    if n < 1:
        raise ValueError("n must be positive")
    monos = [(a, b, c)
             for c in range(n // 3 + 1)
             for b in range((n - 3 * c) // 2 + 1)
             for a in range(n - 3 * c - 2 * b + 1)
             if a + b + c]
    return tuple(sorted(monos, key=basis_key))


def monomial_basis_V(n: int) -> tuple[Monomial, ...]:
    return tuple(m for m in monomial_basis_W(n) if grade(m) == n)


def _fit(target: QSeries, monos, order: int, err) -> PhiPolynomial:
    """Solve target = sum x_i eval(mono_i) on leading q-coefficients, verify the rest."""
    cols = [_monomial_series(m, order) for m in monos]
    nb = len(monos)
    rows_needed = nb
    while True:
        rows = range(1, min(rows_needed, order) + 1)
        M = [[col[r] for col in cols] for r in rows]
        x, rk = solve(M, [target[r] for r in rows])
        if x is None:
            raise err("leading coefficients are inconsistent")
        if rk == nb or rows_needed >= order:
            break
        rows_needed += nb
    poly = PhiPolynomial({m: c for m, c in zip(monos, x)})
    if poly.evaluate(order) != target.truncate(order):
        raise err(f"fit does not persist through q^{order}")
    return poly


def reduce_phi(j: int, n: int | None = None, order: int = 40) -> PhiPolynomial:
    """Phi_j (j = 2n - 1 >= 7) as a polynomial in Phi_3, Phi_5, verified to q^order."""
    if n is None:
        n = (j + 1) // 2
    if j != 2 * n - 1 or n < 2:
        raise ValueError("need j = 2n - 1 with n > 1")
    monos = [m for m in monomial_basis_W(n) if m[0] == 0]
    target = phi_series(j, order)
    return _fit(target, monos, order, InconsistentSystem)


def express_in_PW(f: QSeries, n: int, order: int | None = None) -> PhiPolynomial:
    """Phi in W_n with f = P * eval(Phi), found on leading coefficients and checked to q^order.

    Raises NotInSpace when no such Phi exists.
    """
    from .series import eta_power

    order = f.order if order is None else order
    need = 2 * dim_W(n)
    if order < need:
        raise ValueError(f"order {order} below the verification margin {need} for W_{n}")
    g = f.truncate(order) * eta_power(1, order)
    if g[0] != 0:
        raise NotInSpace("f * (q)_inf has a nonzero constant term")
    return _fit(g, monomial_basis_W(n), order, NotInSpace)
