"""Exact elimination over Q and over prime fields.

Rational matrices are scaled row-wise to integers and reduced by
cross-multiplication with content removal, so no Fraction arithmetic happens
inside the elimination loop. Prime-field work goes to the int64 kernel.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Sequence

import numpy as np

from . import kernels
from .series import _as_fraction


class NonSquare(ValueError):
    pass


def _int_rows(M: Sequence[Sequence]) -> list[list[int]]:
    rows = []
    for row in M:
        fr = [_as_fraction(x) for x in row]
        d = reduce(lcm, (x.denominator for x in fr), 1)
        rows.append([x.numerator * (d // x.denominator) for x in fr])
    return rows


def _primitive(row: list[int]) -> list[int]:
    g = reduce(gcd, row, 0)
    if g > 1:
        return [x // g for x in row]
    return row


def _rref_int(A: list[list[int]], ncols: int | None = None):
    """In-place fraction-free Gauss-Jordan on the first ncols columns."""
    rows = len(A)
    cols = len(A[0]) if A else 0
    ncols = cols if ncols is None else ncols
    pivots = []
    r = 0
    for c in range(ncols):
        if r == rows:
            break
        cands = [i for i in range(r, rows) if A[i][c]]
        if not cands:
            continue
        # smallest pivot keeps the cross-multiplied rows short
        sel = min(cands, key=lambda i: abs(A[i][c]))
        A[r], A[sel] = A[sel], A[r]
        pr = A[r]
        p = pr[c]
        for i in range(rows):
            if i != r and A[i][c]:
                f = A[i][c]
                g = gcd(p, f)
                a, b = p // g, f // g
                A[i] = _primitive([a * x - b * y for x, y in zip(A[i], pr)])
        pivots.append(c)
        r += 1
    return pivots


def rref(M: Sequence[Sequence], modulus: int | None = None):
    """Reduced row echelon form: (matrix, rank, pivot columns).

    Over Q the result holds Fractions with unit pivots; with ``modulus`` it holds
    residues in [0, p).
    """
    if modulus is not None:
        A = np.array([[_mod(x, modulus) for x in row] for row in M], dtype=np.int64)
        R, rk, piv = kernels.rref_mod(A, modulus)
        return [[int(x) for x in row] for row in R], int(rk), [int(c) for c in piv]
    A = _int_rows(M)
    if not A:
        return [], 0, []
    pivots = _rref_int(A)
    out = []
    for i, row in enumerate(A):
        if i < len(pivots):
            p = row[pivots[i]]
            out.append([Fraction(x, p) for x in row])
        else:
            out.append([Fraction(0)] * len(row))
    return out, len(pivots), pivots


def det(M: Sequence[Sequence]) -> Fraction:
    """Bareiss fraction-free determinant."""
    n = len(M)
    if any(len(row) != n for row in M):
        raise NonSquare("determinant of a non-square matrix")
    if n == 0:
        return Fraction(1)
    scale = 1
    A = []
    for row in M:
        fr = [_as_fraction(x) for x in row]
        d = reduce(lcm, (x.denominator for x in fr), 1)
        scale *= d
        A.append([x.numerator * (d // x.denominator) for x in fr])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            sw = next((i for i in range(k + 1, n) if A[i][k]), None)
            if sw is None:
                return Fraction(0)
            A[k], A[sw] = A[sw], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return Fraction(sign * A[n - 1][n - 1], scale)


def nullspace(M: Sequence[Sequence], modulus: int | None = None) -> list[list]:
    """Basis of {x : M x = 0}, one vector per free column (free entry = 1)."""
    if not M:
        return []
    ncols = len(M[0])
    R, rk, piv = rref(M, modulus)
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        v = [0] * ncols if modulus is not None else [Fraction(0)] * ncols
        v[f] = 1 if modulus is not None else Fraction(1)
        for i, c in enumerate(piv):
            if modulus is not None:
                v[c] = (-R[i][f]) % modulus
            else:
                v[c] = -R[i][f]
        basis.append(v)
    return basis


def solve(M: Sequence[Sequence], b: Sequence, modulus: int | None = None):
    """A particular solution of M x = b (free variables 0), or None when inconsistent.

    Returns (x, rank of M).
    """
    ncols = len(M[0]) if M else 0
    aug = [list(row) + [bi] for row, bi in zip(M, b)]
    if modulus is not None:
        R, rk, piv = rref(aug, modulus)
        if ncols in piv:
            return None, sum(1 for c in piv if c < ncols)
        x = [0] * ncols
        for i, c in enumerate(piv):
            x[c] = R[i][ncols] % modulus
        return x, rk
    A = _int_rows(aug)
    piv = _rref_int(A)
    if ncols in piv:
        return None, len(piv) - 1
    x = [Fraction(0)] * ncols
    for i, c in enumerate(piv):
        x[c] = Fraction(A[i][ncols], A[i][c])
    return x, len(piv)


def _mod(x, p: int) -> int:
    x = _as_fraction(x)
    if x.denominator % p == 0:
        raise ZeroDivisionError(f"denominator {x.denominator} is not invertible mod {p}")
    return x.numerator * pow(x.denominator, -1, p) % p
