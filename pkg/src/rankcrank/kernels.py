"""Integer hot loops.

Every kernel exists twice: a loop version compiled with numba (``*_jit``) and a
vectorised numpy version (``*_numpy``). The public name dispatches on
``rankcrank._accel.USE_NUMBA``. All kernels work in int64 and are only called
within their documented overflow limits; callers fall back to Python integers
beyond them.
"""

import numpy as np

from ._accel import USE_NUMBA, njit

# p(n) < 2**61 up to n = 350, leaving headroom for partial sums; the crank product
# intermediates stay far below the final coefficients, so one limit covers both.
INT64_ORDER_LIMIT = 350

# modular elimination multiplies two residues in int64
MAX_MODULUS = 2**31


# --------------------------------------------------------------------------
# crank generating function as a product
# --------------------------------------------------------------------------

@njit
def crank_product_jit(order):
    w = order
    c = np.zeros((order + 1, 2 * w + 1), np.int64)
    c[0, w] = 1
    for k in range(1, order + 1):
        # times (1 - q^k), descending so c[n-k] is still the old row
        for n in range(order, k - 1, -1):
            for j in range(2 * w + 1):
                c[n, j] -= c[n - k, j]
        # divided by (1 - z q^k)
        for n in range(k, order + 1):
            for j in range(1, 2 * w + 1):
                c[n, j] += c[n - k, j - 1]
        # divided by (1 - z^-1 q^k)
        for n in range(k, order + 1):
            for j in range(2 * w):
                c[n, j] += c[n - k, j + 1]
    return c


def crank_product_numpy(order, dtype=np.int64):
    w = order
    c = np.zeros((order + 1, 2 * w + 1), dtype=dtype)
    if dtype is object:
        c[:] = 0
    c[0, w] = 1
    for k in range(1, order + 1):
        for n in range(order, k - 1, -1):
            c[n] -= c[n - k]
        for n in range(k, order + 1):
            c[n, 1:] += c[n - k, :-1]
        for n in range(k, order + 1):
            c[n, :-1] += c[n - k, 1:]
    return c


def crank_product_table(order):
    """Coefficients of prod (1-q^n)/((1-zq^n)(1-q^n/z)); row n, column m + order."""
    if order > INT64_ORDER_LIMIT:
        return crank_product_numpy(order, dtype=object)
    if USE_NUMBA:
        return crank_product_jit(order)
    return crank_product_numpy(order)


# --------------------------------------------------------------------------
# per-statistic count series: P(q) * sum_k (-1)^(k-1) q^(k(ak-1)/2 + mk) (1-q^k)
# --------------------------------------------------------------------------

@njit
def stat_table_jit(pvec, a, order):
    t = np.zeros((order + 1, order + 1), np.int64)
    for m in range(order + 1):
        k = 1
        while True:
            e = k * (a * k - 1) // 2 + m * k
            if e > order:
                break
            s = 1 if k % 2 == 1 else -1
            for n in range(e, order + 1):
                t[m, n] += s * pvec[n - e]
            e2 = e + k
            for n in range(e2, order + 1):
                t[m, n] -= s * pvec[n - e2]
            k += 1
    return t


def stat_table_numpy(pvec, a, order):
    t = np.zeros((order + 1, order + 1), dtype=pvec.dtype)
    if pvec.dtype == object:
        t[:] = 0
    for m in range(order + 1):
        k = 1
        while True:
            e = k * (a * k - 1) // 2 + m * k
            if e > order:
                break
            s = 1 if k % 2 else -1
            t[m, e:] += s * pvec[: order + 1 - e]
            if e + k <= order:
                t[m, e + k:] -= s * pvec[: order + 1 - e - k]
            k += 1
    return t


def stat_table(pvec, a, order):
    """Row m holds sum_n count(m, n) q^n for m >= 0 (a=3 rank, a=1 crank)."""
    if order > INT64_ORDER_LIMIT:
        return stat_table_numpy(np.asarray(pvec, dtype=object), a, order)
    pvec = np.asarray(pvec, dtype=np.int64)
    if USE_NUMBA:
        return stat_table_jit(pvec, a, order)
    return stat_table_numpy(pvec, a, order)


# --------------------------------------------------------------------------
# brute-force rank/crank tabulation by partition enumeration
# --------------------------------------------------------------------------

@njit
def enumerate_stats_jit(n):
    # ZS1 (Zoghbi-Stojmenovic): partitions in reverse lexicographic order
    ranks = np.zeros(2 * n + 1, np.int64)
    cranks = np.zeros(2 * n + 1, np.int64)
    if n == 0:
        ranks[0] = 1
        cranks[0] = 1
        return ranks, cranks
    x = np.ones(n + 1, np.int64)
    x[1] = n
    m = 1
    h = 1 if n > 1 else 0
    while True:
        ranks[x[1] - m + n] += 1
        ones = m - h
        if ones == 0:
            cr = x[1]
        else:
            mu = 0
            i = 1
            while i <= h and x[i] > ones:
                mu += 1
                i += 1
            cr = mu - ones
        cranks[cr + n] += 1
        if x[1] == 1:
            break
        if x[h] == 2:
            m += 1
            x[h] = 1
            h -= 1
        else:
            r = x[h] - 1
            t = m - h + 1
            x[h] = r
            while t >= r:
                h += 1
                x[h] = r
                t -= r
            if t == 0:
                m = h
            else:
                m = h + 1
                if t > 1:
                    h += 1
                    x[h] = t
    return ranks, cranks


enumerate_stats_py = enumerate_stats_jit.py_func


def enumerate_stats(n):
    """(rank counts, crank counts) for partitions of n; index = statistic + n. Unamended."""
    if USE_NUMBA:
        return enumerate_stats_jit(n)
    return enumerate_stats_py(n)


# --------------------------------------------------------------------------
# Gauss-Jordan elimination over F_p
# --------------------------------------------------------------------------

@njit
def _inv_mod(a, p):
    t, new_t = 0, 1
    r, new_r = p, a % p
    while new_r != 0:
        q = r // new_r
        t, new_t = new_t, t - q * new_t
        r, new_r = new_r, r - q * new_r
    if t < 0:
        t += p
    return t


@njit
def rref_mod_jit(mat, p):
    a = mat.copy() % p
    rows, cols = a.shape
    pivots = np.full(min(rows, cols), -1, np.int64)
    r = 0
    for c in range(cols):
        if r == rows:
            break
        sel = -1
        for i in range(r, rows):
            if a[i, c] != 0:
                sel = i
                break
        if sel < 0:
            continue
        if sel != r:
            for j in range(cols):
                tmp = a[r, j]
                a[r, j] = a[sel, j]
                a[sel, j] = tmp
        inv = _inv_mod(a[r, c], p)
        for j in range(cols):
            a[r, j] = a[r, j] * inv % p
        for i in range(rows):
            if i != r and a[i, c] != 0:
                f = a[i, c]
                for j in range(cols):
                    a[i, j] = (a[i, j] - f * a[r, j]) % p
        pivots[r] = c
        r += 1
    return a, r, pivots[:r]


def rref_mod_numpy(mat, p):
    p = int(p)
    a = np.array(mat, dtype=np.int64) % p
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        sel = r + nz[0]
        if sel != r:
            a[[r, sel]] = a[[sel, r]]
        a[r] = a[r] * pow(int(a[r, c]), -1, p) % p
        f = a[:, c].copy()
        f[r] = 0
        a = (a - np.outer(f, a[r])) % p
        pivots.append(c)
        r += 1
    return a, r, np.array(pivots, dtype=np.int64)


def rref_mod(mat, p):
    """(reduced matrix, rank, pivot columns) of an integer matrix over F_p, p < 2**31."""
    if not 2 <= p < MAX_MODULUS:
        raise ValueError(f"modulus {p} outside the int64 kernel range")
    mat = np.asarray(mat, dtype=np.int64)
    if USE_NUMBA:
        return rref_mod_jit(mat, np.int64(p))
    return rref_mod_numpy(mat, p)
