import numpy as np
import pytest
from hypothesis import given, strategies as st

from rankcrank import _accel, kernels
from rankcrank.series import partition_numbers

needs_numba = pytest.mark.skipif(not _accel.NUMBA_AVAILABLE, reason="numba not installed")


@needs_numba
@pytest.mark.parametrize("order", [0, 1, 5, 40])
def test_crank_product_paths_agree(order):
    assert np.array_equal(kernels.crank_product_jit(order), kernels.crank_product_numpy(order))


def test_crank_product_object_path_agrees():
    assert np.array_equal(kernels.crank_product_numpy(30, dtype=object).astype(np.int64),
                          kernels.crank_product_numpy(30))


@needs_numba
@pytest.mark.parametrize("a", [1, 3])
def test_stat_table_paths_agree(a):
    p = np.array(partition_numbers(60), dtype=np.int64)
    assert np.array_equal(kernels.stat_table_jit(p, a, 60), kernels.stat_table_numpy(p, a, 60))


def test_stat_table_beyond_int64_limit_uses_python_ints():
    order = kernels.INT64_ORDER_LIMIT + 10
    t = kernels.stat_table(partition_numbers(order), 1, order)
    assert t.dtype == object
    # crank counts sum (both signs) to p(n) for n > 1
    n = order
    assert t[0, n] + 2 * sum(t[1:, n]) == partition_numbers(order)[n]


@needs_numba
@pytest.mark.parametrize("n", [0, 1, 2, 7, 25])
def test_enumeration_paths_agree(n):
    a, b = kernels.enumerate_stats_jit(n), kernels.enumerate_stats_py(n)
    assert np.array_equal(a[0], b[0]) and np.array_equal(a[1], b[1])


@pytest.mark.parametrize("n", [1, 5, 20])
def test_enumeration_totals(n):
    ranks, cranks = kernels.enumerate_stats(n)
    assert ranks.sum() == cranks.sum() == partition_numbers(n)[n]


small = st.integers(min_value=-30, max_value=30)


@needs_numba
@given(st.lists(st.lists(small, min_size=5, max_size=5), min_size=1, max_size=6),
       st.sampled_from([2, 3, 7, 11, 101]))
def test_rref_mod_paths_agree(rows, p):
    m = np.array(rows, dtype=np.int64) % p
    r1, k1, p1 = kernels.rref_mod_jit(m.copy(), np.int64(p))
    r2, k2, p2 = kernels.rref_mod_numpy(m.copy(), p)
    assert k1 == k2 and list(p1) == list(p2) and np.array_equal(r1 % p, r2 % p)


def test_rref_mod_rejects_huge_modulus():
    with pytest.raises(ValueError):
        kernels.rref_mod(np.eye(2, dtype=np.int64), 2**40 + 15)


def test_env_flag_selects_numpy_path():
    import subprocess
    import sys

    code = ("from rankcrank import _accel, partitions as pt; "
            "assert not _accel.USE_NUMBA; "
            "print(pt.series_table('crank', 10).counts == pt.crank_table(10).counts)")
    env = {"RANKCRANK_NUMBA": "0", "PATH": "/usr/bin:/bin"}
    out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, env=env, check=True)
    assert out.stdout.strip() == "True"
