"""The twelve acceptance criteria, each at its stated size and time budget."""

import time

from rankcrank import checks
from rankcrank import relations as rel
from rankcrank.bivariate import verify_asd_identity, verify_pde, verify_pde_star, verify_s_rank_identity
from rankcrank.identities import MOMENT_CONGRUENCES, MOMENT_IDENTITIES, P23_IDENTITY
from rankcrank.partitions import CRANK, RANK, crank_table, rank_table, series_table
from rankcrank.quasimodular import dimension_table, monomial_basis_W
from rankcrank.relations import LinearForm, NoRelation, Term


def _all_pass(reports):
    bad = [getattr(r, "identity", "?") for r in reports if not r.passed]
    return not bad, f"{len(reports) - len(bad)}/{len(reports)} reports pass" + (f"; failing {bad}" if bad else "")


def test_c01_oracle_equivalence(record_criterion):
    t = time.perf_counter()
    mismatches = 0
    for k in range(41):
        mismatches += series_table(RANK, k).counts != rank_table(k).counts
        mismatches += series_table(CRANK, k).counts != crank_table(k).counts
    dt = time.perf_counter() - t
    ok = mismatches == 0 and dt < 30
    record_criterion(1, "rank/crank tables from series equal enumeration, n <= 40", ok,
                     f"{mismatches} mismatching tables, {dt:.1f}s")
    assert ok


def test_c02_pde(record_criterion):
    t = time.perf_counter()
    rep = verify_pde(30)
    dt = time.perf_counter() - t
    ok = rep.passed and max(rep.max_discrepancy) == 0 and len(rep.max_discrepancy) == 31 and dt < 60
    record_criterion(2, "rank-crank PDE at order 30", ok, f"max discrepancy {max(rep.max_discrepancy)}, {dt:.1f}s")
    assert ok


def test_c03_asd(record_criterion):
    reports = [verify_asd_identity(z, w, 20) for z, w in ((2, 3), (3, 2), (2, 5))]
    reports += [verify_s_rank_identity(z, 25) for z in (2, 3)] + [verify_pde_star(z, 25) for z in (2, 3)]
    ok, detail = _all_pass(reports)
    ok = ok and all(max(r.max_discrepancy) == 0 for r in reports)
    record_criterion(3, "ASD identity at 3 sample pairs; starred identities at z = 2, 3", ok, detail)
    assert ok


def test_c04_matrix_A(record_criterion):
    A = rel.matrix_A()
    printed = [[2, 2, 2, 2, 2, 2], [8, 16, 32, 32, 64, 128], [18, 54, 162, 162, 486, 1458],
               [40, 160, 640, 544, 2176, 8320], [70, 350, 1750, 1414, 7070, 32710],
               [132, 792, 4752, 3300, 19800, 103092]]
    # the 18 moment values M2, M4, M6 at n = 1..6, straight from enumeration
    enum = [[crank_table(n).moment(j) for j in (2, 4, 6)] for n in range(1, 7)]
    ok = (A.ints() == printed and [[r[0], r[3], r[5]] for r in printed] == enum
          and A.det() == -110361968640)
    record_criterion(4, "matrix A entrywise and det(A) = -110361968640", ok, f"det {A.det()}")
    assert ok


def test_c05_ramanujan_system(record_criterion):
    reports = checks.check_ramanujan(40)
    ok, detail = _all_pass(reports)
    record_criterion(5, "Ramanujan system, derivative closure and Phi reductions to order 40", ok, detail)
    assert ok


def test_c06_dimensions(record_criterion):
    got = [(d["k"], d["dim_M"], d["dim_V"], d["dim_W"]) for d in dimension_table(10)]
    ok = (got == checks.DIMENSION_TABLE and len(monomial_basis_W(6)) == 22 and len(monomial_basis_W(7)) == 30)
    record_criterion(6, "dimension table k = 1..10", ok, f"dim W6 = {got[5][3]}, dim W7 = {got[6][3]}")
    assert ok


def test_c07_crank_recurrence(record_criterion):
    reports = checks.check_towers(40)
    ok, detail = _all_pass(reports)
    record_criterion(7, "crank recurrence vs direct for a <= 14; closed-form examples", ok, detail)
    assert ok


def test_c08_master_relation(record_criterion):
    sides = {a: rel.master_relation_sides(a, 40) for a in range(2, 15, 2)}
    bad = [a for a, (lhs, rhs) in sides.items() if lhs != rhs]
    record_criterion(8, "master relation lhs = rhs for a = 2..14, order 40", not bad, f"failing a: {bad}" if bad else "")
    assert not bad


def test_c09_pointwise_identities(record_criterion):
    t = time.perf_counter()
    reports = rel.verify_moment_identities(100) + rel.verify_p23_identity(100)
    dt = time.perf_counter() - t
    ok, detail = _all_pass(reports)
    ok = ok and len(reports) == 6 and dt < 120
    record_criterion(9, "moment identities for 0 <= n <= 100; p23 identity for 1 <= n <= 100", ok,
                     f"{detail}, {dt:.1f}s")
    assert ok


def test_c10_discovery(record_criterion):
    derived = rel.derive_moment_identities(60)
    mismatched = [s for s, text in MOMENT_IDENTITIES.items() if derived.get(s) != LinearForm.parse(text)]
    p23_ok = rel.derive_p23_identity(60, derived) == LinearForm.parse(P23_IDENTITY)
    try:
        rel.discover_relation(Term("T", 6), rel.family_terms(6), 60)
        independent = False
    except NoRelation:
        independent = True
    ok = not mismatched and p23_ok and independent
    record_criterion(10, "identities re-derived by elimination; T6 over C6 independent", ok,
                     f"mismatched {mismatched}, p23 {p23_ok}, T6 independent {independent}")
    assert ok


def test_c11_congruences(record_criterion):
    reports = rel.verify_moment_congruences(200, 100) + rel.verify_p23_congruence(300)
    reports.append(rel.verify_mod7_generating_identity(40))
    ok, detail = _all_pass(reports)
    labels = {r.identity for r in reports}
    ok = ok and set(MOMENT_CONGRUENCES) <= labels and len(MOMENT_CONGRUENCES) == 10
    # support of the mod-23 right side, from 23k(3k +- 1)/2 + 1 with sign (-1)^k
    support = rel.shifted_pentagonal_signs(300)
    want = {}
    for k in range(4):
        for e in (k * (3 * k - 1) // 2, k * (3 * k + 1) // 2):
            if 23 * e + 1 <= 300:
                want[23 * e + 1] = (-1) ** k
    ok = ok and support == want
    record_criterion(11, "ten moment congruences, mod-23 congruence to n = 300, mod-7 generating identity", ok,
                     f"{detail}; mod-23 support {sorted(support)}")
    assert ok


def test_c12_classical(record_criterion):
    reports = rel.verify_classical(40, 200)
    ok, detail = _all_pass(reports)
    record_criterion(12, "classical rank/crank checks to n = 40 and progressions to n = 200", ok, detail)
    assert ok
