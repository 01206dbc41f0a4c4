"""Named verification targets, each returning a list of reports with .passed and .to_dict()."""

from __future__ import annotations

from . import relations as rel
from .bivariate import verify_asd_identity, verify_pde, verify_pde_star, verify_s_rank_identity
from .moments import (crank_moment_series_direct, crank_phi, crank_moment_series_rec, crank_tower_phi,
                      deltaq_crank_tower, deltaq_P_tower)
from .partitions import CRANK, RANK, crank_table, rank_table, series_table
from .quasimodular import (E_poly, dimension_table, eisenstein, generator_derivative, monomial_basis_W,
                           phi_series, reduce_phi)
from .relations import CheckReport, phi_from_text
from .series import partition_gf

DIMENSION_TABLE = [  # k, dim M_k, dim V_k, dim W_k
    (1, 0, 1, 1), (2, 1, 2, 3), (3, 1, 3, 6), (4, 1, 4, 10), (5, 1, 5, 15),
    (6, 2, 7, 22), (7, 1, 8, 30), (8, 2, 10, 40), (9, 2, 12, 52), (10, 2, 14, 66),
]

# delta_q^m(P) / P and delta_q^m(C_{2n}) / P as stated closed forms
TOWER_EXAMPLES = {
    ("P", 1): "F1",
    ("P", 2): "-1/6*(6*F1**2 - 5*F3 - F1)",
    ("P", 3): "1/12*(36*F1**3 - 90*F1*F3 - 6*F1**2 + 7*F5 + 5*F3)",
    ((1, 0),): "2*F1",
    ((1, 1),): "-1/3*(6*F1**2 - 5*F3 - F1)",
    ((1, 2),): "1/6*(36*F1**3 - 90*F1*F3 - 6*F1**2 + 7*F5 + 5*F3)",
    ((2, 1),): "-1/15*(-90*F1*F3 - 21*F5 - 10*F3 + F1 + 540*F1**3 - 60*F1**2)",
}

# C_a / P from the crank recurrence (F7 is reduced before comparing)
CRANK_PHI_EXAMPLES = {
    2: "2*F1",
    4: "2*(F3 + 6*F1**2)",
    8: "2*(F7 + 56*F5*F1 + 840*F3*F1**2 + 840*F1**4 + 70*F3**2)",
}


def _report(group, label, ok, order=None, n_range=None, **info):
    r = CheckReport(group, label, None, n_range, order)
    if not ok:
        r.fail(**info)
    return r


def check_oracle(n_max: int = 40):
    """Series-derived rank/crank tables equal enumeration for every n <= n_max."""
    out = []
    for kind, enum in ((RANK, rank_table), (CRANK, crank_table)):
        bad = [k for k in range(n_max + 1) if series_table(kind, k).counts != enum(k).counts]
        out.append(_report("oracle", f"{kind}_tables", not bad, n_range=(0, n_max),
                           q_power=bad[0] if bad else 0))
    return out


def check_pde(order: int = 30):
    return [verify_pde(order)]


def check_asd(order: int = 20, star_order: int = 25):
    out = [verify_asd_identity(z, w, order) for z, w in ((2, 3), (3, 2), (2, 5))]
    out += [verify_s_rank_identity(z, star_order) for z in (2, 3)]
    out += [verify_pde_star(z, star_order) for z in (2, 3)]
    return out


def check_ramanujan(order: int = 40):
    out = []
    E2, E4, E6 = (eisenstein(k, order) for k in (2, 4, 6))
    system = {
        "dE2": (E2.delta_q() * 12, E2 * E2 - E4),
        "dE4": (E4.delta_q() * 3, E2 * E4 - E6),
        "dE6": (E6.delta_q() * 2, E2 * E6 - E4 * E4),
    }
    for label, (lhs, rhs) in system.items():
        out.append(_series_report("ramanujan-odes", label, lhs, rhs))
    for j in (1, 3, 5):
        out.append(_series_report("ramanujan-odes", f"dPhi{j}", phi_series(j, order).delta_q(),
                                  generator_derivative(j).evaluate(order)))
    for j in (7, 9, 11, 13):
        out.append(_series_report("ramanujan-odes", f"Phi{j}_reduction", phi_series(j, order),
                                  reduce_phi(j, order=order).evaluate(order)))
    for k in (2, 4, 6):
        out.append(_series_report("ramanujan-odes", f"E{k}_polynomial", eisenstein(k, order),
                                  E_poly(k).evaluate(order)))
    got = reduce_phi(11, order=order)
    want = phi_from_text(REDUCTION_11)
    out.append(_report("ramanujan-odes", "Phi11_closed_form", got == want, order=order,
                       q_power=0, lhs=str(got), rhs=str(want)))
    return out


# Phi_11 in Phi_3, Phi_5
REDUCTION_11 = "1/13*(63*(F3 + 240*F3**2 + 19200*F3**3 + 200*F5**2) - 50*F5)"


def _series_report(group, label, lhs, rhs):
    order = min(lhs.order, rhs.order)
    r = CheckReport(group, label, None, None, order)
    for k in range(order + 1):
        if lhs[k] != rhs[k]:
            r.fail(q_power=k, lhs=lhs[k], rhs=rhs[k])
            break
    return r


def check_dims():
    out = []
    got = [(d["k"], d["dim_M"], d["dim_V"], d["dim_W"]) for d in dimension_table(10)]
    for row, want in zip(got, DIMENSION_TABLE):
        ok = row == want and len(monomial_basis_W(row[0])) == want[3]
        out.append(_report("dims", f"k={want[0]}", ok, q_power=want[0], lhs=str(row), rhs=str(want)))
    return out


def check_towers(order: int = 40):
    out = []
    P = partition_gf(order)
    for m in range(1, 6):
        s, phi = deltaq_P_tower(m, order)
        out.append(_series_report("towers", f"d^{m}P", s, P * phi.evaluate(order)))
    for n in range(1, 5):
        for m in range(0, 5 - n):
            s, phi = deltaq_crank_tower(n, m, order)
            r = _series_report("towers", f"d^{m}C{2 * n}", s, P * phi.evaluate(order))
            if phi != crank_tower_phi(n, m) or not phi.in_W(n + m):
                r.fail(q_power=0, lhs=str(phi), rhs=str(crank_tower_phi(n, m)))
            out.append(r)
    for key, text in TOWER_EXAMPLES.items():
        if key[0] == "P":
            got = deltaq_P_tower(key[1], 4)[1]
            label = f"d^{key[1]}P_closed_form"
        else:
            (n, m), = key
            got = crank_tower_phi(n, m)
            label = f"d^{m}C{2 * n}_closed_form"
        want = phi_from_text(text)
        out.append(_report("towers", label, got == want, q_power=0, lhs=str(got), rhs=str(want)))
    for a, text in CRANK_PHI_EXAMPLES.items():
        got, want = crank_phi(a), phi_from_text(text)
        out.append(_report("towers", f"C{a}_closed_form", got == want, q_power=0, lhs=str(got), rhs=str(want)))
    for a in range(2, 15, 2):
        rec = crank_moment_series_rec(a, order).series
        direct = crank_moment_series_direct(a, order).series
        out.append(_series_report("towers", f"C{a}_recurrence", rec, direct))
    return out


def check_thm5_1(n_max: int = 100):
    return rel.verify_moment_identities(n_max)


def check_thm5_2(n_max: int = 100):
    return rel.verify_p23_identity(n_max)


def check_thm6_1(n_max: int = 200, order: int = 40):
    return (rel.verify_moment_congruences(n_max) + [rel.verify_mod7_generating_identity(order)]
            + [rel.verify_matrix_A()])


def check_thm6_2(n_max: int = 300):
    return rel.verify_p23_congruence(n_max)


def check_classical(n_max: int = 40, progression_n_max: int = 200):
    return rel.verify_classical(n_max, progression_n_max)


def check_master(order: int = 40):
    out = []
    for a in range(2, 15, 2):
        lhs, rhs = rel.master_relation_sides(a, order)
        out.append(_series_report("master", f"a={a}", lhs, rhs))
    return out


TARGETS = ("pde", "asd", "ramanujan-odes", "dims", "towers", "master", "thm5.1", "thm5.2",
           "thm6.1", "thm6.2", "classical", "oracle")


def run_target(name: str, order: int = 40, n_max: int = 100) -> list:
    """Reports for one target; order and n_max scale the series and pointwise checks."""
    if name == "pde":
        return check_pde(order)
    if name == "asd":
        return check_asd(min(order, 20), min(order, 25))
    if name == "ramanujan-odes":
        return check_ramanujan(order)
    if name == "dims":
        return check_dims()
    if name == "towers":
        return check_towers(order)
    if name == "master":
        return check_master(order)
    if name == "thm5.1":
        return check_thm5_1(n_max)
    if name == "thm5.2":
        return check_thm5_2(n_max)
    if name == "thm6.1":
        return check_thm6_1(n_max, order)
    if name == "thm6.2":
        return check_thm6_2(n_max)
    if name == "classical":
        return check_classical(min(n_max, 40), n_max)
    if name == "oracle":
        return check_oracle(min(n_max, 40))
    raise ValueError(f"unknown verification target {name!r}")


def report_dicts(reports) -> list[dict]:
    return [r.to_dict() for r in reports]


__all__ = ["TARGETS", "run_target", "report_dicts", "DIMENSION_TABLE", "TOWER_EXAMPLES",
           "REDUCTION_11", "CRANK_PHI_EXAMPLES"]
