import json
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, strategies as st

from rankcrank import relations as rel
from rankcrank.identities import (MOD11_M6_ALT, MOMENT_CONGRUENCES, MOMENT_IDENTITIES, P23_CONGRUENCE,
                                  P23_IDENTITY)
from rankcrank.relations import LinearForm, NoRelation, Term, discover_relation, find_dependencies

n = sp.Symbol("n")


def test_term_parsing():
    assert Term.parse("d2C4") == Term("C", 4, 2)
    assert Term.parse("dT6") == Term("T", 6, 1)
    assert Term.parse("eta23").name == "eta23"
    assert [t.name for t in rel.parse_basis("C2+N12")] == ["C2", "dC2", "C4", "T6"]
    for bad in ("X4", "C", "d", "C2++C4"):
        with pytest.raises(ValueError):
            rel.parse_basis(bad)


def test_linear_form_algebra():
    a = LinearForm.parse("(n+1)*M2 + 3*N2")
    b = LinearForm.parse("2*M2 - N2")
    assert a + b == LinearForm.parse("(n+3)*M2 + 2*N2")
    assert a - a == LinearForm()
    assert a.degree("M2") == 1 and a.symbols() == ["M2", "N2"]
    assert a.substitute("N2", LinearForm.parse("n*M2")) == LinearForm.parse("(4*n+1)*M2")
    assert LinearForm.parse("2*N4 - M4").solve_for("N4") == LinearForm.parse("1/2*M4")
    with pytest.raises(ValueError):
        LinearForm.parse("n*N4 - M4").solve_for("N4")


@given(st.integers(-50, 50), st.integers(-50, 50), st.integers(0, 30))
def test_evaluator_matches_sympy(c0, c1, k):
    form = LinearForm({"M2": c0 + c1 * n, "N2": c1 * n**2})
    vals = rel.moment_values(30)
    want = (c0 + c1 * k) * vals["M2"][k] + c1 * k * k * vals["N2"][k]
    assert form.evaluator()(k, vals) == want


def test_pointwise_example_n4():
    # N_4(4) from the crank moments and N_2 at n = 4
    vals = rel.moment_values(10)
    assert vals["N4"][4] == 164
    assert LinearForm.parse(MOMENT_IDENTITIES["N4"]).evaluator()(4, vals) == 164


def test_discovery_recovers_stored_identities():
    got = rel.derive_moment_identities(60)
    for sym, text in MOMENT_IDENTITIES.items():
        assert got[sym] == LinearForm.parse(text), sym
    assert rel.derive_p23_identity(60, got) == LinearForm.parse(P23_IDENTITY)


def test_T2_relation_over_C2():
    r = discover_relation(Term("T", 2), rel.family_terms(2), 12)
    assert r.coefficients == (-2, -6, 8)
    assert r.residual(40).is_zero()


def test_T6_is_independent_of_C6():
    with pytest.raises(NoRelation):
        discover_relation(Term("T", 6), rel.family_terms(6), 60)


def test_margin_is_enforced():
    with pytest.raises(ValueError):
        discover_relation(Term("T", 3), rel.family_terms(3), 11)
    with pytest.raises(ValueError):
        find_dependencies(rel.family_terms(3), 5, 7)


def test_mod_p_dependencies():
    (d11,) = find_dependencies(rel.family_terms(3), 40, 11)
    assert d11.coefficients == (9, 5, 1, 8, 9, 1) and d11.trivial is False
    (d7,) = find_dependencies(rel.family_terms(3), 40, 7)
    assert d7.coefficients == (1, 4, 6, 2, 1, 0)
    (d3,) = find_dependencies(rel.family_terms(2), 20, 3)
    assert d3.coefficients == (2, 0, 1) and d3.trivial is True
    assert find_dependencies(rel.family_terms(3), 40) == []


def test_fermat_filter():
    assert LinearForm.parse("(n**5 - n)*M2").is_fermat_trivial(5)
    assert LinearForm.parse("(n**3 - n)*M2 + 3*M4").is_fermat_trivial(3)
    assert not LinearForm.parse("(n**3 + 1)*M2").is_fermat_trivial(3)


def test_matrix_A():
    A = rel.matrix_A()
    assert A.det() == -110361968640
    assert A.ints()[0] == [2, 2, 2, 2, 2, 2]


def test_master_relation():
    for a in (2, 4, 6, 8):
        lhs, rhs = rel.master_relation_sides(a, 30)
        assert lhs == rhs


@pytest.mark.parametrize("label", sorted(MOMENT_CONGRUENCES))
def test_congruences_hold_pointwise(label):
    p, text = MOMENT_CONGRUENCES[label]
    f, vals = LinearForm.parse(text).evaluator(), rel.moment_values(100)
    assert all(f(k, vals) % p == 0 for k in range(101))


def test_congruences_from_identities():
    ids = {s: LinearForm.parse(t) for s, t in MOMENT_IDENTITIES.items()}
    c = {k: LinearForm.parse(t) for k, (_, t) in MOMENT_CONGRUENCES.items()}
    assert rel.congruence_from_identity(ids["N6"], "N6", 11).equivalent_mod(c["mod11_M6"], 11)
    assert rel.congruence_from_identity(ids["N8"], "N8", 83).equivalent_mod(c["mod83_M8"], 83)
    assert rel.congruence_from_identity(ids["N10"], "N10", 53).equivalent_mod(c["mod53_M10"], 53)
    assert LinearForm.parse(MOD11_M6_ALT[1]).equivalent_mod(c["mod11_M6"], 11)


@pytest.mark.parametrize("label", ["mod7_M4", "mod11_M6", "mod11_M8", "mod41_M10", "mod53_M10", "mod83_M8"])
def test_congruence_certificates(label):
    p, text = MOMENT_CONGRUENCES[label]
    phi, ok = rel.congruence_certificate(LinearForm.parse(text), p)
    assert ok and phi.in_W(6)


def test_p23_congruence_values():
    p, text = P23_CONGRUENCE
    f, vals = LinearForm.parse(text).evaluator(), rel.moment_values(300)
    signs = rel.shifted_pentagonal_signs(300)
    assert signs == {1: 1, 24: -1, 47: -1, 116: 1, 162: 1, 277: -1}
    for k in range(1, 301):
        assert (f(k, vals) - signs.get(k, 0)) % p == 0


def test_relation_json_round_trip():
    r = discover_relation(Term("T", 3), rel.family_terms(3), 20)
    d = json.loads(r.to_json())
    assert d["target"] == "T3" and d["basis"][0] == "C2"
    assert [Fraction(c) for c in d["coefficients"]] == list(r.coefficients)
    assert d["residual_checked_to"] == 20


@pytest.mark.parametrize("check", [rel.verify_moment_identities, rel.verify_p23_identity])
def test_verification_reports_pass(check):
    assert all(r.passed for r in check(60))


def test_classical_reports_pass():
    reports = rel.verify_classical(30, 120)
    assert len(reports) == 12 and all(r.passed for r in reports)
