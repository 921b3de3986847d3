import json
from fractions import Fraction

import pytest

import wppsheaf as w


def test_params():
    p = w.WppParams(2, 4, 6)
    assert (p.a, p.b, p.c, p.d, p.m) == (2, 4, 6, 2, 12)
    assert p.d12 == 2 and p.d23 == 2
    with pytest.raises(ValueError):
        w.WppParams(0, 1, 1)


def test_hilbert():
    p2 = w.WppParams(1, 1, 1)
    assert w.hilb_top(p2, 0) == (Fraction(1, 2), Fraction(3, 2))
    assert w.hilb_fit_oracle(p2, 0) == (Fraction(1, 2), Fraction(3, 2), 1)
    assert w.chi_oracle(p2, 2) == 6
    assert w.hilb_top(w.WppParams(2, 2, 4), 1) == (0, 0)
    assert w.hilb_top_E(w.WppParams(1, 2, 3), 6, 4) == (18, 57)
    with pytest.raises(w.InvalidInput):
        w.hilb_top_E(w.WppParams(1, 2, 3), 4, 0)
    c = w.rank2_constant_term(w.WppParams(1, 1, 2), 2, -2, 0, 1, 2, 1)
    assert c.denominator == 1


def test_kgroup():
    p = w.WppParams(1, 1, 2)
    cls = w.rank1_class(p, 1, 0, -2, [[2, 1], [1], [1, 1]])
    assert cls == [-3, 5, 3, -4]
    assert w.rank1_class_by_devissage(p, 1, 0, -2, [[2, 1], [1], [1, 1]]) == cls
    assert w.rank2_typeI_class(p, [0, 1, 0], [2, 2, 1]) == w.rank2_class_by_devissage(p, [0, 1, 0], [2, 2, 1])
    assert w.verify_relations(w.WppParams(2, 3, 4))


def test_inertia():
    secs = w.sectors(w.WppParams(1, 1, 2))
    assert [(s["f"], s["kind"], s["dim"]) for s in secs] == [(0, "D", 2), (Fraction(1, 2), "D3", 0)]
    p = w.WppParams(1, 1, 1)
    closed = json.loads(w.tch_typeI_closed_form_json(p, -2, [1, 2, 2]))
    direct = json.loads(w.tch_typeI_json(p, [0, 0, -2], [1, 2, 2]))
    assert closed == direct


def test_gluing():
    p = w.WppParams(1, 1, 2)
    ok, _ = w.check_gluing_rank1(p, 1, 0, -1, [[1], [], [2]])
    assert ok
    ok, _ = w.check_gluing_typeI(p, [0, 0, 0], [1, 2, 1])
    assert ok


def test_series():
    names, terms = w.g_series_color0(w.WppParams(1, 1, 2), 0, 4)
    assert names == ["q"]
    assert [terms[(k,)] for k in range(5)] == [1, 6, 22, 68, 187]
    assert w.balanced_brute(2, 4) == w.balanced_rhs(2, 4)
    assert w.p1cc_product(2, 4) == w.p1cc_specialized(2, 4)
    names, terms = w.chart_series(w.WppParams(1, 1, 3), 3, 0, 4)
    assert names == ["r0", "r1", "r2"]
    assert terms[(1, 2, 1)] == 3
    assert w.eta_inv_pow(1, 4)[1][(4,)] == 5
    assert w.theta3(4)[1][(4,)] == 2


def test_rank2():
    p2 = w.WppParams(1, 1, 1)
    assert w.enumerate_stable_triples(p2, -1, 0, 3) == [(-1, 1, 1, 1)]
    assert w.is_mu_stable(p2, [1, 1, 1])
    assert not w.is_mu_stable(p2, [2, 1, 1])
    assert w.slope_oracle_stability(p2, 1, [1, 1, 1])
    terms, exact_from = w.h_vb_specialized(p2, 1, -1, 0, 12)
    assert terms[0] == 1 and terms[-9] == 3
    assert exact_from == -4
    full, _ = w.h_full(p2, 1, -1, 0, 12)
    assert full == {-4: 729, -3: 203, -2: 48, -1: 9, 0: 1}
    assert w.enumerate_stable_triples(w.WppParams(2, 2, 2), -1, 0, 12) == []
