"""End-to-end smoke tests for the extension module."""

import math

import pytest

import _symmom as sm


def test_kostka_routes_agree():
    assert sm.kostka_closed_form(0, 2, 5) == 6
    assert sm.kostka_recursive(0, 2, 5) == 6
    assert sm.kostka_generating(0, 2, 5) == 6
    assert sm.kostka_tableau(0, 2, 5) == 6
    assert sm.tensor_power_multiplicities(2, 2) == {0: 1, 2: 1, 4: 1}
    with pytest.raises(sm.OracleBoundExceeded):
        sm.kostka_tableau(0, 5, 5)


def test_theta_reports():
    rep = sm.theta(2, 6)
    assert rep["decimal"] == "0.997132910"
    assert rep["K0"] == 15
    bqf = sm.theta_bqf(1, 6, class_number_one=False)
    assert (bqf["theta_num"], bqf["theta_den"]) == (184, 187)
    with pytest.raises(sm.HypothesisViolated):
        sm.theta(1, 1)


def test_delta_and_sym_series():
    series = sm.delta_coefficients(1000)
    assert series.a(2) == -24
    assert series.a(1000) == -30328412970240000
    assert math.isclose(series.lam(2), -24 / 2**5.5)
    sm.validate_series(series)

    s2 = sm.sym_series(series, 2, 100)
    lam2 = series.lam(2)
    assert math.isclose(s2.at(2), lam2 * lam2 - 1.0)
    assert math.isclose(s2.at(6), s2.at(2) * s2.at(3))
    assert sm.verify_tensor_identity(series, 2, 2, 7) < 1e-9


def test_class_group():
    g = sm.ClassGroup(-23)
    assert g.h == 3
    assert g.cyclic_orders == [3]
    assert sm.count_representations(sm.QuadForm(1, 0, 1), 5) == 8
    assert sm.reduce_form(sm.QuadForm(1, 2, 2)) == sm.QuadForm(1, 0, 1)
    assert sm.verify_character_decomposition(g, g.forms[1], 500) < 1e-9
    assert sm.ideal_count(-4, 5) == 2


def test_moments():
    series = sm.delta_coefficients(10000)
    s = sm.sym_series(series, 1, 10000)
    total = sm.moment_sum(s, 2, 10000)
    assert total > 0
    assert sm.main_term_degree(1, 2) == 0
    assert sm.main_term_degree(1, 3) is None
    samples = [(float(x), x * (3.0 + 2.0 * math.log(x)))
               for x in (1e2, 1e3, 1e4, 1e5, 1e6)]
    fit = sm.fit_main_term(1, 4, samples)
    assert math.isclose(fit["coeffs"][0], 3.0, rel_tol=1e-5)
    assert math.isclose(fit["coeffs"][1], 2.0, rel_tol=1e-5)


def test_verify_suite():
    checks = sm.verify("combinat", 100)
    assert checks and all(c["pass"] for c in checks)
