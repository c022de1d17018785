import math
from fractions import Fraction

import pytest

import summa


def exact_sigma(a, alpha, n):
    # sigma_n = (1 / A_n) * sum_v A_{n-v}^{alpha-1} s_v, with exact rationals
    def coeff(order, m):
        c = Fraction(1)
        for j in range(1, m + 1):
            c = c * (j + order) / j
        return c

    s = [sum(a[: v + 1], Fraction(0)) for v in range(n + 1)]
    num = sum((coeff(alpha - 1, n - v) * s[v] for v in range(n + 1)), Fraction(0))
    return num / coeff(alpha, n)


def test_coefficients_match_product_form():
    a = summa.cesaro_coefficients(0.5, 10)
    assert a[0] == 1.0
    assert a[1] == pytest.approx(1.5, rel=1e-15)
    assert a[3] == pytest.approx(1.5 * 2.5 * 3.5 / 6, rel=1e-15)
    assert summa.cesaro_coefficients(1.0, 5) == [1.0, 2.0, 3.0, 4.0, 5.0, 6.0]


def test_sigma_against_exact_rationals():
    a = [Fraction(1), Fraction(-1, 2), Fraction(3, 4), Fraction(-2), Fraction(5, 3), Fraction(0)]
    sigma = summa.cesaro_sigma([float(x) for x in a], 0.5)
    for n in range(len(a)):
        assert sigma[n] == pytest.approx(float(exact_sigma(a, Fraction(1, 2), n)), rel=1e-13)


def test_term_identity_and_t_indexing():
    a = summa.materialize("alternating_unit", 200)
    sigma = summa.cesaro_sigma(a, 0.25)
    t = summa.cesaro_t(a, 0.25)
    assert len(t) == 199
    for n in range(1, 200):
        assert abs(sigma[n] - sigma[n - 1]) == pytest.approx(abs(t[n - 1]) / n, rel=1e-10)


def test_catalog_and_materialize():
    names = {f["name"] for f in summa.family_catalog()}
    assert {"alternating_unit", "unit_tail", "power_decay", "log_shift", "reciprocal_log",
            "almost_inc_example", "power_weight"} <= names
    assert summa.materialize("unit_tail", 3) == [0.0, 1.0, 1.0]
    assert summa.materialize("power_weight", 3, start=1, params={"q": 2}) == [1.0, 4.0, 9.0]
    with pytest.raises(ValueError):
        summa.materialize("no_such_family", 3)
    with pytest.raises(ValueError):
        summa.materialize("power_decay", 3, params={"bogus": 1})


def test_growth_and_almost_increasing():
    cps = [2 ** j for j in range(8, 15)]
    g = summa.growth_diagnostic(cps, [math.sqrt(m) for m in cps])
    assert g["slope"] == pytest.approx(0.5, abs=1e-9)
    assert g["verdict"] == "growth_detected"
    w = summa.almost_increasing([n * math.exp((-1) ** n) for n in range(1, 1001)])
    assert w["inf_ratio"] == pytest.approx(math.exp(-2), abs=1e-3)


def test_run_config_f1_and_f3():
    report, status, files = summa.run({"mode": "check_main", "family": "F1", "n": 4096})
    assert status == 0
    assert len(report["results"]["hypotheses"]["records"]) == 8
    assert "conclusion.csv" in files

    report, status, _ = summa.run({"mode": "check_main", "family": "F3", "n": 4096})
    assert status == 1
    cond7 = [r for r in report["results"]["hypotheses"]["records"] if r["id"] == "cond7"][0]
    assert cond7["verdict"] == "growth_detected"


def test_bad_config_raises():
    with pytest.raises(ValueError, match="/n"):
        summa.run({"mode": "check_main", "family": "F1", "n": -5})


def test_oracle_is_deterministic():
    first = summa.run_oracle(seed=3, trials=40)
    assert first == summa.run_oracle(seed=3, trials=40)
    assert [v["check"] for v in first] == [
        "abel_identity", "lemma1", "decomposition_bound", "power_inequality", "cross_mode"]
    assert all(v["violations"] == 0 for v in first)
