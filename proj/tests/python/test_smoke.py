import cmath
import json
import math

import pytest

import zetaline as z

GAMMA = 0.5772156649015329


def test_zeta_values():
    assert abs(z.zeta(2) - math.pi**2 / 6) < 1e-12
    assert abs(z.zeta(complex(1, 10)) - complex(1.3902873132374014, -0.10978515306630206)) < 1e-10
    assert z.inverse_zeta(1) == 0
    assert abs(z.dirichlet_l(1, 4) - math.pi / 4) < 1e-12
    with pytest.raises(z.PoleError):
        z.zeta(1)


def test_special_functions():
    assert z.theta(1).real == pytest.approx(-0.000520325230213207, abs=1e-10)
    assert z.psi(20) == pytest.approx(2.995740587295146, abs=1e-10)
    assert z.sin_kernel_integral()["value"] == pytest.approx((GAMMA + math.log(2) - 1) / 4, abs=1e-7)
    with pytest.raises(z.PathError):
        z.theta(0.7j)


def test_norms_and_predictions():
    r = z.interval_norm("zeta", T=100.0, delta=0.1)
    assert r["value"] == pytest.approx(0.1634832512469338, rel=1e-10)
    assert r["converged"]
    zeta_pred, inverse_pred = z.theorem3_predictions(0.1)
    assert zeta_pred == pytest.approx(math.pi**2 * math.exp(-GAMMA) * 0.01 / 24, rel=1e-14)
    assert inverse_pred == pytest.approx(math.exp(-GAMMA) * 0.01 / 4, rel=1e-14)
    assert 0.90 < z.example2_ratio()["value"] < 0.96
    with pytest.raises(z.DomainError):
        z.interval_norm("nonsense", T=10.0, delta=0.1)


def test_closed_form_extremal_product():
    s = complex(1.0, 0.03)
    assert math.log(abs(z.zeta_delta(s, 0.1))) == pytest.approx(z.log_abs_zeta_delta(s, 0.1), abs=1e-12)


def test_shift_search():
    primes, angles = [2, 3, 5], [math.pi] * 3
    T, disc = z.search_shift(primes, angles, 1e4)
    assert 0 <= T <= 1e4
    assert disc <= 0.2
    assert z.discrepancy(primes, angles, T) == pytest.approx(disc)


def test_framework():
    ones = z.MultiplicativeSeries.ones()
    alpha, beta = z.alpha_beta_fit(ones, 10**6, "lambda_weighted")
    assert abs(alpha - 1) < 0.02 and abs(beta - GAMMA) < 0.05
    sums = z.lambda_sums(ones, 1000)
    assert sums["lambda0"] is not None and sums["lambda1"] < 0
    direct, inverse = z.theorem13_constants(4, 0.1)
    assert inverse / z.theorem13_constants(1, 0.1)[1] == pytest.approx(2.0, rel=1e-12)
    assert z.beta_from_residue(1.0) == pytest.approx(GAMMA)


def test_modular_data():
    assert [z.tau(n) for n in (2, 3, 6)] == [-24, 252, -6048]
    assert z.tau(10000) == -482606811957501440000
    assert z.tau_table(5) == [1, -24, 252, -1472, 4830]
    assert [z.catalan(k) for k in range(1, 5)] == [1, 2, 5, 14]
    assert z.sato_tate_alpha() == pytest.approx(8 / (3 * math.pi), abs=1e-9)
    primes, angles = z.sato_tate_angles(3, 100)
    assert len(primes) == 25 and all(0 <= a <= math.pi for a in angles)


def test_reports():
    ok, text = z.run_verify("sin-kernel", format="json")
    doc = json.loads(text)
    assert ok and doc["passed"] and doc["schema"] == "v1"
    assert doc["rows"][0]["check"] == "sin_minus_kernel_integral"
    csv = z.run_scan("zeta", deltas=[0.1], t_samples=3, t_max=[100.0], seed=4)
    assert csv.splitlines()[0].startswith("target,mode,sigma,T,delta")
    assert len(csv.strip().splitlines()) == 4
    assert "special-fns" in z.verify_suites()
    with pytest.raises(z.UsageError):
        z.run_verify("sin-kernel", bogus=1)
