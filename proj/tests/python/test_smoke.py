import cmath
import math

import pytest

import tractlab as tl


def test_shifted_exp_and_inverse():
    F = tl.LogLiftModel.shifted_exp(10.0)
    assert tl.eval_F(F, 3.0) == pytest.approx(math.exp(3.0) - 10.0, rel=1e-14)
    assert tl.eval_dF(F, 3.0) == pytest.approx(math.exp(3.0), rel=1e-14)
    w = 5.0 + 1.0j
    t = tl.TractAddress(2)
    z = tl.inverse_branch(F, t, w)
    assert abs(tl.eval_F(F, z) - w) < 1e-12
    assert tl.tract_of(F, z) == t


def test_orbit_and_periodic_point():
    F = tl.LogLiftModel.shifted_exp(10.0)
    r = tl.iterate(F, 3.0, 10, 2.0)
    assert r.in_JQ
    assert r.real_ray_tail
    p = tl.point_with_address(F, [tl.TractAddress(0)], 2.0)
    assert abs(tl.eval_F(F, p.z) - p.z) < 1e-10


def test_conjugacy_converges_within_tolerance():
    F = tl.LogLiftModel.shifted_exp(10.0)
    kappa = 0.3 + 0.2j
    assert tl.depth_for_tolerance(kappa, 1e-9) == 31
    pts = tl.deep_periodic_points(F, 3, 6.0, 2.0, 5)
    for p in pts:
        orbit = tl.periodic_orbit(p, 60)
        s = tl.theta_limit(F, kappa, orbit, 1e-9, 2.0)
        assert abs(s.theta - p.z) <= 2 * abs(kappa) + 1e-9


def test_kappa_zero_is_identity():
    F = tl.LogLiftModel.shifted_exp(10.0)
    orbit = tl.certified_orbit(F, 3.0, 5, 2.0)
    assert tl.theta_n(F, 0j, orbit, 5, 2.0) == 3.0


def test_semiconj_setup_and_certificate():
    setup = tl.build_setup()
    assert setup.mu == pytest.approx(math.log(1 + math.log(5.5) / math.log(2)), rel=1e-12)
    cert = tl.expansion_certificate(setup)
    assert cert.C_hat > 1.0
    orbit = tl.escaping_g_orbit(setup, 3, 1, 40)
    s = tl.semiconj_limit(setup, orbit, 1e-6, cert.C_hat)
    assert s.increments[-1] <= 1e-6 or len(s.increments) == 0


def test_render_grid_symmetry():
    f = tl.EntireMapSpec.lambda_expm1(0.5)
    rows = tl.classify_grid(f, (-4.0, 4.0, -4.0, 4.0), 32, 32, 50.0, 30, 1)
    assert len(rows) == 32 and len(rows[0]) == 32
    for r in range(32):
        assert rows[r] == rows[31 - r]


def test_errors_are_typed():
    F = tl.LogLiftModel.shifted_exp(10.0)
    with pytest.raises(tl.TractlabError):
        tl.certified_orbit(F, -5.0, 3, 2.0)
    with pytest.raises(tl.ConfigError):
        tl.run_suite("nope")


def test_verify_suite():
    results = tl.run_suite("maps")
    assert results and all(r["passed"] for r in results)
    assert "render" in tl.suite_names()
