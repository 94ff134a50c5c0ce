import math

import numpy as np
import pytest

import glt_shrinkage as g


def test_special_functions():
    assert g.exp_integral_e(1.0, 1.0) == pytest.approx(0.21938393439552027, rel=1e-12)
    assert g.lower_inc_gamma(2.0, 1.0) == pytest.approx(0.26424111765711536, rel=1e-12)
    with pytest.raises(ValueError):
        g.exp_integral_e(1.0, -1.0)


def test_densities():
    assert g.glt_marginal_beta(1.0, 1.0, 1.0) == pytest.approx(0.10105771959856732, rel=1e-9)
    assert g.hs_marginal_beta(1.0, 1.0) == pytest.approx(0.1171979033975241, rel=1e-10)
    assert math.isinf(g.glt_marginal_beta(0.0, 1.0, 2.0))
    assert g.hs_kappa_pdf(0.3, 1.0) == pytest.approx(1.0 / (math.pi * math.sqrt(0.21)))
    assert g.glt_kappa_pdf(0.5, 1.0, 2.0) > 0


def test_hill():
    h = g.hill_estimates([8.0, 4.0, 2.0, 1.0])
    assert h[-1] == pytest.approx(2 * math.log(2))
    assert g.calibrated_mu([8.0, 4.0, 2.0, 1.0], 2, 4) == pytest.approx(math.log(1.5 * math.log(2)))


def test_simulate_and_fit():
    d = g.simulate(n=30, p=40, q=3, seed=2)
    assert d["X"].shape == (30, 40)
    assert np.allclose(d["X"].sum(axis=0), 0.0, atol=1e-12)
    out = g.fit(d["y"], d["X"], burn=200, keep=400, thin=10, seed=1)
    assert out["beta"].shape == (40, 40)
    assert (out["xi"] > 0.5).all()
    again = g.fit(d["y"], d["X"], burn=200, keep=400, thin=10, seed=1)
    assert np.array_equal(out["beta"], again["beta"])
    hs = g.fit(d["y"], d["X"], prior="horseshoe", burn=200, keep=400, thin=10)
    assert "xi" not in hs


def test_normal_means_and_errors():
    y = np.zeros(20)
    y[0] = 8.0
    out = g.fit(y, burn=200, keep=400, thin=10)
    assert out["beta"][:, 0].mean() > 6.0
    with pytest.raises(ValueError):
        g.fit(y, prior="nope", burn=10, keep=20, thin=1)
