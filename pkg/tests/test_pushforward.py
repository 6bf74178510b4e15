import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chebpush.densities import catalog, make_density
from chebpush.pushforward import (
    LIMIT_BOUNDED_FACTOR,
    angle_density,
    asymptotic_bounded_factor,
    bounded_factor,
    convergence_report,
    default_grid,
    mass_left_of_zero,
    pushforward_cdf,
    pushforward_mass,
    pushforward_on_grid,
    pushforward_pdf,
    scaled_angle_density,
    series_bounded_factor,
    sup_error,
)
from chebpush.spectral import expand_density

from oracles import branch_pushforward_pdf, mass_left_oracle, pushforward_cdf_oracle

SMOOTH = ("uniform", "ramp", "gauss:0,0.25")


def _dist(name):
    from chebpush.densities import parse_density

    return parse_density(name)


def test_default_grid_shape():
    z = default_grid(201)
    assert z.shape == (201,)
    assert np.all(np.diff(z) > 0)
    assert np.abs(z).max() < 1.0
    assert z[0] == pytest.approx(-np.cos(1e-3))
    with pytest.raises(ValueError):
        default_grid(1)
    with pytest.raises(ValueError):
        default_grid(100, eps=2.0)


def test_angle_density_is_theta_law():
    d = make_density("ramp")
    theta = np.linspace(0.0, np.pi, 201)
    vals = angle_density(d, theta)
    # integrates to 1 over [0, pi]
    assert np.trapezoid(vals, theta) == pytest.approx(1.0, abs=1e-4)
    assert angle_density(d, 0.0) == pytest.approx(0.0, abs=1e-15)
    with pytest.raises(ValueError):
        angle_density(d, -0.5)
    with pytest.raises(ValueError):
        angle_density(d, 3.5)


def test_scaled_angle_density_stretches():
    d = make_density("gauss", mu=0.0, sigma=0.25)
    psi = np.linspace(0.0, 5 * np.pi, 301)
    vals = scaled_angle_density(d, 5, psi)
    assert np.allclose(vals, angle_density(d, psi / 5) / 5)
    # flat for the arcsine law: 1 / (k pi) everywhere on [0, k pi]
    arc = make_density("arcsine")
    flat = scaled_angle_density(arc, 7, np.linspace(0.0, 7 * np.pi, 100))
    assert np.max(np.abs(flat - 1.0 / (7 * np.pi))) < 1e-16
    with pytest.raises(ValueError):
        scaled_angle_density(d, 5, 5 * np.pi + 0.1)


@pytest.mark.parametrize("name", [d.name for d in catalog()])
def test_identity_map_returns_the_input_pdf(name):
    d = _dist(name)
    z = default_grid(201)
    assert np.max(np.abs(pushforward_pdf(d, 1, z) - d.pdf(z))) < 1e-12


def test_arcsine_is_invariant_for_every_k():
    arc = make_density("arcsine")
    worst = max(sup_error(arc, k) for k in range(1, 65))
    assert worst < 1e-13


def test_uniform_k2_closed_form():
    # change of variables through T_2 on two branches gives 1/(2 sqrt(2(1+z)))
    d = make_density("uniform")
    z = default_grid(201)
    assert np.max(np.abs(pushforward_pdf(d, 2, z) - 1.0 / (2.0 * np.sqrt(2.0 * (1.0 + z))))) < 1e-13


@pytest.mark.parametrize("name", SMOOTH)
@pytest.mark.parametrize("k", [2, 3])
def test_small_k_against_exact_branch_oracle(name, k):
    d = _dist(name)
    z = np.cos(np.linspace(0.08, np.pi - 0.08, 21))
    vals = pushforward_pdf(d, k, z)
    oracle = np.array([branch_pushforward_pdf(d, k, zz) for zz in z])
    assert np.max(np.abs(vals - oracle)) < 1e-9


def test_pdf_cdf_guards():
    d = make_density("uniform")
    for bad in (1.0, -1.0, 1.2, np.nan):
        with pytest.raises(ValueError):
            pushforward_pdf(d, 3, bad)
    with pytest.raises(ValueError):
        pushforward_cdf(d, 3, 1.01)
    with pytest.raises(ValueError):
        bounded_factor(d, 0, 0.5)
    with pytest.raises(ValueError):
        bounded_factor(d, 2.5, 0.5)


@pytest.mark.parametrize("name", [d.name for d in catalog()])
@pytest.mark.parametrize("k", [1, 2, 3, 8, 13])
def test_cdf_endpoints_and_monotonicity(name, k):
    d = _dist(name)
    z = np.linspace(-1.0, 1.0, 401)
    vals = pushforward_cdf(d, k, z)
    assert vals[0] == pytest.approx(0.0, abs=1e-12)
    assert vals[-1] == pytest.approx(1.0, abs=1e-12)
    assert np.all(np.diff(vals) >= -1e-12)
    assert np.all((vals >= 0.0) & (vals <= 1.0))


@pytest.mark.parametrize("name", [d.name for d in catalog()])
@pytest.mark.parametrize("k", [2, 5, 16])
def test_cdf_against_interval_union_oracle(name, k):
    d = _dist(name)
    zs = np.linspace(-0.99, 0.99, 41)
    vals = pushforward_cdf(d, k, zs)
    oracle = np.array([pushforward_cdf_oracle(d, k, z) for z in zs])
    assert np.max(np.abs(vals - oracle)) < 1e-12


@pytest.mark.parametrize("name", SMOOTH)
def test_cdf_derivative_is_the_pdf(name):
    # central difference of F_k against f_k, relative tolerance 1e-5 on the
    # interior window
    d = _dist(name)
    k = 6
    z = np.linspace(-0.95, 0.95, 96)
    h = 1e-5
    deriv = (pushforward_cdf(d, k, z + h) - pushforward_cdf(d, k, z - h)) / (2 * h)
    pdf = pushforward_pdf(d, k, z)
    assert np.max(np.abs(deriv - pdf) / pdf) < 1e-5


@pytest.mark.parametrize("name", [d.name for d in catalog()])
def test_mass_is_one(name):
    d = _dist(name)
    worst = max(abs(pushforward_mass(d, k) - 1.0) for k in range(1, 13))
    assert worst < 1e-9


def test_mass_guards():
    d = make_density("uniform")
    with pytest.raises(ValueError):
        pushforward_mass(d, 3, nodes=2)


@pytest.mark.parametrize("name", [d.name for d in catalog()])
@pytest.mark.parametrize("k", [2, 3, 4, 7, 8])
def test_mass_left_of_zero_against_oracle(name, k):
    d = _dist(name)
    assert mass_left_of_zero(d, k) == pytest.approx(mass_left_oracle(d, k), abs=1e-12)


def test_dance_pattern_of_centered_bump():
    # a bump at 0 lands on T_2(0) = -1, then hops: mass alternates sides
    # with period two in even k before settling at 1/2
    d = make_density("gauss", mu=0.0, sigma=0.25)
    assert mass_left_of_zero(d, 2) > 0.5
    assert mass_left_of_zero(d, 4) < 0.5
    assert mass_left_of_zero(d, 6) > 0.5
    assert mass_left_of_zero(d, 8) < 0.5
    assert abs(mass_left_of_zero(d, 64) - 0.5) < 1e-3


@pytest.mark.parametrize("name", SMOOTH)
@pytest.mark.parametrize("k", [2, 4, 10, 34, 64])
def test_series_route_matches_direct_route(name, k):
    d = _dist(name)
    s = expand_density(d)
    z = default_grid(201)
    gap = np.max(np.abs(series_bounded_factor(s, k, z) - bounded_factor(d, k, z)))
    assert gap < 1e-10


def test_series_route_resonant_modes():
    # k = 4 with a series through l = 64 hits every resonant l (l = 3, 5,
    # 7, ... have l +/- 1 divisible by 4) and must fall back cleanly
    d = make_density("gauss", mu=0.0, sigma=0.25)
    s = expand_density(d)
    z = default_grid(101)
    gap = np.max(np.abs(series_bounded_factor(s, 4, z) - bounded_factor(d, 4, z)))
    assert gap < 1e-10
    assert np.all(np.isfinite(series_bounded_factor(s, 4, z)))


def test_series_route_rejects_odd_k():
    s = expand_density(make_density("uniform"))
    with pytest.raises(ValueError, match="even k"):
        series_bounded_factor(s, 3, 0.2)


def test_asymptotic_expansion_tightens_like_k4():
    d = make_density("uniform")
    s = expand_density(d)
    z = default_grid(201)

    def gap(k):
        return np.max(np.abs(bounded_factor(d, k, z) - asymptotic_bounded_factor(s, k, z)))

    # fourth-order remainder: doubling k should shrink the gap ~16x
    assert gap(32) < gap(16) / 10
    assert gap(64) < gap(32) / 10
    with pytest.raises(ValueError):
        asymptotic_bounded_factor(s, 1, 0.0)


def test_sup_error_decays_quadratically_for_uniform():
    d = make_density("uniform")
    e16 = sup_error(d, 16)
    e32 = sup_error(d, 32)
    assert 3.5 < e16 / e32 < 4.5


def test_convergence_report_fit_label():
    rep = convergence_report(make_density("uniform"), (8, 16, 32, 64, 128))
    assert rep.label == "fit"
    assert rep.ks == (8, 16, 32, 64, 128)
    assert len(rep.sup_errors) == 5
    assert -2.2 < rep.fitted_order < -1.8


def test_convergence_report_invariant_label():
    rep = convergence_report(make_density("arcsine"), (4, 8, 16))
    assert rep.label == "invariant"
    assert np.isnan(rep.fitted_order)
    assert max(rep.sup_errors) < 1e-13


def test_convergence_report_empirical_label():
    rep = convergence_report(make_density("uniform01"), (8, 16, 32, 64))
    assert rep.label == "empirical"
    # decay is observed even though the smooth analysis does not cover jumps
    assert rep.sup_errors[-1] < rep.sup_errors[0]


def test_convergence_report_guards():
    d = make_density("uniform")
    with pytest.raises(ValueError):
        convergence_report(d, ())
    with pytest.raises(ValueError):
        convergence_report(d, (8, 8))
    with pytest.raises(ValueError):
        convergence_report(d, (16, 8))
    rep = convergence_report(d, (8, 16))
    assert np.isnan(rep.fitted_order)


def test_grid_result_fields_are_consistent():
    d = make_density("ramp")
    res = pushforward_on_grid(d, 5, grid=33)
    assert res.density == "ramp"
    assert res.k == 5
    root = np.sqrt(1.0 - res.z**2)
    assert np.allclose(res.pdf * root, res.bounded, atol=1e-14)
    assert np.allclose(res.limit_pdf * root, LIMIT_BOUNDED_FACTOR, atol=1e-14)
    assert np.allclose(res.abs_error, np.abs(res.bounded - LIMIT_BOUNDED_FACTOR), atol=0)


def test_chunked_evaluation_is_bit_identical():
    # fixed summation order: evaluating the grid in pieces must reproduce
    # the full evaluation exactly
    d = make_density("gauss", mu=0.0, sigma=0.25)
    z = default_grid(201)
    full = bounded_factor(d, 9, z)
    parts = np.concatenate([bounded_factor(d, 9, z[:100]), bounded_factor(d, 9, z[100:])])
    assert np.array_equal(full, parts)


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=1, max_value=40),
       st.floats(min_value=-0.999, max_value=0.999))
def test_bounded_factor_nonnegative(k, z):
    d = make_density("ramp")
    assert bounded_factor(d, k, z) >= 0.0


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=1, max_value=24),
       st.floats(min_value=-1.0, max_value=1.0),
       st.floats(min_value=-1.0, max_value=1.0))
def test_cdf_is_monotone_between_any_two_points(k, a, b):
    d = make_density("gauss", mu=0.2, sigma=0.5)
    lo, hi = sorted((a, b))
    assert pushforward_cdf(d, k, lo) <= pushforward_cdf(d, k, hi) + 1e-12
