import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import oracles
from ergolab import geometry as geo
from ergolab.errors import (
    ChartDomainError,
    ConstructionError,
    SignatureError,
    UnsupportedModelError,
)


def P(rbar, phi=0.3, t=0.0, theta=None):
    return geo.ChartPoint(t, rbar, phi, theta)


# -- pinned component values ------------------------------------------------

def test_vortex_components_pinned():
    model = geo.hydro_vortex(1.0, 0.2)
    md = geo.metric_at(model, P(2.0))
    assert md.g[0, 0] == -0.75
    assert md.g[0, 2] == -1.0
    assert md.g[2, 2] == 4.0
    assert md.g[0, 1] == 0.0
    assert md.sqrt_abs_det == pytest.approx(2.0, rel=1e-13)
    assert np.allclose(md.g, oracles.vortex_metric(1.0, 2.0), atol=1e-15)
    assert np.allclose(md.g_inv, oracles.block_inverse(md.g), atol=1e-13)
    assert md.g_ref[0, 0] == 1.0
    assert np.all(md.g_ref[0, 1:] == 0.0) and np.all(md.g_ref[1:, 0] == 0.0)
    assert np.array_equal(md.g_ref[1:, 1:], md.g[1:, 1:])


def test_ergoregion_indicator_pinned():
    model = geo.hydro_vortex(1.0, 0.2)
    assert geo.ergoregion_indicator(model, P(0.5)) == 3.0
    assert geo.ergoregion_indicator(model, P(2.0)) == -0.75
    assert geo.ergoregion_indicator(model, P(1.0)) == 0.0


def test_doubled_chart_reflection_pinned():
    model = geo.hydro_vortex_doubled(1.0, 0.2)
    md_neg = geo.metric_at(model, P(-0.6))
    md_pos = geo.metric_at(model, P(1.0))
    assert np.array_equal(md_neg.g, md_pos.g)
    plain = geo.metric_at(geo.hydro_vortex(1.0, 0.2), P(1.0))
    assert np.array_equal(md_neg.g, plain.g)
    assert float(model.effective_radius(-0.6)) == 1.0
    assert float(model.effective_radius(0.2)) == 0.2


def test_minkowski_components():
    md = geo.metric_at(geo.minkowski(), P(3.0))
    assert np.array_equal(md.g, np.diag([-1.0, 1.0, 9.0]))


def test_bump3d_components_pinned():
    model = geo.SpacetimeModel(geo.ModelKind.BUMP_ERGOREGION_3D)
    assert model.bump_amplitude == 1.25
    md = geo.metric_at(model, P(4.5, theta=math.pi / 2))
    assert md.g[0, 0] == pytest.approx(0.5625, abs=1e-14)
    assert md.g[0, 3] == pytest.approx(-625.0, rel=1e-14)
    assert md.g[2, 2] == pytest.approx(4.5**2)
    assert md.gTT > 0.0
    far = geo.metric_at(model, P(7.0, theta=math.pi / 2))
    assert far.g[0, 0] == -1.0 and far.g[0, 3] == 0.0
    near_axis = geo.metric_at(model, P(4.5, theta=0.3))
    assert near_axis.g[0, 0] == -1.0


def test_almost_schw_components_pinned():
    model = geo.SpacetimeModel(geo.ModelKind.ALMOST_SCHWARZSCHILD_3D, M=1.0)
    assert model.bump_amplitude == 1.0
    md = geo.metric_at(model, P(4.5, theta=math.pi / 2))
    assert md.g[0, 0] == pytest.approx(2.0 / 4.5, rel=1e-13)
    assert md.g[0, 3] == pytest.approx(-500.0, rel=1e-13)
    assert md.g[1, 1] == pytest.approx(1.8, rel=1e-13)
    far = geo.metric_at(model, P(10.0, theta=math.pi / 2))
    assert far.g[0, 0] == pytest.approx(-0.8)
    assert far.g[0, 3] == 0.0
    assert far.g[1, 1] == pytest.approx(1.25)


# -- randomized battery against the typed-again oracle ----------------------

def _battery_models():
    return [
        (geo.hydro_vortex(1.0, 0.2), lambda r, th: oracles.vortex_metric(1.0, r)),
        (geo.hydro_vortex(2.5, 0.7), lambda r, th: oracles.vortex_metric(2.5, r)),
        (
            geo.hydro_vortex_doubled(1.0, 0.2),
            lambda r, th: oracles.doubled_vortex_metric(1.0, 0.2, r),
        ),
        (geo.minkowski(), lambda r, th: oracles.minkowski_metric(r)),
        (
            geo.SpacetimeModel(geo.ModelKind.BUMP_ERGOREGION_3D),
            lambda r, th: oracles.bump3d_metric(r, th, amp=1.25),
        ),
        (
            geo.SpacetimeModel(geo.ModelKind.ALMOST_SCHWARZSCHILD_3D, M=1.3),
            lambda r, th: oracles.almost_schw_metric(1.3, r, th),
        ),
    ]


def test_metric_battery_random_points():
    rng = np.random.default_rng(7)
    for model, oracle in _battery_models():
        lo, hi = model.chart_bounds
        for _ in range(150):
            r = float(rng.uniform(lo + 1e-6 * (hi - lo), hi))
            th = float(rng.uniform(0.05, math.pi - 0.05)) if model.n_coords == 4 else None
            md = geo.metric_at(model, P(r, theta=th))
            assert np.array_equal(md.g, md.g.T)
            n = model.n_coords
            assert np.max(np.abs(md.g @ md.g_inv - np.eye(n))) < 1e-10
            eigs = np.linalg.eigvalsh(md.g)
            assert int(np.sum(eigs < 0.0)) == 1
            assert np.allclose(md.g, oracle(r, th), rtol=1e-12, atol=1e-12)
            assert np.allclose(md.g_inv, oracles.block_inverse(md.g), rtol=1e-9, atol=1e-12)
            det_blocks = md.g[0, 0] * md.g[-1, -1] - md.g[0, -1] ** 2
            for i in range(1, n - 1):
                det_blocks *= md.g[i, i]
            assert md.sqrt_abs_det == pytest.approx(math.sqrt(abs(det_blocks)), rel=1e-10)


@settings(max_examples=60, deadline=None)
@given(
    C=st.floats(0.5, 3.0),
    frac=st.floats(0.05, 0.6),
    s=st.floats(0.05, 30.0),
)
def test_vortex_volume_closed_form(C, frac, s):
    # det g = -rbar^2 independently of C, so the volume factor is rbar itself
    delta = frac * C
    model = geo.hydro_vortex(C, delta)
    r = min(delta + s, model.chart_bounds[1])
    md = geo.metric_at(model, P(r))
    assert md.sqrt_abs_det == pytest.approx(r, rel=1e-11)
    eigs = np.linalg.eigvalsh(md.g)
    assert int(np.sum(eigs < 0.0)) == 1


@settings(max_examples=60, deadline=None)
@given(s=st.floats(1e-3, 30.0))
def test_doubled_metric_even_under_reflection(s):
    model = geo.hydro_vortex_doubled(1.0, 0.2)
    g_plus = geo.metric_at(model, P(0.2 + s)).g
    g_minus = geo.metric_at(model, P(0.2 - s)).g
    assert np.allclose(g_plus, g_minus, rtol=1e-12, atol=1e-12)


# -- errors and validation --------------------------------------------------

def test_chart_domain_errors():
    model = geo.hydro_vortex(1.0, 0.2)
    with pytest.raises(ChartDomainError):
        geo.metric_at(model, P(0.1))
    with pytest.raises(ChartDomainError):
        geo.metric_at(model, P(100.0))
    bump = geo.SpacetimeModel(geo.ModelKind.BUMP_ERGOREGION_3D)
    with pytest.raises(ChartDomainError):
        geo.metric_at(bump, P(4.0))
    with pytest.raises(ChartDomainError):
        geo.metric_at(bump, P(4.0, theta=3.2))


def test_signature_floor_near_axis():
    bump = geo.SpacetimeModel(geo.ModelKind.BUMP_ERGOREGION_3D)
    with pytest.raises(SignatureError):
        geo.metric_at(bump, P(1.0, theta=1e-9))


def test_model_validation():
    with pytest.raises(ValueError):
        geo.hydro_vortex(0.2, 0.5)
    with pytest.raises(ValueError):
        geo.hydro_vortex(1.0, -0.1)
    with pytest.raises(ValueError):
        geo.SpacetimeModel(geo.ModelKind.ALMOST_SCHWARZSCHILD_3D, M=0.0)
    with pytest.raises(ValueError):
        geo.hydro_vortex(1.0, 0.2, inner_bc="absorbing")
    with pytest.raises(ValueError):
        geo.hydro_vortex(1.0, 0.2, inner_bc="doubled")
    with pytest.raises(ValueError):
        geo.SpacetimeModel("no_such_family")


def test_chart_point_coords():
    model = geo.hydro_vortex(1.0, 0.2)
    assert P(2.0, phi=0.3, t=1.5).coords(model) == (1.5, 2.0, 0.3)
    bump = geo.SpacetimeModel(geo.ModelKind.BUMP_ERGOREGION_3D)
    assert P(2.0, phi=0.3, t=1.5, theta=1.0).coords(bump) == (1.5, 2.0, 1.0, 0.3)
    with pytest.raises(ChartDomainError):
        P(2.0).coords(bump)


# -- ergosphere location ----------------------------------------------------

def test_locate_ergosphere_vortex():
    model = geo.hydro_vortex(1.0, 0.2)
    lo, hi = model.chart_bounds
    cell = (hi - lo) / 4096
    assert abs(geo.locate_ergosphere(model) - 1.0) <= cell
    doubled = geo.hydro_vortex_doubled(1.0, 0.2)
    lo, hi = doubled.chart_bounds
    cell = (hi - lo) / 4096
    assert abs(geo.locate_ergosphere(doubled) - 1.0) <= cell


def test_locate_ergosphere_almost_schw():
    model = geo.SpacetimeModel(geo.ModelKind.ALMOST_SCHWARZSCHILD_3D, M=1.0)
    r_star = geo.locate_ergosphere(model)
    assert 5.0 < r_star < 6.0
    inner = geo.ergoregion_indicator(model, P(r_star - 0.1, theta=math.pi / 2))
    outer = geo.ergoregion_indicator(model, P(r_star + 0.1, theta=math.pi / 2))
    assert inner > 0.0 > outer


def test_locate_ergosphere_absent():
    with pytest.raises(ConstructionError):
        geo.locate_ergosphere(geo.minkowski())


# -- frame fields -----------------------------------------------------------

def test_frame_fields_vortex_unit_timelike():
    model = geo.hydro_vortex(1.0, 0.2)
    ff = geo.timelike_observer_N(model)
    assert ff.gNN_max == pytest.approx(-1.0, abs=1e-12)
    for r in (0.3, 0.7, 1.0, 5.0, 30.0):
        md = geo.metric_at(model, P(r))
        n_vec = ff.N_at(P(r))
        assert float(n_vec @ md.g @ n_vec) == pytest.approx(-1.0, abs=1e-12)
    assert np.array_equal(ff.T_at(P(2.0)), [1.0, 0.0, 0.0])
    assert np.array_equal(ff.Phi_at(P(2.0)), [0.0, 0.0, 1.0])
    assert ff.N_at(P(2.0))[2] == pytest.approx(0.25)
    assert ff.angular_rate(ff.asymptotic_radius) <= 1e-3 * (1 + 1e-12)


def test_frame_fields_doubled_mirror():
    model = geo.hydro_vortex_doubled(1.0, 0.2)
    ff = geo.timelike_observer_N(model)
    md = geo.metric_at(model, P(-0.6))
    n_vec = ff.N_at(P(-0.6))
    assert float(n_vec @ md.g @ n_vec) == pytest.approx(-1.0, abs=1e-12)
    assert ff.angular_rate(-0.6) == pytest.approx(1.0)


def test_frame_fields_3p1():
    bump = geo.SpacetimeModel(geo.ModelKind.BUMP_ERGOREGION_3D)
    ff = geo.timelike_observer_N(bump)
    assert ff.gNN_max < 0.0
    assert ff.asymptotic_radius == 6.0
    assert ff.angular_rate(6.5, math.pi / 2) == 0.0
    assert ff.angular_rate(4.5, math.pi / 2) == pytest.approx(0.125)
    mink = geo.timelike_observer_N(geo.minkowski())
    assert mink.gNN_max == pytest.approx(-1.0, abs=1e-12)
    assert float(mink.angular_rate(3.0)) == 0.0


# -- per-mode wave operator coefficients ------------------------------------

def test_mode_coefficients_minkowski_pinned():
    mc = geo.wave_operator_coefficients(geo.minkowski(), 0)
    r = np.array([2.0])
    assert mc.a_tt(r)[0] == -1.0
    assert mc.a_rr(r)[0] == 1.0
    assert mc.a_r(r)[0] == 0.5
    assert mc.a_t(r)[0] == 0.0
    assert mc.a_0(r)[0] == 0.0
    assert mc.characteristic_speed(r)[0] == 1.0
    mc3 = geo.wave_operator_coefficients(geo.minkowski(), 3)
    assert mc3.a_0(r)[0] == pytest.approx(-2.25)


def test_mode_coefficients_vortex():
    model = geo.hydro_vortex(1.0, 0.2)
    mc = geo.wave_operator_coefficients(model, 1)
    r = np.array([0.5, 1.0, 2.0])
    a_t = mc.a_t(r)
    assert a_t[1] == pytest.approx(-2.0j)
    a_0 = mc.a_0(r)
    assert a_0[0] == pytest.approx(12.0)  # sign flips inside the ergoregion
    assert a_0[1] == 0.0
    assert np.all(mc.characteristic_speed(r) == 1.0)
    mc_neg = geo.wave_operator_coefficients(model, -1)
    assert np.allclose(mc_neg.a_t(r), -a_t)
    assert np.allclose(mc_neg.a_0(r), a_0)
    assert np.any(np.abs(a_t) > 0.0)


def test_mode_coefficients_flat_limit():
    model = geo.hydro_vortex(1.0, 0.2)
    mc = geo.wave_operator_coefficients(model, 2)
    for r in (10.0, 20.0, 40.0):
        rr = np.array([r])
        assert abs(mc.a_t(rr)[0]) * r**2 == pytest.approx(4.0, rel=1e-12)
        gap = abs(mc.a_0(rr)[0] - (-(2**2) / r**2))
        assert gap * r**2 == pytest.approx(4.0 / r**2, rel=1e-10)


def test_mode_coefficients_doubled_sign():
    model = geo.hydro_vortex_doubled(1.0, 0.2)
    mc = geo.wave_operator_coefficients(model, 1)
    assert mc.a_r(np.array([1.0]))[0] == 1.0
    assert mc.a_r(np.array([-0.6]))[0] == -1.0


def test_mode_reduction_rejects_3p1():
    bump = geo.SpacetimeModel(geo.ModelKind.BUMP_ERGOREGION_3D)
    with pytest.raises(UnsupportedModelError):
        geo.wave_operator_coefficients(bump, 1)


def _fd_rate(model, inv, m, r_span):
    u = oracles.gaussian_wave()
    mc = geo.wave_operator_coefficients(model, m)
    t0 = 0.3

    def target(r):
        return mc.apply(
            r,
            u["u"](t0, r), u["ut"](t0, r), u["utt"](t0, r),
            u["ur"](t0, r), u["urr"](t0, r), u["utr"](t0, r),
        )

    res = [
        oracles.fd_box_mode_residual(inv, u, m, r_span, n, target, t0=t0)
        for n in (64, 128)
    ]
    return math.log2(res[0] / res[1]), res[1]


def test_wave_operator_matches_fd_vortex():
    model = geo.hydro_vortex(1.0, 0.2)
    rate, res_fine = _fd_rate(model, oracles.vortex_inverse_funcs(1.0), 2, (0.5, 2.9))
    assert 1.8 <= rate <= 2.2
    assert res_fine < 1.0


def test_wave_operator_matches_fd_minkowski():
    rate, res_fine = _fd_rate(geo.minkowski(), oracles.minkowski_inverse_funcs(), 1, (0.8, 3.0))
    assert 1.8 <= rate <= 2.2
    assert res_fine < 1.0


# -- radial covariant calculus ----------------------------------------------

def test_box_radial_vortex_closed_forms():
    rg = geo.RadialGeometry(geo.hydro_vortex(1.0, 0.2))
    r = np.array([1.3])
    assert rg.box_radial(r, 2.0 * r, 2.0)[0] == pytest.approx(4.0, rel=1e-13)
    assert rg.box_radial(r, 1.0 / r, -1.0 / r**2)[0] == pytest.approx(0.0, abs=1e-13)
    assert rg.hessian_contraction(r, 2.0 * r, 2.0)[0] == pytest.approx(8.0 * 1.3**2)
    assert rg.grad_norm_sq(r, 2.0 * r)[0] == pytest.approx(4.0 * 1.3**2)


def test_box_radial_almost_schw_pinned():
    model = geo.SpacetimeModel(geo.ModelKind.ALMOST_SCHWARZSCHILD_3D, M=1.0)
    rg = geo.RadialGeometry(model)
    r = np.array([4.0])
    assert rg.grr_inv(r)[0] == 0.5
    assert rg.box_radial(r, np.ones(1), np.zeros(1))[0] == pytest.approx(0.3125, rel=1e-12)


def test_box_radial_matches_fd_divergence():
    model = geo.SpacetimeModel(geo.ModelKind.ALMOST_SCHWARZSCHILD_3D, M=1.0)
    rg = geo.RadialGeometry(model)

    def flux(r):
        return rg.volume(r) * rg.grr_inv(r) * np.cos(r)

    r = np.array([5.0])
    fd = oracles.fd_derivative(flux, r)[0] / rg.volume(r)[0]
    assert rg.box_radial(r, np.cos(r), -np.sin(r))[0] == pytest.approx(fd, rel=1e-8)


def test_volume_factors():
    assert geo.RadialGeometry(geo.hydro_vortex(1.0, 0.2)).volume(np.array([2.0]))[0] == 2.0
    assert geo.RadialGeometry(geo.minkowski()).volume(np.array([2.0]))[0] == 2.0
    bump = geo.SpacetimeModel(geo.ModelKind.BUMP_ERGOREGION_3D)
    assert geo.RadialGeometry(bump).volume(np.array([2.0]))[0] == 4.0
    schw = geo.SpacetimeModel(geo.ModelKind.ALMOST_SCHWARZSCHILD_3D, M=1.0)
    assert geo.RadialGeometry(schw).volume(np.array([4.0]))[0] == pytest.approx(16.0 / math.sqrt(0.5))


# -- cutoffs ----------------------------------------------------------------

def test_cutoff_plateaus_pinned():
    lib = geo.DEFAULT_CUTOFFS
    assert lib.eval("theta3", 0.5) == 1.0
    assert lib.eval("theta3", -1.0) == 1.0
    assert lib.eval("theta3", 2.0) == 0.0
    assert lib.eval("theta3", 3.0) == 0.0
    assert 0.0 < lib.eval("theta3", 1.5) < 1.0
    assert lib.eval("theta3", 1.37) == lib.eval("theta3", -1.37)
    for order in range(1, 5):
        assert lib.eval("theta3", 0.5, order) == 0.0
        assert lib.eval("theta3", 2.5, order) == 0.0
    assert lib.eval("theta4", 0.5) == 0.0
    assert lib.eval("theta4", 0.74) == 0.0
    assert lib.eval("theta4", 1.0) == 1.0
    assert lib.eval("theta4", 2.0) == 1.0
    assert geo.smooth_cutoff(lib, "theta4", 0.5, order=1) == 0.0
    assert lib.eval("theta4", 0.875) == pytest.approx(0.5, abs=1e-12)
    assert lib.eval("theta1", 0.0) == 0.0
    assert lib.eval("theta1", 1.0) == 1.0
    assert lib.eval("theta1", 0.5) == pytest.approx(0.5, abs=1e-12)
    assert lib.eval("theta2", 0.25) == lib.eval("theta1", 0.25)


def test_bump_profiles_pinned():
    lib = geo.DEFAULT_CUTOFFS
    assert lib.eval("theta_rbar", 2.9) == 0.0
    assert lib.eval("theta_rbar", 4.0) == 1.0
    assert lib.eval("theta_rbar", 4.7) == 1.0
    assert lib.eval("theta_rbar", 5.0) == 1.0
    assert lib.eval("theta_rbar", 6.01) == 0.0
    assert 0.0 < lib.eval("theta_rbar", 3.5) < 1.0
    assert lib.eval("theta_rbar", 4.5, order=2) == 0.0
    assert lib.eval("theta_theta", math.pi / 2) == 1.0
    assert lib.eval("theta_theta", 0.3) == 0.0
    assert lib.eval("theta_theta", 3.0) == 0.0


def test_smoothstep_matches_beta_oracle():
    xs = np.linspace(0.0, 1.0, 257)
    lib = geo.DEFAULT_CUTOFFS
    vals = lib.eval("theta1", xs)
    assert np.max(np.abs(vals - oracles.beta_smoothstep(xs))) < 5e-14


def test_cutoff_derivatives_match_fd():
    lib = geo.DEFAULT_CUTOFFS
    samples = {
        "theta1": np.linspace(0.05, 0.95, 13),
        "theta2": np.linspace(0.05, 0.95, 13),
        "theta3": np.linspace(1.05, 1.95, 13),
        "theta4": np.linspace(0.76, 0.99, 13),
        "theta_rbar": np.linspace(3.05, 3.95, 13),
        "theta_theta": np.linspace(math.pi / 6 + 0.02, math.pi / 4 - 0.02, 13),
    }
    for name, xs in samples.items():
        for order in range(1, 5):
            want = oracles.fd_derivative(lambda x: lib.eval(name, x, order - 1), xs)
            got = lib.eval(name, xs, order)
            scale = max(1.0, float(np.max(np.abs(got))))
            assert np.max(np.abs(got - want)) <= 1e-6 * scale, (name, order)


@settings(max_examples=100, deadline=None)
@given(x=st.floats(-5.0, 5.0))
def test_theta3_range_and_parity(x):
    lib = geo.DEFAULT_CUTOFFS
    val = float(lib.eval("theta3", x))
    assert 0.0 <= val <= 1.0
    assert val == pytest.approx(float(lib.eval("theta3", -x)), abs=1e-15)


@settings(max_examples=100, deadline=None)
@given(x=st.floats(-1.0, 2.0), y=st.floats(-1.0, 2.0))
def test_theta1_monotone(x, y):
    lib = geo.DEFAULT_CUTOFFS
    if x > y:
        x, y = y, x
    assert float(lib.eval("theta1", x)) <= float(lib.eval("theta1", y)) + 1e-15


def test_cutoff_bad_inputs():
    lib = geo.DEFAULT_CUTOFFS
    with pytest.raises(ValueError):
        lib.eval("theta1", 0.5, order=5)
    with pytest.raises(ValueError):
        lib.eval("theta1", 0.5, order=-1)
    with pytest.raises(KeyError):
        lib.eval("theta_nope", 0.5)
    assert set(lib.names()) == {
        "theta1", "theta2", "theta3", "theta4", "theta_rbar", "theta_theta"
    }


# -- zero-set scan ----------------------------------------------------------

def test_zero_set_scan_bump3d():
    model = geo.SpacetimeModel(geo.ModelKind.BUMP_ERGOREGION_3D)
    report = geo.ergo_zero_set_scan(model)
    assert report["positive_components"] == 1
    assert report["saddle_cells"] == 0
    assert report["hole_cells"] == 0
    assert report["ergoregion_nonempty"]
    # sandwich: plateau box inside, support box outside
    assert geo.ergoregion_indicator(model, P(4.0, theta=math.pi / 4)) > 0.0
    assert geo.ergoregion_indicator(model, P(5.0, theta=3 * math.pi / 4)) > 0.0
    assert geo.ergoregion_indicator(model, P(6.5, theta=math.pi / 2)) < 0.0
    assert geo.ergoregion_indicator(model, P(2.8, theta=math.pi / 2)) < 0.0
    assert geo.ergoregion_indicator(model, P(4.5, theta=0.4)) < 0.0


def test_zero_set_scan_unit_amplitude_fails():
    model = geo.SpacetimeModel(geo.ModelKind.BUMP_ERGOREGION_3D, bump_amplitude=1.0)
    with pytest.raises(ConstructionError):
        geo.ergo_zero_set_scan(model)


def test_zero_set_scan_almost_schw():
    model = geo.SpacetimeModel(geo.ModelKind.ALMOST_SCHWARZSCHILD_3D, M=1.0)
    report = geo.ergo_zero_set_scan(model)
    assert report["positive_components"] == 1
    assert report["saddle_cells"] == 0


def test_zero_set_scan_rejects_2p1():
    with pytest.raises(UnsupportedModelError):
        geo.ergo_zero_set_scan(geo.hydro_vortex(1.0, 0.2))
