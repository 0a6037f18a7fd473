"""Surface geometry tests: forms, curvatures, classification, special
surfaces, direction fields, geodesics and intrinsic curvature."""

import math

import numpy as np
import pytest

from tensorgeom import surface as sf
from tensorgeom.expr import parse
from tensorgeom.tensor2 import norm, normalize

rng = np.random.default_rng(31)


@pytest.fixture(scope="module")
def sphere():
    # latitude u, longitude v on the unit sphere
    return sf.surface_from_expr(["cos(u)*cos(v)", "cos(u)*sin(v)", "sin(u)"],
                                ((-1.45, 1.45), (-7.0, 7.0)))


@pytest.fixture(scope="module")
def catenoid():
    return sf.revolution_surface("cosh(u)", "u", (-1.0, 1.0))


@pytest.fixture(scope="module")
def helicoid():
    return sf.ruled_surface(["0*u", "0*u", "u"], ["cos(u)", "sin(u)", "0*u"],
                            (0.0, 6.0), (-2.0, 2.0))


@pytest.fixture(scope="module")
def plane_patch():
    return sf.surface_from_expr(["u", "v", "0*u"], ((0.0, 1.0), (0.0, 1.0)))


@pytest.fixture(scope="module")
def torus():
    # tube radius 1 around a circle of radius 3; profile is arc length in u
    return sf.revolution_surface("3+cos(u)", "sin(u)", (-3.3, 3.3))


# ---------------------------------------------------------------------------
# pointwise data
# ---------------------------------------------------------------------------

def test_sphere_is_umbilical(sphere):
    for u, v in [(0.0, 0.0), (0.5, 1.0), (-0.9, 2.5)]:
        jd = sf.jet_at(sphere, u, v)
        assert jd.gaussian == pytest.approx(1.0, rel=1e-10)
        assert abs(jd.mean) == pytest.approx(1.0, rel=1e-10)
        assert jd.umbilical
        assert abs(norm(jd.normal) - 1.0) < 1e-13
        assert abs(np.dot(jd.normal, jd.f_u)) < 1e-13
        assert abs(np.dot(jd.normal, jd.f_v)) < 1e-13


def test_surface_jet_invariants(sphere):
    jd = sf.jet_at(sphere, 0.4, -0.8)
    g, B, X = jd.first_form, jd.second_form, jd.weingarten
    assert np.allclose(g, g.T)
    assert np.allclose(B, B.T)
    assert np.allclose(g @ X, B, atol=1e-13)
    assert jd.gaussian == pytest.approx(np.linalg.det(X), rel=1e-10)
    assert jd.mean == pytest.approx(0.5 * np.trace(X), rel=1e-10)
    assert jd.k1 >= jd.k2


def test_pseudo_sphere_curvature():
    ps = sf.revolution_surface("sin(u)", "cos(u)+ln(tan(u/2))", (0.3, 1.4))
    for u in np.linspace(0.35, 1.35, 6):
        for v in (-2.0, 0.5):
            assert sf.jet_at(ps, u, v).gaussian == pytest.approx(-1.0, abs=1e-8)


def test_plane_patch_flat(plane_patch):
    jd = sf.jet_at(plane_patch, 0.3, 0.6)
    assert np.allclose(jd.second_form, 0.0, atol=1e-14)
    assert jd.gaussian == 0.0
    assert jd.mean == 0.0
    assert sf.classify_point(jd) == "planar"


def test_normal_curvature_quotient(sphere):
    jd = sf.jet_at(sphere, 0.2, 0.9)
    w = rng.normal(size=2)
    expected = float(w @ jd.second_form @ w) / float(w @ jd.first_form @ w)
    assert jd.normal_curvature(w) == pytest.approx(expected, rel=1e-13)


def test_principal_direction_extremality():
    # normal curvature over a fan of directions peaks at the principal ones
    ell = sf.surface_from_expr(["u", "v", "0.5*u^2+0.1*v^2+0.05*u*v"],
                               ((-1.0, 1.0), (-1.0, 1.0)))
    jd = sf.jet_at(ell, 0.2, -0.3)
    angles = np.linspace(0.0, math.pi, 360, endpoint=False)
    gis = np.linalg.inv(sf._sqrt_2x2_spd(jd.first_form))
    kappas = []
    for a in angles:
        w = gis @ np.array([math.cos(a), math.sin(a)])
        kappas.append(jd.normal_curvature(w))
    assert max(kappas) == pytest.approx(jd.k1, abs=1e-4 + 1e-3 * abs(jd.k1))
    assert min(kappas) == pytest.approx(jd.k2, abs=1e-4 + 1e-3 * abs(jd.k2))
    assert jd.normal_curvature(jd.d1) == pytest.approx(jd.k1, rel=1e-10)
    assert jd.normal_curvature(jd.d2) == pytest.approx(jd.k2, rel=1e-10)


def test_irregular_point_detected():
    # cone through the origin: at v = 0 the u-tangent degenerates
    cone = sf.ruled_surface(["0*u", "0*u", "0*u"],
                            ["cos(u)", "sin(u)", "1+0*u"], (0.0, 6.0), (-0.5, 0.5))
    with pytest.raises(sf.IrregularPoint):
        sf.jet_at(cone, 1.0, 0.0)


# ---------------------------------------------------------------------------
# revolution surfaces
# ---------------------------------------------------------------------------

def test_revolution_closed_form_matches_generic_arclength():
    # unit-sphere profile (cos u, sin u) is arc-length parameterized
    ball = sf.revolution_surface("cos(u)", "sin(u)", (-1.4, 1.4))
    for u in (-1.0, 0.2, 1.2):
        jd = sf.jet_at(ball, u, 0.7)
        cf = sf.revolution_closed_form(ball, u, 0.7)
        assert cf["arc_length_param"]
        assert np.allclose(cf["first_form"], jd.first_form, atol=1e-9)
        assert np.allclose(np.abs(cf["second_form"]), np.abs(jd.second_form),
                           atol=1e-9)
        assert cf["gaussian"] == pytest.approx(jd.gaussian, rel=1e-9)


def test_revolution_closed_form_reparameterizes(catenoid):
    # cosh profile is not arc length; the intrinsic curvature still matches
    for u in (-0.7, 0.1, 0.8):
        cf = sf.revolution_closed_form(catenoid, u, 1.0)
        assert not cf["arc_length_param"]
        assert cf["gaussian"] == pytest.approx(sf.jet_at(catenoid, u, 1.0).gaussian,
                                               rel=1e-9)


def test_catenoid_minimal_and_hyperbolic(catenoid):
    for u in np.linspace(-0.9, 0.9, 7):
        for v in np.linspace(-3.0, 3.0, 7):
            jd = sf.jet_at(catenoid, u, v)
            assert abs(jd.mean) < 1e-10
            assert sf.classify_point(jd) == "hyperbolic"


def test_profile_inflexion_gives_parabolic_point():
    # profile (2 + u^3, u): signed curvature vanishes at u = 0
    s = sf.revolution_surface("2+u^3", "u", (-0.5, 0.5))
    jd = sf.jet_at(s, 0.0, 0.3)
    assert sf.classify_point(jd) == "parabolic"
    assert sf.classify_point(sf.jet_at(s, 0.3, 0.3)) in ("elliptic", "hyperbolic")


def test_nonpositive_radius_rejected():
    with pytest.raises(sf.NonPositiveRadius):
        sf.revolution_surface("u", "u", (-1.0, 1.0))


# ---------------------------------------------------------------------------
# ruled surfaces and developability
# ---------------------------------------------------------------------------

def test_cylinder_developable():
    cyl = sf.ruled_surface(["cos(u)", "sin(u)", "0*u"], ["0*u", "0*u", "1+0*u"],
                           (0.0, 6.0), (0.0, 2.0))
    for u in (0.5, 2.0, 4.0):
        ok, witness = sf.developability(cyl, u)
        assert ok and abs(witness) < 1e-12
        jd = sf.jet_at(cyl, u, 1.0)
        assert abs(jd.gaussian) < 1e-12
        assert sf.classify_point(jd) == "parabolic"


def test_helicoid_not_developable(helicoid):
    ok, witness = sf.developability(helicoid, 1.0)
    assert not ok and abs(witness) > 0.1


def test_cone_developable_away_from_apex():
    cone = sf.ruled_surface(["0*u", "0*u", "0*u"], ["cos(u)", "sin(u)", "1+0*u"],
                            (0.0, 6.0), (0.5, 2.0))
    for u in (0.3, 1.5):
        ok, witness = sf.developability(cone, u)
        assert ok
        assert abs(sf.jet_at(cone, u, 1.0).gaussian) < 1e-12


def test_degenerate_director():
    s = sf.ruled_surface(["u", "0*u", "0*u"], ["u", "0*u", "0*u"], (-1.0, 1.0))
    with pytest.raises(sf.DegenerateDirector):
        sf.developability(s, 0.0)


def test_developable_normal_constant_along_generators():
    cyl = sf.ruled_surface(["cos(u)", "sin(u)", "0*u"], ["0*u", "0*u", "1+0*u"],
                           (0.0, 6.0), (0.0, 2.0))
    n0 = sf.jet_at(cyl, 1.0, 0.2).normal
    n1 = sf.jet_at(cyl, 1.0, 1.8).normal
    assert norm(n0 - n1) < 1e-12


# ---------------------------------------------------------------------------
# direction fields
# ---------------------------------------------------------------------------

def test_coordinate_lines_are_curvature_lines_when_diagonal(torus):
    jd = sf.jet_at(torus, 0.7, 1.1)
    assert abs(jd.weingarten[0, 1]) < 1e-12
    fields = sf.direction_fields(jd)
    d1, d2 = fields.curvature_directions
    # each principal direction is a coordinate direction
    assert min(abs(d1[0]), abs(d1[1])) < 1e-10
    assert min(abs(d2[0]), abs(d2[1])) < 1e-10


def test_asymptotic_directions_by_class(sphere, catenoid):
    jd = sf.jet_at(sphere, 0.3, 0.3)
    fields = sf.direction_fields(jd)
    assert fields.dupin == "ellipse"
    assert len(fields.asymptotic_directions) == 0
    jd = sf.jet_at(catenoid, 0.4, 0.5)
    fields = sf.direction_fields(jd)
    assert fields.dupin == "conjugate_hyperbolae"
    assert len(fields.asymptotic_directions) == 2
    for d in fields.asymptotic_directions:
        assert abs(float(d @ jd.second_form @ d)) < 1e-10
    cyl = sf.ruled_surface(["cos(u)", "sin(u)", "0*u"], ["0*u", "0*u", "1+0*u"],
                           (0.0, 6.0), (0.0, 2.0))
    fields = sf.direction_fields(sf.jet_at(cyl, 1.0, 1.0))
    assert fields.dupin == "parallel_lines"
    assert len(fields.asymptotic_directions) == 1


def test_planar_point_rejected(plane_patch):
    with pytest.raises(sf.PlanarPoint):
        sf.direction_fields(sf.jet_at(plane_patch, 0.5, 0.5))


# ---------------------------------------------------------------------------
# geodesics
# ---------------------------------------------------------------------------

def test_sphere_great_circle(sphere):
    traj = sf.geodesic_integrate(sphere, sf.GeodesicState(0.0, 0.0, 0.0, 1.0),
                                 2.0 * math.pi, 5e-3)
    # the equator is a great circle: u stays 0, speed stays 1
    assert np.max(np.abs(traj.u)) < 1e-9
    pts = np.array([sphere.point(u, v) for u, v in zip(traj.u[::40], traj.v[::40])])
    assert np.max(np.abs(np.linalg.norm(pts, axis=1) - 1.0)) < 1e-12


def test_tilted_great_circle(sphere):
    # start on the equator heading north-east: stays on the great circle
    # through the start point with the same tangent
    d = normalize([1.0, 1.0])
    traj = sf.geodesic_integrate(sphere, sf.GeodesicState(0.0, 0.0, d[0], d[1]),
                                 2.0, 2e-3)
    p0 = sphere.point(0.0, 0.0)
    jd = sf.jet_at(sphere, 0.0, 0.0)
    t0 = normalize(jd.ambient([traj.du[0], traj.dv[0]]))
    axis = np.cross(p0, t0)
    for i in range(0, len(traj.s), 100):
        p = sphere.point(traj.u[i], traj.v[i])
        assert abs(np.dot(p, axis)) < 1e-6  # stays in the great-circle plane


def test_geodesic_speed_drift(sphere):
    traj = sf.geodesic_integrate(sphere, sf.GeodesicState(0.3, 0.1, 0.2, 0.9),
                                 2.0, 1e-3)
    for i in (0, len(traj.s) // 2, len(traj.s) - 1):
        g, _ = sf._metric_and_gamma(sphere, traj.u[i], traj.v[i])
        w = np.array([traj.du[i], traj.dv[i]])
        assert abs(math.sqrt(w @ g @ w) - 1.0) < 1e-6


def test_geodesic_speed_drift_long_run():
    # contract: drift below 1e-6 over an arc length of 20 at step 1e-3
    torus = sf.revolution_surface("3+cos(u)", "sin(u)", (-3.3, 3.3),
                                  v_domain=(-40.0, 40.0))
    traj = sf.geodesic_integrate(torus, sf.GeodesicState(0.5, 0.0, 0.3, 0.3),
                                 20.0, 1e-3)
    worst = 0.0
    for i in range(0, len(traj.s), 997):
        g, _ = sf._metric_and_gamma(torus, traj.u[i], traj.v[i])
        w = np.array([traj.du[i], traj.dv[i]])
        worst = max(worst, abs(math.sqrt(w @ g @ w) - 1.0))
    assert worst < 1e-6


def test_geodesic_adaptive_step_halving(sphere):
    # a coarse step with the drift monitor on still meets the drift target
    traj = sf.geodesic_integrate(sphere, sf.GeodesicState(0.1, 0.0, 0.4, 0.7),
                                 2.0, 0.1, adaptive=True, drift_tol=1e-10)
    g, _ = sf._metric_and_gamma(sphere, traj.u[-1], traj.v[-1])
    w = np.array([traj.du[-1], traj.dv[-1]])
    assert abs(math.sqrt(w @ g @ w) - 1.0) < 1e-9


def test_geodesic_curvature_along_output(sphere):
    traj = sf.geodesic_integrate(sphere, sf.GeodesicState(0.2, 0.4, 0.7, 0.4),
                                 1.0, 1e-3)
    pts = np.array([sphere.point(u, v) for u, v in zip(traj.u, traj.v)])
    h = traj.s[1] - traj.s[0]
    for i in range(50, len(pts) - 50, 200):
        tau = (pts[i + 1] - pts[i - 1]) / (2 * h)
        dtau = (pts[i + 1] - 2 * pts[i] + pts[i - 1]) / (h * h)
        n = sf.jet_at(sphere, traj.u[i], traj.v[i]).normal
        kg = float(np.dot(dtau, np.cross(n, tau)))
        assert abs(kg) < 1e-5
        # ambient acceleration is parallel to the normal
        assert norm(np.cross(dtau, n)) < 1e-4


def test_meridians_are_geodesics(torus):
    # meridian (u = t, v = v0): residual of the geodesic system is
    # Gamma^h_11, which vanishes identically on a revolution surface
    for u in (-1.0, 0.4, 2.0):
        _, gamma = sf._metric_and_gamma(torus, u, 0.7)
        assert abs(gamma[0, 0, 0]) < 1e-10
        assert abs(gamma[1, 0, 0]) < 1e-10


def test_parallel_geodesic_criterion(torus):
    # parallels are geodesic exactly where the profile radius is stationary:
    # u = 0 (outer equator) and u = pi (inner); not elsewhere
    for u0, expect in ((0.0, True), (math.pi, True), (0.7, False)):
        _, gamma = sf._metric_and_gamma(torus, u0, 0.3)
        residual = abs(gamma[0, 1, 1])  # parallel: u' = 0, v' = 1
        if expect:
            assert residual < 1e-9
        else:
            assert residual > 1e-3


def test_left_domain(sphere):
    with pytest.raises(sf.LeftDomain) as err:
        sf.geodesic_integrate(sphere, sf.GeodesicState(1.0, 0.0, 1.0, 0.0),
                              5.0, 1e-2)
    assert err.value.state is not None


def test_geodesic_locally_minimizes_length(sphere):
    # great-circle arc from (0,0) to (0,1) against bumped competitors
    base = parse(["0*t", "t"], ["t"])
    base_len = sf.curve_length_on_surface(sphere, base, 0.0, 1.0)
    for eps in (0.05, 0.1):
        bump = parse([f"{eps}*sin(pi*t)", "t"], ["t"])
        assert sf.curve_length_on_surface(sphere, bump, 0.0, 1.0) > base_len


# ---------------------------------------------------------------------------
# intrinsic curvature and frame residuals
# ---------------------------------------------------------------------------

def test_egregium_matches_shape_operator(sphere, catenoid, torus):
    for surf in (sphere, catenoid, torus):
        (u0, u1), (v0, v1) = surf.domain
        for u in np.linspace(u0 + 0.1, u1 - 0.1, 5):
            for v in np.linspace(v0 + 0.1, v1 - 0.1, 5):
                ki = sf.egregium_curvature(surf, u, v)
                ks = sf.jet_at(surf, u, v).gaussian
                assert ki == pytest.approx(ks, rel=1e-6, abs=1e-6)


def test_egregium_plane_is_zero(plane_patch):
    assert sf.egregium_curvature(plane_patch, 0.4, 0.4) == pytest.approx(0.0,
                                                                         abs=1e-14)


def test_gauss_weingarten_residuals(sphere, plane_patch):
    g_res, w_res = sf.gauss_weingarten_residual(plane_patch, 0.5, 0.5)
    assert g_res < 1e-14 and w_res < 1e-14
    for u, v in [(0.2, 0.3), (-0.8, 2.0)]:
        g_res, w_res = sf.gauss_weingarten_residual(sphere, u, v)
        assert g_res < 1e-8 and w_res < 1e-8
    ps = sf.revolution_surface("sin(u)", "cos(u)+ln(tan(u/2))", (0.3, 1.4))
    g_res, w_res = sf.gauss_weingarten_residual(ps, 0.9, 0.5)
    assert g_res < 1e-8 and w_res < 1e-8


# ---------------------------------------------------------------------------
# areas and on-surface lengths
# ---------------------------------------------------------------------------

def test_unit_sphere_band_area(sphere):
    # latitudes 0..pi/2, all longitudes: integral of cos(u) = 2 pi
    area = sf.surface_area(sphere, u_range=(0.0, math.pi / 2 - 1e-12),
                           v_range=(-math.pi, math.pi))
    assert area == pytest.approx(2.0 * math.pi, rel=1e-9)


def test_flat_patch_area(plane_patch):
    assert sf.surface_area(plane_patch) == pytest.approx(1.0, rel=1e-13)


def test_parallel_length_at_latitude(sphere):
    # parallel at latitude pi/4 spanning dv: length = cos(pi/4) dv
    dv = 1.3
    path = parse([f"{math.pi / 4}+0*t", "t"], ["t"])
    length = sf.curve_length_on_surface(sphere, path, 0.0, dv)
    assert length == pytest.approx(math.sqrt(2.0) / 2.0 * dv, rel=1e-10)


# ---------------------------------------------------------------------------
# reparameterization invariance
# ---------------------------------------------------------------------------

def test_reparameterization_invariance():
    # use a non-umbilical surface so principal directions are well defined
    base = sf.surface_from_expr(["u", "v", "0.5*u^2+0.1*v^2+0.05*u*v"],
                                ((-1.5, 1.5), (-2.5, 2.5)))
    # orientation-preserving diffeomorphism of the parameter rectangle
    diffeo = parse(["u+0.1*sin(v)", "v+0.1*u^2"], ["u", "v"])
    rep = sf.reparameterized(base, diffeo, ((-0.8, 0.8), (-2.0, 2.0)))
    for U, V in [(0.2, 0.5), (-0.4, 1.0)]:
        inner = diffeo(U, V)
        jd_base = sf.jet_at(base, inner[0], inner[1])
        jd_rep = sf.jet_at(rep, U, V)
        assert np.allclose(jd_rep.point, jd_base.point, atol=1e-12)
        assert np.allclose(jd_rep.normal, jd_base.normal, atol=1e-8)
        assert jd_rep.gaussian == pytest.approx(jd_base.gaussian, rel=1e-8)
        assert sf.classify_point(jd_rep) == sf.classify_point(jd_base)
        # principal directions agree as ambient vectors (up to sign)
        for d_rep, d_base in ((jd_rep.d1, jd_base.d1), (jd_rep.d2, jd_base.d2)):
            a = jd_rep.ambient(d_rep)
            b = jd_base.ambient(d_base)
            assert min(norm(a - b), norm(a + b)) < 1e-6


def test_orientation_reversal_flips_normal(sphere):
    swap = parse(["v", "u"], ["u", "v"])
    rep = sf.reparameterized(sphere, swap, ((-2.0, 2.0), (-0.8, 0.8)))
    jd_rep = sf.jet_at(rep, 0.5, 0.2)
    jd_base = sf.jet_at(sphere, 0.2, 0.5)
    assert np.allclose(jd_rep.normal, -jd_base.normal, atol=1e-10)


# ---------------------------------------------------------------------------
# minimal surfaces
# ---------------------------------------------------------------------------

def test_helicoid_minimal(helicoid):
    for u in np.linspace(0.2, 5.8, 6):
        for v in np.linspace(-1.8, 1.8, 6):
            jd = sf.jet_at(helicoid, u, v)
            assert abs(jd.mean) < 1e-10
            assert sf.classify_point(jd) == "hyperbolic"
