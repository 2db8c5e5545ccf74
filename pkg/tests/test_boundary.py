import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy.integrate import quad

from bestmoebius import catalog
from bestmoebius.blaschke import BlaschkeProduct
from bestmoebius.boundary import (CircleArc, arc_integrals, extremal_points, pole_locus,
                                  prevertex_arc, profile_shape_check, sturm_residual,
                                  triangle_balance)
from bestmoebius.errors import ArcCrossesPrevertex, BadParameter, NotATriangle
from bestmoebius.maps import make_builtin
from bestmoebius.polygon import exterior_from_blaschke, interior_from_blaschke

from test_polygon import SQUARE_RADIUS


def test_arc_validation():
    with pytest.raises(BadParameter):
        CircleArc(1.0, 0.5)
    f = catalog.build("square")
    with pytest.raises(ArcCrossesPrevertex):
        pole_locus(f, CircleArc(0.1, 2.0))


def test_square_locus_reference():
    f = catalog.build("square")
    loc = pole_locus(f, prevertex_arc(f, 0))
    assert loc.direction == "decreasing"
    assert abs(loc.variation + 1.5 * np.pi) < 1e-8
    np.testing.assert_allclose(loc.poles, np.exp(-3j * loc.t), atol=1e-13)


@pytest.mark.parametrize("exterior", [False, True])
def test_locus_speed_matches_blaschke_derivative(exterior):
    zeros = [0.0, 0.3 + 0.2j, -0.4 + 0.1j] if exterior else [0.2, -0.3j, 0.5 + 0.1j]
    B = BlaschkeProduct(zeros)
    f = exterior_from_blaschke(B) if exterior else interior_from_blaschke(B)
    for k in range(len(f.prevertex_angles)):
        arc = prevertex_arc(f, k)
        loc = pole_locus(f, arc, n_samples=4000)
        h = loc.t[1] - loc.t[0]
        rate = (loc.unwrapped_arg[2:] - loc.unwrapped_arg[:-2]) / (2 * h)
        speed = B.boundary_log_derivative(loc.t[1:-1])
        want = 2 + speed if exterior else -speed
        mid = slice(200, -200)
        np.testing.assert_allclose(rate[mid], want[mid], rtol=1e-5)
        assert np.all(rate > 2) if exterior else np.all(rate < 0)


def test_square_arc_integrals():
    f = catalog.build("square")
    i1, i2 = arc_integrals(f, 0)
    assert abs(i1 - np.sqrt(2) * SQUARE_RADIUS) < 1e-10
    ref = quad(lambda t: np.sqrt(2 * np.sin(2 * t)), 0, np.pi / 2, epsabs=1e-13)[0]
    assert abs(i2 - ref) < 1e-10


def test_equilateral_arcs_equal():
    f = catalog.build("equilateral")
    vals = np.array([arc_integrals(f, k) for k in range(3)])
    np.testing.assert_allclose(vals, vals[0][None, :].repeat(3, 0), rtol=1e-10)


def test_balance_requires_triangle():
    with pytest.raises(NotATriangle):
        triangle_balance(catalog.build("square"))


def test_balance_verdicts():
    assert triangle_balance(catalog.build("triangle")).verdict == "Balanced"
    assert triangle_balance(catalog.build("equilateral")).verdict == "Balanced"
    r = triangle_balance(catalog.build("shift:0.3:triangle"))
    assert r.verdict == "Unbalanced" and r.bound["holds"]


def test_profiles_and_sturm_on_square():
    f = catalog.build("square")
    arc = prevertex_arc(f, 1)
    rep = profile_shape_check(f, arc)
    assert rep.ok and rep.shape == "concave" and rep.speed_convex
    assert sturm_residual(f, arc) < 1e-4
    # closed form: |f'(e^{it})| = (2 |sin 2t|)^(-1/2)
    np.testing.assert_allclose(f.boundary_speed(rep.t), np.abs(2 * np.sin(2 * rep.t)) ** -0.5,
                               rtol=1e-12)


def test_extremal_point_sits_at_level_root():
    pts = extremal_points(catalog.build("ext-square"))
    assert all(p.certified for p in pts)
    np.testing.assert_allclose(sorted(p.angle for p in pts),
                               np.pi / 4 * np.array([1, 3, 5, 7]), atol=1e-12)


def test_boundary_speed_not_available_for_koebe():
    with pytest.raises(Exception):
        make_builtin("koebe").boundary_speed(0.5)


@given(st.floats(0.05, 0.95))
def test_strip_profile_is_concave_on_subarcs(frac):
    f = catalog.build("strip")
    arc = CircleArc(0.0, np.pi)
    sub = CircleArc(0.0, np.pi * frac)
    assert profile_shape_check(f, arc, n=400).ok
    assert profile_shape_check(f, sub, n=400).ok
