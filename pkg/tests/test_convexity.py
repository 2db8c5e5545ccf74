import numpy as np
import pytest
from hypothesis import given, strategies as st

from bestmoebius import catalog
from bestmoebius.blaschke import BlaschkeProduct
from bestmoebius.convexity import (concavity_report, convexity_report, curvature_density,
                                   omega_of, phi_of, total_curvature)
from bestmoebius.errors import BadParameter, DenominatorZero
from bestmoebius.maps import dual_map, make_builtin
from bestmoebius.polygon import exterior_from_blaschke

SMALL = (10, 32, 0.99)


def test_verdicts():
    assert convexity_report(make_builtin("strip"), SMALL).verdict == "Convex"
    assert convexity_report(make_builtin("koebe"), SMALL).verdict == "Neither"
    assert convexity_report(make_builtin("sector", alpha=1.0), SMALL).verdict == "Halfplane"
    assert concavity_report(catalog.build("ext-square"), SMALL).verdict == "Concave"


def test_grid_validation():
    with pytest.raises(BadParameter):
        convexity_report(make_builtin("strip"), (0, 10, 0.9))
    with pytest.raises(BadParameter):
        convexity_report(make_builtin("strip"), (5, 10, 1.0))


def test_phi_for_square_is_z_cubed():
    z = np.array([0.3 + 0.2j, -0.5j, 0.8])
    np.testing.assert_allclose(phi_of(catalog.build("square"), z), z**3, rtol=1e-13)


def test_omega_of_dual_square():
    g = dual_map(catalog.build("square"))
    z = np.array([0.3 + 0.2j, -0.5j])
    np.testing.assert_allclose(omega_of(g, z), z**3, rtol=1e-12)
    with pytest.raises(BadParameter):
        omega_of(g, 0.0)


def test_phi_denominator_zero():
    # koebe: 2 + z f''/f' vanishes at z = -1/2
    with pytest.raises(DenominatorZero):
        phi_of(make_builtin("koebe"), -0.5)


def test_total_curvature_of_disk_map():
    f = make_builtin("moebius", coeffs=[1, 0, 0, 1])
    assert abs(total_curvature(f, 0.5) - 2 * np.pi) < 1e-12
    assert abs(total_curvature(f, 0.5, (0, 1)) - 1) < 1e-12
    with pytest.raises(BadParameter):
        total_curvature(f, 1.0)


def test_curvature_density_of_identity():
    f = make_builtin("polynomial", coeffs=[0, 1])
    np.testing.assert_allclose(curvature_density(f, np.array([0.2, 0.5j])), 1)


zero_st = st.builds(lambda r, t: 0.9 * r * np.exp(1j * t), st.floats(0, 1), st.floats(0, 6.3))


@given(st.lists(zero_st, min_size=0, max_size=2))
def test_schwarz_bound_for_exterior_maps(extra):
    g = exterior_from_blaschke(BlaschkeProduct([0.0] + extra))
    z = 0.9 * np.exp(1j * np.linspace(0, 2 * np.pi, 40, endpoint=False))
    z = np.concatenate([z, z / 3])
    assert np.all(np.abs(omega_of(g, z)) <= np.abs(z) + 1e-12)
    rep = concavity_report(g, SMALL)
    assert rep.verdict == "Concave"


@given(st.floats(0.01, 0.99), st.floats(0, 2 * np.pi))
def test_trichotomy_property_koebe(r, t):
    f = make_builtin("koebe")
    z = r * np.exp(1j * t)
    P, _ = f.pre_schwarzian(z)
    h = (1 + z * P).real
    p = z + 2 / P
    gap = abs(p) - abs(z)
    if abs(h) > 1e-9:
        assert np.sign(gap) == np.sign(h)


@given(st.floats(0.05, 0.99), st.floats(0, 2 * np.pi))
def test_convex_maps_have_outer_poles(r, t):
    z = r * np.exp(1j * t)
    for name in ("strip", "lens:0.5", "square"):
        f = catalog.build(name)
        P, _ = f.pre_schwarzian(z)
        assert abs(z + 2 / P) >= 1 - 1e-12
