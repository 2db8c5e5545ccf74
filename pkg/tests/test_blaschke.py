import numpy as np
import pytest
from hypothesis import given, strategies as st

from bestmoebius.blaschke import (BlaschkeProduct, boundary_alphas, circle_level_roots)
from bestmoebius.errors import BadParameter

from conftest import cauchy_derivatives

zero_st = st.builds(lambda r, t: 0.9 * r * np.exp(1j * t), st.floats(0, 1), st.floats(0, 6.3))


def test_validation():
    with pytest.raises(BadParameter):
        BlaschkeProduct([1.0])
    with pytest.raises(BadParameter):
        BlaschkeProduct([0.2], rotation=2.0)
    with pytest.raises(BadParameter):
        circle_level_roots(BlaschkeProduct([0.0]), 0.5)


@given(st.lists(zero_st, min_size=1, max_size=5), st.floats(0, 6.3))
def test_modulus_and_zeros(zeros, rot):
    B = BlaschkeProduct(zeros, np.exp(1j * rot))
    t = np.linspace(0, 2 * np.pi, 50)
    np.testing.assert_allclose(np.abs(B(np.exp(1j * t))), 1, atol=1e-13)
    assert np.all(np.abs(B(np.asarray(zeros))) < 1e-12)
    assert np.all(np.abs(B(0.5 * np.exp(1j * t))) < 1)


def test_jets_against_cauchy_oracle():
    B = BlaschkeProduct([0.3, -0.2 + 0.5j, 0.0], 1j)
    z = 0.1 - 0.4j
    ref = cauchy_derivatives(B, z, rho=0.05)
    np.testing.assert_allclose(np.array(tuple(B.jet(z))), ref, rtol=1e-10)


def test_boundary_log_derivative_is_speed_of_argument():
    B = BlaschkeProduct([0.5, -0.3j])
    t, h = 1.2, 1e-5
    # argument() follows arg(zB), whose slope is 1 + |B'|
    fd = (B.argument(t + h) - B.argument(t - h)) / (2 * h) - 1
    assert abs(B.boundary_log_derivative(t) - fd) < 1e-8
    zb1 = B.jet(np.exp(1j * t)).f1
    assert abs(B.boundary_log_derivative(t) - abs(zb1)) < 1e-12


@given(st.lists(zero_st, min_size=0, max_size=4), st.sampled_from([1, -1]))
def test_level_roots(zeros, target):
    B = BlaschkeProduct(zeros)
    roots = circle_level_roots(B, target)
    assert len(roots) == B.degree + 1
    assert np.all(np.diff(roots) > 0) and roots[0] >= 0 and roots[-1] < 2 * np.pi
    z = np.exp(1j * roots)
    np.testing.assert_allclose(z * B(z), target, atol=1e-12)
    if target == 1:
        al = boundary_alphas(B, roots)
        assert abs(al.sum() - 2) < 1e-12


def test_roots_of_z_cubed():
    roots = circle_level_roots(BlaschkeProduct([0, 0, 0]), -1)
    np.testing.assert_allclose(roots, np.pi / 4 * np.array([1, 3, 5, 7]), atol=1e-14)
