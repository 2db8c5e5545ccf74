import numpy as np
import pytest
from scipy.special import beta as beta_fn

from bestmoebius.errors import QuadratureFailure
from bestmoebius.quadrature import (arc_integral, graded_rule, interval_integral,
                                    levels_for_radius, ray_integral, right_singular)


def test_graded_rule_integrates_polynomials():
    t, w = graded_rule(20, 12)
    # the last panel runs out to t = 1
    assert abs(w.sum() - 1) < 1e-14
    assert abs(np.dot(w, t**5) - 1 / 6) < 1e-14


def test_ray_integral_near_singularity():
    r = 0.999
    val = ray_integral(lambda t: 1 / (1 - r * t)[:, None], levels_for_radius(r))
    assert abs(val[0] + np.log(1 - r) / r) < 1e-12


def test_levels_grow_with_radius():
    assert levels_for_radius(0.5) < levels_for_radius(0.999) <= 52


@pytest.mark.parametrize("b", [-0.5, -0.9, 0.3])
def test_right_singular_against_beta_function(b):
    # int_0^1 t^2 (1 - t)^b dt = B(3, b + 1)
    # exact for polynomials; what is left is rounding in the Jacobi weights
    val = right_singular(lambda t: t**2, 0.0, 1.0, b)
    assert abs(val - beta_fn(3, b + 1)) < 5e-13 * beta_fn(3, b + 1)


def test_arc_integral_both_ends():
    # int_0^pi (sin t)^(-1/2) dt = B(1/4, 1/2)... via t -> sin, compare with scipy
    val = arc_integral(lambda t: np.sin(t) ** -0.5, 0.0, np.pi, -0.5, -0.5)
    assert abs(val - beta_fn(0.25, 0.5)) < 1e-11


def test_interval_integral_failure_is_reported():
    with pytest.raises(QuadratureFailure) as info:
        interval_integral(lambda t: np.abs(t - 0.3137), 0.0, 1.0, tol=1e-15, panels=1)
    assert info.value.achieved > 0
