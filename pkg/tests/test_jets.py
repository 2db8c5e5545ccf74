import numpy as np
import pytest
from hypothesis import given, strategies as st

from bestmoebius.errors import BranchCut, DivisionByZero, JetMismatch
from bestmoebius.jets import (Jet3, constant, jet_combine, jet_compose, jexp, jlog, jpow,
                              reciprocal, variable)

from conftest import cauchy_derivatives

coords = st.floats(-0.8, 0.8)


def _points():
    return [0.3 + 0.2j, -0.5 + 0.1j, 0.05 - 0.6j]


@pytest.mark.parametrize("z", _points())
def test_arithmetic_against_cauchy_oracle(z):
    x = variable(z)
    j = (x * x + 3) / (x - 2) * jexp(x) + jlog(x + 1.5) - jpow(x + 2, 0.3)

    def f(w):
        return (w * w + 3) / (w - 2) * np.exp(w) + np.log(w + 1.5) - (w + 2) ** 0.3

    ref = cauchy_derivatives(f, z)
    np.testing.assert_allclose(np.array(tuple(j)), ref, rtol=1e-10)


def test_composition_matches_direct_chain():
    z = 0.2 - 0.3j
    inner = jexp(variable(z))             # e^z
    outer = reciprocal(variable(inner.f0) + 1)   # 1/(w + 1) at w = e^z
    comp = jet_compose(outer, inner, anchor=inner.f0)
    ref = cauchy_derivatives(lambda w: 1 / (np.exp(w) + 1), z)
    np.testing.assert_allclose(np.array(tuple(comp)), ref, rtol=1e-10)


def test_compose_rejects_misanchored_outer():
    inner = jexp(variable(0.1))
    outer = variable(0.0)
    with pytest.raises(JetMismatch):
        jet_compose(outer, inner, anchor=0.0)


def test_combine_dispatch_and_errors():
    x = variable(0.5)
    assert jet_combine("add", x, x).allclose(2 * x)
    assert jet_combine("pow_real", x, 2.0).allclose(x * x)
    with pytest.raises(ValueError):
        jet_combine("sin", x)
    with pytest.raises(BranchCut):
        jlog(variable(-1.0))
    with pytest.raises(DivisionByZero):
        reciprocal(constant(0.0))


def test_vectorised_fields():
    z = np.array([0.1, 0.2j, -0.3])
    j = jexp(variable(z))
    assert j.f3.shape == (3,)
    np.testing.assert_allclose(j.f2, np.exp(z))


def test_taylor_polynomial():
    j = jexp(variable(0.0))
    h = 1e-2
    assert abs(j.taylor(h) - np.exp(h)) < h**4 / 20


@given(coords, coords, coords, coords)
def test_product_rule_is_commutative_and_leibniz(a, b, c, d):
    x = variable(complex(a, b))
    y = jexp(variable(complex(c, d))) + x
    p, q = x * y, y * x
    assert p.allclose(q, rtol=1e-13, atol=1e-14)
    # Leibniz: (xy)''' = x'''y + 3x''y' + 3x'y'' + xy'''
    lhs = p.f3
    rhs = x.f3 * y.f0 + 3 * x.f2 * y.f1 + 3 * x.f1 * y.f2 + x.f0 * y.f3
    assert abs(lhs - rhs) <= 1e-12 * (1 + abs(rhs))


@given(coords, coords)
def test_exp_log_round_trip(a, b):
    x = variable(complex(a, b)) + 2
    back = jexp(jlog(x))
    assert back.allclose(x, rtol=1e-12, atol=1e-13)


def test_jet_is_iterable_and_frozen():
    j = Jet3(1, 2, 3, 4)
    assert tuple(j) == (1, 2, 3, 4)
    with pytest.raises(Exception):
        j.f0 = 5
