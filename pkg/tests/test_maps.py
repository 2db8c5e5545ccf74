import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy.integrate import quad

from bestmoebius import _backend, _kernels_py, catalog
from bestmoebius.errors import (BadParameter, OutOfDomain, SecondDerivativeNotZero,
                                SingularPoint)
from bestmoebius.maps import (dual_map, make_builtin, precompose_automorphism, schwarzian)
from bestmoebius.moebius import Moebius

from conftest import cauchy_derivatives

CLOSED = {
    "strip": lambda z: 0.5 * np.log((1 + z) / (1 - z)),
    "koebe": lambda z: z / (1 - z) ** 2,
    "sector": lambda z: (((1 + z) / (1 - z)) ** 0.5 - 1),
}


@pytest.mark.parametrize("name", sorted(CLOSED))
def test_builtin_values_and_jets(name):
    f = make_builtin(name, **({"alpha": 0.5} if name == "sector" else {}))
    for z in (0.1 + 0.2j, -0.4 + 0.3j, 0.6j):
        ref = cauchy_derivatives(CLOSED[name], z, rho=0.02)
        got = np.array(tuple(f.jet(z)))
        np.testing.assert_allclose(got, ref, rtol=1e-9)


def test_builtin_jets_at_origin():
    assert tuple(make_builtin("strip").jet(0)) == (0, 1, 0, 2)
    assert np.allclose(tuple(make_builtin("koebe").jet(0)), (0, 1, 4, 18))
    assert np.allclose(tuple(make_builtin("sector", alpha=1.0).jet(0)), (0, 1, 2, 6))
    lens = make_builtin("lens", alpha=0.5)
    assert abs(lens.jet(0).f2) < 1e-15


def test_lens_tends_to_two():
    lens = make_builtin("lens", alpha=0.5)
    assert abs(lens.value(0.999999999999) - 2) < 1e-5


def test_lens_jets_against_values():
    lens = make_builtin("lens", alpha=0.7)
    z = 0.35 - 0.2j
    ref = cauchy_derivatives(lambda w: lens.value(w), z, rho=0.02)
    np.testing.assert_allclose(np.array(tuple(lens.jet(z))), ref, rtol=1e-9)


def test_domain_errors():
    with pytest.raises(OutOfDomain):
        make_builtin("strip").value(1.2)
    with pytest.raises(OutOfDomain):
        make_builtin("koebe").value(1.0)
    with pytest.raises(SingularPoint):
        make_builtin("strip").jet(1.0)
    with pytest.raises(SingularPoint):
        dual_map(make_builtin("strip")).jet(0.0)
    with pytest.raises(BadParameter):
        make_builtin("hexagon")


def test_square_value_by_independent_quadrature():
    f = catalog.build("square")
    z = 0.7 * np.exp(0.4j)
    re = quad(lambda t: (z / np.sqrt(1 - (t * z) ** 4)).real, 0, 1, epsabs=1e-14)[0]
    im = quad(lambda t: (z / np.sqrt(1 - (t * z) ** 4)).imag, 0, 1, epsabs=1e-14)[0]
    assert abs(f.value(z) - complex(re, im)) < 1e-12


def test_dual_of_strip_is_joukowski():
    g = dual_map(make_builtin("strip"))
    z = np.array([0.3 + 0.1j, -0.8j, 0.95])
    np.testing.assert_allclose(g.value(z), z + 1 / z, rtol=1e-13)
    assert g.exterior


def test_dual_requires_vanishing_second_derivative():
    with pytest.raises(SecondDerivativeNotZero):
        dual_map(make_builtin("koebe"))


def test_dual_product_identity_generic_source():
    f = make_builtin("lens", alpha=0.5)
    g = dual_map(f)
    z = np.array([0.2 + 0.5j, -0.7, 0.4j])
    np.testing.assert_allclose(f.derivatives(z)[0] * g.derivatives(z)[0], -1 / z**2, rtol=1e-13)


def test_precomposed_jet_by_chain_rule():
    f = make_builtin("koebe")
    a = 0.3 - 0.2j
    g = precompose_automorphism(f, a)
    sigma = lambda z: (z + a) / (1 + np.conj(a) * z)
    z = 0.2 + 0.1j
    ref = cauchy_derivatives(lambda w: CLOSED["koebe"](sigma(w)), z, rho=0.02)
    np.testing.assert_allclose(np.array(tuple(g.jet(z))), ref, rtol=1e-9)
    assert abs(g.sigma_inverse(g.sigma(z)) - z) < 1e-15


def test_schwarzian_is_moebius_invariant():
    from bestmoebius.maps import PostMoebius
    f = make_builtin("lens", alpha=0.5)
    Tf = PostMoebius(Moebius(1, 2j, 0.5, 3), f)
    z = np.array([0.1, 0.5j, -0.6 + 0.2j])
    np.testing.assert_allclose(schwarzian(Tf, z), schwarzian(f, z), rtol=1e-11)


def test_koebe_schwarzian_closed_form():
    z = np.array([0.1, 0.5j, -0.6 + 0.2j])
    np.testing.assert_allclose(schwarzian(make_builtin("koebe"), z), -6 / (1 - z**2) ** 2,
                               rtol=1e-12)


@given(st.floats(0.0, 0.97), st.floats(0, 2 * np.pi))
def test_backends_agree(r, t):
    c = np.exp(-1j * np.array([0.0, 1.1, 2.3, 3.9, 5.0]))
    al = np.array([0.3, 0.45, 0.5, 0.35, 0.4])
    z = np.array([r * np.exp(1j * t), 0.5 * r])
    a = _kernels_py.sc_log_derivatives(z, c, al)
    b = _backend.sc_log_derivatives(z, c, al)
    for u, v in zip(a, b):
        np.testing.assert_allclose(u, v, rtol=1e-12, atol=1e-14)
    zeros = np.array([0.0, 0.3 + 0.2j, -0.4j])
    a = _kernels_py.blaschke_jet(z, zeros, 1j)
    b = _backend.blaschke_jet(z, zeros, 1j)
    for u, v in zip(a, b):
        np.testing.assert_allclose(u, v, rtol=1e-12, atol=1e-14)


def test_pure_backend_selected_by_environment():
    env = dict(os.environ, BESTMOEBIUS_PURE="1")
    out = subprocess.run([sys.executable, "-c", "import bestmoebius; print(bestmoebius.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
