import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy.special import gamma

from bestmoebius import catalog
from bestmoebius.blaschke import BlaschkeProduct
from bestmoebius.errors import BadAngles, BadPolygonData, BlaschkeNotVanishingAtZero
from bestmoebius.polygon import (PolygonData, blaschke_from_data, data_from_blaschke,
                                 exterior_from_blaschke, exterior_from_data,
                                 interior_from_blaschke, interior_from_data, side_lengths,
                                 triangle_prevertices_normalized, turning_angles, vertices_of)

# int_0^1 (1 - t^4)^(-1/2) dt
SQUARE_RADIUS = gamma(0.25) ** 2 / (4 * np.sqrt(2 * np.pi))


def test_square_vertices_closed_form():
    v = vertices_of(catalog.build("square"))
    np.testing.assert_allclose(v, SQUARE_RADIUS * np.array([1, 1j, -1, -1j]), atol=1e-12)


def test_square_from_blaschke_matches_sc_product():
    sc = catalog.build("square")
    bl = interior_from_blaschke(BlaschkeProduct([0, 0, 0]))
    z = np.array([0.3 + 0.1j, -0.5j, 0.95 * np.exp(2j)])
    for a, b in zip(sc.jet(z), bl.jet(z)):
        np.testing.assert_allclose(a, b, rtol=1e-12, atol=1e-14)


def test_blaschke_log_quadrature_matches_product_form():
    f = interior_from_blaschke(blaschke_from_data(catalog.PENTAGON))
    z = np.array([0.5 + 0.3j, -0.9j, 0.98])
    np.testing.assert_allclose(f._log_quadrature(z), f._log_product(z), rtol=1e-12, atol=1e-14)


@pytest.mark.parametrize("alphas", [(0.5, 0.7, 0.8), (2 / 3, 2 / 3, 2 / 3), (0.9, 0.6, 0.5)])
def test_normalized_triangle(alphas):
    data = triangle_prevertices_normalized(alphas)
    assert abs(data.moment()) < 1e-12
    f = interior_from_data(data)
    assert abs(f.jet(0.0).f2) < 1e-12
    v = vertices_of(f)
    np.testing.assert_allclose(turning_angles(v), alphas, atol=1e-10)
    # law of sines: side k is opposite vertex k + 2, interior angle pi (1 - alpha)
    s = side_lengths(v)
    opposite = np.sin(np.pi * (1 - np.roll(alphas, -2)))
    r = s / opposite
    assert r.max() / r.min() - 1 < 1e-10


def test_scalene_prevertices_reference():
    data = triangle_prevertices_normalized((0.5, 0.7, 0.8))
    np.testing.assert_allclose(data.angles, (0.0, 1.7141438957, 4.1887902048), atol=1e-9)


def test_bad_angles():
    with pytest.raises(BadAngles):
        triangle_prevertices_normalized((0.5, 0.5, 0.5))
    with pytest.raises(BadPolygonData):
        PolygonData((0.0, 1.0, 2.0), (0.5, 0.5, 1.0))
    with pytest.raises(BadPolygonData):
        PolygonData((0.0, 2.0, 1.0), (0.5, 0.7, 0.8))


def test_exterior_data_must_be_normalized():
    with pytest.raises(BadPolygonData):
        exterior_from_data(catalog.PENTAGON)


def test_exterior_from_blaschke_requires_zero_at_origin():
    with pytest.raises(BlaschkeNotVanishingAtZero):
        exterior_from_blaschke(BlaschkeProduct([0.5]))


def test_exterior_joukowski_vertices():
    g = exterior_from_blaschke(BlaschkeProduct([0.0]))
    np.testing.assert_allclose(np.sort(np.real(vertices_of(g))), [-2, 2], atol=1e-12)
    z = np.array([0.3 + 0.4j, -0.2j])
    np.testing.assert_allclose(g.value(z), z + 1 / z, rtol=1e-12)


def test_equilateral_from_blaschke():
    v = vertices_of(interior_from_blaschke(BlaschkeProduct([0.0, 0.0])))
    s = side_lengths(v)
    assert s.max() / s.min() - 1 < 1e-10
    np.testing.assert_allclose(turning_angles(v), [2 / 3] * 3, atol=1e-10)


def test_pentagon_polygon():
    f = interior_from_data(catalog.PENTAGON)
    B = f.blaschke()
    assert B.degree == 4
    np.testing.assert_allclose(turning_angles(vertices_of(f)), catalog.PENTAGON.alphas, atol=1e-9)
    back = data_from_blaschke(B)
    np.testing.assert_allclose(back.alphas, catalog.PENTAGON.alphas, atol=1e-10)
    np.testing.assert_allclose(back.angles, catalog.PENTAGON.angles, atol=1e-10)


def test_dual_triangle_is_exterior_polygon():
    g = catalog.build("dual:triangle")
    v = vertices_of(g)
    # the exterior domain's boundary turns the other way round
    np.testing.assert_allclose(np.abs(turning_angles(v)), [0.5, 0.7, 0.8], atol=1e-9)


@given(st.lists(st.floats(0.15, 0.6), min_size=4, max_size=4))
def test_exterior_blaschke_polygon_angles(raw):
    zeros = [0.0] + [0.6 * raw[i] * np.exp(2j * np.pi * raw[i + 1]) for i in (0, 2)]
    g = exterior_from_blaschke(BlaschkeProduct(zeros))
    al = np.asarray(g.singular_exponents)
    assert len(al) == 4
    assert abs(al.sum() - 2) < 1e-12
    assert np.all((al > 0) & (al < 1))
