"""Convex polygon maps built from prevertex/angle data or from Blaschke products.

Two independent constructions are kept on purpose:

* Schwarz-Christoffel product, f'(z) = prod_k (1 - conj(z_k) z)**(-alpha_k);
* Blaschke exponential integral, f''/f' = 2B/(1 - zB).

Exterior maps use the reciprocal product (or -2B/(1 - zB)) with the pole at
the origin normalised to g(z) = 1/z + O(z).
"""
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import Polynomial

from . import _backend
from .blaschke import BlaschkeProduct, boundary_alphas, circle_level_roots
from .errors import (BadAngles, BadParameter, BadPolygonData, BlaschkeNotVanishingAtZero,
                     NoConvergence)
from .maps import LogDerivativeMap, Precomposed, DualMap
from .quadrature import levels_for_radius, ray_integral

TWO_PI = 2 * np.pi


@dataclass(frozen=True)
class PolygonData:
    """Prevertex angles t_k (increasing in [0, 2 pi)) and exterior angles alpha_k (times pi)."""

    angles: tuple
    alphas: tuple

    def __post_init__(self):
        t = np.asarray(self.angles, dtype=float)
        a = np.asarray(self.alphas, dtype=float)
        object.__setattr__(self, "angles", tuple(t.tolist()))
        object.__setattr__(self, "alphas", tuple(a.tolist()))
        n = len(t)
        if n < 2 or len(a) != n:
            raise BadPolygonData("need n >= 2 prevertices with one angle each")
        if abs(a.sum() - 2) >= 1e-12:
            raise BadPolygonData(f"exterior angles sum to {a.sum()!r}, expected 2")
        upper = 1.0 if n == 2 else 1.0 - 1e-15
        if np.any(a <= 0) or np.any(a > upper):
            raise BadPolygonData("exterior angles must lie in (0, 1) ((0, 1] when n = 2)")
        if np.any(np.diff(t) <= 0) or t[0] < 0 or t[-1] >= TWO_PI:
            raise BadPolygonData("prevertex angles must increase within [0, 2 pi)")

    @property
    def n(self):
        return len(self.angles)

    @property
    def prevertices(self):
        return np.exp(1j * np.asarray(self.angles))

    def moment(self):
        """sum alpha_k z_k; zero exactly when the interior map has f''(0) = 0."""
        return complex(np.dot(self.alphas, self.prevertices))


def blaschke_from_data(data):
    """The Blaschke product phi = f''/(2f' + z f'') of the SC map of ``data``."""
    c = np.conj(data.prevertices)
    al = np.asarray(data.alphas)
    factors = [Polynomial([1.0, -cj]) for cj in c]
    num = Polynomial([0.0])
    for k in range(data.n):
        term = Polynomial([al[k] * c[k]])
        for j in range(data.n):
            if j != k:
                term = term * factors[j]
        num = num + term
    num = num.trim(tol=1e-14)
    zeros = num.roots() if num.degree() > 0 else np.zeros(0, dtype=complex)
    if np.any(np.abs(zeros) >= 1):
        raise BadPolygonData("data do not describe a convex polygon")
    # rotation from a probe point kept away from the zeros
    probes = np.array([0.0, 0.5, 0.5j, -0.5, -0.5j])
    dist = [np.min(np.abs(zeros - p)) if len(zeros) else 1.0 for p in probes]
    z0 = probes[int(np.argmax(dist))]
    ell1 = np.sum(al * c / (1 - c * z0))
    phi0 = ell1 / (2 + z0 * ell1)
    unrotated = BlaschkeProduct(zeros)(z0)
    rot = phi0 / unrotated
    return BlaschkeProduct(zeros, rot / abs(rot))


class SCPolygonMap(LogDerivativeMap):
    """Schwarz-Christoffel product map; interior or (normalised) exterior."""

    def __init__(self, data, exterior=False):
        super().__init__()
        self.data = data
        self.exterior = bool(exterior)
        self.kind = "polygon-exterior" if exterior else "polygon-interior"
        self.prevertex_angles = data.angles
        al = np.asarray(data.alphas)
        self.singular_exponents = tuple(al if exterior else -al)
        self._c = np.conj(data.prevertices)
        self._al = al
        self._sign = 1.0 if exterior else -1.0
        if exterior and abs(data.moment()) > 1e-10:
            raise BadPolygonData("exterior map needs sum alpha_k z_k = 0 (residue-free g')")
        self._B = None

    SERIES_RADIUS = 0.25
    SERIES_TERMS = 32

    def _logs(self, z):
        ell, d1, d2 = _backend.sc_log_derivatives(z, self._c, self._al)
        near = np.abs(z) <= self.SERIES_RADIUS
        if np.any(near):
            # power-sum series keeps relative accuracy when l = O(z^2)
            m = np.arange(1, self.SERIES_TERMS + 1)
            mu = (self._al[None, :] * self._c[None, :] ** m[:, None]).sum(axis=1) / m
            ell = np.array(ell, dtype=complex)
            ell[near] = np.polynomial.polynomial.polyval(z[near], np.concatenate([[0], mu]))
        if self.exterior:
            return -ell, -d1, -d2
        return ell, d1, d2

    def _ell(self, z):
        ell, d1, d2 = self._logs(z)
        return np.exp(ell), d1, d2

    def _e0(self):
        return 1.0

    def _em1(self, z):
        return np.expm1(self._logs(z)[0])

    def _ray_regular(self, k, t):
        keep = np.arange(self.data.n) != k
        zk = np.exp(1j * self.prevertex_angles[k])
        ell, _, _ = _backend.sc_log_derivatives(t * zk, self._c[keep], self._al[keep])
        return np.exp(-ell if self.exterior else ell)

    def _speed(self, z, t):
        d = 2 * np.abs(np.sin((t[:, None] - np.asarray(self.data.angles)[None, :]) / 2))
        s = np.prod(d ** (-self._al[None, :]), axis=1)
        return 1 / s if self.exterior else s

    def blaschke(self):
        if self._B is None:
            self._B = blaschke_from_data(self.data)
        return self._B


class _BlaschkeDriven(LogDerivativeMap):
    """l' = +-2B/(1 - zB); l by graded radial quadrature inside |z| <= QUAD_RADIUS.

    Closer to the circle, and for boundary speeds and vertex values, l is
    taken from the equivalent product over the roots z_k of zB = 1 with the
    exponents 2/(1 + |B'(z_k)|): 2B/(1 - zB) has simple poles there and
    vanishes at infinity, so its partial fractions are exactly that product's
    log-derivative.
    """

    QUAD_RADIUS = 0.99

    def __init__(self, B, exterior):
        super().__init__()
        if B.degree < 1:
            raise BadParameter("need a Blaschke product of degree >= 1")
        self.B = B
        self.exterior = exterior
        self._sign = -1.0 if exterior else 1.0
        self.prevertex_angles = tuple(circle_level_roots(B, 1))
        al = boundary_alphas(B, self.prevertex_angles)
        self.singular_exponents = tuple(al if exterior else -al)
        self._c = np.exp(-1j * np.asarray(self.prevertex_angles))
        self._al = np.asarray(al)

    def _q(self, z):
        b0, b1, _, _ = self.B.jets(z)
        den = 1 - z * b0
        return 2 * b0 / den, 2 * (b1 + b0 * b0) / den**2

    def _log_quadrature(self, z):
        if len(z) == 0:
            return z.copy()
        levels = levels_for_radius(np.max(np.abs(z)))

        def integrand(t):
            s = (t[:, None] * z[None, :]).ravel()
            return self._q(s)[0].reshape(len(t), -1)
        return self._sign * z * ray_integral(integrand, levels, tol=1e-14)

    def _log_product(self, z, keep=None):
        c, al = (self._c, self._al) if keep is None else (self._c[keep], self._al[keep])
        return self._sign * _backend.sc_log_derivatives(z, c, al)[0]

    def _log(self, z):
        out = np.empty(z.shape, dtype=complex)
        inner = np.abs(z) <= self.QUAD_RADIUS
        out[inner] = self._log_quadrature(z[inner])
        out[~inner] = self._log_product(z[~inner])
        return out

    def _ell(self, z):
        q, dq = self._q(z)
        return np.exp(self._log(z)), self._sign * q, self._sign * dq

    def _pre_schwarzian(self, z):
        q, dq = self._q(z)
        if not self.exterior:
            return q, dq
        return -2 / z - q, 2 / z**2 - dq

    def _e0(self):
        return 1.0

    def _em1(self, z):
        return np.expm1(self._log(z))

    def _ray_regular(self, k, t):
        keep = np.arange(len(self._al)) != k
        zk = np.exp(1j * self.prevertex_angles[k])
        return np.exp(self._log_product(t * zk, keep))

    def _speed(self, z, t):
        d = 2 * np.abs(np.sin((t[:, None] - np.asarray(self.prevertex_angles)[None, :]) / 2))
        s = np.prod(d ** (-self._al[None, :]), axis=1)
        return 1 / s if self.exterior else s

    def blaschke(self):
        return self.B


class BlaschkeInteriorMap(_BlaschkeDriven):
    kind = "blaschke-interior"

    def __init__(self, B):
        super().__init__(B, exterior=False)


class BlaschkeExteriorMap(_BlaschkeDriven):
    kind = "blaschke-exterior"

    def __init__(self, B):
        if abs(B(0.0)) > 1e-12:
            raise BlaschkeNotVanishingAtZero("exterior maps need B(0) = 0")
        super().__init__(B, exterior=True)


def interior_from_data(data):
    return SCPolygonMap(data, exterior=False)


def exterior_from_data(data):
    return SCPolygonMap(data, exterior=True)


def interior_from_blaschke(B):
    return BlaschkeInteriorMap(B)


def exterior_from_blaschke(B):
    return BlaschkeExteriorMap(B)


def data_from_blaschke(B):
    """Prevertices (roots of zB = 1) and exterior angles of the polygon behind B."""
    t = circle_level_roots(B, 1)
    al = boundary_alphas(B, t)
    return PolygonData(tuple(t), tuple(al * 2 / al.sum()))


def triangle_prevertices_normalized(alphas, max_iter=60):
    """Prevertices with t_1 = 0 and alpha_1 z_1 + alpha_2 z_2 + alpha_3 z_3 = 0.

    Damped Newton on (t_2, t_3).
    """
    al = np.asarray(alphas, dtype=float)
    if al.shape != (3,) or np.any(al <= 0) or np.any(al >= 1) or abs(al.sum() - 2) >= 1e-12:
        raise BadAngles("need three exterior angles in (0, 1) summing to 2")

    def F(x):
        v = al[0] + al[1] * np.exp(1j * x[0]) + al[2] * np.exp(1j * x[1])
        return np.array([v.real, v.imag])

    starts = [(2 * np.pi / 3, 4 * np.pi / 3), (np.pi / 2, np.pi), (np.pi, 3 * np.pi / 2)]
    report = []
    for x0 in starts:
        x = np.array(x0)
        for _ in range(max_iter):
            r = F(x)
            if np.hypot(*r) < 1e-15:
                break
            J = np.array([[-al[1] * np.sin(x[0]), -al[2] * np.sin(x[1])],
                          [al[1] * np.cos(x[0]), al[2] * np.cos(x[1])]])
            try:
                step = np.linalg.solve(J, -r)
            except np.linalg.LinAlgError:
                break
            lam = 1.0
            while lam > 1e-6 and np.hypot(*F(x + lam * step)) >= np.hypot(*r):
                lam /= 2
            x = x + lam * step
        t2, t3 = np.mod(x, TWO_PI)
        res = np.hypot(*F(x))
        report.append((x0, res))
        if res < 1e-12 and 0 < t2 < t3 < TWO_PI:
            return PolygonData((0.0, float(t2), float(t3)), tuple(al))
    raise NoConvergence(f"Newton failed from every start: {report}")


def vertices_of(f):
    """Images f(z_k) of the prevertices."""
    if isinstance(f, Precomposed):
        outer = vertices_of(f.outer)
        zk = np.exp(1j * np.asarray(f.outer.prevertex_angles))
        back = np.mod(np.angle(f.sigma_inverse(zk)), TWO_PI)
        return np.asarray(outer)[np.argsort(back)]
    if not isinstance(f, LogDerivativeMap) or f.prevertex_angles is None:
        raise BadParameter(f"{f.kind}: not a polygon map")
    return np.array([f.value_at_prevertex(k) for k in range(len(f.prevertex_angles))])


def turning_angles(vertices):
    """Turning angle / pi at each vertex of a closed polygon."""
    v = np.asarray(vertices)
    incoming = v - np.roll(v, 1)
    outgoing = np.roll(v, -1) - v
    return np.angle(outgoing / incoming) / np.pi


def side_lengths(vertices):
    """|v_{k+1} - v_k|, side k joining vertex k to vertex k + 1."""
    v = np.asarray(vertices)
    return np.abs(np.roll(v, -1) - v)


def exponents_of(f):
    if f.singular_exponents is None:
        raise BadParameter(f"{f.kind}: no prevertex data")
    return np.asarray(f.singular_exponents)


__all__ = [
    "PolygonData", "SCPolygonMap", "BlaschkeInteriorMap", "BlaschkeExteriorMap", "DualMap",
    "blaschke_from_data", "interior_from_data", "exterior_from_data", "interior_from_blaschke",
    "exterior_from_blaschke", "data_from_blaschke", "triangle_prevertices_normalized",
    "vertices_of", "turning_angles", "side_lengths",
]
