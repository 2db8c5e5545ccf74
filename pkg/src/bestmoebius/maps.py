"""Analytic maps of the unit disk evaluated through 3-jets.

Every map exposes ``jet``, ``derivatives``, ``value`` and ``pre_schwarzian``
(the pair f''/f' and its derivative), accepting a scalar or an array of
points.  Exterior kinds carry a simple pole at the origin normalised so that
g(z) = 1/z + O(z) whenever the source data allow it.
"""
import threading

import numpy as np

from .errors import BadParameter, OutOfDomain, SecondDerivativeNotZero, SingularPoint
from .jets import Jet3, jet_compose, jlog, jpow, variable
from .quadrature import graded_rule, levels_for_radius, ray_integral, right_singular, interval_integral

BOUNDARY_TOL = 1e-13
PREVERTEX_TOL = 1e-14


def _points(z):
    scalar = np.ndim(z) == 0
    return np.atleast_1d(np.asarray(z, dtype=np.complex128)), scalar


def _out(arr, scalar):
    return complex(arr[0]) if scalar else arr


class AnalyticMap:
    """Base class.  Subclasses implement ``_derivatives`` and ``_value`` on 1-D arrays."""

    kind = "map"
    exterior = False
    boundary_capable = True
    prevertex_angles = None
    singular_exponents = None

    # -- domain handling -------------------------------------------------
    def _check(self, z):
        r = np.abs(z)
        if np.any(r > 1 + BOUNDARY_TOL):
            raise OutOfDomain(f"{self.kind}: point outside the closed unit disk")
        on_circle = r >= 1 - BOUNDARY_TOL
        if np.any(on_circle):
            if not self.boundary_capable:
                raise OutOfDomain(f"{self.kind}: boundary evaluation not supported")
            if self.prevertex_angles is not None:
                zk = np.exp(1j * np.asarray(self.prevertex_angles))
                d = np.abs(z[on_circle][:, None] - zk[None, :])
                if np.any(d <= PREVERTEX_TOL):
                    raise SingularPoint(f"{self.kind}: evaluation at a prevertex")
        if self.exterior and np.any(z == 0):
            raise SingularPoint(f"{self.kind}: pole at the origin")

    def derivatives(self, z):
        """(f', f'', f''') at ``z``."""
        zz, scalar = _points(z)
        self._check(zz)
        return tuple(_out(d, scalar) for d in self._derivatives(zz))

    def value(self, z):
        zz, scalar = _points(z)
        self._check(zz)
        return _out(self._value(zz), scalar)

    def jet(self, z):
        zz, scalar = _points(z)
        self._check(zz)
        d1, d2, d3 = self._derivatives(zz)
        v = self._value(zz)
        if scalar:
            return Jet3(complex(v[0]), complex(d1[0]), complex(d2[0]), complex(d3[0]))
        return Jet3(v, d1, d2, d3)

    def pre_schwarzian(self, z):
        """Return (P, P') with P = f''/f'."""
        zz, scalar = _points(z)
        self._check(zz)
        p, dp = self._pre_schwarzian(zz)
        return _out(p, scalar), _out(dp, scalar)

    def _pre_schwarzian(self, z):
        d1, d2, d3 = self._derivatives(z)
        p = d2 / d1
        return p, d3 / d1 - p * p

    def boundary_speed(self, t):
        """|f'(e^{it})|."""
        tt, scalar = _points(np.asarray(t, dtype=float))
        z = np.exp(1j * tt.real)
        self._check(z)
        s = self._speed(z, tt.real)
        return float(s[0]) if scalar else s

    def _speed(self, z, t):
        return np.abs(self._derivatives(z)[0])

    def blaschke(self):
        """The Blaschke product phi (interior) or omega (exterior), when known."""
        raise BadParameter(f"{self.kind}: no Blaschke product attached")

    def __repr__(self):
        return f"<{type(self).__name__} {self.kind}>"


class JetMap(AnalyticMap):
    """Maps whose full jet is produced in one shot by ``_jet``."""

    def _derivatives(self, z):
        j = self._jet(z)
        return j.f1, j.f2, j.f3

    def _value(self, z):
        return self._jet(z).f0


class StripMap(JetMap):
    """L(z) = (1/2) log((1 + z)/(1 - z)), onto the strip |Im w| < pi/4."""

    kind = "strip"
    prevertex_angles = (0.0, np.pi)
    singular_exponents = (-1.0, -1.0)

    def _jet(self, z):
        x = variable(z)
        return (jlog(1 + x) - jlog(1 - x)) * 0.5

    def blaschke(self):
        from .blaschke import BlaschkeProduct
        return BlaschkeProduct([0.0])


class SectorMap(JetMap):
    """A(z) = ((1 + z)/(1 - z))**alpha - 1, scaled by 1/(2 alpha)."""

    kind = "sector"

    def __init__(self, alpha):
        alpha = float(alpha)
        if not 0 < alpha <= 1:
            raise BadParameter("sector opening alpha must lie in (0, 1]")
        self.alpha = alpha
        self.prevertex_angles = (0.0, np.pi)
        self.singular_exponents = (-1.0 - alpha, alpha - 1.0)

    def _jet(self, z):
        x = variable(z)
        w = (1 + x) / (1 - x)
        return (jpow(w, self.alpha) - 1) * (0.5 / self.alpha)


class LensMap(JetMap):
    """K = A / (1 + alpha A): lens with vertices at +-1/alpha, K''(0) = 0."""

    kind = "lens"

    def __init__(self, alpha):
        self.sector = SectorMap(alpha)
        self.alpha = self.sector.alpha
        self.prevertex_angles = (0.0, np.pi)
        self.singular_exponents = (self.alpha - 1.0, self.alpha - 1.0)

    def _jet(self, z):
        a = self.sector._jet(z)
        return a / (1 + a * self.alpha)


class KoebeMap(JetMap):
    kind = "koebe"
    boundary_capable = False

    def _jet(self, z):
        u = 1 - z
        return Jet3(z / u**2, (1 + z) / u**3, (4 + 2 * z) / u**4, (18 + 6 * z) / u**5)


class MoebiusMap(JetMap):
    kind = "moebius"

    def __init__(self, transform):
        self.T = transform

    def _check(self, z):
        super()._check(z)
        if np.any(self.T.c * z + self.T.d == 0):
            raise SingularPoint("moebius: evaluation at the pole")

    def _jet(self, z):
        return self.T.jet(z)


class PolynomialMap(JetMap):
    """f(z) = sum c_k z**k, coefficients in increasing degree."""

    kind = "polynomial"

    def __init__(self, coeffs):
        c = np.asarray(coeffs, dtype=complex)
        if len(c) < 2 or c[1] == 0:
            raise BadParameter("polynomial needs a nonzero linear coefficient")
        self.coeffs = c
        self._p = [np.polynomial.Polynomial(c)]
        for _ in range(3):
            self._p.append(self._p[-1].deriv())

    def _jet(self, z):
        return Jet3(*(p(z) for p in self._p))


class PostMoebius(AnalyticMap):
    """T o f for a Moebius transform T and an interior map f."""

    kind = "post-moebius"

    def __init__(self, transform, inner):
        if inner.exterior:
            raise BadParameter("post-composition supports interior maps only")
        self.T = transform
        self.inner = inner
        self.boundary_capable = inner.boundary_capable
        self.prevertex_angles = inner.prevertex_angles
        self.singular_exponents = inner.singular_exponents

    def _full(self, z):
        j = self.inner.jet(z)
        return jet_compose(self.T.jet(j.f0), j)

    def _derivatives(self, z):
        j = self._full(z)
        return j.f1, j.f2, j.f3

    def _value(self, z):
        return self.T(self.inner._value(z))


def _automorphism_jet(z, a, c):
    ac = np.conj(a)
    den = 1 + ac * z
    det = c * (1 - abs(a) ** 2)
    return Jet3(c * (z + a) / den, det / den**2, -2 * ac * det / den**3,
                6 * ac**2 * det / den**4)


class Precomposed(AnalyticMap):
    """f o sigma with sigma(z) = c (z + a)/(1 + conj(a) z)."""

    kind = "precomposed"

    def __init__(self, outer, a, c=1.0):
        a, c = complex(a), complex(c)
        if abs(a) >= 1:
            raise BadParameter("automorphism parameter must satisfy |a| < 1")
        if abs(abs(c) - 1) > 1e-12:
            raise BadParameter("automorphism rotation must be unimodular")
        if outer.exterior and a != 0:
            raise BadParameter("exterior maps admit rotations only")
        self.outer, self.a, self.c = outer, a, c
        self.exterior = outer.exterior
        self.boundary_capable = outer.boundary_capable
        if outer.prevertex_angles is not None:
            zk = np.exp(1j * np.asarray(outer.prevertex_angles))
            back = np.mod(np.angle(self.sigma_inverse(zk)), 2 * np.pi)
            order = np.argsort(back)
            self.prevertex_angles = tuple(back[order])
            self.singular_exponents = tuple(np.asarray(outer.singular_exponents)[order])

    def sigma(self, z):
        return self.c * (z + self.a) / (1 + np.conj(self.a) * z)

    def sigma_inverse(self, w):
        u = w / self.c
        return (u - self.a) / (1 - np.conj(self.a) * u)

    def _derivatives(self, z):
        s = _automorphism_jet(z, self.a, self.c)
        d1, d2, d3 = self.outer._derivatives(s.f0)
        j = jet_compose(Jet3(s.f0, d1, d2, d3), s)
        return j.f1, j.f2, j.f3

    def _value(self, z):
        return self.outer._value(self.sigma(z))

    def blaschke(self):
        raise BadParameter("precomposed maps carry no attached Blaschke product")


class LogDerivativeMap(AnalyticMap):
    """Map described by l(z) with f' = exp(l) (interior) or -z**2 g' = exp(l) (exterior).

    Subclasses implement ``_ell(z) -> (exp(l), l', l'')``.  Values come from
    radial quadrature and are memoised per instance.
    """

    _em1_accurate = True

    def __init__(self):
        self._cache = {}
        self._lock = threading.Lock()

    # exp(l(0)) and exp(l(z)) - exp(l(0)); subclasses with l available override
    def _e0(self):
        return complex(self._ell(np.zeros(1, dtype=complex))[0][0])

    def _em1(self, z):
        return self._ell(z)[0] - self._e0()

    def _ray_regular(self, k, t):
        """exp(l(t z_k)) * (1 - t)**(-beta_k) on the ray to prevertex k."""
        zk = np.exp(1j * self.prevertex_angles[k])
        return self._ell(t * zk)[0] * (1 - t) ** (-self.singular_exponents[k])

    def _derivatives(self, z):
        e, d1, d2 = self._ell(z)
        if not self.exterior:
            return e, e * d1, e * (d2 + d1 * d1)
        g1 = -e / z**2
        m = -2 / z + d1
        return g1, g1 * m, g1 * (2 / z**2 + d2 + m * m)

    def _pre_schwarzian(self, z):
        _, d1, d2 = self._ell(z)
        if not self.exterior:
            return d1, d2
        return -2 / z + d1, 2 / z**2 + d2

    def _speed(self, z, t):
        return np.abs(self._ell(z)[0])

    def _value(self, z):
        out = np.empty(z.shape, dtype=complex)
        todo = []
        for i, zi in enumerate(z):
            key = complex(zi)
            hit = self._cache.get(key)
            if hit is None:
                todo.append(i)
            else:
                out[i] = hit
        if todo:
            pts = z[todo]
            vals = self._compute_values(pts)
            with self._lock:
                for zi, v in zip(pts, vals):
                    self._cache[complex(zi)] = complex(v)
            out[todo] = vals
        return out

    def _compute_values(self, pts):
        vals = np.empty(pts.shape, dtype=complex)
        regular = np.ones(pts.shape, dtype=bool)
        if self.prevertex_angles is not None:
            zk = np.exp(1j * np.asarray(self.prevertex_angles))
            for i, p in enumerate(pts):
                hits = np.nonzero(np.abs(zk - p) <= PREVERTEX_TOL)[0]
                if len(hits):
                    vals[i] = self.value_at_prevertex(int(hits[0]))
                    regular[i] = False
        if np.any(regular):
            vals[regular] = self._radial(pts[regular])
        return vals

    def _radial(self, pts):
        levels = levels_for_radius(np.max(np.abs(pts)))
        if not self.exterior:
            def integrand(t):
                return self._ell((t[:, None] * pts[None, :]).ravel())[0].reshape(len(t), -1)
            return pts * ray_integral(integrand, levels)

        if self._em1_accurate:
            def integrand(t):
                s = (t[:, None] * pts[None, :]).ravel()
                return (self._em1(s) / s**2).reshape(len(t), -1)
            return self._e0() / pts - pts * ray_integral(integrand, levels)
        return self._e0() / pts - self._regular_integral(pts)

    # (e^l - e^l(0)) / s^2 loses all accuracy as s -> 0 unless e^l - e^l(0) is
    # formed without cancellation; otherwise integrate a Taylor series near 0
    # whose coefficients come from samples on |s| = SERIES_RADIUS.
    SERIES_RADIUS = 0.5
    SERIES_TERMS = 64
    HEAD_RADIUS = 0.25

    def _series(self):
        if getattr(self, "_coef", None) is None:
            n = self.SERIES_TERMS
            s = self.SERIES_RADIUS * np.exp(2j * np.pi * np.arange(n) / n)
            F = self._em1(s) / s**2
            self._coef = np.fft.fft(F) / n / self.SERIES_RADIUS ** np.arange(n)
        return self._coef

    def _head(self, z):
        c = self._series()
        k = np.arange(len(c))
        return np.sum(c[None, :] * z[:, None] ** (k + 1)[None, :] / (k + 1)[None, :], axis=1)

    def _regular_integral(self, pts):
        r = np.abs(pts)
        out = np.empty(pts.shape, dtype=complex)
        near = r <= self.HEAD_RADIUS
        out[near] = self._head(pts[near])
        far = ~near
        if np.any(far):
            end = pts[far]
            start = self.HEAD_RADIUS * end / np.abs(end)
            levels = levels_for_radius(np.max(np.abs(end)))

            def integrand(t):
                s = (start[None, :] + t[:, None] * (end - start)[None, :]).ravel()
                return (self._em1(s) / s**2).reshape(len(t), -1)
            out[far] = self._head(start) + (end - start) * ray_integral(integrand, levels)
        return out

    def value_at_prevertex(self, k):
        """f(z_k) by radial quadrature into the singular endpoint."""
        zk = np.exp(1j * self.prevertex_angles[k])
        beta = self.singular_exponents[k]
        if not self.exterior:
            head = interval_integral(lambda t: self._ell(t * zk)[0], 0.0, 0.5)
            tail = right_singular(lambda t: self._ray_regular(k, t), 0.5, 1.0, beta)
            return complex(zk * (head + tail))
        e0 = self._e0()
        if self._em1_accurate:
            head = interval_integral(lambda t: self._em1(t * zk) / (t * zk) ** 2, 0.0, 0.5)
        else:
            head = self._regular_integral(np.array([zk / 2]))[0] / zk
        tail = right_singular(lambda t: self._ray_regular(k, t) / (t * zk) ** 2, 0.5, 1.0, beta)
        # integral of e0 / (t zk)^2 over [1/2, 1] is e0 / zk^2
        return complex(e0 / zk - zk * (head + tail - e0 / zk**2))

    def log_regular_part(self, z):
        """(exp(l), l', l'') at ``z``."""
        zz, scalar = _points(z)
        self._check(zz)
        return tuple(_out(v, scalar) for v in self._ell(zz))


class DualMap(LogDerivativeMap):
    """Partner under f'(z) g'(z) = -1/z**2 with the pole normalised as g ~ c/z."""

    kind = "dual"

    def __init__(self, source, tol=1e-10):
        super().__init__()
        self.source = source
        self.exterior = not source.exterior
        self.boundary_capable = source.boundary_capable
        self.prevertex_angles = source.prevertex_angles
        if source.singular_exponents is not None:
            self.singular_exponents = tuple(-b for b in source.singular_exponents)
        self._logsrc = isinstance(source, LogDerivativeMap)
        self._em1_accurate = self._logsrc
        if self._logsrc:
            d1 = source._ell(np.zeros(1, dtype=complex))[1][0]
            bad = abs(d1) > tol
        elif source.exterior:
            raise BadParameter("dual of an exterior map needs its log-derivative form")
        else:
            f1, f2, _ = source._derivatives(np.zeros(1, dtype=complex))
            bad = abs(f2[0]) > tol * abs(f1[0])
        if bad:
            raise SecondDerivativeNotZero(
                "duality needs f''(0) = 0 for g' to have a primitive off the origin")

    def _ell(self, z):
        if self._logsrc:
            e, d1, d2 = self.source._ell(z)
            return 1 / e, -d1, -d2
        f1, f2, f3 = self.source._derivatives(z)
        p = f2 / f1
        return 1 / f1, -p, -(f3 / f1 - p * p)

    def _e0(self):
        if self._logsrc:
            return 1 / self.source._e0()
        return 1 / complex(self.source._derivatives(np.zeros(1, dtype=complex))[0][0])

    def _em1(self, z):
        if self._logsrc:
            e = self.source._ell(z)[0]
            return -self.source._em1(z) / (e * self.source._e0())
        return self._ell(z)[0] - self._e0()

    def _ray_regular(self, k, t):
        if self._logsrc:
            return 1 / self.source._ray_regular(k, t)
        return super()._ray_regular(k, t)

    def blaschke(self):
        return self.source.blaschke()


def make_builtin(kind, **params):
    """Construct a built-in map: strip, sector, lens, koebe, moebius, polynomial."""
    kind = kind.lower()
    if kind == "strip":
        return StripMap()
    if kind == "sector":
        return SectorMap(params.get("alpha", 1.0))
    if kind == "lens":
        return LensMap(params.get("alpha", 0.5))
    if kind == "koebe":
        return KoebeMap()
    if kind == "moebius":
        from .moebius import Moebius
        return MoebiusMap(Moebius(*params["coeffs"]))
    if kind == "polynomial":
        return PolynomialMap(params["coeffs"])
    raise BadParameter(f"unknown built-in map {kind!r}")


def precompose_automorphism(f, a, c=1.0):
    return Precomposed(f, a, c)


def dual_map(f):
    """The convex/concave partner of ``f`` (see :class:`DualMap`)."""
    return DualMap(f)


def schwarzian(f, z):
    """Sf = (f''/f')' - (f''/f')**2 / 2."""
    p, dp = f.pre_schwarzian(z)
    return dp - 0.5 * p * p
