"""Moebius transforms, best Moebius approximations and their poles."""
from dataclasses import dataclass, field

import numpy as np

from .errors import CriticalPoint, DegenerateTransform, NotOnStraightEdge
from .jets import Jet3

COLLINEAR_TOL = 1e-9
ANTIPODAL_TOL = 1e-9
MODULUS_TOL = 1e-9


class _ComplexInfinity:
    """The point at infinity of the Riemann sphere."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __abs__(self):
        return float("inf")


INFINITY = _ComplexInfinity()


def is_infinite(w):
    return w is INFINITY


@dataclass(frozen=True)
class Moebius:
    """z -> (a z + b)/(c z + d)."""

    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, complex(getattr(self, name)))
        if self.det == 0:
            raise DegenerateTransform("ad - bc = 0")

    @property
    def det(self):
        return self.a * self.d - self.b * self.c

    def __call__(self, z):
        """Apply to a finite point or an array; poles give complex infinity."""
        with np.errstate(divide="ignore", invalid="ignore"):
            return (self.a * z + self.b) / (self.c * z + self.d)

    def apply(self, z):
        """Action on the extended plane (scalars, INFINITY allowed)."""
        if z is INFINITY:
            return INFINITY if self.c == 0 else self.a / self.c
        den = self.c * z + self.d
        if den == 0:
            return INFINITY
        return (self.a * z + self.b) / den

    def compose(self, other):
        """self o other."""
        return Moebius(self.a * other.a + self.b * other.c,
                       self.a * other.b + self.b * other.d,
                       self.c * other.a + self.d * other.c,
                       self.c * other.b + self.d * other.d)

    def inverse(self):
        return Moebius(self.d, -self.b, -self.c, self.a)

    @property
    def pole(self):
        return INFINITY if self.c == 0 else -self.d / self.c

    def jet(self, z):
        den = self.c * z + self.d
        det = self.det
        return Jet3((self.a * z + self.b) / den, det / den**2,
                    -2 * self.c * det / den**3, 6 * self.c**2 * det / den**4)

    def same_as(self, other, samples=(0.1 + 0.2j, -0.4j, 0.5), tol=1e-10):
        """Projective equality checked on sample points."""
        for z in samples:
            u, v = self.apply(z), other.apply(z)
            if (u is INFINITY) != (v is INFINITY):
                return False
            if u is not INFINITY and abs(u - v) > tol * max(1.0, abs(u)):
                return False
        return True


IDENTITY = Moebius(1, 0, 0, 1)


def moebius_apply(T, z):
    return T.apply(z)


def moebius_compose(T, S):
    return T.compose(S)


def moebius_invert(T):
    return T.inverse()


def moebius_pole(T):
    return T.pole


def bma(f, zeta):
    """Best Moebius approximation of ``f`` at ``zeta``.

    The returned transform has second-order contact with f at zeta and
    determinant f'(zeta).
    """
    zeta = complex(zeta)
    j = f.jet(zeta)
    if j.f1 == 0:
        raise CriticalPoint(f"f'({zeta}) = 0")
    c = -j.f2 / (2 * j.f1)
    a = j.f1 + j.f0 * c
    return Moebius(a, j.f0 - zeta * a, c, 1 - zeta * c)


def bma_pole(f, zeta):
    """p(zeta) = zeta + 2 f'/f''; INFINITY when f''(zeta) = 0."""
    zeta = complex(zeta)
    p, _ = f.pre_schwarzian(zeta)
    if not np.isfinite(p):
        raise CriticalPoint(f"f'({zeta}) = 0")
    if p == 0:
        return INFINITY
    return zeta + 2 / p


def bma_poles(f, zetas):
    """Vectorised poles; infinite entries are ``inf``."""
    p, _ = f.pre_schwarzian(np.asarray(zetas, dtype=complex))
    with np.errstate(divide="ignore", invalid="ignore"):
        out = zetas + 2 / p
    return np.where(p == 0, complex(np.inf), out)


@dataclass(frozen=True)
class PoleClassification:
    h: float
    k: float
    cls: str
    collinear: bool
    antipodal: bool
    pole: object = field(default=None)
    identity_residual: float = 0.0


def _class_of(h, tol=MODULUS_TOL):
    if h > tol:
        return "Outside"
    if h < -tol:
        return "Inside"
    return "OnModulusCircle"


def classify_pole(f, zeta):
    """Where the BMA pole sits relative to the circle |z| = |zeta|.

    h + ik = 1 + zeta f''/f'; the pole lies outside, on, or inside that circle
    as h is positive, zero or negative.  ``identity_residual`` is the relative
    residual of |p|^2 - |zeta|^2 = 4 h |zeta|^2 / ((1 - h)^2 + k^2).
    """
    zeta = complex(zeta)
    p_ratio, _ = f.pre_schwarzian(zeta)
    w = 1 + zeta * p_ratio
    h, k = float(w.real), float(w.imag)
    pole = bma_pole(f, zeta)
    resid = 0.0
    if pole is not INFINITY:
        lhs = abs(pole) ** 2 - abs(zeta) ** 2
        rhs = 4 * h * abs(zeta) ** 2 / abs(zeta * p_ratio) ** 2   # = (1 - h)^2 + k^2
        resid = abs(lhs - rhs) / max(1.0, abs(pole) ** 2)
    return PoleClassification(
        h=h, k=k, cls=_class_of(h),
        collinear=abs(k) < COLLINEAR_TOL * (1 + abs(h)),
        antipodal=abs(h) < ANTIPODAL_TOL and abs(k) < ANTIPODAL_TOL,
        pole=pole, identity_residual=resid,
    )


def normalized_pole(h, k, z=1.0):
    """Pole -z (1 + h + ik)/(1 - h - ik) of a BMA at base point z; inf at (1, 0)."""
    w = np.asarray(h) + 1j * np.asarray(k)
    with np.errstate(divide="ignore", invalid="ignore"):
        p = -z * (1 + w) / (1 - w)
    return np.where(w == 1, complex(np.inf), p)


@dataclass
class RegionRaster:
    h: np.ndarray
    k: np.ndarray
    classes: np.ndarray   # +1 outside, 0 on |p| = |z|, -1 inside
    poles: np.ndarray     # normalised pole for base point z = 1
    landmarks: list


def region_sample(resolution, window=(-3.0, 3.0, -3.0, 3.0)):
    """Rasterise the (h, k)-plane into pole classes for base point z = 1."""
    if resolution <= 0:
        raise ValueError("resolution must be positive")
    h0, h1, k0, k1 = window
    h = np.linspace(h0, h1, resolution)
    k = np.linspace(k0, k1, resolution)
    H, K = np.meshgrid(h, k)
    classes = np.sign(H).astype(int)
    landmarks = []
    for name, hh, kk in (("pole at origin", -1.0, 0.0),
                         ("antipodal pole p = -z", 0.0, 0.0),
                         ("perpendicular pole", 0.0, 1.0),
                         ("pole at infinity", 1.0, 0.0)):
        p = complex(normalized_pole(hh, kk))
        landmarks.append({"name": name, "h": hh, "k": kk, "pole": p,
                          "class": _class_of(hh, 0.0)})
    return RegionRaster(h, k, classes, normalized_pole(H, K), landmarks)


@dataclass(frozen=True)
class HalfPlane:
    point: complex
    normal: complex   # inward unit normal
    transform: Moebius

    def contains(self, w, tol=1e-9):
        return np.real((np.asarray(w) - self.point) * np.conj(self.normal)) >= -tol


def supporting_halfplane(f, t, tol=1e-8):
    """Half-plane T(D) for the BMA T at e^{it} on a straight boundary stretch."""
    zeta = np.exp(1j * float(t))
    p, _ = f.pre_schwarzian(zeta)
    h = (1 + zeta * p).real
    if abs(h) > tol:
        raise NotOnStraightEdge(f"boundary curvature {h:.3e} at t = {t}")
    T = bma(f, zeta)
    j = f.jet(zeta)
    return HalfPlane(point=j.f0, normal=-zeta * j.f1 / abs(j.f1), transform=T)
