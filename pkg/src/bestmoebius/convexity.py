"""Convexity/concavity through BMA pole locations, duality and total curvature."""
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from .errors import BadParameter, DenominatorZero
from .maps import dual_map  # noqa: F401  (re-exported: part of this module's surface)


def phi_of(f, zeta):
    """phi = f''/(2f' + z f''), the reciprocal of the BMA pole."""
    p, _ = f.pre_schwarzian(zeta)
    den = 2 + np.asarray(zeta) * p
    if np.any(den == 0):
        raise DenominatorZero("2f' + z f'' = 0: the BMA pole sits at the origin")
    out = p / den
    return complex(out) if np.ndim(out) == 0 else out


def omega_of(g, zeta):
    """omega = (2g' + z g'')/(z^2 g'') for exterior maps; the BMA pole is z^2 omega."""
    z = np.asarray(zeta, dtype=complex)
    if np.any(z == 0):
        raise BadParameter("omega is evaluated off the origin")
    p, _ = g.pre_schwarzian(z)
    if np.any(p == 0):
        raise DenominatorZero("g'' = 0")
    out = (2 + z * p) / (z * z * p)
    return complex(out) if np.ndim(out) == 0 else out


@dataclass
class ShapeReport:
    verdict: str               # Convex, Concave, Neither, Halfplane
    extremal_sample: tuple     # (zeta, |p(zeta)|, |phi| or |omega|)
    grid: tuple                # (n_r, n_t, r_max)
    min_pole: float
    max_pole: float
    weak_violations: int = 0   # concave only: samples with |p| >= 1


def _grid(n_r, n_t, r_max):
    if n_r < 1 or n_t < 1 or not 0 < r_max < 1:
        raise BadParameter("grid needs n_r, n_t >= 1 and 0 < r_max < 1")
    r = r_max * np.arange(1, n_r + 1) / n_r
    th = 2 * np.pi * np.arange(n_t) / n_t
    return (r[:, None] * np.exp(1j * th)[None, :]).ravel()


def convexity_report(f, grid=(50, 128, 0.999), tol=1e-9):
    """Sample BMA poles on a polar grid: convex iff every |p| >= 1."""
    z = _grid(*grid)
    p, _ = f.pre_schwarzian(z)
    with np.errstate(divide="ignore"):
        mod = np.abs(z + 2 / p)
    mod[p == 0] = np.inf
    i = int(np.argmin(mod))
    phi = 1 / mod[i] if np.isfinite(mod[i]) else 0.0
    if mod[i] < 1 - tol:
        verdict = "Neither"
    elif mod[i] <= 1 + tol:
        verdict = "Halfplane"
    else:
        verdict = "Convex"
    return ShapeReport(verdict, (complex(z[i]), float(mod[i]), float(phi)), tuple(grid),
                       float(mod.min()), float(mod.max()))


def concavity_report(g, grid=(50, 128, 0.999), tol=1e-9):
    """Concave iff every |p(zeta)| <= |zeta|^3 (Schwarz lemma applied to omega)."""
    z = _grid(*grid)
    p, _ = g.pre_schwarzian(z)
    with np.errstate(divide="ignore"):
        mod = np.abs(z + 2 / p)
    mod[p == 0] = np.inf
    excess = mod - np.abs(z) ** 3
    i = int(np.argmax(excess))
    verdict = "Concave" if excess[i] <= tol else "Neither"
    omega = mod[i] / abs(z[i]) ** 2
    return ShapeReport(verdict, (complex(z[i]), float(mod[i]), float(omega)), tuple(grid),
                       float(mod.min()), float(mod.max()),
                       weak_violations=int(np.sum(mod >= 1)))


def curvature_density(f, z):
    """Re{1 + z f''/f'} at the points z."""
    p, _ = f.pre_schwarzian(z)
    return np.real(1 + z * p)


def total_curvature(f, r, arc=(0.0, 2 * np.pi), tol=1e-12):
    """Total curvature of the image of {r e^{it}: a < t < b}.

    Concave (exterior) maps integrate |Re{1 + z g''/g'}|.
    """
    if not 0 < r < 1:
        raise BadParameter("radius must lie in (0, 1)")
    a, b = arc

    def density(t):
        v = curvature_density(f, r * np.exp(1j * t))
        return abs(v) if f.exterior else v

    val, err = quad(density, a, b, epsabs=tol, epsrel=tol, limit=400)
    return val
