"""Finite Blaschke products and the circle equations z B(z) = +-1."""
import numpy as np

from . import _backend
from .errors import BadParameter, ConvergenceFailure
from .jets import Jet3

TWO_PI = 2 * np.pi


class BlaschkeProduct:
    """rotation * prod_j (z - a_j)/(1 - conj(a_j) z), repeated zeros allowed."""

    def __init__(self, zeros=(), rotation=1.0):
        self.zeros = np.asarray(zeros, dtype=complex).ravel()
        if np.any(np.abs(self.zeros) >= 1):
            raise BadParameter("Blaschke zeros must lie in the open unit disk")
        rotation = complex(rotation)
        if abs(abs(rotation) - 1) > 1e-12:
            raise BadParameter("rotation must be unimodular")
        self.rotation = rotation

    @property
    def degree(self):
        return len(self.zeros)

    def jets(self, z):
        """(B, B', B'', B''') at an array of points."""
        z = np.atleast_1d(np.asarray(z, dtype=complex))
        return _backend.blaschke_jet(z.ravel(), self.zeros, self.rotation)

    def jet(self, z):
        scalar = np.ndim(z) == 0
        parts = self.jets(z)
        if scalar:
            return Jet3(*(complex(p[0]) for p in parts))
        return Jet3(*(p.reshape(np.shape(z)) for p in parts))

    def __call__(self, z):
        scalar = np.ndim(z) == 0
        b = self.jets(z)[0]
        return complex(b[0]) if scalar else b.reshape(np.shape(z))

    def boundary_log_derivative(self, t, check=True):
        """zB'(z)/B(z) at z = e^{it}; real, positive and equal to |B'(z)|."""
        z = np.exp(1j * np.asarray(t, dtype=float))
        b0, b1, _, _ = self.jets(z)
        v = (z.ravel() * b1 / b0).reshape(np.shape(z))
        if check:
            assert np.all(np.abs(v.imag) < 1e-10 * (1 + np.abs(v))), "corrupted Blaschke product"
            if self.degree:
                assert np.all(v.real > 0), "corrupted Blaschke product"
        return float(v.real) if np.ndim(v) == 0 else v.real

    def argument(self, t):
        """Continuous argument of e^{it} B(e^{it}), strictly increasing in t."""
        t = np.asarray(t, dtype=float)
        z = np.exp(1j * t)
        theta = (self.degree + 1) * t + np.angle(self.rotation)
        for a in self.zeros:
            theta = theta - 2 * np.angle(1 - np.conj(a) * z)
        return theta

    def __repr__(self):
        return f"BlaschkeProduct(zeros={self.zeros.tolist()}, rotation={self.rotation})"


def blaschke_jet(B, zeta):
    return B.jet(zeta)


def boundary_log_derivative(B, t):
    return B.boundary_log_derivative(t)


def circle_level_roots(B, target=1, max_iter=200):
    """All t in [0, 2 pi) with e^{it} B(e^{it}) = target (target = +1 or -1).

    The argument of zB is continuous and strictly increasing with slope
    1 + |B'|, so each root is bracketed and found by bisection, then polished
    by a few Newton steps.
    """
    if target not in (1, -1):
        raise BadParameter("target must be +1 or -1")
    level = 0.0 if target == 1 else np.pi
    n = B.degree + 1
    start = B.argument(0.0)
    m0 = int(np.ceil((start - level) / TWO_PI - 1e-15))
    roots = []
    for m in range(m0, m0 + n):
        goal = level + TWO_PI * m
        lo, hi = 0.0, TWO_PI
        if abs(B.argument(lo) - goal) < 1e-15:
            roots.append(0.0)
            continue
        for _ in range(max_iter):
            mid = 0.5 * (lo + hi)
            if B.argument(mid) < goal:
                lo = mid
            else:
                hi = mid
            if hi - lo < 1e-13:
                break
        else:
            raise ConvergenceFailure("bisection exceeded its iteration cap")
        t = 0.5 * (lo + hi)
        for _ in range(3):
            slope = 1 + B.boundary_log_derivative(t, check=False)
            t -= (B.argument(t) - goal) / slope
        t = float(np.mod(t, TWO_PI))
        roots.append(0.0 if TWO_PI - t < 1e-12 else t)
    roots = np.sort(np.asarray(roots))
    z = np.exp(1j * roots)
    resid = np.max(np.abs(z * B(z) - target))
    if resid > 1e-12:
        raise ConvergenceFailure(f"root residual {resid:.2e}")
    return roots


def boundary_alphas(B, angles):
    """Exterior angles (times pi) 2/(1 + |B'(z_k)|) at the roots of zB = 1."""
    return 2.0 / (1.0 + B.boundary_log_derivative(np.asarray(angles)))
