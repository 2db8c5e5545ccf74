"""Gauss-Legendre / Gauss-Jacobi rules for radial and arc integrals.

Radial integrals run over t in [0, 1] along z = t * zeta.  Every integrand the
package feeds in is analytic in a neighbourhood of the segment except near
t = 1 (singularities sit on the unit circle), so panels are graded
geometrically toward the far endpoint.
"""
from functools import lru_cache

import numpy as np
from scipy.special import roots_jacobi

from .errors import QuadratureFailure

ORDERS = (12, 18, 27, 40)


@lru_cache(maxsize=None)
def _legendre(n):
    x, w = np.polynomial.legendre.leggauss(n)
    return (x + 1) / 2, w / 2


@lru_cache(maxsize=None)
def graded_rule(levels, order):
    """Nodes and weights on [0, 1] for panels [1 - 2**-j, 1 - 2**-(j+1)].

    The last panel closes the interval at 1.
    """
    edges = np.concatenate([1.0 - 2.0 ** -np.arange(levels + 1), [1.0]])
    x, w = _legendre(order)
    lo, hi = edges[:-1], edges[1:]
    t = (lo[:, None] + (hi - lo)[:, None] * x[None, :]).ravel()
    wt = ((hi - lo)[:, None] * w[None, :]).ravel()
    return t, wt


def levels_for_radius(r):
    """Grading depth that resolves a singularity at distance 1 - r beyond the end."""
    gap = max(1.0 - float(r), 2.0 ** -52)
    return int(min(52, max(3, np.ceil(-np.log2(gap)) + 6)))


def ray_integral(func, levels, tol=1e-13, orders=ORDERS):
    """Integrate ``func(t)`` over [0, 1] with graded panels.

    ``func`` maps a 1-D array of nodes to an array whose first axis runs over
    nodes.  Orders increase until two successive estimates agree to ``tol``
    relative to the size of the result.
    """
    prev = None
    for order in orders:
        t, w = graded_rule(levels, order)
        vals = np.tensordot(w, func(t), axes=(0, 0))
        if prev is not None:
            err = np.max(np.abs(vals - prev))
            if err <= tol * max(1.0, float(np.max(np.abs(vals)))):
                return vals
        prev = vals
    raise QuadratureFailure(
        f"graded quadrature did not converge (last change {err:.3e})", achieved=err)


@lru_cache(maxsize=None)
def _jacobi(n, beta):
    # weight (1 - x)**beta on [-1, 1]
    x, w = roots_jacobi(n, beta, 0.0)
    return x, w


def right_singular(func, a, b, beta, tol=1e-13, orders=(16, 24, 36, 54, 80)):
    """Integrate ``(b - t)**beta * H(t)`` over [a, b], where ``func`` returns H."""
    prev = None
    half = (b - a) / 2
    for n in orders:
        x, w = _jacobi(n, float(beta))
        t = a + half * (x + 1)
        val = half ** (beta + 1) * np.tensordot(w, func(t), axes=(0, 0))
        if prev is not None:
            err = np.max(np.abs(val - prev))
            if err <= tol * max(1.0, float(np.max(np.abs(val)))):
                return val
        prev = val
    raise QuadratureFailure(
        f"Gauss-Jacobi quadrature did not converge (last change {err:.3e})", achieved=err)


def left_singular(func, a, b, beta, **kw):
    """Integrate ``(t - a)**beta * H(t)`` over [a, b], where ``func`` returns H."""
    return right_singular(lambda s: func(a + b - s), a, b, beta, **kw)


def arc_integral(func, ta, tb, beta_a, beta_b, tol=1e-12):
    """Integrate ``func`` over [ta, tb] where it behaves like |t - end|**beta at the ends.

    The interval is split at its midpoint and each half uses a Gauss-Jacobi
    rule absorbing the endpoint power.
    """
    mid = (ta + tb) / 2
    left = left_singular(lambda t: func(t) / (t - ta) ** beta_a, ta, mid, beta_a, tol=tol)
    right = right_singular(lambda t: func(t) / (tb - t) ** beta_b, mid, tb, beta_b, tol=tol)
    return left + right


def interval_integral(func, a, b, tol=1e-13, panels=4, orders=ORDERS):
    """Composite Gauss-Legendre on [a, b] for integrands analytic near the interval."""
    prev = None
    for order in orders:
        x, w = _legendre(order)
        edges = np.linspace(a, b, panels + 1)
        lo, hi = edges[:-1], edges[1:]
        t = (lo[:, None] + (hi - lo)[:, None] * x[None, :]).ravel()
        wt = ((hi - lo)[:, None] * w[None, :]).ravel()
        val = np.tensordot(wt, func(t), axes=(0, 0))
        if prev is not None:
            err = np.max(np.abs(val - prev))
            if err <= tol * max(1.0, float(np.max(np.abs(val)))):
                return val
        prev = val
    raise QuadratureFailure(
        f"Gauss-Legendre quadrature did not converge (last change {err:.3e})", achieved=err)
