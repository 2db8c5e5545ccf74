"""Third-order truncated Taylor arithmetic over complex numbers.

A :class:`Jet3` stores a value and its first three derivatives at a point.
Fields may be Python scalars or numpy arrays of matching shape, in which case
every operation acts elementwise.
"""
from dataclasses import dataclass

import numpy as np

from .errors import BranchCut, DivisionByZero, JetMismatch

__all__ = [
    "Jet3", "variable", "constant", "jet_combine", "jet_compose",
    "jexp", "jlog", "jpow", "reciprocal",
]


@dataclass(frozen=True)
class Jet3:
    f0: complex
    f1: complex
    f2: complex
    f3: complex

    def __iter__(self):
        return iter((self.f0, self.f1, self.f2, self.f3))

    def __add__(self, other):
        other = _lift(other)
        return Jet3(self.f0 + other.f0, self.f1 + other.f1,
                    self.f2 + other.f2, self.f3 + other.f3)

    __radd__ = __add__

    def __neg__(self):
        return Jet3(-self.f0, -self.f1, -self.f2, -self.f3)

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        if np.isscalar(other) or isinstance(other, np.ndarray):
            return Jet3(self.f0 * other, self.f1 * other,
                        self.f2 * other, self.f3 * other)
        x, y = self, other
        return Jet3(
            x.f0 * y.f0,
            x.f1 * y.f0 + x.f0 * y.f1,
            x.f2 * y.f0 + 2 * x.f1 * y.f1 + x.f0 * y.f2,
            x.f3 * y.f0 + 3 * x.f2 * y.f1 + 3 * x.f1 * y.f2 + x.f0 * y.f3,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * reciprocal(_lift(other))

    def __rtruediv__(self, other):
        return _lift(other) * reciprocal(self)

    def taylor(self, h):
        """Evaluate the cubic Taylor polynomial at offset ``h``."""
        return self.f0 + h * (self.f1 + h * (self.f2 / 2 + h * self.f3 / 6))

    def allclose(self, other, rtol=1e-12, atol=0.0):
        return all(np.allclose(a, b, rtol=rtol, atol=atol) for a, b in zip(self, other))


def variable(z):
    """Jet of the identity map at ``z``."""
    z = np.asarray(z, dtype=complex) if isinstance(z, np.ndarray) else complex(z)
    zero = z * 0
    return Jet3(z, zero + 1, zero, zero)


def constant(c):
    zero = c * 0
    return Jet3(c, zero, zero, zero)


def _lift(x):
    return x if isinstance(x, Jet3) else constant(x)


def _outer(x, g0, g1, g2, g3):
    """Compose the scalar derivatives g_k (evaluated at x.f0) with jet x."""
    return Jet3(
        g0,
        g1 * x.f1,
        g2 * x.f1**2 + g1 * x.f2,
        g3 * x.f1**3 + 3 * g2 * x.f1 * x.f2 + g1 * x.f3,
    )


def reciprocal(x):
    w = x.f0
    if np.any(w == 0):
        raise DivisionByZero("jet division by a jet with zero value")
    r = 1 / w
    return _outer(x, r, -r**2, 2 * r**3, -6 * r**4)


def jexp(x):
    e = np.exp(x.f0)
    return _outer(x, e, e, e, e)


def _check_cut(w):
    w = np.asarray(w)
    if np.any((w.imag == 0) & (w.real <= 0)):
        raise BranchCut("principal logarithm undefined on (-inf, 0]")


def jlog(x):
    _check_cut(x.f0)
    w = x.f0
    r = 1 / w
    return _outer(x, np.log(w), r, -r**2, 2 * r**3)


def jpow(x, r):
    """Principal real power x**r."""
    _check_cut(x.f0)
    w = x.f0
    p = w**r
    return _outer(x, p, r * p / w, r * (r - 1) * p / w**2,
                  r * (r - 1) * (r - 2) * p / w**3)


_BINARY = {
    "add": lambda x, y: x + y,
    "mul": lambda x, y: x * y,
    "div": lambda x, y: x / y,
}
_UNARY = {"exp": jexp, "log": jlog}


def jet_combine(op, x, y=None):
    """Combine jets with one of add, mul, div, exp, log, pow_real.

    For ``pow_real`` the second argument is the real exponent.
    """
    if op in _BINARY:
        return _BINARY[op](x, y)
    if op in _UNARY:
        return _UNARY[op](x)
    if op == "pow_real":
        return jpow(x, float(y))
    raise ValueError(f"unknown jet operation {op!r}")


def jet_compose(outer, inner, anchor=None, atol=1e-12):
    """Jet of g o f from the jet of g at f(z) and the jet of f at z.

    ``anchor`` is the point at which ``outer`` was taken; when given it must
    coincide with ``inner.f0``.
    """
    if anchor is not None:
        scale = 1 + np.max(np.abs(inner.f0))
        if np.max(np.abs(np.asarray(anchor) - inner.f0)) > atol * scale:
            raise JetMismatch("outer jet is not anchored at inner.f0")
    return _outer(inner, outer.f0, outer.f1, outer.f2, outer.f3)
