import math

import numpy as np
from hypothesis import HealthCheck, settings

settings.register_profile("bestmoebius", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("bestmoebius")


def cauchy_derivatives(func, z, rho=0.05, n=96):
    """Derivatives 0..3 of an analytic ``func`` at ``z`` from the trapezoid rule on a circle.

    Independent of any jet arithmetic: only values of ``func`` are used.
    """
    theta = 2 * np.pi * np.arange(n) / n
    w = np.exp(1j * theta)
    vals = np.asarray(func(z + rho * w))
    out = []
    for k in range(4):
        out.append(math.factorial(k) * np.mean(vals * w ** (-k)) / rho**k)
    return np.array(out)
