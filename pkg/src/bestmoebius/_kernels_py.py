"""Pure numpy versions of the hot kernels (fallback for ``_kernels``)."""
import numpy as np


def sc_log_derivatives(z, conj_prevertices, alphas):
    """Return (l, l', l'') for l(z) = -sum_k alpha_k log(1 - c_k z)."""
    z = np.ascontiguousarray(z, dtype=np.complex128)
    c = np.asarray(conj_prevertices, dtype=np.complex128)
    al = np.asarray(alphas, dtype=np.float64)
    cz = z[:, None] * c[None, :]
    ell = -(np.log1p(-cz) * al).sum(axis=1)
    r = c[None, :] / (1.0 - cz)
    d1 = (al * r).sum(axis=1)
    d2 = (al * r * r).sum(axis=1)
    return ell, d1, d2


def blaschke_jet(z, zeros, rotation):
    """Value and first three derivatives of rotation * prod (z - a)/(1 - conj(a) z)."""
    z = np.ascontiguousarray(z, dtype=np.complex128)
    b0 = np.full(z.shape, complex(rotation), dtype=np.complex128)
    b1 = np.zeros_like(b0)
    b2 = np.zeros_like(b0)
    b3 = np.zeros_like(b0)
    for a in np.asarray(zeros, dtype=np.complex128):
        ac = np.conj(a)
        den = 1.0 - ac * z
        k = 1.0 - (a * ac).real
        m0 = (z - a) / den
        m1 = k / den**2
        m2 = 2.0 * ac * k / den**3
        m3 = 6.0 * ac * ac * k / den**4
        b0, b1, b2, b3 = (
            b0 * m0,
            b1 * m0 + b0 * m1,
            b2 * m0 + 2.0 * b1 * m1 + b0 * m2,
            b3 * m0 + 3.0 * b2 * m1 + 3.0 * b1 * m2 + b0 * m3,
        )
    return b0, b1, b2, b3
