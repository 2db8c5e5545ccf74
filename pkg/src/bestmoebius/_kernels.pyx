# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot kernels; see ``_kernels_py`` for the reference."""
import numpy as np

cdef extern from "math.h" nogil:
    double log(double)
    double atan2(double, double)

cdef extern from "complex.h" nogil:
    double complex conj(double complex)
    double creal(double complex)
    double cimag(double complex)


cdef inline double complex _log1m(double complex w, double complex u) nogil:
    # log(1 - w) with u = 1 - w, accurate for small |w|
    if creal(w) * creal(w) + cimag(w) * cimag(w) < 1e-8:
        # series: -(w + w^2/2 + w^3/3 + w^4/4 + w^5/5)
        return -w * (1.0 + w * (0.5 + w * (1.0 / 3.0 + w * (0.25 + w * 0.2))))
    cdef double x = creal(u), y = cimag(u)
    return 0.5 * log(x * x + y * y) + 1j * atan2(y, x)


def sc_log_derivatives(z, conj_prevertices, alphas):
    cdef double complex[::1] zv = np.ascontiguousarray(z, dtype=np.complex128)
    cdef double complex[::1] cv = np.ascontiguousarray(conj_prevertices, dtype=np.complex128)
    cdef double[::1] av = np.ascontiguousarray(alphas, dtype=np.float64)
    cdef Py_ssize_t n = zv.shape[0], m = cv.shape[0], i, k
    out0 = np.empty(n, dtype=np.complex128)
    out1 = np.empty(n, dtype=np.complex128)
    out2 = np.empty(n, dtype=np.complex128)
    cdef double complex[::1] o0 = out0, o1 = out1, o2 = out2
    cdef double complex s0, s1, s2, cz, u, r
    with nogil:
        for i in range(n):
            s0 = 0
            s1 = 0
            s2 = 0
            for k in range(m):
                cz = cv[k] * zv[i]
                u = 1.0 - cz
                r = cv[k] * (conj(u) / (creal(u) * creal(u) + cimag(u) * cimag(u)))
                s0 = s0 - av[k] * _log1m(cz, u)
                s1 = s1 + av[k] * r
                s2 = s2 + av[k] * r * r
            o0[i] = s0
            o1[i] = s1
            o2[i] = s2
    return out0, out1, out2


def blaschke_jet(z, zeros, rotation):
    cdef double complex[::1] zv = np.ascontiguousarray(z, dtype=np.complex128)
    cdef double complex[::1] av = np.ascontiguousarray(zeros, dtype=np.complex128)
    cdef double complex rot = rotation
    cdef Py_ssize_t n = zv.shape[0], m = av.shape[0], i, j
    out0 = np.empty(n, dtype=np.complex128)
    out1 = np.empty(n, dtype=np.complex128)
    out2 = np.empty(n, dtype=np.complex128)
    out3 = np.empty(n, dtype=np.complex128)
    cdef double complex[::1] o0 = out0, o1 = out1, o2 = out2, o3 = out3
    cdef double complex b0, b1, b2, b3, n0, n1, n2, n3
    cdef double complex a, ac, den, m0, m1, m2, m3, zi
    cdef double k
    with nogil:
        for i in range(n):
            zi = zv[i]
            b0 = rot
            b1 = 0
            b2 = 0
            b3 = 0
            for j in range(m):
                a = av[j]
                ac = conj(a)
                den = 1.0 - ac * zi
                k = 1.0 - (creal(a) * creal(a) + cimag(a) * cimag(a))
                m0 = (zi - a) / den
                m1 = k / (den * den)
                m2 = 2.0 * ac * k / (den * den * den)
                m3 = 6.0 * ac * ac * k / (den * den * den * den)
                n0 = b0 * m0
                n1 = b1 * m0 + b0 * m1
                n2 = b2 * m0 + 2.0 * b1 * m1 + b0 * m2
                n3 = b3 * m0 + 3.0 * b2 * m1 + 3.0 * b1 * m2 + b0 * m3
                b0 = n0
                b1 = n1
                b2 = n2
                b3 = n3
            o0[i] = b0
            o1[i] = b1
            o2[i] = b2
            o3[i] = b3
    return out0, out1, out2, out3
