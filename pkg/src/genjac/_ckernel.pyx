# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled elliptic kernels, same contract as ``genjac._pykernel``."""

from libc.math cimport sqrt, sin, cos, tanh, exp, fabs

import numpy as np

NAME = "cython"

cdef double _EPS = 2.0 ** -53
cdef double _RF_Q = (3.0 * _EPS) ** (-1.0 / 6.0)
cdef double _RC_Q = (3.0 * _EPS) ** (-1.0 / 8.0)
cdef double _RD_Q = (0.25 * _EPS) ** (-1.0 / 6.0)

cdef enum:
    LANDEN_MAX = 40
cdef double _LANDEN_STOP = 1e-9


cdef inline double _max3(double a, double b, double c) noexcept nogil:
    if b > a:
        a = b
    if c > a:
        a = c
    return a


cpdef double rf(double x, double y, double z):
    cdef double x0 = x, y0 = y
    cdef double a0 = (x + y + z) / 3.0
    cdef double q = _RF_Q * _max3(fabs(a0 - x), fabs(a0 - y), fabs(a0 - z))
    cdef double a = a0, f = 1.0, sx, sy, sz, lam
    cdef double X, Y, Z, e2, e3
    while f * q >= fabs(a):
        sx = sqrt(x)
        sy = sqrt(y)
        sz = sqrt(z)
        lam = sx * sy + sy * sz + sz * sx
        x = 0.25 * (x + lam)
        y = 0.25 * (y + lam)
        z = 0.25 * (z + lam)
        a = 0.25 * (a + lam)
        f *= 0.25
    X = f * (a0 - x0) / a
    Y = f * (a0 - y0) / a
    Z = -(X + Y)
    e2 = X * Y - Z * Z
    e3 = X * Y * Z
    return (1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0
            - 3.0 * e2 * e3 / 44.0) / sqrt(a)


cpdef double rc(double x, double y):
    cdef double a0, q, a, f, lam, s
    if y < 0.0:
        return sqrt(x / (x - y)) * rc(x - y, -y)
    a0 = (x + 2.0 * y) / 3.0
    q = _RC_Q * fabs(a0 - x)
    a = a0
    f = 1.0
    while f * q >= fabs(a):
        lam = 2.0 * sqrt(x) * sqrt(y) + y
        x = 0.25 * (x + lam)
        y = 0.25 * (y + lam)
        a = 0.25 * (a + lam)
        f *= 0.25
    s = (y - a) / a
    return (1.0 + s * s * (0.3 + s * (1.0 / 7.0 + s * (0.375 + s * (9.0 / 22.0
            + s * (159.0 / 208.0 + s * 9.0 / 8.0)))))) / sqrt(a)


cdef inline double _tail(double e2, double e3, double e4, double e5) noexcept nogil:
    return (1.0 - 3.0 * e2 / 14.0 + e3 / 6.0 + 9.0 * e2 * e2 / 88.0
            - 3.0 * e4 / 22.0 - 9.0 * e2 * e3 / 52.0 + 3.0 * e5 / 26.0)


cpdef double rd(double x, double y, double z):
    cdef double x0 = x, y0 = y
    cdef double a0 = (x + y + 3.0 * z) / 5.0
    cdef double q = _RD_Q * _max3(fabs(a0 - x), fabs(a0 - y), fabs(a0 - z))
    cdef double a = a0, f = 1.0, acc = 0.0, sx, sy, sz, lam
    cdef double X, Y, Z, e2, e3, e4, e5
    while f * q >= fabs(a):
        sx = sqrt(x)
        sy = sqrt(y)
        sz = sqrt(z)
        lam = sx * sy + sy * sz + sz * sx
        acc += f / (sz * (z + lam))
        x = 0.25 * (x + lam)
        y = 0.25 * (y + lam)
        z = 0.25 * (z + lam)
        a = 0.25 * (a + lam)
        f *= 0.25
    X = f * (a0 - x0) / a
    Y = f * (a0 - y0) / a
    Z = -(X + Y) / 3.0
    e2 = X * Y - 6.0 * Z * Z
    e3 = (3.0 * X * Y - 8.0 * Z * Z) * Z
    e4 = 3.0 * (X * Y - Z * Z) * Z * Z
    e5 = X * Y * Z * Z * Z
    return f * _tail(e2, e3, e4, e5) / (a * sqrt(a)) + 3.0 * acc


cpdef double rj(double x, double y, double z, double p):
    cdef double x0 = x, y0 = y, z0 = z
    cdef double a0 = (x + y + z + 2.0 * p) / 5.0
    cdef double delta = (p - x) * (p - y) * (p - z)
    cdef double q = _RD_Q * _max3(_max3(fabs(a0 - x), fabs(a0 - y), fabs(a0 - z)),
                                  fabs(a0 - p), 0.0)
    cdef double a = a0, f = 1.0, f3 = 1.0, acc = 0.0
    cdef double sx, sy, sz, sp, lam, d, e
    cdef double X, Y, Z, P, e2, e3, e4, e5
    while f * q >= fabs(a):
        sx = sqrt(x)
        sy = sqrt(y)
        sz = sqrt(z)
        sp = sqrt(p)
        lam = sx * sy + sy * sz + sz * sx
        d = (sp + sx) * (sp + sy) * (sp + sz)
        e = f3 * delta / (d * d)
        acc += f / d * rc(1.0, 1.0 + e)
        x = 0.25 * (x + lam)
        y = 0.25 * (y + lam)
        z = 0.25 * (z + lam)
        p = 0.25 * (p + lam)
        a = 0.25 * (a + lam)
        f *= 0.25
        f3 *= 1.0 / 64.0
    X = f * (a0 - x0) / a
    Y = f * (a0 - y0) / a
    Z = f * (a0 - z0) / a
    P = -(X + Y + Z) / 2.0
    e2 = X * Y + X * Z + Y * Z - 3.0 * P * P
    e3 = X * Y * Z + 2.0 * e2 * P + 4.0 * P * P * P
    e4 = (2.0 * X * Y * Z + e2 * P + 3.0 * P * P * P) * P
    e5 = X * Y * Z * P * P
    return f * _tail(e2, e3, e4, e5) / (a * sqrt(a)) + 6.0 * acc


cdef int _landen_moduli(double m, double mc, double* ks, double* m_last) noexcept nogil:
    cdef double k = sqrt(m), kc = sqrt(mc)
    cdef int n = 0
    while k > _LANDEN_STOP and n < LANDEN_MAX:
        k = (k / (1.0 + kc)) * (k / (1.0 + kc))
        kc = 2.0 * sqrt(kc) / (1.0 + kc)
        ks[n] = k
        n += 1
    m_last[0] = k * k
    return n


cdef inline void _sncndn(double u, double mc, double* ks, int n, double m_last,
                         double* sn, double* cn, double* dn) noexcept nogil:
    cdef double w = u, s, c, d, s2, den, k, e
    cdef int i
    if mc == 0.0:
        e = exp(-fabs(u))
        sn[0] = tanh(u)
        cn[0] = 2.0 * e / (1.0 + e * e)
        dn[0] = cn[0]
        return
    for i in range(n):
        w /= 1.0 + ks[i]
    s = sin(w)
    c = cos(w)
    d = sqrt(1.0 - m_last * s * s)
    for i in range(n - 1, -1, -1):
        k = ks[i]
        s2 = s * s
        den = 1.0 / (1.0 + k * s2)
        s = (1.0 + k) * s * den
        c = c * d * den
        d = (1.0 - k * s2) * den
    sn[0] = s
    cn[0] = c
    dn[0] = d


def sncndn(double u, double m, double mc):
    """sn, cn, dn for 0 <= m <= 1 given both m and mc = 1 - m."""
    cdef double ks[LANDEN_MAX]
    cdef double m_last, s, c, d
    cdef int n = _landen_moduli(m, mc, ks, &m_last)
    _sncndn(u, mc, ks, n, m_last, &s, &c, &d)
    return s, c, d


def sncndn_array(u, double m, double mc):
    shape = np.shape(u)
    ua = np.ascontiguousarray(u, dtype=np.float64).ravel()
    cdef double ks[LANDEN_MAX]
    cdef double m_last
    cdef int n = _landen_moduli(m, mc, ks, &m_last)
    cdef int j
    if mc == 0.0:
        e = np.exp(-np.abs(ua))
        sech = 2.0 * e / (1.0 + e * e)
        return np.tanh(ua).reshape(shape), sech.reshape(shape), sech.copy().reshape(shape)
    # vectorised sin/cos beat a scalar libm loop; the ascent runs compiled
    w = ua
    for j in range(n):
        w = w / (1.0 + ks[j])
    out_s = np.sin(w)
    out_c = np.cos(w)
    out_d = np.empty_like(out_s)
    cdef double[::1] sv = out_s, cv = out_c, dv = out_d
    cdef Py_ssize_t i, size = sv.shape[0]
    cdef double s, c, d, s2, den, k
    with nogil:
        for i in range(size):
            s = sv[i]
            c = cv[i]
            d = sqrt(1.0 - m_last * s * s)
            for j in range(n - 1, -1, -1):
                k = ks[j]
                s2 = s * s
                den = 1.0 / (1.0 + k * s2)
                s = (1.0 + k) * s * den
                c = c * d * den
                d = (1.0 - k * s2) * den
            sv[i] = s
            cv[i] = c
            dv[i] = d
    return out_s.reshape(shape), out_c.reshape(shape), out_d.reshape(shape)
