"""Pure-Python elliptic kernels.

Carlson duplication for R_F, R_C, R_D, R_J and the descending Landen
recursion for sn, cn, dn.  Used when the compiled ``_ckernel`` extension is
not importable, and as the reference the extension is tested against.

Inputs are assumed validated by :mod:`genjac.elliptic`.
"""

import math

import numpy as np

NAME = "python"

# Carlson stopping tolerances, see Carlson (1995), Numer. Algorithms 10.
_RF_Q = (3.0 * 2.0 ** -53) ** (-1.0 / 6.0)
_RC_Q = (3.0 * 2.0 ** -53) ** (-1.0 / 8.0)
_RD_Q = (0.25 * 2.0 ** -53) ** (-1.0 / 6.0)

_LANDEN_STOP = 1e-9
_LANDEN_MAX = 40


def rf(x, y, z):
    x0, y0 = x, y
    a0 = (x + y + z) / 3.0
    q = _RF_Q * max(abs(a0 - x), abs(a0 - y), abs(a0 - z))
    a = a0
    f = 1.0
    while f * q >= abs(a):
        sx, sy, sz = math.sqrt(x), math.sqrt(y), math.sqrt(z)
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
            - 3.0 * e2 * e3 / 44.0) / math.sqrt(a)


def rc(x, y):
    if y < 0.0:
        # Cauchy principal value
        return math.sqrt(x / (x - y)) * rc(x - y, -y)
    a0 = (x + 2.0 * y) / 3.0
    q = _RC_Q * abs(a0 - x)
    a = a0
    f = 1.0
    while f * q >= abs(a):
        lam = 2.0 * math.sqrt(x) * math.sqrt(y) + y
        x = 0.25 * (x + lam)
        y = 0.25 * (y + lam)
        a = 0.25 * (a + lam)
        f *= 0.25
    s = (y - a) / a
    return (1.0 + s * s * (0.3 + s * (1.0 / 7.0 + s * (0.375 + s * (9.0 / 22.0
            + s * (159.0 / 208.0 + s * 9.0 / 8.0)))))) / math.sqrt(a)


def rd(x, y, z):
    x0, y0 = x, y
    a0 = (x + y + 3.0 * z) / 5.0
    q = _RD_Q * max(abs(a0 - x), abs(a0 - y), abs(a0 - z))
    a = a0
    f = 1.0
    acc = 0.0
    while f * q >= abs(a):
        sx, sy, sz = math.sqrt(x), math.sqrt(y), math.sqrt(z)
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
    series = (1.0 - 3.0 * e2 / 14.0 + e3 / 6.0 + 9.0 * e2 * e2 / 88.0
              - 3.0 * e4 / 22.0 - 9.0 * e2 * e3 / 52.0 + 3.0 * e5 / 26.0)
    return f * series / (a * math.sqrt(a)) + 3.0 * acc


def rj(x, y, z, p):
    x0, y0, z0 = x, y, z
    a0 = (x + y + z + 2.0 * p) / 5.0
    delta = (p - x) * (p - y) * (p - z)
    q = _RD_Q * max(abs(a0 - x), abs(a0 - y), abs(a0 - z), abs(a0 - p))
    a = a0
    f = 1.0
    f3 = 1.0
    acc = 0.0
    while f * q >= abs(a):
        sx, sy, sz, sp = math.sqrt(x), math.sqrt(y), math.sqrt(z), math.sqrt(p)
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
    series = (1.0 - 3.0 * e2 / 14.0 + e3 / 6.0 + 9.0 * e2 * e2 / 88.0
              - 3.0 * e4 / 22.0 - 9.0 * e2 * e3 / 52.0 + 3.0 * e5 / 26.0)
    return f * series / (a * math.sqrt(a)) + 6.0 * acc


def _landen_moduli(m, mc):
    """Descending Landen moduli k_1, k_2, ... until the modulus vanishes."""
    k = math.sqrt(m)
    kc = math.sqrt(mc)
    ks = []
    while k > _LANDEN_STOP and len(ks) < _LANDEN_MAX:
        k = (k / (1.0 + kc)) ** 2
        kc = 2.0 * math.sqrt(kc) / (1.0 + kc)
        ks.append(k)
    return ks, k * k


def sncndn(u, m, mc):
    """sn, cn, dn for 0 <= m <= 1 given both m and mc = 1 - m."""
    if mc == 0.0:
        e = math.exp(-abs(u))
        s = 2.0 * e / (1.0 + e * e)
        return math.tanh(u), s, s
    ks, m_last = _landen_moduli(m, mc)
    w = u
    for k in ks:
        w /= 1.0 + k
    sn = math.sin(w)
    cn = math.cos(w)
    dn = math.sqrt(1.0 - m_last * sn * sn)
    for k in reversed(ks):
        s2 = sn * sn
        den = 1.0 + k * s2
        sn = (1.0 + k) * sn / den
        cn = cn * dn / den
        dn = (1.0 - k * s2) / den
    return sn, cn, dn


def sncndn_array(u, m, mc):
    u = np.asarray(u, dtype=float)
    if mc == 0.0:
        e = np.exp(-np.abs(u))
        s = 2.0 * e / (1.0 + e * e)
        return np.tanh(u), s, s.copy()
    ks, m_last = _landen_moduli(m, mc)
    w = u
    for k in ks:
        w = w / (1.0 + k)
    sn = np.sin(w)
    cn = np.cos(w)
    dn = np.sqrt(1.0 - m_last * sn * sn)
    for k in reversed(ks):
        s2 = sn * sn
        den = 1.0 + k * s2
        sn = (1.0 + k) * sn / den
        cn = cn * dn / den
        dn = (1.0 - k * s2) / den
    return sn, cn, dn
