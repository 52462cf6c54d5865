"""Generalized Jacobi elliptic functions s, c, d1, d2 with two moduli.

For ``0 <= k2 <= k1 < 1`` the function ``s(u)`` inverts

    u = int_0^s dt / sqrt((1 - t^2)(1 - k1^2 t^2)(1 - k2^2 t^2)),

and the companions are ``c = sqrt(1 - s^2)``, ``d1 = sqrt(1 - k1^2 s^2)``,
``d2 = sqrt(1 - k2^2 s^2)`` continued through the zeros of ``c``.  All four
are rational expressions in classical sn, cn, dn of argument ``w = k2' u``
and parameter ``kappa^2 = (k1^2 - k2^2) / (1 - k2^2)``:

    D  = sqrt(k2'^2 + k2^2 sn^2)
    s  = sn / D,  c = k2' cn / D,  d1 = k2' dn / D,  d2 = k2' / D

which is what :func:`evaluate` computes.  This form stays finite at the
trigonometric point ``k1 = k2`` and reduces to (sn, cn, dn, 1) at ``k2 = 0``.
"""

import enum
import math
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np
from scipy import integrate

from genjac import elliptic as ell
from genjac.errors import BranchError, DomainError, NumericError, PoleError

__all__ = [
    "Moduli",
    "GenJacobiValues",
    "SpecialPoint",
    "Fn",
    "Integrand",
    "moduli_new",
    "evaluate",
    "amplitude",
    "add",
    "half",
    "shift_K",
    "special_value",
    "ratio",
    "integrand",
    "antiderivative",
    "defining_integral",
]

# relative size below which the half-argument d1, d2 forms lose too many digits
_HALF_KAPPA2_MIN = 1e-3
_TINY = 1e-300
_FLUSH = 1e-150


class GenJacobiValues(NamedTuple):
    s: float
    c: float
    d1: float
    d2: float


@dataclass(frozen=True)
class Moduli:
    """The moduli pair and everything derived from it.

    Construct with :func:`moduli_new`, which validates ``0 <= k2 <= k1 <= 1``.
    ``kappac2`` is ``1 - kappa2`` computed without cancellation.
    """

    k1: float
    k2: float
    kappa2: float = field(init=False)
    kappac2: float = field(init=False)
    k1c: float = field(init=False)
    k2c: float = field(init=False)
    calK: float = field(init=False)
    calKc: float = field(init=False)

    def __post_init__(self):
        k1, k2 = self.k1, self.k2
        k1c2 = (1.0 - k1) * (1.0 + k1)
        k2c2 = (1.0 - k2) * (1.0 + k2)
        kappa2 = (k1 - k2) * (k1 + k2) / k2c2
        kappac2 = k1c2 / k2c2
        k2c = math.sqrt(k2c2)
        calK = ell.complete_k(kappa2, kappac2) / k2c
        # K' of the complementary parameter, scaled like calK
        calKc = ell.complete_k(kappac2, kappa2) / k2c
        for name, val in (("kappa2", kappa2), ("kappac2", kappac2),
                          ("k1c", math.sqrt(k1c2)), ("k2c", k2c),
                          ("calK", calK), ("calKc", calKc)):
            object.__setattr__(self, name, val)

    @property
    def trigonometric(self):
        """k1 == k2: all functions are trigonometric."""
        return self.kappa2 == 0.0

    @property
    def hyperbolic(self):
        """k1 == 1: the real period is infinite."""
        return math.isinf(self.calK)


def moduli_new(k1, k2):
    """Validated :class:`Moduli` for ``0 <= k2 <= k1 <= 1``.

    Moduli below 1e-150 are replaced by 0.
    """
    k1, k2 = float(k1), float(k2)
    if not (0.0 <= k2 <= k1 <= 1.0):
        raise DomainError(f"need 0 <= k2 <= k1 <= 1, got k1={k1}, k2={k2}")
    if k2 == 1.0:
        raise DomainError("k2 = 1 leaves no real period")
    # below this the squares vanish against 1 and products like k * t lose
    # their relative precision, so the k = 0 forms are exact
    k1 = 0.0 if k1 < _FLUSH else k1
    k2 = 0.0 if k2 < _FLUSH else k2
    return Moduli(k1, k2)


def _need_finite(mod):
    if mod.hyperbolic:
        raise DomainError("k1 = 1 has no finite period; use the dsg limits")


def _classic(w, mod):
    return ell.jacobi_scd(w, mod.kappa2, mod.kappac2)


def evaluate(u, mod):
    """(s, c, d1, d2) at ``u``; arrays are accepted."""
    _need_finite(mod)
    k2c, k2 = mod.k2c, mod.k2
    sn, cn, dn = _classic(np.multiply(k2c, u), mod)
    big_d = np.sqrt(k2c * k2c + (k2 * sn) ** 2)
    return GenJacobiValues(sn / big_d, k2c * cn / big_d, k2c * dn / big_d, k2c / big_d)


def amplitude(u, mod):
    """Unwrapped amplitude a(u): sin a = s, a(u + 2 calK) = a(u) + pi."""
    _need_finite(mod)
    w = np.multiply(mod.k2c, u)
    kk = mod.calK * mod.k2c
    j = np.floor((w + kk) / (2.0 * kk))
    sn, cn, _ = _classic(w - 2.0 * j * kk, mod)
    out = j * math.pi + np.arctan2(sn, mod.k2c * cn)
    return float(out) if np.ndim(u) == 0 else out


def add(u, v, mod):
    """Values at u + v and u - v from the addition theorems.

    Only ``evaluate(u)`` and ``evaluate(v)`` enter; the result is an
    independent route to ``evaluate(u +- v)``.
    """
    su, cu, d1u, d2u = evaluate(u, mod)
    sv, cv, d1v, d2v = evaluate(v, mod)
    k2, k2c2, kap2 = mod.k2, mod.k2c ** 2, mod.kappa2
    p = d2u * d2u * d2v * d2v - kap2 * k2c2 * k2c2 * su * su * sv * sv
    a = su * d2u * cv * d1v
    b = sv * d2v * cu * d1u
    cc = cu * d2u * cv * d2v
    cs = k2c2 * su * d1u * sv * d1v
    dd = d1u * d2u * d1v * d2v
    ds = kap2 * k2c2 * su * cu * sv * cv

    def one(sign):
        ns = a + sign * b
        den = math.hypot(p, k2 * ns)
        if den < _TINY:
            raise NumericError("addition theorem denominator vanishes")
        return GenJacobiValues(ns / den, (cc - sign * cs) / den,
                               (dd - sign * ds) / den, p / den)

    return one(1.0), one(-1.0)


def half(u, mod):
    """Squares (s^2, c^2, d1^2, d2^2) at u/2, for u in [0, 2 calK]."""
    _need_finite(mod)
    if not 0.0 <= u <= 2.0 * mod.calK:
        raise DomainError("half() needs 0 <= u <= 2 calK")
    s, c, d1, d2 = evaluate(u, mod)
    k1, k2 = mod.k1, mod.k2
    k2c2 = mod.k2c ** 2
    den = d2 - k2 * k2 * c + k2c2 * d1
    s2 = (d2 - c) / den
    c2 = k2c2 * (c + d1) / den
    dk = (k1 - k2) * (k1 + k2)
    den2 = k1 * k1 * d2 - k2 * k2 * d1 + dk * c
    if mod.kappa2 >= _HALF_KAPPA2_MIN and den2 > _HALF_KAPPA2_MIN * dk:
        d12 = dk * (c + d1) / den2
        d22 = dk * (c + d2) / den2
    else:
        # the d1, d2 forms are 0/0 at k1 = k2 and at u = 2 calK
        d12 = 1.0 - k1 * k1 * s2
        d22 = 1.0 - k2 * k2 * s2
    return s2, c2, d12, d22


def shift_K(u, mod):
    """Values at u + calK from those at u."""
    s, c, d1, d2 = evaluate(u, mod)
    k1c, k2c, k2 = mod.k1c, mod.k2c, mod.k2
    big_d = math.sqrt(d1 * d1 - (k2 * k1c * s) ** 2)
    return GenJacobiValues(c / big_d, -k1c * k2c * s / big_d,
                           k1c * d2 / big_d, k2c * d1 / big_d)


class SpecialPoint(enum.Enum):
    HalfK = 0.5
    K = 1.0
    ThreeHalfK = 1.5


def special_value(p, mod):
    """Closed-form values at calK/2, calK and 3 calK/2."""
    k1c, k2c = mod.k1c, mod.k2c
    if p is SpecialPoint.K:
        return GenJacobiValues(1.0, 0.0, k1c, k2c)
    r = 1.0 / math.sqrt(1.0 + k1c * k2c)
    root = math.sqrt(k1c + k2c)
    c = math.sqrt(k1c * k2c) * r
    if p is SpecialPoint.ThreeHalfK:
        c = -c
    return GenJacobiValues(r, c, math.sqrt(k1c) * root * r, math.sqrt(k2c) * root * r)


class Fn(enum.IntEnum):
    S = 0
    C = 1
    D1 = 2
    D2 = 3


def ratio(u, mod, num, den):
    """Quotient of two generalized functions at ``u``."""
    vals = evaluate(u, mod)
    d = vals[Fn(den)]
    if abs(d) < _TINY:
        raise PoleError(f"{Fn(den).name} vanishes at u={u}")
    return vals[Fn(num)] / d


# --------------------------------------------------------------------------
# integral table
# --------------------------------------------------------------------------

class Integrand(str, enum.Enum):
    s = "s"
    c = "c"
    d1 = "d1"
    d2 = "d2"
    sc = "sc"
    sd1 = "sd1"
    sd2 = "sd2"
    cd1 = "cd1"
    cd2 = "cd2"
    d1d2 = "d1d2"
    s2 = "s2"
    c2 = "c2"
    d1_2 = "d1^2"
    d2_2 = "d2^2"
    d1d2_2 = "d1^2d2^2"


def integrand(f, u, mod):
    """The integrand f(u) assembled from :func:`evaluate`."""
    s, c, d1, d2 = evaluate(u, mod)
    return {
        "s": s, "c": c, "d1": d1, "d2": d2,
        "sc": s * c, "sd1": s * d1, "sd2": s * d2,
        "cd1": c * d1, "cd2": c * d2, "d1d2": d1 * d2,
        "s2": s * s, "c2": c * c, "d1^2": d1 * d1, "d2^2": d2 * d2,
        "d1^2d2^2": (d1 * d2) ** 2,
    }[Integrand(f).value]


def _atan_over(k, t):
    # atan(k t) / k, with the k -> 0 limit
    return math.atan(k * t) / k if k else t


def _log_ratio(k, y):
    # log1p(k y) / k, with the k -> 0 limit
    x = k * y
    return y * (math.log1p(x) / x) if x else y


def _sn2_integral(u, mod):
    # int_0^u s^2, via int sn^2 / (1 - n sn^2) with n = -k2^2 / k2'^2
    k2c = mod.k2c
    n = -(mod.k2 / k2c) ** 2
    return ell.incomplete_sn2_pi(k2c * u, n, mod.kappa2, mod.kappac2) / k2c ** 3


def _d1d2_sq_integral(u, mod):
    k2c, k2 = mod.k2c, mod.k2
    m, mc = mod.kappa2, mod.kappac2
    n = -(k2 / k2c) ** 2
    w = k2c * u
    sn, cn, dn = ell.jacobi_scd(w, m, mc)
    big_n = 1.0 - n * sn * sn
    h = sn * cn * dn / big_n
    e = ell.incomplete_e(w, m, mc)
    j = ell.incomplete_sn2_pi(w, n, m, mc)
    val = (0.5 * w + e / (2.0 * (1.0 - n))
           + (m + n * n - 2.0 * n) / (2.0 * (n - 1.0)) * j
           - n * h / (2.0 * (1.0 - n)))
    return val / k2c


def antiderivative(f, u, mod):
    """F(u) - F(0) for an entry of the integral table, 0 <= u < calK."""
    _need_finite(mod)
    u = float(u)
    if not 0.0 <= u < mod.calK:
        raise BranchError(f"antiderivative needs 0 <= u < calK, got {u}")
    f = Integrand(f)
    k1, k2, k2c = mod.k1, mod.k2, mod.k2c
    if f is Integrand.d1d2:
        return amplitude(u, mod)
    if f in (Integrand.s2, Integrand.c2, Integrand.d1_2, Integrand.d2_2):
        s2 = _sn2_integral(u, mod)
        return {Integrand.s2: s2, Integrand.c2: u - s2,
                Integrand.d1_2: u - k1 * k1 * s2, Integrand.d2_2: u - k2 * k2 * s2}[f]
    if f is Integrand.d1d2_2:
        return _d1d2_sq_integral(u, mod)

    s, c, d1, d2 = evaluate(u, mod)
    if f is Integrand.s:
        if k1 == 0.0:
            return 1.0 - c
        # kappa^2 / k1^2 with its complement
        q2c = (k2 / k1) ** 2 * mod.kappac2
        q2 = 1.0 - q2c
        at_u = ell.inv_sn(k1 * c / d1, q2, q2c)
        at_0 = ell.inv_sn(k1, q2, q2c)
        return (at_0 - at_u) / (k1 * k2c)
    if f is Integrand.c:
        if k1 == 0.0:
            return s
        return ell.inv_sn(k1 * s, (k2 / k1) ** 2) / k1
    if f is Integrand.d1:
        return ell.inv_sn(s, k2 * k2)
    if f is Integrand.d2:
        return ell.inv_sn(s, k1 * k1)
    if f is Integrand.sc:
        if k1 == 0.0:
            return 0.5 * s * s
        # ln((k1 d2 - k2 d1) / (k1 - k2)) / (k1 k2) without the cancellation
        q = (1.0 + (k1 + k2) / (k1 * d2 + k2 * d1)) / ((1.0 + d1) * (1.0 + d2))
        return _log_ratio(k1 * k2, s * s * q)
    if f is Integrand.sd1:
        y = s * s * (1.0 + (1.0 + k2) / (d2 + k2 * c)) / ((1.0 + c) * (1.0 + d2))
        return _log_ratio(k2, y)
    if f is Integrand.sd2:
        y = s * s * (1.0 + (1.0 + k1) / (d1 + k1 * c)) / ((1.0 + c) * (1.0 + d1))
        return _log_ratio(k1, y)
    if f is Integrand.cd1:
        return _atan_over(k2, s / d2)
    if f is Integrand.cd2:
        return _atan_over(k1, s / d1)
    raise AssertionError(f)


def defining_integral(x, mod):
    """u with s(u) = x on [0, calK], by direct quadrature.

    Integrates in the angle ``t = sin(theta)`` so the endpoint singularity
    at ``t = 1`` disappears.  Independent of the elliptic kernels.
    """
    x = float(x)
    if not 0.0 <= x <= 1.0 + 1e-15:
        raise DomainError(f"defining_integral needs 0 <= x <= 1, got {x}")
    x = min(x, 1.0)
    _need_finite(mod)
    a1, a2 = mod.k1 ** 2, mod.k2 ** 2

    def f(th):
        s2 = math.sin(th) ** 2
        return 1.0 / math.sqrt((1.0 - a1 * s2) * (1.0 - a2 * s2))

    val, _ = integrate.quad(f, 0.0, math.asin(x), epsabs=1e-14, epsrel=1e-13, limit=200)
    return val
