"""Classical elliptic machinery.

Carlson symmetric integrals, complete and incomplete integrals of the three
kinds, and the Jacobi functions sn, cn, dn, am.  Every entry point takes the
*parameter* ``m = k**2`` rather than the modulus, because the double
sine-Gordon regimes produce negative and greater-than-one parameters.

Incomplete integrals use the Jacobi-argument convention: the first slot is
``u`` with ``phi = am(u, m)``, so for instance

    incomplete_pi(u, n, m) = int_0^u dt / (1 - n sn^2(t, m)).

Functions that are cheap enough to vectorise (``jacobi_scd``,
``jacobi_am``) accept numpy arrays; the integrals are scalar.
"""

import math

import numpy as np

from genjac._backend import kernel
from genjac.errors import DomainError

__all__ = [
    "EllipticDomainError",
    "carlson_rf",
    "carlson_rc",
    "carlson_rd",
    "carlson_rj",
    "complete_k",
    "complete_e",
    "complete_pi",
    "incomplete_e",
    "incomplete_pi",
    "incomplete_sn2_pi",
    "jacobi_scd",
    "jacobi_am",
    "inv_sn",
]

# |1 - m| below which K(m) is reported as infinite
K_OVERFLOW_BAND = 1e-12


class EllipticDomainError(DomainError):
    """Argument outside the domain of an elliptic function or integral."""


def _check_finite(*args):
    for a in args:
        if not math.isfinite(a):
            raise EllipticDomainError(f"non-finite argument {a!r}")


# --------------------------------------------------------------------------
# Carlson forms
# --------------------------------------------------------------------------

def carlson_rf(x, y, z):
    """Carlson's R_F(x, y, z) by the duplication algorithm.

    At most one argument may be zero; all must be non-negative.
    """
    x, y, z = float(x), float(y), float(z)
    _check_finite(x, y, z)
    if min(x, y, z) < 0.0:
        raise EllipticDomainError("carlson_rf needs non-negative arguments")
    if (x == 0.0) + (y == 0.0) + (z == 0.0) > 1:
        raise EllipticDomainError("carlson_rf: at most one argument may be zero")
    return kernel.rf(x, y, z)


def carlson_rc(x, y):
    """Degenerate R_C(x, y); Cauchy principal value for y < 0."""
    x, y = float(x), float(y)
    _check_finite(x, y)
    if x < 0.0 or y == 0.0:
        raise EllipticDomainError("carlson_rc needs x >= 0, y != 0")
    return kernel.rc(x, y)


def carlson_rd(x, y, z):
    """R_D(x, y, z) = R_J(x, y, z, z); z > 0 and at most one of x, y zero."""
    x, y, z = float(x), float(y), float(z)
    _check_finite(x, y, z)
    if min(x, y) < 0.0 or z <= 0.0:
        raise EllipticDomainError("carlson_rd needs x, y >= 0 and z > 0")
    if x == 0.0 and y == 0.0:
        raise EllipticDomainError("carlson_rd: x and y cannot both be zero")
    return kernel.rd(x, y, z)


def carlson_rj(x, y, z, p):
    """Carlson's R_J(x, y, z, p) for p > 0 (the circular case)."""
    x, y, z, p = float(x), float(y), float(z), float(p)
    _check_finite(x, y, z, p)
    if min(x, y, z) < 0.0 or p <= 0.0:
        raise EllipticDomainError("carlson_rj needs x, y, z >= 0 and p > 0")
    if (x == 0.0) + (y == 0.0) + (z == 0.0) > 1:
        raise EllipticDomainError("carlson_rj: at most one of x, y, z may be zero")
    return kernel.rj(x, y, z, p)


# --------------------------------------------------------------------------
# complete integrals
# --------------------------------------------------------------------------

def _k(m, mc):
    if mc <= K_OVERFLOW_BAND:
        return math.inf
    return kernel.rf(0.0, mc, 1.0)


def complete_k(m, mc=None):
    """Complete integral of the first kind K(m).

    Returns ``math.inf`` for ``|1 - m| < 1e-12`` so the logarithmic
    singularity can be detected by callers.  ``mc`` may be passed when
    ``1 - m`` is known more accurately than ``m`` itself.
    """
    m = float(m)
    mc = 1.0 - m if mc is None else float(mc)
    _check_finite(m, mc)
    if m > 1.0 + K_OVERFLOW_BAND:
        raise EllipticDomainError(f"complete_k needs m < 1, got {m}")
    return _k(m, mc)


def complete_e(m, mc=None):
    """Complete integral of the second kind E(m), m <= 1."""
    m = float(m)
    mc = 1.0 - m if mc is None else float(mc)
    _check_finite(m, mc)
    if m > 1.0:
        raise EllipticDomainError(f"complete_e needs m <= 1, got {m}")
    if mc == 0.0:
        return 1.0
    return kernel.rf(0.0, mc, 1.0) - m / 3.0 * kernel.rd(0.0, mc, 1.0)


def complete_pi(n, m, mc=None):
    """Complete integral of the third kind Pi(n, m) for n < 1, m < 1."""
    n, m = float(n), float(m)
    mc = 1.0 - m if mc is None else float(mc)
    _check_finite(n, m, mc)
    if n >= 1.0:
        raise EllipticDomainError(f"complete_pi needs n < 1, got {n}")
    if m > 1.0 + K_OVERFLOW_BAND:
        raise EllipticDomainError(f"complete_pi needs m < 1, got {m}")
    if mc <= K_OVERFLOW_BAND:
        return math.inf
    return kernel.rf(0.0, mc, 1.0) + n / 3.0 * kernel.rj(0.0, mc, 1.0, 1.0 - n)


# --------------------------------------------------------------------------
# Jacobi functions
# --------------------------------------------------------------------------

def _raw_scd(u, m, mc):
    if np.ndim(u) == 0:
        return kernel.sncndn(float(u), m, mc)
    return kernel.sncndn_array(np.asarray(u, dtype=float), m, mc)


def _scd(u, m, mc):
    """sn, cn, dn for any real m, with mc = 1 - m supplied by the caller."""
    if m < 0.0:
        # imaginary modulus: parameter -m/(1-m), argument scaled by sqrt(1-m)
        r = math.sqrt(mc)
        s, c, d = _raw_scd(u * r, -m / mc, 1.0 / mc)
        return s / (d * r), c / d, 1.0 / d
    if m > 1.0:
        # reciprocal modulus
        k = math.sqrt(m)
        s, c, d = _raw_scd(u * k, 1.0 / m, -mc / m)
        return s / k, d, c
    return _raw_scd(u, m, mc)


def jacobi_scd(u, m, mc=None):
    """Jacobi sn, cn, dn of real argument ``u`` and parameter ``m``.

    Any real ``m`` is accepted: ``m < 0`` goes through the imaginary-modulus
    transformation and ``m > 1`` through the reciprocal-modulus one.  The
    core evaluation is descending Landen down to a vanishing modulus.

    Examples
    --------
    >>> sn, cn, dn = jacobi_scd(0.0, 0.5)
    >>> (sn, cn, dn)
    (0.0, 1.0, 1.0)
    """
    m = float(m)
    mc = 1.0 - m if mc is None else float(mc)
    return _scd(u, m, mc)


def _reduce(u, kk):
    """Split u = 2 j K + r with |r| <= K."""
    j = np.floor((u + kk) / (2.0 * kk))
    return j, u - 2.0 * j * kk


def jacobi_am(u, m, mc=None):
    """Unwrapped Jacobi amplitude, continuous in ``u``.

    ``am(u + 2K) = am(u) + pi`` and ``sin(am(u)) = sn(u)``.  Valid for
    ``m <= 1``; at ``m = 1`` this is the Gudermannian.
    """
    m = float(m)
    mc = 1.0 - m if mc is None else float(mc)
    if m > 1.0:
        raise EllipticDomainError(f"jacobi_am needs m <= 1, got {m}")
    if mc <= K_OVERFLOW_BAND:
        return np.arctan(np.sinh(u)) if np.ndim(u) else math.atan(math.sinh(u))
    kk = _k(m, mc)
    j, r = _reduce(u, kk)
    s, c, _ = _scd(r, m, mc)
    out = j * math.pi + np.arctan2(s, c)
    return float(out) if np.ndim(u) == 0 else out


def inv_sn(x, m, mc=None):
    """Principal inverse of sn: the u in [-K, K] with sn(u, m) = x."""
    x, m = float(x), float(m)
    mc = 1.0 - m if mc is None else float(mc)
    if abs(x) > 1.0:
        raise EllipticDomainError(f"inv_sn needs |x| <= 1, got {x}")
    if m > 1.0:
        raise EllipticDomainError(f"inv_sn needs m <= 1, got {m}")
    x2 = x * x
    y = (1.0 - x) * (1.0 + x)
    z = 1.0 - m * x2 if mc != 0.0 else y
    if y == 0.0 and z == 0.0:
        raise EllipticDomainError("inv_sn(+-1, m=1) is infinite")
    return x * kernel.rf(y, z, 1.0)


# --------------------------------------------------------------------------
# incomplete integrals, Jacobi-argument convention
# --------------------------------------------------------------------------

def _phase(u, m, mc):
    """Reduce u by whole half-periods; returns (j, sin, cos, delta^2)."""
    kk = _k(m, mc)
    if math.isinf(kk):
        raise EllipticDomainError("incomplete integrals need m < 1")
    j, r = _reduce(u, kk)
    s, c, d = _scd(r, m, mc)
    return float(j), s, abs(c), d * d


def incomplete_e(u, m, mc=None):
    """E(u, m) = int_0^u dn^2(t, m) dt, for m < 1."""
    u, m = float(u), float(m)
    mc = 1.0 - m if mc is None else float(mc)
    if m >= 1.0:
        raise EllipticDomainError(f"incomplete_e needs m < 1, got {m}")
    j, s, c, d2 = _phase(u, m, mc)
    s2 = s * s
    val = s * kernel.rf(c * c, d2, 1.0) - m / 3.0 * s * s2 * kernel.rd(c * c, d2, 1.0)
    if j:
        val += 2.0 * j * complete_e(m, mc)
    return val


def incomplete_sn2_pi(u, n, m, mc=None):
    """int_0^u sn^2 / (1 - n sn^2) dt.

    This is ``(Pi(u, n, m) - u) / n`` written without the division, so it
    stays regular as ``n -> 0``.
    """
    u, n, m = float(u), float(n), float(m)
    mc = 1.0 - m if mc is None else float(mc)
    if n >= 1.0:
        raise EllipticDomainError(f"needs n < 1, got {n}")
    if m >= 1.0:
        raise EllipticDomainError(f"needs m < 1, got {m}")
    j, s, c, d2 = _phase(u, m, mc)
    s2 = s * s
    val = s * s2 / 3.0 * kernel.rj(c * c, d2, 1.0, 1.0 - n * s2)
    if j:
        val += 2.0 * j / 3.0 * kernel.rj(0.0, mc, 1.0, 1.0 - n)
    return val


def incomplete_pi(u, n, m, mc=None):
    """Pi(u, n, m) = int_0^u dt / (1 - n sn^2(t, m)), for n < 1, m < 1.

    Quasi-additive over half-periods: Pi(u + 2K) = Pi(u) + 2 Pi(n, m).
    """
    u, n, m = float(u), float(n), float(m)
    mc = 1.0 - m if mc is None else float(mc)
    if n >= 1.0:
        raise EllipticDomainError(f"incomplete_pi needs n < 1, got {n}")
    if m >= 1.0:
        raise EllipticDomainError(f"incomplete_pi needs m < 1, got {m}")
    j, s, c, d2 = _phase(u, m, mc)
    s2 = s * s
    val = (s * kernel.rf(c * c, d2, 1.0)
           + n / 3.0 * s * s2 * kernel.rj(c * c, d2, 1.0, 1.0 - n * s2))
    if j:
        val += 2.0 * j * complete_pi(n, m, mc)
    return val
