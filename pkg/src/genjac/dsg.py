"""Static kink chains of the double sine-Gordon model.

The potential is

    V(phi) = (mu/beta^2) cos(beta phi) - (lam/beta^2) cos(beta phi / 2) + C

with C fixed so that min V = 0, and a static solution obeys
``phi'^2 / 2 - V(phi) = A``.  Writing ``phi = 2 pi/beta + 4 theta/beta`` this
becomes

    theta'^2 = (Lam/8) (1 - m1 sin^2 theta)(1 - m2 sin^2 theta),

Lam = beta^2 A + Lam0, where ``Lam0 = beta^2 V(2 pi/beta)``.  So theta is the
generalized amplitude with squared moduli (m1, m2) at ``xi = sqrt(Lam/8) x``.
The squared moduli are the roots of ``Lam m^2 - (8 mu + 2 lam) m + 8 mu``.

Depending on where (m1, m2) sit relative to 0 and 1, or whether they are a
complex-conjugate pair, ``T = tan(theta)`` has one of a handful of real
representations in classical Jacobi functions; :func:`solve` picks the one
for the regime returned by :func:`classify`.

Units: x is a length, mu and lam are inverse squared lengths, beta is
dimensionless, A and energy densities carry the units of V.
"""

import enum
import math
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Optional

import numpy as np

from genjac import elliptic as ell
from genjac.errors import DomainError, NoSolutionError

__all__ = [
    "DSGParams",
    "CaseTag",
    "Periodicity",
    "Regime",
    "KinkSolution",
    "potential",
    "classify",
    "solve",
    "radius",
    "chain_energy",
    "topological_charge",
    "mirror_solution",
    "ode_residual",
]

# relative width of the band that snaps A onto a regime boundary
BOUNDARY_BAND = 1e-12


@dataclass(frozen=True)
class DSGParams:
    mu: float
    lam: float
    beta: float = 1.0
    A: float = 0.0
    x0: float = 0.0

    def __post_init__(self):
        for name in ("mu", "lam", "beta", "A", "x0"):
            v = float(getattr(self, name))
            if not math.isfinite(v):
                raise DomainError(f"{name} must be finite")
            object.__setattr__(self, name, v)
        if self.beta <= 0.0:
            raise DomainError("beta must be positive")
        if self.mu == 0.0 and self.lam == 0.0:
            raise DomainError("mu and lambda cannot both vanish")


class CaseTag(enum.Enum):
    A1_KinkChain = "A1"
    A2_SingleKink = "A2"
    A3_TrigPoint = "A3"
    A3_SineGordon = "A3-SG"
    A4_ComplexModuli = "A4"
    A5_KAKChain = "A5"
    A6_ConstantEndpoint = "A6"
    B1_ComplexModuli = "B1"
    B2_SingleLargeSmall = "B2"
    B3_KAKChain = "B3"
    B4_SmallEndpoint = "B4"
    B5_LargeKAK = "B5"
    B6_LargeEndpoint = "B6"
    C_Molecule = "C"
    D1_Chain = "D1"
    D2_Bounce = "D2"


class Periodicity(enum.Enum):
    QuasiPeriodic_4piOverBeta = "quasi-periodic"
    Periodic_2R = "periodic"
    Infinite = "infinite"


_ENDPOINTS = {CaseTag.A6_ConstantEndpoint, CaseTag.B4_SmallEndpoint, CaseTag.B6_LargeEndpoint}


def _c_shift(mu, lam):
    """min over y in [-1, 1] of mu(2y^2 - 1) - lam y, i.e. -beta^2 C."""
    fmin = min(mu - lam, mu + lam)
    if mu > 0.0 and abs(lam) < 4.0 * mu:
        fmin = -lam * lam / (8.0 * mu) - mu
    return fmin


def potential(phi, p):
    """V(phi) with the constant chosen so that the minimum is zero."""
    b = p.beta
    y = np.cos(0.5 * b * np.asarray(phi, dtype=float))
    # mu cos(b phi) = mu (2 y^2 - 1)
    v = (p.mu * (2.0 * y * y - 1.0) - p.lam * y - _c_shift(p.mu, p.lam)) / (b * b)
    return float(v) if np.ndim(phi) == 0 else v


# --------------------------------------------------------------------------
# classification
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Regime:
    """Case tag and squared moduli for one parameter point.

    ``lam`` is the coupling the representation is built from: equal to the
    input lambda unless ``mirrored``, in which case it is its negative and
    the profile is shifted by ``-2 pi / beta``.  ``w1 = 1 - m1`` and
    ``w2 = 1 - m2`` are carried separately because they are needed to full
    relative accuracy near the boundaries.
    """

    case_tag: CaseTag
    m1: complex
    m2: complex
    conjugate_pair: bool
    mirrored: bool
    lam: float
    bA: float      # beta^2 A, snapped onto the boundary for boundary tags
    Lam: float     # beta^2 A + Lam0
    Lam0: float
    Lam1: float
    disc: float    # quarter discriminant of the moduli quadratic
    w1: float = math.nan
    w2: float = math.nan


def _near(a, b, scale):
    return abs(a - b) <= BOUNDARY_BAND * max(abs(b), scale)


def _tag(p):
    """(tag, mirrored, snapped beta^2 A)."""
    mu, lam, b2 = p.mu, p.lam, p.beta ** 2
    bA = b2 * p.A
    scale = abs(mu) + abs(lam)
    mirrored = False
    if mu >= 0.0 and lam < -4.0 * mu:
        mirrored, lam = True, -lam

    def at(x):
        return _near(bA, x, scale)

    if mu >= 0.0 and lam >= 4.0 * mu:
        end = -2.0 * lam
        if at(0.0):
            if lam == 4.0 * mu:
                raise NoSolutionError("lambda = 4 mu with A = 0 is degenerate")
            return CaseTag.A2_SingleKink, mirrored, 0.0
        if bA > 0.0:
            if mu == 0.0:
                return CaseTag.A3_SineGordon, mirrored, bA
            trig = (lam - 4.0 * mu) ** 2 / (8.0 * mu)
            if at(trig):
                return CaseTag.A3_TrigPoint, mirrored, trig
            return (CaseTag.A1_KinkChain if bA < trig else CaseTag.A4_ComplexModuli), mirrored, bA
        if at(end):
            return CaseTag.A6_ConstantEndpoint, mirrored, end
        if bA > end:
            return CaseTag.A5_KAKChain, mirrored, bA
        raise NoSolutionError("A below the endpoint -2 lambda / beta^2: no real solution")

    if mu > 0.0:
        v1 = -(lam + 4.0 * mu) ** 2 / (8.0 * mu)   # Lam = 0
        v2 = -(lam - 4.0 * mu) ** 2 / (8.0 * mu)   # m2 = 1
        if at(0.0):
            return CaseTag.B2_SingleLargeSmall, False, 0.0
        if bA > 0.0:
            return CaseTag.B1_ComplexModuli, False, bA
        if lam >= 0.0:
            if lam == 0.0 and at(v1):
                return CaseTag.B4_SmallEndpoint, False, v1
            if bA > v2 and not at(v2):
                return CaseTag.B3_KAKChain, False, bA
            if at(v1):
                return CaseTag.B6_LargeEndpoint, False, v1
            if bA > v1:
                return CaseTag.B5_LargeKAK, False, (v2 if at(v2) else bA)
            raise NoSolutionError("A below the large-kink endpoint: no real solution")
        # lam < 0: solution I ends at Lam = 0, below that only the mirror exists
        if at(v1):
            return CaseTag.B4_SmallEndpoint, False, v1
        if bA > v1:
            return CaseTag.B3_KAKChain, False, bA
        if at(v2):
            return CaseTag.B6_LargeEndpoint, True, v2
        if bA > v2:
            return CaseTag.B5_LargeKAK, True, (v1 if at(v1) else bA)
        raise NoSolutionError("A below the large-kink endpoint: no real solution")

    if lam <= 0.0:
        if bA > 0.0 and not at(0.0):
            return CaseTag.C_Molecule, False, bA
        raise NoSolutionError("mu, lambda < 0 needs A > 0")
    if at(0.0):
        raise NoSolutionError("mu < 0 < lambda with A = 0 is not covered")
    if bA > 0.0:
        return CaseTag.D1_Chain, False, bA
    if bA > -2.0 * lam and not at(-2.0 * lam):
        return CaseTag.D2_Bounce, False, bA
    raise NoSolutionError("mu < 0 < lambda needs A > -2 lambda / beta^2")


def _qroots(b, disc, c, lead):
    """Roots of lead x^2 - 2 b x + c = 0 given disc = b^2 - lead c >= 0."""
    q = b + math.copysign(math.sqrt(disc), b)
    if q == 0.0:
        return 0.0, 0.0
    return q / lead, c / q


def classify(p):
    """Regime of ``p``: case tag and squared moduli."""
    tag, mirrored, bA = _tag(p)
    mu = p.mu
    lam = -p.lam if mirrored else p.lam
    fmin = _c_shift(mu, lam)
    lam0 = mu + lam - fmin
    lam1 = mu - lam - fmin
    # exact forms where the generic ones cancel
    if tag.value.startswith("A") or tag.value.startswith("D"):
        lam0, lam1, d0 = 2.0 * lam, 0.0, (lam - 4.0 * mu) ** 2
    elif tag.value.startswith("B"):
        d0 = 0.0
    else:
        lam0, d0 = 0.0, (4.0 * mu + lam) ** 2
    Lam = bA + lam0
    disc = d0 - 8.0 * mu * bA
    if tag is CaseTag.A3_TrigPoint:
        disc = 0.0
    if tag in _ENDPOINTS:
        Lam = 0.0
        return Regime(tag, math.inf, 4.0 * mu / (lam + 4.0 * mu), False, mirrored,
                      lam, bA, Lam, lam0, lam1, disc)

    b = 4.0 * mu + lam
    bw = bA + lam0 - b          # Lam (1 - m)^2 - 2 bw (1 - m) + (bA + lam1) = 0
    cw = bA + lam1
    if disc < 0.0:
        im = math.sqrt(-disc) / Lam
        m1, m2 = complex(b / Lam, im), complex(b / Lam, -im)
        return Regime(tag, m1, m2, True, mirrored, lam, bA, Lam, lam0, lam1, disc,
                      bw / Lam, bw / Lam)
    ma, mb = _qroots(b, disc, 8.0 * mu, Lam)
    wa, wb = _qroots(bw, disc, cw, Lam)
    m1, m2 = max(ma, mb), min(ma, mb)
    w1, w2 = min(wa, wb), max(wa, wb)
    if tag is CaseTag.A2_SingleKink:
        m1, w1 = 1.0, 0.0
    return Regime(tag, m1, m2, False, mirrored, lam, bA, Lam, lam0, lam1, disc, w1, w2)


# --------------------------------------------------------------------------
# representations: theta as a function of xi = sqrt(Lam/8) x
# --------------------------------------------------------------------------

def _unwrapped(z, kk, m, mc, num, den):
    # theta = j pi + atan2(num(sn, cn, dn), den(sn, cn, dn)) over half-periods 2K
    j = np.floor((z + kk) / (2.0 * kk))
    sn, cn, dn = ell.jacobi_scd(z - 2.0 * j * kk, m, mc)
    return j * math.pi + np.arctan2(num(sn, cn, dn), den(sn, cn, dn))


@dataclass(frozen=True)
class _Rep:
    kind: str
    scale: float    # z = scale * xi
    m: float = 0.0
    mc: float = 1.0
    amp: float = 1.0

    @cached_property
    def kk(self):
        return ell.complete_k(self.m, self.mc)

    def theta(self, xi):
        z = self.scale * xi
        k = self.kind
        if k == "const":
            return np.zeros_like(z)
        if k == "sinh":
            return np.arctan(np.sinh(z) / self.amp)
        if k == "tanh":
            return np.arctan(np.tanh(z) / self.amp)
        if k == "sc":
            return _unwrapped(z, self.kk, self.m, self.mc,
                              lambda s, c, d: s, lambda s, c, d: self.amp * c)
        if k == "conj":
            return _unwrapped(z, self.kk, self.m, self.mc,
                              lambda s, c, d: s * d, lambda s, c, d: self.amp * c)
        sn, cn, dn = ell.jacobi_scd(z, self.m, self.mc)
        if k == "sd":
            return np.arctan2(sn, self.amp * dn)
        if k == "sn":
            return np.arctan(sn / self.amp)
        raise AssertionError(k)

    def half_period(self):
        """xi-length over which theta gains pi (or sin^2 theta repeats)."""
        if self.kind in ("sinh", "tanh"):
            return math.inf
        return 2.0 * self.kk / self.scale


def _representation(reg):
    tag = reg.case_tag
    w1, w2 = reg.w1, reg.w2
    if tag in _ENDPOINTS:
        return _Rep("const", 0.0)
    if tag is CaseTag.A2_SingleKink:
        r = math.sqrt(w2)
        return _Rep("sinh", r, amp=r)
    if tag is CaseTag.B2_SingleLargeSmall:
        r = math.sqrt(-w2)
        return _Rep("tanh", r, amp=r)
    if reg.conjugate_pair:
        pp = math.sqrt(reg.bA + reg.Lam1) / math.sqrt(reg.Lam)
        h = reg.w1 / (2.0 * pp)            # (w1 + w2) / (4 P), real part
        prod = -reg.disc / (4.0 * reg.Lam ** 2 * pp ** 2)
        # k~^2 = 1/2 - h and its complement, the small one from the product
        if h > 0.0:
            mc = 0.5 + h
            m = prod / mc
        else:
            m = 0.5 - h
            mc = prod / m
        return _Rep("conj", math.sqrt(pp), m, mc, math.sqrt(pp))
    if w1 >= 0.0:
        # 0 <= 1 - m1 <= 1 - m2
        r = math.sqrt(w2)
        return _Rep("sc", r, (w2 - w1) / w2, w1 / w2, r)
    if w2 >= 0.0:
        g = w2 - w1
        r = math.sqrt(g)
        return _Rep("sd", r, w2 / g, -w1 / g, r)
    r = math.sqrt(-w1)
    return _Rep("sn", r, w2 / w1, (w1 - w2) / w1, r)


# --------------------------------------------------------------------------
# solutions
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class KinkSolution:
    """A static solution: profile, energy density, period and energies.

    ``R`` is the spacing of the chain: ``phi(x + R) = phi(x) + 4 pi / beta``
    in the quasi-periodic case and ``phi(x + 2R) = phi(x)`` in the periodic
    one.  The energy density always has period R.
    """

    params: DSGParams
    regime: Regime
    R: float
    periodicity: Periodicity
    energy_closed: Optional[float]
    Q: Optional[float]
    _rep: _Rep = field(repr=False)
    _xi_scale: float = field(repr=False)

    @property
    def case_tag(self):
        return self.regime.case_tag

    def theta(self, x):
        xi = self._xi_scale * (np.asarray(x, dtype=float) - self.params.x0)
        return self._rep.theta(xi)

    def profile(self, x):
        b = self.params.beta
        phi = 2.0 * math.pi / b + 4.0 / b * self.theta(x)
        if self.regime.mirrored:
            phi = phi - 2.0 * math.pi / b
        return float(phi) if np.ndim(x) == 0 else phi

    def density(self, x):
        """Energy density phi'^2/2 + V, from the amplitude."""
        reg = self.regime
        b2 = self.params.beta ** 2
        s = np.sin(self.theta(x)) ** 2
        mu, lam = self.params.mu, reg.lam
        poly = reg.Lam - (8.0 * mu + 2.0 * lam) * s + 8.0 * mu * s * s
        eps = 2.0 * poly / b2 - self.params.A
        return float(eps) if np.ndim(x) == 0 else eps

    def energy_numeric(self, rtol=1e-13, n_max=1 << 22):
        """Energy of one period by the periodic trapezoid rule."""
        if not math.isfinite(self.R):
            raise DomainError("infinite period: the chain energy is not defined")
        x0 = self.params.x0
        n = 64
        prev = None
        while True:
            x = x0 + self.R * np.arange(n) / n
            val = self.R * float(np.mean(self.density(x)))
            if prev is not None and abs(val - prev) <= rtol * max(abs(val), 1e-300):
                return val
            if n >= n_max:
                return val
            prev = val
            n *= 2

    @cached_property
    def energy(self):
        """Closed form where one exists, numeric quadrature otherwise."""
        if self.energy_closed is not None:
            return self.energy_closed
        if not math.isfinite(self.R):
            return None
        return self.energy_numeric()


def _closed_energy(p, reg, R):
    tag = reg.case_tag
    b2 = p.beta ** 2
    mu = p.mu
    if tag in _ENDPOINTS:
        return R * (2.0 * reg.Lam0 + reg.bA) / b2
    if tag is CaseTag.A3_TrigPoint:
        # limit of the A1 closed form as the moduli merge
        k2 = reg.m1
        kc = math.sqrt(reg.w1)
        return 8.0 * math.pi * math.sqrt(mu) / (b2 * k2) * (1.0 + kc * kc - kc ** 3)
    if tag is CaseTag.A3_SineGordon:
        m1 = reg.m1
        k1 = math.sqrt(m1)
        return 16.0 * math.sqrt(reg.lam / 4.0) / (b2 * k1) * (
            (m1 - 1.0) * ell.complete_k(m1, reg.w1) + 2.0 * ell.complete_e(m1, reg.w1))
    if tag is CaseTag.A1_KinkChain:
        m1, m2, w1, w2 = reg.m1, reg.m2, reg.w1, reg.w2
        k1, k2, k2c = math.sqrt(m1), math.sqrt(m2), math.sqrt(w2)
        kap2, kapc2 = (w2 - w1) / w2, w1 / w2
        kk = ell.complete_k(kap2, kapc2)
        ee = ell.complete_e(kap2, kapc2)
        pi = ell.complete_pi(-m2 / w2, kap2, kapc2)
        r = m1 / m2
        return 16.0 * math.sqrt(mu) * k2c / (b2 * k1 * k2) * (
            ee - (r + w1) * kk + (1.0 / w2 + r) * pi)
    return None


def _solve(p, reg):
    tag = reg.case_tag
    rep = _representation(reg)
    xi_scale = math.sqrt(reg.Lam / 8.0)
    b = p.beta
    if tag in _ENDPOINTS:
        # the limit of R as Lam -> 0
        R = 2.0 * math.pi / reg.disc ** 0.25
    elif rep.kind in ("sinh", "tanh"):
        R = math.inf
    else:
        R = rep.half_period() / xi_scale
    if tag in (CaseTag.A2_SingleKink, CaseTag.B2_SingleLargeSmall):
        periodicity = Periodicity.Infinite
    elif p.A > 0.0:
        periodicity = Periodicity.QuasiPeriodic_4piOverBeta
    else:
        periodicity = Periodicity.Periodic_2R
    Q = None
    if tag is CaseTag.A2_SingleKink:
        Q = 4.0 * math.pi / b
    elif tag is CaseTag.B2_SingleLargeSmall:
        Q = 8.0 / b * math.atan(1.0 / rep.amp)
    return KinkSolution(p, reg, R, periodicity, _closed_energy(p, reg, R), Q, rep, xi_scale)


def solve(p):
    """The kink solution for ``p`` (the large-kink branch in Case B)."""
    return _solve(p, classify(p))


def radius(p):
    """Period R of the chain; ``math.inf`` at A = 0."""
    return solve(p).R


def chain_energy(p, method="auto"):
    """Energy of one period: ``"closed"``, ``"numeric"`` or ``"auto"``."""
    sol = solve(p)
    if not math.isfinite(sol.R):
        raise DomainError("infinite period: the chain energy is not defined")
    if method == "numeric":
        return sol.energy_numeric()
    if method == "closed":
        if sol.energy_closed is None:
            raise DomainError(f"no closed form for {sol.case_tag.value}")
        return sol.energy_closed
    return sol.energy


def topological_charge(p):
    """Q for the single kinks at A = 0.

    Case A gives a float; Case B gives ``(Q_I, Q_II)``, large and small kink
    for lambda > 0.
    """
    reg = classify(p)
    if reg.case_tag is CaseTag.A2_SingleKink:
        return 4.0 * math.pi / p.beta
    if reg.case_tag is CaseTag.B2_SingleLargeSmall:
        mu, lam = p.mu, p.lam
        f = 8.0 / p.beta
        return (f * math.atan(math.sqrt((4.0 * mu + lam) / (4.0 * mu - lam))),
                f * math.atan(math.sqrt((4.0 * mu - lam) / (4.0 * mu + lam))))
    raise DomainError("topological charge is defined for the A = 0 single kinks only")


def mirror_solution(p):
    """Second Case-B branch, phi_II(x; lam) = phi_I(x; -lam) - 2 pi / beta."""
    reg = classify(p)
    if not reg.case_tag.value.startswith("B"):
        raise DomainError("mirror_solution is defined in Case B only")
    q = DSGParams(p.mu, -p.lam, p.beta, p.A, p.x0)
    other = classify(q)
    if other.mirrored or reg.mirrored:
        raise NoSolutionError("only one solution branch exists at these parameters")
    return _solve(p, replace(other, mirrored=True))


def ode_residual(sol, x, h=None):
    """|phi'^2 / 2 - V(phi) - A| with phi' by a five-point central difference."""
    x = np.asarray(x, dtype=float)
    if h is None:
        h = sol.R / 1e4 if math.isfinite(sol.R) and sol.R > 0 else 1e-4
    f = sol.profile
    dphi = (8.0 * (f(x + h) - f(x - h)) - (f(x + 2 * h) - f(x - 2 * h))) / (12.0 * h)
    p = sol.params
    return np.abs(0.5 * dphi * dphi - potential(sol.profile(x), p) - p.A)
