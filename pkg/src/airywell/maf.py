"""Modified Airy Function (MAF) levels and wavefunctions.

Every MAF branch has the form ``P * Ai(q)`` (or a combination with ``Bi``),
where ``q = +-(3/2 w)^(2/3)`` for the phase integral ``w`` measured from
the nearest turning point and ``P = (3/2 w)^(1/6) / |eps - v|^(1/4)``.
Both potentials are parabolic around each turning point, so with scaled
distance ``d = |z - z_t| / L`` from the turning point::

    P = L^(-1/6) 2^(1/12) R(d)^(1/6) / (2 +- d)^(1/4)
    q = +-2^(1/3) L^(4/3) d R(d)^(2/3)

with ``R`` from :func:`airywell.actions.regular_ratio`.  These expressions
are smooth through ``d = 0``, so no special limit handling is needed at
the turning points and the branches meet continuously by construction.
``L`` is ``z_t`` for the oscillator and ``sqrt(eps)`` for the double well.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from . import actions
from .airy import airy_ai, airy_eval
from .errors import ConvergenceError, DomainError
from .model import LevelSearch, Parity, SolverConfig, parity_of
from .numerics import find_roots
from .wavefunction import PiecewiseWavefunction, Region

log = logging.getLogger(__name__)

_C_P = 2.0 ** (1 / 12)
_C_Q = 2.0 ** (1 / 3)


@dataclass(frozen=True)
class MafLevel:
    """A MAF level.  For the oscillator ``eps`` equals ``z_t**2`` and the
    double-well fields ``c1``, ``c2``, ``gamma`` are ``None``."""

    n: int
    parity: Parity
    eps: float
    c1: float | None = None
    c2: float | None = None
    gamma: float | None = None


@dataclass(frozen=True)
class MafFactor:
    """Prefactor ``P`` and Airy argument ``q`` near one turning point, with
    their derivatives in the scaled distance ``d``."""

    p: np.ndarray
    q: np.ndarray
    dlogp: np.ndarray
    dq: np.ndarray


def maf_factor(d, sign: int, scale: float) -> MafFactor:
    """Turning-point factor at scaled distance ``d``.

    ``sign`` is +1 on the classically forbidden side (``q > 0``) and -1 on
    the allowed side (``q < 0``).
    """
    d = np.asarray(d, dtype=float)
    r, dr = actions.regular_ratio(d, sign)
    r, dr = np.asarray(r), np.asarray(dr)
    base = 2.0 + sign * d
    p = scale ** (-1 / 6) * _C_P * r ** (1 / 6) / base**0.25
    dlogp = dr / (6.0 * r) - sign / (4.0 * base)
    amp = sign * _C_Q * scale ** (4 / 3)
    q = amp * d * r ** (2 / 3)
    dq = amp * (r ** (2 / 3) + (2 / 3) * d * dr / r ** (1 / 3))
    return MafFactor(p, q, dlogp, dq)


# -- harmonic oscillator -------------------------------------------------------

def sho_q_at_origin(zt2: float) -> tuple[float, float, float]:
    """``q(0)``, ``q'(0)``, ``q''(0)`` of the oscillator for ``z_t**2 = zt2``.

    From ``q = -(3/2 s1)^(2/3)`` with ``s1(0) = pi zt^2/4``, ``s1'(0) = -zt``
    and ``s1''(0) = 0``.
    """
    if not zt2 > 0:
        raise DomainError("z_t^2 must be positive")
    zt = math.sqrt(zt2)
    u = 1.5 * math.pi * zt2 / 4
    du = -1.5 * zt
    q = -(u ** (2 / 3))
    dq = -(2 / 3) * u ** (-1 / 3) * du
    d2q = (2 / 9) * u ** (-4 / 3) * du * du
    return q, dq, d2q


def sho_odd_zt2(k: int) -> float:
    """Closed form of the k-th odd level: q(0) equal to the k-th zero of Ai."""
    from .airy import ai_zero

    return 8.0 / (3.0 * math.pi) * (-ai_zero(k)) ** 1.5


def _sho_condition(zt2: float, parity: Parity) -> float:
    zt = math.sqrt(zt2)
    f = maf_factor(1.0, -1, zt)
    ai, aip = airy_ai(float(f.q))
    if parity == "odd":
        return float(ai)
    # psi'(0) = 0, divided through by P > 0
    return float(f.dlogp * ai + f.dq * aip)


def sho_maf_energies(count: int, cfg: SolverConfig | None = None) -> list[MafLevel]:
    """Lowest ``count`` MAF oscillator levels, ``eps = z_t**2``."""
    if count < 1:
        raise DomainError("need at least one level")
    cfg = cfg or SolverConfig()
    hi = 4.0 * count + 2.0
    found: list[tuple[float, Parity]] = []
    for parity in ("even", "odd"):
        roots = find_roots(lambda e, p=parity: _sho_condition(e, p), 1e-6, hi,
                           max(cfg.scan_points, 100 * count), cfg.root_tol)
        found.extend((r, parity) for r in roots)
    found.sort()
    levels = [MafLevel(n, p, e) for n, (e, p) in enumerate(found[:count])]
    bad = [lv for lv in levels if lv.parity != parity_of(lv.n)]
    if len(levels) < count or bad:
        raise ConvergenceError(f"found {len(levels)} of {count} oscillator levels",
                               partial=levels)
    return levels


def sho_maf_wavefunction(level: MafLevel, z_max: float | None = None,
                         tol: float = 1e-12) -> PiecewiseWavefunction:
    zt = math.sqrt(level.eps)
    if z_max is None:
        z_max = zt + 8.0
    if not z_max > zt:
        raise DomainError("z_max must exceed the turning point")

    def inner(z):
        f = maf_factor(np.clip(1.0 - z / zt, 0.0, 2.0), -1, zt)
        return f.p * airy_ai(f.q)[0]

    def outer(z):
        f = maf_factor(np.maximum(z / zt - 1.0, 0.0), +1, zt)
        return f.p * airy_ai(f.q)[0]

    regions = [Region(0.0, zt, "M1", "maf", inner), Region(zt, math.inf, "M2", "maf", outer)]
    return PiecewiseWavefunction.normalized(regions, level.parity, "maf", level.eps, z_max, tol)


# -- double well ---------------------------------------------------------------

def dwp_maf_coeffs(eps: float) -> tuple[float, float, float]:
    """Matching coefficients ``(c1, c2, gamma)`` at the well minimum.

    They make ``c1 Ai + c2 Bi`` on the inner side of the minimum join the
    outer ``Ai`` branch with continuous value and slope.
    """
    if not eps > 0:
        raise DomainError(f"energy must be positive, got {eps}")
    gamma = -0.25 * (3.0 * math.pi * eps) ** (2 / 3)
    v = airy_eval(gamma)
    common = v.ai / (4.0 * gamma) + v.ai_prime
    c1 = 1.0 + 2.0 * math.pi * v.bi * common
    c2 = -2.0 * math.pi * v.ai * common
    return c1, c2, gamma


def _dwp_check(z0: float, eps: float):
    if not 0 < eps < z0 * z0:
        raise DomainError(f"energy {eps} must lie in (0, z0^2={z0 * z0:g})")


def dwp_origin_terms(eps: float, z0: float) -> tuple[float, float]:
    """``psi(0)/P`` and ``psi'(0)/P`` on the inner branch (up to the sign of dz)."""
    _dwp_check(z0, eps)
    c1, c2, _ = dwp_maf_coeffs(eps)
    L = math.sqrt(eps)
    f = maf_factor(z0 / L - 1.0, +1, L)
    v = airy_eval(float(f.q))
    val = c1 * v.ai + c2 * v.bi
    slope = f.dlogp * val + f.dq * (c1 * v.ai_prime + c2 * v.bi_prime)
    return float(val), float(slope)


def dwp_maf_condition(eps: float, z0: float, parity: Parity) -> float:
    val, slope = dwp_origin_terms(eps, z0)
    return val if parity == "odd" else slope


def dwp_maf_eigenvalues(z0: float, count: int, cfg: SolverConfig | None = None) -> LevelSearch:
    """Sub-barrier MAF levels of the double well, ascending."""
    if not z0 > 0:
        raise DomainError("double-well offset must be positive")
    if count < 1:
        raise DomainError("need at least one level")
    cfg = cfg or SolverConfig()
    top = z0 * z0
    found: list[tuple[float, Parity]] = []
    for parity in ("even", "odd"):
        roots = find_roots(lambda e, p=parity: dwp_maf_condition(e, z0, p),
                           1e-6, top - 1e-6, cfg.scan_points, cfg.root_tol)
        found.extend((r, parity) for r in roots)
    found.sort()
    levels, notes = [], []
    for n, (eps, parity) in enumerate(found):
        if parity != parity_of(n):
            notes.append(f"parity sequence broken at n={n} (eps={eps:.9g}); search stopped")
            break
        c1, c2, gamma = dwp_maf_coeffs(eps)
        levels.append(MafLevel(n, parity, eps, c1, c2, gamma))
        if len(levels) == count:
            break
    for note in notes:
        log.debug(note)
    return LevelSearch(tuple(levels), count, tuple(notes))


def dwp_maf_wavefunction(level: MafLevel, z0: float, z_max: float | None = None,
                         tol: float = 1e-12) -> PiecewiseWavefunction:
    eps = level.eps
    _dwp_check(z0, eps)
    L = math.sqrt(eps)
    z1, z2 = z0 - L, z0 + L
    if z_max is None:
        z_max = z2 + 8.0
    if not z_max > z2:
        raise DomainError("z_max must exceed the outer turning point")
    c1, c2, _ = dwp_maf_coeffs(eps)

    def mixed(d, sign):
        f = maf_factor(d, sign, L)
        v = airy_eval(f.q)
        return f.p * (c1 * v.ai + c2 * v.bi)

    def pure(d, sign):
        f = maf_factor(d, sign, L)
        return f.p * airy_ai(f.q)[0]

    regions = [
        Region(0.0, z1, "M1", "maf", lambda z: mixed(np.maximum(z1 - z, 0.0) / L, +1)),
        Region(z1, z0, "M2", "maf", lambda z: mixed(np.clip(z - z1, 0.0, 2 * L) / L, -1)),
        Region(z0, z2, "M3", "maf", lambda z: pure(np.clip(z2 - z, 0.0, 2 * L) / L, -1)),
        Region(z2, math.inf, "M4", "maf", lambda z: pure(np.maximum(z - z2, 0.0) / L, +1)),
    ]
    return PiecewiseWavefunction.normalized(regions, level.parity, "maf", eps, z_max, tol)
