"""Phase integrals of the harmonic and double-well potentials.

Both potentials are parabolic on each side of a turning point, so every
action integral reduces to one of two universal shapes in the scaled
distance ``d`` from the turning point::

    forbidden_action(d) = int_0^d sqrt(t (2 + t)) dt      (d >= 0)
    allowed_action(d)   = int_0^d sqrt(t (2 - t)) dt      (0 <= d <= 2)

Close to ``d = 0`` the closed forms cancel catastrophically, so a power
series is used there.  ``regular_ratio`` divides out the leading
``(2 sqrt 2 / 3) d^(3/2)`` behaviour, which is what the Airy-argument and
amplitude formulas need near a turning point.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import DomainError

_SERIES_CUTOFF = 0.1
_SERIES_TERMS = 22
_LEAD = 2.0 * math.sqrt(2.0) / 3.0


def _binom_half(count: int) -> np.ndarray:
    out = np.empty(count)
    out[0] = 1.0
    for j in range(1, count):
        out[j] = out[j - 1] * (0.5 - (j - 1)) / j
    return out


_B = _binom_half(_SERIES_TERMS)
_J = np.arange(_SERIES_TERMS)


def _check(d, sign):
    d = np.asarray(d, dtype=float)
    tiny = -1e-13
    if np.any(d < tiny) or (sign < 0 and np.any(d > 2 - tiny)):
        raise DomainError("scaled distance outside the action's domain")
    return np.clip(d, 0.0, 2.0 if sign < 0 else np.inf)


def _series_ratio(d, sign):
    coeff = 1.5 * _B * (sign * 0.5) ** _J / (_J + 1.5)
    powers = d[..., None] ** _J
    ratio = (powers * coeff).sum(axis=-1)
    dcoeff = coeff[1:] * _J[1:]
    dratio = (d[..., None] ** _J[:-1] * dcoeff).sum(axis=-1)
    return ratio, dratio


def _closed_action(d, sign):
    if sign > 0:
        u = 1.0 + d
        return 0.5 * (u * np.sqrt(d * (2.0 + d)) - np.log1p(d + np.sqrt(d * (2.0 + d))))
    s = 1.0 - d
    return 0.5 * (np.arccos(s) - s * np.sqrt(np.clip(d * (2.0 - d), 0.0, None)))


def _action(d, sign):
    d = _check(d, sign)
    small = d < _SERIES_CUTOFF
    out = np.empty_like(d)
    if np.any(small):
        ratio, _ = _series_ratio(d[small], sign)
        out[small] = _LEAD * d[small] ** 1.5 * ratio
    if np.any(~small):
        out[~small] = _closed_action(d[~small], sign)
    return out if out.ndim else float(out)


def forbidden_action(d):
    """int_0^d sqrt(t (2 + t)) dt."""
    return _action(d, +1)


def allowed_action(d):
    """int_0^d sqrt(t (2 - t)) dt, for 0 <= d <= 2."""
    return _action(d, -1)


def regular_ratio(d, sign: int):
    """``action(d) / ((2 sqrt2 / 3) d^1.5)`` and its derivative in ``d``.

    Both are smooth through ``d = 0`` where the ratio equals 1.
    ``sign`` is +1 for the forbidden shape, -1 for the allowed one.
    """
    d = _check(d, sign)
    ratio = np.empty_like(d)
    dratio = np.empty_like(d)
    small = d < _SERIES_CUTOFF
    if np.any(small):
        ratio[small], dratio[small] = _series_ratio(d[small], sign)
    big = ~small
    if np.any(big):
        db = d[big]
        r = _closed_action(db, sign) / (_LEAD * db**1.5)
        ratio[big] = r
        dratio[big] = 1.5 / db * (np.sqrt(1.0 + sign * 0.5 * db) - r)
    if ratio.ndim == 0:
        return float(ratio), float(dratio)
    return ratio, dratio


# -- double well ---------------------------------------------------------------
# Turning points on z > 0 are z1 = z0 - sqrt(eps) and z2 = z0 + sqrt(eps);
# s = (z - z0) / sqrt(eps) is the position in units of the well half-width.

def _scaled(z, z0, eps):
    if eps <= 0:
        raise DomainError(f"energy must be positive, got {eps}")
    return (np.asarray(z, dtype=float) - z0) / math.sqrt(eps)


def w1(z, z0: float, eps: float):
    """int_z^{z1} sqrt((z'-z0)^2 - eps) dz' for z <= z1."""
    return eps * forbidden_action(-_scaled(z, z0, eps) - 1.0)


def w2(z, z0: float, eps: float):
    """int_{z1}^z sqrt(eps - (z'-z0)^2) dz' for z1 <= z <= z2."""
    return eps * allowed_action(1.0 + _scaled(z, z0, eps))


def w3(z, z0: float, eps: float):
    """int_z^{z2} sqrt(eps - (z'-z0)^2) dz' for z1 <= z <= z2."""
    return eps * allowed_action(1.0 - _scaled(z, z0, eps))


def w4(z, z0: float, eps: float):
    """int_{z2}^z sqrt((z'-z0)^2 - eps) dz' for z >= z2."""
    return eps * forbidden_action(_scaled(z, z0, eps) - 1.0)


# -- harmonic oscillator -------------------------------------------------------

def s1(z, zt: float):
    """int_z^{zt} sqrt(zt^2 - z'^2) dz' for |z| <= zt."""
    return zt * zt * allowed_action(1.0 - np.asarray(z, dtype=float) / zt)


def s2(z, zt: float):
    """int_{zt}^z sqrt(z'^2 - zt^2) dz' for z >= zt."""
    return zt * zt * forbidden_action(np.asarray(z, dtype=float) / zt - 1.0)
