"""WKB levels and patched WKB wavefunctions for the oscillator and double well.

The wavefunctions are the textbook construction: bare WKB branches away
from each turning point joined to linearized-potential Airy functions
inside patches of half-width ``delta_z``.  The branches do not meet, and
:func:`~airywell.wavefunction.discontinuity_report` measures by how much.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from . import actions
from .airy import airy_ai, airy_eval
from .errors import ConfigurationError, DomainError
from .model import LevelSearch, Parity, SolverConfig, parity_of
from .numerics import find_roots
from .wavefunction import PiecewiseWavefunction, Region, discontinuity_report  # noqa: F401

log = logging.getLogger(__name__)

_SQRT_PI = math.sqrt(math.pi)


@dataclass(frozen=True)
class WkbLevel:
    n: int
    parity: Parity
    eps: float
    turning_points: tuple[float, ...]


# -- harmonic oscillator -------------------------------------------------------

def sho_quantized_zt2(parity: Parity, j: int) -> int:
    """z_t^2 from the j-th (j >= 1) even or odd WKB quantization condition."""
    if j < 1:
        raise DomainError("quantization index starts at 1")
    return 4 * j - 3 if parity == "even" else 4 * j - 1


def sho_wkb_levels(count: int) -> list[WkbLevel]:
    if count < 1:
        raise DomainError("need at least one level")
    return [WkbLevel(n, parity_of(n), float(2 * n + 1), (math.sqrt(2 * n + 1),))
            for n in range(count)]


def sho_patch_scale(n: int) -> float:
    """Airy scale of the oscillator patch, sqrt(2) (n + 1/2)^(1/6)."""
    return math.sqrt(2.0) * (n + 0.5) ** (1 / 6)


def sho_wkb_wavefunction(level: WkbLevel, delta_z: float | None = None,
                         z_max: float | None = None, tol: float = 1e-12) -> PiecewiseWavefunction:
    n = level.n
    zt = level.turning_points[0]
    alpha = sho_patch_scale(n)
    if delta_z is None:
        delta_z = 0.5 / alpha
    if not 0 < delta_z < zt:
        raise ConfigurationError(f"patch half-width {delta_z} must lie in (0, z_t={zt:.6g})")
    if z_max is None:
        z_max = zt + 8.0
    if not z_max > zt + delta_z:
        raise ConfigurationError("z_max must lie beyond the patch")

    def bare_allowed(z):
        zr = z / zt
        with np.errstate(invalid="ignore", divide="ignore"):
            return 2.0 / (1 - zr * zr) ** 0.25 * np.sin(math.pi / 4 + actions.s1(np.minimum(zr, 1.0) * zt, zt))

    def patch(z):
        return 2 * _SQRT_PI * (n + 0.5) ** (1 / 6) * airy_ai(alpha * (z - zt))[0]

    def bare_forbidden(z):
        zr = z / zt
        with np.errstate(invalid="ignore", divide="ignore"):
            return np.exp(-actions.s2(np.maximum(zr, 1.0) * zt, zt)) / (zr * zr - 1) ** 0.25

    regions = [
        Region(0.0, zt - delta_z, "R1", "bare", bare_allowed),
        Region(zt - delta_z, zt + delta_z, "R2", "patch", patch),
        Region(zt + delta_z, math.inf, "R3", "bare", bare_forbidden),
    ]
    return PiecewiseWavefunction.normalized(regions, level.parity, "wkb", level.eps, z_max, tol)


# -- double well ---------------------------------------------------------------

def dwp_turning_points(z0: float, eps: float) -> tuple[float, float]:
    r = math.sqrt(eps)
    return z0 - r, z0 + r


def dwp_patch_scale(eps: float) -> float:
    """Airy scale (4 eps)^(1/6): cube root of |v'| at either turning point."""
    return (4.0 * eps) ** (1 / 6)


def g_even(z0: float, eps: float) -> float:
    k3 = 2.0 * (z0 * z0 - eps) ** 1.5
    return (k3 + z0) / (k3 - z0)


def g_even_pole(z0: float) -> float:
    """Energy where g_even diverges, 2 (z0^2 - eps)^(3/2) = z0."""
    return z0 * z0 - (z0 / 2.0) ** (2.0 / 3.0)


def dwp_wkb_condition(eps: float, z0: float, parity: Parity) -> float:
    """cot(pi eps/2) - (g/2) ((z0 + kappa)/sqrt eps)^eps exp(-z0 kappa), kappa = sqrt(z0^2 - eps).

    The amplitude factor is ``exp(-2 w1(0))`` and is evaluated that way.
    """
    if not 0 < eps < z0 * z0:
        raise DomainError(f"energy {eps} outside (0, z0^2={z0 * z0})")
    g = -1.0 if parity == "odd" else g_even(z0, eps)
    amp = math.exp(-2.0 * actions.w1(0.0, z0, eps))
    return 1.0 / math.tan(math.pi * eps / 2) - 0.5 * g * amp


def dwp_wkb_eigenvalues(z0: float, count: int, cfg: SolverConfig | None = None) -> LevelSearch:
    """Sub-barrier WKB levels of the double well, ascending.

    Even-parity roots above the pole of ``g_even`` are rejected: there the
    barrier under the origin is too thin for the decaying branch to dominate
    and the even condition no longer describes a bound level.
    """
    if not z0 > 0:
        raise DomainError("double-well offset must be positive")
    if count < 1:
        raise DomainError("need at least one level")
    cfg = cfg or SolverConfig()
    top = z0 * z0
    margin = 1e-9 * top
    roots: list[tuple[float, Parity]] = []
    notes = []
    for parity in ("even", "odd"):
        f = lambda e, p=parity: dwp_wkb_condition(e, z0, p)  # noqa: E731
        found = find_roots(f, margin, top - margin, cfg.scan_points, cfg.root_tol)
        if parity == "even":
            pole = g_even_pole(z0)
            kept = [r for r in found if r < pole]
            if len(kept) < len(found):
                notes.append(f"rejected even roots above g_even pole {pole:.9g}: "
                             + ", ".join(f"{r:.9g}" for r in found if r >= pole))
            found = kept
        roots.extend((r, parity) for r in found)
    roots.sort()
    levels = []
    for n, (eps, parity) in enumerate(roots):
        if parity != parity_of(n):
            notes.append(f"parity sequence broken at n={n} (eps={eps:.9g}); search stopped")
            break
        levels.append(WkbLevel(n, parity, eps, dwp_turning_points(z0, eps)))
        if len(levels) == count:
            break
    for note in notes:
        log.debug(note)
    return LevelSearch(tuple(levels), count, tuple(notes))


def dwp_w_aux(kind: str, z, z0: float, eps: float):
    """Auxiliary phase integrals w1..w4 of the double well."""
    if not 0 < eps < z0 * z0:
        raise DomainError(f"energy {eps} outside (0, z0^2)")
    funcs = {"w1": actions.w1, "w2": actions.w2, "w3": actions.w3, "w4": actions.w4}
    if kind not in funcs:
        raise DomainError(f"unknown auxiliary function {kind!r}")
    return funcs[kind](z, z0, eps)


def default_dwp_delta_z(level: WkbLevel) -> float:
    z1, z2 = level.turning_points
    return min(0.5 / dwp_patch_scale(level.eps), 0.5 * z1, 0.25 * (z2 - z1))


def dwp_wkb_wavefunction(level: WkbLevel, z0: float, delta_z: float | None = None,
                         z_max: float | None = None, tol: float = 1e-12) -> PiecewiseWavefunction:
    eps = level.eps
    if not 0 < eps < z0 * z0:
        raise DomainError(f"level energy {eps} is not below the barrier z0^2={z0 * z0:g}")
    z1, z2 = dwp_turning_points(z0, eps)
    if delta_z is None:
        delta_z = default_dwp_delta_z(level)
    if not 0 < delta_z < min(z1, (z2 - z1) / 2):
        raise ConfigurationError(
            f"patch half-width {delta_z} must be below min(z1, (z2-z1)/2) = {min(z1, (z2 - z1) / 2):.6g}")
    if z_max is None:
        z_max = z2 + 8.0
    if not z_max > z2 + delta_z:
        raise ConfigurationError("z_max must lie beyond the outer patch")
    alpha = dwp_patch_scale(eps)
    amp = math.sqrt(4 * math.pi / alpha)
    s, c = math.sin(math.pi * eps / 2), math.cos(math.pi * eps / 2)

    def forbidden_amp(z):
        with np.errstate(invalid="ignore", divide="ignore"):
            return ((z - z0) ** 2 - eps) ** -0.25

    def allowed_amp(z):
        with np.errstate(invalid="ignore", divide="ignore"):
            return (eps - (z - z0) ** 2) ** -0.25

    def r1(z):
        w = actions.w1(np.minimum(z, z1), z0, eps)
        return forbidden_amp(z) * (2 * c * np.exp(w) + s * np.exp(-w))

    def r2(z):
        v = airy_eval(alpha * (z1 - z))
        return amp * (s * v.ai + c * v.bi)

    def r3(z):
        w = actions.w3(np.clip(z, z1, z2), z0, eps)
        return 2 * allowed_amp(z) * np.sin(w + math.pi / 4)

    def r4(z):
        return amp * airy_ai(alpha * (z - z2))[0]

    def r5(z):
        w = actions.w4(np.maximum(z, z2), z0, eps)
        return forbidden_amp(z) * np.exp(-w)

    regions = [
        Region(0.0, z1 - delta_z, "R1", "bare", r1),
        Region(z1 - delta_z, z1 + delta_z, "R2", "patch", r2),
        Region(z1 + delta_z, z2 - delta_z, "R3", "bare", r3),
        Region(z2 - delta_z, z2 + delta_z, "R4", "patch", r4),
        Region(z2 + delta_z, math.inf, "R5", "bare", r5),
    ]
    return PiecewiseWavefunction.normalized(regions, level.parity, "wkb", eps, z_max, tol)
