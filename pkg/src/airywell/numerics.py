"""Root bracketing, Brent refinement and adaptive Gauss-Kronrod quadrature."""

from __future__ import annotations

import heapq
import logging
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import ConvergenceError, DomainError

log = logging.getLogger(__name__)

RealFunction = Callable[[float], float]


@dataclass(frozen=True)
class Bracket:
    lo: float
    hi: float
    f_lo: float
    f_hi: float

    def __post_init__(self):
        if not self.lo < self.hi:
            raise DomainError(f"bracket needs lo < hi, got [{self.lo}, {self.hi}]")
        if not self.f_lo * self.f_hi < 0:
            raise DomainError(f"no sign change on [{self.lo}, {self.hi}]")


class BracketList(list):
    """List of brackets that also remembers which grid points were unusable."""

    def __init__(self, brackets=(), skipped=()):
        super().__init__(brackets)
        self.skipped = list(skipped)


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error_estimate: float
    evaluations: int
    converged: bool = True


def scan_brackets(f: RealFunction, lo: float, hi: float, grid_points: int,
                  reject_poles: bool = True) -> BracketList:
    """Sign changes of ``f`` between neighbouring points of a uniform grid.

    Non-finite samples are skipped (and listed in ``.skipped``).  Roots of even
    multiplicity between grid points are invisible to this scan.  With
    ``reject_poles`` a sign change whose midpoint value exceeds both end
    values in magnitude is taken to be a pole and dropped.
    """
    if not lo < hi:
        raise DomainError(f"scan needs lo < hi, got [{lo}, {hi}]")
    if grid_points < 2:
        raise DomainError("scan needs at least two grid points")
    grid = np.linspace(lo, hi, grid_points)
    values = []
    skipped = []
    for x in grid:
        with np.errstate(all="ignore"):
            fx = float(f(float(x)))
        if math.isfinite(fx):
            values.append((float(x), fx))
        else:
            skipped.append(float(x))
    if not values:
        raise DomainError("f is non-finite on every grid point")
    if skipped:
        log.debug("scan_brackets skipped %d non-finite points", len(skipped))

    out = BracketList(skipped=skipped)
    for (a, fa), (b, fb) in zip(values, values[1:]):
        if fa * fb >= 0:
            continue
        if reject_poles:
            with np.errstate(all="ignore"):
                fm = float(f(0.5 * (a + b)))
            if not math.isfinite(fm) or abs(fm) > max(abs(fa), abs(fb)):
                continue
        out.append(Bracket(a, b, fa, fb))
    # a root sitting exactly on a grid node is bracketed by its neighbours
    for i, (x, fx) in enumerate(values):
        if fx == 0.0 and 0 < i < len(values) - 1:
            (a, fa), (b, fb) = values[i - 1], values[i + 1]
            if fa * fb < 0:
                out.append(Bracket(a, b, fa, fb))
    out.sort(key=lambda br: br.lo)
    return out


def refine_root(f: RealFunction, bracket: Bracket, tol: float = 1e-12, maxiter: int = 200) -> float:
    """Brent's method (inverse quadratic / secant with bisection safeguard)."""
    if tol <= 0:
        raise DomainError("tolerance must be positive")
    a, b = bracket.lo, bracket.hi
    fa, fb = bracket.f_lo, bracket.f_hi
    if abs(fa) < abs(fb):
        a, b, fa, fb = b, a, fb, fa
    c, fc = a, fa
    d = e = b - a
    for _ in range(maxiter):
        if fb == 0.0:
            return b
        if fa * fb > 0:
            a, fa = c, fc
            d = e = b - a
        if abs(fa) < abs(fb):
            c, fc = b, fb
            b, fb = a, fa
            a, fa = c, fc
        tol1 = 2 * np.finfo(float).eps * abs(b) + 0.5 * tol
        m = 0.5 * (a - b)
        if abs(m) <= tol1:
            return b
        if abs(e) >= tol1 and abs(fc) > abs(fb):
            s = fb / fc
            if a == c:
                p = 2 * m * s
                q = 1 - s
            else:
                q_ = fc / fa
                r = fb / fa
                p = s * (2 * m * q_ * (q_ - r) - (b - c) * (r - 1))
                q = (q_ - 1) * (r - 1) * (s - 1)
            if p > 0:
                q = -q
            else:
                p = -p
            if 2 * p < min(3 * m * q - abs(tol1 * q), abs(e * q)):
                e, d = d, p / q
            else:
                d = e = m
        else:
            d = e = m
        c, fc = b, fb
        b = b + d if abs(d) > tol1 else b + math.copysign(tol1, m)
        fb = float(f(b))
        if not math.isfinite(fb):
            lo, hi = sorted((a, c))
            raise ConvergenceError(f"f({b}) is not finite", partial=(lo, hi))
    raise ConvergenceError("Brent iteration limit reached", partial=tuple(sorted((a, b))))


def find_roots(f: RealFunction, lo: float, hi: float, grid_points: int = 2000,
               tol: float = 1e-12) -> list[float]:
    """All sign-change roots of ``f`` on ``[lo, hi]``, poles discarded.

    A refined point only counts as a root when ``|f|`` there is below its
    magnitude at both bracket ends.
    """
    roots = []
    for br in scan_brackets(f, lo, hi, grid_points):
        r = refine_root(f, br, tol)
        fr = abs(float(f(r)))
        if fr <= min(abs(br.f_lo), abs(br.f_hi)):
            roots.append(r)
        else:
            log.debug("discarding pole-like sign change near %.12g", r)
    return roots


# Gauss-Kronrod 7/15 nodes and weights on [-1, 1]
_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])
_NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])
_KRONROD_W = np.concatenate([_WGK[:-1], _WGK[::-1]])
_GAUSS_W = np.zeros(15)
_GAUSS_W[[1, 3, 5, 7, 9, 11, 13]] = np.concatenate([_WG[:-1], _WG[::-1]])


def _gk15(f, a: float, b: float):
    half = 0.5 * (b - a)
    center = 0.5 * (a + b)
    fx = np.asarray(f(center + half * _NODES), dtype=float)
    if not np.all(np.isfinite(fx)):
        raise DomainError(f"integrand is not finite on [{a}, {b}]")
    kronrod = half * float(_KRONROD_W @ fx)
    gauss = half * float(_GAUSS_W @ fx)
    return kronrod, abs(kronrod - gauss)


def integrate(f, lo: float, hi: float, tol: float = 1e-10, limit: int = 5000) -> QuadratureResult:
    """Globally adaptive Gauss-Kronrod (7, 15) quadrature of ``f`` on ``[lo, hi]``.

    ``f`` is called with numpy arrays of nodes.  The rule never samples the
    interval endpoints, so integrable endpoint singularities are fine.
    Convergence means the summed error estimate is below ``tol * (1 + |value|)``.
    """
    if hi == lo:
        return QuadratureResult(0.0, 0.0, 0)
    sign = 1.0
    if hi < lo:
        lo, hi, sign = hi, lo, -1.0
    value, err = _gk15(f, lo, hi)
    heap = [(-err, lo, hi, value)]
    total, total_err = value, err
    evaluations = 15
    while total_err > tol * (1 + abs(total)):
        if len(heap) >= limit:
            log.warning("integrate: subdivision limit %d reached", limit)
            return QuadratureResult(sign * total, total_err, evaluations, converged=False)
        neg_err, a, b, v = heapq.heappop(heap)
        mid = 0.5 * (a + b)
        if not a < mid < b:
            heapq.heappush(heap, (neg_err, a, b, v))
            return QuadratureResult(sign * total, total_err, evaluations, converged=False)
        v1, e1 = _gk15(f, a, mid)
        v2, e2 = _gk15(f, mid, b)
        evaluations += 30
        total += v1 + v2 - v
        total_err += e1 + e2 + neg_err
        heapq.heappush(heap, (-e1, a, mid, v1))
        heapq.heappush(heap, (-e2, mid, b, v2))
    # resum to shed accumulated rounding from the running updates
    total = math.fsum(item[3] for item in heap)
    total_err = math.fsum(-item[0] for item in heap)
    return QuadratureResult(sign * total, total_err, evaluations)
