"""Real-argument Airy functions Ai, Bi and their derivatives, plus zeros.

Inside ``|x| <= 10`` values come from Taylor expansions of the Airy equation
``y'' = x y`` about tabulated nodes.  The node table is generated once, at
import: Ai on ``x >= 0`` is integrated backward from an asymptotic anchor at
``x = 10`` (the direction in which Ai is the dominant solution), everything
else is integrated outward from the exact values at the origin.  Beyond
``|x| = 10`` the standard asymptotic series are used directly.

A plain Maclaurin series would lose most of its digits to cancellation in Ai
for moderate positive ``x``; the node scheme keeps relative accuracy there.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .errors import AiryOverflowError, DomainError

# Ai(0), Ai'(0), Bi(0), Bi'(0): 3^(-2/3)/Gamma(2/3), -3^(-1/3)/Gamma(1/3), ...
AI0 = 0.35502805388781723926
AIP0 = -0.25881940379280679840
BI0 = 0.61492662744600073515
BIP0 = 0.44828835735382635791

_X_ASYM = 10.0
_NODE_STEP = 0.25
_EVAL_TERMS = 32
_BUILD_TERMS = 48
_ASYM_TERMS = 30


class AiryValues(NamedTuple):
    ai: float | np.ndarray
    bi: float | np.ndarray
    ai_prime: float | np.ndarray
    bi_prime: float | np.ndarray


def _asymptotic_coefficients(count: int) -> tuple[np.ndarray, np.ndarray]:
    u = np.empty(count)
    u[0] = 1.0
    for k in range(1, count):
        u[k] = u[k - 1] * (6 * k - 5) * (6 * k - 3) * (6 * k - 1) / ((2 * k - 1) * 216 * k)
    k = np.arange(count)
    v = -(6 * k + 1) / (6 * k - 1) * u
    return u, v


_U, _V = _asymptotic_coefficients(2 * _ASYM_TERMS)


def _asymptotic_positive(x: np.ndarray, with_bi: bool = True):
    zeta = 2.0 / 3.0 * x**1.5
    inv = 1.0 / zeta
    powers = inv[None, :] ** np.arange(_ASYM_TERMS)[:, None]
    alt = (-1.0) ** np.arange(_ASYM_TERMS)[:, None]
    u = _U[:_ASYM_TERMS, None] * powers
    v = _V[:_ASYM_TERMS, None] * powers
    x14 = x**0.25
    sqpi = math.sqrt(math.pi)
    with np.errstate(under="ignore"):
        decay = np.exp(-zeta)
        ai = decay / (2 * sqpi * x14) * (alt * u).sum(axis=0)
        aip = -x14 * decay / (2 * sqpi) * (alt * v).sum(axis=0)
    if not with_bi:
        return ai, aip, None, None
    with np.errstate(over="ignore"):
        grow = np.exp(zeta)
        bi = grow / (sqpi * x14) * u.sum(axis=0)
        bip = x14 * grow / sqpi * v.sum(axis=0)
    return ai, aip, bi, bip


def _asymptotic_negative(x: np.ndarray):
    t = -x
    zeta = 2.0 / 3.0 * t**1.5
    inv = 1.0 / zeta
    half = _ASYM_TERMS // 2
    j = np.arange(half)[:, None]
    sign = (-1.0) ** j
    even_pow = inv[None, :] ** (2 * j)
    odd_pow = even_pow * inv[None, :]
    pu = (sign * _U[0 : 2 * half : 2, None] * even_pow).sum(axis=0)
    qu = (sign * _U[1 : 2 * half : 2, None] * odd_pow).sum(axis=0)
    pv = (sign * _V[0 : 2 * half : 2, None] * even_pow).sum(axis=0)
    qv = (sign * _V[1 : 2 * half : 2, None] * odd_pow).sum(axis=0)
    theta = zeta + math.pi / 4
    s, c = np.sin(theta), np.cos(theta)
    t14 = t**0.25
    sqpi = math.sqrt(math.pi)
    ai = (s * pu - c * qu) / (sqpi * t14)
    bi = (c * pu + s * qu) / (sqpi * t14)
    aip = -t14 / sqpi * (c * pv + s * qv)
    bip = t14 / sqpi * (s * pv - c * qv)
    return ai, aip, bi, bip


def _taylor(x0, y, dy, h, nterms):
    """Advance solutions of y'' = x y from x0 by h (array-friendly)."""
    a_km1 = y * 0.0
    a_k = y
    a_kp1 = dy
    val = y + dy * h
    der = dy.copy() if isinstance(dy, np.ndarray) else dy
    hp = h  # h**k for the derivative term of a_{k+1}
    hk = h  # h**(k+1)
    for k in range(0, nterms - 2):
        a_next = (x0 * a_k + a_km1) / ((k + 2) * (k + 1))
        hk = hk * h
        val = val + a_next * hk
        der = der + (k + 2) * a_next * hp
        hp = hp * h
        a_km1, a_k, a_kp1 = a_k, a_kp1, a_next
    return val, der


def _build_nodes():
    n_side = int(round(_X_ASYM / _NODE_STEP))
    xs = np.arange(-n_side, n_side + 1) * _NODE_STEP
    table = np.empty((xs.size, 4))  # ai, aip, bi, bip
    mid = n_side
    table[mid] = (AI0, AIP0, BI0, BIP0)

    # Ai for x >= 0: backward from the asymptotic anchor
    ai, aip, _, _ = _asymptotic_positive(np.array([_X_ASYM]), with_bi=False)
    y, dy = float(ai[0]), float(aip[0])
    table[-1, 0:2] = (y, dy)
    for i in range(xs.size - 1, mid, -1):
        y, dy = _taylor(xs[i], y, dy, -_NODE_STEP, _BUILD_TERMS)
        table[i - 1, 0:2] = (y, dy)
    # the anchor-propagated value at the origin is replaced by the exact one
    table[mid, 0:2] = (AI0, AIP0)

    # Bi for x > 0: forward from the origin (dominant direction)
    y, dy = BI0, BIP0
    for i in range(mid, xs.size - 1):
        y, dy = _taylor(xs[i], y, dy, _NODE_STEP, _BUILD_TERMS)
        table[i + 1, 2:4] = (y, dy)

    # both for x < 0: outward from the origin (oscillatory, neutral)
    ya, dya, yb, dyb = AI0, AIP0, BI0, BIP0
    for i in range(mid, 0, -1):
        ya, dya = _taylor(xs[i], ya, dya, -_NODE_STEP, _BUILD_TERMS)
        yb, dyb = _taylor(xs[i], yb, dyb, -_NODE_STEP, _BUILD_TERMS)
        table[i - 1] = (ya, dya, yb, dyb)
    return xs, table


_NODE_X, _NODE_VALUES = _build_nodes()


def _from_nodes(x: np.ndarray):
    idx = np.rint((x - _NODE_X[0]) / _NODE_STEP).astype(int)
    idx = np.clip(idx, 0, _NODE_X.size - 1)
    x0 = _NODE_X[idx]
    h = x - x0
    rows = _NODE_VALUES[idx]
    ai, aip = _taylor(x0, rows[:, 0], rows[:, 1], h, _EVAL_TERMS)
    bi, bip = _taylor(x0, rows[:, 2], rows[:, 3], h, _EVAL_TERMS)
    return ai, aip, bi, bip


def _scalar_from_nodes(x: float):
    # plain-float path: root searches call the kernel one point at a time
    i = min(max(int(round((x - _NODE_X[0]) / _NODE_STEP)), 0), _NODE_X.size - 1)
    x0 = float(_NODE_X[i])
    a, ap, b, bp = (float(v) for v in _NODE_VALUES[i])
    ai, aip = _taylor(x0, a, ap, x - x0, _EVAL_TERMS)
    bi, bip = _taylor(x0, b, bp, x - x0, _EVAL_TERMS)
    return ai, aip, bi, bip


def _evaluate(x: np.ndarray):
    ai = np.empty_like(x)
    aip = np.empty_like(x)
    bi = np.empty_like(x)
    bip = np.empty_like(x)
    inner = np.abs(x) <= _X_ASYM
    right = x > _X_ASYM
    left = x < -_X_ASYM
    for mask, fn in ((inner, _from_nodes), (right, _asymptotic_positive), (left, _asymptotic_negative)):
        if mask.any():
            a, ap, b, bp = fn(x[mask])
            ai[mask], aip[mask], bi[mask], bip[mask] = a, ap, b, bp
    return ai, aip, bi, bip


def _as_array(x):
    arr = np.asarray(x, dtype=float)
    if np.isnan(arr).any():
        raise DomainError("Airy functions are undefined for NaN arguments")
    return arr


def airy_eval(x) -> AiryValues:
    """Ai, Bi, Ai' and Bi' at real ``x`` (scalar or array).

    Raises :class:`AiryOverflowError` when Bi or Bi' exceeds float64 range
    (``x`` beyond roughly 104); Ai silently underflows to zero.
    """
    arr = _as_array(x)
    if arr.ndim == 0 and abs(float(arr)) <= _X_ASYM:
        ai, aip, bi, bip = _scalar_from_nodes(float(arr))
        return AiryValues(ai, bi, aip, bip)
    flat = np.atleast_1d(arr).ravel()
    ai, aip, bi, bip = _evaluate(flat)
    shape = arr.shape
    if arr.ndim == 0:
        values = AiryValues(float(ai[0]), float(bi[0]), float(aip[0]), float(bip[0]))
    else:
        values = AiryValues(ai.reshape(shape), bi.reshape(shape), aip.reshape(shape), bip.reshape(shape))
    for name, comp in (("bi", bi), ("bi_prime", bip)):
        if not np.all(np.isfinite(comp)):
            raise AiryOverflowError(name, values)
    return values


def airy_ai(x):
    """Ai and Ai' only; never overflows."""
    arr = _as_array(x)
    if arr.ndim == 0 and abs(float(arr)) <= _X_ASYM:
        ai, aip, _, _ = _scalar_from_nodes(float(arr))
        return ai, aip
    flat = np.atleast_1d(arr).ravel()
    ai = np.empty_like(flat)
    aip = np.empty_like(flat)
    inner = np.abs(flat) <= _X_ASYM
    if inner.any():
        a, ap, _, _ = _from_nodes(flat[inner])
        ai[inner], aip[inner] = a, ap
    right = flat > _X_ASYM
    if right.any():
        a, ap, _, _ = _asymptotic_positive(flat[right], with_bi=False)
        ai[right], aip[right] = a, ap
    left = flat < -_X_ASYM
    if left.any():
        a, ap, _, _ = _asymptotic_negative(flat[left])
        ai[left], aip[left] = a, ap
    if arr.ndim == 0:
        return float(ai[0]), float(aip[0])
    return ai.reshape(arr.shape), aip.reshape(arr.shape)


def _zero_guess(t: float, prime: bool) -> float:
    # leading terms of the asymptotic zero expansions T(t), U(t)
    if prime:
        return -(t ** (2 / 3)) * (1 - 7 / 48 * t**-2 + 35 / 288 * t**-4)
    return -(t ** (2 / 3)) * (1 + 5 / 48 * t**-2 - 5 / 36 * t**-4)


def _bisect(f, lo: float, hi: float) -> float:
    f_lo = f(lo)
    while True:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        f_mid = f(mid)
        if f_mid == 0.0:
            return mid
        if (f_mid < 0) == (f_lo < 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _zero(k: int, prime: bool) -> float:
    if not isinstance(k, (int, np.integer)) or k < 1:
        raise DomainError(f"zero index must be a positive integer, got {k!r}")
    t = 3 * math.pi * (4 * k - (3 if prime else 1)) / 8
    guess = _zero_guess(t, prime)
    f = (lambda x: airy_ai(x)[1]) if prime else (lambda x: airy_ai(x)[0])
    half = 0.25 * math.pi / math.sqrt(abs(guess))
    lo, hi = guess - half, guess + half
    while (f(lo) < 0) == (f(hi) < 0):
        half *= 1.5
        lo, hi = guess - half, guess + half
    return _bisect(f, lo, hi)


@lru_cache(maxsize=None)
def ai_zero(k: int) -> float:
    """k-th zero of Ai (k = 1 gives -2.33810741...)."""
    return _zero(k, prime=False)


@lru_cache(maxsize=None)
def ai_prime_zero(k: int) -> float:
    """k-th zero of Ai' (k = 1 gives -1.01879297...)."""
    return _zero(k, prime=True)
