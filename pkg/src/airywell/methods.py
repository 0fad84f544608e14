"""Uniform access to levels and wavefunctions across the three methods."""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Callable, Literal

import numpy as np

from . import exact, maf, wkb
from .errors import DomainError
from .model import Parity, Potential, SolverConfig, parity_of

Method = Literal["exact", "wkb", "maf"]
METHODS: tuple[Method, ...] = ("exact", "wkb", "maf")


@dataclass(frozen=True)
class Level:
    n: int
    parity: Parity
    eps: float


def levels(pot: Potential, method: Method, count: int, cfg: SolverConfig) -> list[Level]:
    """Up to ``count`` lowest levels.  Double-well WKB and MAF stop at the barrier."""
    if method == "exact":
        spec = exact.exact_spectrum(pot, cfg, count)
        return [Level(n, spec.parities[n], float(spec.energies[n])) for n in range(count)]
    if method == "wkb":
        if pot.kind == "sho":
            return [Level(lv.n, lv.parity, lv.eps) for lv in wkb.sho_wkb_levels(count)]
        found = wkb.dwp_wkb_eigenvalues(pot.z0, count, cfg)
    elif method == "maf":
        if pot.kind == "sho":
            return [Level(lv.n, lv.parity, lv.eps) for lv in maf.sho_maf_energies(count, cfg)]
        found = maf.dwp_maf_eigenvalues(pot.z0, count, cfg)
    else:
        raise DomainError(f"unknown method {method!r}")
    return [Level(lv.n, lv.parity, lv.eps) for lv in found]


def box_for(pot: Potential, cfg: SolverConfig, z_max: float) -> SolverConfig:
    """Widen the exact solver's box, if needed, to hold the grid plus a margin."""
    need = 2.0 * (z_max + 2.0)
    return cfg if cfg.z_c >= need else replace(cfg, z_c=need)


def wavefunction(pot: Potential, method: Method, n: int, cfg: SolverConfig,
                 z_max: float) -> tuple[float, Callable[[np.ndarray], np.ndarray], object]:
    """``(eps, evaluator, piecewise-or-None)`` for level ``n``.

    The evaluator accepts any real ``z`` (negative values by parity).
    """
    if n < 0:
        raise DomainError("level index must be non-negative")
    if method == "exact":
        spec = exact.exact_spectrum(pot, cfg, n + 1)
        state = exact.ExactState(spec, n)
        return state.eps, state, None
    if method == "wkb":
        if pot.kind == "sho":
            lv = wkb.sho_wkb_levels(n + 1)[n]
            wf = wkb.sho_wkb_wavefunction(lv, cfg.delta_z, z_max)
            return lv.eps, wf, wf
        found = wkb.dwp_wkb_eigenvalues(pot.z0, n + 1, cfg)
        _require(found, n, pot)
        wf = wkb.dwp_wkb_wavefunction(found[n], pot.z0, cfg.delta_z, z_max)
        return found[n].eps, wf, wf
    if method == "maf":
        if pot.kind == "sho":
            lv = maf.sho_maf_energies(n + 1, cfg)[n]
            wf = maf.sho_maf_wavefunction(lv, z_max)
            return lv.eps, wf, wf
        found = maf.dwp_maf_eigenvalues(pot.z0, n + 1, cfg)
        _require(found, n, pot)
        wf = maf.dwp_maf_wavefunction(found[n], pot.z0, z_max)
        return found[n].eps, wf, wf
    raise DomainError(f"unknown method {method!r}")


def _require(found, n, pot):
    if len(found) <= n:
        raise DomainError(f"level n={n} is not below the barrier z0^2={pot.barrier:g} "
                          f"(only {len(found)} sub-barrier levels)")


def default_zmax(pot: Potential, n: int) -> float:
    """Grid half-width reaching well past the outer turning point of level ``n``."""
    return pot.z0 + math.sqrt(2 * n + 1) + 4.0


def expected_parity(n: int) -> Parity:
    return parity_of(n)
