"""Potentials, solver settings and level-search results.

Everything is dimensionless: lengths in units of the oscillator length
``x_HO = sqrt(hbar / (m omega))`` and energies ``eps = E / (hbar omega / 2)``.
In these units the harmonic potential is ``z**2`` and the cusped double well
is ``(|z| - z0)**2`` with barrier height ``z0**2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Literal

import numpy as np

from .errors import ConfigurationError

Parity = Literal["even", "odd"]


def parity_of(n: int) -> Parity:
    return "even" if n % 2 == 0 else "odd"


@dataclass(frozen=True)
class Potential:
    kind: Literal["sho", "dwp"]
    z0: float = 0.0

    def __post_init__(self):
        if self.kind not in ("sho", "dwp"):
            raise ConfigurationError(f"unknown potential kind {self.kind!r}")
        if self.kind == "dwp" and not self.z0 >= 0:
            raise ConfigurationError(f"double-well offset must be >= 0, got {self.z0}")
        if self.kind == "sho" and self.z0 != 0.0:
            object.__setattr__(self, "z0", 0.0)

    @classmethod
    def sho(cls) -> Potential:
        return cls("sho")

    @classmethod
    def dwp(cls, z0: float) -> Potential:
        return cls("dwp", float(z0))

    @classmethod
    def dwp_from_barrier(cls, z0_squared: float) -> Potential:
        if not z0_squared > 0:
            raise ConfigurationError(f"barrier height z0^2 must be positive, got {z0_squared}")
        return cls("dwp", math.sqrt(z0_squared))

    @property
    def barrier(self) -> float:
        """Potential at the origin, z0**2 (zero for the oscillator)."""
        return self.z0 * self.z0

    def __call__(self, z):
        z = np.asarray(z, dtype=float)
        if self.kind == "sho":
            return z * z
        return (np.abs(z) - self.z0) ** 2

    def label(self) -> str:
        return "sho" if self.kind == "sho" else f"dwp(z0^2={self.barrier:g})"


@dataclass(frozen=True)
class SolverConfig:
    """Numerical settings.

    ``z_c`` and ``n_max`` size the sine basis of the exact solver; ``delta_z``
    is the WKB patch half-width (``None`` picks a per-level default).
    """

    z_c: float = 10.0
    n_max: int = 200
    quad_tol: float = 1e-10
    root_tol: float = 1e-12
    delta_z: float | None = None
    scan_points: int = 2000

    def __post_init__(self):
        if not self.z_c > 0:
            raise ConfigurationError("z_c must be positive")
        if int(self.n_max) != self.n_max or self.n_max < 1:
            raise ConfigurationError("n_max must be a positive integer")
        if not (self.quad_tol > 0 and self.root_tol > 0):
            raise ConfigurationError("tolerances must be positive")
        if self.delta_z is not None and not self.delta_z > 0:
            raise ConfigurationError("delta_z must be positive")
        if self.scan_points < 2:
            raise ConfigurationError("scan_points must be at least 2")

    @classmethod
    def default_for(cls, potential: Potential, **overrides) -> SolverConfig:
        z_c = 10.0 if potential.kind == "sho" else max(10.0, 10.0 * potential.z0)
        return replace(cls(z_c=z_c), **overrides)


@dataclass(frozen=True)
class LevelSearch:
    """Levels found by an eigenvalue search.

    ``exhausted`` is set when fewer than ``requested`` sub-barrier levels
    exist; the missing entries are what the tables print as N/A.
    """

    levels: tuple
    requested: int
    notes: tuple[str, ...] = field(default=())

    @property
    def exhausted(self) -> bool:
        return len(self.levels) < self.requested

    def __len__(self):
        return len(self.levels)

    def __iter__(self):
        return iter(self.levels)

    def __getitem__(self, i):
        return self.levels[i]

    @property
    def energies(self) -> list[float]:
        return [lv.eps for lv in self.levels]
