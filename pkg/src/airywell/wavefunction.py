"""Piecewise-defined wavefunctions on z >= 0 with parity reflection."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Literal, NamedTuple

import numpy as np

from .errors import ConvergenceError, DomainError
from .model import Parity
from .numerics import integrate

BranchKind = Literal["bare", "patch", "maf"]


@dataclass(frozen=True)
class Region:
    """One branch of a piecewise wavefunction, valid on ``[lo, hi]``.

    ``func`` is the un-normalized branch formula; it is array-valued and may
    be evaluated outside its region (that is how the figure overlays of bare
    and patching functions are produced).
    """

    lo: float
    hi: float
    label: str
    kind: BranchKind
    func: Callable[[np.ndarray], np.ndarray]


class Jump(NamedTuple):
    z: float
    left: float
    right: float
    jump: float
    relative: float


class PiecewiseWavefunction:
    """Normalized wavefunction assembled from contiguous regions on [0, inf).

    Values at negative ``z`` follow from ``parity``.  The last region extends
    to infinity; ``z_max`` is the half-width of the normalization interval.
    """

    def __init__(self, regions, parity: Parity, method: str, eps: float, z_max: float,
                 norm: float = 1.0):
        regions = tuple(regions)
        if not regions or regions[0].lo != 0.0:
            raise DomainError("regions must start at z = 0")
        for a, b in zip(regions, regions[1:]):
            if a.hi != b.lo:
                raise DomainError(f"regions {a.label} and {b.label} are not contiguous")
        self.regions = regions
        self.parity = parity
        self.method = method
        self.eps = eps
        self.z_max = z_max
        self.norm = norm

    @classmethod
    def normalized(cls, regions, parity: Parity, method: str, eps: float, z_max: float,
                   tol: float = 1e-12) -> PiecewiseWavefunction:
        raw = cls(regions, parity, method, eps, z_max)
        total = 0.0
        for reg in raw.regions:
            lo, hi = reg.lo, min(reg.hi, z_max)
            if hi <= lo:
                continue
            res = integrate(lambda z, f=reg.func: f(z) ** 2, lo, hi, tol)
            if not res.converged:
                raise ConvergenceError(f"normalization integral over {reg.label} did not converge")
            total += res.value
        # the mirror image on z < 0 contributes the same amount
        raw.norm = 1.0 / math.sqrt(2.0 * total)
        return raw

    @property
    def boundaries(self) -> list[float]:
        return [reg.hi for reg in self.regions[:-1]]

    def _locate(self, z: np.ndarray) -> np.ndarray:
        return np.searchsorted(np.array(self.boundaries), z, side="right")

    def __call__(self, z):
        z = np.asarray(z, dtype=float)
        a = np.abs(z)
        idx = self._locate(a)
        out = np.empty_like(a)
        for i, reg in enumerate(self.regions):
            mask = idx == i
            if np.any(mask):
                out[mask] = reg.func(a[mask])
        out *= self.norm
        if self.parity == "odd":
            out = np.where(z < 0, -out, out)
        return out if out.ndim else float(out)

    def region_labels(self, z) -> np.ndarray:
        idx = self._locate(np.abs(np.asarray(z, dtype=float)))
        labels = np.array([reg.label for reg in self.regions])
        return labels[idx]

    def region(self, label: str) -> Region:
        for reg in self.regions:
            if reg.label == label:
                return reg
        raise KeyError(label)

    def branch(self, label: str, z):
        """Normalized value of one branch formula at ``z >= 0``, ignoring its region."""
        z = np.asarray(z, dtype=float)
        with np.errstate(invalid="ignore"):
            return self.norm * self.region(label).func(z)

    def one_sided(self, z: float) -> tuple[float, float]:
        """Values of the branches meeting at boundary ``z`` (left, right)."""
        i = self.boundaries.index(z)
        zz = np.array([z])
        left = self.norm * float(self.regions[i].func(zz)[0])
        right = self.norm * float(self.regions[i + 1].func(zz)[0])
        return left, right

    @cached_property
    def peak(self) -> float:
        grid = np.linspace(0.0, self.z_max, 4001)
        return float(np.max(np.abs(self(grid))))


def discontinuity_report(wf: PiecewiseWavefunction) -> list[Jump]:
    """Jump of ``wf`` at each internal region boundary, absolute and relative to max|psi|."""
    out = []
    for z in wf.boundaries:
        left, right = wf.one_sided(z)
        jump = abs(left - right)
        out.append(Jump(z, left, right, jump, jump / wf.peak))
    return out
