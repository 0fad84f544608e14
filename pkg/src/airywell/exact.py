"""Numerically exact spectra from an infinite-square-well sine basis.

The potential is centred in a box ``0 < z < z_c``; with basis functions
``sqrt(2/z_c) sin(m pi z / z_c)`` the Hamiltonian ``-d^2/dz^2 + v(z)`` has
kinetic part ``(n pi / z_c)^2 delta_nm`` and potential elements built from the
moments ``K_l(n) = int_0^{1/2} x^l cos(n pi x) dx``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConfigurationError, DomainError
from .model import Parity, Potential, SolverConfig

NEAR_DEGENERATE = 1e-9


def k_moment(l: int, n):
    """``int_0^{1/2} x**l cos(n pi x) dx`` for ``l`` in {0, 1, 2}; vectorized over ``n``."""
    if l not in (0, 1, 2):
        raise DomainError(f"moment order must be 0, 1 or 2, got {l}")
    n_arr = np.abs(np.asarray(n, dtype=float))
    out = np.empty_like(n_arr)
    zero = n_arr == 0
    out[zero] = (0.5, 1 / 8, 1 / 24)[l]
    x = n_arr[~zero] * math.pi
    k0 = np.sin(x / 2) / x
    if l == 0:
        out[~zero] = k0
    elif l == 1:
        out[~zero] = 0.5 * k0 - (1 - np.cos(x / 2)) / x**2
    else:
        out[~zero] = (0.25 - 2 / x**2) * k0 + np.cos(x / 2) / x**2
    return out if out.ndim else float(out)


def kinetic_element(n: int, m: int, z_c: float) -> float:
    if n < 1 or m < 1:
        raise DomainError("basis indices start at 1")
    return (n * math.pi / z_c) ** 2 if n == m else 0.0


def _check_fits(pot: Potential, z_c: float):
    if pot.kind == "dwp" and pot.z0 > z_c / 2:
        raise ConfigurationError(f"double well with z0={pot.z0} does not fit in a box of width {z_c}")


def _potential_matrix(pot: Potential, n, m, z_c: float):
    # cos(k pi/2) is exactly 0 or +-1 for integer k; use a lookup to keep zeros exact
    def cos_half(k):
        return np.array([1.0, 0.0, -1.0, 0.0])[np.mod(k, 4)]

    def moment(k):
        if pot.kind == "sho":
            return k_moment(2, k)
        r = pot.z0 / z_c
        return k_moment(2, k) - 2 * r * k_moment(1, k) + r * r * k_moment(0, k)

    diff, total = n - m, n + m
    return 2 * z_c**2 * (cos_half(diff) * moment(diff) - cos_half(total) * moment(total))


def potential_element(pot: Potential, n: int, m: int, z_c: float) -> float:
    """``(2/z_c) int_0^{z_c} sin(n pi z/z_c) v(z - z_c/2) sin(m pi z/z_c) dz``."""
    if n < 1 or m < 1:
        raise DomainError("basis indices start at 1")
    _check_fits(pot, z_c)
    return float(_potential_matrix(pot, np.array(n), np.array(m), z_c))


def build_hamiltonian(pot: Potential, cfg: SolverConfig) -> np.ndarray:
    _check_fits(pot, cfg.z_c)
    idx = np.arange(1, cfg.n_max + 1)
    n, m = np.meshgrid(idx, idx, indexing="ij")
    h = _potential_matrix(pot, n, m, cfg.z_c)
    h[idx - 1, idx - 1] += (idx * math.pi / cfg.z_c) ** 2
    # formulas are symmetric in (n, m) up to rounding; make it bitwise
    return 0.5 * (h + h.T)


@dataclass(frozen=True)
class SpectrumResult:
    energies: np.ndarray
    coefficients: np.ndarray  # column k is the eigenvector of energies[k]
    parities: tuple[Parity, ...]
    z_c: float
    n_max: int

    @property
    def near_degenerate(self) -> list[tuple[int, int]]:
        e = self.energies
        return [(i, i + 1) for i in range(len(e) - 1) if e[i + 1] - e[i] < NEAR_DEGENERATE]


def _parity(c: np.ndarray) -> Parity:
    # odd-m sine functions are symmetric about the box centre
    return "even" if np.sum(c[0::2] ** 2) >= np.sum(c[1::2] ** 2) else "odd"


def solve_spectrum(h: np.ndarray, k: int, z_c: float = float("nan")) -> SpectrumResult:
    """Lowest ``k`` eigenpairs of the symmetric matrix ``h``."""
    h = np.asarray(h, dtype=float)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise DomainError("matrix must be square")
    if k < 1 or k > h.shape[0]:
        raise DomainError(f"cannot extract {k} eigenpairs from a {h.shape[0]}x{h.shape[0]} matrix")
    scale = max(1.0, float(np.max(np.abs(h))))
    if np.max(np.abs(h - h.T)) > 1e-12 * scale:
        raise DomainError("matrix is not symmetric")
    w, v = np.linalg.eigh(h)
    w, v = w[:k], v[:, :k].copy()
    for j in range(k):
        # deterministic sign: largest component positive
        i = int(np.argmax(np.abs(v[:, j])))
        if v[i, j] < 0:
            v[:, j] = -v[:, j]
    # equal energies (to the degeneracy threshold) are listed even parity first
    parities = [_parity(v[:, j]) for j in range(k)]
    order = list(range(k))
    for j in range(k - 1):
        a, b = order[j], order[j + 1]
        if w[b] - w[a] < NEAR_DEGENERATE and parities[a] == "odd" and parities[b] == "even":
            order[j], order[j + 1] = b, a
    return SpectrumResult(w[order], v[:, order], tuple(parities[i] for i in order), z_c, h.shape[0])


def exact_spectrum(pot: Potential, cfg: SolverConfig | None = None, k: int = 9) -> SpectrumResult:
    cfg = cfg or SolverConfig.default_for(pot)
    return solve_spectrum(build_hamiltonian(pot, cfg), k, cfg.z_c)


def _basis_sum(coeffs: np.ndarray, z_c: float, z: np.ndarray) -> np.ndarray:
    m = np.arange(1, coeffs.size + 1)
    return math.sqrt(2 / z_c) * np.sin(np.outer(z, m) * math.pi / z_c) @ coeffs


def _sign_convention(coeffs: np.ndarray, z_c: float) -> float:
    # positive at the first extremum from the left (ignoring the box-wall tail)
    grid = np.linspace(0.0, z_c, 20001)
    psi = _basis_sum(coeffs, z_c, grid)
    mag = np.abs(psi)
    big = mag >= 0.01 * mag.max()
    for i in range(1, grid.size - 1):
        if big[i] and mag[i] >= mag[i - 1] and mag[i] >= mag[i + 1]:
            return 1.0 if psi[i] > 0 else -1.0
    return 1.0


def wavefunction_from_coeffs(coeffs, z_c: float, grid) -> tuple[np.ndarray, np.ndarray]:
    """Sample the basis expansion on box coordinates ``grid``.

    Returns ``(z - z_c/2, psi)``: positions in the centred coordinate and the
    wavefunction with its sign fixed to be positive at the first extremum.
    """
    coeffs = np.asarray(coeffs, dtype=float)
    z = np.asarray(grid, dtype=float)
    if np.any(z < 0) or np.any(z > z_c):
        raise DomainError("grid points must lie inside the box [0, z_c]")
    psi = _sign_convention(coeffs, z_c) * _basis_sum(coeffs, z_c, z)
    return z - z_c / 2, psi


class ExactState:
    """An exact eigenstate evaluated in the centred coordinate."""

    def __init__(self, spectrum: SpectrumResult, index: int):
        self.n = index
        self.eps = float(spectrum.energies[index])
        self.parity = spectrum.parities[index]
        self.z_c = spectrum.z_c
        self.coeffs = spectrum.coefficients[:, index]
        self._sign = _sign_convention(self.coeffs, self.z_c)

    def __call__(self, z):
        z = np.asarray(z, dtype=float)
        box = z + self.z_c / 2
        if np.any(box < 0) or np.any(box > self.z_c):
            raise DomainError("points outside the box")
        out = self._sign * _basis_sum(self.coeffs, self.z_c, np.atleast_1d(box))
        return out if z.ndim else float(out[0])
