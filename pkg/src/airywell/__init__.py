"""Exact, WKB and modified-Airy-function bound states of the harmonic
oscillator and the cusped double well ``(|z| - z0)**2``."""

from .airy import AiryValues, ai_prime_zero, ai_zero, airy_ai, airy_eval
from .errors import AiryOverflowError, ConfigurationError, ConvergenceError, DomainError
from .exact import ExactState, SpectrumResult, build_hamiltonian, exact_spectrum, solve_spectrum
from .maf import (MafLevel, dwp_maf_coeffs, dwp_maf_eigenvalues, dwp_maf_wavefunction,
                  sho_maf_energies, sho_maf_wavefunction)
from .model import LevelSearch, Potential, SolverConfig
from .numerics import find_roots, integrate, refine_root, scan_brackets
from .wavefunction import PiecewiseWavefunction, discontinuity_report
from .wkb import (WkbLevel, dwp_wkb_eigenvalues, dwp_wkb_wavefunction, sho_wkb_levels,
                  sho_wkb_wavefunction)

__version__ = "0.1.0"

__all__ = [
    "AiryOverflowError", "AiryValues", "ConfigurationError", "ConvergenceError", "DomainError",
    "ExactState", "LevelSearch", "MafLevel", "PiecewiseWavefunction", "Potential",
    "SolverConfig", "SpectrumResult", "WkbLevel", "ai_prime_zero", "ai_zero", "airy_ai",
    "airy_eval", "build_hamiltonian", "discontinuity_report", "dwp_maf_coeffs",
    "dwp_maf_eigenvalues", "dwp_maf_wavefunction", "dwp_wkb_eigenvalues",
    "dwp_wkb_wavefunction", "exact_spectrum", "find_roots", "integrate", "refine_root",
    "scan_brackets", "sho_maf_energies", "sho_maf_wavefunction", "sho_wkb_levels",
    "sho_wkb_wavefunction", "solve_spectrum",
]
