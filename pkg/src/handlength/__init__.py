"""Exact, spectral and simulated distribution of a craps shooter's hand length."""

from .analysis import StructureReport, verify_interlacing, verify_positive_definite
from .exact import (
    TailTable,
    UnboundedHandError,
    mean_length,
    pmf,
    tail_matrix_power,
    tail_recursion,
    tail_table,
)
from .game import (
    ChainSpec,
    DiceDistribution,
    GameSpecError,
    PointGameSpec,
    compile_chain,
    crapless,
    craps,
    load_game,
    standard_dice,
)
from .montecarlo import SimulationResult, estimate_tail, simulate_hand
from .spectral import (
    GeometricMixture,
    Spectrum,
    characteristic_polynomial,
    eigenvalues,
    eigenvalues_numeric,
    eigenvalues_radical,
    eigenvector,
    leading_term_bound,
    mixture,
    mixture_coefficients,
    tail_closed_form,
)

__all__ = [
    "ChainSpec", "DiceDistribution", "GameSpecError", "GeometricMixture", "PointGameSpec",
    "SimulationResult", "Spectrum", "StructureReport", "TailTable", "UnboundedHandError",
    "characteristic_polynomial", "compile_chain", "crapless", "craps", "eigenvalues",
    "eigenvalues_numeric", "eigenvalues_radical", "eigenvector", "estimate_tail",
    "leading_term_bound", "load_game", "mean_length", "mixture", "mixture_coefficients",
    "pmf", "simulate_hand", "standard_dice", "tail_closed_form", "tail_matrix_power",
    "tail_recursion", "tail_table", "verify_interlacing", "verify_positive_definite",
]
