"""Exact p-adic models of the non-Archimedean unilateral and backward shifts."""

from .padic import (
    INFINITE,
    ConfigError,
    DomainError,
    PadicError,
    PadicScalar,
    PrecisionError,
    PrimeConfig,
    factorial_valuation,
    from_rational,
)
from .sequences import BoundedVector, C0Vector, shift_S, shift_T, sup_norm, pairing
from .mahler import GridFunction
from .tate import MonicPoly, TateSeries
from .models import ContractionMatrix, EVectorSequence, FactorialSeries

__all__ = [
    "INFINITE", "ConfigError", "DomainError", "PadicError", "PadicScalar",
    "PrecisionError", "PrimeConfig", "factorial_valuation", "from_rational",
    "BoundedVector", "C0Vector", "shift_S", "shift_T", "sup_norm", "pairing",
    "GridFunction", "MonicPoly", "TateSeries",
    "ContractionMatrix", "EVectorSequence", "FactorialSeries",
]
