"""Adaptive m-ary and sliding-window modular exponentiation.

The exponentiation strategies pick their digit width / window size from
the exponent's bit-length via an analytical multiplication-count model,
and every modular operation is tallied so the model can be verified
against measured counts.
"""

from ._backend import available_backends, backend_name, set_backend
from .bignum import CountingContext, DigitString, ModulusError, bit_length, digits_base_2m
from .cost_model import (
    ConvexityReport,
    Method,
    Policy,
    ThresholdTable,
    convexity_report,
    mary_cost_derivative,
    optimal_m,
    predicted_mults,
    threshold_csv,
    threshold_table,
)
from .modexp import (
    Baseline,
    PowerTable,
    TableKind,
    Token,
    WindowPlan,
    ZERO,
    adaptive_exp,
    baseline_exp,
    decompose_windows,
    mary_exp,
    precompute_powers,
    window_exp,
)

__all__ = [
    "Baseline",
    "ConvexityReport",
    "CountingContext",
    "DigitString",
    "Method",
    "ModulusError",
    "Policy",
    "PowerTable",
    "TableKind",
    "ThresholdTable",
    "Token",
    "WindowPlan",
    "ZERO",
    "adaptive_exp",
    "available_backends",
    "backend_name",
    "baseline_exp",
    "bit_length",
    "convexity_report",
    "decompose_windows",
    "digits_base_2m",
    "mary_cost_derivative",
    "mary_exp",
    "optimal_m",
    "precompute_powers",
    "predicted_mults",
    "set_backend",
    "threshold_csv",
    "threshold_table",
    "window_exp",
]

__version__ = "0.1.0"
