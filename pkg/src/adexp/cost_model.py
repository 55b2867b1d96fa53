"""Analytical multiplication-count model for windowed exponentiation.

Two expected-count formulas, evaluated in exact rational arithmetic so
that minimizer comparisons at tight boundaries never flip from rounding:

    m-ary:          2^m - 2 + (k - m) + (1 - 2^-m) * (k - m) / m
    sliding window: 2^(m-1) + k + k / (m + 1)

with k the exponent bit-length and m the digit width / window size.
From these we derive minimizers, dispatch threshold tables, the
closed-form derivative of the m-ary cost, and numeric convexity checks.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

# Largest m ever searched; a precomputed table has 2^m entries, and 24
# already covers any exponent below 10^7 bits.
M_CAP = 24

LOG2 = math.log(2.0)


class Method(enum.Enum):
    MARY = "mary"
    WINDOW = "window"


class Policy(enum.Enum):
    PAPER = "paper"
    ARGMIN = "argmin"


class CostDomainError(ValueError):
    """Arguments outside the formula's domain."""


def _check_query(method: Method, k: int, m: int) -> None:
    if k < 1 or m < 1:
        raise CostDomainError("k and m must be positive")
    if method is Method.MARY and m > k:
        raise CostDomainError(f"m-ary requires m <= k, got m={m} k={k}")
    if method is Method.WINDOW and m < 2:
        raise CostDomainError(f"window requires m >= 2, got m={m}")


def predicted_mults_exact(method: Method, k: int, m: int) -> Fraction:
    """Expected multiplication count as an exact rational."""
    _check_query(method, k, m)
    if method is Method.MARY:
        return (
            Fraction(2**m - 2)
            + (k - m)
            + (1 - Fraction(1, 2**m)) * Fraction(k - m, m)
        )
    return Fraction(2 ** (m - 1)) + k + Fraction(k, m + 1)


def predicted_mults(method: Method, k: int, m: int) -> float:
    """Expected multiplication count rendered as a float."""
    return float(predicted_mults_exact(method, k, m))


# Hard-coded dispatch thresholds of the two adaptive algorithms:
# use m_star while k < bound, and the cap beyond the last bound.
MARY_PAPER_DISPATCH = ((6, 1), (35, 2), (122, 3), (369, 4), (1044, 5), (2823, 6), (7371, 7))
MARY_PAPER_CAP = 8
WINDOW_PAPER_DISPATCH = ((21, 2), (24, 3), (80, 4), (240, 5), (672, 6), (1792, 7), (4608, 8))
WINDOW_PAPER_CAP = 9


def _paper_m(method: Method, k: int) -> int:
    if method is Method.MARY:
        dispatch, cap = MARY_PAPER_DISPATCH, MARY_PAPER_CAP
    else:
        dispatch, cap = WINDOW_PAPER_DISPATCH, WINDOW_PAPER_CAP
    for bound, m_star in dispatch:
        if k < bound:
            return m_star
    return cap


def _argmin_m(method: Method, k: int) -> int:
    if method is Method.MARY:
        candidates = range(1, min(k, M_CAP) + 1)
    else:
        candidates = range(2, M_CAP + 1)
    best_cost: Fraction | None = None
    best_m = candidates[0]
    for m in candidates:
        cost = predicted_mults_exact(method, k, m)
        # <= keeps the largest minimizer on ties (e.g. k=6 m-ary).
        if best_cost is None or cost <= best_cost:
            best_cost = cost
            best_m = m
    return best_m


def optimal_m(method: Method, k: int, policy: Policy) -> int:
    """Digit width / window size chosen for a k-bit exponent."""
    if k < 1:
        raise CostDomainError("k must be positive")
    if policy is Policy.PAPER:
        return _paper_m(method, k)
    return _argmin_m(method, k)


@dataclass(frozen=True)
class ThresholdRow:
    k_lo: int
    k_hi: int | None  # None marks an open-ended range
    m_star: int


@dataclass(frozen=True)
class ThresholdTable:
    method: Method
    policy: Policy
    rows: tuple[ThresholdRow, ...]

    def lookup(self, k: int) -> int:
        for row in self.rows:
            if row.k_lo <= k and (row.k_hi is None or k <= row.k_hi):
                return row.m_star
        raise KeyError(k)


def threshold_table(method: Method, k_max: int, policy: Policy) -> ThresholdTable:
    """Merge equal-m runs of optimal_m over k = 1..k_max into ranges."""
    if k_max < 1:
        raise CostDomainError("k_max must be positive")
    rows: list[ThresholdRow] = []
    run_start = 1
    run_m = optimal_m(method, 1, policy)
    for k in range(2, k_max + 1):
        m = optimal_m(method, k, policy)
        if m != run_m:
            rows.append(ThresholdRow(run_start, k - 1, run_m))
            run_start, run_m = k, m
    rows.append(ThresholdRow(run_start, k_max, run_m))
    return ThresholdTable(method, policy, tuple(rows))


def threshold_csv(table: ThresholdTable) -> str:
    """CSV rendering; an open-ended k_hi serializes as empty."""
    lines = ["method,k_lo,k_hi,m_star,policy"]
    for row in table.rows:
        hi = "" if row.k_hi is None else str(row.k_hi)
        lines.append(
            f"{table.method.value},{row.k_lo},{hi},{row.m_star},{table.policy.value}"
        )
    return "\n".join(lines) + "\n"


def mary_cost_real(k: float, m: float) -> float:
    """m-ary cost formula extended to real-valued m (for calculus checks)."""
    return 2.0**m - 2.0 + (k - m) + (1.0 - 2.0**-m) * (k - m) / m


def mary_cost_derivative(k: int, m: float) -> float:
    """Closed-form partial derivative of the m-ary cost in m.

    d/dm = (k-m) * (2^-m ln2 / m - (1 - 2^-m) / m^2)
           - (1 - 2^-m) / m + 2^m ln2 - 1
    """
    if m <= 0 or m >= k:
        raise CostDomainError("requires 0 < m < k")
    p = 2.0**-m
    return (
        (k - m) * (p * LOG2 / m - (1.0 - p) / (m * m))
        - (1.0 - p) / m
        + 2.0**m * LOG2
        - 1.0
    )


def residual_term(m: float) -> float:
    """R(m) = m^-2 * ((m ln2 + 1) * 2^-m - 1).

    The derivative term whose sign drives the convexity argument; negative
    everywhere on m > 0.
    """
    if m <= 0:
        raise CostDomainError("requires m > 0")
    return ((m * LOG2 + 1.0) * 2.0**-m - 1.0) / (m * m)


@dataclass(frozen=True)
class ConvexityReport:
    method: Method
    k: int
    probes: tuple[tuple[int, float], ...]  # (m, second difference)
    all_nonnegative: bool
    residual_values: tuple[tuple[int, float], ...]  # (m, R(m))
    residual_all_negative: bool


def convexity_report(method: Method, k: int, m_lo: int, m_hi: int) -> ConvexityReport:
    """Discrete second differences of the cost in m over [m_lo, m_hi]."""
    lower = 1 if method is Method.MARY else 2
    if m_lo < lower:
        raise CostDomainError(f"m_lo must be >= {lower} for {method.value}")
    if method is Method.MARY and m_hi > k:
        raise CostDomainError("m_hi must be <= k for m-ary")
    if m_hi < m_lo + 2:
        raise CostDomainError("need at least three grid points")
    probes = []
    for m in range(m_lo + 1, m_hi):
        second = (
            predicted_mults_exact(method, k, m + 1)
            - 2 * predicted_mults_exact(method, k, m)
            + predicted_mults_exact(method, k, m - 1)
        )
        probes.append((m, float(second)))
    residuals = [(m, residual_term(m)) for m in range(m_lo, m_hi + 1)]
    return ConvexityReport(
        method=method,
        k=k,
        probes=tuple(probes),
        all_nonnegative=all(s >= 0 for _, s in probes),
        residual_values=tuple(residuals),
        residual_all_negative=all(r < 0 for _, r in residuals),
    )
