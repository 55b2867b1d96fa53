"""Exponentiation strategies: m-ary, sliding window, adaptive dispatch,
and the two runtime-style baselines (LR binary and 5-ary-above-cutoff).

All strategies return g^e mod N and tally their modular operations in a
CountingContext. The m-ary and window main loops run on the selected
kernel backend (compiled or pure); the table builders and the window
decomposition are also exposed directly for inspection and testing.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from . import _backend, _pure
from .bignum import CountingContext, ModulusError, mod_mul, mod_sqr
from .cost_model import M_CAP, Method, Policy, optimal_m


class TableKind(enum.Enum):
    FULL = "full"  # g^0 .. g^(2^m - 1)
    ODD = "odd"    # g^1, g^3, .., g^(2^m - 1)


class Baseline(enum.Enum):
    BINARY = "binary"            # LR square-and-multiply, always
    CPYTHON_5ARY = "cpython5"    # 5-ary above 240 bits, else binary


# Exponent bit threshold above which the 5-ary baseline switches away
# from binary: 8 internal digits of 30 bits each.
CPYTHON_5ARY_CUTOFF_BITS = 240


@dataclass(frozen=True)
class PowerTable:
    kind: TableKind
    m: int
    entries: dict[int, int]


@dataclass(frozen=True)
class Token:
    """One step of the sliding-window scan.

    value == 0 is a single zero bit (width 1); otherwise an odd window
    value of `width` bits.
    """

    value: int
    width: int


ZERO = Token(0, 1)


@dataclass(frozen=True)
class WindowPlan:
    tokens: tuple[Token, ...]
    m: int

    def window_count(self) -> int:
        return sum(1 for t in self.tokens if t.value)


def _check_m(m: int) -> None:
    if m < 1:
        raise ValueError("m must be >= 1")
    if m > M_CAP:
        raise ValueError(f"m capped at {M_CAP} (table has 2^m entries)")


def precompute_powers(
    kind: TableKind, g: int, n: int, m: int, ctx: CountingContext
) -> PowerTable:
    """Build the power table a strategy multiplies by.

    FULL costs 2^m - 2 multiplications; ODD costs one squaring plus
    2^(m-1) - 1 multiplications.
    """
    if n == 0:
        raise ModulusError("modulus must be >= 1")
    _check_m(m)
    g = g % n
    if kind is TableKind.FULL:
        entries = {0: 1 % n, 1: g}
        for i in range(2, 1 << m):
            entries[i] = mod_mul(ctx, entries[i - 1], g, n)
    else:
        g2 = mod_sqr(ctx, g, n)
        entries = {1: g}
        for i in range(3, 1 << m, 2):
            entries[i] = mod_mul(ctx, entries[i - 2], g2, n)
    return PowerTable(kind, m, entries)


def mary_exp(g: int, e: int, n: int, m: int, ctx: CountingContext) -> int:
    """Left-to-right m-ary exponentiation.

    On a fresh context: sqr_count = m*t with t+1 digits, and
    mul_count = 2^m - 2 + (nonzero digits below the top one).
    """
    if n == 0:
        raise ModulusError("modulus must be >= 1")
    _check_m(m)
    if e == 0:
        return 1 % n
    result, muls, sqrs = _backend.kernels().mary_exp_count(g % n, e, n, m)
    ctx.add(muls, sqrs)
    return result


def decompose_windows(e: int, m: int) -> WindowPlan:
    """Token sequence of the sliding-window scan, left to right."""
    _check_m(m)
    if e == 0:
        raise ValueError("no bits to scan; callers shortcut e = 0")
    tokens = tuple(Token(v, w) for v, w in _pure.scan_windows(e, m))
    return WindowPlan(tokens, m)


def window_exp(g: int, e: int, n: int, m: int, ctx: CountingContext) -> int:
    """Left-to-right sliding-window exponentiation.

    Runs the scan literally (the accumulator squares even while it is
    still 1), so on a fresh context with e >= 1:
    sqr_count = bit_length(e) + 1 and
    mul_count = 2^(m-1) - 1 + (number of window tokens).
    """
    if n == 0:
        raise ModulusError("modulus must be >= 1")
    if m < 2:
        raise ValueError("window size must be >= 2")
    _check_m(m)
    if e == 0:
        return 1 % n
    result, muls, sqrs = _backend.kernels().window_exp_count(g % n, e, n, m)
    ctx.add(muls, sqrs)
    return result


def adaptive_exp(
    method: Method, g: int, e: int, n: int, policy: Policy, ctx: CountingContext
) -> int:
    """Pick m from the exponent bit-length, then delegate."""
    if n == 0:
        raise ModulusError("modulus must be >= 1")
    if e == 0:
        return 1 % n
    m = optimal_m(method, e.bit_length(), policy)
    if method is Method.MARY:
        return mary_exp(g, e, n, m, ctx)
    return window_exp(g, e, n, m, ctx)


def baseline_m(flavor: Baseline, e: int) -> int:
    """Digit width the baseline flavor would use for this exponent."""
    if flavor is Baseline.CPYTHON_5ARY and e.bit_length() > CPYTHON_5ARY_CUTOFF_BITS:
        return 5
    return 1


def baseline_exp(
    flavor: Baseline, g: int, e: int, n: int, ctx: CountingContext
) -> int:
    """The two fixed-strategy baselines the adaptive methods compare against."""
    if n == 0:
        raise ModulusError("modulus must be >= 1")
    if e == 0:
        return 1 % n
    return mary_exp(g, e, n, baseline_m(flavor, e), ctx)


def reference_pow(g: int, e: int, n: int) -> int:
    """Host-runtime modular power, used only as a correctness oracle."""
    return pow(g, e, n)
