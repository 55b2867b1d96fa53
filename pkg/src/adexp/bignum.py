"""Arbitrary-precision naturals, modular primitives and operation counting.

Python's built-in int is the backing store for naturals; this module adds
the modular multiply/square primitives that every exponentiation strategy
routes through, the digit decomposition used by the m-ary method, and the
tally used for count-based verification.
"""

from __future__ import annotations

from dataclasses import dataclass


class ModulusError(ValueError):
    """Raised when the modulus is zero."""


@dataclass
class CountingContext:
    """Mutable tally of modular multiplications and squarings.

    Confined to one thread at a time; distinct contexts are independent.
    """

    mul_count: int = 0
    sqr_count: int = 0

    @property
    def total(self) -> int:
        return self.mul_count + self.sqr_count

    def add(self, muls: int, sqrs: int) -> None:
        self.mul_count += muls
        self.sqr_count += sqrs


@dataclass(frozen=True)
class DigitString:
    """Radix-2^m digits of an exponent, most-significant first."""

    digits: tuple[int, ...]
    m: int

    def recompose(self) -> int:
        value = 0
        for d in self.digits:
            value = (value << self.m) | d
        return value


def _check_modulus(n: int) -> None:
    if n == 0:
        raise ModulusError("modulus must be >= 1")


def mod_mul(ctx: CountingContext, a: int, b: int, n: int) -> int:
    """(a * b) mod n, counted as one general multiplication."""
    _check_modulus(n)
    ctx.mul_count += 1
    return (a * b) % n


def mod_sqr(ctx: CountingContext, a: int, n: int) -> int:
    """a^2 mod n, counted as one squaring."""
    _check_modulus(n)
    ctx.sqr_count += 1
    return (a * a) % n


def bit_length(e: int) -> int:
    """Number of bits of e; 0 for e = 0."""
    return e.bit_length()


def digits_base_2m(e: int, m: int) -> DigitString:
    """Split e into ceil(bit_length(e)/m) digits of m bits each.

    Most-significant digit first; no all-zero leading digit for e >= 1.
    e = 0 yields the single digit [0].
    """
    if m < 1:
        raise ValueError("digit width must be >= 1")
    if e == 0:
        return DigitString((0,), m)
    mask = (1 << m) - 1
    count = (e.bit_length() + m - 1) // m
    digits = tuple((e >> (m * i)) & mask for i in range(count - 1, -1, -1))
    return DigitString(digits, m)


def from_hex(text: str) -> int:
    """Parse a lowercase hex string (no prefix) into a natural."""
    if text != text.lower():
        raise ValueError("naturals use lowercase hex")
    return int(text, 16)


def to_hex(value: int) -> str:
    """Render a natural as lowercase hex, no prefix."""
    if value < 0:
        raise ValueError("naturals are non-negative")
    return format(value, "x")
