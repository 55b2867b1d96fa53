"""Pure-Python exponentiation kernels.

Fallback backend for the hot loops; the compiled module _speed implements
the same functions with identical results and identical operation counts.
Kernels assume the caller already reduced g mod N and shortcut e = 0,
and return (result, mul_count, sqr_count).
"""

from __future__ import annotations

BACKEND = "pure"


def scan_windows(e: int, m: int) -> list[tuple[int, int]]:
    """Left-to-right sliding-window scan of the bits of e.

    Returns (value, width) pairs: (0, 1) for a single zero bit, otherwise
    an odd value of at most m bits. Widths sum to e.bit_length().
    """
    tokens: list[tuple[int, int]] = []
    i = e.bit_length() - 1
    while i >= 0:
        if not (e >> i) & 1:
            tokens.append((0, 1))
            i -= 1
            continue
        # longest stretch e_i..e_l with l >= i-m+1 and e_l = 1
        low = max(i - m + 1, 0)
        while not (e >> low) & 1:
            low += 1
        width = i - low + 1
        tokens.append(((e >> low) & ((1 << width) - 1), width))
        i = low - 1
    return tokens


def mary_exp_count(g: int, e: int, n: int, m: int) -> tuple[int, int, int]:
    """Left-to-right m-ary exponentiation; g < n, e >= 1, n >= 1."""
    muls = 0
    # full table g^0 .. g^(2^m - 1): 2^m - 2 multiplications
    size = 1 << m
    table = [0] * size
    table[0] = 1 % n
    table[1] = g
    for i in range(2, size):
        table[i] = (table[i - 1] * g) % n
        muls += 1
    mask = size - 1
    count = (e.bit_length() + m - 1) // m
    acc = table[(e >> (m * (count - 1))) & mask]
    sqrs = 0
    for i in range(count - 2, -1, -1):
        for _ in range(m):
            acc = (acc * acc) % n
            sqrs += 1
        digit = (e >> (m * i)) & mask
        if digit:
            acc = (acc * table[digit]) % n
            muls += 1
    return acc, muls, sqrs


def window_exp_count(g: int, e: int, n: int, m: int) -> tuple[int, int, int]:
    """Left-to-right sliding-window exponentiation; g < n, e >= 1, n >= 1."""
    # odd powers g^1, g^3, .., g^(2^m - 1): one squaring + 2^(m-1) - 1 mults
    g2 = (g * g) % n
    sqrs = 1
    muls = 0
    odd = [0] * (1 << (m - 1))
    odd[0] = g
    for i in range(1, 1 << (m - 1)):
        odd[i] = (odd[i - 1] * g2) % n
        muls += 1
    acc = 1 % n
    for value, width in scan_windows(e, m):
        for _ in range(width):
            acc = (acc * acc) % n
            sqrs += 1
        if value:
            acc = (acc * odd[value >> 1]) % n
            muls += 1
    return acc, muls, sqrs
