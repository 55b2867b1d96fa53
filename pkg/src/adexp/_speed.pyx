# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled exponentiation kernels.

Same contract as _pure: callers reduce g mod N and shortcut e = 0;
results and operation counts are bit-identical to the pure backend.
The big-integer arithmetic stays on Python ints; Cython removes the
interpreter overhead of the scan loops around them.
"""

BACKEND = "compiled"


def mary_exp_count(g, e, n, int m):
    cdef long long muls = 0, sqrs = 0
    cdef long long size = 1ll << m
    cdef long long i, j, digit, mask, count
    table = [0] * size
    table[0] = 1 % n
    table[1] = g
    for i in range(2, size):
        table[i] = (table[i - 1] * g) % n
        muls += 1
    mask = size - 1
    count = (e.bit_length() + m - 1) // m
    acc = table[(e >> (m * (count - 1))) & mask]
    for i in range(count - 2, -1, -1):
        for j in range(m):
            acc = (acc * acc) % n
            sqrs += 1
        digit = (e >> (m * i)) & mask
        if digit:
            acc = (acc * table[digit]) % n
            muls += 1
    return acc, muls, sqrs


def window_exp_count(g, e, n, int m):
    cdef long long muls = 0, sqrs = 1
    cdef long long half = 1ll << (m - 1)
    cdef long long i, j, low, width, value
    g2 = (g * g) % n
    odd = [0] * half
    odd[0] = g
    for i in range(1, half):
        odd[i] = (odd[i - 1] * g2) % n
        muls += 1
    acc = 1 % n
    i = e.bit_length() - 1
    while i >= 0:
        if not (e >> i) & 1:
            acc = (acc * acc) % n
            sqrs += 1
            i -= 1
            continue
        low = i - m + 1
        if low < 0:
            low = 0
        while not (e >> low) & 1:
            low += 1
        width = i - low + 1
        for j in range(width):
            acc = (acc * acc) % n
            sqrs += 1
        value = (e >> low) & ((1ll << width) - 1)
        acc = (acc * odd[value >> 1]) % n
        muls += 1
        i = low - 1
    return acc, muls, sqrs
