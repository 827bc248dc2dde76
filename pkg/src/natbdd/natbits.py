"""Bit-level kernel for arbitrary-size naturals.

Bit lists are least-significant-bit first; the canonical form carries no
zeros at the most-significant end, so 0 is the empty list.
"""

from __future__ import annotations

BitList = list[int]


def to_rbits(n: int) -> BitList:
    """Binary digits of ``n``, LSB first, in canonical form."""
    if n < 0:
        raise ValueError(f"expected a natural number, got {n}")
    bits = []
    while n:
        bits.append(n & 1)
        n >>= 1
    return bits


def from_rbits(bits: BitList) -> int:
    """Value of an LSB-first bit list; zeros beyond the top bit are allowed."""
    n = 0
    for i, b in enumerate(bits):
        if b not in (0, 1):
            raise ValueError(f"invalid bit {b!r} at position {i}")
        n |= b << i
    return n


def two_adic_valuation(n: int) -> int:
    """Largest t such that 2**t divides ``n``.  Undefined (an error) for 0."""
    if n <= 0:
        raise ValueError(f"2-adic valuation needs n >= 1, got {n}")
    return (n & -n).bit_length() - 1


def odd_part(n: int) -> int:
    """``n`` with every factor of two removed."""
    return n >> two_adic_valuation(n)
