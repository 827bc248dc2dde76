"""Pairing bijections Nat x Nat <-> Nat with exact inverses.

Three schemes are provided:

* ``cantor`` -- the diagonal pairing z = (x+y)(x+y+1)/2 + y;
* ``pepis`` -- z = 2**x * (2y+1) - 1, growing fast in the first argument;
* ``bitmerge`` -- bit interleaving: x occupies the even bit positions of z
  and y the odd ones (positions counted from the LSB).

All operations are exact on arbitrarily large naturals.
"""

from __future__ import annotations

from math import isqrt

from .natbits import odd_part, two_adic_valuation


def cantor_pair(x: int, y: int) -> int:
    _check_pair(x, y)
    return (x + y) * (x + y + 1) // 2 + y


def cantor_unpair(z: int) -> tuple[int, int]:
    # isqrt keeps the inverse exact; floating-point sqrt drifts once z
    # outgrows a double's mantissa
    if z < 0:
        raise ValueError(f"expected a natural number, got {z}")
    w = (isqrt(8 * z + 1) - 1) // 2
    y = z - w * (w + 1) // 2
    return w - y, y


def pepis_pair(x: int, y: int) -> int:
    _check_pair(x, y)
    return (1 << x) * (2 * y + 1) - 1


def pepis_unpair(z: int) -> tuple[int, int]:
    if z < 0:
        raise ValueError(f"expected a natural number, got {z}")
    return two_adic_valuation(z + 1), (odd_part(z + 1) - 1) >> 1


def _spread_byte(b: int) -> int:
    out = 0
    for i in range(8):
        out |= ((b >> i) & 1) << (2 * i)
    return out


# byte-at-a-time interleaving tables: _SPREAD maps a byte to its 16-bit
# even-position spread, _EVEN packs a byte's even-position bits into a nibble
_SPREAD = [_spread_byte(b) for b in range(256)]
_EVEN = [sum(((b >> (2 * i)) & 1) << i for i in range(4)) for b in range(256)]


def bitmerge_pair(x: int, y: int) -> int:
    """Interleave: bit i of ``x`` lands at position 2i, bit i of ``y`` at 2i+1."""
    _check_pair(x, y)
    z = 0
    shift = 0
    while x or y:
        z |= (_SPREAD[x & 0xFF] | (_SPREAD[y & 0xFF] << 1)) << shift
        x >>= 8
        y >>= 8
        shift += 16
    return z


def bitmerge_unpair(z: int) -> tuple[int, int]:
    """Split ``z`` into its even-position bits and its odd-position bits."""
    if z < 0:
        raise ValueError(f"expected a natural number, got {z}")
    x = y = 0
    shift = 0
    while z:
        b = z & 0xFF
        x |= _EVEN[b] << shift
        y |= _EVEN[b >> 1] << shift
        z >>= 8
        shift += 4
    return x, y


def _check_pair(x: int, y: int) -> None:
    if x < 0 or y < 0:
        raise ValueError(f"expected natural numbers, got ({x}, {y})")


#: scheme tag -> (pair, unpair)
SCHEMES = {
    "cantor": (cantor_pair, cantor_unpair),
    "pepis": (pepis_pair, pepis_unpair),
    "bitmerge": (bitmerge_pair, bitmerge_unpair),
}
