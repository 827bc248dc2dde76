"""Natural numbers as truth tables of 2**nv bits.

A boolean function of ``nv`` variables is the natural number whose bit at
row position p is the function's output on row p's assignment.  Constant
false is 0, constant true is 2**(2**nv) - 1, and each variable has a fixed
column encoding (see :func:`var_tt`).
"""

from __future__ import annotations

# masks occupy 2**nv bits, so an unchecked var count allocates gigabit
# integers; callers can raise the ceiling explicitly where they mean it
DEFAULT_MAX_VARS = 20


def check_var_count(nv: int, max_nv: int = DEFAULT_MAX_VARS) -> int:
    """Validate a variable count against the resource guard and return it."""
    if nv < 0:
        raise ValueError(f"variable count must be >= 0, got {nv}")
    if nv > max_nv:
        raise ValueError(
            f"variable count {nv} exceeds the guard of {max_nv} "
            f"(a {nv}-variable table needs 2**{nv} bits)"
        )
    return nv


def all_ones_mask(nv: int, max_nv: int = DEFAULT_MAX_VARS) -> int:
    """Truth table of constant true on ``nv`` variables: 2**(2**nv) - 1."""
    check_var_count(nv, max_nv)
    return (1 << (1 << nv)) - 1


def var_tt(nv: int, k: int, max_nv: int = DEFAULT_MAX_VARS) -> int:
    """Truth-table column of variable ``k`` among ``nv`` variables.

    The column, read LSB-first, is the exact quotient
    (2**(2**nv) - 1) // (2**(2**(nv-k-1)) + 1): blocks of 2**(nv-k-1) ones
    alternating with equally long blocks of zeros.
    """
    mask = all_ones_mask(nv, max_nv)
    if not 0 <= k < nv:
        raise ValueError(f"variable index {k} out of range for {nv} variables")
    return mask // ((1 << (1 << (nv - k - 1))) + 1)


def ite_tt(x: int, t: int, e: int) -> int:
    """Rowwise if-then-else on truth tables, in three bitwise operations."""
    return (x & (t ^ e)) ^ e


def shannon_split(nv: int, x: int, max_nv: int = DEFAULT_MAX_VARS) -> tuple[int, int]:
    """Split table ``x`` on its top variable into (hi, lo) half tables.

    ``hi`` is the cofactor with variable nv-1 set, ``lo`` with it clear; each
    half is a table on nv-1 variables.
    """
    if nv < 1:
        raise ValueError("cannot split a 1-bit table (no variables left)")
    mask = all_ones_mask(nv, max_nv)
    if not 0 <= x <= mask:
        raise ValueError(f"table {x} out of range for {nv} variables")
    return x >> (1 << (nv - 1)), x & all_ones_mask(nv - 1)


def shannon_fuse(nv: int, hi: int, lo: int, max_nv: int = DEFAULT_MAX_VARS) -> int:
    """Inverse of :func:`shannon_split`: rebuild the table from its halves."""
    if nv < 1:
        raise ValueError("cannot fuse into a 1-bit table (no variables left)")
    half_mask = all_ones_mask(nv - 1, max_nv)
    if not 0 <= hi <= half_mask:
        raise ValueError(f"hi half {hi} exceeds the {1 << (nv - 1)}-bit half width")
    if not 0 <= lo <= half_mask:
        raise ValueError(f"lo half {lo} exceeds the {1 << (nv - 1)}-bit half width")
    return (hi << (1 << (nv - 1))) | lo
