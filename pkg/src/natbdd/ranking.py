"""Ranking and unranking: a bijection between naturals and a stream of BDDs.

Ranks are laid out in blocks, one block per variable count k = 1, 2, 3, ...
The block for k holds the trees of the truth tables 0 .. 2**(2**(k-1)) - 1
on k variables -- deliberately only the tables that fit in *half* the
2**(2**k)-bit space, reproducing the cumulative sums bsum(0)=0, bsum(1)=2,
bsum(k+1) = bsum(k) + 2**(2**k).  The enumeration is therefore a bijection
between the naturals and this indexed family, not between the naturals and
all (variable count, table) pairs.

Plain trees rank via the structural fold, reduced trees via boolean
evaluation; both place rank n at bsum(k-1) + local index.
"""

from __future__ import annotations

from typing import Iterator, NamedTuple

from .bdd import Bdd, ev, plain_bdd, plain_inverse_bdd, reduced_bdd
from .truthtab import DEFAULT_MAX_VARS


class RankPair(NamedTuple):
    k: int  # variable count of the block
    r: int  # index within the block


def bsum(n: int) -> int:
    """Cumulative size of the rank blocks for variable counts below ``n``."""
    if n < 0:
        raise ValueError(f"expected a natural number, got {n}")
    if n == 0:
        return 0
    total = 2
    for m in range(1, n):
        total += 1 << (1 << m)
    return total


def _block_size(k: int) -> int:
    # bsum(k) - bsum(k-1) for k >= 1
    return 1 << (1 << (k - 1))


def to_bsum(n: int) -> RankPair:
    """Decompose rank ``n`` into (variable count, index within its block).

    Runs a cumulative sum instead of recomputing bsum per candidate; the
    block sizes grow doubly exponentially, so this takes O(log log n) steps.
    """
    if n < 0:
        raise ValueError(f"expected a natural number, got {n}")
    k = 1
    start = 0
    while True:
        size = _block_size(k)
        if n < start + size:
            return RankPair(k, n - start)
        start += size
        k += 1


def nat2plain_bdd(n: int, max_nv: int = DEFAULT_MAX_VARS) -> Bdd:
    """Unrank ``n`` to a plain (complete) tree."""
    k, r = to_bsum(n)
    return plain_bdd(k, r, max_nv)


def nat2bdd(n: int, max_nv: int = DEFAULT_MAX_VARS) -> Bdd:
    """Unrank ``n`` to a reduced tree."""
    k, r = to_bsum(n)
    return reduced_bdd(k, r, max_nv)


def plain_bdd2nat(b: Bdd) -> int:
    """Rank of a plain tree: block start plus its structural fold."""
    return _rank(b.nv, plain_inverse_bdd(b))


def bdd2nat(b: Bdd, max_nv: int = DEFAULT_MAX_VARS) -> int:
    """Rank of a reduced tree: block start plus its boolean evaluation."""
    return _rank(b.nv, ev(b, max_nv))


def _rank(nv: int, index: int) -> int:
    # fail fast on trees outside the enumeration's image rather than hand
    # back a rank that unranks to something else
    if nv < 1:
        raise ValueError(
            f"not in the enumeration: blocks start at 1 variable, got {nv}"
        )
    if index >= _block_size(nv):
        raise ValueError(
            f"not in the enumeration: table {index} is outside the "
            f"{_block_size(nv)}-entry block for {nv} variables"
        )
    return bsum(nv - 1) + index


def enumerate_bdds(
    kind: str,
    start: int = 0,
    count: int = 1,
    max_nv: int = DEFAULT_MAX_VARS,
) -> Iterator[Bdd]:
    """Lazily yield the trees of ranks ``start .. start+count-1``.

    ``kind`` selects ``"plain"`` or ``"reduced"`` trees.
    """
    if kind not in ("plain", "reduced"):
        raise ValueError(f"kind must be 'plain' or 'reduced', got {kind!r}")
    if start < 0 or count < 0:
        raise ValueError("start and count must be naturals")
    unrank = nat2plain_bdd if kind == "plain" else nat2bdd
    for n in range(start, start + count):
        yield unrank(n, max_nv)
