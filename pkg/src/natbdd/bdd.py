"""Binary decision diagrams as ordered binary trees.

A ``Bdd`` is a variable count plus a tree of ``Ite`` nodes over ``Leaf(0)``
and ``Leaf(1)``.  Variable indices strictly decrease from root to leaf.
Reduction trims ite nodes whose branches are structurally equal; common
subtrees are deliberately *not* shared, so every value is a plain tree.

The encoding and its inverses:

* :func:`plain_bdd` unfolds a truth table into a complete tree by
  recursively unpairing it with the bit-interleaving bijection;
* :func:`plain_inverse_bdd` folds a tree back by recursive pairing;
* :func:`ev` evaluates a tree as a boolean function over the variable
  column encodings.

For every plain tree the two inverses agree with the original table, and
``ev`` also recovers the table from the reduced tree.
"""

from __future__ import annotations

from dataclasses import dataclass

from .pairing import bitmerge_pair, bitmerge_unpair
from .truthtab import DEFAULT_MAX_VARS, all_ones_mask, check_var_count, ite_tt, var_tt


@dataclass(frozen=True)
class Leaf:
    bit: int


@dataclass(frozen=True)
class Ite:
    var: int
    high: "Node"  # taken when the variable is 1
    low: "Node"   # taken when the variable is 0


Node = Leaf | Ite


@dataclass(frozen=True)
class Bdd:
    nv: int
    root: Node


def plain_bdd(nv: int, tt: int, max_nv: int = DEFAULT_MAX_VARS) -> Bdd:
    """Unfold truth table ``tt`` into the complete depth-``nv`` tree.

    At each level the table is unpaired into (even-bits, odd-bits) halves;
    the even half becomes the high branch.  A 0-variable table is a bare
    leaf.
    """
    check_var_count(nv, max_nv)
    if not 0 <= tt < (1 << (1 << nv)):
        raise ValueError(f"truth table {tt} out of range for {nv} variables")
    return Bdd(nv, _isplit(nv, tt))


def _isplit(nv: int, tt: int) -> Node:
    if nv == 0:
        return Leaf(tt)
    hi, lo = bitmerge_unpair(tt)
    return Ite(nv - 1, _isplit(nv - 1, hi), _isplit(nv - 1, lo))


def reduce(b: Bdd) -> Bdd:
    """Trim, bottom-up, every ite node whose branches reduce to equal trees."""
    return Bdd(b.nv, _reduce_node(b.root))


def _reduce_node(node: Node) -> Node:
    if isinstance(node, Leaf):
        return node
    high = _reduce_node(node.high)
    low = _reduce_node(node.low)
    if high == low:
        return high
    if high is node.high and low is node.low:
        return node
    return Ite(node.var, high, low)


def reduced_bdd(nv: int, tt: int, max_nv: int = DEFAULT_MAX_VARS) -> Bdd:
    """The reduced tree of truth table ``tt`` on ``nv`` variables."""
    return reduce(plain_bdd(nv, tt, max_nv))


def plain_inverse_bdd(b: Bdd) -> int:
    """Fold a tree back into a natural by recursive bit interleaving.

    Exact inverse of :func:`plain_bdd` on complete trees.  On reduced trees
    the result is some natural but not in general the original table; use
    :func:`ev` there.
    """
    return _inverse_node(b.root)


def _inverse_node(node: Node) -> int:
    if isinstance(node, Leaf):
        return node.bit
    return bitmerge_pair(_inverse_node(node.high), _inverse_node(node.low))


def ev(b: Bdd, max_nv: int = DEFAULT_MAX_VARS) -> int:
    """Boolean evaluation: the truth table a tree denotes.

    Leaves map to the constant tables, and each ite node applies the
    rowwise if-then-else with its variable's column as the condition.
    Recovers the original table from plain and reduced trees alike.
    """
    mask = all_ones_mask(b.nv, max_nv)
    columns = [var_tt(b.nv, k, max_nv) for k in range(b.nv)]

    def walk(node: Node) -> int:
        if isinstance(node, Leaf):
            return mask if node.bit else 0
        return ite_tt(columns[node.var], walk(node.high), walk(node.low))

    return walk(b.root)


def validate(b: Bdd) -> Bdd:
    """Check the structural invariants of ``b`` and return it.

    Leaf bits must be 0 or 1, every ite variable must be below the tree's
    variable count, and variable indices must strictly decrease along every
    root-to-leaf path.
    """
    if b.nv < 0:
        raise ValueError(f"variable count must be >= 0, got {b.nv}")

    def walk(node: Node, bound: int) -> None:
        if isinstance(node, Leaf):
            if node.bit not in (0, 1):
                raise ValueError(f"leaf bit must be 0 or 1, got {node.bit!r}")
            return
        if not 0 <= node.var < bound:
            raise ValueError(
                f"variable {node.var} breaks the strictly decreasing order "
                f"(must lie in [0, {bound}))"
            )
        walk(node.high, node.var)
        walk(node.low, node.var)

    walk(b.root, b.nv)
    return b
