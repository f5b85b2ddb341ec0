"""Binary trees, plane trees and the bijection between them.

A binary tree with ``n`` internal nodes stands for one parenthesization of
``x_0 * ... * x_n``. Leaves carry no data; leaf ``i`` is simply the ``i``-th
leaf from the left.

Plane trees are never built as nested objects. A plane tree with ``n + 1``
nodes is identified with its multi-degree, the tuple of node degrees read in
pre-order, which loses nothing.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from typing import NamedTuple, Union

from .exceptions import ValidationError

__all__ = [
    "LEAF",
    "Leaf",
    "Node",
    "BinaryTree",
    "wedge",
    "comb",
    "comb1",
    "size",
    "left_depth",
    "validate_left_depth",
    "from_left_depth",
    "binary_to_plane",
    "plane_to_binary",
    "left_depth_from_multi_degree",
    "multi_degree_from_left_depth",
    "is_valid_multi_degree",
    "validate_multi_degree",
    "max_left_chain",
    "left_chain_length",
    "contains_comb",
    "contains_comb1",
    "contains_pattern",
    "enumerate_plane_trees",
    "enumerate_binary_trees",
    "subtree_at",
    "replace_at",
    "internal_paths",
]


class Leaf(NamedTuple):
    def __repr__(self):
        return "LEAF"


class Node(NamedTuple):
    left: BinaryTree
    right: BinaryTree


BinaryTree = Union[Leaf, Node]

LEAF = Leaf()


def wedge(s: BinaryTree, t: BinaryTree) -> Node:
    """The tree whose root has left subtree ``s`` and right subtree ``t``."""
    return Node(s, t)


def comb(k: int) -> BinaryTree:
    """Left comb with ``k`` internal nodes: ``comb(0)`` is a leaf."""
    if k < 0:
        raise ValueError("comb length must be nonnegative")
    t: BinaryTree = LEAF
    for _ in range(k):
        t = Node(t, LEAF)
    return t


def comb1(k: int) -> Node:
    """A leaf wedged with ``comb(k)``."""
    return Node(LEAF, comb(k))


def size(t: BinaryTree) -> int:
    """Number of internal nodes."""
    count = 0
    stack = [t]
    while stack:
        u = stack.pop()
        if isinstance(u, Node):
            count += 1
            stack.append(u.left)
            stack.append(u.right)
    return count


def left_depth(t: BinaryTree) -> tuple[int, ...]:
    """Number of left steps from the root to each leaf, leaves left to right."""
    out = []
    stack = [(t, 0)]
    while stack:
        u, depth = stack.pop()
        if isinstance(u, Node):
            # right pushed first so the left subtree is visited first
            stack.append((u.right, depth))
            stack.append((u.left, depth + 1))
        else:
            out.append(depth)
    return tuple(out)


def validate_left_depth(delta: Sequence[int]) -> tuple[int, ...]:
    """Return ``delta`` as a tuple or raise naming the first bad index.

    A sequence is a left depth exactly when its last entry is 0, every other
    entry is at least 1, and no entry drops by more than 1 from its
    predecessor.
    """
    delta = tuple(delta)
    if not delta:
        raise ValidationError("left depth must be nonempty")
    n = len(delta) - 1
    for i, value in enumerate(delta):
        if i < n and value < 1:
            raise ValidationError(f"entry {i} is {value}; non-final entries must be >= 1", i)
        if i == n and value != 0:
            raise ValidationError(f"final entry {i} is {value}; must be 0", i)
        if i > 0 and value < delta[i - 1] - 1:
            raise ValidationError(
                f"entry {i} is {value}, more than one below entry {i - 1} ({delta[i - 1]})", i
            )
    return delta


def from_left_depth(delta: Sequence[int]) -> BinaryTree:
    """Inverse of :func:`left_depth`."""
    delta = validate_left_depth(delta)
    return _from_left_depth(delta)


def _from_left_depth(delta):
    if len(delta) == 1:
        return LEAF
    # the left subtree owns leaves 0..i-1, where i is the first leaf at depth 1
    i = delta.index(1) + 1
    left = _from_left_depth(tuple(x - 1 for x in delta[:i]))
    right = _from_left_depth(delta[i:])
    return Node(left, right)


def binary_to_plane(t: BinaryTree) -> tuple[int, ...]:
    """Multi-degree of the plane tree obtained by contracting left edges.

    ``s ^ u`` maps to the plane tree of ``s`` with the plane tree of ``u``
    hung below its root as a new last child.
    """
    if isinstance(t, Node):
        head = binary_to_plane(t.left)
        return (head[0] + 1,) + head[1:] + binary_to_plane(t.right)
    return (0,)


def plane_to_binary(d: Sequence[int]) -> BinaryTree:
    """Inverse of :func:`binary_to_plane`."""
    d = validate_multi_degree(d)
    pos = 0

    def build():
        nonlocal pos
        degree = d[pos]
        pos += 1
        t = LEAF
        for _ in range(degree):
            t = Node(t, build())
        return t

    return build()


def left_depth_from_multi_degree(d: Sequence[int]) -> tuple[int, ...]:
    """``delta_i = d_0 + ... + d_i - i``."""
    out = []
    total = 0
    for i, di in enumerate(d):
        total += di
        out.append(total - i)
    return tuple(out)


def multi_degree_from_left_depth(delta: Sequence[int]) -> tuple[int, ...]:
    """Inverse of :func:`left_depth_from_multi_degree`."""
    return tuple(delta[0] if i == 0 else delta[i] - delta[i - 1] + 1 for i in range(len(delta)))


def is_valid_multi_degree(seq: Sequence[int]) -> bool:
    try:
        validate_multi_degree(seq)
    except ValidationError:
        return False
    return True


def validate_multi_degree(seq: Sequence[int]) -> tuple[int, ...]:
    """Check the plane-tree conditions and return ``seq`` as a tuple.

    Entries must be nonnegative, sum to ``n = len(seq) - 1``, and satisfy
    ``d_0 + ... + d_{i-1} >= i`` for ``1 <= i <= n``.
    """
    seq = tuple(seq)
    if not seq:
        raise ValidationError("multi-degree must be nonempty")
    n = len(seq) - 1
    partial = 0
    for i, value in enumerate(seq):
        if value < 0:
            raise ValidationError(f"entry {i} is negative", i)
        if i >= 1 and partial < i:
            raise ValidationError(f"prefix sum before entry {i} is {partial} < {i}", i)
        partial += value
    if partial != n:
        raise ValidationError(f"entries sum to {partial}, expected {n}")
    return seq


def max_left_chain(t: BinaryTree) -> int:
    """Longest chain of internal nodes, each the left child of the previous."""
    best = 0
    stack = [(t, 0)]
    while stack:
        u, run = stack.pop()
        if isinstance(u, Node):
            run += 1
            best = max(best, run)
            stack.append((u.left, run))
            stack.append((u.right, 0))
    return best


def contains_comb(t: BinaryTree, k: int) -> bool:
    """Whether ``comb(k)`` embeds in ``t``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return max_left_chain(t) >= k


def contains_comb1(t: BinaryTree, k: int) -> bool:
    """Whether ``comb1(k)`` embeds in ``t``: some right child starts a left chain of length ``k``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    stack = [t]
    while stack:
        u = stack.pop()
        if isinstance(u, Node):
            if left_chain_length(u.right) >= k:
                return True
            stack.append(u.left)
            stack.append(u.right)
    return False


def left_chain_length(t: BinaryTree) -> int:
    """Length of the left chain of internal nodes starting at ``t`` itself."""
    run = 0
    while isinstance(t, Node):
        run += 1
        t = t.left
    return run


def contains_pattern(t: BinaryTree, pattern: BinaryTree) -> bool:
    """Generic subtree-pattern embedding; pattern leaves match any node.

    Exponential in the worst case. Used to cross-check the comb predicates.
    """

    def embeds_at(p, u):
        if not isinstance(p, Node):
            return True
        return isinstance(u, Node) and embeds_at(p.left, u.left) and embeds_at(p.right, u.right)

    stack = [t]
    while stack:
        u = stack.pop()
        if embeds_at(pattern, u):
            return True
        if isinstance(u, Node):
            stack.append(u.left)
            stack.append(u.right)
    return False


def enumerate_plane_trees(n: int) -> Iterator[tuple[int, ...]]:
    """All multi-degrees with ``n + 1`` entries, in lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        yield (0,)
        return
    prefix = [0] * (n + 1)

    def extend(i, partial):
        if i == n:
            # the prefix condition at i = n forces the last entry to be 0
            yield tuple(prefix)
            return
        for value in range(max(0, i + 1 - partial), n - partial + 1):
            prefix[i] = value
            yield from extend(i + 1, partial + value)

    yield from extend(0, 0)


def enumerate_binary_trees(n: int) -> Iterator[BinaryTree]:
    """All binary trees with ``n`` internal nodes, ordered by multi-degree."""
    for d in enumerate_plane_trees(n):
        yield plane_to_binary(d)


def subtree_at(t: BinaryTree, path: str) -> BinaryTree:
    """Follow a root-to-node path over ``L``/``R``."""
    for i, step in enumerate(path):
        if not isinstance(t, Node):
            raise ValidationError(f"path {path!r} leaves the tree at step {i}", i)
        if step == "L":
            t = t.left
        elif step == "R":
            t = t.right
        else:
            raise ValidationError(f"bad path character {step!r}", i)
    return t


def replace_at(t: BinaryTree, path: str, new: BinaryTree) -> BinaryTree:
    """Copy of ``t`` with the subtree at ``path`` replaced by ``new``."""
    if not path:
        return new
    if not isinstance(t, Node):
        raise ValidationError(f"path {path!r} leaves the tree", 0)
    head, rest = path[0], path[1:]
    if head == "L":
        return Node(replace_at(t.left, rest, new), t.right)
    if head == "R":
        return Node(t.left, replace_at(t.right, rest, new))
    raise ValidationError(f"bad path character {head!r}", 0)


def internal_paths(t: BinaryTree) -> Iterator[str]:
    """Paths to every internal node, in pre-order."""
    stack = [(t, "")]
    while stack:
        u, path = stack.pop()
        if isinstance(u, Node):
            yield path
            stack.append((u.right, path + "R"))
            stack.append((u.left, path + "L"))
