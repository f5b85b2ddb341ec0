"""The k-associative rewriting system on binary trees and plane trees.

A right k-rotation rewrites ``(t_0 ^ t_1 ^ ... ^ t_k) ^ t_{k+1}`` into
``t_0 ^ (t_1 ^ ... ^ t_{k+1})`` where ``^`` chains associate to the left.
On multi-degrees the same moves are k-slides, which shift ``k`` units of
degree between a node and its parent. Two trees are k-equivalent exactly
when their multi-degrees agree modulo ``k`` away from the root, so classes
are found by reduction rather than search.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from typing import Literal

from .exceptions import PatternMismatchError, ValidationError
from .trees import (
    BinaryTree,
    Node,
    enumerate_plane_trees,
    internal_paths,
    left_chain_length,
    left_depth,
    replace_at,
    subtree_at,
    validate_multi_degree,
)

__all__ = [
    "RotationSite",
    "right_k_rotation",
    "left_k_rotation",
    "apply_rotation",
    "rotation_sites",
    "tamari_covers",
    "parent_indices",
    "children_indices",
    "up_k_slide",
    "down_k_slide",
    "slide_neighbours",
    "is_k_minimal",
    "is_k_maximal",
    "canonicalize",
    "k_equivalent",
    "k_equivalent_multi_degree",
    "KComponent",
    "k_components",
    "class_size",
    "admissible_m",
    "is_k_admissible",
    "admissible_multi_degrees",
    "count_k_admissible",
    "largest_class_size",
]


@dataclass(frozen=True)
class RotationSite:
    """Internal node addressed by a root-to-node path over ``L``/``R``."""

    path: str
    direction: Literal["right", "left"] = "right"

    def __str__(self):
        return f"{self.direction}@{self.path or '.'}"


def _check_k(k):
    if k < 1:
        raise ValueError("k must be >= 1")


def _left_spine(t, count):
    """Peel ``count`` nodes off the left chain of ``t``.

    Returns ``(bottom, rights)`` where ``bottom`` is the left child of the
    last peeled node and ``rights`` lists right children bottom-up.
    """
    rights = []
    for _ in range(count):
        rights.append(t.right)
        t = t.left
    rights.reverse()
    return t, rights


def _left_fold(first, rest):
    t = first
    for u in rest:
        t = Node(t, u)
    return t


def right_k_rotation(t: BinaryTree, site: RotationSite | str, k: int) -> BinaryTree:
    _check_k(k)
    path = site.path if isinstance(site, RotationSite) else site
    s = subtree_at(t, path)
    if left_chain_length(s) < k + 1:
        raise PatternMismatchError(f"no right {k}-rotation at {path or 'root'!r}: left chain too short")
    t0, rest = _left_spine(s, k + 1)
    return replace_at(t, path, Node(t0, _left_fold(rest[0], rest[1:])))


def left_k_rotation(t: BinaryTree, site: RotationSite | str, k: int) -> BinaryTree:
    _check_k(k)
    path = site.path if isinstance(site, RotationSite) else site
    s = subtree_at(t, path)
    if not isinstance(s, Node) or left_chain_length(s.right) < k:
        raise PatternMismatchError(f"no left {k}-rotation at {path or 'root'!r}: right child chain too short")
    t1, rest = _left_spine(s.right, k)
    return replace_at(t, path, _left_fold(s.left, [t1] + rest))


def apply_rotation(t: BinaryTree, site: RotationSite, k: int) -> BinaryTree:
    if site.direction == "right":
        return right_k_rotation(t, site, k)
    if site.direction == "left":
        return left_k_rotation(t, site, k)
    raise ValueError(f"unknown direction {site.direction!r}")


def rotation_sites(t: BinaryTree, k: int) -> list[RotationSite]:
    """Every site where a right or left k-rotation applies, in pre-order."""
    _check_k(k)
    out = []
    for path in internal_paths(t):
        s = subtree_at(t, path)
        if left_chain_length(s) >= k + 1:
            out.append(RotationSite(path, "right"))
        if left_chain_length(s.right) >= k:
            out.append(RotationSite(path, "left"))
    return out


def tamari_covers(t: BinaryTree) -> list[BinaryTree]:
    """Results of every single right 1-rotation, i.e. the upward Tamari covers."""
    return [right_k_rotation(t, site, 1) for site in rotation_sites(t, 1) if site.direction == "right"]


# --- slides on multi-degrees ----------------------------------------------


def parent_indices(d: Sequence[int]) -> tuple[int | None, ...]:
    """Pre-order index of each node's parent; ``None`` for the root."""
    d = validate_multi_degree(d)
    parents: list[int | None] = [None]
    # stack of (node, children still to attach)
    stack = [[0, d[0]]]
    for j in range(1, len(d)):
        while stack[-1][1] == 0:
            stack.pop()
        stack[-1][1] -= 1
        parents.append(stack[-1][0])
        stack.append([j, d[j]])
    return tuple(parents)


def children_indices(d: Sequence[int], j: int) -> list[int]:
    return [i for i, p in enumerate(parent_indices(d)) if p == j]


def up_k_slide(d: Sequence[int], j: int, k: int) -> tuple[int, ...]:
    """Move the last ``k`` subtrees of node ``j`` up to its parent."""
    _check_k(k)
    parents = parent_indices(d)
    if not 1 <= j < len(d):
        raise PatternMismatchError(f"node {j} has no parent")
    if d[j] < k:
        raise PatternMismatchError(f"node {j} has degree {d[j]} < {k}")
    out = list(d)
    out[parents[j]] += k
    out[j] -= k
    return tuple(out)


def down_k_slide(d: Sequence[int], j: int, k: int, h: int) -> tuple[int, ...]:
    """Hang children ``h+1..h+k`` of node ``j`` below child ``h`` (1-based)."""
    _check_k(k)
    d = validate_multi_degree(d)
    if not 0 <= j < len(d):
        raise PatternMismatchError(f"node {j} does not exist")
    if d[j] < k + 1:
        raise PatternMismatchError(f"node {j} has degree {d[j]} < {k + 1}")
    if not 1 <= h <= d[j] - k:
        raise PatternMismatchError(f"child position {h} outside 1..{d[j] - k}")
    target = children_indices(d, j)[h - 1]
    out = list(d)
    out[j] -= k
    out[target] += k
    return tuple(out)


def slide_neighbours(d: Sequence[int], k: int) -> Iterator[tuple[int, ...]]:
    """Every multi-degree one up or down k-slide away from ``d``."""
    d = validate_multi_degree(d)
    for j in range(1, len(d)):
        if d[j] >= k:
            yield up_k_slide(d, j, k)
    for j in range(len(d)):
        for h in range(1, d[j] - k + 1):
            yield down_k_slide(d, j, k, h)


# --- classes --------------------------------------------------------------


def is_k_minimal(d: Sequence[int], k: int) -> bool:
    _check_k(k)
    return all(x < k for x in d[1:])


def is_k_maximal(d: Sequence[int], k: int) -> bool:
    _check_k(k)
    return all(x <= k for x in d)


def canonicalize(d: Sequence[int], k: int) -> tuple[int, ...]:
    """The unique k-minimal multi-degree k-equivalent to ``d``."""
    _check_k(k)
    d = validate_multi_degree(d)
    rest = [x % k for x in d[1:]]
    return (len(d) - 1 - sum(rest),) + tuple(rest)


def k_equivalent(a: BinaryTree, b: BinaryTree, k: int) -> bool:
    """Left depths congruent modulo ``k``."""
    _check_k(k)
    da, db = left_depth(a), left_depth(b)
    if len(da) != len(db):
        raise ValidationError(f"trees have different sizes ({len(da) - 1} and {len(db) - 1})")
    return all((x - y) % k == 0 for x, y in zip(da, db))


def k_equivalent_multi_degree(a: Sequence[int], b: Sequence[int], k: int) -> bool:
    _check_k(k)
    if len(a) != len(b):
        raise ValidationError(f"multi-degrees have different lengths ({len(a)} and {len(b)})")
    return all((x - y) % k == 0 for x, y in zip(a, b))


@dataclass
class KComponent:
    k: int
    canonical: tuple[int, ...]
    size: int
    members: list[tuple[int, ...]] | None = field(default=None)

    def to_json(self) -> dict:
        out = {"k": self.k, "canonical": ",".join(map(str, self.canonical)), "size": self.size}
        if self.members is not None:
            out["members"] = [",".join(map(str, m)) for m in self.members]
        return out


def k_components(n: int, k: int, members: bool = False) -> list[KComponent]:
    """Partition of all plane trees with ``n + 1`` nodes into k-classes.

    Ordered lexicographically by canonical form. Members, when requested,
    are listed in lexicographic order too.
    """
    _check_k(k)
    if n < 0:
        raise ValueError("n must be nonnegative")
    groups: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for d in enumerate_plane_trees(n):
        groups.setdefault(canonicalize(d, k), []).append(d)
    return [
        KComponent(k, canon, len(group), group if members else None)
        for canon, group in sorted(groups.items())
    ]


def class_size(d: Sequence[int], k: int) -> int:
    """Size of the k-class of ``d`` without enumerating it.

    Members are the multi-degrees ``e`` with ``e_i = c_i + k a_i`` for
    ``i >= 1``; the plane-tree condition is that every suffix sum
    ``e_i + ... + e_n`` stays at most ``n - i``.
    """
    c = canonicalize(d, k)
    n = len(c) - 1
    # ways[s] = number of admissible suffixes with sum s
    ways = {0: 1}
    for i in range(n, 0, -1):
        nxt: dict[int, int] = {}
        for s, count in ways.items():
            value = c[i]
            while s + value <= n - i:
                nxt[s + value] = nxt.get(s + value, 0) + count
                value += k
        ways = nxt
    return sum(ways.values())


def admissible_m(n: int, k: int) -> int:
    """Least positive integer congruent to ``n`` modulo ``k``."""
    _check_k(k)
    return n % k or k


def is_k_admissible(d: Sequence[int], k: int) -> bool:
    d = validate_multi_degree(d)
    n = len(d) - 1
    if n == 0:
        return True
    m = admissible_m(n, k)
    if any(d[m + 1 :]):
        return False
    head = (d[0] - n + m,) + tuple(d[1 : m + 1])
    try:
        validate_multi_degree(head)
    except ValidationError:
        return False
    return True


def admissible_multi_degrees(n: int, k: int) -> list[tuple[int, ...]]:
    """All k-admissible multi-degrees with ``n + 1`` entries, lexicographic."""
    if n == 0:
        return [(0,)]
    m = admissible_m(n, k)
    out = [(d[0] + n - m,) + d[1:] + (0,) * (n - m) for d in enumerate_plane_trees(m)]
    return sorted(out)


def count_k_admissible(n: int, k: int) -> int:
    return len(admissible_multi_degrees(n, k))


def largest_class_size(n: int, k: int) -> int:
    """Largest k-class size over all plane trees with ``n + 1`` nodes, by exhaustion."""
    return max(component.size for component in k_components(n, k))
