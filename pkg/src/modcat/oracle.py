"""Brute-force ground truth.

Nothing here calls a closed formula. Trees are enumerated by their own
recursion, classes are found by search or by evaluating trees in a ring,
and every restricted family is enumerated and filtered literally.

Exhaustive sizes are capped; set ``MODCAT_ORACLE_MAX_N`` to override every
cap at once.
"""

from __future__ import annotations

import os
from collections import Counter, deque
from collections.abc import Iterator
from dataclasses import dataclass
from functools import lru_cache

from .catalan_objects import (
    dyck_to_plane,
    Syt2xN,
    dyck_avoids_du,
    dyck_avoids_run,
    partition_condition_c,
    partition_condition_m,
    perm_avoids_c_pattern,
    perm_avoids_value_run,
    syt_condition_c,
    syt_condition_m,
)
from .exceptions import OracleBoundError
from .rewrite import apply_rotation, rotation_sites
from .trees import LEAF, BinaryTree, Node, contains_comb, contains_comb1

__all__ = [
    "CLOSURE_MAX_N",
    "GROUPING_MAX_N",
    "FAMILY_MAX_N",
    "OmegaVector",
    "eval_omega",
    "all_binary_trees",
    "all_plane_trees",
    "all_dyck_paths",
    "all_staircase_partitions",
    "all_tableaux",
    "all_132_avoiders",
    "classes_by_rewrite_closure",
    "classes_by_omega",
    "FAMILIES",
    "count_family",
    "class_size_histogram",
    "axis_contacts",
    "root_contacts",
    "total_root_contacts",
    "depth_first_path",
    "total_axis_contacts",
]

CLOSURE_MAX_N = 9
GROUPING_MAX_N = 12
FAMILY_MAX_N = 9


def _bound(default: int) -> int:
    override = os.environ.get("MODCAT_ORACLE_MAX_N")
    return int(override) if override else default


def _check_bound(n, default, what):
    limit = _bound(default)
    if n > limit:
        raise OracleBoundError(f"{what} is capped at n = {limit}; got n = {n} (set MODCAT_ORACLE_MAX_N to raise it)")


@dataclass(frozen=True)
class OmegaVector:
    """Residues ``(r_0, ..., r_n)`` standing for ``sum omega^{r_i} x_i`` with ``omega^k = 1``."""

    k: int
    residues: tuple[int, ...]


def eval_omega(t: BinaryTree, k: int) -> OmegaVector:
    """Evaluate ``t`` on ``x_0, ..., x_n`` under ``a * b = omega a + b``.

    An element of the ring is kept as the list of ``omega`` exponents
    attached to each variable, so multiplying by ``omega`` shifts them all.
    """
    if k < 1:
        raise ValueError("k must be >= 1")

    def value(u):
        if isinstance(u, Node):
            a = value(u.left)
            b = value(u.right)
            return [(r + 1) % k for r in a] + b
        return [0]

    return OmegaVector(k, tuple(value(t)))


@lru_cache(maxsize=None)
def _trees(n):
    if n == 0:
        return (LEAF,)
    out = []
    for left in range(n):
        for a in _trees(left):
            for b in _trees(n - 1 - left):
                out.append(Node(a, b))
    return tuple(out)


def all_binary_trees(n: int) -> tuple[BinaryTree, ...]:
    """Every binary tree with ``n`` internal nodes, by splitting at the root."""
    _check_bound(n, GROUPING_MAX_N, "binary tree enumeration")
    return _trees(n)


def all_plane_trees(n: int) -> Iterator[tuple[int, ...]]:
    """Degree sequences of plane trees with ``n + 1`` nodes, built by a pre-order walk."""

    def grow(prefix, open_slots):
        if len(prefix) == n + 1:
            if open_slots == 0:
                yield tuple(prefix)
            return
        if open_slots == 0:
            return
        remaining = n + 1 - len(prefix)
        for degree in range(remaining):
            yield from grow(prefix + [degree], open_slots - 1 + degree)

    if n == 0:
        yield (0,)
        return
    for degree in range(1, n + 1):
        yield from grow([degree], degree)


def all_dyck_paths(n: int) -> Iterator[str]:
    def grow(path, ups, downs):
        if ups == n and downs == n:
            yield path
            return
        if ups < n:
            yield from grow(path + "U", ups + 1, downs)
        if downs < ups:
            yield from grow(path + "D", ups, downs + 1)

    yield from grow("", 0, 0)


def all_staircase_partitions(n: int) -> Iterator[tuple[int, ...]]:
    """Length-``n`` weakly decreasing tuples with ``lambda_j <= n - j``."""

    def grow(prefix):
        j = len(prefix) + 1
        if j > n:
            yield tuple(prefix)
            return
        top = n - j
        if prefix:
            top = min(top, prefix[-1])
        for value in range(top, -1, -1):
            yield from grow(prefix + [value])

    yield from grow([])


def all_tableaux(n: int) -> Iterator[Syt2xN]:
    """Place ``1, ..., 2n`` in turn, each at the end of the top or bottom row."""

    def grow(top, bottom):
        placed = len(top) + len(bottom)
        if placed == 2 * n:
            yield Syt2xN(tuple(top), tuple(bottom))
            return
        label = placed + 1
        if len(top) < n:
            yield from grow(top + [label], bottom)
        if len(bottom) < len(top):
            yield from grow(top, bottom + [label])

    yield from grow([], [])


def all_132_avoiders(n: int) -> Iterator[tuple[int, ...]]:
    """Permutations of ``1..n`` avoiding 1-3-2, extended one letter at a time."""

    def grow(prefix, unused):
        if not unused:
            yield tuple(prefix)
            return
        for c in sorted(unused):
            # c would be the "2" of a 1-3-2 with some earlier a < c < b, a before b
            smallest = None
            bad = False
            for x in prefix:
                if smallest is not None and x > c > smallest:
                    bad = True
                    break
                if smallest is None or x < smallest:
                    smallest = x
            if not bad:
                yield from grow(prefix + [c], unused - {c})

    yield from grow([], frozenset(range(1, n + 1)))


def classes_by_rewrite_closure(n: int, k: int) -> list[frozenset[BinaryTree]]:
    """Connected components of the k-rotation graph on binary trees of size ``n``."""
    _check_bound(n, CLOSURE_MAX_N, "rewrite closure")
    seen: set[BinaryTree] = set()
    components = []
    for start in all_binary_trees(n):
        if start in seen:
            continue
        seen.add(start)
        members = {start}
        queue = deque([start])
        while queue:
            t = queue.popleft()
            for site in rotation_sites(t, k):
                u = apply_rotation(t, site, k)
                if u not in seen:
                    seen.add(u)
                    members.add(u)
                    queue.append(u)
        components.append(frozenset(members))
    return components


def classes_by_omega(n: int, k: int) -> list[frozenset[BinaryTree]]:
    groups: dict[OmegaVector, list[BinaryTree]] = {}
    for t in all_binary_trees(n):
        groups.setdefault(eval_omega(t, k), []).append(t)
    return [frozenset(g) for g in groups.values()]


def _plane_degree(k):
    return lambda d: all(x < k for x in d)


def _plane_nonroot(k):
    return lambda d: all(x < k for x in d[1:])


# family id -> (domain builder, predicate factory, which sequence it counts)
FAMILIES = {
    "tree-avoids-comb": (all_binary_trees, lambda k: lambda t: not contains_comb(t, k), "M"),
    "plane-degree-lt-k": (all_plane_trees, _plane_degree, "M"),
    "dyck-avoids-U^k": (all_dyck_paths, lambda k: lambda p: dyck_avoids_run(p, k), "M"),
    "partition-m": (all_staircase_partitions, lambda k: lambda lam: partition_condition_m(lam, k), "M"),
    "syt-m": (all_tableaux, lambda k: lambda tab: syt_condition_m(tab, k), "M"),
    "perm-132-and-value-run": (all_132_avoiders, lambda k: lambda w: perm_avoids_value_run(w, k), "M"),
    "tree-avoids-comb1": (all_binary_trees, lambda k: lambda t: not contains_comb1(t, k), "C"),
    "plane-nonroot-degree-lt-k": (all_plane_trees, _plane_nonroot, "C"),
    "dyck-avoids-DU^k": (all_dyck_paths, lambda k: lambda p: dyck_avoids_du(p, k), "C"),
    "partition-c": (all_staircase_partitions, lambda k: lambda lam: partition_condition_c(lam, k), "C"),
    "syt-c": (all_tableaux, lambda k: lambda tab: syt_condition_c(tab, k), "C"),
    "perm-132-and-c-pattern": (all_132_avoiders, lambda k: lambda w: perm_avoids_c_pattern(w, k), "C"),
}


def count_family(family: str, k: int, n: int) -> int:
    """Literal filter-and-count; ``M`` families give ``M(k-1, n)``, ``C`` families ``C(k, n)``."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    if k < 1 or n < 0:
        raise ValueError("need k >= 1 and n >= 0")
    _check_bound(n, FAMILY_MAX_N, "family enumeration")
    domain, predicate, _ = FAMILIES[family]
    test = predicate(k)
    return sum(1 for item in domain(n) if test(item))


def class_size_histogram(n: int, k: int) -> dict[int, int]:
    """Class size -> number of classes, from the rewrite closure."""
    sizes = Counter(len(c) for c in classes_by_rewrite_closure(n, k))
    return dict(sorted(sizes.items()))


def axis_contacts(path: str) -> int:
    """Points of the path on the x-axis, both end points included."""
    height = 0
    hits = 1
    for step in path:
        height += 1 if step == "U" else -1
        if height == 0:
            hits += 1
    return hits


def root_contacts(path: str) -> int:
    """One plus the length of the leading run of up-steps.

    This is the root degree plus one for the plane tree whose degree
    sequence spells the path. It agrees with :func:`axis_contacts` when
    summed over all Dyck paths, but not over restricted families.
    """
    return len(path) - len(path.lstrip("U")) + 1


def total_root_contacts(k: int, n: int) -> int:
    """Sum of :func:`root_contacts` over Dyck paths of length ``2n`` avoiding ``D U^k``."""
    _check_bound(n, FAMILY_MAX_N, "path enumeration")
    return sum(root_contacts(p) for p in all_dyck_paths(n) if dyck_avoids_du(p, k))


def depth_first_path(d) -> str:
    """Walk the plane tree with multi-degree ``d``: U into each child, D back out."""
    steps = []
    degrees = iter(d)

    def walk():
        for _ in range(next(degrees)):
            steps.append("U")
            walk()
            steps.append("D")

    walk()
    return "".join(steps)


def total_axis_contacts(k: int, n: int) -> int:
    """Axis contacts summed over ``D U^k``-avoiding paths, each redrawn depth first.

    A path spells a multi-degree, and the depth-first walk of that tree
    returns to the axis once per child of the root.
    """
    _check_bound(n, FAMILY_MAX_N, "path enumeration")
    return sum(
        axis_contacts(depth_first_path(dyck_to_plane(p))) for p in all_dyck_paths(n) if dyck_avoids_du(p, k)
    )
