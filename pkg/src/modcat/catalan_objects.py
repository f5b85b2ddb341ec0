"""Dyck paths, staircase partitions, 2 x n tableaux and permutations.

Each family is linked to plane trees or binary trees by an explicit
bijection, and each carries the two avoidance predicates whose solution
counts are the generalized Motzkin numbers and the modular Catalan numbers.

Dyck paths are plain ``"U"``/``"D"`` strings. Partitions are tuples of
length ``n`` (trailing zeros kept). Permutations are tuples of ``1..n``.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Sequence
from typing import NamedTuple

from .exceptions import ValidationError
from .trees import (
    LEAF,
    BinaryTree,
    Node,
    binary_to_plane,
    plane_to_binary,
    size,
    validate_multi_degree,
)

__all__ = [
    "Syt2xN",
    "is_dyck",
    "validate_dyck",
    "plane_to_dyck",
    "dyck_to_plane",
    "dyck_to_partition",
    "partition_to_dyck",
    "validate_partition",
    "partition_size",
    "partition_length",
    "dyck_to_syt",
    "syt_to_dyck",
    "validate_syt",
    "tr",
    "tr_inverse",
    "descent_set",
    "des",
    "des_inverse",
    "dyck_avoids_run",
    "dyck_avoids_du",
    "perm_avoids_132",
    "perm_avoids_value_run",
    "perm_avoids_c_pattern",
    "syt_condition_m",
    "syt_condition_c",
    "partition_condition_m",
    "partition_condition_c",
]


class Syt2xN(NamedTuple):
    """Standard Young tableau of shape ``(n, n)``, stored row by row."""

    top: tuple[int, ...]
    bottom: tuple[int, ...]


# --- Dyck paths -----------------------------------------------------------


def is_dyck(path: str) -> bool:
    height = 0
    for step in path:
        if step == "U":
            height += 1
        elif step == "D":
            height -= 1
        else:
            return False
        if height < 0:
            return False
    return height == 0


def validate_dyck(path: str) -> str:
    height = 0
    for i, step in enumerate(path):
        if step not in "UD":
            raise ValidationError(f"step {i} is {step!r}, expected U or D", i)
        height += 1 if step == "U" else -1
        if height < 0:
            raise ValidationError(f"path drops below the axis at step {i}", i)
    if height != 0:
        raise ValidationError(f"path ends at height {height}")
    return path


def plane_to_dyck(d: Sequence[int]) -> str:
    """``U^{d_0} D U^{d_1} ... D U^{d_n}``."""
    d = validate_multi_degree(d)
    return "D".join("U" * di for di in d)


def dyck_to_plane(path: str) -> tuple[int, ...]:
    validate_dyck(path)
    return tuple(len(run) for run in path.split("D"))


def _down_runs(path):
    """Write ``path`` as ``U D^{e_1} U D^{e_2} ... U D^{e_n}`` and return ``e``."""
    runs = []
    for step in path:
        if step == "U":
            runs.append(0)
        else:
            runs[-1] += 1
    return runs


def dyck_to_partition(path: str) -> tuple[int, ...]:
    """Partition whose ``j``-th part is ``e_1 + ... + e_{n-j}``."""
    validate_dyck(path)
    e = _down_runs(path)
    n = len(e)
    parts = []
    total = 0
    prefix = [0]
    for value in e:
        total += value
        prefix.append(total)
    for j in range(1, n + 1):
        parts.append(prefix[n - j])
    return tuple(parts)


def validate_partition(parts: Sequence[int], n: int) -> tuple[int, ...]:
    """Pad ``parts`` to length ``n`` and check it fits under ``(n-1, ..., 1, 0)``."""
    parts = tuple(parts)
    if len(parts) > n:
        raise ValidationError(f"partition has {len(parts)} parts, more than n = {n}")
    parts = parts + (0,) * (n - len(parts))
    for j, value in enumerate(parts, start=1):
        if value < 0:
            raise ValidationError(f"part {j} is negative", j - 1)
        if j > 1 and value > parts[j - 2]:
            raise ValidationError(f"part {j} exceeds part {j - 1}", j - 1)
        if value > n - j:
            raise ValidationError(f"part {j} is {value}, above the staircase bound {n - j}", j - 1)
    return parts


def partition_to_dyck(parts: Sequence[int], n: int | None = None) -> str:
    if n is None:
        n = len(parts)
    parts = validate_partition(parts, n)
    if n == 0:
        return ""
    # prefix[i] = e_1 + ... + e_i = lambda_{n-i}
    prefix = [0] + [parts[n - i - 1] for i in range(1, n)]
    e = [prefix[i] - prefix[i - 1] for i in range(1, n)]
    e.append(n - prefix[n - 1])
    return "".join("U" + "D" * value for value in e)


def partition_size(parts: Sequence[int]) -> int:
    return sum(parts)


def partition_length(parts: Sequence[int]) -> int:
    return sum(1 for value in parts if value > 0)


# --- tableaux -------------------------------------------------------------


def dyck_to_syt(path: str) -> Syt2xN:
    validate_dyck(path)
    top = tuple(i for i, step in enumerate(path, start=1) if step == "U")
    bottom = tuple(i for i, step in enumerate(path, start=1) if step == "D")
    return Syt2xN(top, bottom)


def validate_syt(tableau: Syt2xN) -> Syt2xN:
    top, bottom = tuple(tableau[0]), tuple(tableau[1])
    n = len(top)
    if len(bottom) != n:
        raise ValidationError("rows have different lengths")
    if sorted(top + bottom) != list(range(1, 2 * n + 1)):
        raise ValidationError(f"entries are not a permutation of 1..{2 * n}")
    for row in (top, bottom):
        for i in range(1, n):
            if row[i] <= row[i - 1]:
                raise ValidationError(f"row not increasing at column {i}", i)
    for i in range(n):
        if bottom[i] <= top[i]:
            raise ValidationError(f"column {i} not increasing", i)
    return Syt2xN(top, bottom)


def syt_to_dyck(tableau: Syt2xN) -> str:
    top, bottom = validate_syt(tableau)
    upper = set(top)
    return "".join("U" if i in upper else "D" for i in range(1, 2 * len(top) + 1))


# --- permutations and binary trees ----------------------------------------


def tr(word: Sequence[int]) -> BinaryTree:
    """Binary tree whose root is the position of the maximum of ``word``."""
    word = tuple(word)
    if len(set(word)) != len(word):
        raise ValidationError("word has repeated entries")

    def build(lo, hi):
        if lo == hi:
            return LEAF
        top = max(range(lo, hi), key=word.__getitem__)
        return Node(build(lo, top), build(top + 1, hi))

    return build(0, len(word))


def tr_inverse(t: BinaryTree) -> tuple[int, ...]:
    """Label internal nodes ``n, n-1, ..., 1`` in pre-order, read them in-order."""
    out = []
    next_label = size(t)

    def walk(u):
        nonlocal next_label
        if isinstance(u, Node):
            label = next_label
            next_label -= 1
            walk(u.left)
            out.append(label)
            walk(u.right)

    walk(t)
    return tuple(out)


def descent_set(w: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i in range(1, len(w)) if w[i - 1] > w[i])


def des(t: BinaryTree) -> frozenset[int]:
    """``{i in [n-1] : d_i > 0}`` for the multi-degree ``d`` of ``t``."""
    d = binary_to_plane(t)
    return frozenset(i for i in range(1, len(d) - 1) if d[i] > 0)


def des_inverse(subset: Iterable[int], n: int) -> BinaryTree:
    subset = frozenset(subset)
    if any(not 1 <= i <= n - 1 for i in subset):
        raise ValidationError(f"subset must lie in 1..{n - 1}")
    d = [0] * (n + 1)
    d[0] = n - len(subset)
    for i in subset:
        d[i] = 1
    return plane_to_binary(d)


# --- avoidance predicates -------------------------------------------------


def dyck_avoids_run(path: str, k: int) -> bool:
    """No factor ``U^k``."""
    return "U" * k not in path


def dyck_avoids_du(path: str, k: int) -> bool:
    """No factor ``D U^k``."""
    return "D" + "U" * k not in path


def perm_avoids_132(w: Sequence[int]) -> bool:
    """Classical avoidance of 1-3-2 (gaps allowed between all three entries)."""
    n = len(w)
    smallest = float("inf")
    for j in range(n):
        # w[j] plays the 3; need a later entry strictly between min-before and w[j]
        if smallest < w[j]:
            for l in range(j + 1, n):
                if smallest < w[l] < w[j]:
                    return False
        smallest = min(smallest, w[j])
    return True


def _positions(w):
    pos = [0] * (len(w) + 1)
    for i, value in enumerate(w):
        pos[value] = i
    return pos


def perm_avoids_value_run(w: Sequence[int], k: int) -> bool:
    """No ``h`` with ``h+1, ..., h+k`` appearing left to right in ``w``."""
    n = len(w)
    pos = _positions(w)
    for h in range(0, n - k + 1):
        if all(pos[h + j] < pos[h + j + 1] for j in range(1, k)):
            return False
    return True


def perm_avoids_c_pattern(w: Sequence[int], k: int) -> bool:
    """Vincular avoidance of ``23...(k+1)1``: no ``k + 1`` adjacent entries in that order.

    Adjacent entries ``w[p..p+k]`` match when the first ``k`` increase and the
    last is smaller than all of them. Restricted to 1-3-2 avoiders this is
    the family counted by the modular Catalan numbers.
    """
    for p in range(len(w) - k):
        window = w[p : p + k + 1]
        if window[-1] < window[0] and all(window[i] < window[i + 1] for i in range(k - 1)):
            return False
    return True


def syt_condition_m(tableau: Syt2xN, k: int) -> bool:
    """No ``k`` consecutive numbers in the top row."""
    top = set(tableau[0])
    total = 2 * len(tableau[0])
    return not any(all(i + j in top for j in range(k)) for i in range(1, total - k + 2))


def syt_condition_c(tableau: Syt2xN, k: int) -> bool:
    """Every run of ``k`` consecutive top-row numbers lies inside some ``1, ..., l`` in the top row."""
    top = set(tableau[0])
    total = 2 * len(tableau[0])
    for i in range(1, total - k + 2):
        if all(i + j in top for j in range(k)):
            if not all(x in top for x in range(1, i)):
                return False
    return True


def partition_condition_m(parts: Sequence[int], k: int) -> bool:
    """Each part, zero included, occurs fewer than ``k`` times."""
    return all(mult < k for mult in Counter(parts).values())


def partition_condition_c(parts: Sequence[int], k: int) -> bool:
    """Each positive part occurs fewer than ``k`` times."""
    return all(mult < k for value, mult in Counter(parts).items() if value > 0)
