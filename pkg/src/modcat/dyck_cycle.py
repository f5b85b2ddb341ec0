"""Cyclic reorderings of lattice paths and the marked-path bijection.

A lattice path ``U^{e_0} D U^{e_1} ... D U^{e_n}`` is stored as its exponent
tuple. Rotating the blocks ``D U^{e_1}, ..., D U^{e_n}`` cyclically turns
exactly ``e_0`` of the ``n`` rotations into Dyck paths, which gives a
bijection between up-marked lattice paths and down-marked Dyck paths. The
module also carries the sign-reversing involutions that turn the
alternating binomial sums into counts, as executable checks.
"""

from __future__ import annotations

from collections.abc import Container, Iterator
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Literal

from .counting import binomial
from .exceptions import ValidationError

__all__ = [
    "LatticePath",
    "MarkedPath",
    "cyclic_reorder",
    "valid_rotation_indices",
    "dyck2_forward",
    "dyck2_inverse",
    "count_lattice_paths",
    "count_via_cycle",
    "marked_domain",
    "marked_codomain",
    "SegmentMarking",
    "InvolutionReport",
    "segment_family",
    "toggle_first_long",
    "verify_involution",
    "valley_count",
    "refined_segment_count",
    "refined_segment_formula",
]


@dataclass(frozen=True)
class LatticePath:
    exponents: tuple[int, ...]

    def __post_init__(self):
        e = tuple(self.exponents)
        if not e or any(x < 0 for x in e):
            raise ValidationError("exponents must be a nonempty tuple of nonnegative integers")
        if sum(e) != len(e) - 1:
            raise ValidationError(f"exponents sum to {sum(e)}, expected {len(e) - 1}")
        object.__setattr__(self, "exponents", e)

    @classmethod
    def from_steps(cls, steps: str) -> LatticePath:
        if any(c not in "UD" for c in steps):
            raise ValidationError("steps must be U or D")
        return cls(tuple(len(run) for run in steps.split("D")))

    @property
    def n(self) -> int:
        return len(self.exponents) - 1

    @property
    def steps(self) -> str:
        return "D".join("U" * x for x in self.exponents)

    def is_dyck(self) -> bool:
        height = 0
        for i, x in enumerate(self.exponents):
            if i:
                height -= 1
                if height < 0:
                    return False
            height += x
        return True

    def __str__(self):
        return self.steps


@dataclass(frozen=True)
class MarkedPath:
    """A path with one marked step: the ``index``-th U (``side="up"``) or D (``side="down"``), 1-based."""

    path: LatticePath
    side: Literal["up", "down"]
    index: int

    def __post_init__(self):
        if self.side == "up":
            if not 1 <= self.index <= self.path.exponents[0]:
                raise ValidationError(f"up mark {self.index} outside 1..{self.path.exponents[0]}")
        elif self.side == "down":
            if not 1 <= self.index <= self.path.n:
                raise ValidationError(f"down mark {self.index} outside 1..{self.path.n}")
            if not self.path.is_dyck():
                raise ValidationError("a down-marked path must be a Dyck path")
        else:
            raise ValidationError(f"unknown side {self.side!r}")

    def render(self) -> str:
        """Step string with ``*`` after the marked step."""
        target = "U" if self.side == "up" else "D"
        out = []
        seen = 0
        for step in self.path.steps:
            out.append(step)
            if step == target:
                seen += 1
                if seen == self.index:
                    out.append("*")
        return "".join(out)

    def __str__(self):
        return self.render()


def cyclic_reorder(path: LatticePath, r: int) -> LatticePath:
    """``U^{e_0} D U^{e_{r+1}} ... D U^{e_n} D U^{e_1} ... D U^{e_r}``."""
    e = path.exponents
    n = path.n
    if not 0 <= r <= n:
        raise ValueError(f"r must lie in 0..{n}")
    return LatticePath((e[0],) + e[r + 1 :] + e[1 : r + 1])


def valid_rotation_indices(path: LatticePath) -> list[int]:
    """``[r_1, ..., r_{e_0}]``, strictly decreasing; ``L^{(r)}`` is Dyck exactly for these ``r``.

    ``r_i`` counts the down-steps before the one whose end point is the
    leftmost visit of the tail ``D U^{e_1} ... D U^{e_n}`` to height
    ``h + i - 1``, where ``h`` is the minimum height of that tail.
    """
    e = path.exponents
    if e[0] < 1:
        raise ValidationError("the leading run of up-steps is empty")
    # height after each down-step of the tail, and the running minimum
    heights = []
    height = 0
    for x in e[1:]:
        height -= 1
        heights.append(height)
        height += x
    lowest = min(heights)
    first_visit = {}
    for r, y in enumerate(heights):
        first_visit.setdefault(y, r)
    # only down-step end points can be first visits below every earlier height
    return [first_visit[lowest + i - 1] for i in range(1, e[0] + 1)]


def dyck2_forward(marked: MarkedPath) -> MarkedPath:
    if marked.side != "up":
        raise ValidationError("forward map expects an up-marked path")
    r = valid_rotation_indices(marked.path)[marked.index - 1]
    return MarkedPath(cyclic_reorder(marked.path, r), "down", marked.path.n - r)


def dyck2_inverse(marked: MarkedPath) -> MarkedPath:
    if marked.side != "down":
        raise ValidationError("inverse map expects a down-marked Dyck path")
    n = marked.path.n
    r = n - marked.index
    path = cyclic_reorder(marked.path, marked.index)
    indices = valid_rotation_indices(path)
    return MarkedPath(path, "up", indices.index(r) + 1)


def count_lattice_paths(allowed: Container[int], n: int, ell: int) -> int:
    """Paths ``U^ell D U^{e_1} ... D U^{e_n}`` with every ``e_i`` in ``allowed``."""
    target = n - ell
    if target < 0:
        return 0
    values = [v for v in range(target + 1) if v in allowed]
    ways = [1] + [0] * target
    for _ in range(n):
        nxt = [0] * (target + 1)
        for s, count in enumerate(ways):
            if count:
                for v in values:
                    if s + v > target:
                        break
                    nxt[s + v] += count
        ways = nxt
    return ways[target]


def count_via_cycle(allowed: Container[int], n: int) -> int:
    """Dyck paths of length ``2n`` with ``e_1, ..., e_n`` in ``allowed``, counted by marks."""
    if n < 1:
        raise ValueError("n must be >= 1")
    total = sum(ell * count_lattice_paths(allowed, n, ell) for ell in range(1, n + 1))
    q, rem = divmod(total, n)
    if rem:
        raise ArithmeticError("marked count not divisible by n")
    return q


def _compositions(total, parts, allowed=None):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for x in range(total + 1):
        if allowed is not None and x not in allowed:
            continue
        for rest in _compositions(total - x, parts - 1, allowed):
            yield (x,) + rest


def marked_domain(allowed: Container[int], n: int, ell: int) -> Iterator[MarkedPath]:
    for tail in _compositions(n - ell, n, allowed):
        path = LatticePath((ell,) + tail)
        for i in range(1, ell + 1):
            yield MarkedPath(path, "up", i)


def marked_codomain(allowed: Container[int], n: int, ell: int) -> Iterator[MarkedPath]:
    for tail in _compositions(n - ell, n, allowed):
        path = LatticePath((ell,) + tail)
        if path.is_dyck():
            for j in range(1, n + 1):
                yield MarkedPath(path, "down", j)


# --- sign-reversing involutions -------------------------------------------


@dataclass(frozen=True)
class SegmentMarking:
    """A path with a set of marked long segments and one marked leading up-step.

    ``segments`` are the exponents that may be marked; ``marked`` holds
    their positions. ``lead`` is the length of the leading run and ``up``
    the position of the marked up-step in it.
    """

    lead: int
    up: int
    segments: tuple[int, ...]
    marked: frozenset[int]

    @property
    def sign(self) -> int:
        return -1 if len(self.marked) % 2 else 1


def segment_family(family: str, k: int, n: int, j: int) -> Iterator[SegmentMarking]:
    """Marked-segment paths behind the alternating formulas.

    ``family="M"``: paths ``U D U^{e_0} D ... D U^{e_n}`` (length ``2n+2``).
    ``family="C"``: paths ``U^ell D U^{e_1} ... D U^{e_n}`` with ``ell`` in ``1..n``
    and one marked up-step in the leading run. In both, ``j`` segments of
    length at least ``k`` carry a mark.
    """
    if family == "M":
        leads, parts = (1,), n + 1
    elif family == "C":
        leads, parts = range(1, n + 1), n
    else:
        raise ValueError(f"unknown family {family!r}")
    for lead in leads:
        total = n - lead + 1 if family == "M" else n - lead
        for segments in _compositions(total, parts):
            longs = [i for i, x in enumerate(segments) if x >= k]
            for chosen in combinations(longs, j):
                for up in range(1, lead + 1):
                    yield SegmentMarking(lead, up, segments, frozenset(chosen))


def toggle_first_long(item: SegmentMarking, k: int) -> SegmentMarking:
    """Flip the mark on the first segment of length at least ``k``; fixed if there is none."""
    for i, x in enumerate(item.segments):
        if x >= k:
            return SegmentMarking(item.lead, item.up, item.segments, item.marked ^ {i})
    return item


@dataclass
class InvolutionReport:
    family: str
    k: int
    n: int
    sizes: dict[int, int]
    formula_sizes: dict[int, int]
    involution: bool
    sign_reversing: bool
    fixed_points: int
    fixed_points_avoid: bool
    signed_sum: int

    @property
    def ok(self) -> bool:
        return (
            self.involution
            and self.sign_reversing
            and self.fixed_points_avoid
            and self.sizes == self.formula_sizes
            and self.signed_sum == self.fixed_points
        )


def verify_involution(family: str, k: int, n: int) -> InvolutionReport:
    """Run the toggle over every marked-segment path and check the cancellation."""
    if k < 1 or n < 1:
        raise ValueError("k and n must be >= 1")
    if family == "M":
        jmax = n // k
        formula = {j: comb(n + 1, j) * binomial(2 * n - j * k, n) for j in range(jmax + 1)}
        avoid = "U" * k
    else:
        jmax = (n - 1) // k
        formula = {j: comb(n, j) * binomial(2 * n - j * k, n + 1) for j in range(jmax + 1)}
        avoid = "D" + "U" * k
    sizes = {}
    involution = sign_reversing = fixed_ok = True
    fixed = 0
    signed = 0
    for j in range(jmax + 1):
        count = 0
        for item in segment_family(family, k, n, j):
            count += 1
            signed += item.sign
            image = toggle_first_long(item, k)
            if toggle_first_long(image, k) != item:
                involution = False
            if image == item:
                fixed += 1
                steps = _segment_steps(family, item)
                if avoid in steps:
                    fixed_ok = False
            elif image.sign == item.sign:
                sign_reversing = False
        sizes[j] = count
    return InvolutionReport(family, k, n, sizes, formula, involution, sign_reversing, fixed, fixed_ok, signed)


def _segment_steps(family, item):
    if family == "M":
        return "UD" + "D".join("U" * x for x in item.segments)
    return "U" * item.lead + "".join("D" + "U" * x for x in item.segments)


# --- refinement by valleys ------------------------------------------------


def valley_count(steps: str) -> int:
    return steps.count("DU")


def refined_segment_count(family: str, k: int, n: int, j: int, valleys: int) -> int:
    """Brute-force size of a marked-segment family restricted to a valley count."""
    return sum(
        1 for item in segment_family(family, k, n, j) if valley_count(_segment_steps(family, item)) == valleys
    )


def refined_segment_formula(family: str, k: int, n: int, j: int, r: int) -> int:
    """Binomial products for the valley-refined families with segments of length ``>= k + 1``.

    ``family="M"``: paths of length ``2n + 2`` with ``r`` valleys.
    ``family="C"``: paths of length ``2n`` with ``r - 1`` valleys.
    """
    if family == "M":
        return binomial(n + 1, r) * binomial(r, j) * binomial(n - 1 - j * k, r - 1)
    if family == "C":
        return binomial(n, r - 1) * binomial(r - 1, j) * binomial(n - j * k, r)
    raise ValueError(f"unknown family {family!r}")
