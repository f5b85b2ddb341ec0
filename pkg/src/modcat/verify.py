"""Verification suites shared by the command line and the acceptance tests.

Each suite returns a :class:`SuiteResult` made of named checks. Ranges are
parameters so callers can shrink them; the defaults are the full ranges.
"""

from __future__ import annotations

import time
from collections import Counter
from collections.abc import Callable
from dataclasses import dataclass, field

from . import counting, dyck_cycle, oracle, rewrite
from .catalan_objects import (
    dyck_to_partition,
    dyck_to_plane,
    dyck_to_syt,
    partition_to_dyck,
    plane_to_dyck,
    syt_to_dyck,
    tr,
    tr_inverse,
)
from .trees import binary_to_plane, from_left_depth, left_depth, plane_to_binary

__all__ = [
    "TABLE1",
    "TABLE1_CATALAN_ROW",
    "Check",
    "SuiteResult",
    "SUITES",
    "run_suite",
    "suite_table1",
    "suite_oracle",
    "suite_formulas",
    "suite_bijections",
    "suite_largest",
    "suite_dcounts",
    "suite_refinements",
    "suite_dyck_cycle",
    "suite_special",
    "growth_ratios",
]

# rows k = 1..8, columns n = 0..14
TABLE1 = {
    1: [1] * 15,
    2: [1, 1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024, 2048, 4096, 8192],
    3: [1, 1, 2, 5, 13, 35, 96, 267, 750, 2123, 6046, 17303, 49721, 143365, 414584],
    4: [1, 1, 2, 5, 14, 41, 124, 384, 1210, 3865, 12482, 40677, 133572, 441468, 1467296],
    5: [1, 1, 2, 5, 14, 42, 131, 420, 1375, 4576, 15431, 52603, 180957, 627340, 2189430],
    6: [1, 1, 2, 5, 14, 42, 132, 428, 1420, 4796, 16432, 56966, 199444, 704146, 2504000],
    7: [1, 1, 2, 5, 14, 42, 132, 429, 1429, 4851, 16718, 58331, 205632, 731272, 2620176],
    8: [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4861, 16784, 58695, 207452, 739840, 2658936],
}
TABLE1_CATALAN_ROW = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012, 742900, 2674440]


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class SuiteResult:
    name: str
    checks: list[Check] = field(default_factory=list)
    seconds: float = 0.0
    info: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(passed), detail))

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]


def _timed(fn):
    def wrapper(*args, **kwargs):
        start = time.perf_counter()
        result = fn(*args, **kwargs)
        result.seconds = time.perf_counter() - start
        return result

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


@_timed
def suite_table1(kmax: int = 8, nmax: int = 14) -> SuiteResult:
    """Both closed formulas against every cell of the published table."""
    res = SuiteResult("table1")
    matches = 0
    bad = []
    for k in range(1, kmax + 1):
        for n in range(nmax + 1):
            want = TABLE1[k][n]
            got = (counting.c_modular_alt(k, n), counting.c_modular_msf(k, n))
            if got == (want, want):
                matches += 1
            else:
                bad.append(f"C({k},{n}) expected {want} got {got}")
    for n in range(nmax + 1):
        if counting.catalan(n) == TABLE1_CATALAN_ROW[n]:
            matches += 1
        else:
            bad.append(f"C_{n}")
    total = (kmax + 1) * (nmax + 1)
    res.add("table1 cells", not bad, f"{matches}/{total} cell matches" + ("; " + "; ".join(bad[:5]) if bad else ""))
    return res


def _as_partition(classes):
    return {frozenset(c) for c in classes}


@_timed
def suite_oracle(nmax: int = 8, kmax: int = 5) -> SuiteResult:
    """Omega evaluation, rewrite closure and canonical forms give one partition."""
    res = SuiteResult("oracle")
    bad = []
    for n in range(nmax + 1):
        for k in range(1, kmax + 1):
            by_omega = _as_partition(oracle.classes_by_omega(n, k))
            by_closure = _as_partition(oracle.classes_by_rewrite_closure(n, k))
            groups: dict = {}
            for t in oracle.all_binary_trees(n):
                groups.setdefault(rewrite.canonicalize(binary_to_plane(t), k), set()).add(t)
            by_canon = _as_partition(groups.values())
            if not (by_omega == by_closure == by_canon):
                bad.append(f"partitions differ at n={n}, k={k}")
            elif len(by_canon) != counting.c_modular(k, n):
                bad.append(f"class count {len(by_canon)} != C({k},{n})")
    res.add("three-way class agreement", not bad, "; ".join(bad[:5]) or f"n<={nmax}, k<={kmax}")
    return res


@_timed
def suite_formulas(kmax: int = 8, nmax: int = 30, residual_kmax: int = 6) -> SuiteResult:
    """Positive sums, alternating sums and generating functions agree."""
    res = SuiteResult("formulas")
    bad_c = [(k, n) for k in range(1, kmax + 1) for n in range(nmax + 1)
             if counting.c_modular_msf(k, n) != counting.c_modular_alt(k, n)]
    res.add("C msf = alt", not bad_c, f"mismatches {bad_c[:5]}" if bad_c else f"k<={kmax}, n<={nmax}")
    bad_m = [(k, n) for k in range(0, kmax + 1) for n in range(nmax + 1)
             if counting.m_general_msf(k, n) != counting.m_general_alt(k, n)]
    res.add("M msf = alt", not bad_m, f"mismatches {bad_m[:5]}" if bad_m else f"k<={kmax}, n<={nmax}")
    bad_series = []
    for k in range(1, kmax + 1):
        ms = counting.series_m(k, nmax)
        cs = counting.series_c(k, nmax)
        for n in range(nmax):
            if ms[n + 1] != counting.m_general_alt(k, n):
                bad_series.append(("M", k, n))
            if cs[n + 1] != counting.c_modular_alt(k, n):
                bad_series.append(("C", k, n))
    res.add("series coefficients", not bad_series, f"{bad_series[:5]}" if bad_series else f"to order {nmax}")
    bad_res = [k for k in range(1, residual_kmax + 1)
               if not counting.ck_equation_residual(counting.series_c(k, nmax), k).is_zero()]
    res.add("algebraic equation residual", not bad_res, f"nonzero for k={bad_res}" if bad_res else f"zero to order {nmax}")
    return res


@_timed
def suite_bijections(nmax: int = 9, family_nmax: int = 8, kmax: int = 5) -> SuiteResult:
    """Round trips for the six bijections and the twelve restricted family counts."""
    res = SuiteResult("bijections")
    bad = Counter()
    for n in range(nmax + 1):
        for t in oracle.all_binary_trees(n):
            if from_left_depth(left_depth(t)) != t:
                bad["left depth"] += 1
            d = binary_to_plane(t)
            if plane_to_binary(d) != t:
                bad["plane tree"] += 1
            path = plane_to_dyck(d)
            if dyck_to_plane(path) != d:
                bad["dyck path"] += 1
            if partition_to_dyck(dyck_to_partition(path), n) != path:
                bad["partition"] += 1
            if syt_to_dyck(dyck_to_syt(path)) != path:
                bad["tableau"] += 1
            if tr(tr_inverse(t)) != t:
                bad["permutation"] += 1
        for w in oracle.all_132_avoiders(n):
            if tr_inverse(tr(w)) != w:
                bad["permutation"] += 1
    for name in ("left depth", "plane tree", "dyck path", "partition", "tableau", "permutation"):
        res.add(f"round trip {name}", bad[name] == 0, f"{bad[name]} failures, n<={nmax}")
    for family, (_, _, which) in oracle.FAMILIES.items():
        wrong = []
        for k in range(1, kmax + 1):
            for n in range(family_nmax + 1):
                want = counting.m_general(k - 1, n) if which == "M" else counting.c_modular(k, n)
                got = oracle.count_family(family, k, n)
                if got != want:
                    wrong.append(f"k={k},n={n}: {got}!={want}")
        res.add(f"family {family}", not wrong, "; ".join(wrong[:3]) or f"= {which} counts")
    return res


@_timed
def suite_largest(nmax: int = 9, kmax: int = 5) -> SuiteResult:
    """Largest class size, its multiplicity, and the admissible representatives."""
    res = SuiteResult("largest")
    bad = []
    for n in range(1, nmax + 1):
        for k in range(1, kmax + 1):
            classes = oracle.classes_by_rewrite_closure(n, k)
            sizes = [len(c) for c in classes]
            top = max(sizes)
            if top != counting.largest_class_size_formula(n, k):
                bad.append(f"max size n={n},k={k}")
            m = rewrite.admissible_m(n, k)
            if sizes.count(top) != counting.catalan(m):
                bad.append(f"multiplicity n={n},k={k}")
            reps = {rewrite.canonicalize(binary_to_plane(next(iter(c))), k) for c in classes if len(c) == top}
            if reps != set(rewrite.admissible_multi_degrees(n, k)):
                bad.append(f"admissible reps n={n},k={k}")
    res.add("largest classes", not bad, "; ".join(bad[:5]) or f"1<=n<={nmax}, k<={kmax}")
    return res


@_timed
def suite_dcounts(nmax: int = 9, kmax: int = 4, closed_nmax: int = 12) -> SuiteResult:
    res = SuiteResult("dcounts")
    bad = []
    literal = []
    drawn = []
    for k in range(1, kmax + 1):
        for n in range(1, nmax + 1):
            paths = [p for p in oracle.all_dyck_paths(n) if "D" + "U" * k not in p]
            want = counting.d_intersections(k, n)
            if oracle.total_axis_contacts(k, n) != want:
                drawn.append(f"k={k},n={n}")
            if sum(oracle.root_contacts(p) for p in paths) != want:
                bad.append(f"k={k},n={n}")
            if sum(oracle.axis_contacts(p) for p in paths) != want:
                literal.append((k, n))
    res.add("axis contacts, depth-first drawing", not drawn, "; ".join(drawn[:5]) or f"n<={nmax}, k<={kmax}")
    res.add("root-degree contacts", not bad, "; ".join(bad[:5]) or f"n<={nmax}, k<={kmax}")
    res.info.append(
        f"contacts of the step string itself differ from the formula at {len(literal)} of {kmax * nmax} cells"
    )
    closed = [n for n in range(1, closed_nmax + 1) if 4 * counting.d_intersections(2, n) != (n + 3) * 2**n]
    res.add("k=2 closed form", not closed, f"fails at {closed}" if closed else f"n<={closed_nmax}")
    bad_series = [(k, n) for k in range(1, kmax + 1) for n in range(1, closed_nmax)
                  if counting.series_d(k, closed_nmax)[n + 1] != counting.d_intersections(k, n)]
    res.add("series coefficients", not bad_series, f"{bad_series[:5]}" if bad_series else "agree")
    return res


def _internal(d):
    return sum(1 for x in d if x > 0)


@_timed
def suite_refinements(nmax: int = 9, kmax: int = 4, narayana_nmax: int = 10) -> SuiteResult:
    res = SuiteResult("refinements")
    bad = []
    for n in range(nmax + 1):
        trees = list(oracle.all_plane_trees(n))
        for k in range(1, kmax + 1):
            hist_m = Counter(_internal(d) for d in trees if all(x <= k for x in d))
            hist_c = Counter(_internal(d) for d in trees if all(x < k for x in d[1:]))
            for method in ("alt", "msf"):
                row_m = [counting.m_refined(k, n, r, method) for r in range(n + 1)]
                row_c = [counting.c_refined(k, n, r, method) for r in range(n + 1)]
                if sum(row_m) != counting.m_general(k, n):
                    bad.append(f"M row sum k={k},n={n},{method}")
                if sum(row_c) != counting.c_modular(k, n):
                    bad.append(f"C row sum k={k},n={n},{method}")
                if row_m != [hist_m[r] for r in range(n + 1)]:
                    bad.append(f"M histogram k={k},n={n},{method}")
                if row_c != [hist_c[r] for r in range(n + 1)]:
                    bad.append(f"C histogram k={k},n={n},{method}")
    res.add("refined counts", not bad, "; ".join(bad[:5]) or f"n<={nmax}, k<={kmax}")
    nar = []
    for n in range(1, narayana_nmax + 1):
        for r in range(n + 1):
            want = counting.narayana(n, r)
            got = {counting.m_refined(n, n, r, m) for m in ("alt", "msf")}
            got |= {counting.c_refined(n + 1, n, r, m) for m in ("alt", "msf")}
            if got != {want}:
                nar.append(f"n={n},r={r}")
    res.add("Narayana specialization", not nar, "; ".join(nar[:5]) or f"n<={narayana_nmax}")
    bivariate = []
    for n in range(1, 8):
        for k in range(1, kmax + 1):
            for r in range(1, n + 1):
                via_m = counting.refined_degree_constrained(range(1, k + 1), 1, n + 1, r)
                via_c = sum(counting.refined_degree_constrained(range(1, k), l, n, r - 1) for l in range(1, n + 1))
                if via_m != counting.m_refined(k, n, r) or via_c != counting.c_refined(k, n, r):
                    bivariate.append(f"k={k},n={n},r={r}")
    res.add("bivariate expansion", not bivariate, "; ".join(bivariate[:5]) or "agrees")
    return res


def _compositions(total, parts):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for x in range(total + 1):
        for rest in _compositions(total - x, parts - 1):
            yield (x,) + rest


@_timed
def suite_dyck_cycle(nmax: int = 7, kmax: int = 4, involution_nmax: int = 6) -> SuiteResult:
    res = SuiteResult("dyck-cycle")
    bad = 0
    for n in range(1, nmax + 1):
        for e in _compositions(n, n + 1):
            if e[0] < 1:
                continue
            path = dyck_cycle.LatticePath(e)
            expected = sorted((r for r in range(n) if dyck_cycle.cyclic_reorder(path, r).is_dyck()), reverse=True)
            if dyck_cycle.valid_rotation_indices(path) != expected:
                bad += 1
    res.add("rotation index characterization", bad == 0, f"{bad} failures, n<={nmax}")
    bad_bij = []
    for n in range(1, nmax + 1):
        for k in range(1, kmax + 1):
            allowed = range(k)
            for ell in range(1, n + 1):
                domain = list(dyck_cycle.marked_domain(allowed, n, ell))
                codomain = set(dyck_cycle.marked_codomain(allowed, n, ell))
                images = [dyck_cycle.dyck2_forward(m) for m in domain]
                if set(images) != codomain or len(images) != len(codomain):
                    bad_bij.append(f"n={n},k={k},l={ell}")
                elif any(dyck_cycle.dyck2_inverse(img) != m for img, m in zip(images, domain)):
                    bad_bij.append(f"inverse n={n},k={k},l={ell}")
    res.add("marked path bijection", not bad_bij, "; ".join(bad_bij[:5]) or f"n<={nmax}, k<={kmax}")
    bad_inv = []
    for family in ("M", "C"):
        for k in range(1, kmax + 1):
            for n in range(1, involution_nmax + 1):
                report = dyck_cycle.verify_involution(family, k, n)
                want = (n + 1) * counting.m_general(k - 1, n) if family == "M" else n * counting.c_modular(k, n)
                if not report.ok or report.fixed_points != want:
                    bad_inv.append(f"{family} k={k},n={n}")
    res.add("sign-reversing involutions", not bad_inv, "; ".join(bad_inv[:5]) or f"n<={involution_nmax}, k<={kmax}")
    bad_ref = []
    for k in range(1, 4):
        for n in range(1, involution_nmax + 1):
            for j in range(n // k + 2):
                for r in range(n + 2):
                    if dyck_cycle.refined_segment_count("M", k + 1, n, j, r) != dyck_cycle.refined_segment_formula("M", k, n, j, r):
                        bad_ref.append(f"M k={k},n={n},j={j},r={r}")
                    if r >= 1 and dyck_cycle.refined_segment_count("C", k + 1, n, j, r - 1) != dyck_cycle.refined_segment_formula("C", k, n, j, r):
                        bad_ref.append(f"C k={k},n={n},j={j},r={r}")
    res.add("valley-refined constructions", not bad_ref, "; ".join(bad_ref[:5]) or f"n<={involution_nmax}, k<=3")
    via_cycle = [(k, n) for k in range(1, kmax + 2) for n in range(1, 10)
                 if dyck_cycle.count_via_cycle(range(k), n) != counting.c_modular(k, n)]
    res.add("count via cycle", not via_cycle, f"{via_cycle[:5]}" if via_cycle else "agrees")
    return res


def growth_ratios(kmax: int = 8, n: int = 14) -> dict[int, float]:
    """``C(k, n+1) / C(k, n)`` for each ``k``; informational only."""
    return {k: counting.c_modular(k, n + 1) / counting.c_modular(k, n) for k in range(1, kmax + 1)}


@_timed
def suite_special(n2max: int = 14, kmax: int = 8, c3max: int = 20) -> SuiteResult:
    res = SuiteResult("special")
    two = [n for n in range(1, n2max + 1) if counting.c_modular(2, n) != 2 ** (n - 1)]
    res.add("C(2,n) = 2^(n-1)", not two, f"fails at {two}" if two else f"1<=n<={n2max}")
    small = [(k, n) for k in range(1, kmax + 1) for n in range(k + 1) if counting.c_modular(k, n) != counting.catalan(n)]
    res.add("C(k,n) = C_n for n <= k", not small, f"{small}" if small else f"k<={kmax}")
    c3 = [n for n in range(1, c3max + 1) if counting.c3_central(n) != counting.c_modular(3, n)]
    res.add("k=3 central binomial sum", not c3, f"fails at {c3}" if c3 else f"n<={c3max}")
    boundary = []
    for k in range(1, kmax + 1):
        for l in range(1, k + 1):
            if counting.c_boundary(k, l) != counting.c_modular(k, k + l):
                boundary.append(("C", k, l))
        for l in range(1, k + 2):
            if counting.m_boundary(k, l) != counting.m_general(k, k + l):
                boundary.append(("M", k, l))
    res.add("boundary identities", not boundary, f"{boundary[:5]}" if boundary else f"k<={kmax}")
    ratios = growth_ratios(kmax)
    res.info.append("C(k,15)/C(k,14): " + ", ".join(f"k={k}: {v:.4f}" for k, v in ratios.items()))
    return res


SUITES: dict[str, Callable[[], SuiteResult]] = {
    "table1": suite_table1,
    "oracle": suite_oracle,
    "formulas": suite_formulas,
    "bijections": suite_bijections,
    "largest": suite_largest,
    "dcounts": suite_dcounts,
    "refinements": suite_refinements,
    "dyck-cycle": suite_dyck_cycle,
    "special": suite_special,
}


def run_suite(name: str) -> list[SuiteResult]:
    if name == "all":
        return [fn() for fn in SUITES.values()]
    if name not in SUITES:
        raise KeyError(name)
    return [SUITES[name]()]
