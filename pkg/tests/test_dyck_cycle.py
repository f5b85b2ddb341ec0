import pytest

from modcat.counting import c_modular, count_degree_constrained, m_general
from modcat.dyck_cycle import (
    LatticePath,
    MarkedPath,
    count_lattice_paths,
    count_via_cycle,
    cyclic_reorder,
    dyck2_forward,
    dyck2_inverse,
    marked_codomain,
    marked_domain,
    refined_segment_count,
    refined_segment_formula,
    segment_family,
    toggle_first_long,
    valid_rotation_indices,
    verify_involution,
)
from modcat.exceptions import ValidationError

FIG = LatticePath.from_steps("UUDDUDDU")


def test_reorder_figure():
    assert FIG.exponents == (2, 0, 1, 0, 1)
    assert cyclic_reorder(FIG, 1).steps == "UUDUDDUD"
    assert cyclic_reorder(FIG, 3).steps == "UUDUDDUD"
    assert cyclic_reorder(FIG, 2) == FIG
    assert cyclic_reorder(FIG, 0) == FIG == cyclic_reorder(FIG, 4)
    assert not FIG.is_dyck() and cyclic_reorder(FIG, 1).is_dyck()
    assert valid_rotation_indices(FIG) == [3, 1]


def test_marked_figure_pairs():
    first = dyck2_forward(MarkedPath(FIG, "up", 1))
    assert first.render() == "UUD*UDDUD"
    second = dyck2_forward(MarkedPath(FIG, "up", 2))
    assert second.render() == "UUDUDD*UD"
    assert MarkedPath(FIG, "up", 2).render() == "UU*DDUDDU"
    assert dyck2_inverse(first) == MarkedPath(FIG, "up", 1)
    assert dyck2_inverse(second) == MarkedPath(FIG, "up", 2)


def test_singleton():
    ud = LatticePath.from_steps("UD")
    up = MarkedPath(ud, "up", 1)
    down = dyck2_forward(up)
    assert down == MarkedPath(ud, "down", 1)
    assert dyck2_inverse(down) == up


def test_staircase_path_indices():
    for n in range(1, 7):
        path = LatticePath.from_steps("U" * n + "D" * n)
        want = sorted((r for r in range(n) if cyclic_reorder(path, r).is_dyck()), reverse=True)
        assert valid_rotation_indices(path) == want == list(range(n - 1, -1, -1))


def test_validation():
    with pytest.raises(ValidationError):
        LatticePath((1, 1))
    with pytest.raises(ValidationError):
        valid_rotation_indices(LatticePath((0, 1)))
    with pytest.raises(ValidationError):
        MarkedPath(FIG, "up", 3)
    with pytest.raises(ValidationError):
        MarkedPath(FIG, "down", 1)
    with pytest.raises(ValidationError):
        dyck2_forward(MarkedPath(cyclic_reorder(FIG, 1), "down", 1))
    with pytest.raises(ValidationError):
        LatticePath.from_steps("UXD")


@pytest.mark.parametrize("k", range(1, 4))
def test_bijection_small(k):
    for n in range(1, 6):
        for ell in range(1, n + 1):
            dom = list(marked_domain(range(k), n, ell))
            cod = set(marked_codomain(range(k), n, ell))
            assert {dyck2_forward(m) for m in dom} == cod
            assert len(dom) == len(cod) == ell * count_lattice_paths(range(k), n, ell)
            for m in cod:
                assert dyck2_forward(dyck2_inverse(m)) == m


def test_count_via_cycle():
    assert count_via_cycle(range(5), 6) == 131
    for n in range(1, 13):
        assert count_via_cycle({0}, n) == 1
        assert count_via_cycle({0, 1}, n) == 2 ** (n - 1)
    for n in range(1, 9):
        for allowed in ({0, 2}, {0, 1, 3}, range(0, 20, 3)):
            want = sum(count_degree_constrained(allowed, l, n) for l in range(1, n + 1))
            assert count_via_cycle(allowed, n) == want


@pytest.mark.parametrize("family", ["M", "C"])
def test_involutions(family):
    for k in range(1, 4):
        for n in range(1, 6):
            report = verify_involution(family, k, n)
            assert report.ok
            if family == "M":
                assert report.fixed_points == (n + 1) * m_general(k - 1, n)
            else:
                assert report.fixed_points == n * c_modular(k, n)


def test_toggle_without_long_segment_is_fixed():
    item = next(segment_family("C", 3, 3, 0))
    if all(x < 3 for x in item.segments):
        assert toggle_first_long(item, 3) == item
    with pytest.raises(ValueError):
        list(segment_family("X", 1, 1, 0))


def test_refined_constructions():
    for k in range(1, 3):
        for n in range(1, 6):
            for j in range(3):
                for r in range(n + 2):
                    assert refined_segment_count("M", k + 1, n, j, r) == refined_segment_formula("M", k, n, j, r)
                    if r:
                        assert refined_segment_count("C", k + 1, n, j, r - 1) == refined_segment_formula("C", k, n, j, r)
