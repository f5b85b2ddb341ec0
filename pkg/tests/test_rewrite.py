import json
from itertools import product

import pytest
from hypothesis import given, strategies as st

from conftest import binary_trees
from modcat.counting import c_modular, catalan, largest_class_size_formula, m_general
from modcat.exceptions import PatternMismatchError, ValidationError
from modcat.rewrite import (
    RotationSite,
    admissible_m,
    admissible_multi_degrees,
    apply_rotation,
    canonicalize,
    children_indices,
    class_size,
    count_k_admissible,
    down_k_slide,
    is_k_admissible,
    is_k_maximal,
    is_k_minimal,
    k_components,
    k_equivalent,
    k_equivalent_multi_degree,
    largest_class_size,
    left_k_rotation,
    parent_indices,
    right_k_rotation,
    rotation_sites,
    slide_neighbours,
    tamari_covers,
    up_k_slide,
)
from modcat.trees import (
    LEAF,
    Node,
    binary_to_plane,
    comb,
    enumerate_binary_trees,
    enumerate_plane_trees,
    from_left_depth,
    left_depth,
    plane_to_binary,
)


def test_ordinary_rotation():
    t = Node(Node(LEAF, LEAF), LEAF)
    assert right_k_rotation(t, RotationSite(""), 1) == Node(LEAF, Node(LEAF, LEAF))


def test_two_rotation_example():
    t = from_left_depth((3, 2, 1, 0))
    u = right_k_rotation(t, "", 2)
    assert left_depth(u) == (1, 2, 1, 0)
    assert left_k_rotation(u, "", 2) == t
    assert k_equivalent(t, u, 2)
    assert not k_equivalent(t, u, 1 + 2)


def _chain_of_one_rotations(t, path, k):
    # right 1-rotations climbing the left chain, from depth k-1 up to the site
    for depth in range(k - 1, -1, -1):
        t = right_k_rotation(t, path + "L" * depth, 1)
    return t


def test_k_rotation_is_k_one_rotations():
    for n in range(8):
        for t in enumerate_binary_trees(n):
            for k in range(1, 5):
                for site in rotation_sites(t, k):
                    if site.direction == "right":
                        assert right_k_rotation(t, site, k) == _chain_of_one_rotations(t, site.path, k)


def test_rotation_mismatch():
    with pytest.raises(PatternMismatchError):
        right_k_rotation(comb(2), "", 2)
    with pytest.raises(PatternMismatchError):
        left_k_rotation(comb(3), "", 1)
    with pytest.raises(PatternMismatchError):
        left_k_rotation(LEAF, "", 1)
    with pytest.raises(ValueError):
        apply_rotation(comb(3), RotationSite("", "sideways"), 1)


@pytest.mark.parametrize("n", range(7))
def test_rotations_invert_and_preserve_class(n):
    for t in enumerate_binary_trees(n):
        for k in range(1, 4):
            for site in rotation_sites(t, k):
                u = apply_rotation(t, site, k)
                back = RotationSite(site.path, "left" if site.direction == "right" else "right")
                assert apply_rotation(u, back, k) == t
                assert k_equivalent(t, u, k)
                assert canonicalize(binary_to_plane(t), k) == canonicalize(binary_to_plane(u), k)


def test_slide_example():
    d = (1, 3, 0, 3, 0, 2, 0, 0, 0, 0)
    e = up_k_slide(d, 3, 2)
    assert e == (1, 5, 0, 1, 0, 2, 0, 0, 0, 0)
    # node 3 is now the second child of node 1, so sliding back uses h = 2
    assert children_indices(e, 1) == [2, 3, 5, 8, 9]
    assert down_k_slide(e, 1, 2, 2) == d


def test_slides_match_rotations():
    for n in range(7):
        for d in enumerate_plane_trees(n):
            t = plane_to_binary(d)
            for k in range(1, 4):
                via_slides = set(slide_neighbours(d, k))
                via_rotations = {binary_to_plane(apply_rotation(t, s, k)) for s in rotation_sites(t, k)}
                assert via_slides == via_rotations


def test_slide_errors():
    with pytest.raises(PatternMismatchError):
        up_k_slide((2, 0, 0), 0, 1)
    with pytest.raises(PatternMismatchError):
        up_k_slide((2, 0, 0), 1, 1)
    with pytest.raises(PatternMismatchError):
        down_k_slide((2, 0, 0), 0, 2, 1)
    with pytest.raises(PatternMismatchError):
        down_k_slide((3, 0, 0, 0), 0, 1, 3)


def test_parent_indices():
    assert parent_indices((2, 1, 0, 0)) == (None, 0, 1, 0)


def test_minimal_maximal_counts():
    trees4 = list(enumerate_plane_trees(4))
    assert sum(is_k_minimal(d, 2) for d in trees4) == 8
    assert sum(is_k_maximal(d, 2) for d in trees4) == m_general(2, 4) == 9
    for n in range(6):
        assert all(is_k_minimal((n,) + (0,) * n, k) for k in range(1, 5))
        for k in range(n, n + 2):
            if k >= 1:
                assert sum(is_k_maximal(d, k) for d in enumerate_plane_trees(n)) == catalan(n)


def test_canonical_forms_count():
    for n in range(10):
        plane = list(enumerate_plane_trees(n))
        for k in range(1, 6):
            forms = {canonicalize(d, k) for d in plane}
            assert len(forms) == c_modular(k, n)
            for d in plane:
                c = canonicalize(d, k)
                assert canonicalize(c, k) == c
                assert is_k_minimal(c, k)
                assert k_equivalent_multi_degree(c, d, k)


def test_comb_class_size():
    assert canonicalize(binary_to_plane(comb(3)), 2) == (3, 0, 0, 0)
    assert class_size((3, 0, 0, 0), 2) == 2
    assert class_size((4, 0, 0, 0, 0), 2) == 3


def test_k_equivalent_size_mismatch():
    with pytest.raises(ValidationError):
        k_equivalent(comb(2), comb(3), 2)
    with pytest.raises(ValidationError):
        k_equivalent_multi_degree((1, 0), (2, 0, 0), 2)


def test_divisor_refinement():
    # k' | k: k-equivalence implies k'-equivalence
    for n in range(9):
        for d in enumerate_plane_trees(n):
            for k, kp in [(2, 1), (4, 2), (6, 3), (6, 2)]:
                for e in slide_neighbours(d, k):
                    assert canonicalize(e, kp) == canonicalize(d, kp)


def test_components():
    comps = k_components(4, 2)
    assert sorted(c.size for c in comps) == [1, 1, 1, 1, 2, 2, 3, 3]
    assert [c.canonical for c in comps] == sorted(c.canonical for c in comps)
    assert len(k_components(7, 5)) == 420
    one = k_components(5, 1)
    assert len(one) == 1 and one[0].size == catalan(5)
    for n in range(8):
        for k in range(1, 5):
            comps = k_components(n, k, members=True)
            assert sum(c.size for c in comps) == catalan(n)
            for c in comps:
                assert class_size(c.canonical, k) == c.size == len(c.members)


def test_component_json():
    comp = k_components(3, 2, members=True)[-1]
    data = json.loads(json.dumps(comp.to_json()))
    assert data == {"k": 2, "canonical": "3,0,0,0", "size": 2, "members": ["1,2,0,0", "3,0,0,0"]}
    assert "members" not in k_components(3, 2)[0].to_json()


def test_tamari_covers():
    for n in range(1, 7):
        assert len(tamari_covers(comb(n))) == n - 1
        right_comb = plane_to_binary((1,) * n + (0,))
        assert tamari_covers(right_comb) == []
    edges = sum(len(tamari_covers(t)) for t in enumerate_binary_trees(4))
    assert edges == 21


def test_admissible_examples():
    assert admissible_multi_degrees(6, 3) == [
        (4, 1, 1, 0, 0, 0, 0),
        (4, 2, 0, 0, 0, 0, 0),
        (5, 0, 1, 0, 0, 0, 0),
        (5, 1, 0, 0, 0, 0, 0),
        (6, 0, 0, 0, 0, 0, 0),
    ]
    assert admissible_m(6, 3) == 3 and admissible_m(7, 3) == 1
    assert is_k_admissible((0,), 3)
    for n in range(1, 11):
        for k in range(1, 6):
            assert is_k_admissible((n,) + (0,) * n, k)
            assert count_k_admissible(n, k) == catalan(admissible_m(n, k))
            if n <= 8:
                listed = [d for d in enumerate_plane_trees(n) if is_k_admissible(d, k)]
                assert listed == admissible_multi_degrees(n, k)
                assert all(is_k_minimal(d, k) for d in listed)


def test_largest_class_size():
    assert largest_class_size(4, 2) == 3
    for n in range(1, 9):
        assert largest_class_size(n, 1) == catalan(n)
        for k in range(1, 5):
            assert largest_class_size(n, k) == largest_class_size_formula(n, k)


@given(binary_trees(), binary_trees(), binary_trees(), st.integers(1, 4))
def test_equivalence_relation(a, b, c, k):
    assert k_equivalent(a, a, k)
    if len(left_depth(a)) == len(left_depth(b)) == len(left_depth(c)):
        assert k_equivalent(a, b, k) == k_equivalent(b, a, k)
        if k_equivalent(a, b, k) and k_equivalent(b, c, k):
            assert k_equivalent(a, c, k)
