import pytest

from modcat import oracle
from modcat.counting import c_modular, catalan, d_intersections, m_general
from modcat.exceptions import OracleBoundError
from modcat.oracle import (
    FAMILIES,
    all_132_avoiders,
    all_binary_trees,
    all_dyck_paths,
    all_plane_trees,
    all_staircase_partitions,
    all_tableaux,
    axis_contacts,
    class_size_histogram,
    classes_by_omega,
    classes_by_rewrite_closure,
    count_family,
    eval_omega,
    root_contacts,
    total_root_contacts,
)
from modcat.rewrite import canonicalize, is_k_admissible
from modcat.trees import binary_to_plane, from_left_depth


def test_omega_example():
    a = from_left_depth((3, 2, 1, 0))
    b = from_left_depth((1, 2, 1, 0))
    assert eval_omega(a, 2).residues == eval_omega(b, 2).residues == (1, 0, 1, 0)
    assert eval_omega(a, 1).residues == (0, 0, 0, 0)
    with pytest.raises(ValueError):
        eval_omega(a, 0)


@pytest.mark.parametrize("n", range(8))
def test_enumerators_have_catalan_size(n):
    assert len(all_binary_trees(n)) == catalan(n)
    assert len(set(all_binary_trees(n))) == catalan(n)
    assert len(list(all_plane_trees(n))) == catalan(n)
    assert len(set(all_dyck_paths(n))) == catalan(n)
    assert len(set(all_staircase_partitions(n))) == catalan(n)
    assert len(set(all_tableaux(n))) == catalan(n)
    assert len(set(all_132_avoiders(n))) == catalan(n)


def test_omega_grouping_matches_table():
    for n in range(11):
        for k in range(1, 9):
            assert len(classes_by_omega(n, k)) == c_modular(k, n)


def test_omega_determines_canonical_form():
    for n in range(8):
        for k in range(1, 5):
            pairs = {(eval_omega(t, k), canonicalize(binary_to_plane(t), k)) for t in all_binary_trees(n)}
            assert len({p[0] for p in pairs}) == len({p[1] for p in pairs}) == len(pairs)


def test_closure():
    comps = classes_by_rewrite_closure(4, 2)
    assert sorted(len(c) for c in comps) == [1, 1, 1, 1, 2, 2, 3, 3]
    for n in range(7):
        assert len(classes_by_rewrite_closure(n, n + 1)) == catalan(n)
        assert {frozenset(c) for c in classes_by_rewrite_closure(n, 2)} == set(classes_by_omega(n, 2))


def test_family_examples():
    assert count_family("dyck-avoids-DU^k", 4, 5) == 41
    assert count_family("partition-c", 2, 3) == 4
    for n in range(1, 8):
        assert count_family("perm-132-and-value-run", 2, n) == 1
    assert len(FAMILIES) == 12
    with pytest.raises(ValueError):
        count_family("nope", 2, 3)


@pytest.mark.parametrize("family", sorted(FAMILIES))
def test_family_counts(family):
    which = FAMILIES[family][2]
    for k in range(1, 5):
        for n in range(7):
            want = m_general(k - 1, n) if which == "M" else c_modular(k, n)
            assert count_family(family, k, n) == want


def test_histogram():
    assert class_size_histogram(4, 2) == {1: 4, 2: 2, 3: 2}
    assert class_size_histogram(5, 1) == {42: 1}
    hist = class_size_histogram(6, 3)
    top = max(hist)
    assert hist[top] == 5
    assert sum(size * mult for size, mult in hist.items()) == catalan(6)
    reps = {
        canonicalize(binary_to_plane(next(iter(c))), 3)
        for c in classes_by_rewrite_closure(6, 3)
        if len(c) == top
    }
    assert all(is_k_admissible(d, 3) for d in reps) and len(reps) == 5


def test_contacts():
    assert axis_contacts("UDUD") == 3
    assert root_contacts("UDUD") == 2
    for n in range(1, 8):
        paths = list(all_dyck_paths(n))
        # over all paths the two statistics have the same total
        assert sum(axis_contacts(p) for p in paths) == sum(root_contacts(p) for p in paths) == catalan(n + 1)
        for k in range(1, 4):
            assert total_root_contacts(k, n) == d_intersections(k, n)


def test_bounds(monkeypatch):
    with pytest.raises(OracleBoundError):
        classes_by_rewrite_closure(10, 2)
    with pytest.raises(OracleBoundError):
        count_family("partition-c", 2, 10)
    monkeypatch.setenv("MODCAT_ORACLE_MAX_N", "3")
    with pytest.raises(OracleBoundError):
        all_binary_trees(4)
    monkeypatch.setenv("MODCAT_ORACLE_MAX_N", "10")
    assert count_family("partition-c", 1, 10) == 1
    assert oracle.CLOSURE_MAX_N == 9


def test_depth_first_contacts():
    assert oracle.depth_first_path((2, 0, 1, 0)) == "UDUUDD"
    assert axis_contacts(oracle.depth_first_path((2, 0, 1, 0))) == 3
    for k in range(1, 4):
        for n in range(1, 8):
            assert oracle.total_axis_contacts(k, n) == d_intersections(k, n)
