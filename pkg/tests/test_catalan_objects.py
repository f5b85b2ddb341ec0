from itertools import permutations

import pytest

from modcat.catalan_objects import (
    Syt2xN,
    des,
    des_inverse,
    descent_set,
    dyck_avoids_du,
    dyck_avoids_run,
    dyck_to_partition,
    dyck_to_plane,
    dyck_to_syt,
    is_dyck,
    partition_condition_c,
    partition_condition_m,
    partition_length,
    partition_size,
    partition_to_dyck,
    perm_avoids_132,
    perm_avoids_c_pattern,
    perm_avoids_value_run,
    plane_to_dyck,
    syt_condition_c,
    syt_condition_m,
    syt_to_dyck,
    tr,
    tr_inverse,
    validate_dyck,
    validate_partition,
    validate_syt,
)
from modcat.counting import c_modular, catalan, m_general
from modcat.exceptions import ValidationError
from modcat.rewrite import tamari_covers
from modcat.trees import binary_to_plane, comb, enumerate_binary_trees, enumerate_plane_trees

ANCHOR = "UUDUDDUD"


def test_tableau_figure_anchor():
    assert plane_to_dyck((2, 1, 0, 1, 0)) == ANCHOR
    assert dyck_to_plane(ANCHOR) == (2, 1, 0, 1, 0)
    assert dyck_to_partition(ANCHOR) == (3, 1, 0, 0)
    assert partition_to_dyck((3, 1, 0, 0)) == ANCHOR
    assert partition_to_dyck((3, 1), n=4) == ANCHOR
    assert dyck_to_syt(ANCHOR) == Syt2xN((1, 2, 4, 7), (3, 5, 6, 8))
    assert syt_condition_c(dyck_to_syt(ANCHOR), 3)


def test_trivial_paths():
    assert plane_to_dyck((0,)) == ""
    assert dyck_to_partition("UUUDDD") == (0, 0, 0)
    assert dyck_to_syt("UD") == Syt2xN((1,), (2,))
    assert partition_size((3, 1, 0)) == 4
    assert partition_length((3, 1, 0)) == 2


@pytest.mark.parametrize("n", range(8))
def test_round_trips(n):
    paths = set()
    for d in enumerate_plane_trees(n):
        path = plane_to_dyck(d)
        assert is_dyck(path)
        paths.add(path)
        assert dyck_to_plane(path) == d
        assert partition_to_dyck(dyck_to_partition(path), n) == path
        assert syt_to_dyck(dyck_to_syt(path)) == path
    assert len(paths) == catalan(n)


def test_validation_errors():
    with pytest.raises(ValidationError) as info:
        validate_dyck("UDDU")
    assert info.value.index == 2
    with pytest.raises(ValidationError):
        validate_dyck("UUD")
    with pytest.raises(ValidationError):
        validate_dyck("UXD")
    with pytest.raises(ValidationError):
        validate_partition((1, 2), 3)
    with pytest.raises(ValidationError):
        validate_partition((3, 0, 0), 3)
    with pytest.raises(ValidationError):
        validate_syt(Syt2xN((1, 4), (2, 3)))
    with pytest.raises(ValidationError):
        validate_syt(Syt2xN((2, 3), (1, 4)))


def test_tr_example():
    w = (2, 6, 5, 1, 3, 8, 7, 4)
    assert tr_inverse(tr(w)) == (6, 7, 5, 3, 4, 8, 2, 1)
    assert tr((6, 7, 5, 3, 4, 8, 2, 1)) == tr(w)


def test_tr_of_monotone_words():
    # the maximum sits at the root, so increasing words hang everything to the left
    for n in range(1, 7):
        assert tr(range(1, n + 1)) == comb(n)
        assert binary_to_plane(tr(range(n, 0, -1))) == (1,) * n + (0,)


def test_tr_rejects_duplicates():
    with pytest.raises(ValidationError):
        tr((1, 2, 2))


@pytest.mark.parametrize("n", range(1, 8))
def test_tr_inverse_image_is_132_avoiders(n):
    images = {tr_inverse(t) for t in enumerate_binary_trees(n)}
    assert len(images) == catalan(n)
    assert all(perm_avoids_132(w) for w in images)
    assert sum(1 for w in permutations(range(1, n + 1)) if perm_avoids_132(w)) == catalan(n)


def test_des_matches_descent_sets():
    for n in range(1, 7):
        for w in permutations(range(1, n + 1)):
            assert des(tr(w)) == descent_set(w)


def _tamari_up_set(t):
    seen = {t}
    stack = [t]
    while stack:
        for u in tamari_covers(stack.pop()):
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return seen


def test_des_inverse():
    for n in range(1, 7):
        subsets = [frozenset(i for i in range(1, n) if mask >> (i - 1) & 1) for mask in range(2 ** (n - 1))]
        images = {des_inverse(s, n) for s in subsets}
        assert len(images) == 2 ** (n - 1) == c_modular(2, n)
        assert binary_to_plane(des_inverse(frozenset(), n)) == (n,) + (0,) * n
        for s in subsets:
            t = des_inverse(s, n)
            assert des(t) == s
            fibre = [u for u in enumerate_binary_trees(n) if des(u) == s]
            # the image is the Tamari minimum of its fibre
            assert all(u in _tamari_up_set(t) for u in fibre)
    with pytest.raises(ValidationError):
        des_inverse({0}, 3)


def test_des_inverse_is_monotone():
    n = 5
    subsets = [frozenset(i for i in range(1, n) if mask >> (i - 1) & 1) for mask in range(2 ** (n - 1))]
    for r in subsets:
        above = _tamari_up_set(des_inverse(r, n))
        for s in subsets:
            if r < s:
                assert des_inverse(s, n) in above


def test_dyck_predicates():
    assert dyck_avoids_run("UDUDUD", 2)
    assert not dyck_avoids_run("UUDD", 2)
    assert not dyck_avoids_du("UDUUDD", 2)
    paths = [plane_to_dyck(d) for d in enumerate_plane_trees(5)]
    assert sum(dyck_avoids_du(p, 4) for p in paths) == 41
    paths4 = [plane_to_dyck(d) for d in enumerate_plane_trees(4)]
    assert sum(dyck_avoids_run(p, 3) for p in paths4) == 9


def test_permutation_predicates():
    avoiders = [w for w in permutations(range(1, 5)) if perm_avoids_132(w)]
    assert sum(perm_avoids_value_run(w, 3) for w in avoiders) == 9
    assert sum(perm_avoids_c_pattern(w, 3) for w in avoiders) == 13
    assert not perm_avoids_value_run((1, 2, 3, 4), 2)
    assert not perm_avoids_c_pattern((2, 3, 1), 2)
    assert perm_avoids_c_pattern((2, 1, 3), 2)


def _classical_c_pattern_free(w, k):
    # h after all of h+1..h+k, which in turn appear left to right
    pos = {v: i for i, v in enumerate(w)}
    n = len(w)
    for h in range(1, n - k + 1):
        run = [pos[h + j] for j in range(1, k + 1)]
        if run == sorted(run) and pos[h] > run[-1]:
            return False
    return True


def test_value_consecutive_reading_of_c_pattern_fails():
    # recorded for the decisions ledger: this reading overcounts at n = 4, k = 2
    avoiders = [w for w in permutations(range(1, 5)) if perm_avoids_132(w)]
    assert sum(_classical_c_pattern_free(w, 2) for w in avoiders) == 9 != c_modular(2, 4)


def test_permutation_families_small():
    for n in range(7):
        avoiders = [w for w in permutations(range(1, n + 1)) if perm_avoids_132(w)]
        for k in range(1, 5):
            assert sum(perm_avoids_value_run(w, k) for w in avoiders) == m_general(k - 1, n)
            assert sum(perm_avoids_c_pattern(w, k) for w in avoiders) == c_modular(k, n)


def test_syt_and_partition_predicates():
    top_row_first = Syt2xN((1, 2, 3), (4, 5, 6))
    for k in range(1, 5):
        assert syt_condition_c(top_row_first, k)
    assert not syt_condition_m(top_row_first, 3)
    assert partition_condition_c((0, 0, 0), 2)
    assert not partition_condition_m((0, 0, 0), 3)
    assert partition_condition_m((0, 0, 0), 4)
    staircase3 = [dyck_to_partition(plane_to_dyck(d)) for d in enumerate_plane_trees(3)]
    chosen = sorted(p for p in staircase3 if partition_condition_c(p, 2))
    assert chosen == [(0, 0, 0), (1, 0, 0), (2, 0, 0), (2, 1, 0)]
