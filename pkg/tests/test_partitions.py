import pytest
from hypothesis import given, settings, strategies as st

from orbit_duality.errors import DomainError
from orbit_duality.partitions import (
    GroupType,
    Partition,
    chi_split,
    class_membership,
    collapse,
    dominance_leq,
    elementary_move,
    is_special_partition,
    join,
    partitions,
    partitions_of_type,
    superiority,
    transpose,
    union,
)
from orbit_duality.verification import brute_collapse

B, C, D = GroupType.B, GroupType.C, GroupType.D
P = Partition

partition_st = st.lists(st.integers(1, 7), max_size=7).map(Partition)


def test_parse_and_render_round_trip():
    p = Partition.parse("7,5,4^2,3,2^2,1^2")
    assert p == P([7, 5, 4, 4, 3, 2, 2, 1, 1])
    assert str(p) == "[7,5,4^2,3,2^2,1^2]"
    assert Partition.parse(str(p)) == p
    assert Partition.parse("") == P() == Partition.parse("[]")


@pytest.mark.parametrize("text", ["1,2", "3,a", "2^x", "-1"])
def test_parse_rejects(text):
    with pytest.raises(DomainError):
        Partition.parse(text)


@pytest.mark.parametrize("p, want", [
    ([7, 5, 4, 4, 2, 2, 1], [7, 6, 4, 4, 2, 1, 1]),
    ([1, 1, 1], [3]),
    ([3, 1], [2, 1, 1]),
])
def test_transpose(p, want):
    assert transpose(P(p)) == P(want)


@given(partition_st)
def test_transpose_involution(p):
    assert p.transpose().transpose() == p
    assert p.transpose().size == p.size


def test_dominance():
    assert dominance_leq(P([2, 2]), P([3, 1]))
    assert dominance_leq(P([2, 2, 1]), P([3, 1, 1]))
    assert not dominance_leq(P([4, 1, 1]), P([3, 3]))
    assert not dominance_leq(P([3, 3]), P([4, 1, 1]))
    with pytest.raises(DomainError):
        dominance_leq(P([2]), P([1]))


@given(partition_st, partition_st)
def test_dominance_reversed_by_transpose(p, q):
    if p.size == q.size and dominance_leq(p, q):
        assert dominance_leq(q.transpose(), p.transpose())


def test_union_and_join():
    assert union(P([3, 1]), P([2, 1])) == P([3, 2, 1, 1])
    assert join(P([2, 2]), P([1])) == P([3, 2])
    assert join(P([4, 1]), P()) == P([4, 1])


@given(partition_st, partition_st)
def test_join_is_transposed_union(p, q):
    assert join(p, q) == union(p.transpose(), q.transpose()).transpose()


def test_elementary_moves():
    assert elementary_move(P([3, 1]), "plus_top") == P([4, 1])
    assert elementary_move(P([3, 1]), "minus_bottom") == P([3])
    assert elementary_move(P([3, 1]), "minus_column") == P([2, 1])
    assert elementary_move(P([3, 1]), "plus_row") == P([3, 1, 1])
    with pytest.raises(DomainError):
        elementary_move(P([3, 1]), "sideways")
    with pytest.raises(DomainError):
        P().minus_bottom()


def test_chi_split():
    assert chi_split(P([3, 2, 2, 1]), 2) == (P([3, 2]), P([2, 1]))
    assert chi_split(P([3, 1]), 0) == (P(), P([3, 1]))
    assert chi_split(P([3, 1]), 2) == (P([3, 1]), P())


def test_class_membership():
    assert class_membership(P([3, 1, 1]), B)
    assert class_membership(P([4, 2]), C)
    assert not class_membership(P([2, 1]), C)
    assert class_membership(P([3, 1, 1]), "B")


@pytest.mark.parametrize("p, X, want", [
    ([7, 5, 4, 4, 2, 2], C, [6, 6, 4, 4, 2, 2]),
    ([4, 2], D, [3, 3]),
    ([4, 1, 1], D, [3, 1, 1, 1]),
])
def test_collapse_examples(p, X, want):
    assert collapse(P(p), X) == P(want)
    assert brute_collapse(P(p), X) == P(want)


def test_collapse_wrong_parity():
    with pytest.raises(DomainError):
        collapse(P([2, 1]), C)


@settings(max_examples=60)
@given(partition_st, st.sampled_from([B, C, D]))
def test_collapse_matches_brute_force(p, X):
    if (p.size % 2 == 1) != (X is B) or p.size > 14:
        return
    got = collapse(p, X)
    assert class_membership(got, X)
    assert got == brute_collapse(p, X)
    assert collapse(got, X) == got


def test_superiority():
    assert superiority(P([4, 3]), P([3, 1])) == (True, False, True)
    assert superiority(P([4, 4]), P([2])) == (True, True, True)
    assert not superiority(P([2, 2]), P([3])).superior
    with pytest.raises(DomainError):
        superiority(P(), P([1]))


def test_special_partitions():
    assert is_special_partition(P([3, 1, 1]), B)
    assert not is_special_partition(P([2, 2, 1]), B)
    assert not is_special_partition(P([2, 1, 1]), C)
    with pytest.raises(DomainError):
        is_special_partition(P([2, 1]), B)


def test_partition_counts():
    # p(n) for n = 0..10
    assert [sum(1 for _ in partitions(n)) for n in range(11)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    assert len(partitions_of_type(C, 6)) == 8
    assert len(partitions_of_type(B, 5)) == 4
    with pytest.raises(DomainError):
        partitions_of_type(B, 4)
