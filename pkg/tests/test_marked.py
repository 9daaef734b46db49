import pytest
from hypothesis import given, settings, strategies as st

from orbit_duality.errors import DomainError
from orbit_duality.marked import (
    MarkedPartition,
    block_kind,
    divide_into_blocks,
    equivalent,
    interval_data,
    is_reduced,
    is_special,
    iter_divisions,
    join_marked,
    markable_parts,
    marked_partitions,
    reduce,
    reduce_by_intervals,
    sim_complement,
    union_marked,
    validate,
)
from orbit_duality.partitions import GroupType, Partition, partitions_of_type
from orbit_duality.verification import sizes

P = Partition
EXAMPLE = "[7,5,4^2,3,2^2,1^2]|[3,1]"


def test_parse_label_forms(mk):
    a = MarkedPartition.parse("7,5,4^2,3,2^2,1^2", "B", "3,1")
    assert a == MarkedPartition.parse(EXAMPLE, "B") == mk("B", [7, 5, 4, 4, 3, 2, 2, 1, 1], [3, 1])
    assert str(a) == EXAMPLE
    assert MarkedPartition.parse("[4]|∅", "C") == mk("C", [4])
    c = MarkedPartition.parse("[2^2]|[2]", "C")
    assert c.zero_mark
    assert MarkedPartition.parse("[2^2]|[2,0]", "C") == c


def test_validate(mk):
    assert validate(mk("B", [7, 5, 4, 4, 3, 2, 2, 1, 1], [3, 1]))
    assert not validate(mk("B", [3, 1, 1], [3]))
    assert validate(mk("C", [2, 2], [2]))
    assert not validate(mk("C", [2, 2], [1]))
    assert not validate(mk("D", [3, 3], [2]))


def test_markable_parts():
    assert markable_parts(P([7, 5, 4, 4, 3, 2, 2, 1, 1]), "B") == [7, 3, 1]
    assert markable_parts(P([2, 2]), "C") == [2]
    assert markable_parts(P([3, 3]), "D") == [3]


def test_reduce_example_steps():
    assert reduce(P([8, 7, 5, 4, 2, 2]), P([7, 2]), "C").nu == P([4, 2])
    assert reduce(P([8, 6, 6, 4, 2, 2]), P([8, 4, 4, 2]), "C", check=False).nu == P([4, 2])


def test_reduce_checks_mark_parity():
    with pytest.raises(DomainError):
        reduce(P([3, 1, 1]), P([3]), "B")


def test_interval_data(mk):
    d = interval_data(mk("B", [3, 1, 1], [3, 1]))
    assert d.s1 == (3,) and d.t1(1) == {3}
    assert d.t0(0) == {1}
    d = interval_data(mk("C", [2, 2], [2]))
    assert d.s1 == () and d.t0(0) == {2}
    assert all(not s for s in interval_data(mk("B", [5, 3, 1])).t0_by_interval)


def _all_markings(max_n):
    for X in GroupType:
        for n in sizes(X, max_n):
            for lam in partitions_of_type(X, n):
                yield from marked_partitions(X, lam)


def test_reduction_agrees_with_intervals_and_equivalence():
    for mp in _all_markings(10):
        red = reduce(mp)
        assert is_reduced(red)
        assert reduce(red) == red
        assert equivalent(mp, red)
        assert reduce_by_intervals(mp) == red
        assert equivalent(mp, sim_complement(mp))


def test_one_reduced_label_per_class():
    seen = {}
    for mp in _all_markings(10):
        if is_reduced(mp):
            seen.setdefault((mp.group_type, mp.lam), []).append(mp)
    for labels in seen.values():
        for a in labels:
            for b in labels:
                assert equivalent(a, b) == (a == b)


def test_join_from_worked_example(mk):
    got = join_marked(mk("C", [2, 1, 1]), mk("C", [6, 6, 4, 4, 2, 2], [6, 2]))
    assert got == mk("C", [8, 7, 5, 4, 2, 2], [4, 2])


def test_union(mk):
    assert union_marked(mk("B", [3, 1, 1]), mk("D", [2, 2])) == mk("B", [3, 2, 2, 1, 1])
    a = mk("B", [3, 1, 1], [3, 1])
    assert union_marked(a, mk("D", [])) == a


def test_is_special(mk):
    assert not is_special(mk("C", [2, 2, 1, 1], [2]))
    assert not is_special(mk("B", [3, 2, 2, 1, 1], [3, 1]))
    assert is_special(mk("C", [4, 2], [2]))
    for mp in _all_markings(9):
        if not mp.nu:
            assert is_special(mp)
    with pytest.raises(DomainError):
        is_special(mk("C", [4, 2, 2], [4]))


def test_block_kind(mk):
    assert block_kind(mk("B", [3, 1, 1], [3, 1])) == "ultrabasic"
    assert block_kind(mk("B", [5, 3, 1])) == "trivial"
    assert block_kind(mk("B", [7, 5, 4, 4, 3, 2, 2, 1, 1], [3, 1])) == "neither"
    assert block_kind(mk("C", [2, 2], [2])) == "ultrabasic"
    assert block_kind(mk("C", [4, 4, 2, 2], [4, 2])) == "basic"


def test_divide_into_blocks(mk):
    example = mk("B", [7, 5, 4, 4, 3, 2, 2, 1, 1], [3, 1])
    assert divide_into_blocks(example) == [mk("B", [7]), mk("D", [5, 4, 4, 3, 2, 2, 1, 1], [3, 1])]
    basic = mk("B", [3, 1, 1], [3, 1])
    assert divide_into_blocks(basic) == [basic]
    stair = mk("B", [5, 3, 1])
    assert divide_into_blocks(stair) == [stair]


def test_every_label_divides():
    for mp in _all_markings(12):
        blocks = divide_into_blocks(mp)
        assert all(block_kind(b) != "neither" for b in blocks)
        lam = P(x for b in blocks for x in b.lam)
        nu = P(x for b in blocks for x in b.nu)
        if is_reduced(mp):
            assert (lam, nu) == (mp.lam, mp.nu)
        else:
            assert equivalent(mp, MarkedPartition(mp.group_type, lam, nu))


def test_divisions_respect_block_types(mk):
    for division in iter_divisions(mk("B", [7, 5, 4, 4, 3, 2, 2, 1, 1], [3, 1])):
        assert division[0].group_type is GroupType.B
        assert all(b.group_type is GroupType.D for b in division[1:])


@settings(max_examples=50)
@given(st.sampled_from(list(_all_markings(12))))
def test_reduce_preserves_underlying(mp):
    red = reduce(mp)
    assert red.lam == mp.lam and set(red.nu) <= set(markable_parts(mp.lam, mp.group_type))
