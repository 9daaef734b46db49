import numpy as np
import pytest

from orbit_duality.duality import dbar
from orbit_duality.errors import DomainError
from orbit_duality.marked import MarkedPartition, is_special
from orbit_duality.partitions import GroupType
from orbit_duality.poset import (
    cover_relation,
    dbar_via_characterization,
    enumerate_labels,
    hasse,
    label_space,
    pair_leq,
    special_set,
)


def test_pair_order(mk):
    assert pair_leq(mk("C", [2, 2, 1, 1]), mk("C", [2, 2, 1, 1], [2]))
    a, b = mk("C", [4, 1, 1]), mk("C", [3, 3])
    assert not pair_leq(a, b) and not pair_leq(b, a)
    zero = mk("C", [1] * 6)
    assert all(pair_leq(zero, x) for x in enumerate_labels("C", 6))
    with pytest.raises(DomainError):
        pair_leq(mk("C", [2]), mk("B", [1]))


@pytest.mark.parametrize("X, n, count", [("B", 5, 5), ("C", 6, 10), ("B", 7, 9)])
def test_label_counts(X, n, count):
    assert len(enumerate_labels(X, n)) == count


def test_enumerate_rejects_wrong_parity():
    with pytest.raises(DomainError):
        enumerate_labels("B", 6)


def test_special_set_c6(mk):
    labels = set(enumerate_labels("C", 6))
    assert special_set("C", 6) == labels - {mk("C", [2, 2, 1, 1], [2])}


def test_special_set_matches_marking_test():
    for X, n in [("B", 9), ("C", 8), ("D", 10)]:
        assert special_set(X, n) == {mp for mp in enumerate_labels(X, n) if is_special(mp)}


def test_matrix_order_matches_pair_leq():
    space = label_space("C", 8)
    for i, a in enumerate(space.labels):
        for j, b in enumerate(space.labels):
            assert space.leq[i, j] == pair_leq(a, b)


def test_cover_relation_of_chain():
    leq = np.triu(np.ones((4, 4), dtype=bool)).T  # i <= j iff i >= j
    cov = cover_relation(leq)
    assert cov.sum() == 3


def test_hasse_b5_is_chain(mk):
    h = hasse("B", 5)
    assert len(h.labels) == 5 and len(h.covers) == 4
    uppers = {u for u, _ in h.covers}
    lowers = {l for _, l in h.covers}
    assert uppers - lowers == {mk("B", [5])}
    assert h.duality[mk("B", [5])] == mk("C", [1] * 4)


def test_characterization_matches_dbar():
    for X, n in [("B", 11), ("C", 10), ("D", 10)]:
        for mp in enumerate_labels(X, n):
            assert dbar_via_characterization(mp) == dbar(mp)
    with pytest.raises(DomainError):
        dbar_via_characterization(MarkedPartition(GroupType.C, (4, 2, 2), (4,)))
