"""Enumeration of reduced labels and the order on (orbit, class) pairs.

A pair ``a`` lies below ``b`` when its orbit is dominated by that of ``b``
while its d_S value dominates that of ``b``.  :class:`LabelSpace` caches
everything needed to compare all labels of one (type, size) at once.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Hashable

import numpy as np

from .duality import d_s, dbar, dual_size
from .errors import DomainError, IntegrityError
from .marked import MarkedPartition, is_special, markable_parts
from .partitions import GroupType, Partition, dominance_leq, partitions_of_type

__all__ = [
    "LabelSpace",
    "LabeledPoset",
    "cover_relation",
    "dbar_via_characterization",
    "enumerate_labels",
    "hasse",
    "label_space",
    "pair_leq",
    "special_set",
]


def _check_parity(X: GroupType, n: int) -> None:
    if n < 0 or (n % 2 == 1) != (X is GroupType.B):
        raise DomainError(f"no {X}-partitions of {n}")


def enumerate_labels(X: GroupType, n: int) -> list[MarkedPartition]:
    """All reduced labels of type ``X`` and size ``n``."""
    X = GroupType.parse(X)
    _check_parity(X, n)
    return list(label_space(X, n).labels)


def pair_leq(a: MarkedPartition, b: MarkedPartition) -> bool:
    if a.group_type is not b.group_type or a.size != b.size:
        raise DomainError(f"cannot compare {a.describe()} with {b.describe()}")
    return dominance_leq(a.lam, b.lam) and dominance_leq(d_s(b), d_s(a))


def _dominance_matrix(parts: list[Partition], n: int) -> np.ndarray:
    """M[i, j] is True iff parts[i] <= parts[j] in dominance order."""
    width = max(n, 1)
    sums = np.zeros((len(parts), width), dtype=np.int64)
    for i, p in enumerate(parts):
        row = np.zeros(width, dtype=np.int64)
        row[: len(p)] = p
        sums[i] = np.cumsum(row)
    return (sums[:, None, :] <= sums[None, :, :]).all(axis=-1)


def cover_relation(leq: np.ndarray) -> np.ndarray:
    """Transitive reduction of a partial order given as a boolean matrix."""
    lt = leq & ~np.eye(len(leq), dtype=bool)
    lti = lt.astype(np.int64)
    return lt & ~((lti @ lti) > 0)


@dataclass
class LabelSpace:
    """All reduced labels of one (type, size), with cached d_S values and order."""

    group_type: GroupType
    n: int
    labels: tuple[MarkedPartition, ...]
    ds: tuple[Partition, ...]
    index: dict = field(repr=False)
    leq: np.ndarray = field(repr=False)

    @property
    def dual(self) -> "LabelSpace":
        return label_space(self.group_type.dual, dual_size(self.group_type, self.n))

    def by_partition(self) -> dict[Partition, list[int]]:
        out: dict[Partition, list[int]] = {}
        for i, mp in enumerate(self.labels):
            out.setdefault(mp.lam, []).append(i)
        return out

    def special_mask(self) -> np.ndarray:
        """Membership in N^sp, decided from d_S values alone."""
        dual = self.dual
        preimages = set()
        for mp, mu in zip(dual.labels, dual.ds):
            preimages.add((mp.lam, mu))
        return np.array([(mu, mp.lam) in preimages for mp, mu in zip(self.labels, self.ds)], dtype=bool)

    def dbar_values(self) -> tuple[MarkedPartition, ...]:
        return _dbar_values(self.group_type, self.n)


def _build(X: GroupType, n: int) -> LabelSpace:
    labels = []
    for lam in partitions_of_type(X, n):
        marks = markable_parts(lam, X)
        for k in range(len(marks) + 1):
            if X is not GroupType.C and k % 2:
                continue
            for nu in combinations(marks, k):
                labels.append(MarkedPartition(X, lam, Partition(nu)))
    ds = [d_s(mp) for mp in labels]
    lam_leq = _dominance_matrix([mp.lam for mp in labels], n)
    ds_leq = _dominance_matrix(ds, dual_size(X, n))
    leq = lam_leq & ds_leq.T
    index = {mp: i for i, mp in enumerate(labels)}
    return LabelSpace(X, n, tuple(labels), tuple(ds), index, leq)


def label_space(X: GroupType, n: int) -> LabelSpace:
    X = GroupType.parse(X)
    _check_parity(X, n)
    return _label_space(X, n)


@lru_cache(maxsize=None)
def _label_space(X: GroupType, n: int) -> LabelSpace:
    return _build(X, n)


@lru_cache(maxsize=None)
def _dbar_values(X: GroupType, n: int) -> tuple[MarkedPartition, ...]:
    return tuple(dbar(mp) for mp in label_space(X, n).labels)


def special_set(X: GroupType, n: int) -> set[MarkedPartition]:
    space = label_space(GroupType.parse(X), n)
    return {mp for mp, s in zip(space.labels, space.special_mask()) if s}


@dataclass(frozen=True)
class LabeledPoset:
    """A finite poset of labels, drawn as a Hasse diagram.

    ``covers`` holds (upper, lower) pairs.  ``names`` maps each label to the
    text used when rendering it.
    """

    title: str
    labels: tuple[Hashable, ...]
    covers: frozenset
    special: dict
    duality: dict
    names: dict

    def name(self, label) -> str:
        return self.names.get(label, str(label))


def hasse(X: GroupType, n: int) -> LabeledPoset:
    X = GroupType.parse(X)
    space = label_space(X, n)
    cov = cover_relation(space.leq)
    labels = space.labels
    covers = frozenset((labels[j], labels[i]) for i, j in zip(*np.nonzero(cov)))
    mask = space.special_mask()
    special = {mp: bool(s) for mp, s in zip(labels, mask)}
    duality = dict(zip(labels, space.dbar_values()))
    names = {mp: str(mp) for mp in labels}
    return LabeledPoset(f"{X}{n}", labels, covers, special, duality, names)


def _characterized(space: LabelSpace) -> list[MarkedPartition]:
    dual = space.dual
    dual_groups = dual.by_partition()
    mask = space.special_mask()

    def on_special(i: int) -> MarkedPartition:
        mp, mu = space.labels[i], space.ds[i]
        hits = [dual.labels[k] for k in dual_groups.get(mu, []) if dual.ds[k] == mp.lam]
        if len(hits) != 1:
            raise IntegrityError(f"{len(hits)} dual labels over {mu} return to {mp.lam}")
        return hits[0]

    out = []
    for i in range(len(space.labels)):
        if mask[i]:
            out.append(on_special(i))
            continue
        above = np.nonzero(space.leq[i] & mask)[0]
        minimal = [j for j in above if not any(k != j and space.leq[k, j] for k in above)]
        if len(minimal) != 1:
            raise IntegrityError(
                f"{space.labels[i].describe()} has {len(minimal)} minimal special labels above it")
        out.append(on_special(minimal[0]))
    return out


@lru_cache(maxsize=None)
def _characterized_cached(X: GroupType, n: int) -> tuple[MarkedPartition, ...]:
    return tuple(_characterized(label_space(X, n)))


def dbar_via_characterization(mp: MarkedPartition) -> MarkedPartition:
    """The extended duality read off from d_S and the order alone."""
    space = label_space(mp.group_type, mp.size)
    try:
        i = space.index[mp]
    except KeyError:
        raise DomainError(f"{mp.describe()} is not a reduced label") from None
    return _characterized_cached(mp.group_type, mp.size)[i]


def special_labels(X: GroupType, n: int) -> list[MarkedPartition]:
    """Reduced labels passing the marking test for specialness."""
    return [mp for mp in label_space(X, n).labels if is_special(mp)]
