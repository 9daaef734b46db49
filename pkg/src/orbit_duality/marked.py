"""Marked partitions, their reduction, and divisions into blocks.

A marked partition ``<lam|nu>`` is a partition ``lam`` of a classical type
together with a set ``nu`` of distinct parts of ``lam`` that have been marked.
Several markings describe the same conjugacy class in the canonical quotient;
:func:`reduce` picks the canonical one (every mark is a *markable* part).

In type C a marking with an odd number of parts carries an implicit extra
mark at 0, so ``zero_mark`` is derived from ``nu`` rather than stored.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from .errors import DomainError, IntegrityError
from .partitions import GroupType, Partition, class_membership, superiority

__all__ = [
    "IntervalData",
    "MarkedPartition",
    "block_kind",
    "divide_into_blocks",
    "equivalent",
    "forbidden_parts",
    "interval_data",
    "is_reduced",
    "is_special",
    "iter_divisions",
    "join_marked",
    "markable_parts",
    "marked_partitions",
    "reduce",
    "reduce_by_intervals",
    "sim_complement",
    "union_marked",
    "validate",
]


@dataclass(frozen=True)
class MarkedPartition:
    group_type: GroupType
    lam: Partition
    nu: Partition = field(default_factory=Partition)

    def __post_init__(self):
        object.__setattr__(self, "group_type", GroupType.parse(self.group_type))
        object.__setattr__(self, "lam", Partition(self.lam))
        object.__setattr__(self, "nu", Partition(self.nu))

    @classmethod
    def parse(cls, text: str, X: "GroupType | str", mark: str | None = None) -> "MarkedPartition":
        """Read ``"7,5,4^2,3,2^2,1^2|3,1"``; ``mark`` may be given separately.

        A trailing ``,0`` on the marking spells out the type-C zero mark.  It is
        accepted only when it agrees with the parity of the other marks.
        """
        X = GroupType.parse(X)
        lam_text, bar, nu_text = text.partition("|")
        if mark is not None:
            if bar:
                raise DomainError("marking given twice")
            nu_text = mark
        nu_text = nu_text.strip()
        if nu_text in ("∅", "1"):
            nu_text = ""
        raw = nu_text.strip("[] ").replace(" ", "")
        explicit_zero = raw == "0" or raw.endswith(",0")
        if explicit_zero:
            raw = raw[:-2] if raw.endswith(",0") else ""
        mp = cls(X, Partition.parse(lam_text), Partition.parse(raw))
        if explicit_zero and not mp.zero_mark:
            raise DomainError(f"explicit zero mark inconsistent with marking {mp.nu}")
        return mp

    @property
    def zero_mark(self) -> bool:
        return self.group_type is GroupType.C and len(self.nu) % 2 == 1

    @property
    def eta(self) -> Partition:
        return self.lam.difference(self.nu)

    @property
    def size(self) -> int:
        return self.lam.size

    @property
    def is_trivial(self) -> bool:
        return not self.nu

    def __str__(self) -> str:
        return f"{self.lam}|{self.nu}"

    def describe(self) -> str:
        return f"{self.group_type}: {self}"


# -- classification of parts ----------------------------------------------


def markable_parts(lam: Partition, X: GroupType) -> list[int]:
    """Markable parts of ``lam``, largest first.

    B: odd parts of odd height.  C: even parts of even height.
    D: odd parts of even height.
    """
    lam, X = Partition(lam), GroupType.parse(X)
    parity = 0 if X is GroupType.C else 1
    hpar = 1 if X is GroupType.B else 0
    return [a for a in lam.distinct() if a % 2 == parity and lam.height(a) % 2 == hpar]


def forbidden_parts(lam: Partition, X: GroupType) -> list[int]:
    """Parts whose odd height in the marking makes a label nonspecial."""
    lam, X = Partition(lam), GroupType.parse(X)
    parity = 1 if X is GroupType.C else 0
    hpar = 1 if X is GroupType.B else 0
    return [a for a in lam.distinct() if a % 2 == parity and lam.height(a) % 2 == hpar]


def validate(mp: MarkedPartition) -> bool:
    X, lam, nu = mp.group_type, mp.lam, mp.nu
    if not class_membership(lam, X):
        return False
    if len(set(nu)) != len(nu):
        return False
    if any(lam.mult(a) == 0 for a in nu):
        return False
    parity = 0 if X is GroupType.C else 1
    if any(a % 2 != parity for a in nu):
        return False
    if X is not GroupType.C and len(nu) % 2:
        return False
    return True


def _require_valid(mp: MarkedPartition) -> None:
    if not validate(mp):
        raise DomainError(f"not a valid marked {mp.group_type}-partition: {mp}")


def is_reduced(mp: MarkedPartition) -> bool:
    return validate(mp) and set(mp.nu) <= set(markable_parts(mp.lam, mp.group_type))


# -- reduction --------------------------------------------------------------


def _reduce(lam: Partition, nu: Partition, X: GroupType) -> Partition:
    kept = []
    prev = 0
    for m in markable_parts(lam, X):
        h = nu.height(m)
        if (h - prev) % 2:
            kept.append(m)
        prev = h
    return Partition(kept)


def reduce(lam: Partition | MarkedPartition, nu: Partition | None = None,
           X: GroupType | None = None, *, check: bool = True) -> MarkedPartition:
    """Canonical label equivalent to ``<lam|nu>`` in context type ``X``.

    ``lam`` need not be of type ``X`` and ``nu`` may hold non-parts or
    repeated values; heights are generalized heights.  With ``check`` the
    B/D requirement of an even number of marks is enforced.
    """
    if isinstance(lam, MarkedPartition):
        X = lam.group_type if X is None else GroupType.parse(X)
        lam, nu = lam.lam, lam.nu
    else:
        X = GroupType.parse(X)
        lam, nu = Partition(lam), Partition(nu or ())
    if check and X is not GroupType.C and len(nu) % 2:
        raise DomainError(f"odd number of marks {nu} in type {X}")
    return MarkedPartition(X, lam, _reduce(lam, nu, X))


@dataclass(frozen=True)
class IntervalData:
    s1: tuple[int, ...]
    t0_by_interval: tuple[frozenset, ...]
    t1_by_point: tuple[frozenset, ...]

    @property
    def l(self) -> int:
        return len(self.s1)

    def t0(self, m: int) -> frozenset:
        return self.t0_by_interval[m]

    def t1(self, m: int) -> frozenset:
        # indices 1..l; anything else (including l+1) is empty
        if 1 <= m <= self.l:
            return self.t1_by_point[m - 1]
        return frozenset()


def s_sets(lam: Partition, X: GroupType) -> tuple[list[int], list[int]]:
    """(S_0, S_1): parts of the markable parity with even / odd multiplicity."""
    eps = GroupType.parse(X).epsilon
    s0, s1 = [], []
    for a, k in Partition(lam).multiplicities():
        if a % 2 != eps:
            (s1 if k % 2 else s0).append(a)
    return s0, s1


def interval_data(mp: MarkedPartition) -> IntervalData:
    _require_valid(mp)
    X, lam, nu = mp.group_type, mp.lam, mp.nu
    s0, s1 = s_sets(lam, X)
    if X is GroupType.C and len(s1) % 2:
        s1 = s1 + [0]
    j = [0] + sorted(s1)  # j[m] for m = 0..l, ascending
    l = len(s1)
    marks = set(nu) | ({0} if mp.zero_mark else set())
    t0 = marks & set(s0)
    t1 = marks & set(s1)
    intervals = []
    for m in range(l + 1):
        lo = j[m]
        hi = j[m + 1] if m < l else float("inf")
        intervals.append(frozenset(a for a in t0 if lo < a < hi))
    points = tuple(frozenset(t1 & {j[m]}) for m in range(1, l + 1))
    if 0 in t1:
        # the zero mark belongs to the appended point j_1 = 0 only
        points = (frozenset({0}),) + tuple(p - {0} for p in points[1:])
    return IntervalData(tuple(sorted(s1, reverse=True)), tuple(intervals), points)


def _invariants(d: IntervalData, X: GroupType):
    even = tuple(d.t0(m) for m in range(0, d.l + 1, 2))
    odd = []
    for m in range(1, d.l + 1, 2):
        upper = frozenset() if (X is GroupType.B and m == d.l) else d.t1(m + 1)
        odd.append(len(upper | d.t0(m) | d.t1(m)) % 2)
    return even, tuple(odd)


def equivalent(a: MarkedPartition, b: MarkedPartition) -> bool:
    if a.group_type is not b.group_type or a.lam != b.lam:
        raise DomainError(f"cannot compare {a.describe()} with {b.describe()}")
    X = a.group_type
    return _invariants(interval_data(a), X) == _invariants(interval_data(b), X)


def reduce_by_intervals(mp: MarkedPartition) -> MarkedPartition:
    """Reduction through the interval bookkeeping of S_1 (independent of :func:`reduce`)."""
    d = interval_data(mp)
    X = mp.group_type
    j = [0] + sorted(d.s1)
    keep: set[int] = set()
    for m in range(0, d.l + 1, 2):
        keep |= d.t0(m)
    for m in range(1, d.l + 1, 2):
        upper = frozenset() if (X is GroupType.B and m == d.l) else d.t1(m + 1)
        if len(upper | d.t0(m) | d.t1(m)) % 2:
            keep.add(j[m])
    keep.discard(0)
    return MarkedPartition(X, mp.lam, Partition(keep))


def sim_complement(mp: MarkedPartition) -> MarkedPartition:
    """Swap the marked and unmarked parts of S_1 (keeping j_l alone in type B)."""
    _require_valid(mp)
    X, lam, nu = mp.group_type, mp.lam, mp.nu
    s0, s1 = s_sets(lam, X)
    t0 = set(nu) & set(s0)
    t1 = set(nu) & set(s1)
    if X is GroupType.B:
        top = {s1[0]} if s1 else set()
        rest = set(s1) - top
        new = t0 | (rest - t1) | (t1 & top)
    else:
        new = t0 | (set(s1) - t1)
    return MarkedPartition(X, lam, Partition(new))


# -- unions and joins -------------------------------------------------------


def union_marked(a: MarkedPartition, b: MarkedPartition, X: GroupType | None = None) -> MarkedPartition:
    X = a.group_type if X is None else GroupType.parse(X)
    return reduce(a.lam.union(b.lam), a.nu.union(b.nu), X, check=False)


def _join_raw(parts: list[MarkedPartition]) -> tuple[Partition, Partition]:
    lam = Partition()
    for p in parts:
        lam = lam.join(p.lam)
    omega = []
    for p in parts:
        for n in p.nu:
            h = p.lam.height(n)
            if not 1 <= h <= len(lam):
                raise DomainError(f"mark {n} of {p} has no position in the join {lam}")
            omega.append(lam[h - 1])
    return lam, Partition(omega)


def join_marked(a: MarkedPartition, b: MarkedPartition, X: GroupType | None = None) -> MarkedPartition:
    """Join that keeps each mark at its height, followed by reduction in ``X``."""
    X = a.group_type if X is None else GroupType.parse(X)
    lam, omega = _join_raw([a, b])
    return reduce(lam, omega, X, check=False)


def join_many(parts: list[MarkedPartition], X: GroupType) -> MarkedPartition:
    lam, omega = _join_raw(parts)
    return reduce(lam, omega, X, check=False)


def union_many(parts: list[MarkedPartition], X: GroupType) -> MarkedPartition:
    lam, nu = Partition(), Partition()
    for p in parts:
        lam, nu = lam.union(p.lam), nu.union(p.nu)
    return reduce(lam, nu, X, check=False)


# -- special labels and blocks ----------------------------------------------


def is_special(mp: MarkedPartition) -> bool:
    if not is_reduced(mp):
        raise DomainError(f"is_special needs a reduced label, got {mp.describe()}")
    return all(mp.nu.height(a) % 2 == 0 for a in forbidden_parts(mp.lam, mp.group_type))


def block_kind(mp: MarkedPartition) -> str:
    """One of ``trivial``, ``basic``, ``ultrabasic`` or ``neither``."""
    X, lam, nu = mp.group_type, mp.lam, mp.nu
    if not nu:
        return "trivial"
    if len(nu) == 2:
        n2, n1 = nu
        if n1 != lam[-1]:
            return "neither"
    elif len(nu) == 1 and X is GroupType.C:
        n2, n1 = nu[0], 0
    else:
        return "neither"
    hpar = 1 if X is GroupType.B else 0
    top = next((a for a in lam.distinct() if lam.height(a) % 2 == hpar), None)
    if n2 != top:
        return "neither"
    return "ultrabasic" if n1 <= 1 else "basic"


def _block_type(X: GroupType, index: int) -> GroupType:
    if X is GroupType.B and index > 0:
        return GroupType.D
    return X


def _cut_ok(X: GroupType, upper: Partition, lower: Partition) -> bool:
    sup = superiority(upper, lower)
    return sup.oddly if X is GroupType.C else sup.evenly


def _block_ok(X: GroupType, block: MarkedPartition, last: bool) -> bool:
    if not validate(block):
        return False
    if X is GroupType.C and not last:
        return len(block.lam) % 2 == 0 and len(block.nu) % 2 == 0
    return True


def _make_block(X: GroupType, index: int, parts: tuple, marks: set) -> MarkedPartition:
    lam = Partition(parts)
    return MarkedPartition(_block_type(X, index), lam, Partition(sorted(marks & set(lam))))


def _divisions(mp: MarkedPartition, accept) -> Iterator[list[MarkedPartition]]:
    X = mp.group_type
    parts = tuple(mp.lam)
    marks = set(mp.nu)

    def rec(start: int, index: int, remaining: set):
        for end in range(start + 1, len(parts) + 1):
            if end < len(parts) and not _cut_ok(X, Partition(parts[start:end]), Partition(parts[end:])):
                continue
            block = _make_block(X, index, parts[start:end], remaining)
            last = end == len(parts)
            if not _block_ok(X, block, last) or not accept(block):
                continue
            if last:
                yield [block]
            else:
                for tail in rec(end, index + 1, remaining - set(block.nu)):
                    yield [block] + tail

    if not parts:
        yield [mp]
        return
    yield from rec(0, 0, marks)


def iter_divisions(mp: MarkedPartition) -> Iterator[list[MarkedPartition]]:
    """Every division of ``mp`` into blocks, as consecutive runs of its parts."""
    _require_valid(mp)
    return _divisions(mp, lambda block: True)


def divide_into_blocks(mp: MarkedPartition) -> list[MarkedPartition]:
    """Deterministic division whose blocks are all trivial or basic.

    A trivial or basic ``mp`` is its own division.  Otherwise blocks are
    tried shortest first with backtracking.  Marks on unmarkable parts can
    block every division; such input is divided through its reduced
    equivalent, which has the same d_S and dbar.
    """
    _require_valid(mp)
    good = lambda block: block_kind(block) != "neither"
    if good(mp):
        return [mp]
    for division in _divisions(mp, good):
        return division
    red = reduce(mp)
    if red != mp:
        return divide_into_blocks(red)
    raise IntegrityError(f"no division into trivial/basic blocks for {mp.describe()}")


def marked_partitions(X: GroupType, lam: Partition) -> Iterator[MarkedPartition]:
    """All valid (not necessarily reduced) markings of ``lam``."""
    lam, X = Partition(lam), GroupType.parse(X)
    parity = 0 if X is GroupType.C else 1
    cands = [a for a in lam.distinct() if a % 2 == parity]
    for k in range(len(cands) + 1):
        if X is not GroupType.C and k % 2:
            continue
        for nu in combinations(cands, k):
            yield MarkedPartition(X, lam, Partition(nu))
