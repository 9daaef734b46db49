"""Partition arithmetic for the classical types B, C and D.

A :class:`Partition` is an immutable, weakly decreasing tuple of positive
integers.  Every operation returns a canonical partition (sorted, no zero
parts), so callers never have to clean up after ``minus_bottom`` and friends.
"""
from __future__ import annotations

import enum
import re
from collections import Counter
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple

from .errors import DomainError

__all__ = [
    "GroupType",
    "Partition",
    "Superiority",
    "class_membership",
    "collapse",
    "chi_split",
    "dominance_leq",
    "elementary_move",
    "is_special_partition",
    "join",
    "partitions",
    "partitions_of_type",
    "superiority",
    "transpose",
    "union",
]


class GroupType(enum.Enum):
    B = "B"
    C = "C"
    D = "D"

    @property
    def epsilon(self) -> int:
        return 1 if self is GroupType.C else 0

    @property
    def dual(self) -> "GroupType":
        return {GroupType.B: GroupType.C, GroupType.C: GroupType.B}.get(self, self)

    @classmethod
    def parse(cls, tag: "str | GroupType") -> "GroupType":
        if isinstance(tag, GroupType):
            return tag
        try:
            return cls(tag.strip().upper())
        except ValueError:
            raise DomainError(f"unknown classical type {tag!r}") from None

    def __str__(self) -> str:
        return self.value


_TOKEN = re.compile(r"^(\d+)(?:\^(\d+))?$")


class Partition(tuple):
    """A weakly decreasing sequence of positive integers.

    The constructor sorts its input and discards zeros, so
    ``Partition([1, 0, 3])`` is ``Partition([3, 1])``.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        if any(p < 0 for p in parts):
            raise DomainError(f"negative part in {parts}")
        return super().__new__(cls, sorted((p for p in parts if p), reverse=True))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Read ``"7,5,4^2,3,2^2,1^2"`` (brackets and whitespace optional)."""
        s = re.sub(r"\s+", "", text)
        if s.startswith("[") and s.endswith("]"):
            s = s[1:-1]
        if s in ("", "0"):
            return cls()
        parts: list[int] = []
        for tok in s.split(","):
            m = _TOKEN.match(tok)
            if m is None:
                raise DomainError(f"bad partition token {tok!r} in {text!r}")
            parts.extend([int(m.group(1))] * int(m.group(2) or 1))
        parts = [p for p in parts if p]
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise DomainError(f"partition {text!r} is not non-increasing")
        return cls(parts)

    def __repr__(self) -> str:
        return f"Partition({list(self)!r})"

    def __str__(self) -> str:
        out = []
        for a, k in self.multiplicities():
            out.append(str(a) if k == 1 else f"{a}^{k}")
        return "[" + ",".join(out) + "]"

    # -- accessors -------------------------------------------------------

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicities(self) -> list[tuple[int, int]]:
        """Distinct parts with their multiplicities, largest first."""
        return sorted(Counter(self).items(), reverse=True)

    def mult(self, a: int) -> int:
        return self.count(a)

    def height(self, a: int) -> int:
        """Number of parts >= a; meaningful for any a, part or not."""
        return sum(1 for p in self if p >= a)

    def partial_sum(self, j: int) -> int:
        return sum(self[:j])

    def distinct(self) -> list[int]:
        return sorted(set(self), reverse=True)

    # -- structural operations ------------------------------------------

    def transpose(self) -> "Partition":
        return _transpose(self)

    def union(self, other: Iterable[int]) -> "Partition":
        return Partition(tuple(self) + tuple(other))

    def join(self, other: "Partition") -> "Partition":
        a, b = list(self), list(other)
        n = max(len(a), len(b))
        a += [0] * (n - len(a))
        b += [0] * (n - len(b))
        return Partition(x + y for x, y in zip(a, b))

    def difference(self, other: Iterable[int]) -> "Partition":
        """Multiset difference; ``other`` must be contained in ``self``."""
        left = Counter(self)
        left.subtract(Counter(other))
        if any(v < 0 for v in left.values()):
            raise DomainError(f"{Partition(other)} is not contained in {self}")
        return Partition(left.elements())

    def plus_top(self) -> "Partition":
        if not self:
            return Partition([1])
        return Partition((self[0] + 1,) + tuple(self[1:]))

    def minus_bottom(self) -> "Partition":
        if not self:
            raise DomainError("cannot decrement the empty partition")
        return Partition(tuple(self[:-1]) + (self[-1] - 1,))

    def plus_row(self) -> "Partition":
        return Partition(tuple(self) + (1,))

    def minus_column(self) -> "Partition":
        if not self:
            raise DomainError("cannot decrement the empty partition")
        return self.transpose().minus_bottom().transpose()

    def chi(self, j: int) -> tuple["Partition", "Partition"]:
        if not 0 <= j <= len(self):
            raise DomainError(f"split index {j} out of range for {self}")
        return Partition(self[:j]), Partition(self[j:])

    # -- classical types ------------------------------------------------

    def is_type(self, X: GroupType) -> bool:
        return class_membership(self, X)

    def collapse(self, X: GroupType) -> "Partition":
        return collapse(self, X)


@lru_cache(maxsize=None)
def _transpose(p: Partition) -> Partition:
    if not p:
        return p
    return Partition(sum(1 for x in p if x > j) for j in range(p[0]))


def transpose(p: Partition) -> Partition:
    return Partition(p).transpose()


def dominance_leq(p: Partition, q: Partition) -> bool:
    """True iff every partial sum of ``p`` is at most that of ``q``."""
    if sum(p) != sum(q):
        raise DomainError(f"cannot compare {Partition(p)} and {Partition(q)}: sizes differ")
    sp = sq = 0
    for j in range(max(len(p), len(q))):
        sp += p[j] if j < len(p) else 0
        sq += q[j] if j < len(q) else 0
        if sp > sq:
            return False
    return True


def union(p: Partition, q: Partition) -> Partition:
    return Partition(p).union(q)


def join(p: Partition, q: Partition) -> Partition:
    return Partition(p).join(Partition(q))


_MOVES = {
    "plus_top": Partition.plus_top,
    "minus_bottom": Partition.minus_bottom,
    "plus_row": Partition.plus_row,
    "minus_column": Partition.minus_column,
}


def elementary_move(p: Partition, kind: str) -> Partition:
    """Apply one of ``plus_top``, ``minus_bottom``, ``plus_row``, ``minus_column``."""
    try:
        move = _MOVES[kind]
    except KeyError:
        raise DomainError(f"unknown move {kind!r}") from None
    return move(Partition(p))


def chi_split(p: Partition, j: int) -> tuple[Partition, Partition]:
    return Partition(p).chi(j)


def class_membership(p: Partition, X: GroupType) -> bool:
    X = GroupType.parse(X)
    n = sum(p)
    if X is GroupType.B and n % 2 == 0:
        return False
    if X is not GroupType.B and n % 2 == 1:
        return False
    # parts of this parity must occur with even multiplicity
    bad = 1 if X is GroupType.C else 0
    return all(k % 2 == 0 for a, k in Counter(p).items() if a % 2 == bad)


def _collapse_defined(n: int, X: GroupType) -> bool:
    return (n % 2 == 1) == (X is GroupType.B)


@lru_cache(maxsize=None)
def _collapse(p: Partition, X: GroupType) -> Partition:
    bad = 1 if X is GroupType.C else 0
    parts = list(p)
    while True:
        counts = Counter(parts)
        offenders = [a for a, k in counts.items() if a and a % 2 == bad and k % 2]
        if not offenders:
            return Partition(parts)
        q = max(offenders)
        i = len(parts) - 1 - parts[::-1].index(q)
        parts[i] -= 1
        parts.append(0)
        j = next(j for j in range(i + 1, len(parts)) if parts[j] < q - 1)
        parts[j] += 1
        parts = [x for x in parts if x]


def collapse(p: Partition, X: GroupType) -> Partition:
    """The largest partition of type ``X`` dominated by ``p``.

    Repeatedly lowers the last copy of the largest offending part and
    raises the first later part that is at least two smaller.
    """
    p, X = Partition(p), GroupType.parse(X)
    if not _collapse_defined(p.size, X):
        raise DomainError(f"{X}-collapse of {p} undefined: wrong parity of |p|={p.size}")
    return _collapse(p, X)


class Superiority(NamedTuple):
    superior: bool
    evenly: bool
    oddly: bool


def superiority(p: Partition, q: Partition) -> Superiority:
    """How ``p`` sits above ``q``: ``min(p) >= m >= max(q)`` for some m of each parity."""
    if not p:
        raise DomainError("superiority needs a nonempty upper partition")
    if not q:
        return Superiority(True, True, True)
    lo, hi = q[0], p[-1]
    if hi < lo:
        return Superiority(False, False, False)
    span = range(lo, hi + 1)
    return Superiority(True, any(m % 2 == 0 for m in span), any(m % 2 == 1 for m in span))


def is_special_partition(p: Partition, X: GroupType) -> bool:
    """Special-orbit test: B even parts odd height, C odd parts even height,
    D even parts even height."""
    X = GroupType.parse(X)
    if not class_membership(p, X):
        raise DomainError(f"{Partition(p)} is not a {X}-partition")
    p = Partition(p)
    if X is GroupType.B:
        return all(p.height(a) % 2 == 1 for a in p.distinct() if a % 2 == 0)
    if X is GroupType.C:
        return all(p.height(a) % 2 == 0 for a in p.distinct() if a % 2 == 1)
    return all(p.height(a) % 2 == 0 for a in p.distinct() if a % 2 == 0)


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield Partition((first,) + tuple(rest))


def partitions_of_type(X: GroupType, n: int) -> tuple[Partition, ...]:
    return _partitions_of_type(GroupType.parse(X), n)


@lru_cache(maxsize=None)
def _partitions_of_type(X: GroupType, n: int) -> tuple[Partition, ...]:
    if not _collapse_defined(n, X) and n:
        raise DomainError(f"no {X}-partitions of {n}: wrong parity")
    return tuple(p for p in partitions(n) if class_membership(p, X))
