"""Exceptional-group posets of (orbit, class) pairs, read from bundled data.

Each group ships as a small text file::

    group G2
    node G2(a1) orbit=G2(a1) class=1 special=1
    edge G2 A2
    dual 1 G2

Edges run from the upper node to the lower one.  A node's id is its class
label, or its orbit label when the class is trivial.  Labels are opaque
strings; nothing here knows about Bala-Carter theory.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .errors import DatasetUnavailable, DomainError, IntegrityError
from .poset import LabeledPoset
from .verification import SuiteReport

__all__ = [
    "EXCEPTIONAL_GROUPS",
    "EXPECTED_COUNTS",
    "ExceptionalDataset",
    "ExceptionalNode",
    "exceptional_dbar",
    "load_group",
    "load_path",
    "parse_dataset",
    "to_poset",
    "validate_dataset",
]

EXCEPTIONAL_GROUPS = ("G2", "F4", "E6", "E7", "E8")

# (pairs, special pairs)
EXPECTED_COUNTS = {
    "G2": (7, 7),
    "F4": (24, 23),
    "E6": (25, 25),
    "E7": (58, 55),
    "E8": (106, 98),
}


@dataclass(frozen=True)
class ExceptionalNode:
    id: str
    orbit: str
    klass: str
    special: bool

    def __str__(self) -> str:
        return f"({self.orbit},{self.klass})"


@dataclass(frozen=True)
class ExceptionalDataset:
    group: str
    nodes: tuple[ExceptionalNode, ...]
    covers: frozenset  # (upper id, lower id)
    duals: dict

    def node(self, nid: str) -> ExceptionalNode:
        for n in self.nodes:
            if n.id == nid:
                return n
        raise DomainError(f"{self.group} has no node {nid!r}")

    @property
    def ids(self) -> list[str]:
        return [n.id for n in self.nodes]

    @property
    def special_ids(self) -> list[str]:
        return [n.id for n in self.nodes if n.special]

    def above(self, nid: str) -> set[str]:
        """Ids strictly above ``nid``."""
        up: dict[str, list[str]] = {}
        for hi, lo in self.covers:
            up.setdefault(lo, []).append(hi)
        seen: set[str] = set()
        stack = [nid]
        while stack:
            for nxt in up.get(stack.pop(), ()):
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        return seen

    def leq(self, a: str, b: str) -> bool:
        return a == b or b in self.above(a)


def _fields(tokens: list[str], where: str) -> dict[str, str]:
    out = {}
    for tok in tokens:
        key, sep, val = tok.partition("=")
        if not sep:
            raise IntegrityError(f"{where}: expected key=value, got {tok!r}")
        out[key] = val
    return out


def parse_dataset(text: str, source: str = "<string>") -> ExceptionalDataset:
    """Parse the line format; structural problems raise IntegrityError."""
    group = None
    nodes: list[ExceptionalNode] = []
    covers = []
    duals: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        where = f"{source}:{lineno}"
        kind, *rest = line.split()
        if kind == "group" and len(rest) == 1:
            group = rest[0]
        elif kind == "node" and len(rest) == 4:
            f = _fields(rest[1:], where)
            try:
                special = {"0": False, "1": True}[f["special"]]
                nodes.append(ExceptionalNode(rest[0], f["orbit"], f["class"], special))
            except KeyError as exc:
                raise IntegrityError(f"{where}: bad node record ({exc})") from None
        elif kind == "edge" and len(rest) == 2:
            covers.append(tuple(rest))
        elif kind == "dual" and len(rest) == 2:
            a, b = rest
            if duals.get(a, b) != b or duals.get(b, a) != a:
                raise IntegrityError(f"{where}: conflicting dual for {a} or {b}")
            duals[a], duals[b] = b, a
        else:
            raise IntegrityError(f"{where}: cannot parse {raw!r}")
    if group is None:
        raise IntegrityError(f"{source}: missing group record")
    ids = [n.id for n in nodes]
    if len(set(ids)) != len(ids):
        raise IntegrityError(f"{source}: duplicate node ids")
    known = set(ids)
    for a, b in covers + list(duals.items()):
        for x in (a, b):
            if x not in known:
                raise IntegrityError(f"{source}: unknown node {x!r}")
    return ExceptionalDataset(group, tuple(nodes), frozenset(covers), duals)


def validate_dataset(ds: ExceptionalDataset) -> SuiteReport:
    rep = SuiteReport(f"dataset-{ds.group}")
    ids = ds.ids
    above = {nid: ds.above(nid) for nid in ids}

    cyclic = [nid for nid in ids if nid in above[nid]]
    rep.check(not cyclic, "acyclic", [], cyclic)
    if cyclic:
        return rep

    redundant = sorted((hi, lo) for hi, lo in ds.covers
                       if any(hi in above[mid] for mid in above[lo] if mid != hi))
    rep.check(not redundant, "covers form a transitive reduction", [], redundant)

    specials = set(ds.special_ids)
    rep.check(set(ds.duals) == specials, "duals defined exactly on special nodes",
              sorted(specials), sorted(ds.duals))
    inv = all(ds.duals.get(ds.duals.get(a)) == a for a in ds.duals)
    rep.check(inv, "duals is an involution", True, inv)
    flips = []
    for a in specials & set(ds.duals):
        for b in specials & set(ds.duals):
            if (b in above[a]) != (ds.duals[a] in above[ds.duals[b]]):
                flips.append((a, b))
    rep.check(not flips, "duals reverse the order on special nodes", [], sorted(flips)[:5])

    for nid in ids:
        if nid in specials:
            continue
        mins = _minimal_specials_above(ds, nid, above)
        rep.check(len(mins) == 1, f"unique minimal special above {nid}", 1, sorted(mins))

    want = EXPECTED_COUNTS.get(ds.group)
    got = (len(ids), len(specials))
    rep.check(want == got, f"{ds.group} counts (pairs, special)", want, got)
    return rep


def _minimal_specials_above(ds: ExceptionalDataset, nid: str, above=None) -> list[str]:
    above = above or {x: ds.above(x) for x in ds.ids}
    sp = [x for x in above[nid] if ds.node(x).special]
    return [x for x in sp if not any(y != x and x in above[y] for y in sp)]


def _checked(ds: ExceptionalDataset) -> ExceptionalDataset:
    rep = validate_dataset(ds)
    if not rep.passed:
        raise IntegrityError(rep.to_text())
    return ds


def load_path(path: str | Path) -> ExceptionalDataset:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise DatasetUnavailable(f"cannot read {path}: {exc}") from None
    return _checked(parse_dataset(text, str(path)))


@lru_cache(maxsize=None)
def load_group(g: str) -> ExceptionalDataset:
    tag = str(g).strip().upper()
    if tag not in EXCEPTIONAL_GROUPS:
        raise DatasetUnavailable(f"no dataset for group {g!r}")
    res = resources.files(__package__) / "data" / f"{tag.lower()}.txt"
    try:
        text = res.read_text(encoding="utf-8")
    except (FileNotFoundError, OSError):
        raise DatasetUnavailable(f"dataset for {tag} is not shipped") from None
    ds = _checked(parse_dataset(text, f"{tag.lower()}.txt"))
    if ds.group != tag:
        raise IntegrityError(f"{tag.lower()}.txt declares group {ds.group}")
    return ds


def exceptional_dbar(g: str | ExceptionalDataset, node: str) -> str:
    """Dual of a special node, or of the smallest special node above a nonspecial one."""
    ds = g if isinstance(g, ExceptionalDataset) else load_group(g)
    n = ds.node(node)
    if n.special:
        return ds.duals[n.id]
    mins = _minimal_specials_above(ds, n.id)
    if len(mins) != 1:
        raise IntegrityError(f"{ds.group}: {n.id} has {len(mins)} minimal special nodes above it")
    return ds.duals[mins[0]]


def to_poset(ds: ExceptionalDataset) -> LabeledPoset:
    ids = tuple(ds.ids)
    return LabeledPoset(
        title=ds.group,
        labels=ids,
        covers=ds.covers,
        special={n.id: n.special for n in ds.nodes},
        duality={nid: exceptional_dbar(ds, nid) for nid in ids},
        names={n.id: str(n) for n in ds.nodes},
    )
