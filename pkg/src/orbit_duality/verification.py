"""Exhaustive checks of the statements about collapses, labels and dbar.

Each ``check_*`` function walks every instance up to a size bound and
returns a :class:`SuiteReport` listing counterexamples.  Nothing is sampled.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable

import numpy as np

from .duality import (
    canonical_inverse,
    d_bv,
    d_s,
    dbar,
    dual_size,
    partial_specialize,
    specialize,
)
from .errors import DomainError
from .marked import (
    MarkedPartition,
    block_kind,
    equivalent,
    is_reduced,
    is_special,
    iter_divisions,
    join_many,
    marked_partitions,
    reduce,
    reduce_by_intervals,
    sim_complement,
    union_many,
    validate,
)
from .partitions import (
    GroupType,
    Partition,
    class_membership,
    collapse,
    dominance_leq,
    is_special_partition,
    partitions,
    partitions_of_type,
    superiority,
)
from .poset import dbar_via_characterization, label_space, pair_leq

B, C, D = GroupType.B, GroupType.C, GroupType.D

__all__ = [
    "SuiteReport",
    "SUITES",
    "check_axioms",
    "check_blocks",
    "check_collapse_oracle",
    "check_cupvee",
    "check_labels",
    "check_reflection",
    "check_special_alt",
    "check_theorem_po",
    "basic_form_applies",
    "basic_form_counterexamples",
    "run_suite",
    "sizes",
]


@dataclass
class SuiteReport:
    suite_name: str
    instances_checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, what: str, expected, actual) -> None:
        self.instances_checked += 1
        if not ok:
            self.failures.append((what, str(expected), str(actual)))

    def merge(self, other: "SuiteReport") -> "SuiteReport":
        self.instances_checked += other.instances_checked
        self.failures.extend(other.failures)
        return self

    def as_dict(self) -> dict:
        return {
            "suite": self.suite_name,
            "checked": self.instances_checked,
            "passed": self.passed,
            "failures": [dict(zip(("input", "expected", "actual"), f)) for f in sorted(self.failures)],
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2)

    def to_text(self, limit: int = 20) -> str:
        status = "PASS" if self.passed else "FAIL"
        lines = [f"{status} {self.suite_name}: {self.instances_checked} checks, {len(self.failures)} failures"]
        for what, exp, act in sorted(self.failures)[:limit]:
            lines.append(f"  {what}: expected {exp}, got {act}")
        if len(self.failures) > limit:
            lines.append(f"  ... {len(self.failures) - limit} more")
        return "\n".join(lines)


def sizes(X: GroupType, max_n: int, min_n: int = 0) -> range:
    """Sizes with the parity of type ``X`` in ``[min_n, max_n]``."""
    start = min_n + ((min_n % 2) != (X is B))
    return range(start, max_n + 1, 2)


# -- collapse --------------------------------------------------------------


def brute_collapse(p: Partition, X: GroupType) -> Partition:
    """Maximum of the X-partitions dominated by ``p``; raises if not unique."""
    below = [q for q in partitions_of_type(X, p.size) if dominance_leq(q, p)]
    tops = [q for q in below if all(dominance_leq(r, q) for r in below)]
    if len(tops) != 1:
        raise DomainError(f"{len(tops)} maxima below {p} in type {X}")
    return tops[0]


def check_collapse_oracle(max_n: int) -> SuiteReport:
    rep = SuiteReport("collapse")
    for n in range(max_n + 1):
        for p in partitions(n):
            for X in (B, C, D):
                if (n % 2 == 1) != (X is B):
                    continue
                got = collapse(p, X)
                try:
                    want = brute_collapse(p, X)
                except DomainError as exc:
                    rep.check(False, f"{X} {p}", "unique maximum", exc)
                    continue
                rep.check(got == want, f"{X}-collapse {p}", want, got)
                rep.check(len(got) in (len(p), len(p) + 1), f"{X}-collapse length {p}", len(p), len(got))
                if X is C:
                    rep.check(len(got) == len(p), f"C-collapse length {p}", len(p), len(got))
    return rep


# -- collapses of unions and joins -------------------------------------------


def _ops(p: Partition, spec: str) -> Partition:
    """Apply a word such as ``+B-`` (plus_top, B-collapse, minus_column)."""
    for i, ch in enumerate(spec):
        if ch == "+":
            p = p.plus_top() if i == 0 else p.plus_row()
        elif ch == "-":
            p = p.minus_bottom() if i == 0 else p.minus_column()
        else:
            p = collapse(p, GroupType(ch))
    return p


# rows are keyed by the collapsed type; columns by (k odd, p odd)
JOIN_TABLE = {
    "B": {(0, 0): ("+B-", "B"), (0, 1): ("B", "D"), (1, 0): ("+B", "-C"), (1, 1): ("B", "C")},
    "C": {(0, 0): ("C", "C"), (0, 1): ("+C", "-C"), (1, 0): ("C", "D"), (1, 1): ("+C-", "B")},
    "D": {(0, 0): ("D", "D"), (0, 1): ("+D-", "B"), (1, 0): ("D", "C"), (1, 1): ("+D", "-C")},
}
UNION_TABLE = {
    "B": {(0, 0): ("D", "B"), (0, 1): ("-D", "+B"), (1, 0): ("-B", "+D"), (1, 1): ("B", "D")},
    "C": {(0, 0): ("C", "C"), (0, 1): ("-C", "+C"), (1, 0): ("C", "C"), (1, 1): ("-C", "+C")},
    "D": {(0, 0): ("D", "D"), (0, 1): ("-D", "+D"), (1, 0): ("-B", "+B"), (1, 1): ("B", "B")},
}


def _union_ops(p: Partition, spec: str) -> Partition:
    # in unions "+" on the lower piece and "-" on the upper piece act on the
    # largest / smallest part
    for ch in spec:
        if ch == "+":
            p = p.plus_top()
        elif ch == "-":
            p = p.minus_bottom()
        else:
            p = collapse(p, GroupType(ch))
    return p


def check_cupvee(max_total: int, cells: Counter | None = None) -> SuiteReport:
    """Both formula tables on every instance meeting their hypotheses.

    ``cells`` (if given) counts the instances checked per table cell, keyed
    by ("join" or "union", type, k odd, p odd).
    """
    rep = SuiteReport("cupvee")
    rep.cells = cells if cells is not None else Counter()
    pool = [p for n in range(max_total + 1) for p in partitions(n)]
    for first in pool:
        if not first:
            continue
        for second in pool:
            if first.size + second.size > max_total:
                continue
            _check_join_case(rep, first, second)
            _check_union_case(rep, first, second)
    return rep


def _check_join_case(rep: SuiteReport, lp: Partition, lpp: Partition) -> None:
    k, p = lp[0], lp.size
    sup = superiority(lp.transpose(), lpp.transpose()) if lpp else None
    if lpp and not sup.superior:
        return
    lam = lp.join(lpp)
    for X, row in JOIN_TABLE.items():
        if (lam.size % 2 == 1) != (X == "B"):
            continue
        first, second = row[(k % 2, p % 2)]
        if "B" in second and lpp and not sup.oddly:
            continue
        if "D" in second and lpp and not sup.evenly:
            continue
        want = collapse(lam, GroupType(X))
        try:
            got = _ops(lp, first).join(_ops(lpp, second))
        except DomainError as exc:
            rep.check(False, f"join {X} {lp} v {lpp}", want, exc)
            continue
        rep.check(got == want, f"{lam}_{X} = {lp}^{first} v {lpp}^{second}", want, got)
        rep.cells["join", X, k % 2, p % 2] += 1


def _check_union_case(rep: SuiteReport, mp: Partition, mpp: Partition) -> None:
    k, p = len(mp), mp.size
    if mpp and mp[-1] < mpp[0]:
        return
    mu = mp.union(mpp)
    for X, row in UNION_TABLE.items():
        if (mu.size % 2 == 1) != (X == "B"):
            continue
        first, second = row[(k % 2, p % 2)]
        if first.startswith("-") and second.startswith("+"):
            if mp[-1] < mpp.plus_top()[0]:
                continue
        want = collapse(mu, GroupType(X))
        try:
            got = _union_ops(mp, first).union(_union_ops(mpp, second))
        except DomainError as exc:
            rep.check(False, f"union {X} {mp} u {mpp}", want, exc)
            continue
        rep.check(got == want, f"{mu}_{X} = {mp}^{first} u {mpp}^{second}", want, got)
        rep.cells["union", X, k % 2, p % 2] += 1


def check_special_alt(max_n: int) -> SuiteReport:
    """Transpose/collapse identities and the transpose behaviour of special partitions."""
    rep = SuiteReport("special-alt")
    for n in range(1, max_n + 1):
        for lam in partitions(n):
            star = lam.transpose()
            if class_membership(lam, B):
                rep.check(collapse(lam.minus_bottom(), C).transpose() == collapse(star.minus_bottom(), C),
                          f"B {lam}", collapse(star.minus_bottom(), C), collapse(lam.minus_bottom(), C).transpose())
                if is_special_partition(lam, B):
                    ok = class_membership(star, B) and is_special_partition(star, B)
                    rep.check(ok, f"special B {lam}: transpose special B", True, ok)
            if class_membership(lam, C):
                rep.check(collapse(lam.plus_top(), B).transpose() == collapse(star.plus_top(), B),
                          f"C {lam}", collapse(star.plus_top(), B), collapse(lam.plus_top(), B).transpose())
                if is_special_partition(lam, C):
                    ok = class_membership(star, C) and is_special_partition(star, C)
                    rep.check(ok, f"special C {lam}: transpose special C", True, ok)
            if class_membership(lam, D) or class_membership(star, C):
                left = collapse(star, D).transpose()
                right = collapse(lam.plus_top().minus_bottom(), C)
                rep.check(left == right, f"D {lam}", right, left)
            if class_membership(lam, D) and is_special_partition(lam, D):
                ok = class_membership(star, C)
                rep.check(ok, f"special D {lam}: transpose in P_C", True, ok)
    return rep


# -- marked partitions -------------------------------------------------------


def check_labels(X: GroupType, max_n: int) -> SuiteReport:
    """Reduction, the equivalence relation and d_S invariance on all valid markings."""
    X = GroupType.parse(X)
    rep = SuiteReport(f"labels-{X}")
    for n in sizes(X, max_n):
        for lam in partitions_of_type(X, n):
            classes: dict = {}
            for mp in marked_partitions(X, lam):
                red = reduce(mp)
                rep.check(is_reduced(red), f"reduce {mp.describe()} is reduced", True, red)
                rep.check(reduce(red) == red, f"reduce idempotent {mp.describe()}", red, reduce(red))
                rep.check(equivalent(mp, red), f"{mp.describe()} ~ reduce", True, False)
                alt = reduce_by_intervals(mp)
                rep.check(alt == red, f"interval reduction {mp.describe()}", alt, red)
                comp = sim_complement(mp)
                rep.check(validate(comp) and equivalent(mp, comp), f"complement {mp.describe()}", True, comp)
                rep.check(d_s(mp) == d_s(red), f"d_S invariance {mp.describe()}", d_s(red), d_s(mp))
                classes.setdefault(red, []).append(mp)
            # each class holds exactly one reduced label, and classes are closed under ~
            for red, members in classes.items():
                reduced_members = [m for m in members if is_reduced(m)]
                rep.check(reduced_members == [red], f"class of {red.describe()}", [red], reduced_members)
            reps = list(classes)
            for a, b in product(reps, reps):
                if a != b:
                    rep.check(not equivalent(a, b), f"{a.describe()} !~ {b.describe()}", False, True)
    return rep


def check_theorem_po(X: GroupType, max_n: int) -> SuiteReport:
    """For each orbit, distinct reduced labels have distinct d_S values."""
    X = GroupType.parse(X)
    rep = SuiteReport(f"po-{X}")
    for n in sizes(X, max_n):
        space = label_space(X, n)
        for lam, idx in space.by_partition().items():
            values = [space.ds[i] for i in idx]
            rep.check(len(set(values)) == len(values), f"{X} {lam} d_S injective", len(values), len(set(values)))
        leq = space.leq
        antisym = leq & leq.T & ~np.eye(len(leq), dtype=bool)
        rep.check(not antisym.any(), f"{X}{n} antisymmetry", 0, int(antisym.sum()))
        trans = (leq.astype(np.int64) @ leq.astype(np.int64) > 0) & ~leq
        rep.check(not trans.any(), f"{X}{n} transitivity", 0, int(trans.sum()))
    return rep


# -- the duality axioms ------------------------------------------------------


def check_axioms(X: GroupType, max_n: int, min_n: int = 0) -> SuiteReport:
    X = GroupType.parse(X)
    rep = SuiteReport(f"axioms-{X}")
    for n in sizes(X, max_n, min_n):
        _axioms_at(rep, X, n)
    return rep


def _axioms_at(rep: SuiteReport, X: GroupType, n: int) -> None:
    space = label_space(X, n)
    dual = space.dual
    labels = space.labels
    images = space.dbar_values()
    mask = space.special_mask()
    img_idx = []
    for i, mp in enumerate(labels):
        tag = mp.describe()
        r = images[i]
        rep.check(r.lam == space.ds[i], f"projection {tag}", space.ds[i], r.lam)
        rep.check(r.group_type is X.dual and is_reduced(r), f"image reduced {tag}", "reduced label", r.describe())
        rep.check(is_special(r), f"image special {tag}", True, False)
        r2 = dbar(r)
        rep.check(dbar(r2) == r, f"dbar^3 {tag}", r, dbar(r2))
        rep.check(pair_leq(mp, r2), f"dbar^2 >= id {tag}", f">= {mp}", r2)
        e = specialize(mp)
        rep.check(e == r2, f"dbar^2 = e {tag}", r2, e)
        spec = is_special(mp)
        rep.check(bool(mask[i]) == spec, f"N^sp membership {tag}", spec, bool(mask[i]))
        if spec:
            rep.check(r2 == mp, f"dbar^2 identity on special {tag}", mp, r2)
        s = partial_specialize(mp)
        rep.check(d_s(s) == space.ds[i] and dbar(s) == r, f"s preserves dbar {tag}", r, dbar(s))
        if not spec:
            strict = s.lam != mp.lam and dominance_leq(mp.lam, s.lam)
            rep.check(strict, f"s raises orbit {tag}", f"> {mp.lam}", s.lam)
        char = dbar_via_characterization(mp)
        rep.check(char == r, f"characterization {tag}", r, char)
        triv = MarkedPartition(X, mp.lam)
        rep.check(pair_leq(triv, mp), f"trivial class minimal {tag}", True, False)
        img_idx.append(dual.index.get(r))
        if not mp.nu:
            ci = canonical_inverse(mp.lam, X)
            rep.check(ci == r, f"canonical inverse = dbar {tag}", r, ci)
            rep.check(d_s(ci) == mp.lam, f"canonical inverse right inverse {tag}", mp.lam, d_s(ci))
            special_orbit = is_special_partition(mp.lam, X)
            plain = r == MarkedPartition(X.dual, d_bv(mp.lam, X))
            rep.check(special_orbit == plain, f"special orbit iff trivial image {tag}", special_orbit, plain)
        if spec and mp.nu:
            continue
        if not spec:
            mu = space.ds[i]
            back = [dual.labels[k] for k, lab in enumerate(dual.labels) if lab.lam == mu and dual.ds[k] == mp.lam]
            rep.check(not back, f"no preimage for nonspecial {tag}", [], back)

    # order reversal and the image of dbar
    dual_leq = dual.leq
    ok_idx = [k for k in img_idx if k is not None]
    rep.check(len(ok_idx) == len(img_idx), f"{X}{n} images enumerated", len(img_idx), len(ok_idx))
    if len(ok_idx) == len(img_idx):
        img = np.array(img_idx)
        want = space.leq
        got = dual_leq[np.ix_(img, img)].T
        bad = want & ~got
        rep.check(not bad.any(), f"{X}{n} order reversal", 0, int(bad.sum()))
        image = set(img_idx)
        specials = {k for k, lab in enumerate(dual.labels) if is_special(lab)}
        rep.check(image == specials, f"{X}{n} image = dual specials", len(specials), len(image))

    # trivially marked labels carry plain dominance, and s stays below every special upper bound
    triv = [i for i, mp in enumerate(labels) if not mp.nu]
    for a, b in product(triv, triv):
        dom = dominance_leq(labels[a].lam, labels[b].lam)
        rep.check(bool(space.leq[a, b]) == dom, f"inherited order {labels[a]} {labels[b]}", dom, bool(space.leq[a, b]))
    s_idx = [space.index[partial_specialize(mp)] for mp in labels]
    for i in range(len(labels)):
        for j in np.nonzero(space.leq[i] & mask)[0]:
            rep.check(bool(space.leq[s_idx[i], j]), f"s below special {labels[i]} <= {labels[j]}",
                      True, False)


def check_reflection(X: GroupType, n: int) -> SuiteReport:
    """dbar is an order-reversing involution between the two special subposets."""
    X = GroupType.parse(X)
    rep = SuiteReport(f"reflection-{X}{n}")
    space, dual = label_space(X, n), label_space(X.dual, dual_size(X, n))
    sp = [i for i, mp in enumerate(space.labels) if is_special(mp)]
    dsp = {k for k, mp in enumerate(dual.labels) if is_special(mp)}
    images = space.dbar_values()
    img = [dual.index[images[i]] for i in sp]
    rep.check(sorted(img) == sorted(dsp), f"{X}{n} bijection onto dual specials", len(dsp), len(set(img)))
    back = dual.dbar_values()
    for i, k in zip(sp, img):
        rep.check(back[k] == space.labels[i], f"involution {space.labels[i].describe()}", space.labels[i], back[k])
    for (a, ka), (b, kb) in product(zip(sp, img), repeat=2):
        rep.check(bool(space.leq[a, b]) == bool(dual.leq[kb, ka]),
                  f"order reversal {space.labels[a]} vs {space.labels[b]}", True, False)
    return rep


# -- blocks ------------------------------------------------------------------


def _minus_column(mp: MarkedPartition) -> MarkedPartition:
    return MarkedPartition(mp.group_type, mp.lam.minus_column(), mp.nu)


def dbar_from_blocks(blocks: list[MarkedPartition], X: GroupType) -> MarkedPartition:
    images = [dbar(b) for b in blocks]
    if X is C:
        images = [_minus_column(im) for im in images[:-1]] + images[-1:]
    return join_many(images, X.dual)


def dbar2_from_blocks(blocks: list[MarkedPartition], X: GroupType) -> MarkedPartition:
    return union_many([dbar(dbar(b)) for b in blocks], X)


def basic_closed_form(mp: MarkedPartition) -> Partition:
    X, lam = mp.group_type, mp.lam
    if X is B:
        return collapse(lam.minus_bottom().transpose(), C)
    if X is C:
        return collapse(lam.plus_top().transpose(), B)
    return collapse(lam.plus_top().minus_bottom().transpose(), D)


def ultrabasic_closed_form(mp: MarkedPartition) -> MarkedPartition:
    X, lam = mp.group_type, mp.lam
    mu = d_s(mp)
    hpar = 0 if X in (B, D) else 1
    m = next((a for a in mu.distinct() if mu.height(a) % 2 == hpar), 0)
    if X is B:
        under = lam.minus_bottom().transpose()
        marks = [m]
    elif X is C:
        under = lam.plus_top().transpose()
        marks = [m, 1]
    else:
        under = lam.plus_top().minus_bottom().transpose()
        marks = [m, 1]
    if m <= 1:
        marks = []
    return MarkedPartition(X.dual, under, Partition(marks))


def basic_form_applies(mp: MarkedPartition) -> bool:
    """Basic blocks on which the simplified d_S formula is claimed and holds.

    In type C only ultrabasic blocks qualify: peeling a square off a C block
    leaves a D block, so the formula does not propagate to n1 >= 2.
    """
    kind = block_kind(mp)
    if mp.group_type is C:
        return kind == "ultrabasic"
    return kind in ("basic", "ultrabasic")


def basic_form_counterexamples(max_n: int) -> list[tuple[MarkedPartition, Partition, Partition]]:
    """C basic blocks with two genuine marks where the simplified formula fails."""
    out = []
    for n in sizes(C, max_n):
        for mp in label_space(C, n).labels:
            if block_kind(mp) == "basic" and d_s(mp) != basic_closed_form(mp):
                out.append((mp, d_s(mp), basic_closed_form(mp)))
    return out


def check_blocks(max_n: int) -> SuiteReport:
    rep = SuiteReport("blocks")
    for X in (B, C, D):
        for n in sizes(X, max_n):
            for mp in label_space(X, n).labels:
                _blocks_at(rep, mp)
    return rep


def _blocks_at(rep: SuiteReport, mp: MarkedPartition) -> None:
    X = mp.group_type
    tag = mp.describe()
    want = dbar(mp)
    want2 = dbar(want)
    for division in iter_divisions(mp):
        if len(division) == 1:
            continue
        shown = " + ".join(b.describe() for b in division)
        got = dbar_from_blocks(division, X)
        rep.check(got == want, f"blocks dbar {tag} = {shown}", want, got)
        got2 = dbar2_from_blocks(division, X)
        rep.check(got2 == want2, f"blocks dbar^2 {tag} = {shown}", want2, got2)
    kind = block_kind(mp)
    if basic_form_applies(mp):
        closed = basic_closed_form(mp)
        rep.check(d_s(mp) == closed, f"basic d_S {tag}", closed, d_s(mp))
    if kind == "ultrabasic" and is_special(mp):
        closed = ultrabasic_closed_form(mp)
        rep.check(want == closed, f"special ultrabasic {tag}", closed, want)
    _square_blocks_at(rep, mp, want, want2)


def _square_blocks_at(rep: SuiteReport, mp: MarkedPartition, image, image2) -> None:
    X, lam, nu = mp.group_type, mp.lam, mp.nu
    if not lam:
        return
    l = len(lam)
    for a in range(1, lam[-1] + 1):
        if X in (B, D) and a % 2 == 0:
            inner_type, square = X, Partition([l] * a)
        elif X is C and a % 2 == 1 and l % 2 == 0:
            inner_type, square = D, Partition([l + 1] + [l] * (a - 1))
        else:
            continue
        inner = MarkedPartition(inner_type, Partition(p - a for p in lam), Partition(n - a for n in nu))
        tag = f"{mp.describe()} = [{a}^{l}] v {inner.describe()}"
        if not validate(inner):
            # the marks do not split off the square; the hypothesis fails
            continue
        got = union_many([MarkedPartition(X.dual, square), dbar(inner)], X.dual)
        rep.check(got == image, f"square dbar {tag}", image, got)
        got2 = join_many([MarkedPartition(X, Partition([a] * l)), dbar(dbar(inner))], X)
        rep.check(got2 == image2, f"square dbar^2 {tag}", image2, got2)


# -- registry ----------------------------------------------------------------


def _per_type(fn: Callable, name: str) -> Callable[[int], SuiteReport]:
    def run(max_n: int) -> SuiteReport:
        rep = SuiteReport(name)
        for X in (B, C, D):
            rep.merge(fn(X, max_n))
        return rep
    return run


def _reflection_all(max_n: int) -> SuiteReport:
    rep = SuiteReport("reflection")
    for X in (B, C, D):
        for n in sizes(X, max_n):
            rep.merge(check_reflection(X, n))
    return rep


def _cupvee_all(max_n: int) -> SuiteReport:
    rep = check_cupvee(min(max_n, 12))
    return rep.merge(check_special_alt(max_n))


SUITES: dict[str, Callable[[int], SuiteReport]] = {
    "collapse": check_collapse_oracle,
    "cupvee": _cupvee_all,
    "labels": _per_type(check_labels, "labels"),
    "po": _per_type(check_theorem_po, "po"),
    "axioms": _per_type(check_axioms, "axioms"),
    "blocks": check_blocks,
    "reflection": _reflection_all,
}


def run_suite(name: str, max_n: int) -> list[SuiteReport]:
    names: Iterable[str] = SUITES if name == "all" else [name]
    out = []
    for key in names:
        try:
            fn = SUITES[key]
        except KeyError:
            raise DomainError(f"unknown suite {key!r}") from None
        rep = fn(max_n)
        rep.suite_name = key
        out.append(rep)
    return out
