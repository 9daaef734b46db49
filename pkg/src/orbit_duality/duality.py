"""The duality maps d_LS, d_BV, d_S and the extended duality ``dbar``.

``dbar`` sends a reduced label of type X to a reduced label of the
Langlands dual type.  Its underlying partition is Sommers' d_S; the marking
is assembled from three pieces (nu_hat, rho and the reduction in between),
all of which are exposed by :func:`dbar_trace`.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, IntegrityError
from .marked import (
    MarkedPartition,
    forbidden_parts,
    is_reduced,
    is_special,
    reduce,
    validate,
)
from .partitions import GroupType, Partition, class_membership, collapse

B, C, D = GroupType.B, GroupType.C, GroupType.D

__all__ = [
    "DbarTrace",
    "canonical_inverse",
    "d_bv",
    "d_ls",
    "d_s",
    "dbar",
    "dbar_trace",
    "dual_group_type",
    "dual_size",
    "nu_hat",
    "partial_specialize",
    "pi_marking",
    "specialize",
]


def dual_group_type(X: GroupType) -> GroupType:
    return GroupType.parse(X).dual


def dual_size(X: GroupType, n: int) -> int:
    """Size of the dual partitions: B n <-> C n-1, D n <-> D n."""
    return {B: n - 1, C: n + 1, D: n}[GroupType.parse(X)]


def _require_type(lam: Partition, X: GroupType) -> tuple[Partition, GroupType]:
    lam, X = Partition(lam), GroupType.parse(X)
    if not class_membership(lam, X):
        raise DomainError(f"{lam} is not a {X}-partition")
    return lam, X


def d_ls(lam: Partition, X: GroupType) -> Partition:
    lam, X = _require_type(lam, X)
    return collapse(lam.transpose(), X)


def _eta_tilde(eta: Partition, X: GroupType) -> Partition:
    if X is B:
        return collapse(eta.minus_bottom(), C).transpose()
    if X is C:
        return collapse(eta.plus_top(), B).transpose()
    return collapse(eta.transpose(), D)


def d_bv(lam: Partition, X: GroupType) -> Partition:
    lam, X = _require_type(lam, X)
    return _eta_tilde(lam, X)


def d_s(mp: MarkedPartition) -> Partition:
    """Sommers' map on a (not necessarily reduced) marked partition."""
    if not validate(mp):
        raise DomainError(f"not a valid marked {mp.group_type}-partition: {mp}")
    X, nu, eta = mp.group_type, mp.nu, mp.eta
    if X is B:
        inner = collapse(eta.minus_bottom(), C)
    elif X is C:
        inner = collapse(eta.plus_top(), B)
    else:
        inner = collapse(eta.transpose(), D).transpose()
    return collapse(nu.union(inner).transpose(), X.dual)


def nu_hat(mp: MarkedPartition) -> Partition:
    lam = mp.lam
    heights = [lam.height(n) - 1 for n in mp.nu]
    if mp.zero_mark:
        h0 = len(lam) + 1 if len(lam) % 2 else len(lam) + 2
        heights.append(h0 - 1)
    return Partition(heights)


def pi_marking(eta: Partition, X: GroupType) -> Partition:
    """Parts of eta* with odd multiplicity: even ones for B, odd ones for C and D."""
    parity = 0 if GroupType.parse(X) is B else 1
    return Partition(a for a, k in Partition(eta).transpose().multiplicities()
                     if k % 2 and a % 2 == parity)


@dataclass(frozen=True)
class DbarTrace:
    source: MarkedPartition
    reduced_source: MarkedPartition
    eta: Partition
    eta_star: Partition
    eta_tilde: Partition
    pi: Partition
    pi_reduced: Partition
    nu_star: Partition
    tau: Partition
    rho_raw: Partition
    rho: Partition
    tau_tilde: Partition
    nu_hat: Partition
    result: MarkedPartition


def dbar_trace(mp: MarkedPartition) -> DbarTrace:
    if not validate(mp):
        raise DomainError(f"not a valid marked {mp.group_type}-partition: {mp}")
    X = mp.group_type
    Y = X.dual
    red = reduce(mp)
    nu, eta = red.nu, red.eta
    eta_t = _eta_tilde(eta, X)
    pi = pi_marking(eta, X)
    pi_red = reduce(eta_t, pi, Y, check=False).nu
    nu_star = nu.transpose()
    tau = nu_star.join(eta_t)
    rho_raw = Partition(tau[eta_t.height(p) - 1] for p in pi_red)
    rho = reduce(tau, rho_raw, Y, check=False).nu
    tau_t = collapse(tau, Y)
    nh = nu_hat(red)
    result = reduce(tau_t, nh.union(rho), Y, check=False)
    return DbarTrace(
        source=mp, reduced_source=red, eta=eta, eta_star=eta.transpose(),
        eta_tilde=eta_t, pi=pi, pi_reduced=pi_red, nu_star=nu_star, tau=tau,
        rho_raw=rho_raw, rho=rho, tau_tilde=tau_t, nu_hat=nh, result=result,
    )


def dbar(mp: MarkedPartition) -> MarkedPartition:
    return dbar_trace(mp).result


def canonical_inverse(lam: Partition, X: GroupType) -> MarkedPartition:
    """Sommers' canonical inverse: <d_BV(lam) | pi from lam*>, reduced."""
    lam, X = _require_type(lam, X)
    return reduce(d_bv(lam, X), pi_marking(lam, X), X.dual)


def partial_specialize(mp: MarkedPartition) -> MarkedPartition:
    """One step of the specialization map s."""
    if not is_reduced(mp):
        raise DomainError(f"partial_specialize needs a reduced label, got {mp.describe()}")
    if is_special(mp):
        return mp
    X, lam, nu = mp.group_type, mp.lam, mp.nu
    a = min(b for b in forbidden_parts(lam, X) if nu.height(b) % 2)
    l = lam.mult(a)
    if l % 2:
        raise IntegrityError(f"offending part {a} of {mp} has odd multiplicity")
    rest = lam.difference([a] * l)
    new = rest.union([a + 1] + [a] * (l - 2) + [a - 1])
    return reduce(new, nu, X)


def specialize(mp: MarkedPartition) -> MarkedPartition:
    """Iterate :func:`partial_specialize` to its fixed point."""
    cur = reduce(mp)
    for _ in range(cur.size + 1):
        nxt = partial_specialize(cur)
        if nxt == cur:
            return cur
        cur = nxt
    raise IntegrityError(f"specialization of {mp.describe()} did not stabilize")
