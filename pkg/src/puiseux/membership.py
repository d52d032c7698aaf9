"""Membership and divisibility queries.

Membership is fully decided for r > 1 and for finite exponent windows; for
r < 1 a bounded search either produces an exact witness or reports the bound
it exhausted. Denominator obstructions give definitive negatives: every
element's denominator divides a power of d(r).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional

from .errors import DomainError
from .factorization import Factorization, enumerate_all, min_normal_form
from .monoid import ExpMonoid, s_index
from .ratio import Ratio, ZERO


@dataclass(frozen=True)
class MembershipResult:
    status: str                      # "member" | "not-member" | "unresolved"
    witness: Optional[Factorization] = None
    reason: Optional[str] = None
    bound: Optional[int] = None

    @property
    def is_member(self) -> bool:
        return self.status == "member"


def _foreign_prime(q_den: int, r_den: int) -> bool:
    """True when some prime of q_den does not divide r_den."""
    g = q_den
    while g > 1:
        t = gcd(g, r_den)
        if t == 1:
            return True
        while g % t == 0:
            g //= t
    return False


def default_support_bound(q: Ratio, M: ExpMonoid, slack: int = 3,
                          scan_limit: int = 512) -> int:
    """m + slack for the least m with d(q) | d(r)^{s_m}; slack covers the
    witness sitting a few levels above the denominator-forced one."""
    d = M.r.den
    limit = M.delta.max_exponent_index
    top = scan_limit if limit is None else limit
    for m in range(top + 1):
        if (d ** s_index(M, m)) % q.den == 0:
            return min(m + slack, top)
    return top


def is_member(q: Ratio, M: ExpMonoid, support_bound: Optional[int] = None) -> MembershipResult:
    if q == ZERO:
        return MembershipResult("member", Factorization.make(M, {}))
    if _foreign_prime(q.den, M.r.den):
        return MembershipResult(
            "not-member", reason=f"a prime of d(x)={q.den} does not divide d(r)={M.r.den}")

    finite = M.delta.is_finite
    if M.r >= Ratio(1) or finite:
        # complete enumeration: for r > 1 atoms eventually exceed q, for a
        # finite window the support is bounded outright
        if finite:
            bound = M.delta.max_exponent_index
        elif M.r == Ratio(1):
            bound = 0
        else:
            bound = 0
            while M.r ** s_index(M, bound) <= q:
                bound += 1
        zs = enumerate_all(q, M, bound)
        if zs:
            witness = min(zs, key=lambda z: z.length)
            return MembershipResult("member", witness)
        return MembershipResult(
            "not-member", reason=f"exhausted complete search up to support {bound}")

    bound = support_bound if support_bound is not None else default_support_bound(q, M)
    # one witness suffices: its normal form is the global minimum anyway
    zs = enumerate_all(q, M, bound, limit=1)
    if zs:
        return MembershipResult("member", min_normal_form(zs[0]))
    return MembershipResult("unresolved", bound=bound)


def divides(x: Ratio, y: Ratio, M: ExpMonoid,
            support_bound: Optional[int] = None) -> MembershipResult:
    """Whether x divides y in M, i.e. y - x is a member."""
    if y < x:
        return MembershipResult("not-member", reason="negative difference")
    return is_member(y - x, M, support_bound)
