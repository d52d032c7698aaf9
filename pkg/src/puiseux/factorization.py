"""Factorizations as finite-support coefficient vectors over a monoid's atoms.

Includes the down-rewriting identity, the unique minimum-length normal form,
the deterministic carry sweep that detects the (at most one) maximum-length
factorization, bounded exact enumeration, and length sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Tuple

from .errors import DomainError, StepError
from .monoid import ExpMonoid, Geometric, s_index
from .ratio import Ratio, ZERO


@dataclass(frozen=True)
class Factorization:
    monoid: ExpMonoid
    coeffs: Tuple[Tuple[int, int], ...]  # sorted (index, coeff >= 1) pairs

    @classmethod
    def make(cls, monoid: ExpMonoid, coeffs) -> "Factorization":
        """Build from a dict or iterable of (index, coeff); zeros are dropped."""
        items = coeffs.items() if isinstance(coeffs, dict) else coeffs
        cleaned = {}
        for i, c in items:
            i, c = int(i), int(c)
            if c < 0 or i < 0:
                raise DomainError("coefficients and indices must be nonnegative")
            if c:
                cleaned[i] = cleaned.get(i, 0) + c
        return cls(monoid, tuple(sorted(cleaned.items())))

    def as_dict(self) -> Dict[int, int]:
        return dict(self.coeffs)

    def coeff(self, i: int) -> int:
        return dict(self.coeffs).get(i, 0)

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(i for i, _ in self.coeffs)

    @property
    def top_index(self) -> int:
        return self.coeffs[-1][0] if self.coeffs else 0

    @property
    def length(self) -> int:
        return sum(c for _, c in self.coeffs)

    def as_pairs(self) -> List[List[int]]:
        return [[i, c] for i, c in self.coeffs]


@dataclass(frozen=True)
class MaxLengthOutcome:
    found: Optional[Factorization]
    levels_explored: int

    @property
    def terminated(self) -> bool:
        return self.found is not None


def evaluate(z: Factorization) -> Ratio:
    """The exact value sum c_n * r**s_n; the empty factorization gives 0."""
    total = ZERO
    for i, c in z.coeffs:
        total = total + Ratio(c) * (z.monoid.r ** s_index(z.monoid, i))
    return total


def _require_contracting(M: ExpMonoid, what: str) -> None:
    if M.r >= Ratio(1):
        raise DomainError(f"{what} requires r < 1; use finite enumeration")


def rewrite_down_step(z: Factorization, i: int) -> Factorization:
    """Trade d^{delta_{i-1}} atoms at level i for n^{delta_{i-1}} at level i-1.

    Value is preserved exactly; length strictly decreases when r < 1.
    """
    M = z.monoid
    _require_contracting(M, "down-rewriting")
    if i < 1:
        raise StepError("step index must be >= 1")
    d_pow = M.r.den ** M.delta.delta(i - 1)
    n_pow = M.r.num ** M.delta.delta(i - 1)
    coeffs = z.as_dict()
    if coeffs.get(i, 0) < d_pow:
        raise StepError(f"step not applicable at level {i}: need c_{i} >= {d_pow}")
    coeffs[i] -= d_pow
    coeffs[i - 1] = coeffs.get(i - 1, 0) + n_pow
    out = Factorization.make(M, coeffs)
    assert evaluate(out) == evaluate(z)
    return out


def min_normal_form(z: Factorization) -> Factorization:
    """The unique minimum-length factorization of evaluate(z).

    Applies bulk down-steps at the largest applicable index first until
    c_i < d^{delta_{i-1}} holds at every supported i >= 1.
    """
    M = z.monoid
    _require_contracting(M, "the minimum normal form")
    value = evaluate(z)
    coeffs = z.as_dict()
    changed = True
    while changed:
        changed = False
        for i in sorted(coeffs, reverse=True):
            if i == 0:
                continue
            d_pow = M.r.den ** M.delta.delta(i - 1)
            q, rem = divmod(coeffs[i], d_pow)
            if q:
                n_pow = M.r.num ** M.delta.delta(i - 1)
                if rem:
                    coeffs[i] = rem
                else:
                    del coeffs[i]
                coeffs[i - 1] = coeffs.get(i - 1, 0) + q * n_pow
                changed = True
                break
    out = Factorization.make(M, coeffs)
    assert evaluate(out) == value
    return out


def _sweep_guaranteed(M: ExpMonoid) -> bool:
    # carries strictly shrink when d^{delta_i} < n^{delta_{i+1}} holds on the
    # tail; for geometric tails that is the single comparison d < n^ratio
    t = M.delta.tail
    return isinstance(t, Geometric) and M.r.den < M.r.num ** t.ratio


def max_length_sweep(z: Factorization, level_bound: int = 64) -> MaxLengthOutcome:
    """Deterministic low-to-high carry sweep toward the max-length form.

    At level i the running total t_i is split as q*n^{delta_i} + rem; rem
    stays, q*d^{delta_i} carries to level i+1. Termination (carry hits zero)
    yields the unique maximum-length factorization; otherwise the bound is
    reported honestly. When the tail satisfies the eventual growth condition
    d^{delta_i} < n^{delta_{i+1}} the carry strictly decreases, so the sweep
    runs to its guaranteed end and the bound is ignored.
    """
    M = z.monoid
    _require_contracting(M, "the max-length sweep")
    if level_bound < 1:
        raise DomainError("level bound must be >= 1")
    value = evaluate(z)
    coeffs = z.as_dict()
    n, d = M.r.num, M.r.den
    unbounded = _sweep_guaranteed(M)
    out: Dict[int, int] = {}
    carry = 0
    i = 0
    top = z.top_index
    while carry or i <= top:
        if not unbounded and i > level_bound:
            return MaxLengthOutcome(None, level_bound)
        delta_i = M.delta.delta(i)
        total = coeffs.get(i, 0) + carry
        q, rem = divmod(total, n ** delta_i)
        if rem:
            out[i] = rem
        carry = q * (d ** delta_i)
        if q == 0:
            carry = 0
        i += 1
    w = Factorization.make(M, out)
    assert evaluate(w) == value
    return MaxLengthOutcome(w, i)


def enumerate_all(x: Ratio, M: ExpMonoid, max_index: int,
                  limit: Optional[int] = None) -> List[Factorization]:
    """All factorizations of x with support contained in [0, max_index].

    Exact Diophantine search over the common denominator d^{s_B} with
    per-level caps and residue pruning; the result is canonically sorted.
    For r > 1 choosing max_index at the first n with r^{s_n} > x makes the
    list the complete factorization set of x. A limit stops the search
    after that many factorizations (witness searches pass 1).
    """
    if max_index < 0:
        raise DomainError("max_index must be >= 0")
    if limit is not None and limit < 1:
        raise DomainError("limit must be >= 1")
    window = M.delta.max_exponent_index
    B = max_index if window is None else min(max_index, window)
    if x == ZERO:
        return [Factorization.make(M, {})]
    n, d = M.r.num, M.r.den
    s = [s_index(M, i) for i in range(B + 1)]
    D = d ** s[B]
    if D % x.den != 0:
        return []
    target = x.num * (D // x.den)
    # weight of one atom at level i, in units of 1/D
    w = [n ** s[i] * d ** (s[B] - s[i]) for i in range(B + 1)]
    results: List[Dict[int, int]] = []
    coeffs: Dict[int, int] = {}

    def descend(i: int, rem: int) -> bool:
        # returns True once the result limit is reached
        if i == B:
            q, leftover = divmod(rem, w[B])
            if leftover == 0:
                if q:
                    coeffs[B] = q
                results.append(dict(coeffs))
                coeffs.pop(B, None)
                return limit is not None and len(results) >= limit
            return False
        cap = rem // w[i]
        mod = n ** (s[i + 1] - s[i])
        # completion needs n^{s_{i+1}} | rem - c*w[i]; solve for c mod n^{delta_i}
        rem_red = rem // (n ** s[i])
        d_part = d ** (s[B] - s[i])
        start = (rem_red * pow(d_part, -1, mod)) % mod if mod > 1 else 0
        c = start
        while c <= cap:
            if c:
                coeffs[i] = c
            done = descend(i + 1, rem - c * w[i])
            coeffs.pop(i, None)
            if done:
                return True
            c += mod
        return False
    descend(0, target)
    out = [Factorization.make(M, cc) for cc in results]
    out.sort(key=lambda z: z.coeffs)
    return out


def unique_factorization_check(z: Factorization) -> bool:
    """True when every coefficient is below n(r): then z's value factors uniquely."""
    _require_contracting(z.monoid, "the uniqueness criterion")
    return all(c < z.monoid.r.num for _, c in z.coeffs)


@dataclass(frozen=True)
class LengthSet:
    lengths: Tuple[int, ...]
    min_exact: bool
    max_exact: bool


def length_set(x: Ratio, M: ExpMonoid, max_index: int,
               witness: Optional[Factorization] = None,
               level_bound: int = 64) -> LengthSet:
    """Lengths of the bounded enumeration plus exactness flags.

    min is globally exact whenever a witness exists; max is exact iff the
    carry sweep terminates (r < 1) or the enumeration is complete (r >= 1).
    """
    zs = enumerate_all(x, M, max_index)
    if not zs and witness is None:
        raise DomainError("membership unresolved: no factorization within bound")
    lengths = tuple(sorted({z.length for z in zs}))
    if M.r >= Ratio(1):
        return LengthSet(lengths, True, True)
    w = witness if witness is not None else zs[0]
    outcome = max_length_sweep(w, level_bound)
    return LengthSet(lengths, True, outcome.terminated)
