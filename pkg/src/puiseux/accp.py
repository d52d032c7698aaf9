"""Chain-condition classifier for exponential Puiseux monoids.

For atomic monoids the finite-factorization, bounded-factorization, and
ascending-chain properties coincide, so a single flag is reported. The
decision tree works symbolically on the gap rule: bounded tails are always
negative, geometric tails reduce to one integer comparison, polynomial
tails are eventually negative because their gap ratio tends to 1, and the
log-recurrence family is negative by construction. Negative verdicts come
with constructive strictly-descending divisibility chains; Unknown is a
first-class verdict for anything the exact rules cannot settle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .errors import ChainError, DomainError
from .factorization import Factorization, evaluate
from .membership import is_member, default_support_bound
from .monoid import (AtomicityVerdict, Constant, DeltaSpec, ExpMonoid,
                     Geometric, Periodic, Polynomial, Recurrence,
                     classify_atomicity, s_index)
from .ratio import Ratio, ZERO


@dataclass(frozen=True)
class Classification:
    atomicity: AtomicityVerdict
    accp: str                # "yes" | "no" | "unknown" | "n/a"
    evidence: Dict[str, str] = field(default_factory=dict)


@dataclass(frozen=True)
class WitnessChain:
    start: int
    elements: Tuple[Ratio, ...]          # x_start > x_start+1 > ...
    diffs: Tuple[Factorization, ...]     # x_m = x_{m+1} + value(diffs[m])


def _gap_shortfall_instance(M: ExpMonoid, m: int) -> str:
    n, d = M.r.num, M.r.den
    dm, dm1 = M.delta.delta(m), M.delta.delta(m + 1)
    return f"d^delta_{m}={d ** dm} > n^delta_{m + 1}={n ** dm1}"


def _first_shortfall(M: ExpMonoid, scan: int = 10_000) -> Optional[int]:
    """Least global index m with d^{delta_m} > n^{delta_{m+1}}."""
    n, d = M.r.num, M.r.den
    for m in range(scan):
        if d ** M.delta.delta(m) > n ** M.delta.delta(m + 1):
            return m
    return None


def classify(M: ExpMonoid) -> Classification:
    atom_verdict = classify_atomicity(M)
    n, d = M.r.num, M.r.den
    if d == 1:
        return Classification(atom_verdict, "yes",
                              {"rule": "iso-naturals", "instance": "d(r)=1"})
    if n == 1:
        return Classification(atom_verdict, "n/a",
                              {"rule": "antimatter", "instance": "n(r)=1, d(r)>1"})
    if M.delta.is_finite:
        return Classification(atom_verdict, "yes",
                              {"rule": "finitely-generated",
                               "instance": f"|S|={M.delta.max_exponent_index + 1}"})
    if n > d:
        return Classification(atom_verdict, "yes",
                              {"rule": "r-above-one", "instance": f"r={M.r}>1"})

    # r < 1: the finite prefix never matters (truncation invariance)
    tail = M.delta.tail
    if isinstance(tail, Constant):
        return Classification(atom_verdict, "no",
                              {"rule": "bounded-delta",
                               "instance": f"delta_n={tail.value} eventually"})
    if isinstance(tail, Periodic):
        return Classification(atom_verdict, "no",
                              {"rule": "bounded-delta",
                               "instance": f"delta_n <= {max(tail.pattern)} eventually"})
    if isinstance(tail, Polynomial):
        if tail.degree == 0:
            return Classification(atom_verdict, "no",
                                  {"rule": "bounded-delta",
                                   "instance": f"delta_n={tail.coeffs[0]} eventually"})
        m = _first_shortfall(M)
        if m is None:  # unreachable for a genuine non-constant polynomial
            return Classification(atom_verdict, "unknown",
                                  {"rule": "no-closed-form", "instance": ""})
        return Classification(atom_verdict, "no",
                              {"rule": "polynomial-gaps",
                               "instance": _gap_shortfall_instance(M, m)})
    if isinstance(tail, Geometric):
        c = tail.ratio
        # coprimality of n and d makes d = n^c impossible: always decisive
        if d < n ** c:
            m = len(M.delta.prefix)
            return Classification(atom_verdict, "yes",
                                  {"rule": "gap-growth",
                                   "instance": f"d={d} < n^{c}={n ** c}, so "
                                               f"d^delta_n < n^delta_n+1 for n >= {m}"})
        return Classification(atom_verdict, "no",
                              {"rule": "gap-shortfall",
                               "instance": f"d={d} > n^{c}={n ** c}"})
    if isinstance(tail, Recurrence):
        m = len(M.delta.prefix)
        return Classification(atom_verdict, "no",
                              {"rule": "gap-shortfall",
                               "instance": _gap_shortfall_instance(M, m)})
    return Classification(atom_verdict, "unknown",
                          {"rule": "no-closed-form", "instance": ""})


def check_necessary(M: ExpMonoid) -> Dict[str, object]:
    """Exact form of the necessary bound d(r) <= n(r) * limsup n(r)^{delta_n/s_n}.

    The limsup factor has a closed form per tail family: gap rules with
    delta_n/s_n -> 0 give factor 1; a geometric ratio c gives n^{c-1}; the
    log-recurrence attains the bound with equality. A failing bound rules
    the ACCP out; a holding bound decides nothing by itself.
    """
    n, d = M.r.num, M.r.den
    if n == 1 or d == 1 or n > d:
        raise DomainError("not applicable: needs an atomic monoid with r < 1")
    tail = M.delta.tail
    lhs = f"d(r)={d}"
    if tail is None:
        return {"bound_holds": "unknown", "lhs": lhs,
                "rhs": "finite exponent set: bound not applicable"}
    if isinstance(tail, (Constant, Periodic, Polynomial)):
        # delta_n/s_n -> 0, limsup factor is 1
        return {"bound_holds": d <= n, "lhs": lhs,
                "rhs": f"n(r)*1={n} (delta_n/s_n -> 0)"}
    if isinstance(tail, Geometric):
        c = tail.ratio
        return {"bound_holds": d <= n ** c, "lhs": lhs,
                "rhs": f"n(r)^{c}={n ** c} (delta_n/s_n -> {c - 1})"}
    if isinstance(tail, Recurrence) and tail.a == n and tail.b == d:
        # gap ratios approach log_n(d) from below, so the limsup factor is
        # n^{log_n(d) - 1} and the bound holds with equality: n * n^{R-1} = d
        return {"bound_holds": True, "lhs": lhs,
                "rhs": f"n(r)^log_n(d)={d} (equality: ratio limit attains the bound)"}
    return {"bound_holds": "unknown", "lhs": lhs, "rhs": "no closed form for this rule"}


def series_partial_sums(M: ExpMonoid, terms: int) -> List[Ratio]:
    """Exact partial sums of sum_k (n^{delta_k} - 1) r^{s_k}; diagnostic only."""
    if M.r >= Ratio(1):
        raise DomainError("series diagnostic requires r < 1")
    out: List[Ratio] = []
    total = ZERO
    for k in range(terms):
        term = Ratio(M.r.num ** M.delta.delta(k) - 1) * (M.r ** s_index(M, k))
        total = total + term
        out.append(total)
    return out


def witness_chain(M: ExpMonoid, k: int) -> WitnessChain:
    """A strictly descending divisibility chain of k verified links.

    Built from the identity
        n^{delta_m} r^{s_m} = (d^{delta_m} - n^{delta_{m+1}}) r^{s_{m+1}}
                              + n^{delta_{m+1}} r^{s_{m+1}},
    which needs d^{delta_m} > n^{delta_{m+1}} at every link; the chain is
    anchored at the first index from which that holds k times in a row.
    """
    if k < 1:
        raise DomainError("chain length must be >= 1")
    verdict = classify(M)
    if verdict.accp != "no":
        raise ChainError("no constructive witness available: monoid is not "
                         "certified non-ACCP")
    n, d = M.r.num, M.r.den
    start = None
    scan = len(M.delta.prefix) + 4 * k + 64
    run = 0
    for m in range(scan):
        if d ** M.delta.delta(m) > n ** M.delta.delta(m + 1):
            run += 1
            if run == k:
                start = m - k + 1
                break
        else:
            run = 0
    if start is None:
        raise ChainError("no constructive witness available: the descending "
                         "identity never holds on a long enough run")
    elements = tuple(Ratio(n ** M.delta.delta(m)) * (M.r ** s_index(M, m))
                     for m in range(start, start + k + 1))
    diffs = []
    for offset, m in enumerate(range(start, start + k)):
        coeff = d ** M.delta.delta(m) - n ** M.delta.delta(m + 1)
        y = Factorization.make(M, {m + 1: coeff})
        value = evaluate(y)
        assert value != ZERO
        assert elements[offset] == elements[offset + 1] + value
        diffs.append(y)
    return WitnessChain(start, elements, tuple(diffs))


def construct_counterexample(a: int, b: int, k: int,
                             seed: int = 2) -> Tuple[DeltaSpec, Dict[str, object]]:
    """Gap prefix delta_{j+1} = max{m : a^m < b^{delta_j}} with verification.

    Every step is checked exactly: (i) b^{delta_j} > a^{delta_{j+1}} (the
    descending-chain condition for r = a/b) and (ii) a^{delta_{j+1}+1} >=
    b^{delta_j} (the gap ratio sits within 1/delta_j below log_a b). The
    returned spec continues the recurrence past the explicit prefix.
    """
    if k < 2:
        raise DomainError("k must be >= 2")
    if not (1 < a < b):
        raise DomainError("need 1 < a < b")
    rec = Recurrence(a, b, seed)
    delta = [seed]
    for _ in range(k - 1):
        delta.append(rec.step(delta[-1]))
    checks = []
    for j in range(k - 1):
        lower = b ** delta[j] > a ** delta[j + 1]
        upper = a ** (delta[j + 1] + 1) >= b ** delta[j]
        checks.append({"step": j,
                       "descending": f"{b}^{delta[j]} > {a}^{delta[j + 1]}",
                       "descending_ok": lower,
                       "ratio_close": f"{a}^{delta[j + 1] + 1} >= {b}^{delta[j]}",
                       "ratio_close_ok": upper})
    report: Dict[str, object] = {
        "delta": list(delta),
        "checks": checks,
        "verified": all(c["descending_ok"] and c["ratio_close_ok"] for c in checks),
    }
    r = Ratio(a, b)
    if r.num == 1:
        report["warning"] = (f"r={a}/{b} reduces to {r}: the monoid is "
                            "antimatter, gaps emitted anyway")
    elif (r.num, r.den) != (a, b):
        report["warning"] = f"r={a}/{b} reduces to {r}"
    spec = DeltaSpec(tuple(delta), Recurrence(a, b, rec.step(delta[-1])))
    return spec, report


def empirical_probe(M: ExpMonoid, x: Factorization, depth: int) -> Dict[str, object]:
    """Longest strictly descending divisibility chain found from evaluate(x).

    Depth-first search over subtractions of single atoms, with bounded
    membership checks on each remainder. For ACCP monoids the chain must
    stop short of any requested depth; deterministic given its inputs.
    """
    verdict = classify_atomicity(M)
    if verdict.kind != "atomic":
        raise DomainError("probe requires an atomic monoid")
    if depth < 0:
        raise DomainError("depth must be >= 0")
    start = evaluate(x)
    if start == ZERO:
        return {"chain_length": 0, "chain": [str(start)]}

    limit = M.delta.max_exponent_index
    top = x.top_index + depth + 2
    if limit is not None:
        top = min(top, limit)
    # keep exponents desk-scale: fast-growing gap rules would otherwise
    # produce atoms with astronomically long numerators
    s_cap = s_index(M, x.top_index) + max(64, 4 * depth)
    atoms = []
    for m in range(top + 1):
        if s_index(M, m) > s_cap:
            top = m - 1
            break
        atoms.append(M.r ** s_index(M, m))
    memo: Dict[Tuple[Ratio, int], List[Ratio]] = {}

    def member(v: Ratio) -> bool:
        bound = min(default_support_bound(v, M), top)
        return is_member(v, M, bound).is_member

    def longest(v: Ratio, budget: int) -> List[Ratio]:
        if budget == 0:
            return []
        key = (v, budget)
        if key in memo:
            return memo[key]
        best: List[Ratio] = []
        for a in atoms:
            if not a < v:
                continue
            w = v - a
            if w == ZERO or not member(w):
                continue
            tail = longest(w, budget - 1)
            if 1 + len(tail) > len(best):
                best = [w] + tail
            if len(best) == budget:
                break
        memo[key] = best
        return best

    chain = [start] + longest(start, depth)
    return {"chain_length": len(chain) - 1, "chain": [str(v) for v in chain]}
