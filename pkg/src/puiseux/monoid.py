"""Symbolic exponential Puiseux monoids.

A monoid is described by a positive rational base ``r`` and a gap rule for
the strictly increasing exponent sequence s_0 = 0 < s_1 < s_2 < ...; the
gaps delta_n = s_{n+1} - s_n are kept symbolic (finite prefix plus a tail
rule) so tail conditions can be decided exactly instead of sampling a
materialized list.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, Union

from .errors import DomainError, IndexRangeError, ParseError
from .ratio import Ratio


# ---------------------------------------------------------------------------
# Tail rules
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Constant:
    value: int

    def __post_init__(self):
        if self.value < 1:
            raise DomainError("constant gap must be >= 1")

    def delta(self, k: int) -> int:
        return self.value

    def shifted(self, j: int) -> "Constant":
        return self


@dataclass(frozen=True)
class Polynomial:
    """delta at tail position k is p(k) with integer coefficients.

    p must take values >= 1 at every k >= 0: we require a positive leading
    coefficient (or a constant >= 1) and verify the polynomial on the
    window [0, W] where W bounds its real roots, beyond which the dominant
    term keeps it increasing.
    """

    coeffs: tuple  # low-order first

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", coeffs)
        if not coeffs:
            raise DomainError("empty polynomial")
        if coeffs[-1] < 1:
            raise DomainError("leading coefficient must be positive")
        lead = coeffs[-1]
        window = 1 + max(abs(c) for c in coeffs) // lead + 1
        for k in range(window + 1):
            if self.delta(k) < 1:
                raise DomainError(f"polynomial gap p({k}) < 1")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def delta(self, k: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * k + c
        return acc

    def shifted(self, j: int) -> "Polynomial":
        if j == 0:
            return self
        # expand p(x + j) exactly via repeated Taylor shift by one
        coeffs = list(self.coeffs)
        n = len(coeffs)
        for _ in range(j):
            for i in range(n - 1):
                for k in range(n - 2, i - 1, -1):
                    coeffs[k] += coeffs[k + 1]
        return Polynomial(tuple(coeffs))


@dataclass(frozen=True)
class Geometric:
    """delta at tail position k is scale * ratio**k."""

    scale: int
    ratio: int

    def __post_init__(self):
        if self.scale < 1:
            raise DomainError("geometric scale must be >= 1")
        if self.ratio < 2:
            raise DomainError("geometric ratio must be an integer >= 2")

    def delta(self, k: int) -> int:
        return self.scale * self.ratio ** k

    def shifted(self, j: int) -> "Geometric":
        return Geometric(self.scale * self.ratio ** j, self.ratio)


@dataclass(frozen=True)
class Periodic:
    pattern: tuple

    def __post_init__(self):
        pattern = tuple(int(p) for p in self.pattern)
        object.__setattr__(self, "pattern", pattern)
        if not pattern or any(p < 1 for p in pattern):
            raise DomainError("periodic pattern entries must be >= 1")

    def delta(self, k: int) -> int:
        return self.pattern[k % len(self.pattern)]

    def shifted(self, j: int) -> "Periodic":
        j %= len(self.pattern)
        return Periodic(self.pattern[j:] + self.pattern[:j])


@dataclass(frozen=True)
class Recurrence:
    """Gap rule delta_{k+1} = max{m : a^m < b^{delta_k}} seeded at `seed`.

    This is the integer form of the slowly-growing gap construction whose
    ratios approach log_a(b) from below; by definition b**delta_k >
    a**delta_{k+1} at every step.
    """

    a: int
    b: int
    seed: int

    def __post_init__(self):
        if not (1 < self.a < self.b):
            raise DomainError("recurrence needs 1 < a < b")
        if self.seed < 1:
            raise DomainError("recurrence seed must be >= 1")

    def step(self, d: int) -> int:
        target = self.b ** d
        m = 1
        while self.a ** (m + 1) < target:
            m += 1
        return m

    def delta(self, k: int) -> int:
        d = self.seed
        for _ in range(k):
            d = self.step(d)
        return d

    def shifted(self, j: int) -> "Recurrence":
        return Recurrence(self.a, self.b, self.delta(j))


Tail = Union[Constant, Polynomial, Geometric, Periodic, Recurrence]


@dataclass(frozen=True)
class DeltaSpec:
    """Finite explicit prefix of gaps plus an optional symbolic tail.

    ``tail is None`` means the exponent set is the finite one determined by
    the prefix: s_0 .. s_{len(prefix)}.
    """

    prefix: tuple = ()
    tail: Optional[Tail] = None

    def __post_init__(self):
        prefix = tuple(int(d) for d in self.prefix)
        object.__setattr__(self, "prefix", prefix)
        if any(d < 1 for d in prefix):
            raise DomainError("prefix gaps must be >= 1")

    @property
    def is_finite(self) -> bool:
        return self.tail is None

    @property
    def max_exponent_index(self) -> Optional[int]:
        """Largest valid index into s, or None when unbounded."""
        return len(self.prefix) if self.is_finite else None

    def delta(self, n: int) -> int:
        if n < 0:
            raise IndexRangeError("negative gap index")
        if n < len(self.prefix):
            return self.prefix[n]
        if self.tail is None:
            raise IndexRangeError(
                f"gap index {n} beyond finite window of {len(self.prefix)} gaps")
        return self.tail.delta(n - len(self.prefix))

    def drop(self, i: int) -> "DeltaSpec":
        """Spec for the exponent set with the first i gaps removed."""
        if i < 0:
            raise IndexRangeError("negative truncation index")
        if i <= len(self.prefix):
            return DeltaSpec(self.prefix[i:], self.tail)
        if self.tail is None:
            raise IndexRangeError(
                f"cannot drop {i} gaps from a finite window of {len(self.prefix)}")
        return DeltaSpec((), self.tail.shifted(i - len(self.prefix)))


# ---------------------------------------------------------------------------
# The monoid itself
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExpMonoid:
    r: Ratio
    delta: DeltaSpec

    def __post_init__(self):
        if self.r.num == 0:
            raise DomainError("base must be positive")


@dataclass(frozen=True)
class AtomicityVerdict:
    kind: str        # "iso-naturals" | "antimatter" | "atomic"
    atoms: str       # human-readable description of the atom set


def s_index(M: ExpMonoid, n: int) -> int:
    """The n-th exponent s_n = sum of the first n gaps (s_0 = 0)."""
    if n < 0:
        raise IndexRangeError("negative exponent index")
    limit = M.delta.max_exponent_index
    if limit is not None and n > limit:
        raise IndexRangeError(f"exponent index {n} beyond finite window {limit}")
    return sum(M.delta.delta(i) for i in range(n))


def atom(M: ExpMonoid, n: int) -> Ratio:
    """The n-th generator r**s_n, exactly."""
    return M.r ** s_index(M, n)


def classify_atomicity(M: ExpMonoid) -> AtomicityVerdict:
    n, d = M.r.num, M.r.den
    if d == 1:
        return AtomicityVerdict("iso-naturals", "{1}")
    if n == 1:
        return AtomicityVerdict("antimatter", "")
    return AtomicityVerdict("atomic", "{r^s_n : n >= 0}")


def truncate(M: ExpMonoid, i: int) -> ExpMonoid:
    """Monoid over the exponent set shifted down by s_i (first i gaps dropped)."""
    return ExpMonoid(M.r, M.delta.drop(i))


# ---------------------------------------------------------------------------
# Spec grammar:  r=<p>/<q>; delta=[prefix(...);] <tail>
# ---------------------------------------------------------------------------

_CALL = re.compile(r"^([a-z]+)\((.*)\)$")


def _parse_int_args(name: str, body: str) -> list:
    try:
        return [int(tok) for tok in body.split(",") if tok.strip() != ""]
    except ValueError as exc:
        raise ParseError(f"non-integer argument in {name}(...)") from exc


def parse_delta(text: str) -> DeltaSpec:
    s = re.sub(r"\s+", "", text)
    prefix: tuple = ()
    if s.startswith("prefix("):
        close = s.index(")")
        prefix = tuple(_parse_int_args("prefix", s[7:close]))
        rest = s[close + 1:]
        if not rest.startswith(";"):
            raise ParseError("expected ';' after prefix(...)")
        s = rest[1:]
    if s == "finite":
        return _spec(prefix, None)
    m = _CALL.match(s)
    if not m:
        raise ParseError(f"unrecognized gap rule {text!r}")
    name, body = m.group(1), m.group(2)
    args = _parse_int_args(name, body)
    try:
        if name == "const":
            if len(args) != 1:
                raise ParseError("const takes one argument")
            return _spec(prefix, Constant(args[0]))
        if name == "poly":
            return _spec(prefix, Polynomial(tuple(args)))
        if name == "geom":
            if len(args) != 2:
                raise ParseError("geom takes two arguments")
            return _spec(prefix, Geometric(args[0], args[1]))
        if name == "periodic":
            return _spec(prefix, Periodic(tuple(args)))
    except DomainError as exc:
        raise ParseError(str(exc)) from exc
    raise ParseError(f"unknown gap rule {name!r}")


def _spec(prefix, tail):
    try:
        return DeltaSpec(prefix, tail)
    except DomainError as exc:
        raise ParseError(str(exc)) from exc


def parse_monoid(text: str) -> ExpMonoid:
    """Parse the whitespace-insensitive spec grammar, e.g. "r=2/3; delta=geom(1,2)"."""
    s = re.sub(r"\s+", "", text)
    parts = [p for p in s.split(";") if p]
    fields = {}
    rest = []
    for p in parts:
        if p.startswith("r="):
            fields["r"] = p[2:]
        elif p.startswith("delta="):
            rest.append(p[6:])
        else:
            rest.append(p)  # continuation such as the tail after prefix(...);
    if "r" not in fields:
        raise ParseError("missing 'r=' in monoid spec")
    if not rest:
        raise ParseError("missing 'delta=' in monoid spec")
    r = Ratio.parse(fields["r"])
    if r.num == 0:
        raise ParseError("base r must be positive")
    return ExpMonoid(r, parse_delta(";".join(rest)))


def monoid_from_json(doc: dict) -> ExpMonoid:
    """Spec-file form: {"r": "2/3", "delta": {"prefix": [...], "tail": {...}}}."""
    try:
        r = Ratio.parse(str(doc["r"]))
        dd = doc["delta"]
        prefix = tuple(dd.get("prefix", ()))
        tail_doc = dd.get("tail")
        if tail_doc in (None, "finite"):
            tail = None
        else:
            (name, args), = tail_doc.items()
            if name == "const":
                tail = Constant(args if isinstance(args, int) else args[0])
            elif name == "poly":
                tail = Polynomial(tuple(args))
            elif name == "geom":
                tail = Geometric(args[0], args[1])
            elif name == "periodic":
                tail = Periodic(tuple(args))
            else:
                raise ParseError(f"unknown tail rule {name!r}")
        return ExpMonoid(r, DeltaSpec(prefix, tail))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed monoid document: {exc}") from exc
    except DomainError as exc:
        raise ParseError(str(exc)) from exc


def format_delta(spec: DeltaSpec) -> str:
    parts = []
    if spec.prefix:
        parts.append("prefix(" + ",".join(map(str, spec.prefix)) + ")")
    t = spec.tail
    if t is None:
        parts.append("finite")
    elif isinstance(t, Constant):
        parts.append(f"const({t.value})")
    elif isinstance(t, Polynomial):
        parts.append("poly(" + ",".join(map(str, t.coeffs)) + ")")
    elif isinstance(t, Geometric):
        parts.append(f"geom({t.scale},{t.ratio})")
    elif isinstance(t, Periodic):
        parts.append("periodic(" + ",".join(map(str, t.pattern)) + ")")
    elif isinstance(t, Recurrence):
        parts.append(f"recurrence(a={t.a},b={t.b},seed={t.seed})")
    return ";".join(parts)


def format_monoid(M: ExpMonoid) -> str:
    return f"r={M.r}; delta={format_delta(M.delta)}"
