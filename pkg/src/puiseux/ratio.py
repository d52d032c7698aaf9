"""Exact nonnegative rational arithmetic on arbitrary-precision integers.

Values are stored reduced (gcd(num, den) == 1, den >= 1) and are immutable.
Only the nonnegative cone of Q is supported: subtraction below zero raises.
"""

from __future__ import annotations

from math import gcd

from .errors import DomainError, ParseError


class Ratio:
    __slots__ = ("num", "den")

    def __init__(self, num: int, den: int = 1):
        if den == 0:
            raise DomainError("zero denominator")
        if num < 0 or den < 0:
            raise DomainError("negative rational: only Q>=0 is supported")
        g = gcd(num, den)
        if num == 0:
            den = 1
        else:
            num //= g
            den //= g
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("Ratio is immutable")

    # -- construction / formatting -------------------------------------

    @classmethod
    def parse(cls, text: str) -> "Ratio":
        """Parse "p/q" or a bare integer "p"."""
        s = text.strip()
        try:
            if "/" in s:
                p, q = s.split("/")
                return cls(int(p.strip()), int(q.strip()))
            return cls(int(s))
        except (ValueError, DomainError) as exc:
            raise ParseError(f"malformed rational {text!r}: {exc}") from exc

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"

    def __repr__(self) -> str:
        return f"Ratio({self.num}, {self.den})"

    # -- comparisons ---------------------------------------------------

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __lt__(self, other) -> bool:
        other = self._coerce(other)
        return self.num * other.den < other.num * self.den

    def __le__(self, other) -> bool:
        other = self._coerce(other)
        return self.num * other.den <= other.num * self.den

    def __gt__(self, other) -> bool:
        other = self._coerce(other)
        return self.num * other.den > other.num * self.den

    def __ge__(self, other) -> bool:
        other = self._coerce(other)
        return self.num * other.den >= other.num * self.den

    def __bool__(self) -> bool:
        return self.num != 0

    @staticmethod
    def _coerce(value):
        if isinstance(value, Ratio):
            return value
        if isinstance(value, int):
            return Ratio(value)
        return NotImplemented

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other) -> "Ratio":
        other = self._coerce(other)
        return Ratio(self.num * other.den + other.num * self.den,
                     self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other) -> "Ratio":
        other = self._coerce(other)
        num = self.num * other.den - other.num * self.den
        if num < 0:
            raise DomainError("subtraction leaves the nonnegative cone")
        return Ratio(num, self.den * other.den)

    def __mul__(self, other) -> "Ratio":
        other = self._coerce(other)
        return Ratio(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Ratio":
        other = self._coerce(other)
        if other.num == 0:
            raise DomainError("division by zero")
        return Ratio(self.num * other.den, self.den * other.num)

    def __pow__(self, e: int) -> "Ratio":
        if e < 0:
            raise DomainError("negative exponent")
        return Ratio(self.num ** e, self.den ** e)

    # -- helpers -------------------------------------------------------

    def floor(self) -> int:
        return self.num // self.den

    @property
    def is_integer(self) -> bool:
        return self.den == 1


ZERO = Ratio(0)
ONE = Ratio(1)


def make_ratio(p: int, q: int = 1) -> Ratio:
    """Reduced nonnegative rational p/q; q must be >= 1."""
    return Ratio(p, q)


def pow_ratio(r: Ratio, e: int) -> Ratio:
    """Exact r**e for e >= 0."""
    return r ** e


def max_power_dividing(b: int, m: int) -> int:
    """max{k : b^k | m} for b >= 2, m >= 1."""
    if b < 2:
        raise DomainError("base must be >= 2")
    if m < 1:
        raise DomainError("argument must be >= 1")
    k = 0
    while m % b == 0:
        m //= b
        k += 1
    return k
