"""Exception hierarchy shared by the whole package."""


class PuiseuxError(Exception):
    """Base class for every error raised by this package."""


class ParseError(PuiseuxError):
    """Malformed rational, gap-rule, or exponent-set text."""


class DomainError(PuiseuxError):
    """Operation invoked outside its mathematical domain."""


class StepError(DomainError):
    """A rewriting step whose precondition does not hold."""


class IndexRangeError(DomainError):
    """Index beyond the window of a finite gap rule."""


class ChainError(DomainError):
    """No constructive divisibility chain is available."""
