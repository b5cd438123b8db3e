"""Exception types shared across the package."""


class HypercoverError(Exception):
    """Base class for all package-specific errors."""


class SizeLimit(HypercoverError):
    """An input exceeds a configured combinatorial work bound."""


class NotACover(HypercoverError):
    """A selection that was required to cover the vertex set does not."""


class InvariantViolation(HypercoverError):
    """A constructive algorithm produced output violating its guarantee.

    Raised instead of silently returning a wrong answer: the cover
    constructors double as machine checks of the facts they rely on.
    """


class ParseError(HypercoverError):
    """A hypergraph file could not be parsed."""
