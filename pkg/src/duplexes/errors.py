"""Exception types shared across the package."""


class DuplexError(Exception):
    """Base class for all errors raised by this package."""


class DegreeMismatch(DuplexError):
    """Binary operation applied to elements of incompatible degrees."""


class InvalidDegree(DuplexError):
    """A degree argument outside the domain of the operation (usually < 1)."""


class BoundExceeded(DuplexError):
    """An enumeration or exhaustive scan was asked to go past its resource bound."""


class ArityTooSmall(DuplexError):
    """A tree node was given fewer than two children."""


class ContractLeaf(DuplexError):
    """Edge contraction requested at a position holding a leaf."""


class StubNotSplittable(DuplexError):
    """The leaf placeholder of a binary tree has no root to split or evaluate."""


class AlphabetMismatch(DuplexError):
    """Expressions over different generator alphabets cannot be combined."""


class UnboundGenerator(DuplexError):
    """Evaluation met a generator label with no assigned value."""


class DegreeTooSmall(DuplexError):
    """The operation needs an element of higher degree."""


class ComposeNonzeroConstant(DuplexError):
    """Series substitution requires the inner series to have zero constant term."""


class ParseError(DuplexError):
    """A textual representation could not be parsed."""


class ExprSyntaxError(ParseError):
    """Expression text violates the grammar; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class MixedChainError(ExprSyntaxError):
    """A chain mixes '.' and '*' without parentheses."""


class UnknownGenerator(ExprSyntaxError):
    """An identifier in an expression is not in the declared alphabet."""
