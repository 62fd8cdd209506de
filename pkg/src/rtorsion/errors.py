"""Exception types shared across the package."""


class PreconditionError(ValueError):
    """A mathematical precondition of an operation was violated."""


class ParseError(ValueError):
    """A manifold description or job specification could not be parsed."""
