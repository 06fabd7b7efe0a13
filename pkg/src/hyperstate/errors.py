class HypergraphError(ValueError):
    """Semantically invalid input: bad vertex, arity mismatch, and so on."""


class ParseError(ValueError):
    """Input text that does not follow the documented formats."""


class CapacityError(ValueError):
    """Request exceeds the supported qubit or enumeration range."""
