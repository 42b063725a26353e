"""Exception types shared across the package.

The CLI maps these onto process exit codes: parse errors exit 2,
input-contract violations (preconditions, disconnected inputs, empty
edges, size limits, trivial instances, decode failures) exit 3, and
verification mismatches exit 4.
"""

from __future__ import annotations

__all__ = [
    "MetricEnumError",
    "ParseError",
    "PreconditionViolation",
    "DisconnectedError",
    "EmptyEdgeError",
    "SizeLimitError",
    "TrivialInstanceError",
    "DecodeFailure",
    "VerificationError",
]


class MetricEnumError(Exception):
    """Base class for all package-specific errors."""


class ParseError(MetricEnumError):
    """Malformed input text; carries a 1-based line (and column when known)."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        loc = ""
        if line is not None:
            loc = f"line {line}"
            if column is not None:
                loc += f", column {column}"
            loc = f" ({loc})"
        super().__init__(f"{message}{loc}")
        self.line = line
        self.column = column


class PreconditionViolation(MetricEnumError):
    """An operation's stated input assumption does not hold; names the assumption."""


class DisconnectedError(PreconditionViolation):
    """Operation requires a connected graph."""


class EmptyEdgeError(PreconditionViolation):
    """Hypergraph contains an empty edge, making it transversal-free."""


class SizeLimitError(PreconditionViolation):
    """Instance exceeds the configured brute-force/search size gate."""


class TrivialInstanceError(PreconditionViolation):
    """Instance is degenerate for the requested reduction (nothing to reduce)."""


class DecodeFailure(MetricEnumError):
    """A gadget solution violates the structure the construction guarantees.

    Raised only for structural violations, so an upstream enumeration bug
    surfaces loudly instead of being silently skipped.
    """


class VerificationError(MetricEnumError):
    """A cross-check between two independent computation routes disagreed."""
