"""Exception types shared across the workbench.

The CLI maps these onto stable exit codes: invalid specs parse as code 2,
axiom violations as 3, resource-cap overruns as 4.
"""


class RingBenchError(Exception):
    """Base class for workbench errors."""


class InvalidSpecError(RingBenchError):
    """A ring, graph, or corpus specification is malformed or out of range."""


class AxiomViolationError(RingBenchError):
    """A constructed addition/multiplication table violates a ring axiom."""

    def __init__(self, message: str, violation=None):
        super().__init__(message)
        self.violation = violation


class ResourceLimitError(RingBenchError):
    """A configured size cap (ring order, ideal count, vertex count) was exceeded."""
