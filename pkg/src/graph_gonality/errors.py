"""Exception hierarchy for graph-gonality."""


class GonalityError(ValueError):
    """Base class for every error raised by this package."""


class InvalidGraphError(GonalityError):
    """A graph violates a structural invariant."""

    def __init__(self, violations: list[str]) -> None:
        self.violations = list(violations)
        super().__init__("invalid graph: " + "; ".join(self.violations))


class UnknownVertexError(GonalityError):
    """A vertex, edge or leg identifier does not belong to the graph."""


class PreconditionError(GonalityError):
    """An operation was called outside its documented domain."""


class EnumerationCapError(GonalityError):
    """Enumerating divisor classes would exceed the configured cap."""


class DegreeCapError(GonalityError):
    """The Hurwitz solver was asked for a degree above the configured cap."""


class MorphismError(GonalityError):
    """An indexed morphism is structurally invalid."""


class CertificateDisagreement(GonalityError):
    """Two independent decision procedures returned different answers."""


class InputError(GonalityError):
    """Malformed input data, with the location of the problem."""

    def __init__(self, message: str, location: str = "$") -> None:
        self.location = location
        super().__init__(f"{location}: {message}")
