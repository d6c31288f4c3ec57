"""Exception hierarchy.

Everything raised on bad user input derives from ValidationError or ParseError;
InternalInconsistencyError and friends signal implementation defects and should
never be reachable from valid data.
"""

from __future__ import annotations


class QuasitoricError(Exception):
    """Base class for all library errors."""


class ValidationError(QuasitoricError):
    """Structurally invalid polytope or characteristic data."""


class DuplicateVertexError(ValidationError):
    def __init__(self, vertex):
        self.vertex = tuple(vertex)
        super().__init__(f"duplicate vertex {self.vertex}")


class WrongVertexSizeError(ValidationError):
    def __init__(self, vertex, expected):
        self.vertex = tuple(vertex)
        self.expected = expected
        super().__init__(
            f"vertex {self.vertex} has {len(set(self.vertex))} distinct facets, expected {expected}"
        )


class UnusedFacetError(ValidationError):
    def __init__(self, facets):
        self.facets = tuple(facets)
        super().__init__(f"facets {self.facets} appear in no vertex")


class RidgeViolationError(ValidationError):
    def __init__(self, vertex, facet, partners):
        self.vertex = tuple(vertex)
        self.facet = facet
        self.partners = partners
        super().__init__(
            f"vertex {self.vertex}, facet {facet}: {partners} ridge partner(s), expected exactly 1"
        )


class DisconnectedError(ValidationError):
    def __init__(self, reached, total):
        super().__init__(f"vertex adjacency graph disconnected ({reached} of {total} reachable)")


class NonOrientableError(ValidationError):
    def __init__(self, vertex):
        self.vertex = tuple(vertex)
        super().__init__(f"dual pseudomanifold is not orientable (contradiction at {self.vertex})")


class ShapeMismatchError(ValidationError):
    def __init__(self, expected, got):
        super().__init__(f"characteristic matrix must be {expected}, got {got}")


class SingularVertexError(ValidationError):
    def __init__(self, offenders):
        # offenders: list of (vertex tuple, determinant)
        self.offenders = tuple((tuple(v), d) for v, d in offenders)
        detail = ", ".join(f"{v}: det={d}" for v, d in self.offenders)
        super().__init__(f"|det| != 1 at vertices: {detail}")


class NotUnimodularError(QuasitoricError):
    def __init__(self, det):
        self.det = det
        super().__init__(f"basis change matrix has det {det}, need |det| = 1")


class TooLargeError(QuasitoricError):
    """Brute-force enumeration refused: search space too big."""


class InternalInconsistencyError(QuasitoricError):
    """A result failed its own verification; indicates a defect, not bad input."""


class InvalidResultError(QuasitoricError):
    """A construction produced data that fails validation."""


class NoUnimodularMatchError(QuasitoricError):
    """No GL(2,Z) alignment between the chosen connected-sum vertices."""


class NotDimension2Error(QuasitoricError):
    def __init__(self, dim):
        super().__init__(f"operation defined only for dim 2, got dim {dim}")


class DegenerateRelationsError(QuasitoricError):
    """No pair of lambda columns forms a Z^2 basis."""


class ParseError(QuasitoricError):
    """Syntax error in the .qtm text format; carries a 1-based line number."""

    def __init__(self, line, message):
        self.line = line
        super().__init__(f"line {line}: {message}")


class UnknownDirectiveError(ParseError):
    pass


class ArityError(ParseError):
    pass


class MissingLambdaError(ParseError):
    pass


class DuplicateDirectiveError(ParseError):
    pass
