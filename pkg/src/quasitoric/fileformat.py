"""Plain-text .qtm format for characteristic pairs.

Grammar, one directive per line, ``#`` starts a comment, blank lines ignored::

    dim <n>
    facets <m>
    vertex <j1> ... <jn>              # repeated, 0-based facet indices
    lambda                            # followed by exactly n rows of m integers
    <m integers>                      # (n times)
    omniorientation <s0> <s1> ... <sm>   # optional; eps0 then m facet signs

Integers are unbounded and parsed exactly. Parsing canonicalizes (each vertex
ascending, vertex list sorted lexicographically) without validating, so
serialize(parse(x)) is idempotent and documents round-trip byte-for-byte.
"""

from __future__ import annotations

from dataclasses import dataclass

from .charpair import CharacteristicPair, Omniorientation, validate_char
from .errors import (
    ArityError,
    DuplicateDirectiveError,
    MissingLambdaError,
    ParseError,
    UnknownDirectiveError,
)
from .polytope import validate_polytope

EXTENSION = ".qtm"


@dataclass(frozen=True)
class PairDocument:
    """Parsed, canonicalized, not-yet-validated pair data."""

    dim: int
    num_facets: int
    vertices: tuple[tuple[int, ...], ...]
    matrix: tuple[tuple[int, ...], ...]
    omniorientation: Omniorientation | None = None

    def to_pair(self) -> CharacteristicPair:
        poly = validate_polytope(self.dim, self.num_facets, self.vertices)
        return validate_char(poly, self.matrix)

    @classmethod
    def from_pair(
        cls, pair: CharacteristicPair, omni: Omniorientation | None = None
    ) -> "PairDocument":
        return cls(
            dim=pair.polytope.dim,
            num_facets=pair.polytope.num_facets,
            vertices=pair.polytope.vertices,
            matrix=pair.matrix.entries,
            omniorientation=omni,
        )


def _int(token: str, lineno: int) -> int:
    try:
        return int(token, 10)
    except ValueError:
        raise ParseError(lineno, f"not an integer: {token!r}") from None


def _sign(token: str, lineno: int) -> int:
    value = _int(token, lineno)
    if value not in (1, -1):
        raise ParseError(lineno, f"sign must be +1 or -1, got {token!r}")
    return value


def parse(text: str) -> PairDocument:
    """Parse a .qtm document, raising line-numbered ParseError subclasses."""
    dim = None
    facets = None
    vertices: list[tuple[int, ...]] = []
    matrix: list[tuple[int, ...]] | None = None
    rows_needed = 0
    omni = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if rows_needed:
            if len(tokens) != facets:
                raise ArityError(lineno, f"lambda row needs {facets} integers, got {len(tokens)}")
            matrix.append(tuple(_int(t, lineno) for t in tokens))
            rows_needed -= 1
            continue
        directive, args = tokens[0], tokens[1:]
        if directive == "dim":
            if dim is not None:
                raise DuplicateDirectiveError(lineno, "dim given twice")
            if len(args) != 1:
                raise ArityError(lineno, "dim takes one integer")
            dim = _int(args[0], lineno)
        elif directive == "facets":
            if facets is not None:
                raise DuplicateDirectiveError(lineno, "facets given twice")
            if len(args) != 1:
                raise ArityError(lineno, "facets takes one integer")
            facets = _int(args[0], lineno)
        elif directive == "vertex":
            if dim is None:
                raise ParseError(lineno, "vertex before dim")
            if len(args) != dim:
                raise ArityError(lineno, f"vertex takes {dim} indices, got {len(args)}")
            vertices.append(tuple(sorted(_int(t, lineno) for t in args)))
        elif directive == "lambda":
            if matrix is not None:
                raise DuplicateDirectiveError(lineno, "lambda given twice")
            if dim is None or facets is None:
                raise ParseError(lineno, "lambda before dim/facets")
            if args:
                raise ArityError(lineno, "lambda takes no arguments")
            matrix = []
            rows_needed = dim
        elif directive == "omniorientation":
            if omni is not None:
                raise DuplicateDirectiveError(lineno, "omniorientation given twice")
            if facets is None:
                raise ParseError(lineno, "omniorientation before facets")
            if len(args) != facets + 1:
                raise ArityError(
                    lineno, f"omniorientation takes {facets + 1} signs, got {len(args)}"
                )
            signs = [_sign(t, lineno) for t in args]
            omni = Omniorientation(signs[0], tuple(signs[1:]))
        else:
            raise UnknownDirectiveError(lineno, f"unknown directive {directive!r}")
    end = text.count("\n") + 1
    if dim is None or facets is None:
        raise ParseError(end, "missing dim or facets directive")
    if matrix is None or rows_needed:
        raise MissingLambdaError(end, "lambda block missing or truncated")
    return PairDocument(
        dim=dim,
        num_facets=facets,
        vertices=tuple(sorted(vertices)),
        matrix=tuple(matrix),
        omniorientation=omni,
    )


def format_sign(s: int) -> str:
    return "+1" if s > 0 else "-1"


def serialize(doc: PairDocument) -> str:
    """Canonical text form; parse(serialize(doc)) == doc."""
    lines = [f"dim {doc.dim}", f"facets {doc.num_facets}"]
    for v in sorted(tuple(sorted(x)) for x in doc.vertices):
        lines.append("vertex " + " ".join(str(j) for j in v))
    lines.append("lambda")
    for row in doc.matrix:
        lines.append(" ".join(str(x) for x in row))
    if doc.omniorientation is not None:
        omni = doc.omniorientation
        signs = [omni.global_sign, *omni.facet_signs]
        lines.append("omniorientation " + " ".join(format_sign(s) for s in signs))
    return "\n".join(lines) + "\n"
