"""Characteristic matrices, omniorientations and the fixed-point sign calculus.

The sign of the fixed point over a vertex v is

    eps0 * orientation(v) * prod_{j in S(v)} eps_j * sgn det lambda_v

with the columns of lambda_v taken in ascending facet order, the same order
the orientation class refers to. Facet sign flips are tracked in eps and never
folded into the stored matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .errors import NotUnimodularError, ShapeMismatchError, SingularVertexError
from .polytope import OrientationClass, SimplePolytope, orient_dual_sphere, validate_polytope


@dataclass(frozen=True)
class CharacteristicMatrix:
    """n x m integer matrix, column j attached to facet j. Entries unbounded."""

    entries: tuple[tuple[int, ...], ...]

    @property
    def n_rows(self) -> int:
        return len(self.entries)

    @property
    def n_cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def column(self, j) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)


@dataclass(frozen=True)
class CharacteristicPair:
    """Polytope with a validated characteristic matrix.

    ``orientation`` and ``vertex_dets`` (det lambda_v per vertex, in vertex
    order) are computed once at construction; both are derived data.
    """

    polytope: SimplePolytope
    matrix: CharacteristicMatrix
    orientation: OrientationClass
    vertex_dets: tuple[int, ...]

    @property
    def num_facets(self) -> int:
        return self.polytope.num_facets


@dataclass(frozen=True)
class Omniorientation:
    """Global orientation sign and one sign per characteristic submanifold."""

    global_sign: int
    facet_signs: tuple[int, ...]

    def __post_init__(self):
        if self.global_sign not in (1, -1):
            raise ValueError("global sign must be +1 or -1")
        if any(s not in (1, -1) for s in self.facet_signs):
            raise ValueError("facet signs must be +1 or -1")

    @classmethod
    def all_positive(cls, num_facets: int) -> "Omniorientation":
        return cls(1, (1,) * num_facets)

    def flip_global(self) -> "Omniorientation":
        return Omniorientation(-self.global_sign, self.facet_signs)

    def flip_facet(self, j: int) -> "Omniorientation":
        signs = list(self.facet_signs)
        signs[j] = -signs[j]
        return Omniorientation(self.global_sign, tuple(signs))


def validate_char(polytope: SimplePolytope, matrix) -> CharacteristicPair:
    """Build a CharacteristicPair, checking |det lambda_v| = 1 at every vertex.

    SingularVertexError lists every offending vertex with its determinant.
    """
    rows = tuple(tuple(int(x) for x in row) for row in matrix)
    n, m = polytope.dim, polytope.num_facets
    if len(rows) != n or any(len(r) != m for r in rows):
        got = f"{len(rows)}x{len(rows[0]) if rows else 0}"
        raise ShapeMismatchError(f"{n}x{m}", got)
    lam = CharacteristicMatrix(rows)
    dets = []
    offenders = []
    for v in polytope.vertices:
        d = linalg.det_bareiss(linalg.columns(rows, v))
        dets.append(d)
        if d not in (1, -1):
            offenders.append((v, d))
    if offenders:
        raise SingularVertexError(offenders)
    return CharacteristicPair(
        polytope=polytope,
        matrix=lam,
        orientation=orient_dual_sphere(polytope),
        vertex_dets=tuple(dets),
    )


def vertex_sign(pair: CharacteristicPair, omni: Omniorientation, vertex) -> int:
    """Sign of the fixed point over one vertex."""
    v = tuple(sorted(vertex))
    vi = pair.polytope.vertices.index(v)
    sign = omni.global_sign * pair.orientation.signs[vi] * pair.vertex_dets[vi]
    for j in v:
        sign *= omni.facet_signs[j]
    return sign


def all_signs(pair: CharacteristicPair, omni: Omniorientation) -> tuple[int, ...]:
    """Signs of all fixed points, in canonical vertex order."""
    out = []
    for vi, v in enumerate(pair.polytope.vertices):
        sign = omni.global_sign * pair.orientation.signs[vi] * pair.vertex_dets[vi]
        for j in v:
            sign *= omni.facet_signs[j]
        out.append(sign)
    return tuple(out)


def basis_change(pair: CharacteristicPair, a) -> CharacteristicPair:
    """Replace lambda by A*lambda for a unimodular integer matrix A."""
    a = tuple(tuple(int(x) for x in row) for row in a)
    det = linalg.det_bareiss(a)
    if det not in (1, -1):
        raise NotUnimodularError(det)
    new_rows = linalg.mat_mul(a, pair.matrix.entries)
    # det(A*lambda_v) = det A * det lambda_v, so the pair stays valid
    return CharacteristicPair(
        polytope=pair.polytope,
        matrix=CharacteristicMatrix(new_rows),
        orientation=pair.orientation,
        vertex_dets=tuple(det * d for d in pair.vertex_dets),
    )


def relabel_facets(pair: CharacteristicPair, perm, omni: Omniorientation | None = None):
    """Relabel facets by perm (perm[j] = new label of facet j).

    Returns (pair, omni) describing the same omnioriented manifold. The
    rebuilt orientation class is renormalized at the new lex-smallest vertex,
    which can differ from the transported class by one global sign; that sign
    is folded into the transported eps0 so that vertex signs are preserved as
    a map on vertices. With omni=None the second element is None and the
    compensation is dropped.
    """
    m = pair.polytope.num_facets
    perm = tuple(int(p) for p in perm)
    if sorted(perm) != list(range(m)):
        raise ValueError("perm is not a permutation of the facet labels")

    old = pair.polytope
    new_poly = validate_polytope(
        old.dim, m, [tuple(perm[j] for j in v) for v in old.vertices]
    )
    new_matrix = [[0] * m for _ in range(old.dim)]
    for j in range(m):
        for i, x in enumerate(pair.matrix.column(j)):
            new_matrix[i][perm[j]] = x
    new_pair = validate_char(new_poly, new_matrix)

    if omni is None:
        return new_pair, None

    # global sign between renormalized and transported orientation classes
    v0 = old.vertices[0]
    parity = linalg.perm_parity(perm[j] for j in v0)
    wi = new_poly.vertex_index(perm[j] for j in v0)
    g = new_pair.orientation.signs[wi] * parity * pair.orientation.signs[0]
    new_facet_signs = [1] * m
    for j in range(m):
        new_facet_signs[perm[j]] = omni.facet_signs[j]
    return new_pair, Omniorientation(g * omni.global_sign, tuple(new_facet_signs))
