"""Combinatorial simple polytopes and coherent orientations of their dual spheres.

A polytope is stored purely combinatorially: dimension n, facet count m, and
the vertex list, each vertex being the ascending tuple of the n facets meeting
there. Validation admits exactly the connected orientable simplicial
pseudomanifold duals; genuine polytopality is not decided (it is infeasible in
general, and nothing downstream needs more than the checked invariants).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import (
    DisconnectedError,
    DuplicateVertexError,
    NonOrientableError,
    RidgeViolationError,
    UnusedFacetError,
    ValidationError,
    WrongVertexSizeError,
)


@dataclass(frozen=True)
class SimplePolytope:
    """Validated combinatorial simple polytope.

    ``vertices`` is canonical: every vertex tuple ascending, the list sorted
    lexicographically. Construct through :func:`validate_polytope`; the
    dataclass itself performs no checks.
    """

    dim: int
    num_facets: int
    vertices: tuple[tuple[int, ...], ...]

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    def vertex_index(self, vertex) -> int:
        """Position of a vertex (given as any iterable of facet indices)."""
        return self.vertices.index(tuple(sorted(vertex)))


@dataclass(frozen=True)
class OrientationClass:
    """Coherent signs for the top simplices of the dual sphere.

    ``signs[i]`` belongs to ``polytope.vertices[i]`` read as an ordered
    (ascending) simplex. Normalized so the lexicographically smallest vertex
    gets +1; on a connected dual sphere the class is unique up to one global
    sign.
    """

    signs: tuple[int, ...]

    def flipped(self) -> "OrientationClass":
        return OrientationClass(tuple(-s for s in self.signs))


def _ridge_map(vertices):
    """ridge tuple -> list of (vertex index, deleted position), insertion order."""
    ridges: dict[tuple[int, ...], list[tuple[int, int]]] = {}
    for vi, v in enumerate(vertices):
        for pos in range(len(v)):
            ridge = v[:pos] + v[pos + 1 :]
            ridges.setdefault(ridge, []).append((vi, pos))
    return ridges


def _propagate_orientation(vertices, ridges):
    """BFS the coherence rule from vertex 0; returns signs or raises.

    A vertex with sign s induces (-1)^p * s on the ridge obtained by deleting
    its facet at ascending position p; coherence demands the two vertices of a
    ridge induce opposite signs.
    """
    signs: list[int | None] = [None] * len(vertices)
    signs[0] = 1
    queue = deque([0])
    while queue:
        vi = queue.popleft()
        v = vertices[vi]
        for pos in range(len(v)):
            ridge = v[:pos] + v[pos + 1 :]
            entries = ridges[ridge]
            (wi, wpos) = entries[0] if entries[0][0] != vi else entries[1]
            expected = -((-1) ** (pos + wpos)) * signs[vi]
            if signs[wi] is None:
                signs[wi] = expected
                queue.append(wi)
            elif signs[wi] != expected:
                raise NonOrientableError(vertices[wi])
    return signs


def validate_polytope(dim, num_facets, vertices) -> SimplePolytope:
    """Check raw combinatorial data and return a canonical SimplePolytope.

    Raises, in scan order: ValidationError for malformed scalars or facet
    indices, WrongVertexSizeError, DuplicateVertexError, UnusedFacetError,
    RidgeViolationError (naming the first vertex/facet pair with 0 or >=2
    partners), DisconnectedError, NonOrientableError.
    """
    n = int(dim)
    m = int(num_facets)
    if n < 1:
        raise ValidationError(f"dim must be >= 1, got {n}")
    if m < n + 1:
        raise ValidationError(f"need at least dim+1 = {n + 1} facets, got {m}")

    canon = []
    for raw in vertices:
        v = tuple(sorted(int(j) for j in raw))
        if len(set(v)) != n or len(v) != n:
            raise WrongVertexSizeError(tuple(raw), n)
        if v[0] < 0 or v[-1] >= m:
            raise ValidationError(f"vertex {v} has a facet index outside [0, {m})")
        canon.append(v)
    canon.sort()
    if not canon:
        raise ValidationError("polytope has no vertices")

    for a, b in zip(canon, canon[1:]):
        if a == b:
            raise DuplicateVertexError(a)

    used = {j for v in canon for j in v}
    missing = sorted(set(range(m)) - used)
    if missing:
        raise UnusedFacetError(missing)

    ridges = _ridge_map(canon)
    for vi, v in enumerate(canon):
        for pos, f in enumerate(v):
            ridge = v[:pos] + v[pos + 1 :]
            partners = len(ridges[ridge]) - 1
            if partners != 1:
                raise RidgeViolationError(v, f, partners)

    # ridge graph connectivity (trivially true for n = 1, where the empty
    # ridge joins the only two vertices)
    seen = {0}
    queue = deque([0])
    while queue:
        vi = queue.popleft()
        v = canon[vi]
        for pos in range(n):
            ridge = v[:pos] + v[pos + 1 :]
            for wi, _ in ridges[ridge]:
                if wi not in seen:
                    seen.add(wi)
                    queue.append(wi)
    if len(seen) != len(canon):
        raise DisconnectedError(len(seen), len(canon))

    _propagate_orientation(canon, ridges)  # raises NonOrientableError

    return SimplePolytope(dim=n, num_facets=m, vertices=tuple(canon))


def adjacent_vertex(polytope: SimplePolytope, vertex, facet: int) -> tuple[int, ...]:
    """The unique vertex sharing the ridge S(v) minus {facet} with v (n >= 2)."""
    if polytope.dim < 2:
        raise ValueError("edges of the polytope exist only for dim >= 2")
    v = tuple(sorted(vertex))
    vi = polytope.vertices.index(v)
    if facet not in v:
        raise ValueError(f"facet {facet} is not incident to vertex {v}")
    ridge = tuple(j for j in v if j != facet)
    for wi, w in enumerate(polytope.vertices):
        if wi != vi and set(ridge) <= set(w):
            return w
    raise ValueError("no ridge partner; polytope was not validated")  # pragma: no cover


def orient_dual_sphere(polytope: SimplePolytope) -> OrientationClass:
    """Deterministic coherent orientation, +1 at the lex-smallest vertex.

    For dim 1 the generic propagation yields the (+1, -1) interval convention.
    """
    ridges = _ridge_map(polytope.vertices)
    signs = _propagate_orientation(polytope.vertices, ridges)
    return OrientationClass(tuple(signs))


def f_vector(polytope: SimplePolytope) -> tuple[int, ...]:
    """(f_0, ..., f_{n-1}): faces of codimension k are the k-subsets of facets
    contained in at least one vertex."""
    n = polytope.dim
    counts = []
    for k in range(n, 0, -1):  # codimension k gives f_{n-k}
        faces = set()
        for v in polytope.vertices:
            faces.update(combinations(v, k))
        counts.append(len(faces))
    return tuple(counts)


def h_vector(polytope: SimplePolytope) -> tuple[int, ...]:
    """h-vector via the substitution sum_i g_i (t-1)^(n-i), exact integers.

    g_i is the number of codimension-i faces (the count of (i-1)-simplices of
    the dual sphere), with g_0 = 1; h_k is the coefficient of t^(n-k).
    Indexing by codimension, not face dimension, is what makes the result
    palindromic; the n = 2 cases agree either way and hide the distinction.
    """
    n = polytope.dim
    g = (1,) + tuple(reversed(f_vector(polytope)))  # g[i] = codim-i face count
    h = []
    for k in range(n + 1):
        j = n - k  # coefficient of t^j
        total = 0
        for i in range(n + 1):
            if j <= n - i:
                total += g[i] * comb(n - i, j) * (-1) ** ((n - i) - j)
        h.append(total)
    return tuple(h)
