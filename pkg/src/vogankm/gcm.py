"""Exact-arithmetic core for generalized Cartan matrices.

A generalized Cartan matrix (GCM) is a square integer matrix with 2 on the
diagonal, non-positive entries off it, and a symmetric zero pattern.  The
entry convention throughout the library is ``a[i][j] = <alpha_j, alpha_i^v>``
(row i is the coroot side), which fixes edge-arrow rendering and the parity
rule used by the Vogan-diagram moves.

Everything here is computed over exact integers and fractions; there is no
floating point anywhere in the classification path.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .exceptions import (
    DiagonalNotTwo,
    EmptySelection,
    InvalidMatrix,
    NotSymmetrizable,
    PositiveOffDiagonal,
    ZeroAsymmetry,
)

Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class GeneralizedCartanMatrix:
    """A validated GCM.  Instances are immutable and safe to share."""

    a: Matrix
    name: Optional[str] = None

    def __post_init__(self):
        _check_axioms(self.a)

    @property
    def n(self) -> int:
        return len(self.a)

    def entry(self, i: int, j: int) -> int:
        return self.a[i][j]

    def neighbors(self, i: int) -> tuple[int, ...]:
        return tuple(j for j in range(self.n) if j != i and self.a[i][j] != 0)

    def __repr__(self):
        label = self.name or f"rank-{self.n} GCM"
        return f"GeneralizedCartanMatrix({label})"


def _check_axioms(a: Matrix):
    n = len(a)
    for i in range(n):
        for j in range(n):
            v = a[i][j]
            if i == j:
                if v != 2:
                    raise DiagonalNotTwo(f"a[{i}][{i}] = {v}, expected 2", (i, i))
            elif v > 0:
                raise PositiveOffDiagonal(f"a[{i}][{j}] = {v} > 0", (i, j))
            elif v == 0 and a[j][i] != 0:
                raise ZeroAsymmetry(
                    f"a[{i}][{j}] = 0 but a[{j}][{i}] = {a[j][i]}", (i, j)
                )


def validate(matrix: Sequence[Sequence[int]], name: Optional[str] = None) -> GeneralizedCartanMatrix:
    """Validate an integer matrix as a GCM.

    Raises InvalidMatrix for shape/type problems, otherwise the error names
    the first violated axiom (row-major scan) and its (i, j) location.
    """
    rows = []
    for row in matrix:
        entries = []
        for x in row:
            try:
                entries.append(operator.index(x))
            except TypeError:
                raise InvalidMatrix(f"non-integer entry {x!r}") from None
        rows.append(tuple(entries))
    a = tuple(rows)
    n = len(a)
    if n == 0:
        raise InvalidMatrix("empty matrix")
    if any(len(row) != n for row in a):
        raise InvalidMatrix(f"matrix is not square: {n} rows, row lengths {[len(r) for r in a]}")
    return GeneralizedCartanMatrix(a, name)


# ---------------------------------------------------------------------------
# connectivity

def connected_components(g: GeneralizedCartanMatrix) -> list[tuple[int, ...]]:
    """Partition vertices into connected components, ordered by smallest member."""
    return _components(g.a, range(g.n))


def _components(a: Matrix, vertices: Iterable[int]) -> list[tuple[int, ...]]:
    todo = sorted(vertices)
    allowed = set(todo)
    seen: set[int] = set()
    comps = []
    for s in todo:
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        while stack:
            i = stack.pop()
            for j in allowed:
                if j not in comp and a[i][j] != 0:
                    comp.add(j)
                    stack.append(j)
        seen |= comp
        comps.append(tuple(sorted(comp)))
    return comps


@dataclass(frozen=True)
class Subdiagram:
    """Principal submatrix together with the index map back to the parent."""

    gcm: GeneralizedCartanMatrix
    parent_vertices: tuple[int, ...]


def subdiagram(g: GeneralizedCartanMatrix, keep: Iterable[int]) -> Subdiagram:
    """Principal submatrix on ``keep``; new index t maps to parent_vertices[t]."""
    kept = tuple(sorted(set(keep)))
    if not kept:
        raise EmptySelection("subdiagram needs a nonempty vertex set")
    if kept[0] < 0 or kept[-1] >= g.n:
        raise InvalidMatrix(f"vertex out of range in {kept}")
    sub = tuple(tuple(g.a[i][j] for j in kept) for i in kept)
    return Subdiagram(GeneralizedCartanMatrix(sub), kept)


# ---------------------------------------------------------------------------
# symmetrizer

@dataclass(frozen=True)
class Symmetrizer:
    """Positive rationals d with d[i]*a[i][j] = d[j]*a[j][i], min entry 1
    on every connected component."""

    d: tuple[Fraction, ...]


def symmetrizer(g: GeneralizedCartanMatrix) -> Symmetrizer:
    """Symmetrizer of g, or NotSymmetrizable naming a violating cycle edge.

    d propagates along a spanning tree of each component via
    d[i]*a[i][j] = d[j]*a[j][i]; every non-tree edge is then checked.
    """
    d = _symmetrizer_vector(g.a, range(g.n))
    return Symmetrizer(tuple(d[i] for i in range(g.n)))


def _symmetrizer_vector(a: Matrix, vertices: Iterable[int]) -> dict[int, Fraction]:
    d: dict[int, Fraction] = {}
    for comp in _components(a, vertices):
        comp_d = {comp[0]: Fraction(1)}
        stack = [comp[0]]
        while stack:
            i = stack.pop()
            for j in comp:
                if j not in comp_d and a[i][j] != 0:
                    comp_d[j] = comp_d[i] * a[i][j] / a[j][i]
                    stack.append(j)
        for i in comp:
            for j in comp:
                if j > i and a[i][j] != 0 and comp_d[i] * a[i][j] != comp_d[j] * a[j][i]:
                    raise NotSymmetrizable(
                        f"cycle edge ({i},{j}) breaks d[i]*a[i][j] = d[j]*a[j][i]",
                        edge=(i, j),
                    )
        low = min(comp_d.values())
        d.update({i: v / low for i, v in comp_d.items()})
    return d


# ---------------------------------------------------------------------------
# exact determinants

def _bareiss_det(m: list[list[int]]) -> int:
    """Fraction-free Bareiss determinant of an integer matrix."""
    n = len(m)
    if n == 0:
        return 1
    m = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def principal_minor(g: GeneralizedCartanMatrix, rows: Iterable[int]) -> Fraction:
    """det of the symmetrized principal submatrix B = D*A on ``rows``, exact."""
    idx = tuple(sorted(set(rows)))
    if not idx:
        raise EmptySelection("principal_minor needs a nonempty row set")
    d = _symmetrizer_vector(g.a, range(g.n))
    return _minor_with_d(g.a, d, idx)


def _minor_with_d(a: Matrix, d: dict[int, Fraction], idx: tuple[int, ...]) -> Fraction:
    # Clear denominators row by row so Bareiss runs over plain integers.
    scaled = []
    scale = 1
    for i in idx:
        mult = d[i].denominator
        scaled.append([int(d[i] * mult) * a[i][j] for j in idx])
        scale *= mult
    return Fraction(_bareiss_det(scaled), scale)


# ---------------------------------------------------------------------------
# classification

class TypeTag(Enum):
    FINITE = "Finite"
    AFFINE = "Affine"
    INDEFINITE = "Indefinite"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class AlgebraType:
    """Classification result.

    ``tag`` is the trichotomy tag for an indecomposable matrix and None for a
    decomposable one; ``components`` always carries per-component verdicts.
    """

    tag: Optional[TypeTag]
    symmetrizable: bool
    indecomposable: bool
    hyperbolic: bool
    hyperbolic_reason: Optional[str] = None
    components: tuple[tuple[tuple[int, ...], TypeTag], ...] = field(default=())


def _component_tag(a: Matrix, d: dict[int, Fraction], comp: tuple[int, ...]) -> TypeTag:
    """Finite/affine/indefinite for one connected vertex set.

    Finite iff all leading principal minors of B are positive (Sylvester);
    affine iff det B = 0 and deleting any single vertex leaves only finite
    components; indefinite otherwise.
    """
    minors = [_minor_with_d(a, d, comp[: k + 1]) for k in range(len(comp))]
    if all(m > 0 for m in minors):
        return TypeTag.FINITE
    if minors[-1] == 0:
        for v in comp:
            rest = tuple(x for x in comp if x != v)
            for sub in _components(a, rest):
                if _component_tag(a, d, sub) is not TypeTag.FINITE:
                    return TypeTag.INDEFINITE
        return TypeTag.AFFINE
    return TypeTag.INDEFINITE


def classify(g: GeneralizedCartanMatrix) -> AlgebraType:
    """Classify g; exact arithmetic on B = D*A throughout.

    Decomposable input is classified per component (overall tag None).  The
    hyperbolic flag follows the standard definition: indecomposable,
    symmetrizable, indefinite, and every proper connected subdiagram of
    finite or affine type.  Raises NotSymmetrizable when no component-wise
    symmetric bilinear form exists.
    """
    d = _symmetrizer_vector(g.a, range(g.n))
    comps = connected_components(g)
    tags = tuple((c, _component_tag(g.a, d, c)) for c in comps)
    indecomposable = len(comps) == 1

    if not indecomposable:
        return AlgebraType(None, True, False, False, "decomposable", tags)

    tag = tags[0][1]
    if tag is not TypeTag.INDEFINITE:
        return AlgebraType(tag, True, True, False, f"not indefinite ({tag})", tags)

    for v in range(g.n):
        rest = tuple(x for x in range(g.n) if x != v)
        if not rest:
            continue
        for sub in _components(g.a, rest):
            if _component_tag(g.a, d, sub) is TypeTag.INDEFINITE:
                reason = f"deleting vertex {v} leaves an indefinite component {sub}"
                return AlgebraType(tag, True, True, False, reason, tags)
    return AlgebraType(tag, True, True, True, None, tags)


# ---------------------------------------------------------------------------
# Dynkin diagram view

class EdgeStyle(Enum):
    SIMPLE = "simple"
    MULTIPLE = "multiple"
    BOLD = "bold"


@dataclass(frozen=True)
class DiagramEdge:
    """Undirected edge {i, j} (i < j) with both Cartan-entry magnitudes."""

    i: int
    j: int
    aij_abs: int  # |a[i][j]|
    aji_abs: int  # |a[j][i]|

    @property
    def product(self) -> int:
        return self.aij_abs * self.aji_abs

    @property
    def style(self) -> EdgeStyle:
        if self.aij_abs == self.aji_abs == 1:
            return EdgeStyle.SIMPLE
        if self.product <= 4:
            return EdgeStyle.MULTIPLE
        return EdgeStyle.BOLD

    @property
    def lines(self) -> int:
        return max(self.aij_abs, self.aji_abs)

    @property
    def arrow_toward(self) -> Optional[int]:
        """Arrow target for a multiple edge: the vertex on the larger-entry
        row (the short root).  None for simple/bold edges and for the
        symmetric (2,2) edge, which renderers draw double-headed."""
        if self.style is not EdgeStyle.MULTIPLE:
            return None
        if self.aij_abs > self.aji_abs:
            return self.i
        if self.aji_abs > self.aij_abs:
            return self.j
        return None


@dataclass(frozen=True)
class DynkinDiagram:
    vertices: tuple[int, ...]
    edges: tuple[DiagramEdge, ...]


def diagram_of(g: GeneralizedCartanMatrix) -> DynkinDiagram:
    edges = []
    for i in range(g.n):
        for j in range(i + 1, g.n):
            if g.a[i][j] != 0:
                edges.append(DiagramEdge(i, j, abs(g.a[i][j]), abs(g.a[j][i])))
    return DynkinDiagram(tuple(range(g.n)), tuple(edges))


def gcm_of(diagram: DynkinDiagram, name: Optional[str] = None) -> GeneralizedCartanMatrix:
    """Rebuild the GCM from a diagram; inverse of diagram_of."""
    n = len(diagram.vertices)
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for e in diagram.edges:
        a[e.i][e.j] = -e.aij_abs
        a[e.j][e.i] = -e.aji_abs
    return validate(a, name)
