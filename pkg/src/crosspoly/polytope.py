"""Exact lattice-polytope geometry.

A LatticePolytope is given by primitive vertex columns with the origin
strictly inside its full-dimensional hull. Facets are enumerated once at
construction by brute force over d-subsets of vertices (vertex counts in
scope stay small), each carrying an exact rational inner normal.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product as _cartesian
from math import gcd

from .linalg import IntMatrix, RationalVector, rank

Vector = tuple[int, ...]


class InvalidPolytopeError(ValueError):
    """Raised when vertex input does not define a valid Fano polytope."""


class PolytopeFormatError(ValueError):
    """Raised on malformed polytope text files."""


@dataclass(frozen=True)
class Facet:
    """A facet: vertex indices into the polytope plus its exact inner normal,
    the unique covector evaluating to -1 on the facet."""

    vertex_indices: tuple[int, ...]
    inner_normal: RationalVector


@dataclass(frozen=True)
class LatticePointReport:
    total: int
    boundary: int
    interior_nonzero: int
    points: tuple[Vector, ...]


def _minor_normal(diffs: list[Vector], d: int) -> Vector | None:
    """Integer normal of the hyperplane spanned by d-1 difference vectors,
    via signed maximal minors; None if the vectors are dependent."""
    normal = []
    sign = 1
    for skip in range(d):
        sub = [[row[j] for j in range(d) if j != skip] for row in diffs]
        normal.append(sign * _det_small(sub))
        sign = -sign
    if all(x == 0 for x in normal):
        return None
    return tuple(normal)


def _det_small(rows: list[list[int]]) -> int:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    # Bareiss elimination, in place.
    m = [row[:] for row in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            mi = m[i]
            mk = m[k]
            f = mi[k]
            for j in range(k + 1, n):
                mi[j] = (pivot * mi[j] - f * mk[j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def _enumerate_facets(dim: int, columns: tuple[Vector, ...]):
    """All facets of conv(columns) as (outer normal, offset, vertex indices).

    The outer form is <normal, x> <= offset with the normal primitive; every
    facet of a full-dimensional hull shows up because it contains some d
    affinely independent vertices.
    """
    n = len(columns)
    found: dict[tuple[Vector, int], tuple[int, ...]] = {}
    for subset in combinations(range(n), dim):
        base = columns[subset[0]]
        diffs = [tuple(columns[i][k] - base[k] for k in range(dim)) for i in subset[1:]]
        normal = _minor_normal(diffs, dim) if dim > 1 else (1,)
        if normal is None:
            continue
        g = gcd(*normal)
        if g > 1:
            normal = tuple(x // g for x in normal)
        offset = sum(a * b for a, b in zip(normal, base))
        if (normal, offset) in found or (tuple(-x for x in normal), -offset) in found:
            continue
        above = below = False
        for col in columns:
            value = sum(a * b for a, b in zip(normal, col))
            if value > offset:
                above = True
                if below:
                    break
            elif value < offset:
                below = True
                if above:
                    break
        if above and below:
            continue
        if above:
            normal = tuple(-x for x in normal)
            offset = -offset
        members = tuple(
            i
            for i, col in enumerate(columns)
            if sum(a * b for a, b in zip(normal, col)) == offset
        )
        found[(normal, offset)] = members
    return found


class LatticePolytope:
    """Full-dimensional lattice polytope with 0 strictly interior and
    primitive vertex columns. Immutable; facets are computed eagerly."""

    __slots__ = ("dim", "vertices", "vertex_columns", "facets", "_vertex_index")

    def __init__(self, dim: int, columns):
        columns = tuple(tuple(int(x) for x in col) for col in columns)
        if len(columns) < dim + 1:
            raise InvalidPolytopeError(
                f"need at least {dim + 1} vertices for a {dim}-dimensional polytope"
            )
        for col in columns:
            if len(col) != dim:
                raise InvalidPolytopeError(f"vertex {col} does not have length {dim}")
            if gcd(*col) != 1:
                raise InvalidPolytopeError(f"non-primitive vertex {col}")
        if len(set(columns)) != len(columns):
            raise InvalidPolytopeError("duplicate vertex column")
        matrix = IntMatrix.from_columns(columns)
        if rank(matrix) != dim:
            raise InvalidPolytopeError("vertices do not span the full dimension")

        raw = _enumerate_facets(dim, columns)
        facets = []
        for (normal, offset), members in raw.items():
            if offset <= 0:
                raise InvalidPolytopeError("0 is not strictly interior")
            facets.append(
                Facet(members, RationalVector([-x for x in normal], offset))
            )
        for i, col in enumerate(columns):
            # A column is a hull vertex exactly when the normals of the
            # facets through it span the whole space.
            containing = [f.inner_normal.numerators for f in facets if i in f.vertex_indices]
            if not containing or rank(IntMatrix(containing)) != dim:
                raise InvalidPolytopeError(f"column {col} is not a vertex of the hull")

        facets.sort(key=lambda f: f.inner_normal.as_fractions())
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "vertices", matrix)
        object.__setattr__(self, "vertex_columns", columns)
        object.__setattr__(self, "facets", tuple(facets))
        object.__setattr__(self, "_vertex_index", {c: i for i, c in enumerate(columns)})

    def __setattr__(self, name, value):
        raise AttributeError("LatticePolytope is immutable")

    # -- basic accessors ---------------------------------------------------

    @property
    def n_vertices(self) -> int:
        return len(self.vertex_columns)

    def facet_vertices(self, facet: Facet) -> tuple[Vector, ...]:
        return tuple(self.vertex_columns[i] for i in facet.vertex_indices)

    def facet_matrix(self, facet: Facet) -> IntMatrix:
        return IntMatrix.from_columns(self.facet_vertices(facet))

    def vertex_index(self, column: Vector) -> int:
        return self._vertex_index[tuple(column)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, LatticePolytope):
            return NotImplemented
        return self.dim == other.dim and set(self.vertex_columns) == set(other.vertex_columns)

    def __hash__(self) -> int:
        return hash((self.dim, frozenset(self.vertex_columns)))

    def __repr__(self) -> str:
        return f"LatticePolytope(dim={self.dim}, vertices={self.n_vertices})"

    # -- predicates --------------------------------------------------------

    def is_reflexive(self) -> bool:
        return all(f.inner_normal.is_integral for f in self.facets)

    def is_simplicial(self) -> bool:
        return all(len(f.vertex_indices) == self.dim for f in self.facets)

    def is_centrally_symmetric(self) -> bool:
        vertex_set = set(self.vertex_columns)
        return all(tuple(-x for x in v) in vertex_set for v in self.vertex_columns)

    def pseudo_symmetric_pairs(self) -> tuple[tuple[Facet, Facet], ...]:
        """All unordered facet pairs (F, -F) whose vertex sets are mutual
        negatives, each pair listed once in facet order."""
        by_vertex_set = {frozenset(self.facet_vertices(f)): i for i, f in enumerate(self.facets)}
        pairs = []
        for i, f in enumerate(self.facets):
            negated = frozenset(tuple(-x for x in v) for v in self.facet_vertices(f))
            j = by_vertex_set.get(negated)
            if j is not None and i < j:
                pairs.append((f, self.facets[j]))
        return tuple(pairs)

    def is_pseudo_symmetric(self) -> bool:
        return bool(self.pseudo_symmetric_pairs())

    def is_smooth_fano(self) -> bool:
        from .linalg import determinant

        if not self.is_simplicial():
            return False
        return all(
            determinant(self.facet_matrix(f)) in (1, -1) for f in self.facets
        )

    # -- derived data --------------------------------------------------------

    def dual(self) -> "LatticePolytope":
        """The dual polytope; requires reflexivity so its vertices (the inner
        normals of this polytope) are lattice points."""
        if not self.is_reflexive():
            raise InvalidPolytopeError("dual requires a reflexive polytope")
        return LatticePolytope(self.dim, [f.inner_normal.numerators for f in self.facets])

    def lattice_points(self) -> LatticePointReport:
        lo = [min(v[k] for v in self.vertex_columns) for k in range(self.dim)]
        hi = [max(v[k] for v in self.vertex_columns) for k in range(self.dim)]
        normals = [
            (f.inner_normal.numerators, f.inner_normal.denominator) for f in self.facets
        ]
        points = []
        boundary = 0
        grid = [range(a, b + 1) for a, b in zip(lo, hi)]
        for point in _cartesian(*grid):
            on_facet = False
            for nums, den in normals:
                value = sum(a * b for a, b in zip(nums, point))
                if value < -den:
                    break
                if value == -den:
                    on_facet = True
            else:
                points.append(point)
                if on_facet:
                    boundary += 1
        points.sort()
        total = len(points)
        return LatticePointReport(
            total=total,
            boundary=boundary,
            interior_nonzero=total - boundary - 1,
            points=tuple(points),
        )

    def facet_lattice_point_count(self, facet: Facet, report: LatticePointReport | None = None) -> int:
        if report is None:
            report = self.lattice_points()
        nums = facet.inner_normal.numerators
        den = facet.inner_normal.denominator
        return sum(
            1
            for p in report.points
            if sum(a * b for a, b in zip(nums, p)) == -den
        )

    def f_vector(self) -> tuple[int, ...]:
        """Face counts (f_0, ..., f_{d-1}) from the facet-intersection closure."""
        facet_sets = [frozenset(f.vertex_indices) for f in self.facets]
        faces = set(facet_sets)
        frontier = set(facet_sets)
        while frontier:
            fresh = set()
            for face in frontier:
                for fs in facet_sets:
                    cut = face & fs
                    if cut and cut not in faces:
                        fresh.add(cut)
            faces |= fresh
            frontier = fresh
        counts = [0] * self.dim
        for face in faces:
            members = [self.vertex_columns[i] for i in face]
            base = members[0]
            if len(members) == 1:
                dim_face = 0
            else:
                diffs = IntMatrix(
                    [[v[k] - base[k] for k in range(self.dim)] for v in members[1:]]
                )
                dim_face = rank(diffs)
            counts[dim_face] += 1
        return tuple(counts)


def from_vertices(dim: int, columns) -> LatticePolytope:
    """Construct a validated polytope from vertex columns. Redundant
    (non-vertex) columns are rejected, not dropped."""
    return LatticePolytope(dim, columns)


# -- polytope text format ----------------------------------------------------
#
# line 1: "d n"; then n lines of d space-separated integers (one vertex per
# line); '#'-prefixed lines are comments; a trailing newline is required.


def parse_polytope_text(text: str) -> LatticePolytope:
    if not text.endswith("\n"):
        raise PolytopeFormatError("missing trailing newline")
    rows = []
    header = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        try:
            values = [int(p) for p in parts]
        except ValueError:
            raise PolytopeFormatError(f"line {lineno}: non-integer token") from None
        if header is None:
            if len(values) != 2:
                raise PolytopeFormatError(f"line {lineno}: header must be 'd n'")
            header = (values[0], values[1])
            if header[0] < 1 or header[1] < 1:
                raise PolytopeFormatError(f"line {lineno}: header values must be positive")
            continue
        if len(values) != header[0]:
            raise PolytopeFormatError(
                f"line {lineno}: expected {header[0]} coordinates, got {len(values)}"
            )
        rows.append((lineno, values))
    if header is None:
        raise PolytopeFormatError("empty polytope file")
    dim, count = header
    if len(rows) != count:
        raise PolytopeFormatError(f"expected {count} vertex lines, found {len(rows)}")
    seen = {}
    for lineno, row in rows:
        key = tuple(row)
        if key in seen:
            raise PolytopeFormatError(f"line {lineno}: duplicate vertex line")
        seen[key] = lineno
    try:
        return LatticePolytope(dim, [row for _, row in rows])
    except InvalidPolytopeError as exc:
        raise PolytopeFormatError(str(exc)) from exc


def format_polytope_text(polytope: LatticePolytope, comment: str | None = None) -> str:
    lines = []
    if comment:
        for part in comment.splitlines():
            lines.append(f"# {part}")
    lines.append(f"{polytope.dim} {polytope.n_vertices}")
    for col in polytope.vertex_columns:
        lines.append(" ".join(str(x) for x in col))
    return "\n".join(lines) + "\n"
