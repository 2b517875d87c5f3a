"""Constructors for the named polytope families and the free-sum operation.

The del Pezzo polytope of even dimension k is conv(+-e_1, ..., +-e_k,
+-(e_1+...+e_k)); the pseudo-del Pezzo polytope keeps only the negative sum
vertex. D_d is the crosspolytope of the Wirth matrix with 2's on the first
d-1 diagonal slots and a final all-ones row.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .polytope import LatticePolytope
from .wirth import WirthMatrix, polytope_from_wirth


@dataclass(frozen=True)
class FanoFactor:
    """One irreducible factor of a splitting: a segment, a del Pezzo or
    pseudo-del Pezzo polytope of even dimension, or a 1-minimal
    cs-crosspolytope core."""

    kind: str  # "segment" | "del_pezzo" | "pseudo_del_pezzo" | "cs_cross"
    k: int = 1
    core: WirthMatrix | None = None

    def __post_init__(self):
        if self.kind == "segment":
            if self.k != 1:
                raise ValueError("segments are one-dimensional")
        elif self.kind in ("del_pezzo", "pseudo_del_pezzo"):
            if self.k < 2 or self.k % 2:
                raise ValueError(f"{self.kind} dimension must be even and >= 2")
        elif self.kind == "cs_cross":
            if self.core is None or not self.core.is_one_minimal() or self.core.dim < 2:
                raise ValueError("cs_cross factor needs a 1-minimal core of dimension >= 2")
        else:
            raise ValueError(f"unknown factor kind {self.kind!r}")

    @property
    def dim(self) -> int:
        return self.core.dim if self.kind == "cs_cross" else self.k

    def build(self) -> LatticePolytope:
        if self.kind == "segment":
            return segment()
        if self.kind == "del_pezzo":
            return del_pezzo(self.k)
        if self.kind == "pseudo_del_pezzo":
            return pseudo_del_pezzo(self.k)
        return polytope_from_wirth(self.core)


def segment() -> LatticePolytope:
    return LatticePolytope(1, [(1,), (-1,)])


def cube(d: int) -> LatticePolytope:
    if d < 1:
        raise ValueError("cube dimension must be >= 1")
    cols = []
    for mask in range(1 << d):
        cols.append(tuple(1 if (mask >> i) & 1 else -1 for i in range(d)))
    return LatticePolytope(d, cols)


def _basis_vectors(k: int) -> list[tuple[int, ...]]:
    return [tuple(1 if j == i else 0 for j in range(k)) for i in range(k)]


def del_pezzo(k: int) -> LatticePolytope:
    if k < 2 or k % 2:
        raise ValueError("del Pezzo dimension must be even and >= 2")
    cols = []
    for e in _basis_vectors(k):
        cols.append(e)
        cols.append(tuple(-x for x in e))
    cols.append((1,) * k)
    cols.append((-1,) * k)
    return LatticePolytope(k, cols)


def pseudo_del_pezzo(k: int) -> LatticePolytope:
    if k < 2 or k % 2:
        raise ValueError("pseudo-del Pezzo dimension must be even and >= 2")
    cols = []
    for e in _basis_vectors(k):
        cols.append(e)
        cols.append(tuple(-x for x in e))
    cols.append((-1,) * k)
    return LatticePolytope(k, cols)


def facet_count_del_pezzo(k: int) -> int:
    if k < 2 or k % 2:
        raise ValueError("del Pezzo dimension must be even and >= 2")
    return (k + 1) * comb(k, k // 2)


def facet_count_pseudo_del_pezzo(k: int) -> int:
    if k < 2 or k % 2:
        raise ValueError("pseudo-del Pezzo dimension must be even and >= 2")
    return k * comb(k - 1, k // 2) + sum(comb(k, i) for i in range(k // 2, k + 1))


def ones_row_wirth(d: int) -> WirthMatrix:
    """The Wirth matrix with 2's on the first d-1 diagonal slots and a final
    all-ones row."""
    if d < 2:
        raise ValueError("dimension must be >= 2")
    return WirthMatrix(d, d - 1, ((1,) * (d - 1),))


def d_polytope(d: int) -> LatticePolytope:
    """The crosspolytope D_d, the unique maximizer of the lattice-point count."""
    return polytope_from_wirth(ones_row_wirth(d))


def dual_of_d_polytope(d: int) -> LatticePolytope:
    """The dual of D_d written out explicitly: +-(last dual basis vector minus
    any 0/1 combination of the first d-1), a polytope whose 2^d vertices are
    its only boundary lattice points."""
    if d < 2:
        raise ValueError("dimension must be >= 2")
    cols = []
    for mask in range(1 << (d - 1)):
        v = tuple(-((mask >> i) & 1) for i in range(d - 1)) + (1,)
        cols.append(v)
        cols.append(tuple(-x for x in v))
    return LatticePolytope(d, cols)


def free_sum(*parts: LatticePolytope) -> LatticePolytope:
    """Block-diagonal free sum: each part keeps its own coordinates, padded
    with zeros; the vertex set is the union of the padded vertex sets."""
    if not parts:
        raise ValueError("free_sum needs at least one part")
    if len(parts) == 1:
        return parts[0]
    total = sum(p.dim for p in parts)
    cols = []
    offset = 0
    for p in parts:
        for v in p.vertex_columns:
            cols.append((0,) * offset + v + (0,) * (total - offset - p.dim))
        offset += p.dim
    return LatticePolytope(total, cols)
