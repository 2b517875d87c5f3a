"""Wirth-matrix calculus.

A Wirth matrix is the block matrix (2*id_f, 0; C, id_{d-f}) where C is a
0/1 block whose columns all have odd weight. Up to column permutation and
left multiplication by a unimodular matrix these matrices classify the
centrally symmetric reflexive crosspolytopes; the 1-minimal ones (no
deletable unit row) classify the crosspolytopes that split off no segment.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, permutations
from math import gcd

from .linalg import IntMatrix, hermite_normal_form
from .polytope import Facet, InvalidPolytopeError, LatticePolytope


class InvalidWirthMatrixError(ValueError):
    """Raised when a matrix does not have the literal Wirth block pattern."""


@dataclass(frozen=True)
class WirthMatrix:
    """Typed Wirth matrix: dimension, block size f, and the C block given as
    (dim - f) rows of length f."""

    dim: int
    f: int
    c: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.dim < 0 or self.f < 0 or (self.dim > 0 and self.f > self.dim - 1):
            raise InvalidWirthMatrixError(f"f must lie in [0, {self.dim - 1}]")
        if len(self.c) != self.dim - self.f:
            raise InvalidWirthMatrixError("C block has the wrong number of rows")
        for row in self.c:
            if len(row) != self.f or any(x not in (0, 1) for x in row):
                raise InvalidWirthMatrixError("C block must be 0/1 with f columns")
        for j in range(self.f):
            if sum(row[j] for row in self.c) % 2 == 0:
                raise InvalidWirthMatrixError(f"column {j} of C has even weight")

    def assembled(self) -> IntMatrix:
        d, f = self.dim, self.f
        rows = []
        for i in range(f):
            rows.append(tuple(2 if j == i else 0 for j in range(d)))
        for k, c_row in enumerate(self.c):
            rows.append(tuple(c_row) + tuple(1 if j == k else 0 for j in range(d - f)))
        return IntMatrix(rows)

    def columns(self) -> tuple[tuple[int, ...], ...]:
        return self.assembled().columns()

    def determinant(self) -> int:
        return 2**self.f

    def is_one_minimal(self) -> bool:
        return all(any(row) for row in self.c)

    def to_dict(self) -> dict:
        return {"dim": self.dim, "f": self.f, "c": [list(row) for row in self.c]}

    @classmethod
    def from_dict(cls, data: dict) -> "WirthMatrix":
        return cls(int(data["dim"]), int(data["f"]), tuple(tuple(int(x) for x in row) for row in data["c"]))


@dataclass(frozen=True)
class Reduction:
    """1-minimal core of a Wirth matrix plus the count of deleted segment
    directions; kept_indices maps core rows/columns back to the original."""

    core: WirthMatrix
    r: int
    kept_indices: tuple[int, ...]


def validate(m: IntMatrix) -> WirthMatrix:
    """Accept exactly the matrices in literal Wirth block form."""
    if not m.is_square:
        raise InvalidWirthMatrixError("Wirth matrices are square")
    d = m.rows
    if d == 0:
        raise InvalidWirthMatrixError("empty matrix")
    diag = [m.entries[i][i] for i in range(d)]
    f = 0
    while f < d and diag[f] == 2:
        f += 1
    if f == d:
        raise InvalidWirthMatrixError("f = d is not allowed (vertices would not be primitive)")
    for i in range(f, d):
        if diag[i] != 1:
            raise InvalidWirthMatrixError(f"diagonal entry {diag[i]} at {i} breaks the block pattern")
    for i in range(f):
        if any(m.entries[i][j] != (2 if j == i else 0) for j in range(d)):
            raise InvalidWirthMatrixError(f"row {i} is not 2*e_{i}")
    for i in range(f, d):
        for j in range(f, d):
            if m.entries[i][j] != (1 if j == i else 0):
                raise InvalidWirthMatrixError("identity block is broken")
        for j in range(f):
            if m.entries[i][j] not in (0, 1):
                raise InvalidWirthMatrixError("C block entries must be 0 or 1")
    c = tuple(tuple(m.entries[i][:f]) for i in range(f, d))
    return WirthMatrix(d, f, c)  # column parity checked by the constructor


def reduce(a: WirthMatrix) -> Reduction:
    """Delete every identity-block row with all-zero C part (and its column),
    leaving the 1-minimal core."""
    kept_c_rows = [k for k, row in enumerate(a.c) if any(row)]
    r = (a.dim - a.f) - len(kept_c_rows)
    core = WirthMatrix(a.f + len(kept_c_rows), a.f, tuple(a.c[k] for k in kept_c_rows))
    kept = tuple(range(a.f)) + tuple(a.f + k for k in kept_c_rows)
    return Reduction(core=core, r=r, kept_indices=kept)


def _column_parities(a: WirthMatrix) -> list[int]:
    """Bitmask of each assembled column mod 2."""
    masks = []
    for col in a.assembled().columns():
        mask = 0
        for i, x in enumerate(col):
            if x & 1:
                mask |= 1 << i
        masks.append(mask)
    return masks


def equivalent(a: WirthMatrix, b: WirthMatrix) -> bool:
    """True iff some column permutation pi makes a^pi @ b^-1 integral (and
    then automatically unimodular, since the determinants agree).

    Since b^-1 = (id_f/2, 0; -C/2, id), integrality only constrains the first
    f product columns, and only through the columns of a mod 2. The search
    therefore runs over assignments of parity classes of a's columns to b's
    unit slots; b's C-block columns then pin the required parity of whatever
    fills each doubled slot.
    """
    if a.dim != b.dim:
        raise ValueError("dimension mismatch")
    if a.f != b.f:
        return False  # determinants 2^f differ
    d, f = a.dim, a.f
    m = d - f
    counts = Counter(_column_parities(a))
    supports = [
        tuple(i for i in range(m) if b.c[i][j]) for j in range(f)
    ]

    parities = list(counts)
    slot_parity = [0] * m

    def assign(slot: int) -> bool:
        if slot == m:
            needed = Counter()
            for supp in supports:
                t = 0
                for i in supp:
                    t ^= slot_parity[i]
                needed[t] += 1
            return needed == counts
        for p in parities:
            if counts[p] == 0:
                continue
            counts[p] -= 1
            slot_parity[slot] = p
            if assign(slot + 1):
                counts[p] += 1
                return True
            counts[p] += 1
        return False

    return assign(0)


def _gcd_of_k_minors(columns: list[tuple[int, ...]]) -> int:
    """Gcd of all maximal minors of the matrix with the given columns."""
    from .linalg import _det

    k = len(columns)
    d = len(columns[0])
    g = 0
    for rows in combinations(range(d), k):
        minor = _det([[columns[j][i] for j in range(k)] for i in rows])
        g = gcd(g, minor)
        if g == 1:
            return 1
    return g


def splits(a: WirthMatrix) -> bool:
    """Whether the crosspolytope of a splits into two smaller factors.

    A column split S | T works exactly when the product of the column
    lattices' indices (gcds of maximal minors) equals det(a), i.e. the
    normalized volume is multiplicative across the split.
    """
    cols = list(a.assembled().columns())
    d = a.dim
    det = a.determinant()
    for size in range(1, d // 2 + 1):
        for subset in combinations(range(d), size):
            rest = [i for i in range(d) if i not in subset]
            left = _gcd_of_k_minors([cols[i] for i in subset])
            right = _gcd_of_k_minors([cols[i] for i in rest])
            if left * right == det:
                return True
    return False


def _orbit_min_c(c: tuple[tuple[int, ...], ...], f: int) -> tuple[tuple[int, ...], ...]:
    """Row-major minimum of C over column permutations and row sorting (these
    generate all Wirth matrices equivalent to C by pure index relabeling)."""
    best = None
    for perm in permutations(range(f)):
        candidate = tuple(sorted(tuple(row[j] for j in perm) for row in c))
        if best is None or candidate < best:
            best = candidate
    return best


@lru_cache(maxsize=None)
def enumerate_one_minimal(d: int) -> tuple[WirthMatrix, ...]:
    """One representative per equivalence class of 1-minimal Wirth matrices
    of dimension d, each the row-major-least assembled matrix of its class,
    in deterministic order."""
    if d < 0:
        raise ValueError("dimension must be nonnegative")
    if d < 2:
        return ()
    result = []
    for f in range(1, d):
        m = d - f
        odd_columns = [
            tuple((mask >> i) & 1 for i in range(m))
            for mask in range(1 << m)
            if bin(mask).count("1") % 2 == 1
        ]
        seen = set()
        candidates = []
        for combo in combinations_with_replacement(range(len(odd_columns)), f):
            c_rows = tuple(
                tuple(odd_columns[j][i] for j in combo) for i in range(m)
            )
            if any(not any(row) for row in c_rows):
                continue  # not 1-minimal
            canon = _orbit_min_c(c_rows, f)
            if canon in seen:
                continue
            seen.add(canon)
            candidates.append(WirthMatrix(d, f, canon))
        classes: list[list[WirthMatrix]] = []
        for cand in candidates:
            for cls in classes:
                if equivalent(cand, cls[0]):
                    cls.append(cand)
                    break
            else:
                classes.append([cand])
        for cls in classes:
            rep = min(cls, key=lambda w: w.assembled().entries)
            result.append(rep)
    result.sort(key=lambda w: (w.f, w.assembled().entries))
    return tuple(result)


def polytope_from_wirth(a: WirthMatrix) -> LatticePolytope:
    """The cs-crosspolytope conv(+-columns of a)."""
    if a.dim < 1:
        raise ValueError("cannot build a polytope from a 0-dimensional matrix")
    cols = a.columns()
    try:
        return LatticePolytope(a.dim, cols + tuple(tuple(-x for x in c) for c in cols))
    except InvalidPolytopeError as exc:  # cannot happen for valid Wirth input
        raise RuntimeError(f"internal failure building crosspolytope: {exc}") from exc


def wirth_from_crosspolytope(
    p: LatticePolytope, facet: Facet
) -> tuple[WirthMatrix, IntMatrix]:
    """Recover a Wirth matrix from a facet of a reflexive cs-crosspolytope.

    Returns (a, u) with u unimodular and u applied to the facet's vertices
    (in the column order chosen here) giving exactly the columns of a.
    """
    if p.n_vertices != 2 * p.dim or not p.is_simplicial() or not p.is_centrally_symmetric():
        raise InvalidPolytopeError("input is not a cs-crosspolytope")
    if not p.is_reflexive():
        raise InvalidPolytopeError("input crosspolytope is not reflexive")
    l = p.facet_matrix(facet)
    h, u0 = hermite_normal_form(l)
    diag = [h.entries[i][i] for i in range(p.dim)]
    if any(x not in (1, 2) for x in diag):
        raise InvalidPolytopeError(
            f"facet basis has normal-form diagonal {diag}; not a reflexive cs-crosspolytope"
        )
    order = sorted(range(p.dim), key=lambda i: 0 if diag[i] == 2 else 1)
    a_rows = [[h.entries[i][j] for j in order] for i in order]
    try:
        wirth = validate(IntMatrix(a_rows))
    except InvalidWirthMatrixError as exc:
        raise RuntimeError(f"internal failure: permuted normal form is not Wirth: {exc}") from exc
    u = IntMatrix([u0.entries[i] for i in order])
    return wirth, u
