"""Shared helpers for the test suite."""

from crosspoly.linalg import IntMatrix
from crosspoly.polytope import LatticePolytope


def random_unimodular(d, rng, max_entry=40):
    """Bounded random product of elementary row operations and sign flips."""
    while True:
        u = [[1 if i == j else 0 for j in range(d)] for i in range(d)]
        for _ in range(3 * d):
            kind = rng.randrange(3)
            i, j = rng.sample(range(d), 2) if d > 1 else (0, 0)
            if kind == 0 and i != j:
                c = rng.choice((-1, 1))
                for t in range(d):
                    u[i][t] += c * u[j][t]
            elif kind == 1 and i != j:
                u[i], u[j] = u[j], u[i]
            else:
                u[i] = [-x for x in u[i]]
        if max(abs(x) for row in u for x in row) <= max_entry:
            return IntMatrix(u)


def transform(p, u):
    """Apply a unimodular matrix to every vertex of a polytope."""
    return LatticePolytope(p.dim, [u.apply(v) for v in p.vertex_columns])
