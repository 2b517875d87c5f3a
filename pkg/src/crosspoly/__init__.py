"""Exact-arithmetic classification of pseudo-symmetric simplicial reflexive
polytopes: integer linear algebra, lattice polytope predicates and duality,
Wirth-matrix calculus, the splitting into irreducible factors, canonical
forms, and verifiers for the structural bounds."""

from .linalg import (
    IntMatrix,
    RationalVector,
    SingularMatrixError,
    determinant,
    gcd_of_maximal_minors,
    hermite_normal_form,
    is_unimodular,
    solve_rational,
)
from .polytope import (
    Facet,
    InvalidPolytopeError,
    LatticePointReport,
    LatticePolytope,
    PolytopeFormatError,
    format_polytope_text,
    from_vertices,
    parse_polytope_text,
)
from .wirth import (
    InvalidWirthMatrixError,
    Reduction,
    WirthMatrix,
    enumerate_one_minimal,
    equivalent,
    polytope_from_wirth,
    wirth_from_crosspolytope,
)
from .catalog import (
    FanoFactor,
    cube,
    d_polytope,
    del_pezzo,
    dual_of_d_polytope,
    facet_count_del_pezzo,
    facet_count_pseudo_del_pezzo,
    free_sum,
    ones_row_wirth,
    pseudo_del_pezzo,
    segment,
)
from .classify import (
    BoundCheck,
    CanonicalForm,
    Decomposition,
    DecompositionError,
    PseudoSymFrame,
    TheoremReport,
    canonical_form,
    classify,
    classify_smooth,
    compose,
    decompose,
    dual_embedding_bound,
    embed_in_cube,
    is_isomorphic,
    pseudo_frame,
    verify_theorems,
    wirth_basis,
)

__version__ = "0.1.0"
