"""Known-good reference data used across the test suite.

ONE_MINIMAL_BY_DIM holds the published equivalence-class representatives of
1-minimal Wirth matrices for dimensions up to six; SPLITTING_COUNTS gives,
per dimension, how many of those classes define a crosspolytope that splits
into smaller factors. SEVEN_VERTEX_4D is the lone simplicial (non-smooth,
non-pseudo-symmetric) reflexive 4-polytope with 7 vertices and 14 facets.
"""

ONE_MINIMAL_BY_DIM = {
    1: [],
    2: [
        [[2, 0], [1, 1]],
    ],
    3: [
        [[2, 0, 0], [0, 2, 0], [1, 1, 1]],
    ],
    4: [
        [[2, 0, 0, 0], [1, 1, 0, 0], [1, 0, 1, 0], [1, 0, 0, 1]],
        [[2, 0, 0, 0], [0, 2, 0, 0], [1, 0, 1, 0], [0, 1, 0, 1]],
        [[2, 0, 0, 0], [0, 2, 0, 0], [0, 0, 2, 0], [1, 1, 1, 1]],
    ],
    5: [
        [[2, 0, 0, 0, 0], [0, 2, 0, 0, 0], [1, 1, 1, 0, 0], [1, 1, 0, 1, 0], [1, 1, 0, 0, 1]],
        [[2, 0, 0, 0, 0], [0, 2, 0, 0, 0], [0, 0, 2, 0, 0], [1, 0, 0, 1, 0], [0, 1, 1, 0, 1]],
        [[2, 0, 0, 0, 0], [0, 2, 0, 0, 0], [0, 0, 2, 0, 0], [0, 0, 0, 2, 0], [1, 1, 1, 1, 1]],
    ],
    6: [
        [[2, 0, 0, 0, 0, 0], [1, 1, 0, 0, 0, 0], [1, 0, 1, 0, 0, 0],
         [1, 0, 0, 1, 0, 0], [1, 0, 0, 0, 1, 0], [1, 0, 0, 0, 0, 1]],
        [[2, 0, 0, 0, 0, 0], [0, 2, 0, 0, 0, 0], [1, 0, 1, 0, 0, 0],
         [1, 0, 0, 1, 0, 0], [1, 0, 0, 0, 1, 0], [0, 1, 0, 0, 0, 1]],
        [[2, 0, 0, 0, 0, 0], [0, 2, 0, 0, 0, 0], [1, 1, 1, 0, 0, 0],
         [1, 1, 0, 1, 0, 0], [1, 0, 0, 0, 1, 0], [0, 1, 0, 0, 0, 1]],
        [[2, 0, 0, 0, 0, 0], [0, 2, 0, 0, 0, 0], [0, 0, 2, 0, 0, 0],
         [1, 0, 0, 1, 0, 0], [0, 1, 0, 0, 1, 0], [0, 0, 1, 0, 0, 1]],
        [[2, 0, 0, 0, 0, 0], [0, 2, 0, 0, 0, 0], [0, 0, 2, 0, 0, 0],
         [1, 1, 1, 1, 0, 0], [1, 0, 0, 0, 1, 0], [1, 0, 0, 0, 0, 1]],
        [[2, 0, 0, 0, 0, 0], [0, 2, 0, 0, 0, 0], [0, 0, 2, 0, 0, 0],
         [1, 1, 1, 1, 0, 0], [1, 1, 0, 0, 1, 0], [1, 1, 0, 0, 0, 1]],
        [[2, 0, 0, 0, 0, 0], [0, 2, 0, 0, 0, 0], [0, 0, 2, 0, 0, 0],
         [0, 0, 0, 2, 0, 0], [1, 1, 1, 0, 1, 0], [0, 0, 0, 1, 0, 1]],
        [[2, 0, 0, 0, 0, 0], [0, 2, 0, 0, 0, 0], [0, 0, 2, 0, 0, 0],
         [0, 0, 0, 2, 0, 0], [1, 1, 0, 0, 1, 0], [0, 0, 1, 1, 0, 1]],
        [[2, 0, 0, 0, 0, 0], [0, 2, 0, 0, 0, 0], [0, 0, 2, 0, 0, 0],
         [0, 0, 0, 2, 0, 0], [0, 0, 0, 0, 2, 0], [1, 1, 1, 1, 1, 1]],
    ],
}

ONE_MINIMAL_CLASS_COUNTS = {1: 0, 2: 1, 3: 1, 4: 3, 5: 3, 6: 9}
SPLITTING_COUNTS = {4: 1, 5: 1, 6: 4}

CLASS_COUNTS = {1: 1, 2: 4, 3: 5, 4: 15, 5: 20, 6: 50}
SMOOTH_CLASS_COUNTS = {1: 1, 2: 3, 3: 3, 4: 8, 5: 8, 6: 18}

SEVEN_VERTEX_4D = [
    (1, 0, 0, 0),
    (0, 1, 0, 0),
    (0, 0, 1, 0),
    (0, 0, 0, 1),
    (-2, 0, -1, 0),
    (0, -2, 0, -1),
    (1, 1, 1, 1),
]
