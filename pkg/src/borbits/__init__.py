"""B-orbits of square-zero strictly upper-triangular matrices.

Orbits are labelled by involutions; the closure order is entrywise order on
rank matrices.  See the submodules for covers, ideals, tableaux and the
verification oracles.
"""
from .covers import (
    CoverMove,
    brute_force_lower_covers,
    closure,
    cover_moves,
    cover_right,
    cover_up,
    covers_cross,
    covers_swap,
    hasse_diagram,
    lower_covers_lower_rank,
    lower_covers_same_rank,
)
from .ideals import GeneratorSet, i2_generators, ideal_generators, shape_ideal_generators
from .involutions import (
    Involution,
    drop_cycle,
    enumerate_involutions,
    m_set,
    matrix_of,
    orbit_dimension,
    orbit_shape,
    project,
    r_values,
)
from .polynomials import SymPolynomial, evaluate, parse, serialize
from .rank import (
    OrderRelation,
    classify_local,
    compare,
    involution_of_rank_matrix,
    is_valid_rank_matrix,
    rank_matrix,
    rank_matrix_of,
    shape_dominance_leq,
    shape_matrix_of,
)
from .tableaux import (
    TwoColumnTableau,
    involution_of_tableau,
    orbital_closure,
    orbital_variety_orbits,
    tableau_covers,
    tableau_leq,
    tableau_move,
)

__version__ = "0.1.0"
