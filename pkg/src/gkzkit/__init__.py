"""Exact combinatorics of A-hypergeometric (GKZ) systems."""

__version__ = "0.1.0"

from .errors import GkzError, ParseError
from .fuchs import ThetaOperator, fuchs_polygon, fuchs_slope_from_L_slope
from .gkz import (
    GeneralForm,
    PFQForm,
    UnivariateOp,
    algebraicity_check,
    apply_system,
    assemble,
    beukers_sigma,
    gamma_series,
    generic_rank,
    gkz_to_univariate,
    interlacing_test,
    is_resonant,
    is_strongly_resonant,
    monomial_curve_rank,
    slopes_along_hyperplane,
    univariate_to_gkz,
)
from .hodge import HypergeomParams, fedorov_numbers, operator_from_params, sabbah_yu_numbers
from .lattice import GkzMatrix, Tri, inspect_matrix, is_saturated, lattice_index, validate
from .linalg import hermite_rows, kernel_basis, smith_normal_form
from .polyhedral import (
    char_cycle_multiplicity,
    face_lattice,
    regular_triangulation,
    semigroup_holes,
    simplicial_volume,
    umbrella,
    umbrella_jumps,
)
from .toric import (
    MonomialIdeal,
    initial_complex,
    initial_ideal,
    irreducible_decomposition,
    standard_pairs,
    toric_ideal_generators,
)
