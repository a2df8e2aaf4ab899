"""Exact computer algebra for multiplicative Hom-Lie structure varieties.

The package computes over the rationals: reduced Groebner bases and ideal
operations (poly, groebner, ideals), structure-constant Lie algebras
(liealg, linalg), defining ideals and parametric families of Hom-Lie
structures (varieties, families, gl2), and derivation spaces with their
Hilbert series (derivations).  The ``homlie`` console script exposes every
pipeline.
"""

from .derivations import (
    DerivationSpace,
    HilbertSeries,
    PowerProfile,
    derivation_equations_hold,
    derivation_space,
    hilbert_series,
    matrix_power_profile,
    rho_map,
)
from .groebner import (
    BudgetExhaustedError,
    groebner_basis,
    normal_form,
    reduce_with_quotients,
    s_polynomial,
)
from .ideals import Ideal, WholeRingError, radical_membership
from .liealg import (
    LieAlgebra,
    gl,
    gl_slz,
    heisenberg,
    load_lie_algebra,
    sl,
    upper_triangular,
)
from .linalg import Matrix
from .poly import MonomialOrder, PolyParseError, PolyRing, Polynomial, RingMismatchError
from .varieties import (
    Classification,
    HomLieSystem,
    ParamMatrix,
    VerificationReport,
    classify_matrix,
    component_dimension,
    generate_homlie_ideal,
    load_param_matrix,
    verify_family,
)

__version__ = "0.1.0"
