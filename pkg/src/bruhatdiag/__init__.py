"""Diagonal factors of Cartan-embedded symmetric-space points.

For the five classical compact families, this package builds tangent
matrices from free coordinates, pushes them through the Cayley map, and
computes the diagonal term of the unpivoted LDU factorization by several
independent routes that cross check each other.  It also enumerates the
sign-vector representatives of the connected components of the generic
stratum and drives the scaling limits that exhibit them.
"""

from .bruhat import (
    BranchAmbiguityError,
    DiagonalReport,
    LDUFactorization,
    NonGenericError,
    cross_check,
    diagonal_via_cayley,
    diagonal_via_coroots,
    diagonal_via_fredholm,
    diagonal_via_gauss,
    diagonal_via_minors,
    flipped_determinants,
    ldu,
    max_cross_gap,
    point_genericity,
    relative_gap,
    tangent_genericity,
    unbalanced_minor_max,
)
from .cayley import ImageReport, cayley, cayley_inverse, verify_image
from .components import (
    ComponentRep,
    LimitReport,
    construct_witness,
    enumerate_components,
    limit_check,
)
from .linalg import (
    ExpansionLimitError,
    IndexSet,
    antitranspose,
    det,
    matrix_from_json,
    matrix_to_json,
    principal_block,
    principal_minor_expansion,
    signature_matrix,
    submatrix,
)
from .repcompat import (
    ConjugacyReport,
    conjugator,
    symplectic_conjugator,
    verify_conjugacy,
)
from .spaces import (
    Coordinates,
    CorootSystem,
    SpaceSpec,
    TangentReport,
    aiii,
    bdi,
    build_tangent,
    ci,
    cii,
    coordinates_from_json,
    coordinates_to_json,
    coroots,
    diii,
    involution_apply,
    involution_matrix,
    random_coordinates,
    validate_tangent,
    zero_coordinates,
)

__version__ = "0.1.0"
