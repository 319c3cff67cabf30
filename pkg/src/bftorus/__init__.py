"""Exact invariants of toral automorphisms and integer matrices.

Bowen-Franks groups BF_g(A) = Z^n / g(A) Z^n, the periodic-point groups
they compute, the Latimer--MacDuffee--Taussky dictionary between
conjugacy classes of matrices and ideal classes, the finite lattice of
orders of a number field, and sound (never bluffing) decision
procedures for BF-, L- and strong-BF-equivalence.

Everything is exact integer / rational arithmetic; there is no floating
point anywhere.
"""

from .errors import (
    BFTorusError,
    CharPolyMismatch,
    DegeneratePeriod,
    DependentBasis,
    FactorizationIncomplete,
    NonIntegralResult,
    NotASublattice,
    NotFullRank,
    NotMonic,
    ReduciblePolynomial,
    SingularMatrix,
    ZeroInverse,
)
from .exactmat import (
    HermiteBasis,
    SmithDecomposition,
    char_poly,
    det,
    eval_poly_at_matrix,
    hermite_normal_form,
    kernel_mod_m,
    mat_pow,
    rational_inverse,
    smith_normal_form,
)
from .ideals import (
    AbelianGroup,
    FractionalIdeal,
    Order,
    ZLattice,
    coefficient_ring,
    colon,
    fractional_ideal,
    intersect,
    is_divisorial,
    is_invertible,
    lattice_from_generators,
    lattice_sum,
    product,
    quotient_group,
    trace_dual,
    zbeta,
)
from .invariants import (
    BFProfile,
    EquivalenceVerdict,
    PeriodicStructure,
    Pi1Presentation,
    bf_certify,
    bf_group,
    bf_k,
    bf_refute,
    conjugate_mod,
    flow_invariant_pair,
    ideal_to_matrix,
    l_equivalent,
    matrix_to_ideal,
    periodic_structure,
    pi1_presentation,
    strong_bf_refute,
    suspension_h1,
)
from .numberfield import FieldElement, NumberField, minimal_polynomial, norm, trace
from .orders import (
    OrderLattice,
    conductor,
    enumerate_order_lattice,
    maximal_order,
    non_invertible_primes,
    order_discriminant,
)
from .polyring import (
    IntPoly,
    RatPoly,
    discriminant,
    is_irreducible,
    parse_int_poly,
    parse_rat_poly,
)

__version__ = "1.0.0"

__all__ = [
    "AbelianGroup",
    "BFProfile",
    "BFTorusError",
    "CharPolyMismatch",
    "DegeneratePeriod",
    "DependentBasis",
    "EquivalenceVerdict",
    "FactorizationIncomplete",
    "FieldElement",
    "FractionalIdeal",
    "HermiteBasis",
    "IntPoly",
    "NonIntegralResult",
    "NotASublattice",
    "NotFullRank",
    "NotMonic",
    "NumberField",
    "Order",
    "OrderLattice",
    "PeriodicStructure",
    "Pi1Presentation",
    "RatPoly",
    "ReduciblePolynomial",
    "SingularMatrix",
    "SmithDecomposition",
    "ZLattice",
    "ZeroInverse",
    "bf_certify",
    "bf_group",
    "bf_k",
    "bf_refute",
    "char_poly",
    "coefficient_ring",
    "colon",
    "conductor",
    "conjugate_mod",
    "det",
    "discriminant",
    "enumerate_order_lattice",
    "eval_poly_at_matrix",
    "flow_invariant_pair",
    "fractional_ideal",
    "hermite_normal_form",
    "ideal_to_matrix",
    "intersect",
    "is_divisorial",
    "is_invertible",
    "is_irreducible",
    "kernel_mod_m",
    "l_equivalent",
    "lattice_from_generators",
    "lattice_sum",
    "mat_pow",
    "matrix_to_ideal",
    "maximal_order",
    "minimal_polynomial",
    "non_invertible_primes",
    "norm",
    "order_discriminant",
    "parse_int_poly",
    "parse_rat_poly",
    "periodic_structure",
    "pi1_presentation",
    "product",
    "quotient_group",
    "rational_inverse",
    "smith_normal_form",
    "strong_bf_refute",
    "suspension_h1",
    "trace",
    "trace_dual",
    "zbeta",
]
