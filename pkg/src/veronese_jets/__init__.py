"""Exact jet rings of Veronese curves, sl2 current modules, and q-characters.

Everything is computed over arbitrary-precision rationals: truncated
q-series and weight characters, sparse multigraded polynomials, exact
echelon ranks of graded pieces, jet-ideal quotients, cyclic module
closures with their operator actions and fibers, fusion filtrations,
supernomial character formulas, and the symmetric-function identities
connecting them.
"""

from .characters import (
    demazure_character,
    demazure_level_vector,
    demazure_qdegree_bound,
    global_demazure_character,
    hilbert_leading_quotient,
    qbinom,
    supernomial,
    weyl_character,
)
from .echelon import KERNEL_IMPLEMENTATION, GradedPieceMatrix
from .errors import StabilizationError, TruncationError
from .jets import (
    JetRingSpec,
    kernel_membership,
    leading_term_relations,
    quadratic_relations,
    quotient_character,
    relation_dump,
    relation_index_set,
    verify_reduced,
)
from .modules import (
    GradedBasis,
    ModuleSpec,
    apply_current,
    build_global_demazure,
    cartan_product_law_check,
    default_fiber_qmax,
    demazure_relation_check,
    fiber_dimension,
    fusion_character,
    lowering_sum,
    operator_closure_report,
    power_sum,
)
from .poly import SparsePoly, TSeries, multidegree, render_poly, veronese_images, x_series
from .qseries import LaurentCharacter, QSeries, q_pochhammer
from .symfun import (
    elementary_z,
    expand_power_sums,
    newton_to_elementary,
    omitted_elementary_products,
    power_sum_z,
    to_power_sums,
)

__version__ = "0.1.0"

__all__ = [
    "GradedBasis",
    "GradedPieceMatrix",
    "JetRingSpec",
    "KERNEL_IMPLEMENTATION",
    "LaurentCharacter",
    "ModuleSpec",
    "QSeries",
    "SparsePoly",
    "StabilizationError",
    "TSeries",
    "TruncationError",
    "apply_current",
    "build_global_demazure",
    "cartan_product_law_check",
    "default_fiber_qmax",
    "demazure_character",
    "demazure_level_vector",
    "demazure_relation_check",
    "demazure_qdegree_bound",
    "elementary_z",
    "expand_power_sums",
    "fiber_dimension",
    "fusion_character",
    "global_demazure_character",
    "hilbert_leading_quotient",
    "kernel_membership",
    "leading_term_relations",
    "lowering_sum",
    "multidegree",
    "newton_to_elementary",
    "omitted_elementary_products",
    "operator_closure_report",
    "power_sum",
    "power_sum_z",
    "q_pochhammer",
    "qbinom",
    "quadratic_relations",
    "quotient_character",
    "relation_dump",
    "relation_index_set",
    "render_poly",
    "supernomial",
    "to_power_sums",
    "verify_reduced",
    "veronese_images",
    "weyl_character",
    "x_series",
]
