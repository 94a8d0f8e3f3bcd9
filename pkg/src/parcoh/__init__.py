"""Exact-arithmetic invariants of compact complex parallelizable manifolds.

Given structure constants of a complex Lie algebra over Q(√d)(i) and finite
lattice data, computes the first structure-sheaf cohomology dimension, first
Betti numbers, the rigidity verdict, and the Albanese dimension.
"""

from .errors import (
    AnalysisError,
    BadEigenvalueCertificate,
    BadParams,
    InputFormatError,
    JacobiViolation,
    LiftFailure,
    MalformedWord,
    MissingAbelianizationImages,
    MissingB1Input,
    MissingInputError,
    NoB1Data,
    NonRealCoefficients,
    NonRealInput,
    NotAutomorphism,
    NotInvariant,
    NotSemisimple,
    PerfectSquareInput,
    ScalarFieldTooSmall,
    Singular,
    ValidationError,
)
from .field import FieldDescriptor, FieldElement, format_element, parse_element, sign_real
from .poly import Poly, real_roots_in_field, sturm_real_root_count
from .linalg import Quotient, Subspace, matrix_min_poly, real_eigenspace_sum
from .zmod import SmithDecomposition, abelianization_rank, hermite_normal_form, smith_normal_form
from .liealg import (
    CharacteristicIdeals,
    LieAlgebraData,
    StructureReport,
    algebra_from_matrix_basis,
    characteristic_ideals,
    conjugate_structure,
    levi_subalgebra,
    simple_ideal_decomposition,
    structure_report,
)
from .lattice import (
    GeneratorData,
    InducedAction,
    LatticeData,
    Presentation,
    induced_quotient_action,
    validate_automorphism,
    validate_lattice,
)
from .closure import ClosedSubgroupDescription, albanese_dimension, subgroup_closure
from .invariants import (
    InvariantReport,
    PipelineResult,
    RealCoreResult,
    analyze,
    h1_dimension,
    manifold_b1,
    semisimple_quotient_b1,
    semisimple_real_core,
)
from .inputs import AnalysisInput, AnalysisOptions, conjugated_input, parse_analysis_input
from .examples import EXAMPLE_KINDS, build_example, pell_fundamental

__version__ = "0.1.0"
