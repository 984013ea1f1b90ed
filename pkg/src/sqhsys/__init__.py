"""Semi-quasi-homogeneous planar polynomial systems: enumeration, canonical
forms and center verification."""

from .poly import Monomial, Polynomial, VectorField, ZERO_DEGREE
from .weights import (
    StructuralReport,
    StructureError,
    WeightVector,
    find_weight_vectors,
    index_of,
    is_semihomogeneous,
    is_weight_vector,
    minimal_weight_vector,
    scale_weight,
    structural_report,
    swap_variables,
    weight_residuals,
)

__version__ = "0.1.0"
from .enumerator import Family, enumerate_all, enumeration_report
from .canonical import (
    CanonicalError,
    CanonicalLabel,
    Scaling,
    apply_scaling,
    reduce_cubic,
    reduce_quadratic,
)
from .dynamics import (
    BlowupSpec,
    ExpPolynomial,
    SingularityKind,
    bendixson_excludes,
    divergence,
    invariant_axis,
    rk4_integrate,
    sign_definite_component,
    verify_first_integral,
    verify_lyapunov,
    weighted_blowup,
)
from .centers import center_report
