"""weyldix: exact computations in the first Weyl algebra.

The package realizes A1 = K[H](sigma, H) inside the skew Laurent ring
B = Q(H)[X, X^-1; sigma] and computes, for homogeneous elements: canonical
centralizer generators, the nilpotent filtration N(u, A1) with its
principal basis and nilpotent degrees, the ideals I_k of Dixmier's fifth
problem, and the Dixmier class -- each closed form cross-checkable against
a brute-force truncated linear-algebra oracle.
"""

from .centralizer import (
    CENTRALIZER_FIELD,
    CENTRALIZER_POLYRING,
    CanonicalGenerator,
    CentralizerA1,
    IterationLimitError,
    NotInFiltrationError,
    NStructure,
    canonical_generator,
    centralizer_A1,
    centralizer_B,
    n_membership,
    n_structure,
    ndeg,
    predicted_ndeg,
    principal_basis,
    solve_beta,
    twisted_product,
)
from .dixmier import (
    DixmierClass,
    EigenReport,
    GlobalDimension,
    GwaPresentation,
    IdealDescriptor,
    PowerIdentity,
    Problem5Report,
    classify,
    delta_power_identities,
    dimension_growth,
    eigen_decompose,
    global_dimension_N,
    gwa_relations_hold,
    ideal_I,
    is_simple_N,
    n_gwa_presentation,
    problem5_report,
    type_change_check,
)
from .gwa import (
    RING_A1,
    RING_B,
    RING_LAURENT,
    GradedElement,
    HomogeneousElement,
    ad,
    ad_power,
    from_ratfunc,
    from_v_term,
    h_element,
    membership,
    one,
    phi,
    structure_constant,
    v_element,
    v_normalizer,
    x_element,
    y_element,
    y_power_in_x_basis,
    zero,
)
from .oracle import (
    Box,
    ExactMatrix,
    OracleIdealResult,
    ad_matrix,
    exact_nullspace,
    kernel_power,
    matrix_rank,
    oracle_ideal,
    saturation_check,
    spans_equal,
)
from .parsing import (
    ParseError,
    RingMembershipError,
    element_from_json_dict,
    element_to_json_dict,
    format_element,
    parse,
)
from .polynomials import (
    NEG_INF,
    Factorization,
    OrbitProfile,
    Poly,
    factor,
    format_poly,
    orbit_decompose,
    poly_gcd,
    shift_offset,
)
from .ratfunc import RatFunc
from .verify import VerificationCheck, closed_form_kernel, verify_element, worst_verdict

__version__ = "0.1.0"
