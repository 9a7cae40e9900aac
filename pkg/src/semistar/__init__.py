"""Exact fractional-ideal arithmetic and semistar operations over a
catalogue of effectively-representable integral domains."""

from .errors import (
    CutoffNotStabilized,
    ModelMismatch,
    NotAnOverring,
    NotClosed,
    NotFinitelyGenerated,
    NotFiniteType,
    NotFractional,
    NotInvertibleExtension,
    OverringNotInCatalogue,
    ParseError,
    RawOutsideFamily,
    SearchExhausted,
    SemistarError,
    TrivialOperation,
    ZeroModule,
)
from .models import (
    ZERO,
    DomainModel,
    IdealDescriptor,
    PrimeSite,
    default_models,
    make_model,
    model_from_compact,
    model_from_spec,
)
from .operations import (
    OpFlags,
    QuasiSpectrum,
    SemistarOperation,
    axiom_check,
    closure,
    finite_type_of,
    ft_of,
    identity_operation,
    induced_on_overring,
    make_identity,
    make_overring,
    make_spectral,
    make_v,
    make_v_of_star_image,
    op_leq,
    quasi_spectrum,
    stable_of,
    tilde_of,
    v_operation,
    vstar_of,
)
from .invertibility import (
    InvertibilityVerdict,
    check_invertible_implies_finite,
    group_check,
    h_domain_equivalence_suite,
    invertibility_identity_suite,
    invertibility_verdict,
    invertibility_witness,
    is_h_star_domain,
    is_quasi_star_invertible,
    is_star_invertible,
    localization_criterion,
    quasi_inverse,
    quasi_vs_star_bridge,
    semistar_product,
    star_f_tilde_bridge,
    star_finite_witness,
    strict_finite_witness,
)
from .nagata import (
    ContentPolynomial,
    NagataIdealRef,
    content,
    content_invertible_bridge,
    glue_principal_generator,
    in_nagata_multiplicative_set,
    nagata_invertible,
    nagata_refs_equal,
    polynomial_mul,
    saturation_check,
)
from .registry import (
    catalogue_ops,
    finite_type_catalogue_ops,
    parse_descriptor,
    parse_operation,
    parse_polynomial,
)
from .harness import FIXTURES, run_fixtures, run_scenario, run_scenario_dict
from .report import Report
from .suite import LAWS, LawResult, run_property_suite

__version__ = "0.1.0"
