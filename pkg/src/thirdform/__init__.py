"""Third fundamental form analysis of submanifolds.

Numerical machinery for the form III(X, Y) = sum_i <II(X, e_i), II(Y, e_i)>
of an isometric immersion: direct and curvature-based evaluation, detection
of homothetic behaviour (III a constant multiple of the metric), the adapted
block decomposition of codimension-two shape operator pairs, and a catalog
of closed-form examples the classifier is certified against.
"""

from .errors import (
    AdaptednessViolated,
    BadCurvature,
    BadParams,
    CodimensionUnsupported,
    CurvatureSumZero,
    DegenerateFamily,
    DimensionMismatch,
    InvalidParams,
    MissingRicci,
    NonConstantRho,
    NotBilinear,
    NotFlat,
    NotOnQuadric,
    NotUmbilicalThirdForm,
    NullVector,
    OutOfDomain,
    RankDeficient,
    SamplingFailed,
    SignatureMismatch,
    StepTooLarge,
    ThirdFormError,
    UnequalHalfDimensions,
    UnknownName,
)
from .linalg import (
    InnerProduct,
    commutator_norm,
    complete_frame,
    eig_sym,
    frobenius,
    gram_schmidt,
)
from .forms import (
    AdaptedBlock,
    AdaptedDecomposition,
    BilinearForm2,
    BlockStructure,
    DegenerateBlock,
    PrincipalNormals,
    block_structure,
    conjugate,
    decompose,
    direct_sum,
    generic_normal,
    homothety_factor,
    is_umbilical_form,
    principal_normals,
    rotate_normal_frame,
    simultaneous_eigenspaces,
    synth_block,
    third_form,
    umbilical_subforms_check,
)
from .geometry import (
    Immersion,
    PointData,
    SpaceFormData,
    gauss_consistency,
    point_data,
    reduce_to_space_form,
    ricci_intrinsic,
    third_form_direct,
    third_form_invariant,
)
from .catalog import (
    CatalogEntry,
    FactorSpec,
    ProductSpec,
    default_catalog,
    entry_names,
    extrinsic_product,
    make,
    umbilical_inclusion_product,
)
from .classify import (
    KINDS,
    AnalysisConfig,
    SamplePoint,
    SampleReport,
    Verdict,
    analyze,
    decide,
    einstein_certificate,
    flatness_certificate,
    minimality_certificate,
    sample_points,
)
from .report import (
    build_decompose_report,
    build_report,
    render_json,
    render_text,
)
from .verify import verify_catalog, verify_entry
from ._version import __version__

__all__ = [
    "__version__",
    # errors
    "ThirdFormError", "AdaptednessViolated", "BadCurvature", "BadParams",
    "CodimensionUnsupported", "CurvatureSumZero", "DegenerateFamily",
    "DimensionMismatch", "InvalidParams", "MissingRicci", "NonConstantRho",
    "NotBilinear", "NotFlat", "NotOnQuadric", "NotUmbilicalThirdForm",
    "NullVector", "OutOfDomain", "RankDeficient", "SamplingFailed",
    "SignatureMismatch", "StepTooLarge", "UnequalHalfDimensions",
    "UnknownName",
    # linear algebra
    "InnerProduct", "commutator_norm", "complete_frame", "eig_sym",
    "frobenius", "gram_schmidt",
    # algebraic forms
    "AdaptedBlock", "AdaptedDecomposition", "BilinearForm2", "BlockStructure",
    "DegenerateBlock", "PrincipalNormals", "block_structure", "conjugate",
    "decompose", "direct_sum", "generic_normal", "homothety_factor",
    "is_umbilical_form", "principal_normals", "rotate_normal_frame",
    "simultaneous_eigenspaces", "synth_block", "third_form",
    "umbilical_subforms_check",
    # geometry
    "Immersion", "PointData", "SpaceFormData", "gauss_consistency",
    "point_data", "reduce_to_space_form", "ricci_intrinsic",
    "third_form_direct", "third_form_invariant",
    # catalog
    "CatalogEntry", "FactorSpec", "ProductSpec", "default_catalog",
    "entry_names", "extrinsic_product", "make", "umbilical_inclusion_product",
    # classification
    "KINDS", "AnalysisConfig", "SamplePoint", "SampleReport", "Verdict",
    "analyze", "decide", "einstein_certificate", "flatness_certificate",
    "minimality_certificate", "sample_points",
    # reporting and certification
    "build_decompose_report", "build_report", "render_json", "render_text",
    "verify_catalog", "verify_entry",
]
