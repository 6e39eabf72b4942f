"""Exact-arithmetic workbench for images of linear forms over finite sets:
sumset and difference-set computation, MSTD detection, coincidence-preserving
(Freiman) isomorphism checking, and the construction of positive integer
models of finite real sets.
"""

from .errors import (
    ApproximationError,
    BudgetExceededError,
    CertificateError,
    SetFormatError,
)
from .images import (
    ImageReport,
    MstdVerdict,
    SymmetryWitness,
    check_symmetric_equality,
    form_image,
    is_mstd,
    rep_function,
    symmetry_center,
)
from .isomorphism import (
    CANONICAL_MSTD8,
    AffineClassification,
    InducedMap,
    IsoVerdict,
    SetBijection,
    affine_reconstruct,
    check_signed_transfer,
    classify_mstd8,
    induced_bijection,
    is_phi_isomorphism,
    anchor_normalize,
)
from .model import (
    DIFFERENCE_FORM,
    SUM_FORM,
    BasisDecl,
    FiniteSet,
    LinearForm,
    RealElement,
    SignedForm,
    affine_image,
    all_sign_flips,
    clear_denominators,
    signed_form,
)
from .mptq import (
    MptqVerdict,
    PositiveSet,
    exp_transport,
    log_transport,
    product_quotient_counts,
)
from .realization import (
    DirichletParams,
    EmbeddingParams,
    LatticeSet,
    LpParams,
    RealizationResult,
    lattice_embed,
    realize,
    realize_dirichlet,
    realize_group,
    realize_lp,
    translate_positive,
)
from .search import (
    CanonicalSet,
    SearchConfig,
    enumerate_mstd,
    normalize_affine,
    random_symmetric_set,
    triple_form_scan,
)
from .setfiles import format_set, parse_set, read_set_file, write_set_file

__version__ = "0.1.0"

__all__ = [
    "AffineClassification",
    "ApproximationError",
    "BasisDecl",
    "BudgetExceededError",
    "CANONICAL_MSTD8",
    "CanonicalSet",
    "CertificateError",
    "DIFFERENCE_FORM",
    "DirichletParams",
    "EmbeddingParams",
    "FiniteSet",
    "ImageReport",
    "InducedMap",
    "IsoVerdict",
    "LatticeSet",
    "LinearForm",
    "LpParams",
    "MptqVerdict",
    "MstdVerdict",
    "PositiveSet",
    "RealElement",
    "RealizationResult",
    "SUM_FORM",
    "SearchConfig",
    "SetBijection",
    "SetFormatError",
    "SignedForm",
    "SymmetryWitness",
    "affine_image",
    "affine_reconstruct",
    "all_sign_flips",
    "check_signed_transfer",
    "check_symmetric_equality",
    "classify_mstd8",
    "clear_denominators",
    "enumerate_mstd",
    "exp_transport",
    "form_image",
    "format_set",
    "induced_bijection",
    "is_mstd",
    "is_phi_isomorphism",
    "lattice_embed",
    "log_transport",
    "anchor_normalize",
    "normalize_affine",
    "parse_set",
    "product_quotient_counts",
    "random_symmetric_set",
    "read_set_file",
    "realize",
    "realize_dirichlet",
    "realize_group",
    "realize_lp",
    "rep_function",
    "signed_form",
    "symmetry_center",
    "translate_positive",
    "triple_form_scan",
    "write_set_file",
]
