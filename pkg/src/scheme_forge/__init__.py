"""Construct, verify and dissect 4-equivalenced association schemes."""

from .scheme_core import (
    DiagonalColor,
    DiagonalViolation,
    DualViolation,
    FormatError,
    IntersectionTensor,
    NonConstantIntersection,
    Scheme,
    SchemeForgeError,
    canonical_relabel,
    from_matrix,
    indistinguishing_number,
    intersection_tensor,
    is_commutative,
    is_k_equivalenced,
    is_pseudocyclic,
    is_symmetric,
    load_asc,
    product_inner,
    read_asc,
    save_asc,
    scheme_indistinguishing,
    valency,
    validate,
    write_asc,
)
from .products import (
    DichotomyViolation,
    NotFourEquivalenced,
    PhiPsi,
    ProductClass,
    StructureReport,
    TrichotomyViolation,
    closure,
    complex_product,
    phi_psi,
    product_class,
    verify_structure_lemmas,
    wr,
)
from .groups import (
    BadPrime,
    BoundExceeded,
    FrobeniusCertificate,
    NotTransitive,
    PermGroup,
    automorphism_group,
    compose,
    cyclotomic_frobenius,
    frobenius_check,
    frobenius_witness,
    group_order,
    inverse,
    load_perm,
    orbital_scheme,
    perm_order,
    read_perm,
    save_perm,
    sigma_alpha,
    two_point_rigidity,
    vector_frobenius,
    write_perm,
)
from .planes import (
    AmbiguousExtension,
    BaseMismatch,
    InvalidBase,
    NoExtension,
    Plane,
    build_plane,
    check_rotation_invariance,
    check_sim,
    rotate,
    rotation_orbit,
    s_line,
    sigma_base,
    valid_bases,
)
from .fission import (
    CoherentConfiguration,
    CutoffExceeded,
    FissionReport,
    NotAFiber,
    base_number,
    describe_fission,
    fibers_refine_rows,
    find_base,
    is_semiregular_off,
    point_fission,
    validate_configuration,
    wl_stabilize,
)
from .designs import BlockDesign, scheme_to_design, verify_design
from .cli import build_report, run

__version__ = "0.1.0"

__all__ = [
    "AmbiguousExtension",
    "BadPrime",
    "BaseMismatch",
    "BlockDesign",
    "BoundExceeded",
    "CoherentConfiguration",
    "CutoffExceeded",
    "DiagonalColor",
    "DiagonalViolation",
    "DichotomyViolation",
    "DualViolation",
    "FissionReport",
    "FormatError",
    "FrobeniusCertificate",
    "IntersectionTensor",
    "InvalidBase",
    "NoExtension",
    "NonConstantIntersection",
    "NotAFiber",
    "NotFourEquivalenced",
    "NotTransitive",
    "PermGroup",
    "PhiPsi",
    "Plane",
    "ProductClass",
    "Scheme",
    "SchemeForgeError",
    "StructureReport",
    "TrichotomyViolation",
    "automorphism_group",
    "base_number",
    "build_plane",
    "build_report",
    "canonical_relabel",
    "check_rotation_invariance",
    "check_sim",
    "closure",
    "complex_product",
    "compose",
    "cyclotomic_frobenius",
    "describe_fission",
    "fibers_refine_rows",
    "find_base",
    "frobenius_check",
    "frobenius_witness",
    "from_matrix",
    "group_order",
    "indistinguishing_number",
    "intersection_tensor",
    "inverse",
    "is_commutative",
    "is_k_equivalenced",
    "is_pseudocyclic",
    "is_semiregular_off",
    "is_symmetric",
    "load_asc",
    "load_perm",
    "orbital_scheme",
    "perm_order",
    "phi_psi",
    "point_fission",
    "product_class",
    "product_inner",
    "read_asc",
    "read_perm",
    "rotate",
    "rotation_orbit",
    "run",
    "s_line",
    "save_asc",
    "save_perm",
    "scheme_indistinguishing",
    "scheme_to_design",
    "sigma_alpha",
    "sigma_base",
    "two_point_rigidity",
    "valency",
    "validate",
    "validate_configuration",
    "vector_frobenius",
    "verify_design",
    "verify_structure_lemmas",
    "wl_stabilize",
    "write_asc",
    "write_perm",
    "wr",
]
