"""Exact birational maps of projective space over Q, Q(i) and prime fields.

The package works entirely over exact fields: maps are tuples of homogeneous
polynomials reduced by their gcd, families in a parameter t are stored by
graded pieces, and every verdict (extendability of a limit, membership in a
subgroup, splitting of a cocycle) is decided symbolically, never numerically.
"""

from ._kernels import BACKEND as kernel_backend
from .affine import (
    PolyAuto,
    affine_auto,
    affine_lemma_suite,
    auto_str,
    centralizes,
    elementary_auto,
    embed_lower_linear,
    identity_auto,
    linear_auto,
    normalizes_torus,
    parse_auto,
    permutation_auto,
    to_cremona,
    torus_auto,
    translation_auto,
)
from .cocycles import (
    Cocycle,
    coboundary,
    sigma_matrix,
    trivialize,
    validate_cocycle,
)
from .cremona import (
    ChartDecomposition,
    CremonaMap,
    chart_from_polys,
    from_chart,
    map_str,
    max_degree,
    parse_map,
    standard_involution,
)
from .deformation import (
    DeformationFamily,
    ExtendabilityVerdict,
    build_family,
    commutator_family,
    extendability,
    limit_vs_jacobian,
    scaling_map,
)
from .errors import BiratError
from .linear import (
    DieudonneAutomorphism,
    ProjLinear,
    ProjPoint,
    Transvection,
    enumerate_points,
    gauss_decompose,
    in_congruence_subgroup,
    matrix_str,
    move_point_to_origin,
    origin_point,
    parse_matrix,
    parse_point,
    point_str,
    transvection_bound,
    transvection_product,
    two_fixed_point_automorphism,
)
from .poly import (
    Polynomial,
    RationalFunction,
    dehomogenize,
    divides,
    exact_div,
    homogenize,
    jacobian,
    parse_poly,
    parse_scalar,
    poly_gcd,
    poly_gcd_list,
    poly_lcm,
    poly_str,
)
from .scalars import (
    GF,
    QI,
    QQ,
    FieldAutomorphism,
    FieldSpec,
    Scalar,
    conjugation,
    frobenius,
    identity_automorphism,
    parse_field,
)
from .suites import SUITE_NAMES, SuiteReport, run_all, run_suite

__version__ = "0.1.0"

__all__ = [
    "BiratError",
    "ChartDecomposition",
    "Cocycle",
    "CremonaMap",
    "DeformationFamily",
    "DieudonneAutomorphism",
    "ExtendabilityVerdict",
    "FieldAutomorphism",
    "FieldSpec",
    "GF",
    "PolyAuto",
    "Polynomial",
    "ProjLinear",
    "ProjPoint",
    "QI",
    "QQ",
    "RationalFunction",
    "SUITE_NAMES",
    "Scalar",
    "SuiteReport",
    "Transvection",
    "affine_auto",
    "affine_lemma_suite",
    "auto_str",
    "build_family",
    "centralizes",
    "chart_from_polys",
    "coboundary",
    "commutator_family",
    "conjugation",
    "dehomogenize",
    "divides",
    "elementary_auto",
    "embed_lower_linear",
    "enumerate_points",
    "exact_div",
    "extendability",
    "from_chart",
    "frobenius",
    "gauss_decompose",
    "homogenize",
    "identity_auto",
    "identity_automorphism",
    "in_congruence_subgroup",
    "jacobian",
    "kernel_backend",
    "limit_vs_jacobian",
    "linear_auto",
    "map_str",
    "matrix_str",
    "max_degree",
    "move_point_to_origin",
    "normalizes_torus",
    "origin_point",
    "parse_auto",
    "parse_field",
    "parse_map",
    "parse_matrix",
    "parse_point",
    "parse_poly",
    "parse_scalar",
    "permutation_auto",
    "point_str",
    "poly_gcd",
    "poly_gcd_list",
    "poly_lcm",
    "poly_str",
    "run_all",
    "run_suite",
    "scaling_map",
    "sigma_matrix",
    "standard_involution",
    "to_cremona",
    "torus_auto",
    "transvection_bound",
    "transvection_product",
    "translation_auto",
    "trivialize",
    "two_fixed_point_automorphism",
    "validate_cocycle",
]
