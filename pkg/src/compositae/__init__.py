"""Exact calculus of composition triangles for ordinary generating functions.

The triangle of a series F (with F(0) = 0) collects the numbers
F(n, k) = [x^n] F(x)^k; everything else in the package — composition,
reciprocation, compositional inversion, Lagrange-style functional
equations, Riordan arrays, and a verified identity suite — is expressed
through transforms of these triangles, all over exact rationals.
"""

from .calculus import (
    compose_series,
    composita_compose,
    composita_product_series,
    composita_sum,
    inverse_series,
    reciprocal_composita,
    scale_argument,
    scale_value,
)
from .catalog import (
    CatalogVerification,
    FunctionSpec,
    catalog_closed_form,
    catalog_series,
    catalog_verify,
    default_instances,
    make_spec,
    parse_function_spec,
    raw_spec,
    registry_names,
)
from .errors import (
    CompositaeError,
    DivisionByNonUnit,
    InsufficientOrder,
    NoClosedForm,
    NonInvertible,
    NonzeroConstantTerm,
    OrderMismatch,
    UnknownFunction,
    ZeroConstantTerm,
)
from .funceq import (
    FuncEqSolution,
    arcsin_composita,
    left_composita,
    radical_composita,
    right_composita,
    solve_functional_equation,
    solve_required_order,
)
from .identities import (
    IdentityReport,
    check_associativity,
    check_derivative_identity,
    check_funceq_identity,
    check_inverse_identity,
    check_lambert_identity,
)
from .riordan import (
    RiordanTable,
    riordan_apply,
    riordan_apply_series,
    riordan_build,
    riordan_composita_check,
)
from .series import (
    PowerSeries,
    Rational,
    as_rational,
    format_series,
    parse_series,
    series_add,
    series_derivative,
    series_div,
    series_mul,
    series_pow,
)
from .triangle import (
    CompositaTable,
    composita_from_powers,
    composita_from_series,
    composita_oracle,
    series_from_composita,
)

__all__ = [
    "CatalogVerification",
    "CompositaTable",
    "CompositaeError",
    "DivisionByNonUnit",
    "FuncEqSolution",
    "FunctionSpec",
    "IdentityReport",
    "InsufficientOrder",
    "NoClosedForm",
    "NonInvertible",
    "NonzeroConstantTerm",
    "OrderMismatch",
    "PowerSeries",
    "Rational",
    "RiordanTable",
    "UnknownFunction",
    "ZeroConstantTerm",
    "arcsin_composita",
    "as_rational",
    "catalog_closed_form",
    "catalog_series",
    "catalog_verify",
    "check_associativity",
    "check_derivative_identity",
    "check_funceq_identity",
    "check_inverse_identity",
    "check_lambert_identity",
    "compose_series",
    "composita_compose",
    "composita_from_powers",
    "composita_from_series",
    "composita_oracle",
    "composita_product_series",
    "composita_sum",
    "default_instances",
    "format_series",
    "inverse_series",
    "left_composita",
    "make_spec",
    "parse_function_spec",
    "parse_series",
    "radical_composita",
    "raw_spec",
    "reciprocal_composita",
    "registry_names",
    "right_composita",
    "riordan_apply",
    "riordan_apply_series",
    "riordan_build",
    "riordan_composita_check",
    "scale_argument",
    "scale_value",
    "series_add",
    "series_derivative",
    "series_div",
    "series_from_composita",
    "series_mul",
    "series_pow",
    "solve_functional_equation",
    "solve_required_order",
]
