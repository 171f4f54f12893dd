"""Exact PBW arithmetic for enveloping algebras of Lie superalgebras and their bosonizations."""

from .bosonize import HElement, h_mul, sigma
from .centers import anticenter_basis, center_basis, hcenter_basis
from .exactq import PolyQ, poly_det
from .expr import ParseError, normal_form, parse, render
from .pbw import UElement, ad, ad_twist, count_filtered, growth_degree, straighten
from .superlie import (
    AlgebraError,
    LieSuperalgebra,
    MatrixElement,
    abelian,
    build_gl,
    build_sl,
    dg,
    direct_sum,
    is_pi,
    supertrace,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraError",
    "HElement",
    "LieSuperalgebra",
    "MatrixElement",
    "ParseError",
    "PolyQ",
    "UElement",
    "abelian",
    "ad",
    "ad_twist",
    "anticenter_basis",
    "build_gl",
    "build_sl",
    "center_basis",
    "count_filtered",
    "dg",
    "direct_sum",
    "growth_degree",
    "h_mul",
    "hcenter_basis",
    "is_pi",
    "normal_form",
    "parse",
    "poly_det",
    "render",
    "sigma",
    "straighten",
    "supertrace",
    "validate",
]
