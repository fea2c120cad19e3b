"""Exact computation of exponents of finite-dimensional Hopf algebras."""
from .catalog import group_algebra, preset, preset_names, taft_algebra
from .double import build_double
from .exponent import (
    ExponentConfig,
    ExponentResult,
    classify_u_spectrum,
    compute_exponent,
    decide_exponent,
    exponent_direct,
    exponent_via_r21r,
    exponent_via_r_product,
    exponent_via_u,
)
from .hopf import HopfAlgebra, coopposite, dual, opposite, tensor_product, verify_hopf
from .scalars import CF, GF, QQ, FieldSpec

__all__ = [
    "CF", "GF", "QQ", "ExponentConfig", "ExponentResult", "FieldSpec", "HopfAlgebra", "build_double",
    "classify_u_spectrum", "compute_exponent", "coopposite", "decide_exponent", "dual", "exponent_direct",
    "exponent_via_r21r", "exponent_via_r_product", "exponent_via_u", "group_algebra", "opposite", "preset",
    "preset_names", "taft_algebra", "tensor_product", "verify_hopf",
]
