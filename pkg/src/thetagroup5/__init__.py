"""Eta and theta multiplier systems on the level-5 theta group, with exact arithmetic."""

from __future__ import annotations

from .arith import (
    DEFAULT_PREC,
    InvalidArgument,
    OutOfDomain,
    ResidueMatrix,
    RootOfUnity,
    SL2Matrix,
    jacobi_symbol,
    lambda_N,
    symbol_lower,
    symbol_upper,
)
from .eta import eta_numeric, nu_eta, verify_eta_transform
from .gamma5 import (
    Cusp,
    CosetTable,
    IllConditioned,
    MultiplierResult,
    NotAMember,
    ResidueCase,
    F_numeric,
    G_numeric,
    coset_reps_gamma1,
    coset_reps_kernel,
    cusps,
    f_exponent,
    g_exponent,
    in_gamma_theta_N,
    kernel_member_F,
    kernel_member_G,
    kernel_residue_list,
    nu_F,
    nu_G,
    nu_product_A,
    nu_product_B,
    residue_case,
    sample_members,
)
from .theta import (
    PhasedChar,
    ThetaChar,
    half_shift,
    negate_char,
    reduce_char,
    shift_integer,
    theta_deriv,
    theta_product,
    theta_series,
    zero_location,
)
from .transform import TransformData, transform_11, transform_general, verify_transform

__version__ = "0.1.0"
