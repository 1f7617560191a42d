"""Quaternionic Serre weight sets for generic two-dimensional mod-p Galois
parameters over an unramified p-adic field, computed two ways: a closed-form
(w⃗, d⃗) parameterization and an exhaustive brute-force enumeration, with a
cross-check harness keeping both honest."""

from .cuspidal import CharQuad, bc_decompose, is_type_one, jh_factor, jh_set, p_theta
from .errors import (
    ConfigError,
    ConsistencyError,
    DigitRangeError,
    InadmissibleTupleError,
    InputError,
    InternalCheckError,
    MismatchError,
    NonGenericError,
    NotTypeOneError,
    OddCoefficientError,
    QuatWeightsError,
    RelationViolationError,
    ShapeViolationError,
    StratumViolationError,
)
from .gl2 import (
    Family,
    GL2Weight,
    Kind,
    RhoBar,
    e_lambda,
    e_lambda_via_s,
    lambda_tuple,
    normalize_weight,
    sigma_v,
    w_gl2,
)
from .oracle import (
    CheckReport,
    SweepReport,
    cross_check,
    enumerate_type_one,
    expected_count,
    generic_r_tuples,
    sweep,
    w_d_oracle,
)
from .polys import (
    RestrictedPoly,
    coeff_c,
    combine,
    constant_part,
    evaluate,
    halve_checked,
    linear_part,
    s_reduce,
    xi,
    xpow,
    xshift,
)
from .quaternionic import (
    WeightCertificate,
    b_uv,
    c_uv,
    d_of,
    enumerate_wd,
    psi_exponent_symbolic,
    psi_from_wd,
    psi_uv,
    solve_w,
    stratum,
    t_uv,
    u_set,
    validate_certificate,
    w_d_v,
    w_of,
    wd_relations,
)
from .tuples import BitTuple, SignTuple, all_bit_tuples, all_sign_tuples, ell, leq, u0_transform

__version__ = "1.0.0"

__all__ = [
    "BitTuple",
    "CharQuad",
    "CheckReport",
    "ConfigError",
    "ConsistencyError",
    "DigitRangeError",
    "Family",
    "GL2Weight",
    "InadmissibleTupleError",
    "InputError",
    "InternalCheckError",
    "Kind",
    "MismatchError",
    "NonGenericError",
    "NotTypeOneError",
    "OddCoefficientError",
    "QuatWeightsError",
    "RelationViolationError",
    "RestrictedPoly",
    "RhoBar",
    "ShapeViolationError",
    "SignTuple",
    "StratumViolationError",
    "SweepReport",
    "WeightCertificate",
    "all_bit_tuples",
    "all_sign_tuples",
    "b_uv",
    "bc_decompose",
    "c_uv",
    "coeff_c",
    "combine",
    "constant_part",
    "cross_check",
    "d_of",
    "e_lambda",
    "e_lambda_via_s",
    "ell",
    "enumerate_type_one",
    "enumerate_wd",
    "evaluate",
    "expected_count",
    "generic_r_tuples",
    "halve_checked",
    "is_type_one",
    "jh_factor",
    "jh_set",
    "lambda_tuple",
    "leq",
    "linear_part",
    "normalize_weight",
    "p_theta",
    "psi_exponent_symbolic",
    "psi_from_wd",
    "psi_uv",
    "s_reduce",
    "sigma_v",
    "solve_w",
    "stratum",
    "sweep",
    "t_uv",
    "u0_transform",
    "u_set",
    "validate_certificate",
    "w_d_oracle",
    "w_d_v",
    "w_gl2",
    "w_of",
    "wd_relations",
    "xi",
    "xpow",
    "xshift",
]
