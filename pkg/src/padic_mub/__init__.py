"""Quadratic Gauss sums, p-adic characters, and mutually unbiased bases.

The package pairs every closed-form statement it implements with an
independent brute-force oracle: ring and field Gauss sums, Gauss integrals
over balls of Q_p, the p^r+1 bases of C^(p^r), and finite-grid models of the
p+1 unbiased families over Q_p.
"""

from .characters import UnitPhase, char_e, char_of_rational, phase_mul, phase_to_complex
from .errors import CapError, OddPrimeError, PrecisionError, ResolutionError
from .finite_field import (
    FieldCtx,
    FieldElem,
    build_field,
    ff_char,
    irreducible_polynomials,
    trace,
)
from .gauss import (
    ExactNorm,
    IntegralParams,
    NormReport,
    RingSumParams,
    simplified_norm,
    field_sum_norm_closed,
    field_sum_numeric,
    integral_norm_closed,
    integral_numeric,
    integral_report,
    ring_report,
    ring_sum_norm_closed,
    ring_sum_normsq_exact,
    ring_sum_numeric,
    threshold_t,
)
from .mub_finite import BasisMatrix, MubReport, build_mub_set, verify_mub
from .mub_padic import (
    Grid,
    StateVector,
    ball_fourier_closed,
    ball_state,
    canonical_family_params,
    eigen_check,
    fourier,
    gram_report,
    inner,
    inverse_fourier,
    make_grid,
    op_P,
    op_X,
    op_Z,
    quadratic_phase_profile,
    required_resolution,
    vector_v,
    vector_v_inf,
)
from .padic import (
    INF,
    PadicNumber,
    PFraction,
    frac_part,
    from_rational,
    norm_p,
    parse_padic,
    valuation,
    zero,
)

__version__ = "0.1.0"

__all__ = [
    "BasisMatrix",
    "CapError",
    "ExactNorm",
    "FieldCtx",
    "FieldElem",
    "Grid",
    "INF",
    "IntegralParams",
    "MubReport",
    "NormReport",
    "OddPrimeError",
    "PFraction",
    "PadicNumber",
    "PrecisionError",
    "ResolutionError",
    "RingSumParams",
    "StateVector",
    "UnitPhase",
    "ball_fourier_closed",
    "ball_state",
    "build_field",
    "build_mub_set",
    "canonical_family_params",
    "char_e",
    "char_of_rational",
    "simplified_norm",
    "eigen_check",
    "ff_char",
    "field_sum_norm_closed",
    "field_sum_numeric",
    "fourier",
    "frac_part",
    "from_rational",
    "gram_report",
    "inner",
    "integral_norm_closed",
    "integral_numeric",
    "integral_report",
    "inverse_fourier",
    "irreducible_polynomials",
    "make_grid",
    "norm_p",
    "op_P",
    "op_X",
    "op_Z",
    "parse_padic",
    "phase_mul",
    "phase_to_complex",
    "quadratic_phase_profile",
    "required_resolution",
    "ring_report",
    "ring_sum_norm_closed",
    "ring_sum_normsq_exact",
    "ring_sum_numeric",
    "threshold_t",
    "trace",
    "valuation",
    "vector_v",
    "vector_v_inf",
    "verify_mub",
    "zero",
]
