"""Exact-arithmetic computation and verification of the coefficient family
d_l(m) of the quartic integral, the tail sums S_{m,l} and T(m) that control
its unimodality, the three-term recurrence certificate for T, and
counterexample scans for the two open conjectures about the family.
"""

from .coefficients import (
    CoefficientRow,
    coefficient_row,
    d_coeff,
    delta_closed,
    delta_direct,
    poly_p,
    scaled_row,
)
from .conjectures import (
    ScanConfig,
    default_x_grid,
    half_point_equivalence_check,
    hyp_inequality_margin,
    scan_hyp_inequality,
    scan_infinite_logconcavity,
)
from .exact import binomial, generalized_binomial, pochhammer, rational_from_str, rational_str
from .hypergeometric import (
    Hyp2F1Spec,
    HypergeometricError,
    NonTerminatingSeriesError,
    SeriesPoleError,
    companion_ratio_bound_violations,
    contiguous_relation_check,
    derivative_relation_check,
    difference_identity_check,
    envelope_bound_check,
    hyp2f1,
    hyp2f1_as_polynomial,
    hyp2f1_terminating,
    one_f_zero,
    pochhammer_ratio_bound_check,
)
from .polynomial import Polynomial
from .quadrature import (
    DivergentIntegralError,
    QuadratureConvergenceError,
    QuadratureResult,
    closed_form,
    evaluate_quartic_integral,
    quartic_integral_numeric,
)
from .recurrence import (
    CERTIFICATE,
    RecurrenceCoefficients,
    ac_limit,
    ac_ratio,
    b_identity_check,
    d_shift_check,
    d_shift_positivity,
    main_inequality_check,
    monotonicity_check,
    recurrence_residual,
)
from .reports import Counterexample, PropertyReport, RunReport, SCHEMA_VERSION
from .seqprops import (
    is_i_logconcave,
    is_logconcave,
    is_ratio_monotone,
    is_unimodal,
    l_operator,
    minimum_claimed_value,
    minimum_functional,
    minimum_functional_uncorrected,
)
from .tfunction import (
    InequalityChain,
    T_LIMIT,
    TValueBundle,
    bound_pair_check,
    geometric_tail_bound,
    inequality_chain_check,
    integral_prefactor,
    limit_gap,
    s_sum,
    t_bundle,
    t_direct,
    t_hypergeometric,
    t_integral,
    t_via_w,
    t_via_w_variant,
    w_function,
    w_polynomial,
)

__version__ = "0.1.0"
