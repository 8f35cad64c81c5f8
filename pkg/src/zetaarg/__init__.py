"""Explicit bounds for S(T), the argument of the Riemann zeta-function."""

__version__ = "0.1.0"

from .critline import (  # noqa: E402
    CriticalLineBound,
    cheng_graham_raw,
    make_cheng_graham,
    make_convexity,
    make_custom,
)
from .estimators import ArgumentBound, ArgumentOfZeta  # noqa: E402
from .exceptions import (  # noqa: E402
    AccuracyError,
    CoefficientOnlyError,
    DomainError,
    NoSignChangeError,
)
from .optimize import build_table, crossover_height, minimize_bound  # noqa: E402
from .sbounds import (  # noqa: E402
    BoundParams,
    LinearBound,
    method_a_bound,
    method_a_coeffs,
    rosser_bound,
    theorem_b_bound,
    theorem_b_coeff_a,
    theorem_b_coeff_b,
)
from .specfun import (  # noqa: E402
    EvalAccuracy,
    log_gamma,
    theta_rs,
    z_function,
    zeta_complex,
    zeta_real,
)
from .verify import check_bounds_empirically, check_lemmas, s_of_t, scan_zeros  # noqa: E402
