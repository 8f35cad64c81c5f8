"""Explicit bounds for |zeta(s)| in vertical strips around the critical line.

The ingredients are the explicit Phragmen-Lindelof interpolation between
two vertical lines, the Gamma-ratio estimate that turns the functional
equation into a bound on Re(s) = -eta, and the two strip bounds obtained
by interpolating

* between Re(s) = 1/2 and Re(s) = 1 + eta (applied to (s - 1) zeta(s)), and
* between Re(s) = -eta and Re(s) = 1/2 (applied to zeta(s)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ._validation import check_interval, check_positive, check_real
from .critline import CriticalLineBound
from .exceptions import DomainError
from .specfun import log_gamma, zeta_real

__all__ = [
    "LineBoundSpec",
    "StripBoundParams",
    "pl_interpolate",
    "gamma_ratio_bound",
    "gamma_ratio_true",
    "reflected_line_bound",
    "strip_bound_right",
    "strip_bound_left",
]

_TWO_PI = 2.0 * math.pi
# Re(s) may sit on a strip edge up to rounding
_EDGE_TOL = 1e-12


@dataclass(frozen=True)
class LineBoundSpec:
    """|f(s)| <= A |Q + s|**alpha on the line Re(s) = sigma."""

    sigma: float
    A: float
    alpha: float

    def __post_init__(self):
        check_real(self.sigma, "sigma")
        check_positive(self.A, "A")
        check_interval(self.alpha, "alpha", low=0.0)


@dataclass(frozen=True)
class StripBoundParams:
    eta: float
    t0: float
    cert: CriticalLineBound
    # evaluate the right-hand strip with (log zeta(1+eta))**(sigma-1/2)
    verbatim_log: bool = False
    zeta_1_eta: float = field(init=False, repr=False)

    def __post_init__(self):
        check_interval(self.eta, "eta", 0.0, 0.5, closed="right")
        check_interval(self.t0, "t0", low=math.e, closed="neither")
        object.__setattr__(self, "zeta_1_eta", zeta_real(1.0 + self.eta))

    @property
    def C1(self) -> float:
        return math.sqrt(1.0 + ((2.0 + self.eta) / self.t0) ** 2)

    @property
    def C2(self) -> float:
        return math.sqrt(1.0 + 1.0 / self.t0**2)


def pl_interpolate(left: LineBoundSpec, right: LineBoundSpec, Q: float, s: complex) -> float:
    """Phragmen-Lindelof bound at ``s`` from bounds on two vertical lines.

    Parameters
    ----------
    left, right : LineBoundSpec
        Bounds ``A|Q+s|**alpha`` on ``Re(s) = a`` and ``B|Q+s|**beta`` on
        ``Re(s) = b``, with ``a < b`` and ``alpha >= beta``.
    Q : float
        Shift in ``|Q + s|``.
    s : complex
        Point with ``a <= Re(s) <= b``.

    Returns
    -------
    float
        ``A**w_a B**w_b |Q+s|**(alpha w_a + beta w_b)`` with the linear
        weights ``w_a = (b - sigma)/(b - a)``, ``w_b = (sigma - a)/(b - a)``.
    """
    a, b = left.sigma, right.sigma
    if not a < b:
        raise DomainError(f"need left.sigma < right.sigma, got {a} and {b}")
    if left.alpha < right.alpha:
        raise DomainError("need left.alpha >= right.alpha")
    s = complex(s)
    sigma = s.real
    if not (a - _EDGE_TOL <= sigma <= b + _EDGE_TOL):
        raise DomainError(f"Re(s)={sigma} outside [{a}, {b}]")
    modulus = abs(Q + s)
    if modulus == 0.0:
        raise DomainError("|Q + s| must be positive")
    w_a = (b - sigma) / (b - a)
    w_b = (sigma - a) / (b - a)
    log_value = (
        w_a * math.log(left.A)
        + w_b * math.log(right.A)
        + (left.alpha * w_a + right.alpha * w_b) * math.log(modulus)
    )
    return math.exp(log_value)


def _check_strip(s: complex, low: float, high: float) -> complex:
    s = complex(s)
    if not (low - _EDGE_TOL <= s.real <= high + _EDGE_TOL):
        raise DomainError(f"Re(s)={s.real} outside [{low}, {high}]")
    return s


def gamma_ratio_bound(s: complex) -> float:
    """(|1 + s|/2)**(1/2 - sigma), an upper bound for |Gamma((1-s)/2) / Gamma(s/2)|."""
    s = _check_strip(s, -0.5, 0.5)
    return (abs(1.0 + s) / 2.0) ** (0.5 - s.real)


def _log_abs_gamma(z: complex) -> float:
    if z.real > 0.0:
        return log_gamma(z).real
    # reflection: |Gamma(z)| = pi / (|sin(pi z)| |Gamma(1 - z)|)
    return math.log(math.pi) - math.log(abs(np.sin(np.pi * z))) - log_gamma(1.0 - z).real


def gamma_ratio_true(s: complex) -> float:
    """|Gamma((1-s)/2) / Gamma(s/2)| computed from log-gamma with reflection."""
    s = complex(s)
    return math.exp(_log_abs_gamma(0.5 - 0.5 * s) - _log_abs_gamma(0.5 * s))


def reflected_line_bound(params: StripBoundParams, s: complex) -> float:
    """Bound for |zeta(-eta + it)| from the functional equation:
    (|s + 1| / 2 pi)**(1/2 + eta) zeta(1 + eta)."""
    s = complex(s)
    eta = params.eta
    if abs(s.real + eta) > _EDGE_TOL:
        raise DomainError(f"Re(s) must equal -eta={-eta}, got {s.real}")
    if s.imag < params.t0:
        raise DomainError(f"Im(s)={s.imag} below t0={params.t0}")
    return (abs(s + 1.0) / _TWO_PI) ** (0.5 + eta) * params.zeta_1_eta


def _strip_args(params: StripBoundParams, s: complex, low: float, high: float):
    s = _check_strip(s, low, high)
    if s.imag <= params.t0:
        raise DomainError(f"Im(s)={s.imag} must exceed t0={params.t0}")
    B = params.cert.require_prefactor()
    return s.real, s.imag, B


def strip_bound_right(params: StripBoundParams, s: complex) -> float:
    """Upper bound for |zeta(s)| with 1/2 <= Re(s) <= 1 + eta and Im(s) > t0.

    Returns ``{C1**(theta(1+eta-sigma) + 1/2 + eta) B**(1+eta-sigma)
    Z**(sigma-1/2) t**(theta(1+eta-sigma))}**(1/(1/2+eta))`` where
    ``Z = zeta(1+eta)``, or ``log zeta(1+eta)`` when ``params.verbatim_log``.
    """
    eta = params.eta
    sigma, t, B = _strip_args(params, s, 0.5, 1.0 + eta)
    theta = params.cert.theta
    width = 0.5 + eta
    z = math.log(params.zeta_1_eta) if params.verbatim_log else params.zeta_1_eta
    log_inner = (
        (theta * (1.0 + eta - sigma) + width) * math.log(params.C1)
        + (1.0 + eta - sigma) * math.log(B)
        + (sigma - 0.5) * math.log(z)
        + theta * (1.0 + eta - sigma) * math.log(t)
    )
    return math.exp(log_inner / width)


def strip_bound_left(params: StripBoundParams, s: complex) -> float:
    """Upper bound for |zeta(s)| with -eta <= Re(s) <= 1/2 and Im(s) > t0."""
    eta = params.eta
    sigma, t, B = _strip_args(params, s, -eta, 0.5)
    theta = params.cert.theta
    width = 0.5 + eta
    log_inner = (
        (0.5 - sigma) * (math.log(params.zeta_1_eta) - width * math.log(_TWO_PI))
        + (sigma + eta) * math.log(B)
        + (width * (0.5 - sigma) + theta * (sigma + eta)) * math.log(params.C2 * t)
    )
    return math.exp(log_inner / width)
