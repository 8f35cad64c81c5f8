"""Bounds of the form |S(T)| <= a + b log T.

Three families are provided: the reflection method with circle radius 2
(``theorem_b_*``), Rosser's benchmark, and the small-radius method for
``r`` in (1, 2) with its five printed coefficients.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from ._validation import check_interval, check_positive
from .critline import CriticalLineBound
from .exceptions import DomainError
from .specfun import zeta_real

__all__ = [
    "BoundMethod",
    "BoundParams",
    "LinearBound",
    "MethodACoeffs",
    "theorem_b_coeff_b",
    "theorem_b_coeff_a",
    "theorem_b_bound",
    "rosser_bound",
    "method_a_coeffs",
    "method_a_bound",
    "method_a_slope",
]

# 1 + pi/3 - sqrt(3) and sqrt(3) - pi/3
THETA_WEIGHT = 1.0 + math.pi / 3.0 - math.sqrt(3.0)
ETA_WEIGHT = math.sqrt(3.0) - math.pi / 3.0
_B_DENOM = 2.0 * math.pi * math.log(2.0)

A_LOG_ZETA = 1.85
A_LOG_B = 0.71
A_CONST = -0.58

ROSSER_A = 1.588
ROSSER_B0 = 0.137
ROSSER_B1 = 0.443


class BoundMethod(str, enum.Enum):
    THEOREM_B = "theorem-b"
    ROSSER = "rosser"
    METHOD_A = "method-a"


@dataclass(frozen=True)
class BoundParams:
    eta: float
    t0: float
    cert: CriticalLineBound

    def __post_init__(self):
        check_interval(self.eta, "eta", 0.0, 0.5, closed="right")
        check_interval(self.t0, "t0", low=3.0, closed="neither")


@dataclass(frozen=True)
class LinearBound:
    """|S(T)| <= a + b log T for T >= t0."""

    a: float
    b: float
    t0: float
    method: BoundMethod
    r: float | None = None

    def __post_init__(self):
        check_positive(self.b, "b")

    def value_at(self, T):
        """a + b log T; refuses heights below t0 rather than extrapolating."""
        arr = np.asarray(T, dtype=float)
        if np.any(arr < self.t0):
            raise DomainError(f"bound only asserted for T >= t0={self.t0:g}")
        out = self.a + self.b * np.log(arr)
        return float(out) if out.ndim == 0 else out

    @property
    def total_at_t0(self) -> float:
        return self.a + self.b * math.log(self.t0)


def theorem_b_coeff_b(eta: float, theta: float) -> float:
    """Coefficient of log T: [2 theta c1 + (eta + 1/2) c2] / (2 pi log 2).

    Allows ``eta = 0`` so the asymptotic limit can be evaluated directly.
    """
    eta = check_interval(eta, "eta", 0.0, 0.5)
    theta = check_interval(theta, "theta", 0.0, 0.25, closed="right")
    return (2.0 * theta * THETA_WEIGHT + (eta + 0.5) * ETA_WEIGHT) / _B_DENOM


def eta_for_coeff_b(b: float, theta: float) -> float:
    """Invert ``theorem_b_coeff_b`` in eta; may land outside (0, 1/2]."""
    return (b * _B_DENOM - 2.0 * theta * THETA_WEIGHT) / ETA_WEIGHT - 0.5


def _a_from(log_zeta: float, B: float, t0: float) -> float:
    return A_LOG_ZETA * log_zeta + A_LOG_B * math.log(B) + A_CONST + 1.0 / t0


def theorem_b_coeff_a(params: BoundParams) -> float:
    """Constant term 1.85 log zeta(1+eta) + 0.71 log B - 0.58 + 1/T0."""
    B = params.cert.require_prefactor()
    return _a_from(math.log(zeta_real(1.0 + params.eta)), B, params.t0)


def theorem_b_bound(params: BoundParams) -> LinearBound:
    return LinearBound(
        a=theorem_b_coeff_a(params),
        b=theorem_b_coeff_b(params.eta, params.cert.theta),
        t0=params.t0,
        method=BoundMethod.THEOREM_B,
    )


def rosser_bound(t0: float) -> LinearBound:
    """1.588 + (0.137 + 0.443 log log t0 / log t0) log T for T >= t0 >= 3."""
    t0 = check_interval(t0, "t0", low=3.0)
    log_t0 = math.log(t0)
    return LinearBound(
        a=ROSSER_A,
        b=ROSSER_B0 + ROSSER_B1 * math.log(log_t0) / log_t0,
        t0=t0,
        method=BoundMethod.ROSSER,
    )


@dataclass(frozen=True)
class MethodACoeffs:
    r: float
    a1: float
    a2: float
    a3: float
    a4: float
    a5: float
    theta: float
    eta: float
    t0: float

    def as_tuple(self) -> tuple[float, float, float, float, float]:
        return (self.a1, self.a2, self.a3, self.a4, self.a5)


def method_a_coeffs(r: float, theta: float, eta: float, t0: float) -> MethodACoeffs:
    """The five coefficients of the small-radius bound, exactly as printed.

    ``a1`` keeps the grouping ``(1/2 log 2 pi) * (pi/2)`` and ``a3``
    is later multiplied by ``9 / (2 t0**2)``; neither is re-derived here.
    """
    r = check_interval(r, "r", 1.0, 2.0, closed="neither")
    theta = check_interval(theta, "theta", 0.0, 0.25, closed="right")
    eta = check_interval(eta, "eta", 0.0, 0.5, closed="right")
    t0 = check_interval(t0, "t0", low=math.e, closed="neither")

    asin_r = math.asin(1.0 / r)
    root = r * math.sqrt(1.0 - 1.0 / r**2)
    tail = asin_r - math.pi / 2.0 + root
    spread = 0.5 + eta - 2.0 * theta

    a1 = 3.0 * math.pi / (8.0 * t0) - (0.5 * math.log(2.0 * math.pi)) * math.pi / 2.0 - asin_r + root
    a2 = 2.0 * (math.pi / 2.0 - asin_r) - 3.0 * root + r
    a3 = r * theta * (2.0 - math.sqrt(1.0 - 1.0 / r**2)) + asin_r + spread * tail
    a4 = 3.0 * math.pi / 2.0 - asin_r + 2.0 * root + 1.0 - r
    a5 = r * theta + spread * tail
    return MethodACoeffs(r, a1, a2, a3, a4, a5, theta, eta, t0)


def method_a_slope(coeffs: MethodACoeffs) -> float:
    """Coefficient of log T in ``method_a_bound``: a5 / (pi log r)."""
    return coeffs.a5 / (math.pi * math.log(coeffs.r))


def method_a_bound(coeffs: MethodACoeffs, B: float, T):
    """(2/pi) log zeta(1+eta) + [a1 + a2 log B + a3 9/(2 t0^2)
    + a4 log zeta(1+eta) + a5 log T] / (pi log r)."""
    B = check_positive(B, "B")
    arr = np.asarray(T, dtype=float)
    if np.any(arr <= coeffs.t0):
        raise DomainError(f"T must exceed t0={coeffs.t0:g}")
    log_zeta = math.log(zeta_real(1.0 + coeffs.eta))
    numer = (
        coeffs.a1
        + coeffs.a2 * math.log(B)
        + coeffs.a3 * 9.0 / (2.0 * coeffs.t0**2)
        + coeffs.a4 * log_zeta
        + coeffs.a5 * np.log(arr)
    )
    out = 2.0 / math.pi * log_zeta + numer / (math.pi * math.log(coeffs.r))
    return float(out) if out.ndim == 0 else out
