"""Certified growth bounds |zeta(1/2 + it)| <= B |s + 1|**theta on the critical line."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from ._validation import check_interval, check_positive
from .exceptions import CoefficientOnlyError, DomainError

__all__ = [
    "CertificateKind",
    "CriticalLineBound",
    "cheng_graham_raw",
    "make_cheng_graham",
    "make_convexity",
    "make_custom",
    "CONVEXITY_B",
    "MAX_DELTA",
]

CONVEXITY_B = 2.53
CONVEXITY_THETA = 0.25
CHENG_GRAHAM_THETA = 1.0 / 6.0
# keeps 1/6 + delta at or below the convexity exponent
MAX_DELTA = 1.0 / 12.0


class CertificateKind(str, enum.Enum):
    CONVEXITY = "convexity"
    CHENG_GRAHAM = "cheng-graham"
    CUSTOM = "custom"


@dataclass(frozen=True)
class CriticalLineBound:
    """A pair (B, theta) with |zeta(1/2 + it)| <= B |s + 1|**theta for t >= valid_from.

    ``B`` is ``None`` for coefficient-only certificates, which know the
    exponent but not the prefactor.
    """

    B: float | None
    theta: float
    valid_from: float = 0.0
    kind: CertificateKind = CertificateKind.CUSTOM
    delta: float | None = None

    def __post_init__(self):
        if self.B is not None:
            check_positive(self.B, "B")
        check_interval(self.theta, "theta", 0.0, 0.25, closed="right")
        check_interval(self.valid_from, "valid_from", low=0.0)

    @property
    def coefficient_only(self) -> bool:
        return self.B is None

    @property
    def label(self) -> str:
        if self.kind is CertificateKind.CHENG_GRAHAM:
            return f"cheng-graham(delta={self.delta:.6g})"
        return self.kind.value

    def require_prefactor(self) -> float:
        if self.B is None:
            raise CoefficientOnlyError(
                f"certificate {self.label} with theta={self.theta:.6g} has no prefactor B"
            )
        return self.B

    def __call__(self, t):
        """The certified upper bound B |3/2 + it|**theta."""
        B = self.require_prefactor()
        return B * abs(complex(1.5, t)) ** self.theta


def cheng_graham_raw(t: float) -> float:
    """3 t**(1/6) log t, valid for t > e."""
    t = check_interval(t, "t", low=math.e, closed="neither")
    return 3.0 * t ** (1.0 / 6.0) * math.log(t)


def make_cheng_graham(delta: float) -> CriticalLineBound:
    """Absorb the log factor into t**delta, using max log t / t**delta = 1/(delta e)."""
    delta = check_interval(delta, "delta", 0.0, MAX_DELTA, closed="right")
    return CriticalLineBound(
        B=3.0 / (delta * math.e),
        theta=CHENG_GRAHAM_THETA + delta,
        valid_from=0.0,
        kind=CertificateKind.CHENG_GRAHAM,
        delta=delta,
    )


def make_convexity() -> CriticalLineBound:
    return CriticalLineBound(
        B=CONVEXITY_B, theta=CONVEXITY_THETA, valid_from=0.0, kind=CertificateKind.CONVEXITY
    )


def make_custom(B: float | None, theta: float) -> CriticalLineBound:
    """A user-supplied certificate; ``B=None`` gives a coefficient-only one.

    ``make_custom(None, 32/205)`` records a subconvexity exponent whose
    constant is unknown: it can feed the log T coefficient but not the
    constant term.
    """
    if B is not None:
        B = check_positive(B, "B")
    theta = check_interval(theta, "theta", 0.0, 0.25, closed="right")
    return CriticalLineBound(B=B, theta=theta, valid_from=0.0, kind=CertificateKind.CUSTOM)


def certificate_for(mode: str, *, delta=None, theta=None, B=None) -> CriticalLineBound:
    """Build a certificate from a mode name as used by the CLI and estimators."""
    mode = CertificateKind(mode)
    if mode is CertificateKind.CONVEXITY:
        return make_convexity()
    if mode is CertificateKind.CHENG_GRAHAM:
        if delta is None:
            raise DomainError("cheng-graham mode needs delta")
        return make_cheng_graham(delta)
    if theta is None:
        raise DomainError("custom mode needs theta")
    return make_custom(B, theta)
