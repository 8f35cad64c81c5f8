"""Small argument checks shared by the numerical modules."""

from __future__ import annotations

import math
import numbers

import numpy as np

from .exceptions import DomainError


def check_real(x, name: str) -> float:
    if isinstance(x, (bool, np.bool_)) or not isinstance(x, numbers.Real):
        raise DomainError(f"{name} must be a real number, got {x!r}")
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"{name} must be finite, got {x!r}")
    return x


def check_interval(
    x,
    name: str,
    low: float | None = None,
    high: float | None = None,
    closed: str = "both",
) -> float:
    """Return ``float(x)`` after checking it lies in the given interval.

    ``closed`` is one of ``"both"``, ``"left"``, ``"right"``, ``"neither"``.
    """
    x = check_real(x, name)
    left_ok = True
    right_ok = True
    if low is not None:
        left_ok = x >= low if closed in ("both", "left") else x > low
    if high is not None:
        right_ok = x <= high if closed in ("both", "right") else x < high
    if not (left_ok and right_ok):
        lb = "[" if closed in ("both", "left") else "("
        rb = "]" if closed in ("both", "right") else ")"
        lo = "-inf" if low is None else f"{low:g}"
        hi = "inf" if high is None else f"{high:g}"
        raise DomainError(f"{name}={x!r} outside {lb}{lo}, {hi}{rb}")
    return x


def check_positive(x, name: str) -> float:
    return check_interval(x, name, low=0.0, closed="neither")


def as_float_array(x, name: str) -> tuple[np.ndarray, bool]:
    """Convert ``x`` to a float array; second item says whether it was scalar."""
    scalar = np.ndim(x) == 0
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"{name} must be finite")
    return np.atleast_1d(arr), scalar


def as_complex_array(x, name: str) -> tuple[np.ndarray, bool]:
    scalar = np.ndim(x) == 0
    arr = np.asarray(x, dtype=complex)
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"{name} must be finite")
    return np.atleast_1d(arr), scalar
