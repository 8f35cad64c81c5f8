"""Parameter search for the a + b log T0 bound, table building, crossover search."""

from __future__ import annotations

import functools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from ._validation import check_interval
from .critline import (
    MAX_DELTA,
    CertificateKind,
    CriticalLineBound,
    make_cheng_graham,
    make_convexity,
)
from .exceptions import DomainError, NoSignChangeError
from .reference import TABLE_COLUMNS, TABLE_HEIGHTS, reference_row
from .sbounds import (
    BoundMethod,
    LinearBound,
    _a_from,
    method_a_coeffs,
    method_a_slope,
    rosser_bound,
    theorem_b_coeff_b,
)
from .specfun import zeta_real

__all__ = [
    "golden_section",
    "OptimizationResult",
    "TableRow",
    "minimize_bound",
    "crossover_height",
    "build_table",
    "method_a_theta_threshold",
    "ETA_MIN",
    "DELTA_MIN",
]

ETA_MIN = 1e-6
ETA_MAX = 0.5
DELTA_MIN = 1e-6
ETA_GRID = 200
DELTA_GRID = 64
# grid minimum overrides golden-section when better by more than this
GRID_OVERRIDE = 1e-6
# b values closer than this count as a tie in the crossover search
B_TIE = 1e-7

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


def golden_section(f, lo: float, hi: float, tol: float = 1e-10, max_iter: int = 200):
    """Minimise a unimodal ``f`` on [lo, hi].

    Returns ``(x, f(x), n_evals)``; the endpoints are compared too so a
    minimum on the boundary is not missed.
    """
    a, b = lo, hi
    x1 = b - _INV_PHI * (b - a)
    x2 = a + _INV_PHI * (b - a)
    f1, f2 = f(x1), f(x2)
    evals = 2
    for _ in range(max_iter):
        if b - a <= tol * max(1.0, abs(a) + abs(b)):
            break
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - _INV_PHI * (b - a)
            f1 = f(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + _INV_PHI * (b - a)
            f2 = f(x2)
        evals += 1
    best_x, best_f = (x1, f1) if f1 <= f2 else (x2, f2)
    for x in (lo, hi):
        fx = f(x)
        evals += 1
        if fx < best_f:
            best_x, best_f = x, fx
    return best_x, best_f, evals


@functools.lru_cache(maxsize=1 << 16)
def _log_zeta_1p(eta: float) -> float:
    return math.log(zeta_real(1.0 + eta))


@functools.lru_cache(maxsize=64)
def _log_zeta_grid(lo: float, hi: float, n: int) -> tuple[np.ndarray, np.ndarray]:
    etas = np.linspace(lo, hi, n)
    return etas, np.log(zeta_real(1.0 + etas))


@dataclass(frozen=True)
class OptimizationResult:
    t0: float
    mode: str
    best_eta: float
    best_delta: float | None
    bound: LinearBound
    total_at_t0: float
    evaluations: int
    cert: CriticalLineBound = field(repr=False, compare=False, default=None)

    def as_dict(self) -> dict:
        return {
            "t0": self.t0,
            "mode": self.mode,
            "best_eta": self.best_eta,
            "best_delta": self.best_delta,
            "a": self.bound.a,
            "b": self.bound.b,
            "total_at_t0": self.total_at_t0,
            "evaluations": self.evaluations,
        }


def _search_eta(cert: CriticalLineBound, t0: float):
    """Minimise a + b log t0 over eta for a fixed certificate."""
    B = cert.require_prefactor()
    log_t0 = math.log(t0)

    def total(eta: float) -> float:
        return _a_from(_log_zeta_1p(float(eta)), B, t0) + theorem_b_coeff_b(eta, cert.theta) * log_t0

    etas, log_zeta = _log_zeta_grid(ETA_MIN, ETA_MAX, ETA_GRID)
    b_grid = np.array([theorem_b_coeff_b(e, cert.theta) for e in etas])
    grid_totals = _a_from(log_zeta, B, t0) + b_grid * log_t0
    i = int(np.argmin(grid_totals))

    eta, value, evals = golden_section(total, ETA_MIN, ETA_MAX)
    evals += ETA_GRID
    if grid_totals[i] < value - GRID_OVERRIDE:
        eta, value = float(etas[i]), float(grid_totals[i])
    return float(eta), float(value), evals


def _result(t0: float, mode: str, cert: CriticalLineBound, eta: float, delta, evals: int):
    B = cert.require_prefactor()
    bound = LinearBound(
        a=_a_from(_log_zeta_1p(eta), B, t0),
        b=theorem_b_coeff_b(eta, cert.theta),
        t0=t0,
        method=BoundMethod.THEOREM_B,
    )
    return OptimizationResult(
        t0=t0,
        mode=mode,
        best_eta=eta,
        best_delta=delta,
        bound=bound,
        total_at_t0=bound.a + bound.b * math.log(t0),
        evaluations=evals,
        cert=cert,
    )


def minimize_bound(t0: float, mode="convexity", cert: CriticalLineBound | None = None):
    """Smallest a + b log t0 over the free parameters of a certificate family.

    Parameters
    ----------
    t0 : float
        Height, ``t0 > 3``.
    mode : str or CertificateKind
        ``"convexity"`` searches eta only.  ``"cheng-graham"`` scans
        delta on a 64-point logarithmic grid in [1e-6, 1/12], refines the
        best cell by golden-section, and searches eta for each delta.
        ``"custom"`` needs ``cert`` with a prefactor and searches eta.
    """
    t0 = check_interval(t0, "t0", low=3.0, closed="neither")
    mode = CertificateKind(mode)

    if mode is CertificateKind.CONVEXITY:
        cert = make_convexity()
        eta, _, evals = _search_eta(cert, t0)
        return _result(t0, mode.value, cert, eta, None, evals)

    if mode is CertificateKind.CUSTOM:
        if cert is None:
            raise DomainError("custom mode needs a certificate")
        eta, _, evals = _search_eta(cert, t0)
        return _result(t0, mode.value, cert, eta, None, evals)

    evals = 0
    cache: dict[float, tuple[float, float]] = {}

    def inner(delta: float) -> float:
        nonlocal evals
        if delta not in cache:
            eta, value, n = _search_eta(make_cheng_graham(delta), t0)
            evals += n
            cache[delta] = (eta, value)
        return cache[delta][1]

    deltas = np.geomspace(DELTA_MIN, MAX_DELTA, DELTA_GRID)
    deltas[-1] = MAX_DELTA
    values = [inner(float(d)) for d in deltas]
    i = int(np.argmin(values))
    lo = float(deltas[max(i - 1, 0)])
    hi = float(deltas[min(i + 1, DELTA_GRID - 1)])
    delta, value, _ = golden_section(inner, lo, hi, tol=1e-9)
    if values[i] < value:
        delta = float(deltas[i])
    eta = cache[delta][0]
    return _result(t0, mode.value, make_cheng_graham(delta), eta, delta, evals)


def _subconvexity_wins(t0: float) -> bool:
    sub = minimize_bound(t0, CertificateKind.CHENG_GRAHAM).bound.b
    conv = minimize_bound(t0, CertificateKind.CONVEXITY).bound.b
    return sub - conv < -B_TIE


def crossover_height(lo: float, hi: float, rel_tol: float = 1e-3) -> float:
    """Height where the optimised Cheng-Graham b first drops below the convexity b.

    Bisects on log t0 until the bracket's relative width is below ``rel_tol``.
    Raises ``NoSignChangeError`` unless convexity wins at ``lo`` and
    Cheng-Graham wins at ``hi``.
    """
    lo = check_interval(lo, "lo", low=3.0, closed="neither")
    hi = check_interval(hi, "hi", low=lo, closed="neither")
    if _subconvexity_wins(lo) or not _subconvexity_wins(hi):
        raise NoSignChangeError(
            f"optimised b values do not change order on [{lo:.3g}, {hi:.3g}]"
        )
    log_lo, log_hi = math.log(lo), math.log(hi)
    while log_hi - log_lo > math.log1p(rel_tol):
        mid = 0.5 * (log_lo + log_hi)
        if _subconvexity_wins(math.exp(mid)):
            log_hi = mid
        else:
            log_lo = mid
    return math.exp(0.5 * (log_lo + log_hi))


@dataclass(frozen=True)
class TableRow:
    t0: float
    rosser_b: float
    rosser_total: float
    conv_b: float
    conv_total: float
    subconv_b: float
    subconv_total: float
    reference: dict | None = None
    conv: OptimizationResult | None = field(default=None, repr=False, compare=False)
    subconv: OptimizationResult | None = field(default=None, repr=False, compare=False)

    def deltas(self) -> dict[str, float | None]:
        if self.reference is None:
            return {c: None for c in TABLE_COLUMNS}
        return {c: getattr(self, c) - self.reference[c] for c in TABLE_COLUMNS}

    def as_dict(self) -> dict:
        row = {"t0": self.t0}
        row.update({c: getattr(self, c) for c in TABLE_COLUMNS})
        ref = self.reference or {}
        row.update({f"{c}_paper": ref.get(c) for c in TABLE_COLUMNS})
        row.update({f"{c}_delta": d for c, d in self.deltas().items()})
        return row


def _table_row(t0: float) -> TableRow:
    rosser = rosser_bound(t0)
    conv = minimize_bound(t0, CertificateKind.CONVEXITY)
    sub = minimize_bound(t0, CertificateKind.CHENG_GRAHAM)
    return TableRow(
        t0=t0,
        rosser_b=rosser.b,
        rosser_total=rosser.total_at_t0,
        conv_b=conv.bound.b,
        conv_total=conv.total_at_t0,
        subconv_b=sub.bound.b,
        subconv_total=sub.total_at_t0,
        reference=reference_row(t0),
        conv=conv,
        subconv=sub,
    )


def build_table(t0_list=TABLE_HEIGHTS, n_jobs: int | None = None) -> list[TableRow]:
    """One comparison row per height; rows are independent and may run in threads."""
    heights = [check_interval(t, "t0", low=3.0, closed="neither") for t in t0_list]
    if n_jobs is None or n_jobs == 1:
        return [_table_row(t) for t in heights]
    with ThreadPoolExecutor(max_workers=n_jobs) as pool:
        return list(pool.map(_table_row, heights))


def method_a_theta_threshold(
    thetas=None,
    r_grid=None,
    eta_grid=None,
    t0: float = 1e10,
) -> float | None:
    """Largest scanned theta at which the small-radius slope beats b for some (r, eta).

    Compares ``a5 / (pi log r)`` against ``theorem_b_coeff_b(eta, theta)``
    over the grids; returns ``None`` if it never wins.
    """
    thetas = np.linspace(0.001, 0.25, 250) if thetas is None else np.asarray(thetas)
    r_grid = np.linspace(1.01, 1.99, 50) if r_grid is None else np.asarray(r_grid)
    eta_grid = np.linspace(0.01, 0.5, 50) if eta_grid is None else np.asarray(eta_grid)
    best = None
    for theta in thetas:
        for eta in eta_grid:
            b = theorem_b_coeff_b(float(eta), float(theta))
            slope = min(
                method_a_slope(method_a_coeffs(float(r), float(theta), float(eta), t0))
                for r in r_grid
            )
            if slope < b:
                best = float(theta) if best is None else max(best, float(theta))
                break
    return best
