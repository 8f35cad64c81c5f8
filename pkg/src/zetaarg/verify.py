"""Desk-scale ground truth: zero counting, S(t), and empirical bound checks.

S(t) is recovered from N(t) = 1 + theta(t)/pi + S(t), with N(t) counted
from sign changes of Hardy's Z on a grid.  Only zeros on the critical
line are seen, which is all of them at these heights.
"""

from __future__ import annotations

import bisect
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import brentq

from ._validation import check_interval, check_positive
from .critline import cheng_graham_raw, make_cheng_graham, make_convexity
from .exceptions import AccuracyError, DomainError
from .sbounds import LinearBound
from .specfun import _theta, theta_rs, z_function, zeta_complex, zeta_real
from .stripbounds import (
    StripBoundParams,
    gamma_ratio_bound,
    gamma_ratio_true,
    strip_bound_left,
    strip_bound_right,
)

__all__ = [
    "ZeroScanResult",
    "SEvaluation",
    "scan_zeros",
    "s_of_t",
    "s_values",
    "check_bounds_empirically",
    "check_lemmas",
    "T_MAX_SUPPORTED",
]

T_MAX_SUPPORTED = 5000.0
ORDINATE_TOL = 1e-6
LEHMER_LEVEL = 1e-3
_CHUNK = 2000.0


@dataclass(frozen=True)
class ZeroScanResult:
    t_max: float
    grid_step: float
    sign_change_ordinates: tuple[float, ...]
    suspicious_gaps: tuple[tuple[float, float], ...] = ()

    @property
    def zero_count(self) -> int:
        return len(self.sign_change_ordinates)

    def count_upto(self, t: float, inclusive: bool = True) -> int:
        fn = bisect.bisect_right if inclusive else bisect.bisect_left
        return fn(self.sign_change_ordinates, t)

    def nearest_ordinate(self, t: float) -> float | None:
        ords = self.sign_change_ordinates
        i = bisect.bisect_left(ords, t)
        near = [ords[j] for j in (i - 1, i) if 0 <= j < len(ords)]
        return min(near, key=lambda g: abs(g - t)) if near else None


@dataclass(frozen=True)
class SEvaluation:
    """One value of S(t).  ``n_of_t`` is half-integral at an ordinate."""

    t: float
    n_of_t: float
    theta_over_pi: float
    s_of_t: float


def _scan_chunk(lo: float, hi: float, step: float):
    n = max(int(math.ceil((hi - lo) / step)), 1)
    grid = np.linspace(lo, hi, n + 1)
    values = z_function(grid)

    roots = []
    changes = np.nonzero(np.sign(values[:-1]) * np.sign(values[1:]) < 0)[0]
    for i in changes:
        try:
            root = brentq(z_function, grid[i], grid[i + 1], xtol=1e-8, rtol=1e-14, maxiter=200)
        except RuntimeError as exc:
            raise AccuracyError(f"refinement stalled in [{grid[i]}, {grid[i + 1]}]") from exc
        roots.append(float(root))

    # a pair of close zeros shows up as a shallow same-sign dip in |Z|
    small = np.abs(values) < LEHMER_LEVEL
    changed = set(changes.tolist())
    gaps = []
    for i in np.nonzero(small)[0]:
        if 0 < i < len(grid) - 1 and i not in changed and i - 1 not in changed:
            gaps.append((float(grid[i - 1]), float(grid[i + 1])))
    return roots, gaps


def scan_zeros(t_max: float, grid_step: float = 0.05, n_jobs: int | None = None) -> ZeroScanResult:
    """Locate sign changes of Z on (0, t_max].

    The range is cut into independent chunks (optionally scanned in
    threads), each sign change is refined by Brent's method, and
    intervals where the running count drifts two or more away from
    ``round(theta/pi + 1)``, or where |Z| dips below 1e-3 without a sign
    change, are reported in ``suspicious_gaps``.
    """
    t_max = check_interval(t_max, "t_max", 0.0, T_MAX_SUPPORTED, closed="right")
    grid_step = check_positive(grid_step, "grid_step")

    edges = list(np.arange(0.0, t_max, _CHUNK)) + [t_max]
    chunks = list(zip(edges[:-1], edges[1:]))
    if n_jobs is None or n_jobs == 1:
        parts = [_scan_chunk(lo, hi, grid_step) for lo, hi in chunks]
    else:
        with ThreadPoolExecutor(max_workers=n_jobs) as pool:
            parts = list(pool.map(lambda c: _scan_chunk(c[0], c[1], grid_step), chunks))

    ordinates = sorted(r for roots, _ in parts for r in roots)
    # a root on a chunk edge could be found twice
    deduped = []
    for r in ordinates:
        if not deduped or r - deduped[-1] > 1e-7:
            deduped.append(r)
    gaps = [g for _, chunk_gaps in parts for g in chunk_gaps]
    gaps.extend(_drift_gaps(deduped, t_max))
    return ZeroScanResult(
        t_max=t_max,
        grid_step=grid_step,
        sign_change_ordinates=tuple(deduped),
        suspicious_gaps=tuple(sorted(set(gaps))),
    )


def _drift_gaps(ordinates: list[float], t_max: float) -> list[tuple[float, float]]:
    """Intervals between checkpoints where the count disagrees with theta/pi + 1 by >= 2."""
    if t_max < 1.0:
        return []
    checkpoints = np.linspace(1.0, t_max, max(int(t_max), 2))
    expected = np.round(_theta(checkpoints) / math.pi + 1.0)
    counts = np.searchsorted(ordinates, checkpoints, side="right")
    bad = np.nonzero(np.abs(counts - expected) >= 2)[0]
    return [
        (float(checkpoints[max(i - 1, 0)]), float(checkpoints[i])) for i in bad
    ]


def s_of_t(t: float, scan: ZeroScanResult) -> SEvaluation:
    """S(t) = N(t) - 1 - theta(t)/pi, averaging the one-sided counts at an ordinate."""
    t = check_interval(t, "t", 3.0, T_MAX_SUPPORTED)
    if t > scan.t_max:
        raise DomainError(f"scan covers t <= {scan.t_max}, asked for {t}")
    nearest = scan.nearest_ordinate(t)
    if nearest is not None and abs(nearest - t) <= ORDINATE_TOL:
        n = 0.5 * (scan.count_upto(nearest, inclusive=False) + scan.count_upto(nearest))
    else:
        n = float(scan.count_upto(t))
    theta_over_pi = theta_rs(t) / math.pi
    return SEvaluation(t=t, n_of_t=n, theta_over_pi=theta_over_pi, s_of_t=n - 1.0 - theta_over_pi)


def s_values(t, scan: ZeroScanResult) -> np.ndarray:
    """Vectorised S(t) away from ordinates (no midpoint handling)."""
    t = np.asarray(t, dtype=float)
    if np.any(t < 1.0) or np.any(t > scan.t_max):
        raise DomainError(f"t must lie in [1, {scan.t_max}]")
    counts = np.searchsorted(scan.sign_change_ordinates, t, side="right")
    return counts - 1.0 - theta_rs(t) / math.pi


@dataclass
class BoundCheck:
    bound: LinearBound
    violations: list[tuple[float, float, float]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations


@dataclass
class ViolationReport:
    t_lo: float
    t_hi: float
    samples: int
    max_abs_s: float
    argmax_t: float
    checks: list[BoundCheck]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def as_dict(self) -> dict:
        return {
            "t_lo": self.t_lo,
            "t_hi": self.t_hi,
            "samples": self.samples,
            "max_abs_s": self.max_abs_s,
            "argmax_t": self.argmax_t,
            "passed": self.passed,
            "bounds": [
                {
                    "method": c.bound.method.value,
                    "a": c.bound.a,
                    "b": c.bound.b,
                    "t0": c.bound.t0,
                    "violations": [
                        {"t": t, "abs_s": s, "bound": v} for t, s, v in c.violations
                    ],
                }
                for c in self.checks
            ],
        }


def _sample_points(t_lo, t_hi, samples, scan, include_ordinates):
    pts = np.linspace(t_lo, t_hi, samples)
    ords = np.asarray(scan.sign_change_ordinates)
    if ords.size:
        idx = np.clip(np.searchsorted(ords, pts), 1, ords.size - 1)
        near = np.minimum(np.abs(ords[idx] - pts), np.abs(ords[idx - 1] - pts))
        # nudge samples that land on an ordinate
        pts = np.where(near <= ORDINATE_TOL, pts + 10 * ORDINATE_TOL, pts)
    if include_ordinates:
        # |S| is extremal at one-sided limits at ordinates
        inside = ords[(ords > t_lo + 2 * ORDINATE_TOL) & (ords < t_hi - 2 * ORDINATE_TOL)]
        pts = np.concatenate([pts, inside - 2 * ORDINATE_TOL, inside + 2 * ORDINATE_TOL])
    return np.sort(pts)


def check_bounds_empirically(
    t_lo: float,
    t_hi: float,
    bounds: list[LinearBound],
    samples: int = 2000,
    scan: ZeroScanResult | None = None,
    include_ordinates: bool = True,
) -> ViolationReport:
    """Compare |S(t)| with each bound at evenly spaced heights in [t_lo, t_hi].

    With ``include_ordinates`` both one-sided limits at every zero are
    checked as well.  Violations are returned as data.
    """
    t_lo = check_interval(t_lo, "t_lo", low=3.0)
    t_hi = check_interval(t_hi, "t_hi", low=t_lo, high=T_MAX_SUPPORTED)
    for bound in bounds:
        if bound.t0 > t_lo:
            raise DomainError(f"bound with t0={bound.t0} does not cover t_lo={t_lo}")
    if scan is None or scan.t_max < t_hi:
        scan = scan_zeros(t_hi)
    pts = _sample_points(t_lo, t_hi, samples, scan, include_ordinates)
    abs_s = np.abs(s_values(pts, scan))
    k = int(np.argmax(abs_s))

    checks = []
    for bound in bounds:
        limit = bound.a + bound.b * np.log(pts)
        bad = np.nonzero(abs_s > limit)[0]
        checks.append(
            BoundCheck(bound, [(float(pts[i]), float(abs_s[i]), float(limit[i])) for i in bad])
        )
    return ViolationReport(
        t_lo=t_lo,
        t_hi=t_hi,
        samples=int(samples),
        max_abs_s=float(abs_s[k]),
        argmax_t=float(pts[k]),
        checks=checks,
    )


@dataclass
class FamilyResult:
    name: str
    checked: int
    failures: int
    worst_margin: float
    worst_point: list

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "checked": self.checked,
            "failures": self.failures,
            "worst_margin": self.worst_margin,
            "worst_point": self.worst_point,
            "passed": self.passed,
        }


def _family(name, margins, points) -> FamilyResult:
    margins = np.asarray(margins, dtype=float)
    k = int(np.argmin(margins))
    return FamilyResult(
        name=name,
        checked=int(margins.size),
        failures=int(np.sum(margins < 0.0)),
        worst_margin=float(margins[k]),
        worst_point=[float(x) for x in points[k]],
    )


def check_lemmas(samples: int = 500, seed: int = 42) -> list[FamilyResult]:
    """Random-sample domination checks; margin = bound - true value.

    Families: the Gamma-ratio bound on -1/2 <= sigma <= 1/2; both strip
    bounds with t0 = 100 and t in [t0, 4 t0] for the convexity and a
    Cheng-Graham certificate; the Euler-product lower bound
    |zeta(sigma + it)| >= zeta(2 sigma) / zeta(sigma) for sigma > 1; and
    the raw Cheng-Graham bound on (e, 2000].
    """
    if samples < 1:
        raise DomainError("samples must be >= 1")
    rng = np.random.default_rng(seed)
    results = []

    # Gamma ratio; s = 1/2 is included where the bound is attained
    sig = rng.uniform(-0.5, 0.5, samples)
    t = rng.uniform(1.0, 100.0, samples) * rng.choice([-1.0, 1.0], samples)
    pts = [(0.5, 0.0)] + list(zip(sig, t))
    margins = [gamma_ratio_bound(complex(a, b)) - gamma_ratio_true(complex(a, b)) for a, b in pts]
    results.append(_family("gamma_ratio", margins, pts))

    t0 = 100.0
    certs = [make_convexity(), make_cheng_graham(1.0 / 12.0), make_cheng_graham(0.01)]
    for side in ("right", "left"):
        eta = rng.uniform(0.01, 0.5, samples)
        u = rng.uniform(0.0, 1.0, samples)
        t = rng.uniform(t0 * (1 + 1e-9), 4.0 * t0, samples)
        which = rng.integers(0, len(certs), samples)
        if side == "right":
            sig = 0.5 + u * (0.5 + eta)
            fn = strip_bound_right
        else:
            sig = -eta + u * (0.5 + eta)
            fn = strip_bound_left
        true = np.abs(zeta_complex(sig + 1j * t))
        margins = [
            fn(StripBoundParams(float(e), t0, certs[w]), complex(a, b)) - z
            for e, a, b, w, z in zip(eta, sig, t, which, true)
        ]
        results.append(_family(f"strip_{side}", margins, list(zip(eta, sig, t, which))))

    sig = rng.uniform(1.01, 3.0, samples)
    t = rng.uniform(0.0, 1000.0, samples)
    true = np.abs(zeta_complex(sig + 1j * t))
    lower = zeta_real(2.0 * sig) / zeta_real(sig)
    results.append(_family("euler_product", true - lower, list(zip(sig, t))))

    t = rng.uniform(math.e * (1 + 1e-12), 2000.0, samples)
    true = np.abs(zeta_complex(0.5 + 1j * t))
    margins = [cheng_graham_raw(float(x)) - z for x, z in zip(t, true)]
    results.append(_family("cheng_graham", margins, [(x,) for x in t]))
    return results
