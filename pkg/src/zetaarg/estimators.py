"""scikit-learn style wrappers.

``ArgumentBound`` fits the constants of a linear bound a + b log T at a
height ``t0`` and predicts the bound at new heights.  ``ArgumentOfZeta``
fits a zero scan and predicts S(t) directly.  Both follow the estimator
conventions (hyperparameters in ``__init__``, learned state with a
trailing underscore), so ``get_params``/``set_params``/``clone`` work.
"""

from __future__ import annotations

import math

import numpy as np
from sklearn.base import BaseEstimator, RegressorMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .critline import CertificateKind, certificate_for
from .exceptions import DomainError
from .optimize import minimize_bound
from .sbounds import BoundParams, rosser_bound, theorem_b_bound
from .verify import s_values, scan_zeros

__all__ = ["ArgumentBound", "ArgumentOfZeta"]


def _heights(X) -> np.ndarray:
    X = check_array(X, ensure_2d=False, dtype=float)
    if X.ndim == 2:
        if X.shape[1] != 1:
            raise ValueError(f"expected a single column of heights, got shape {X.shape}")
        X = X[:, 0]
    return X


class ArgumentBound(BaseEstimator):
    """Linear bound |S(T)| <= a + b log T valid for T >= t0.

    Parameters
    ----------
    t0 : float
        Height above which the bound is asserted.
    mode : {"convexity", "cheng-graham", "custom", "rosser"}
    eta, delta : float, optional
        Fixed parameters; when ``eta`` is omitted (and, in Cheng-Graham
        mode, ``delta``) they are chosen to minimise ``a + b log t0``.
    theta, B : float, optional
        Certificate for ``mode="custom"``.
    """

    def __init__(self, t0=1e10, mode="convexity", eta=None, delta=None, theta=None, B=None):
        self.t0 = t0
        self.mode = mode
        self.eta = eta
        self.delta = delta
        self.theta = theta
        self.B = B

    def fit(self, X=None, y=None):
        if self.mode == "rosser":
            self.bound_ = rosser_bound(self.t0)
            self.eta_ = self.delta_ = None
        elif self.eta is None:
            mode = CertificateKind(self.mode)
            cert = None
            if mode is CertificateKind.CUSTOM:
                cert = certificate_for(mode, theta=self.theta, B=self.B)
            elif mode is CertificateKind.CHENG_GRAHAM and self.delta is not None:
                cert, mode = certificate_for(mode, delta=self.delta), CertificateKind.CUSTOM
            res = minimize_bound(self.t0, mode, cert=cert)
            self.bound_ = res.bound
            self.eta_ = res.best_eta
            self.delta_ = res.best_delta if res.best_delta is not None else self.delta
        else:
            cert = certificate_for(self.mode, delta=self.delta, theta=self.theta, B=self.B)
            self.bound_ = theorem_b_bound(BoundParams(self.eta, self.t0, cert))
            self.eta_, self.delta_ = self.eta, self.delta
        self.a_ = self.bound_.a
        self.b_ = self.bound_.b
        self.t0_ = self.bound_.t0
        return self

    def predict(self, X):
        """Bound values a + b log T at the heights in ``X``."""
        check_is_fitted(self, "bound_")
        T = _heights(X)
        return self.bound_.value_at(T)

    @property
    def total_at_t0_(self) -> float:
        check_is_fitted(self, "bound_")
        return self.a_ + self.b_ * math.log(self.t0_)


class ArgumentOfZeta(RegressorMixin, BaseEstimator):
    """S(t) computed from a sign-change scan of Hardy's Z up to ``t_max``.

    ``score`` is the usual R^2, so a fitted instance can be compared to
    reference S values.
    """

    def __init__(self, t_max=1000.0, grid_step=0.05, n_jobs=None):
        self.t_max = t_max
        self.grid_step = grid_step
        self.n_jobs = n_jobs

    def fit(self, X=None, y=None):
        self.scan_ = scan_zeros(self.t_max, self.grid_step, n_jobs=self.n_jobs)
        self.ordinates_ = np.asarray(self.scan_.sign_change_ordinates)
        self.n_zeros_ = self.scan_.zero_count
        return self

    def predict(self, X):
        check_is_fitted(self, "scan_")
        t = _heights(X)
        if np.any(t < 1.0) or np.any(t > self.scan_.t_max):
            raise DomainError(f"heights must lie in [1, {self.scan_.t_max}]")
        return s_values(t, self.scan_)

    def transform(self, X):
        """Columns (N(t), S(t))."""
        check_is_fitted(self, "scan_")
        t = _heights(X)
        counts = np.searchsorted(self.ordinates_, t, side="right").astype(float)
        return np.column_stack([counts, self.predict(t)])
