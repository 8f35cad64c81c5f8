import math

import mpmath
import numpy as np
import pytest

from zetaarg.critline import make_cheng_graham, make_convexity, make_custom
from zetaarg.exceptions import CoefficientOnlyError, DomainError
from zetaarg.specfun import zeta_complex, zeta_real
from zetaarg.stripbounds import (
    LineBoundSpec,
    StripBoundParams,
    gamma_ratio_bound,
    gamma_ratio_true,
    pl_interpolate,
    reflected_line_bound,
    strip_bound_left,
    strip_bound_right,
)


class TestInterpolate:
    left = LineBoundSpec(-0.3, 4.0, 1.2)
    right = LineBoundSpec(0.7, 1.5, 0.4)

    def test_endpoints(self):
        s = complex(-0.3, 20.0)
        assert pl_interpolate(self.left, self.right, 1.0, s) == pytest.approx(
            4.0 * abs(1 + s) ** 1.2, rel=1e-12
        )
        s = complex(0.7, 20.0)
        assert pl_interpolate(self.left, self.right, 1.0, s) == pytest.approx(
            1.5 * abs(1 + s) ** 0.4, rel=1e-12
        )

    def test_geometric_mean(self):
        left, right = LineBoundSpec(0.0, 4.0, 0.0), LineBoundSpec(1.0, 1.0, 0.0)
        assert pl_interpolate(left, right, 0.0, complex(0.5, 3.0)) == pytest.approx(2.0, rel=1e-15)

    def test_log_linear_in_sigma(self):
        Q = 2.0
        sig = [-0.3, 0.1, 0.55]
        # fix |Q + s| by moving t
        mod = 50.0
        logs = []
        for x in sig:
            s = complex(x, math.sqrt(mod**2 - (Q + x) ** 2))
            logs.append(math.log(pl_interpolate(self.left, self.right, Q, s)))
        slope1 = (logs[1] - logs[0]) / (sig[1] - sig[0])
        slope2 = (logs[2] - logs[1]) / (sig[2] - sig[1])
        assert abs(slope1 - slope2) < 1e-12

    def test_domain(self):
        with pytest.raises(DomainError):
            pl_interpolate(self.left, self.right, 1.0, complex(0.8, 1.0))
        with pytest.raises(DomainError):
            pl_interpolate(self.right, self.left, 1.0, 0.0)
        with pytest.raises(DomainError):
            pl_interpolate(LineBoundSpec(0, 1, 0.1), LineBoundSpec(1, 1, 0.5), 1.0, 0.5)


class TestGammaRatio:
    def test_equality_at_half(self):
        assert gamma_ratio_bound(0.5) == 1.0
        assert gamma_ratio_true(0.5) == pytest.approx(1.0, abs=1e-14)

    def test_near_zero(self):
        assert gamma_ratio_bound(0.0) == pytest.approx(math.sqrt(0.5), rel=1e-15)
        s = 1e-6
        assert gamma_ratio_true(s) <= gamma_ratio_bound(s)

    def test_example_point(self):
        s = complex(-0.25, 10.0)
        assert gamma_ratio_bound(s) == pytest.approx(3.3507422848594190, rel=1e-12)
        true = abs(mpmath.gamma(0.5 - 0.5 * s) / mpmath.gamma(0.5 * s))
        assert gamma_ratio_true(s) == pytest.approx(float(true), rel=1e-11)
        assert gamma_ratio_true(s) < gamma_ratio_bound(s)

    def test_dominates(self):
        rng = np.random.default_rng(3)
        for _ in range(200):
            s = complex(rng.uniform(-0.5, 0.5), rng.uniform(1, 100) * rng.choice([-1, 1]))
            assert gamma_ratio_bound(s) >= gamma_ratio_true(s)

    def test_domain(self):
        with pytest.raises(DomainError):
            gamma_ratio_bound(complex(0.6, 1.0))


def _params(eta=0.25, t0=1e4, cert=None, **kw):
    return StripBoundParams(eta, t0, cert or make_convexity(), **kw)


class TestReflected:
    def test_value(self):
        p = _params(eta=0.1, t0=50.0)
        expected = 5.2614158880415273 * 10.584448464950810
        assert reflected_line_bound(p, complex(-0.1, 100.0)) == pytest.approx(expected, rel=1e-11)

    def test_exponent_one_at_half(self):
        p = _params(eta=0.5, t0=10.0)
        s1, s2 = complex(-0.5, 1000.0), complex(-0.5, 2000.0)
        ratio = reflected_line_bound(p, s2) / reflected_line_bound(p, s1)
        assert ratio == pytest.approx(abs(s2 + 1) / abs(s1 + 1), rel=1e-13)

    def test_dominates(self):
        p = _params(eta=0.1, t0=50.0)
        s = complex(-0.1, 100.0)
        assert reflected_line_bound(p, s) >= abs(zeta_complex(s))

    def test_domain(self):
        p = _params(eta=0.1, t0=50.0)
        with pytest.raises(DomainError):
            reflected_line_bound(p, complex(-0.2, 100.0))
        with pytest.raises(DomainError):
            reflected_line_bound(p, complex(-0.1, 10.0))


class TestStripBounds:
    def test_right_regression(self):
        value = strip_bound_right(_params(), complex(0.875, 1e5))
        assert value == pytest.approx(14.378325641964133, rel=1e-11)

    def test_left_regression(self):
        value = strip_bound_left(_params(), complex(0.0, 1e5))
        assert value == pytest.approx(1240.1692647878453, rel=1e-11)

    @pytest.mark.parametrize("eta", [0.05, 0.25, 0.5])
    @pytest.mark.parametrize("t", [1.5e4, 1e6])
    def test_endpoint_algebra(self, eta, t):
        for cert in (make_convexity(), make_cheng_graham(0.02)):
            p = _params(eta=eta, cert=cert)
            z = zeta_real(1 + eta)
            assert strip_bound_right(p, complex(1 + eta, t)) == pytest.approx(p.C1 * z, rel=1e-12)
            assert strip_bound_right(p, complex(0.5, t)) == pytest.approx(
                p.C1 ** (cert.theta + 1) * cert.B * t**cert.theta, rel=1e-12
            )
            assert strip_bound_left(p, complex(0.5, t)) == pytest.approx(
                cert.B * (p.C2 * t) ** cert.theta, rel=1e-12
            )
            assert strip_bound_left(p, complex(-eta, t)) == pytest.approx(
                z / (2 * math.pi) ** (0.5 + eta) * (p.C2 * t) ** (0.5 + eta), rel=1e-12
            )

    def test_verbatim_log_breaks_endpoint(self):
        p = _params(verbatim_log=True)
        z = zeta_real(1.25)
        assert strip_bound_right(p, complex(1.25, 2e4)) == pytest.approx(p.C1 * math.log(z), rel=1e-12)
        assert strip_bound_right(p, complex(1.25, 2e4)) != pytest.approx(p.C1 * z, rel=1e-3)

    def test_right_from_interpolation(self):
        rng = np.random.default_rng(11)
        for _ in range(50):
            eta = rng.uniform(0.01, 0.5)
            cert = make_cheng_graham(rng.uniform(0.001, 1 / 12))
            p = _params(eta=eta, t0=100.0, cert=cert)
            sigma = rng.uniform(0.5, 1 + eta)
            t = rng.uniform(101.0, 1e5)
            # f(s) = (s - 1) zeta(s), Q = 1, and |s + 1| replaced by C1 t
            left = LineBoundSpec(0.5, cert.B, 1 + cert.theta)
            right = LineBoundSpec(1 + eta, p.zeta_1_eta, 1.0)
            mod = p.C1 * t
            s_sub = complex(sigma, math.sqrt(mod**2 - (1 + sigma) ** 2))
            via_pl = pl_interpolate(left, right, 1.0, s_sub) / t
            assert strip_bound_right(p, complex(sigma, t)) == pytest.approx(via_pl, rel=1e-10)

    def test_left_from_interpolation(self):
        rng = np.random.default_rng(12)
        for _ in range(50):
            eta = rng.uniform(0.01, 0.5)
            p = _params(eta=eta, t0=100.0)
            sigma = rng.uniform(-eta, 0.5)
            t = rng.uniform(101.0, 1e5)
            left = LineBoundSpec(-eta, p.zeta_1_eta / (2 * math.pi) ** (0.5 + eta), 0.5 + eta)
            right = LineBoundSpec(0.5, p.cert.B, p.cert.theta)
            mod = p.C2 * t
            s_sub = complex(sigma, math.sqrt(mod**2 - (1 + sigma) ** 2))
            via_pl = pl_interpolate(left, right, 1.0, s_sub)
            assert strip_bound_left(p, complex(sigma, t)) == pytest.approx(via_pl, rel=1e-10)

    def test_dominate_zeta(self):
        rng = np.random.default_rng(5)
        t0 = 100.0
        for _ in range(100):
            eta = rng.uniform(0.01, 0.5)
            p = _params(eta=eta, t0=t0)
            t = rng.uniform(t0 + 1e-6, 4 * t0)
            s_r = complex(rng.uniform(0.5, 1 + eta), t)
            s_l = complex(rng.uniform(-eta, 0.5), t)
            assert strip_bound_right(p, s_r) >= abs(zeta_complex(s_r))
            assert strip_bound_left(p, s_l) >= abs(zeta_complex(s_l))

    def test_constants_exceed_one(self):
        p = _params(eta=0.3, t0=3.0)
        assert p.C1 > 1 and p.C2 > 1
        assert p.C1 == pytest.approx(math.sqrt(1 + (2.3 / 3) ** 2))

    def test_errors(self):
        p = _params(cert=make_custom(None, 32 / 205))
        with pytest.raises(CoefficientOnlyError):
            strip_bound_right(p, complex(0.7, 2e4))
        p = _params()
        with pytest.raises(DomainError):
            strip_bound_right(p, complex(0.4, 2e4))
        with pytest.raises(DomainError):
            strip_bound_left(p, complex(0.0, 5e3))
        with pytest.raises(DomainError):
            StripBoundParams(0.6, 100.0, make_convexity())
        with pytest.raises(DomainError):
            StripBoundParams(0.3, 2.0, make_convexity())
