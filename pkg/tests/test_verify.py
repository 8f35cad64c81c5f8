import math

import mpmath
import numpy as np
import pytest

from zetaarg.critline import make_convexity
from zetaarg.exceptions import DomainError
from zetaarg.sbounds import BoundParams, LinearBound, BoundMethod, rosser_bound, theorem_b_bound
from zetaarg.specfun import theta_rs
from zetaarg.verify import (
    ORDINATE_TOL,
    check_bounds_empirically,
    check_lemmas,
    s_of_t,
    s_values,
    scan_zeros,
)


class TestScan:
    def test_first_ordinates(self, scan_1000):
        ords = scan_1000.sign_change_ordinates
        for k in range(1, 6):
            assert abs(ords[k - 1] - float(mpmath.zetazero(k).imag)) < 1e-6

    def test_counts(self, scan_1000):
        assert scan_1000.count_upto(100.0) == 29
        assert scan_1000.zero_count == 649
        assert scan_1000.count_upto(100.0) == int(mpmath.nzeros(100))

    def test_no_suspicious_gaps(self, scan_1000):
        assert scan_1000.suspicious_gaps == ()

    def test_sorted_and_distinct(self, scan_1000):
        ords = np.asarray(scan_1000.sign_change_ordinates)
        assert np.all(np.diff(ords) > 0)

    def test_counts_track_theta(self, scan_1000):
        # N(t) - 1 - theta/pi stays small, so counts agree with the smooth term
        t = np.linspace(20.0, 1000.0, 400)
        expected = np.round(theta_rs(t) / math.pi + 1.0)
        counts = np.searchsorted(scan_1000.sign_change_ordinates, t, side="right")
        assert np.max(np.abs(counts - expected)) <= 1

    def test_threads_match_serial(self):
        a = scan_zeros(4500.0)
        b = scan_zeros(4500.0, n_jobs=3)
        assert a.sign_change_ordinates == b.sign_change_ordinates

    def test_deterministic(self):
        assert scan_zeros(200.0) == scan_zeros(200.0)

    def test_domain(self):
        with pytest.raises(DomainError):
            scan_zeros(6000.0)
        with pytest.raises(DomainError):
            scan_zeros(100.0, grid_step=0.0)


class TestS:
    def test_at_100(self, scan_1000):
        ev = s_of_t(100.0, scan_1000)
        assert ev.n_of_t == 29.0
        assert ev.s_of_t == pytest.approx(29 - 1 - theta_rs(100.0) / math.pi, abs=1e-12)
        assert ev.s_of_t == pytest.approx(-0.0024, abs=1e-3)

    def test_below_first_zero(self, scan_1000):
        ev = s_of_t(3.0, scan_1000)
        assert ev.n_of_t == 0.0
        assert ev.s_of_t == pytest.approx(-1 - theta_rs(3.0) / math.pi, abs=1e-15)

    def test_midpoint_at_ordinate(self, scan_1000):
        g = scan_1000.sign_change_ordinates[0]
        assert s_of_t(g, scan_1000).n_of_t == 0.5
        assert s_of_t(g + ORDINATE_TOL / 2, scan_1000).n_of_t == 0.5

    def test_unit_jumps(self, scan_1000):
        for g in scan_1000.sign_change_ordinates[:50]:
            before = s_of_t(g - 1e-5, scan_1000).s_of_t
            after = s_of_t(g + 1e-5, scan_1000).s_of_t
            assert after - before == pytest.approx(1.0, abs=1e-4)

    def test_decreasing_between_zeros(self, scan_1000):
        ords = scan_1000.sign_change_ordinates
        for a, b in zip(ords[100:110], ords[101:111]):
            t = np.linspace(a + 1e-4, b - 1e-4, 20)
            assert np.all(np.diff(s_values(t, scan_1000)) < 0)

    def test_vectorised_agrees(self, scan_1000):
        t = np.linspace(3.5, 999.0, 77)
        direct = [s_of_t(x, scan_1000).s_of_t for x in t]
        assert np.allclose(s_values(t, scan_1000), direct, atol=1e-12)

    def test_mean_near_zero(self, scan_1000):
        t = np.linspace(10.0, 1000.0, 20000)
        assert abs(np.mean(s_values(t, scan_1000))) < 0.05

    def test_domain(self, scan_1000):
        with pytest.raises(DomainError):
            s_of_t(2.0, scan_1000)
        with pytest.raises(DomainError):
            s_of_t(1500.0, scan_1000)


class TestEmpiricalCheck:
    def test_bounds_hold(self, scan_1000):
        bounds = [
            rosser_bound(3.0),
            theorem_b_bound(BoundParams(0.351, 3.001, make_convexity())),
        ]
        report = check_bounds_empirically(4.0, 1000.0, bounds, samples=2000, scan=scan_1000)
        assert report.passed
        assert report.max_abs_s == pytest.approx(1.172, abs=5e-3)
        d = report.as_dict()
        assert d["passed"] and len(d["bounds"]) == 2

    def test_reports_violations_as_data(self, scan_1000):
        tight = LinearBound(0.1, 1e-3, 3.0, BoundMethod.ROSSER)
        report = check_bounds_empirically(4.0, 200.0, [tight], samples=200, scan=scan_1000)
        assert not report.passed
        t, s, lim = report.checks[0].violations[0]
        assert s > lim

    def test_bound_must_cover_range(self, scan_1000):
        with pytest.raises(DomainError):
            check_bounds_empirically(4.0, 100.0, [rosser_bound(10.0)], scan=scan_1000)


@pytest.fixture(scope="module")
def families():
    return check_lemmas(500, 42)


class TestLemmas:
    def test_all_pass(self, families):
        names = [f.name for f in families]
        assert names == ["gamma_ratio", "strip_right", "strip_left", "euler_product", "cheng_graham"]
        for f in families:
            assert f.passed, f.as_dict()
            assert f.checked >= 500

    def test_gamma_ratio_tight_at_half(self, families):
        assert families[0].worst_margin == pytest.approx(0.0, abs=1e-13)

    def test_deterministic(self, families):
        again = check_lemmas(500, 42)
        assert [f.as_dict() for f in again] == [f.as_dict() for f in families]

    def test_domain(self):
        with pytest.raises(DomainError):
            check_lemmas(0)
