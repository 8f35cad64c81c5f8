import math

import numpy as np
import pytest

from zetaarg.critline import (
    MAX_DELTA,
    CertificateKind,
    cheng_graham_raw,
    make_cheng_graham,
    make_convexity,
    make_custom,
)
from zetaarg.exceptions import CoefficientOnlyError, DomainError
from zetaarg.specfun import zeta_complex


def test_cheng_graham_raw_values():
    # 3 e^(1/6) and 6 e^(1/3); the t = e value is the limit from the right
    assert abs(cheng_graham_raw(math.e * (1 + 1e-15)) - 3.5440812385969379) < 1e-12
    assert abs(cheng_graham_raw(math.e**2) - 8.3736745505165372) < 1e-12
    assert abs(cheng_graham_raw(1000.0) - 65.532720601906208) < 1e-11


def test_cheng_graham_raw_domain():
    with pytest.raises(DomainError):
        cheng_graham_raw(math.e)
    with pytest.raises(DomainError):
        cheng_graham_raw(1.0)


def test_make_cheng_graham_values():
    c = make_cheng_graham(1 / 12)
    assert c.B == pytest.approx(36 / math.e, rel=1e-15)
    assert c.theta == pytest.approx(0.25, rel=1e-15)
    c = make_cheng_graham(0.01)
    assert c.B == pytest.approx(110.36383235143269, rel=1e-14)
    assert c.theta == pytest.approx(1 / 6 + 0.01, rel=1e-15)
    assert c.kind is CertificateKind.CHENG_GRAHAM
    assert c.valid_from == 0.0


@pytest.mark.parametrize("delta", [1 / 6, 0.0, -0.01, MAX_DELTA * (1 + 1e-9)])
def test_make_cheng_graham_domain(delta):
    with pytest.raises(DomainError):
        make_cheng_graham(delta)


def test_convexity():
    c = make_convexity()
    assert c.B == 2.53
    assert c.theta == 0.25
    assert c.kind is CertificateKind.CONVEXITY


def test_convexity_certificate_at_50():
    c = make_convexity()
    lhs = c(50.0)
    assert lhs == pytest.approx(6.7284008717741493, rel=1e-12)
    assert abs(zeta_complex(0.5 + 50j)) == pytest.approx(0.34073500595498, abs=1e-6)
    assert lhs >= abs(zeta_complex(0.5 + 50j))


def test_custom_coefficient_only():
    c = make_custom(None, 32 / 205)
    assert c.coefficient_only
    with pytest.raises(CoefficientOnlyError):
        c.require_prefactor()


def test_custom_matches_convexity():
    a, b = make_custom(2.53, 0.25), make_convexity()
    assert (a.B, a.theta) == (b.B, b.theta)
    for t in (1.0, 50.0, 1e6):
        assert a(t) == b(t)


def test_custom_domain():
    with pytest.raises(DomainError):
        make_custom(1.0, 0.3)
    with pytest.raises(DomainError):
        make_custom(-1.0, 0.2)


@pytest.mark.parametrize("delta", [0.001, 0.01, 0.03, 0.05, 1 / 12])
def test_log_over_power_maximum(delta):
    t = np.geomspace(1.0, 1e6, 200_001)
    reachable = 1.0 / delta <= math.log(1e6)
    if reachable:
        t = np.append(t, math.exp(1.0 / delta))
    values = np.log(t) / t**delta
    expected = 1.0 / (delta * math.e)
    if reachable:
        assert abs(values.max() - expected) < 1e-9
    else:
        # the maximiser lies beyond 1e6; the scanned maximum stays below the bound
        assert values.max() < expected


def test_prefactor_decreasing_in_delta():
    deltas = np.linspace(1e-4, MAX_DELTA, 200)
    B = [make_cheng_graham(d).B for d in deltas]
    assert np.all(np.diff(B) < 0)


def test_certificates_dominate_zeta():
    rng = np.random.default_rng(7)
    t = rng.uniform(1.0, 2000.0, 200)
    true = np.abs(zeta_complex(0.5 + 1j * t))
    for cert in (make_convexity(), make_cheng_graham(1 / 12), make_cheng_graham(0.01)):
        bound = np.array([cert(x) for x in t])
        assert np.all(bound >= true)
    above_e = t > math.e
    raw = np.array([cheng_graham_raw(x) for x in t[above_e]])
    assert np.all(raw >= true[above_e])
