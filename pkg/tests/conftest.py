import math

import mpmath
import pytest

from zetaarg.verify import scan_zeros


def borwein_zeta(s, n=60):
    """Zeta via Borwein's accelerated alternating (Dirichlet eta) series.

    Independent of the Euler-Maclaurin path; converges for Re(s) > 0,
    s != 1, with error about 3**-n times a mild factor in |Im s|.
    """
    d = [0.0] * (n + 1)
    acc = 0.0
    for k in range(n + 1):
        acc += math.factorial(n + k - 1) * 4**k / (math.factorial(n - k) * math.factorial(2 * k)) if k else 1.0 / n
        d[k] = n * acc
    total = 0.0
    for k in range(n):
        total += (-1) ** k * (d[k] - d[n]) / (k + 1) ** s
    eta = -total / d[n]
    return eta / (1 - 2 ** (1 - s))


def bisect_root(f, lo, hi, tol=1e-10):
    flo = f(lo)
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if (fm < 0) == (flo < 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


@pytest.fixture(scope="session")
def scan_1000():
    return scan_zeros(1000.0)


@pytest.fixture(scope="session")
def mp_siegelz():
    return lambda t: float(mpmath.siegelz(t))
