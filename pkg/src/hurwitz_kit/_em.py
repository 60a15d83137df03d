"""Euler-Maclaurin kernels for zeta(z, q) and its z-derivatives.

The series start is shifted to n = N, the tail integral is added in closed
form and B_2 .. B_2M corrections are appended.  Derivatives with respect to z
are taken term by term, so no finite differences are involved.
"""
import math

from ._tables import B2K_OVER_FACT
from .errors import PoleError

POLE_GUARD = 1e-8
EM_CORRECTIONS = 8


def shift_for(z):
    return max(20, math.ceil(abs(z)) + 10)


def check_pole(z):
    if abs(z - 1.0) < POLE_GUARD:
        raise PoleError(f"zeta has a pole at z=1 (got z={z!r})")


def hurwitz_em(z, q, order=0, n_shift=None, n_corr=EM_CORRECTIONS):
    """Return [zeta, d/dz zeta, d2/dz2 zeta][: order + 1] at (z, q)."""
    check_pole(z)
    N = shift_for(z) if n_shift is None else n_shift
    v = [0.0, 0.0, 0.0]
    for n in range(N):
        x = n + q
        lx = math.log(x)
        t = math.exp(-z * lx)
        v[0] += t
        if order:
            v[1] -= lx * t
            v[2] += lx * lx * t
    a = N + q
    la = math.log(a)
    aw = math.exp((1.0 - z) * la)
    zm1 = z - 1.0
    v[0] += aw / zm1
    ah = 0.5 * math.exp(-z * la)
    v[0] += ah
    if order:
        v[1] += -la * aw / zm1 - aw / zm1 ** 2 - la * ah
        v[2] += la * la * aw / zm1 + 2 * la * aw / zm1 ** 2 + 2 * aw / zm1 ** 3 + la * la * ah
    # (z)_{2k-1} and its first two z-derivatives, built factor by factor
    p, dp, d2p = 1.0, 0.0, 0.0
    j = 0
    for k in range(1, n_corr + 1):
        while j < 2 * k - 1:
            f = z + j
            d2p = d2p * f + 2 * dp
            dp = dp * f + p
            p = p * f
            j += 1
        e = math.exp(-(z + 2 * k - 1) * la)
        c = B2K_OVER_FACT[k]
        v[0] += c * p * e
        if order:
            v[1] += c * (dp - p * la) * e
            v[2] += c * (d2p - 2 * dp * la + p * la * la) * e
    return v[: order + 1]


def hurwitz_em_difference(z, q1, q2, n_corr=EM_CORRECTIONS):
    """zeta(z, q1) - zeta(z, q2); finite at z = 1 because the poles cancel."""
    N = shift_for(z)
    s = 0.0
    for n in range(N):
        s += (n + q1) ** (-z) - (n + q2) ** (-z)
    a1, a2 = N + q1, N + q2
    w = 1.0 - z
    L = math.log(a1 / a2)
    # (a1^w - a2^w) / (z - 1) = -a2^w * expm1(w L) / w
    ratio = L if w == 0.0 else math.expm1(w * L) / w
    s -= math.exp(w * math.log(a2)) * ratio
    s += 0.5 * (a1 ** (-z) - a2 ** (-z))
    p = 1.0
    j = 0
    for k in range(1, n_corr + 1):
        while j < 2 * k - 1:
            p *= z + j
            j += 1
        s += B2K_OVER_FACT[k] * p * (a1 ** (-z - 2 * k + 1) - a2 ** (-z - 2 * k + 1))
    return s
