"""Scalar special functions and exact combinatorial quantities.

Everything here is a pure function of its arguments.  Exact quantities
(Bernoulli and Euler numbers, harmonic numbers, zeta at non-positive integers)
are returned as :class:`fractions.Fraction`; everything else is a float.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
import math
from numbers import Rational as _RationalABC

from . import _em
from ._tables import BERNOULLI, BERNOULLI_CAP, EULER, EULER_CAP
from .errors import CapacityError, DomainError, PoleError

Rational = Fraction

LN_2PI = math.log(2.0 * math.pi)
EULER_GAMMA = 0.57721566490153286061
# limit of d * zeta(1 + d) is 1 + g0 d - g1 d^2 + g2 d^3 / 2 with Stieltjes g_n
_STIELTJES = (0.57721566490153286061, -0.072815845483676724861, -0.0096903631928723184845)


def _sinpi(x):
    """sin(pi x) without the rounding error of forming pi * x for large x."""
    r = math.fmod(x, 2.0)
    if r > 1.0:
        r -= 2.0
    elif r < -1.0:
        r += 2.0
    if r > 0.5:
        return math.sin(math.pi * (1.0 - r))
    if r < -0.5:
        return -math.sin(math.pi * (1.0 + r))
    return math.sin(math.pi * r)


def _cospi(x):
    r = math.fmod(abs(x), 2.0)
    if r > 1.0:
        r = 2.0 - r
    return math.sin(math.pi * (0.5 - r))


def _is_nonpositive_integer(x):
    return x <= 0 and x == math.floor(x)


# ---------------------------------------------------------------------------
# Exact combinatorics
# ---------------------------------------------------------------------------

def bernoulli_number(m):
    """Exact Bernoulli number B_m with the convention B_1 = -1/2."""
    if m < 0:
        raise DomainError(f"Bernoulli index must be >= 0, got {m}")
    if m > BERNOULLI_CAP:
        raise CapacityError(f"Bernoulli index {m} exceeds table capacity {BERNOULLI_CAP}")
    return BERNOULLI[m]


@lru_cache(maxsize=None)
def _monomial_coeffs(m):
    # C(m, k) B_k, the coefficient of q^(m-k)
    return tuple(float(math.comb(m, k) * BERNOULLI[k]) for k in range(m + 1))


@lru_cache(maxsize=None)
def _centered_coeffs(m):
    # B_m(1/2 + t) = sum_k C(m, k) B_k(1/2) t^(m-k), B_k(1/2) = (2^(1-k) - 1) B_k
    return tuple(float(math.comb(m, k) * (Fraction(2) ** (1 - k) - 1) * BERNOULLI[k])
                 for k in range(m + 1))


def _horner(coeffs, x):
    acc = 0.0
    for c in coeffs:
        acc = acc * x + c
    return acc


def bernoulli_poly(m, q):
    """Bernoulli polynomial B_m(q).

    Exact (a ``Fraction``) when ``q`` is an int or Fraction: Horner's scheme
    over the coefficients C(m, k) B_k of q^(m-k).  For float q in [0, 1] the
    same scheme runs at p = min(q, 1 - q), using B_m(1-p) = (-1)^m B_m(p);
    this keeps relative accuracy near the zeros at q = 0 and 1 (so B_m(q)/q is
    accurate for odd m >= 3).  Elsewhere the expansion about q = 1/2 is used;
    its coefficients are smaller than the monomial ones.
    """
    if m < 0:
        raise DomainError(f"Bernoulli index must be >= 0, got {m}")
    if m > BERNOULLI_CAP:
        raise CapacityError(f"Bernoulli index {m} exceeds table capacity {BERNOULLI_CAP}")
    if isinstance(q, _RationalABC):
        acc = Fraction(0)
        for k in range(m + 1):
            acc = acc * q + math.comb(m, k) * BERNOULLI[k]
        return acc
    if 0.0 <= q <= 0.5:
        return _horner(_monomial_coeffs(m), q)
    if 0.5 < q <= 1.0:
        # 1 - q is exact here
        v = _horner(_monomial_coeffs(m), 1.0 - q)
        return -v if m % 2 else v
    return _horner(_centered_coeffs(m), q - 0.5)


def euler_number(n):
    """Exact Euler number E_n (sec t = sum (-1)^k E_2k t^2k / (2k)!)."""
    if n < 0 or n % 2:
        raise DomainError(f"Euler numbers are indexed by even n >= 0, got {n}")
    if n > EULER_CAP:
        raise CapacityError(f"Euler index {n} exceeds table capacity {EULER_CAP}")
    return EULER[n]


def zeta_nonpositive_exact(r):
    """zeta(-r) for integer r >= 0 as an exact rational, (-1)^r B_{r+1}/(r+1)."""
    if r < 0:
        raise DomainError(f"need r >= 0, got {r}")
    return (-1) ** r * bernoulli_number(r + 1) / (r + 1)


def harmonic(n):
    """H_n = 1 + 1/2 + ... + 1/n as a Fraction; H_0 = 0."""
    if n < 0:
        raise DomainError(f"harmonic numbers need n >= 0, got {n}")
    return sum((Fraction(1, k) for k in range(1, n + 1)), Fraction(0))


def pochhammer(x, k):
    """Rising factorial (x)_k = x (x+1) ... (x+k-1); exact for exact x."""
    if k < 0:
        raise DomainError(f"Pochhammer length must be >= 0, got {k}")
    acc = 1
    for j in range(k):
        acc = acc * (x + j)
    return acc


# ---------------------------------------------------------------------------
# Gamma family
# ---------------------------------------------------------------------------

def gamma(x):
    if _is_nonpositive_integer(x):
        raise PoleError(f"gamma has a pole at x={x!r}")
    try:
        return math.gamma(x)
    except OverflowError:
        raise DomainError(f"gamma({x!r}) overflows double precision") from None


def log_gamma(x):
    """ln Gamma(x) for x > 0."""
    if x <= 0:
        if _is_nonpositive_integer(x):
            raise PoleError(f"log_gamma has a pole at x={x!r}")
        raise DomainError(f"log_gamma is defined here for x > 0, got {x!r}")
    return math.lgamma(x)


def rgamma(x):
    """1 / Gamma(x); entire, zero at the non-positive integers."""
    if _is_nonpositive_integer(x):
        return 0.0
    if x < 0.5:
        return math.gamma(1.0 - x) * _sinpi(x) / math.pi
    if x > 171.0:
        return math.exp(-math.lgamma(x))
    return 1.0 / math.gamma(x)


def beta_function(x, y):
    """B(x, y) = Gamma(x) Gamma(y) / Gamma(x + y)."""
    for v in (x, y):
        if _is_nonpositive_integer(v):
            raise PoleError(f"beta function has a pole at argument {v!r}")
    if max(x, y, x + y) < 170.0 and min(x, y) > 0:
        return math.gamma(x) * math.gamma(y) / math.gamma(x + y)
    return gamma(x) * gamma(y) * rgamma(x + y)


def digamma(x):
    """psi(x) = Gamma'(x)/Gamma(x) for x > 0.

    Upward recurrence to x >= 10, then the asymptotic series in B_2k.
    """
    if x <= 0:
        if _is_nonpositive_integer(x):
            raise PoleError(f"digamma has a pole at x={x!r}")
        raise DomainError(f"digamma is exposed for x > 0 only, got {x!r}")
    acc = 0.0
    while x < 10.0:
        acc -= 1.0 / x
        x += 1.0
    inv2 = 1.0 / (x * x)
    series = 0.0
    p = inv2
    for k in range(1, 10):
        series += float(BERNOULLI[2 * k]) / (2 * k) * p
        p *= inv2
    return acc + math.log(x) - 0.5 / x - series


def _digamma_any(x):
    # reflection psi(x) = psi(1 - x) - pi cot(pi x); internal use only
    if x > 0:
        return digamma(x)
    if _is_nonpositive_integer(x):
        raise PoleError(f"digamma has a pole at x={x!r}")
    return digamma(1.0 - x) - math.pi * _cospi(x) / _sinpi(x)


def polygamma(n, x):
    """psi^(n)(x), the n-th derivative of the digamma function, x > 0."""
    if n < 0:
        raise DomainError(f"polygamma order must be >= 0, got {n}")
    if n == 0:
        return digamma(x)
    if x <= 0:
        if _is_nonpositive_integer(x):
            raise PoleError(f"polygamma has a pole at x={x!r}")
        raise DomainError(f"polygamma is exposed for x > 0 only, got {x!r}")
    sign = -1.0 if n % 2 == 0 else 1.0
    nfact = math.factorial(n)
    acc = 0.0
    threshold = 20.0 + 2 * n
    while x < threshold:
        acc += nfact / x ** (n + 1)
        x += 1.0
    tail = math.factorial(n - 1) / x ** n + nfact / (2.0 * x ** (n + 1))
    for k in range(1, 12):
        tail += float(BERNOULLI[2 * k]) * math.factorial(2 * k + n - 1) / (
            math.factorial(2 * k) * x ** (2 * k + n))
    return sign * (acc + tail)


# ---------------------------------------------------------------------------
# Riemann zeta and relatives
# ---------------------------------------------------------------------------

def riemann_zeta(s):
    """zeta(s) for real s != 1.

    Euler-Maclaurin for s >= -1/2, exact Bernoulli values at non-positive
    integers, the functional equation elsewhere.
    """
    _em.check_pole(s)
    if s >= -0.5:
        return _em.hurwitz_em(s, 1.0)[0]
    if s == math.floor(s) and -s + 1 <= BERNOULLI_CAP:
        return float(zeta_nonpositive_exact(int(-s)))
    t = 1.0 - s
    return (2.0 * math.pi) ** s / math.pi * _sinpi(s / 2.0) * _gamma_large(t) * _em.hurwitz_em(t, 1.0)[0]


def _gamma_large(t):
    if t < 171.0:
        return math.gamma(t)
    return math.exp(math.lgamma(t))


def riemann_zeta_deriv(s, order=1):
    """First or second derivative of zeta at real s != 1.

    The Euler-Maclaurin formula is differentiated term by term for s >= -1/2;
    below that the functional equation is differentiated.
    """
    if order not in (1, 2):
        raise DomainError(f"derivative order must be 1 or 2, got {order}")
    _em.check_pole(s)
    if s >= -0.5:
        return _em.hurwitz_em(s, 1.0, order)[order]
    t = 1.0 - s
    z0, z1, z2 = _em.hurwitz_em(t, 1.0, 2)
    psi0 = digamma(t)
    u = (2.0 * math.pi) ** s * _gamma_large(t) / math.pi
    du = u * (LN_2PI - psi0)
    S = _sinpi(s / 2.0)
    dS = 0.5 * math.pi * _cospi(s / 2.0)
    P = u * S
    dP = du * S + u * dS
    if order == 1:
        return dP * z0 - P * z1
    d2u = u * ((LN_2PI - psi0) ** 2 + polygamma(1, t))
    d2S = -(0.5 * math.pi) ** 2 * S
    d2P = d2u * S + 2 * du * dS + u * d2S
    return d2P * z0 - 2 * dP * z1 + P * z2


def zeta_times_offset(d):
    """d * zeta(1 + d), analytic through d = 0."""
    if abs(d) < 1e-3:
        g0, g1, g2 = _STIELTJES
        return 1.0 + g0 * d - g1 * d * d + 0.5 * g2 * d ** 3
    return d * riemann_zeta(1.0 + d)


def zeta_times_offset_deriv(d):
    """d/dd [d * zeta(1 + d)]."""
    if abs(d) < 1e-3:
        g0, g1, g2 = _STIELTJES
        return g0 - 2 * g1 * d + 1.5 * g2 * d * d
    return riemann_zeta(1.0 + d) + d * riemann_zeta_deriv(1.0 + d)


def dirichlet_beta(s):
    """beta(s) = sum_j (-1)^j / (2j+1)^s, continued to all real s."""
    if s > 40.0:
        return sum((-1) ** j * (2 * j + 1.0) ** (-s) for j in range(40))
    if s >= 0.5:
        return 4.0 ** (-s) * _em.hurwitz_em_difference(s, 0.25, 0.75)
    t = 1.0 - s
    return (2.0 / math.pi) ** t * _sinpi(t / 2.0) * _gamma_large(t) * dirichlet_beta(t)


# ---------------------------------------------------------------------------
# Constants
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Constants:
    euler_gamma: float
    ln_sqrt_2pi: float
    catalan_G: float
    const_A: float
    zeta_prime_minus1: float


def _build_constants():
    ln_sqrt_2pi = 0.5 * LN_2PI
    return Constants(
        euler_gamma=EULER_GAMMA,
        ln_sqrt_2pi=ln_sqrt_2pi,
        catalan_G=0.91596559417721901505,
        const_A=2.0 * ln_sqrt_2pi + EULER_GAMMA,
        zeta_prime_minus1=riemann_zeta_deriv(-1.0),
    )


CONSTANTS = _build_constants()
