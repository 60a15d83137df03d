"""Numerical building blocks shared by identity sides and the public helpers."""
from fractions import Fraction
import math
from typing import Sequence

from ..errors import DomainError
from ..hurwitz import hurwitz_zeta
from ..quad import LOGARITHMIC, SMOOTH, Endpoint, SingularityHint, integrate
from ..specfun import (CONSTANTS, _cospi, _digamma_any, _sinpi, bernoulli_poly,
                       digamma, gamma, riemann_zeta)

TWO_PI = 2.0 * math.pi
LN2 = math.log(2.0)
LN_SQRT_2PI = CONSTANTS.ln_sqrt_2pi
GAMMA_E = CONSTANTS.euler_gamma
CATALAN = CONSTANTS.catalan_G
A_CONST = CONSTANTS.const_A

LOG_LEFT = SingularityHint(LOGARITHMIC, SMOOTH)
LOG_BOTH = SingularityHint(LOGARITHMIC, LOGARITHMIC)


def alg_left(exponent):
    """Hint for f ~ q^(-exponent) at q = 0 (exponent <= 0 means smooth)."""
    if exponent <= 0.0:
        return SingularityHint()
    return SingularityHint(Endpoint.algebraic(exponent), SMOOTH)


def sin_pi_unit(q):
    # sin(pi q) on [0, 1] without losing the small values near q = 1
    return math.sin(math.pi * min(q, 1.0 - q))


def cos_pi_unit(q):
    return math.sin(math.pi * (0.5 - q))


def ln_sin_pi(q):
    return math.log(sin_pi_unit(q))


def dist_int(x):
    return abs(x - round(x))


def dist_even(x):
    return abs(x - 2.0 * round(x / 2.0))


def dist_odd(x):
    return abs(x - 1.0 - 2.0 * round((x - 1.0) / 2.0))


def pref(z):
    """Gamma(1 - z) / (2 pi)^(1 - z), the ubiquitous transform prefactor."""
    return gamma(1.0 - z) / TWO_PI ** (1.0 - z)


def zeta_fn(z):
    return lambda q: hurwitz_zeta(z, q)


# ---------------------------------------------------------------------------
# Finite trigonometric polynomials
# ---------------------------------------------------------------------------

def trig_poly(a: Sequence[float], b: Sequence[float]):
    """f(q) = sum_n a_n cos(2 pi n q) + b_n sin(2 pi n q), n = 1, 2, ..."""
    a = tuple(a)
    b = tuple(b)

    def f(q):
        s = 0.0
        for n, (an, bn) in enumerate(zip(a, b), start=1):
            s += an * math.cos(TWO_PI * n * q) + bn * math.sin(TWO_PI * n * q)
        return s
    return f


def transform_of_trig_poly(z, a, b, reflected=False):
    """int_0^1 f(q) zeta(z, q) dq for the trig polynomial f, z < 0.

    With ``reflected`` the kernel is zeta(z, 1 - q) and the sine part
    changes sign.
    """
    sa = sum(an * n ** (z - 1.0) for n, an in enumerate(a, start=1))
    sb = sum(bn * n ** (z - 1.0) for n, bn in enumerate(b, start=1))
    sign = -1.0 if reflected else 1.0
    return pref(z) * (_sinpi(z / 2.0) * sa + sign * _cospi(z / 2.0) * sb)


# ---------------------------------------------------------------------------
# Alternating odd reciprocals and Catalan's constant
# ---------------------------------------------------------------------------

def c_n(n):
    """c_n = sum_{k < n} (-1)^k / (2k + 1) in closed form via digamma."""
    if n < 1:
        raise DomainError(f"c_n needs n >= 1, got {n}")
    if n <= 40:
        return math.fsum((-1) ** k / (2 * k + 1.0) for k in range(n))
    return math.pi / 4.0 + 0.25 * (-1) ** n * d_n(n)


def d_n(n):
    """psi(n/2 + 1/4) - psi(n/2 + 3/4)."""
    return digamma(n / 2.0 + 0.25) - digamma(n / 2.0 + 0.75)


def catalan_series_partial(n_terms: int) -> float:
    """Partial sum sum_{n <= N} (-1)^(n+1)/n * sum_{k < n} (-1)^k/(2k+1).

    The inner sums are carried along, so the cost is O(N).  The series
    converges to Catalan's constant G, with error of order 1/N and
    alternating sign.
    """
    if int(n_terms) != n_terms or n_terms < 1:
        raise DomainError(f"need a positive integer number of terms, got {n_terms!r}")
    inner = 0.0
    total = 0.0
    comp = 0.0
    for n in range(1, int(n_terms) + 1):
        inner += (-1) ** (n - 1) / (2 * n - 1.0)
        term = (-1) ** (n + 1) * inner / n - comp
        t = total + term
        comp = (t - total) - term
        total = t
    return total


def _d_asymptotic_coeffs(count=8):
    # d_n ~ sum over odd k of D_k n^-k with D_k = 2^(k+1) B_k(1/4) / k
    out = []
    for j in range(count):
        k = 2 * j + 1
        out.append((k, float(Fraction(2) ** (k + 1) * bernoulli_poly(k, Fraction(1, 4)) / k)))
    return tuple(out)


_D_ASYMPTOTIC = _d_asymptotic_coeffs()


def _d_dirichlet(s, n_direct=60):
    """sum_{n >= 1} d_n / n^s for s > 0 (converges absolutely since d_n ~ -1/n)."""
    head = math.fsum(d_n(n) / n ** s for n in range(1, n_direct + 1))
    tail = 0.0
    for k, c in _D_ASYMPTOTIC:
        # zeta(s + k, N + 1) by the shift law from the EM-backed Hurwitz zeta
        tail += c * hurwitz_zeta(s + k, n_direct + 1.0)
    return head + tail


def alternating_c_series(s):
    """sum_{n >= 1} (-1)^(n+1) c_n / n^s for s > 0.

    Uses c_n = pi/4 + (-1)^n d_n / 4, which splits the sum into
    (pi/4) eta(s) - (1/4) sum d_n / n^s.
    """
    if s == 1.0:
        eta = LN2
    else:
        eta = (1.0 - 2.0 ** (1.0 - s)) * riemann_zeta(s)
    return math.pi / 4.0 * eta - 0.25 * _d_dirichlet(s)


def secant_psi_series(s, n_terms):
    """Truncated two-sided sum sum_{0 < |n| <= N} psi(n/2 + 1/4) / n^s, s odd."""
    total = 0.0
    for n in range(1, n_terms + 1):
        total += (_digamma_any(n / 2.0 + 0.25) - _digamma_any(-n / 2.0 + 0.25)) / n ** s
    return total


def alternating_c_partial(s, n_terms):
    """Truncated sum_{n <= N} (-1)^(n+1) c_n / n^s with incremental c_n."""
    inner = 0.0
    total = 0.0
    for n in range(1, n_terms + 1):
        inner += (-1) ** (n - 1) / (2 * n - 1.0)
        total += (-1) ** (n + 1) * inner / n ** s
    return total


# ---------------------------------------------------------------------------
# Powers of sine and cosine as finite Fourier sums
# ---------------------------------------------------------------------------

def kogan_sin_even(n, x):
    s = math.comb(2 * n, n) / 4.0 ** n
    acc = 0.0
    for k in range(n):
        acc += (-1) ** k * math.comb(2 * n, k) * math.cos(2 * (n - k) * x)
    return s + (-1) ** n * acc / 2.0 ** (2 * n - 1)


def kogan_sin_odd(n, x):
    acc = 0.0
    for k in range(n + 1):
        acc += (-1) ** k * math.comb(2 * n + 1, k) * math.sin((2 * n + 1 - 2 * k) * x)
    return (-1) ** n * acc / 4.0 ** n


def kogan_cos_even(n, x):
    acc = 0.0
    for k in range(n):
        acc += math.comb(2 * n, k) * math.cos(2 * (n - k) * x)
    return math.comb(2 * n, n) / 4.0 ** n + acc / 2.0 ** (2 * n - 1)


def kogan_cos_odd(n, x):
    acc = 0.0
    for k in range(n + 1):
        acc += math.comb(2 * n + 1, k) * math.cos((2 * n + 1 - 2 * k) * x)
    return acc / 4.0 ** n


# ---------------------------------------------------------------------------
# Fourier coefficients computed by quadrature
# ---------------------------------------------------------------------------

def _lngamma(q):
    return math.lgamma(q)


_FOURIER_SOURCES = {
    "lnsin": (ln_sin_pi, LOG_BOTH),
    "lngamma": (_lngamma, LOG_LEFT),
}


def fourier_coefficients_of(slug: str, n: int, *, power: int = 2, tol: float = 1e-13):
    """Fourier coefficients (a_n, b_n) of a function on [0, 1].

    The convention is f(q) = a_0/2 + sum a_n cos(2 pi n q) + b_n sin(2 pi n q),
    so a_n = 2 int f cos(2 pi n q) and b_n = 2 int f sin(2 pi n q).

    Slugs: "lnsin" (ln sin pi q), "lngamma" (ln Gamma(q)), "sin_power"
    (sin^power(pi q)), "sec_antisym" (sec pi q, antisymmetric about 1/2:
    its cosine coefficients vanish and only the sine integrals converge),
    or the id of an integral identity whose LHS is a single integral over
    [0, 1], taken at its default parameters.
    """
    if int(n) != n or n < 0:
        raise DomainError(f"harmonic index must be a non-negative integer, got {n!r}")
    n = int(n)
    if slug in _FOURIER_SOURCES:
        f, hint = _FOURIER_SOURCES[slug]
    elif slug == "sin_power":
        f, hint = (lambda q: sin_pi_unit(q) ** power), SingularityHint()
    elif slug == "sec_antisym":
        if n == 0:
            return 0.0, 0.0
        # sin(2 pi n q) / cos(pi q) is bounded: both vanish at q = 1/2
        g = lambda q: math.sin(TWO_PI * n * q) / cos_pi_unit(q)
        b = 2.0 * integrate(g, 0.0, 1.0, tol=tol, breakpoints=(0.5,)).value
        return 0.0, b
    else:
        from .registry import get
        ident = get(slug)
        term = ident.lhs(ident.defaults)
        if ident.kind != "integral" or not hasattr(term, "f") or (term.a, term.b) != (0.0, 1.0):
            raise DomainError(f"identity {slug!r} does not have a single integral over [0, 1] as LHS")
        f, hint = (lambda q, t=term: t.scale * t.f(q)), term.hint
    ca = integrate(lambda q: f(q) * math.cos(TWO_PI * n * q), 0.0, 1.0, tol=tol, hint=hint)
    if n == 0:
        return 2.0 * ca.value, 0.0
    sb = integrate(lambda q: f(q) * math.sin(TWO_PI * n * q), 0.0, 1.0, tol=tol, hint=hint)
    return 2.0 * ca.value, 2.0 * sb.value


FOURIER_SLUGS = ("lnsin", "lngamma", "sec_antisym", "sin_power")
