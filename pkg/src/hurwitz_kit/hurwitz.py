"""Hurwitz zeta function and the function families built on it.

zeta(z, q) = sum_{n >= 0} (n + q)^(-z), continued to all real z != 1.

For z >= 0 the Euler-Maclaurin formula is used directly.  For z < 0 the
Euler-Maclaurin terms grow like N^(-z) and cancel catastrophically, so there
the Taylor expansion about q = 1,

    zeta(z, 1 + x) = sum_k binom(-z, k) zeta(z + k) x^k,   |x| < 1,

is summed for |x| <= 1/2 and other q are reached by the shift law.
"""
from dataclasses import dataclass
from functools import lru_cache
import cmath
import math

import numpy as np

from . import _em
from ._tables import BERNOULLI_CAP
from .errors import DivergenceError, DomainError, PoleError, SingularError
from .quad import NO_HINT, integrate
from .specfun import (_cospi, _sinpi, bernoulli_number, gamma, harmonic,
                      riemann_zeta, riemann_zeta_deriv, zeta_nonpositive_exact,
                      zeta_times_offset, zeta_times_offset_deriv)

TWO_PI = 2.0 * math.pi
_NEAR_POLE = 1e-3


@dataclass(frozen=True)
class ComplexValue:
    """Real/imaginary pair returned by the polylogarithm and Eisenstein sums."""
    re: float
    im: float

    @classmethod
    def from_complex(cls, w):
        w = complex(w)
        return cls(w.real, w.imag)

    def __complex__(self):
        return complex(self.re, self.im)

    @property
    def modulus(self):
        return math.hypot(self.re, self.im)

    @property
    def argument(self):
        return math.atan2(self.im, self.re)

    def conjugate(self):
        return ComplexValue(self.re, -self.im)

    def __add__(self, other):
        return ComplexValue.from_complex(complex(self) + complex(other))

    __radd__ = __add__

    def __sub__(self, other):
        return ComplexValue.from_complex(complex(self) - complex(other))

    def __mul__(self, other):
        return ComplexValue.from_complex(complex(self) * complex(other))

    __rmul__ = __mul__

    def __neg__(self):
        return ComplexValue(-self.re, -self.im)


def _check_q(q):
    if not q > 0:
        raise DomainError(f"Hurwitz offset q must be positive, got {q!r}")


# ---------------------------------------------------------------------------
# Taylor coefficients about q = 1 (used for z < 0)
# ---------------------------------------------------------------------------

def _taylor_length(z):
    return math.ceil(abs(z)) + 60


@lru_cache(maxsize=256)
def _taylor_coeffs(z):
    # c_k = binom(-z, k) zeta(z + k); near z + k = 1 the factor (-z-k+1) is
    # paired with the pole, giving -binom' * d zeta(1 + d) with d = z + k - 1
    K = _taylor_length(z)
    coeffs = []
    p = 1.0  # prod_{j < k} (-z - j) / k!
    for k in range(K):
        if k:
            p_prev = p
            p = p * (-z - k + 1) / k
        d = z + k - 1.0
        if k and abs(d) < _NEAR_POLE:
            # p_prev / k == prod_{j < k-1}(-z-j) / k!
            coeffs.append(-(p_prev / k) * zeta_times_offset(d))
        elif p == 0.0:
            coeffs.append(0.0)
        else:
            coeffs.append(p * riemann_zeta(z + k))
    return tuple(coeffs)


@lru_cache(maxsize=256)
def _taylor_coeffs_deriv(z):
    K = _taylor_length(z)
    out = []
    p, dp = 1.0, 0.0
    for k in range(K):
        if k:
            p_prev, dp_prev = p, dp
            f = -z - k + 1
            dp = (dp * f - p) / k
            p = p * f / k
        d = z + k - 1.0
        if k and abs(d) < _NEAR_POLE:
            b, db = p_prev / k, dp_prev / k
            out.append(-db * zeta_times_offset(d) - b * zeta_times_offset_deriv(d))
        elif p == 0.0 and dp == 0.0:
            out.append(0.0)
        else:
            s = z + k
            dz = riemann_zeta_deriv(s) if p else 0.0
            out.append(dp * riemann_zeta(s) + p * dz)
    return tuple(out)


def _poly(coeffs, x):
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _shift_to_window(q):
    # f = q - m lands in (1/2, 3/2]
    m = max(0, math.ceil(q - 1.5))
    return q - m, m


def _hurwitz_negative(z, q):
    coeffs = _taylor_coeffs(z)
    if q <= 0.5:
        return q ** (-z) + _poly(coeffs, q)
    f, m = _shift_to_window(q)
    value = _poly(coeffs, f - 1.0)
    for j in range(m):
        value -= (f + j) ** (-z)
    return value


def _hurwitz_negative_zderiv(z, q):
    coeffs = _taylor_coeffs_deriv(z)
    if q <= 0.5:
        return -math.log(q) * q ** (-z) + _poly(coeffs, q)
    f, m = _shift_to_window(q)
    value = _poly(coeffs, f - 1.0)
    for j in range(m):
        a = f + j
        value += math.log(a) * a ** (-z)
    return value


def _em_or_overflow(z, q, order):
    try:
        return _em.hurwitz_em(z, q, order)[order]
    except OverflowError:
        # q^-z exceeds the double range; callers near q = 0 should use the shift law
        raise DomainError(f"zeta({z!r}, {q!r}) overflows double precision") from None


def hurwitz_zeta(z, q):
    """Hurwitz zeta function zeta(z, q) for real z != 1 and q > 0.

    Parameters
    ----------
    z : float
        Exponent; |z - 1| < 1e-8 is treated as the pole.
    q : float
        Offset, q > 0.

    Returns
    -------
    float

    Raises
    ------
    PoleError
        Near z = 1.
    DomainError
        For q <= 0, or when q^-z overflows double precision.
    """
    _em.check_pole(z)
    _check_q(q)
    if z >= 0.0:
        return _em_or_overflow(z, q, 0)
    return _hurwitz_negative(z, q)


def hurwitz_zeta_zderiv(z, q):
    """Partial derivative of zeta(z, q) with respect to z."""
    _em.check_pole(z)
    _check_q(q)
    if z >= 0.0:
        return _em_or_overflow(z, q, 1)
    return _hurwitz_negative_zderiv(z, q)


def hurwitz_zeta_star(z, q):
    """zeta*(z, q) = zeta(z, q + 1), the Hurwitz function with its n = 0 term removed.

    Finite at q = 0, where it equals the Riemann zeta value.
    """
    _em.check_pole(z)
    if q < 0:
        raise DomainError(f"zeta_star needs q >= 0, got {q!r}")
    if z < 0.0 and q <= 0.5:
        # avoid forming 1 + q so tiny q keeps its digits
        return _poly(_taylor_coeffs(z), q)
    return hurwitz_zeta(z, q + 1.0)


def hurwitz_zeta_hermite(z, q, tol=1e-13):
    """Hermite's integral representation of zeta(z, q), evaluated by quadrature.

    Independent of the Euler-Maclaurin and Taylor routes, so it serves as
    their oracle.  The integrand is integrated over [0, T] with T chosen
    so the neglected tail is below double precision.
    """
    _em.check_pole(z)
    _check_q(q)
    beta = TWO_PI * q
    grow = max(-z, 0.0)

    def integrand(t):
        x = beta * t
        # 1/(e^x - 1) = e^-x / (1 - e^-x); everything scaled in log space
        log_mag = -0.5 * z * math.log1p(t * t) - x
        return math.sin(z * math.atan(t)) * math.exp(log_mag) / -math.expm1(-x)

    T = max(1.0, grow / beta)
    for _ in range(30):
        T = (50.0 + grow * math.log(T)) / beta
    T = max(T, 1.0)
    n_pieces = max(1, math.ceil(T * beta / 6.0))
    edges = np.linspace(0.0, T, n_pieces + 1)
    total = 0.0
    for lo, hi in zip(edges[:-1], edges[1:]):
        total += integrate(integrand, float(lo), float(hi), tol=tol, hint=NO_HINT).value
    lq = math.log(q)
    return 0.5 * math.exp(-z * lq) + math.exp((1.0 - z) * lq) * (1.0 / (z - 1.0) + 2.0 * total)


# ---------------------------------------------------------------------------
# Trigonometric series
# ---------------------------------------------------------------------------

@lru_cache(maxsize=512)
def _zeta_int(m):
    # zeta at an integer m != 1
    if m <= 0 and 1 - m <= BERNOULLI_CAP:
        return float(zeta_nonpositive_exact(-m))
    return riemann_zeta(float(m))


def _polylog_series(n, delta):
    """Li_n(exp(2 pi i delta)) for integer n >= 1 and 0 < |delta| <= 1/2.

    Expansion in mu = 2 pi i delta, convergent for |mu| < 2 pi:
    Li_n(e^mu) = mu^(n-1)/(n-1)! (H_{n-1} - ln(-mu)) + sum_{k != n-1} zeta(n-k) mu^k / k!.
    """
    mu = complex(0.0, TWO_PI * delta)
    log_neg_mu = complex(math.log(TWO_PI * abs(delta)), -0.5 * math.pi * math.copysign(1.0, delta))
    total = 0j
    term = 1 + 0j  # mu^k / k!
    k = 0
    small = 0
    while k < 400:
        if k == n - 1:
            c = term * (float(harmonic(n - 1)) - log_neg_mu)
        else:
            c = term * _zeta_int(n - k)
        total += c
        if k > n and abs(c) < 1e-18 * max(1.0, abs(total)):
            small += 1
            if small >= 3:
                break
        else:
            small = 0
        k += 1
        term = term * mu / k
    return total


def _reduce_unit(q):
    # signed distance from q to the nearest integer, in [-1/2, 1/2]
    r = math.fmod(q, 1.0)
    if r > 0.5:
        r -= 1.0
    elif r < -0.5:
        r += 1.0
    return r


def polylog_unit_circle(n, q):
    """Li_n(e^{2 pi i q}) = sum_k e^{2 pi i k q} / k^n for integer n >= 1.

    Returns
    -------
    ComplexValue
        re is the cosine series, im the sine series.

    Raises
    ------
    DivergenceError
        For n = 1 at integer q.
    """
    if n < 1 or int(n) != n:
        raise DomainError(f"polylog order must be an integer >= 1, got {n!r}")
    n = int(n)
    delta = _reduce_unit(q)
    if delta == 0.0:
        if n == 1:
            raise DivergenceError("Li_1(1) diverges (harmonic series)")
        return ComplexValue(_zeta_int(n), 0.0)
    return ComplexValue.from_complex(_polylog_series(n, delta))


def clausen(n, x):
    """Clausen function: sum sin(kx)/k^n for even n, sum cos(kx)/k^n for odd n."""
    if n < 1 or int(n) != n:
        raise DomainError(f"Clausen order must be an integer >= 1, got {n!r}")
    q = x / TWO_PI
    if n == 1 and _reduce_unit(q) == 0.0:
        raise SingularError("Cl_1 is logarithmically singular at multiples of 2 pi")
    if n % 2 == 0 and _reduce_unit(q) == 0.0:
        return 0.0
    w = polylog_unit_circle(n, q)
    return w.im if n % 2 == 0 else w.re


def _odd_part(N, q):
    # sum over odd m of e^{2 pi i m q} / m^N = Li_N(w) - 2^-N Li_N(w^2)
    a = complex(polylog_unit_circle(N, q))
    b = complex(polylog_unit_circle(N, 2.0 * q))
    return a - 2.0 ** (-N) * b


def _berndt(N, x):
    if N == 0 or int(N) != N or N < 0:
        raise DomainError(f"S_N and C_N are summed here for integer N >= 1, got N={N!r}")
    # sum (-1)^n e^{i(2n+1)x} / (2n+1)^N = -i * odd part at w = e^{i(x + pi/2)}
    q = x / TWO_PI + 0.25
    return -1j * _odd_part(int(N), q)


def berndt_S(N, x):
    """S_N(x) = sum_{n >= 0} (-1)^n sin((2n+1)x) / (2n+1)^N."""
    return _berndt(N, x).imag


def berndt_C(N, x):
    """C_N(x) = sum_{n >= 0} (-1)^n cos((2n+1)x) / (2n+1)^N."""
    if N == 1 and _reduce_unit(2.0 * (x / TWO_PI + 0.25)) == 0.0:
        # every term is cos of an odd multiple of pi/2
        return 0.0
    return _berndt(N, x).real


def berndt_G(z, q):
    """G(z, q) = zeta(z, q) - zeta(z, 1 - q) for 0 < q < 1."""
    if not 0.0 < q < 1.0:
        raise DomainError(f"G(z, q) needs 0 < q < 1, got {q!r}")
    if z >= 0.0:
        _em.check_pole(z)
        return _em.hurwitz_em_difference(z, q, 1.0 - q)
    return hurwitz_zeta(z, q) - hurwitz_zeta(z, 1.0 - q)


def berndt_G_fourier(z, q):
    """Fourier form of G(z, q) for z <= 0."""
    if z > 0:
        raise DomainError(f"the sine series needs z <= 0, got {z!r}")
    if not 0.0 < q < 1.0:
        raise DomainError(f"G(z, q) needs 0 < q < 1, got {q!r}")
    s = 1.0 - z
    sine = polylog_series_general(s, q).imag
    return 4.0 * gamma(s) * _cospi(0.5 * z) * TWO_PI ** (-s) * sine


# ---------------------------------------------------------------------------
# Fourier expansion of zeta(z, q)
# ---------------------------------------------------------------------------

@lru_cache(maxsize=1)
def _stirling2(limit=32):
    S = [[0] * (limit + 2) for _ in range(limit + 2)]
    S[0][0] = 1
    for n in range(1, limit + 2):
        for k in range(1, n + 1):
            S[n][k] = k * S[n - 1][k] + S[n - 1][k - 1]
    return S


def _neg_polylog(k, w):
    # sum_{m >= 0} w^m m^k in the Abel sense, |w| = 1, w != 1
    if k == 0:
        return 1.0 / (1.0 - w)
    S = _stirling2()
    r = w / (1.0 - w)
    total = 0j
    rp = r
    for j in range(k + 1):
        total += math.factorial(j) * S[k + 1][j + 1] * rp
        rp *= r
    return total


def _lerch_tail(s, q, N, n_corr=16):
    """sum_{n > N} e^{2 pi i n q} n^(-s) by Taylor expansion of n^(-s) about N + 1.

    Returns (value, size of the last correction used).
    """
    w = cmath.exp(1j * TWO_PI * q)
    x0 = N + 1.0
    total = 0j
    coef = x0 ** (-s)  # f^(k)(x0) / k!
    last = 0.0
    for k in range(n_corr):
        c = coef * _neg_polylog(k, w)
        total += c
        last = abs(c)
        coef *= -(s + k) / ((k + 1) * x0)
    return cmath.exp(1j * TWO_PI * q * x0) * total, last


def polylog_series_general(s, q, n_terms=None):
    """sum_{n >= 1} e^{2 pi i n q} / n^s for real s >= 1 and non-integer q."""
    r = _reduce_unit(q)
    if r == 0.0:
        raise DomainError("the series is evaluated here for non-integer q only")
    theta = TWO_PI * abs(r)
    N = n_terms if n_terms is not None else int(40.0 / theta) + 20
    n = np.arange(1, N + 1, dtype=float)
    head = complex(np.sum(np.exp(1j * TWO_PI * q * n) * n ** (-s)))
    tail, _ = _lerch_tail(s, q, N)
    return head + tail


def hurwitz_zeta_fourier(z, q, n_terms=None, *, full_output=False):
    """zeta(z, q) from its Fourier series, for z <= 0 and 0 < q < 1.

    The series is summed directly to ``n_terms`` and the remainder is
    added by an asymptotic expansion of the tail.

    Parameters
    ----------
    z : float
        z <= 0.  At z = 0 the series is only conditionally convergent.
    q : float
        0 < q < 1, endpoints excluded.
    n_terms : int, optional
        Number of terms summed directly; chosen from q when omitted.
    full_output : bool
        If True also return the size of the last tail correction, a bound
        on the remaining truncation error.
    """
    if z > 0:
        raise DomainError(f"the Fourier expansion needs z <= 0, got {z!r}")
    if not 0.0 < q < 1.0:
        raise DomainError(f"the Fourier expansion needs 0 < q < 1, got {q!r}")
    s = 1.0 - z
    theta = TWO_PI * min(q, 1.0 - q)
    N = n_terms if n_terms is not None else int(40.0 / theta) + 20
    n = np.arange(1, N + 1, dtype=float)
    head = complex(np.sum(np.exp(1j * TWO_PI * q * n) * n ** (-s)))
    tail, last = _lerch_tail(s, q, N)
    P = head + tail
    scale = 2.0 * gamma(s) * TWO_PI ** (-s)
    value = scale * (_sinpi(0.5 * z) * P.real + _cospi(0.5 * z) * P.imag)
    if full_output:
        return value, scale * last
    return value


# ---------------------------------------------------------------------------
# Power series, Eisenstein sums, 4F3
# ---------------------------------------------------------------------------

def F_transcendental(x, z, n_terms=None):
    """F(x, z) = sum_{n >= 0} zeta(n + 2 - z) x^n for |x| < 1 and z <= 0.

    x may be complex, in which case a ComplexValue is returned.  The sum
    is split as 1/(1 - x) + sum (zeta(n + 2 - z) - 1) x^n; the second
    series decays like (|x|/2)^n.
    """
    if abs(x) >= 1.0:
        raise DomainError(f"F(x, z) needs |x| < 1, got |x|={abs(x)!r}")
    if z > 0:
        raise DomainError(f"F(x, z) is used for z <= 0, got {z!r}")
    is_complex = isinstance(x, complex)
    r = abs(x) / 2.0
    if n_terms is None:
        n_terms = 1 if r == 0 else max(1, math.ceil(math.log(1e-18) / math.log(r)) + 2)
    total = 1.0 / (1.0 - x)
    xn = 1.0 + 0j if is_complex else 1.0
    for n in range(n_terms):
        # zeta(s) - 1 = zeta(s, 2), computed without cancellation
        total += _em.hurwitz_em(n + 2.0 - z, 2.0)[0] * xn
        xn *= x
    if is_complex:
        return ComplexValue.from_complex(total)
    return total


def divisor_sigma(p, n):
    """sigma_p(n) = sum of d^p over the divisors d of n (exact integer)."""
    if n < 1:
        raise DomainError(f"divisor sums need n >= 1, got {n}")
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d ** p
            e = n // d
            if e != d:
                total += e ** p
        d += 1
    return total


def divisor_sigma_table(p, n_max):
    """Array s with s[n] = sigma_p(n) for 1 <= n <= n_max (s[0] = 0), as floats."""
    s = np.zeros(n_max + 1)
    for d in range(1, n_max + 1):
        s[d::d] += float(d) ** p
    return s


class EisensteinMoment:
    """Truncated series for the t-moment of an Eisenstein series.

    G_k^(alpha)(q) = int_0^inf t^alpha [G_k(q + it) - 2 zeta(2k)] dt
    = C sum_n sigma_{2k-1}(n) (2 pi n)^-(alpha+1) e^{2 pi i n q},
    C = 2 (-1)^k (2 pi)^(2k) Gamma(alpha + 1) / (2k - 1)!.

    The coefficient table is built once, so repeated evaluation (inside a
    quadrature, say) costs one vectorised sum per point.  ``tail`` bounds
    the omitted terms using sigma_p(n) <= zeta(p) n^p.

    Raises
    ------
    DivergenceError
        When alpha + 1 <= 2k and the series does not converge absolutely.
    """

    def __init__(self, k, alpha, n_terms=5000):
        if k < 2 or int(k) != k:
            raise DomainError(f"Eisenstein index must be an integer >= 2, got {k!r}")
        if not alpha > 0:
            raise DomainError(f"alpha must be positive, got {alpha!r}")
        if int(n_terms) != n_terms or n_terms < 1:
            raise DomainError(f"n_terms must be a positive integer, got {n_terms!r}")
        p = 2 * int(k) - 1
        if alpha + 1.0 <= 2 * k:
            raise DivergenceError(f"the series diverges for alpha + 1 <= 2k (alpha={alpha}, k={k})")
        self.k, self.alpha, self.n_terms = int(k), float(alpha), int(n_terms)
        C = 2.0 * (-1) ** k * TWO_PI ** (2 * k) * gamma(alpha + 1.0) / math.factorial(p)
        n = np.arange(1, n_terms + 1, dtype=float)
        sigma = divisor_sigma_table(p, n_terms)[1:]
        # smallest terms first for a better-conditioned sum
        self._coef = (C * sigma * (TWO_PI * n) ** (-(alpha + 1.0)))[::-1]
        self._freq = (TWO_PI * n)[::-1]
        beta = alpha + 1.0 - p
        self.tail = (abs(C) * riemann_zeta(float(p)) * TWO_PI ** (-(alpha + 1.0))
                     * n_terms ** (1.0 - beta) / (beta - 1.0))

    @staticmethod
    def terms_for(k, alpha, tail_target, cap=400_000):
        """Smallest truncation whose tail bound is below ``tail_target`` (capped)."""
        p = 2 * k - 1
        beta = alpha + 1.0 - p
        C = 2.0 * TWO_PI ** (2 * k) * gamma(alpha + 1.0) / math.factorial(p)
        A = C * riemann_zeta(float(p)) * TWO_PI ** (-(alpha + 1.0)) / (beta - 1.0)
        n = math.ceil((A / tail_target) ** (1.0 / (beta - 1.0)))
        return int(min(max(n, 100), cap))

    def __call__(self, q):
        return complex(np.dot(self._coef, np.exp(1j * self._freq * q)))


def eisenstein_G_alpha(k, alpha, q, n_terms=5000, *, full_output=False):
    """G_k^(alpha)(q), the t-moment of an Eisenstein series (see EisensteinMoment).

    Returns
    -------
    ComplexValue, or (ComplexValue, float) when ``full_output`` is True;
    the float bounds the truncation error.
    """
    if not 0.0 <= q <= 1.0:
        raise DomainError(f"q must lie in [0, 1], got {q!r}")
    series = EisensteinMoment(k, alpha, n_terms)
    value = ComplexValue.from_complex(series(q))
    if full_output:
        return value, series.tail
    return value


def _hyper_partial_sums(a, b, checkpoints):
    out = []
    term = 1.0
    total = 0.0
    k = 0
    for stop in checkpoints:
        while k < stop:
            total += term
            num = 1.0
            for ai in a:
                num *= ai + k
            den = float(k + 1)
            for bj in b:
                den *= bj + k
            term *= num / den
            k += 1
        out.append(total)
    return out


def hypergeom_4F3_unit(a, b, n_terms=2000, x=1.0):
    """Generalized hypergeometric 4F3(a; b; x), normally at x = 1.

    At x = 1 the terms decay like k^-(s+1) with s = sum(b) - sum(a), so partial
    sums are extrapolated (Richardson, exponents s, s+1, ...) over
    n_terms * 2^i.  For |x| < 1 the series is summed directly.

    Raises
    ------
    DivergenceError
        At x = 1 when s <= 0.
    """
    a = tuple(float(v) for v in a)
    b = tuple(float(v) for v in b)
    if len(a) != 4 or len(b) != 3:
        raise DomainError("4F3 needs four upper and three lower parameters")
    for bj in b:
        if bj <= 0 and bj == math.floor(bj):
            raise PoleError(f"lower parameter {bj} is a non-positive integer")
    if abs(x) < 1.0:
        term, total, k = 1.0, 0.0, 0
        while k < 10000:
            total += term
            num = x
            for ai in a:
                num *= ai + k
            den = float(k + 1)
            for bj in b:
                den *= bj + k
            term *= num / den
            k += 1
            if abs(term) < 1e-17 * max(1.0, abs(total)):
                break
        return total
    if x != 1.0:
        raise DomainError(f"4F3 is evaluated for |x| < 1 or x = 1, got {x!r}")
    s = sum(b) - sum(a)
    if s <= 0:
        raise DivergenceError(f"4F3 at unit argument diverges for sum(b) - sum(a) = {s} <= 0")
    levels = 6
    Ns = [n_terms * 2 ** i for i in range(levels)]
    T = _hyper_partial_sums(a, b, Ns)
    # eliminate N^-(s+j) successively
    for j in range(levels - 1):
        f = 2.0 ** (s + j)
        T = [(f * T[i + 1] - T[i]) / (f - 1.0) for i in range(len(T) - 1)]
    return T[-1]
