import cmath
import math

import mpmath
import pytest

from hurwitz_kit.errors import DivergenceError, DomainError, PoleError, SingularError
from hurwitz_kit.hurwitz import (ComplexValue, F_transcendental, berndt_C, berndt_G,
                                 berndt_G_fourier, berndt_S, clausen, divisor_sigma,
                                 divisor_sigma_table,
                                 eisenstein_G_alpha, hurwitz_zeta, hurwitz_zeta_fourier,
                                 hurwitz_zeta_hermite, hurwitz_zeta_star, hurwitz_zeta_zderiv,
                                 hypergeom_4F3_unit, polylog_unit_circle)
from hurwitz_kit.specfun import (bernoulli_number, bernoulli_poly, dirichlet_beta, digamma,
                                 gamma, log_gamma, polygamma, riemann_zeta)

from conftest import rel_close

LN_SQRT_2PI = 0.5 * math.log(2 * math.pi)
CATALAN = float(mpmath.catalan)


def _zeta_ref(z, q, order=0):
    return float(mpmath.zeta(z, q, order))


# --- hurwitz_zeta ---------------------------------------------------------------

def test_hurwitz_zeta_examples():
    assert hurwitz_zeta(-2.5, 1.0) == pytest.approx(riemann_zeta(-2.5), rel=1e-13)
    z = -1.5
    assert hurwitz_zeta(z, 0.5) == pytest.approx((2 ** z - 1) * riemann_zeta(z), rel=1e-12)
    assert abs(hurwitz_zeta(-0.5, 0.3) - hurwitz_zeta_hermite(-0.5, 0.3)) <= 1e-10


def test_hurwitz_zeta_vs_mpmath(rng):
    for _ in range(300):
        z = rng.uniform(-40, 40)
        q = rng.uniform(0.01, 10)
        if abs(z - 1) < 1e-3:
            continue
        ref = _zeta_ref(z, q)
        assert abs(hurwitz_zeta(z, q) - ref) <= 1e-11 * max(abs(ref), 1e-300), (z, q)


def test_hurwitz_zeta_errors():
    with pytest.raises(PoleError):
        hurwitz_zeta(1.0, 0.5)
    with pytest.raises(PoleError):
        hurwitz_zeta(1.0 + 5e-9, 0.5)
    with pytest.raises(DomainError):
        hurwitz_zeta(2.0, 0.0)
    with pytest.raises(DomainError):
        hurwitz_zeta(-2.0, -0.5)


def test_shift_law(rng):
    for _ in range(100):
        z = rng.uniform(-10, 10)
        q = rng.uniform(0.05, 3)
        if abs(z - 1) < 1e-6:
            continue
        lhs = hurwitz_zeta(z, q) - hurwitz_zeta(z, q + 1)
        assert abs(lhs - q ** (-z)) <= 1e-12 * max(1.0, q ** (-z), abs(hurwitz_zeta(z, q)))


def test_q_derivative_law(rng):
    h = 1e-5
    for _ in range(100):
        z = rng.uniform(-6, 6)
        q = rng.uniform(0.2, 4)
        if abs(z - 1) < 0.05 or abs(z - 2) < 0.05:
            continue
        fd = (hurwitz_zeta(z - 1, q + h) - hurwitz_zeta(z - 1, q - h)) / (2 * h)
        exact = (1 - z) * hurwitz_zeta(z, q)
        assert abs(fd - exact) <= 1e-6 * max(1.0, abs(exact))


def test_bernoulli_degeneration(rng):
    for m in range(1, 13):
        for _ in range(8):
            q = rng.uniform(0.05, 3)
            expected = -bernoulli_poly(m, q) / m
            assert abs(hurwitz_zeta(1.0 - m, q) - expected) <= 1e-11 * max(1.0, abs(expected))


# --- Hermite oracle -----------------------------------------------------------------

def test_hermite_examples():
    assert hurwitz_zeta_hermite(2.0, 1.0) == pytest.approx(math.pi ** 2 / 6, rel=1e-12)
    assert hurwitz_zeta_hermite(-1.0, 0.7) == pytest.approx(-bernoulli_poly(2, 0.7) / 2, abs=1e-12)
    assert abs(hurwitz_zeta_hermite(0.5, 2.0) - hurwitz_zeta(0.5, 2.0)) <= 1e-10


def test_hermite_vs_mpmath(rng):
    for _ in range(40):
        z = rng.uniform(-8, 8)
        q = rng.uniform(0.1, 5)
        if abs(z - 1) < 0.1:
            continue
        ref = _zeta_ref(z, q)
        assert abs(hurwitz_zeta_hermite(z, q) - ref) <= 1e-10 * max(1.0, abs(ref))


# --- Fourier route -----------------------------------------------------------------

def test_fourier_examples():
    assert hurwitz_zeta_fourier(0.0, 0.25) == pytest.approx(0.25, abs=1e-8)
    assert hurwitz_zeta_fourier(-1.0, 0.5) == pytest.approx(1.0 / 24.0, abs=1e-10)
    # the sine part flips sign under q -> 1 - q, the cosine part does not
    z, q = -2.0, 0.3
    s = hurwitz_zeta_fourier(z, q) + hurwitz_zeta_fourier(z, 1 - q)
    cos_part = 2 * 2 * gamma(1 - z) * (2 * math.pi) ** (z - 1) * math.sin(math.pi * z / 2) * sum(
        math.cos(2 * math.pi * n * q) / n ** (1 - z) for n in range(1, 200000))
    assert s == pytest.approx(cos_part, abs=1e-12)
    assert s == pytest.approx(hurwitz_zeta(z, q) + hurwitz_zeta(z, 1 - q), abs=1e-12)


def test_fourier_grid_agreement():
    for i in range(11):
        z = -0.5 * i
        for j in range(1, 20):
            q = 0.05 * j
            v, tail = hurwitz_zeta_fourier(z, q, full_output=True)
            assert abs(v - hurwitz_zeta(z, q)) <= 1e-8, (z, q)
            assert tail >= 0


def test_fourier_errors():
    with pytest.raises(DomainError):
        hurwitz_zeta_fourier(0.5, 0.3)
    for q in (0.0, 1.0, 1.2):
        with pytest.raises(DomainError):
            hurwitz_zeta_fourier(-1.0, q)


# --- derivatives and zeta* ------------------------------------------------------------

def test_zderiv_examples():
    q = 0.3
    assert hurwitz_zeta_zderiv(0.0, q) == pytest.approx(log_gamma(q) - LN_SQRT_2PI, abs=1e-10)
    assert hurwitz_zeta_zderiv(0.0, 1.0) == pytest.approx(-LN_SQRT_2PI, abs=1e-12)
    assert hurwitz_zeta_zderiv(-2.0, 1.0) == pytest.approx(-riemann_zeta(3.0) / (4 * math.pi ** 2),
                                                           abs=1e-12)
    with pytest.raises(PoleError):
        hurwitz_zeta_zderiv(1.0, 0.4)


def test_zderiv_vs_mpmath(rng):
    for _ in range(150):
        z = rng.uniform(-12, 12)
        q = rng.uniform(0.05, 6)
        if abs(z - 1) < 0.05:
            continue
        ref = _zeta_ref(z, q, 1)
        assert abs(hurwitz_zeta_zderiv(z, q) - ref) <= 1e-10 * max(1.0, abs(ref)), (z, q)


def test_zeta_star_examples():
    assert hurwitz_zeta_star(2.5, 0.0) == pytest.approx(riemann_zeta(2.5), rel=1e-14)
    assert hurwitz_zeta_star(2.0, 1.0) == pytest.approx(math.pi ** 2 / 6 - 1, rel=1e-14)
    expected = (2 ** 5 - 1) * riemann_zeta(5.0) - 2 ** 5
    assert hurwitz_zeta_star(5.0, 0.5) == pytest.approx(expected, rel=1e-13)
    with pytest.raises(PoleError):
        hurwitz_zeta_star(1.0, 0.5)


def test_zeta_star_finite_on_unit_interval(rng):
    for _ in range(50):
        z = rng.uniform(-5, 8)
        if abs(z - 1) < 0.05:
            continue
        q = rng.uniform(0, 1)
        assert abs(hurwitz_zeta_star(z, q) - _zeta_ref(z, q + 1)) <= 1e-11 * max(1.0, abs(_zeta_ref(z, q + 1)))


def test_reflection_assembly(rng):
    for _ in range(50):
        q = rng.uniform(0.001, 0.999)
        s = log_gamma(q) + log_gamma(1 - q) - math.log(math.pi) + math.log(math.sin(math.pi * q))
        assert abs(s) <= 1e-11


def test_digamma_quarter_points():
    for n in range(1, 7):
        a, b = 0.25 + n / 2, 0.75 + n / 2
        ref = float(mpmath.digamma(a) - mpmath.digamma(b))
        assert digamma(a) - digamma(b) == pytest.approx(ref, abs=1e-13)
        # psi(3/4 + n/2) = psi(1/4 - n/2) + pi cot(pi (1/4 - n/2)), cot = (-1)^n
        lower = float(mpmath.digamma(0.25 - n / 2))
        assert digamma(b) == pytest.approx(lower + (-1) ** n * math.pi, abs=1e-12)
        assert polygamma(0, a) == digamma(a)


# --- Berndt's G, Clausen, polylog, S_N, C_N ---------------------------------------------

def test_berndt_G_examples(rng):
    assert berndt_G(-1.7, 0.5) == 0.0
    for _ in range(5):
        q = rng.uniform(0.01, 0.99)
        assert berndt_G(-1.0, q) == pytest.approx(0.0, abs=1e-14)
    assert berndt_G(0.0, 0.25) == pytest.approx(0.5, abs=1e-14)
    with pytest.raises(DomainError):
        berndt_G(-1.0, 1.0)


def test_berndt_G_fourier_agrees(rng):
    for _ in range(60):
        z = rng.uniform(-6, 0)
        q = rng.uniform(0.02, 0.98)
        assert abs(berndt_G_fourier(z, q) - berndt_G(z, q)) <= 1e-9 * max(1.0, abs(berndt_G(z, q)))


def test_berndt_G_vs_mpmath(rng):
    for _ in range(60):
        z = rng.uniform(-6, 6)
        q = rng.uniform(0.02, 0.98)
        if abs(z - 1) < 0.05:
            continue
        ref = _zeta_ref(z, q) - _zeta_ref(z, 1 - q)
        assert abs(berndt_G(z, q) - ref) <= 1e-10 * max(1.0, abs(_zeta_ref(z, q)))


def test_clausen_examples():
    assert clausen(2, 0.0) == 0.0
    assert clausen(1, math.pi / 2) == pytest.approx(-0.5 * math.log(2), abs=1e-14)
    # Cl_2(pi/2) = sum over odd k of (-1)^((k-1)/2) / k^2
    direct = math.fsum((-1) ** j / (2 * j + 1) ** 2 for j in range(2_000_000))
    assert clausen(2, math.pi / 2) == pytest.approx(direct, abs=1e-12)
    assert clausen(2, math.pi / 2) == pytest.approx(CATALAN, abs=1e-14)
    with pytest.raises(SingularError):
        clausen(1, 0.0)
    with pytest.raises(SingularError):
        clausen(1, 4 * math.pi)
    with pytest.raises(DomainError):
        clausen(0, 1.0)


def test_clausen_vs_closed_and_mpmath(rng):
    for _ in range(60):
        x = rng.uniform(-10, 10)
        assert clausen(1, x) == pytest.approx(-math.log(abs(2 * math.sin(x / 2))), abs=1e-10)
        n = rng.randint(2, 7)
        ref = float(mpmath.clsin(n, x) if n % 2 == 0 else mpmath.clcos(n, x))
        assert clausen(n, x) == pytest.approx(ref, abs=1e-13)


def test_polylog_unit_circle_examples():
    w = polylog_unit_circle(2, 0.0)
    assert (w.re, w.im) == (pytest.approx(math.pi ** 2 / 6, rel=1e-15), 0.0)
    q = 0.3
    assert polylog_unit_circle(2, q).im == pytest.approx(clausen(2, 2 * math.pi * q), abs=1e-15)
    w = polylog_unit_circle(3, 0.5)
    assert w.re == pytest.approx(-0.75 * riemann_zeta(3.0), rel=1e-14)
    assert w.im == pytest.approx(0.0, abs=1e-15)
    with pytest.raises(DivergenceError):
        polylog_unit_circle(1, 2.0)


def test_polylog_vs_mpmath(rng):
    for _ in range(60):
        n = rng.randint(1, 8)
        q = rng.uniform(-1.5, 1.5)
        ref = complex(mpmath.polylog(n, mpmath.expjpi(2 * q)))
        w = complex(polylog_unit_circle(n, q))
        assert abs(w - ref) <= 1e-12 * max(1.0, abs(ref))


def test_berndt_S_C_examples():
    assert berndt_C(2, 0.0) == pytest.approx(dirichlet_beta(2.0), rel=1e-14)
    with pytest.raises(DivergenceError):
        berndt_S(1, math.pi / 2)
    assert berndt_S(2, math.pi / 2) == pytest.approx(math.pi ** 2 / 8, rel=1e-14)
    with pytest.raises(DomainError):
        berndt_S(0, 0.3)
    with pytest.raises(DomainError):
        berndt_C(0, 0.3)


def test_berndt_S_C_vs_lerch(rng):
    for _ in range(40):
        N = rng.randint(1, 7)
        x = rng.uniform(-3, 3)
        if N == 1 and min(abs(x - math.pi / 2), abs(x + math.pi / 2)) < 1e-2:
            continue
        w = mpmath.expj(x) * mpmath.mpf(2) ** (-N) * mpmath.lerchphi(-mpmath.expj(2 * x), N, 0.5)
        assert berndt_S(N, x) == pytest.approx(float(mpmath.im(w)), abs=1e-12)
        assert berndt_C(N, x) == pytest.approx(float(mpmath.re(w)), abs=1e-12)


# --- F(x, z), Eisenstein sums, 4F3 ------------------------------------------------------

def test_F_transcendental():
    assert F_transcendental(0.0, 0.0) == pytest.approx(math.pi ** 2 / 6, rel=1e-15)
    direct = math.fsum(riemann_zeta(n + 2.0) / 2 ** n for n in range(60))
    assert F_transcendental(0.5, 0.0) == pytest.approx(direct, rel=1e-14)
    t, k = 0.25, 1
    w = F_transcendental(1j * t, -2.0 * k)
    assert isinstance(w, ComplexValue)
    series = math.fsum((-1) ** r * riemann_zeta(2 * r + 4.0) * t ** (2 * r) for r in range(60))
    assert w.re == pytest.approx(series, rel=1e-13)
    # even part from the coth identity: sum_{r >= k+1} (-1)^r zeta(2r) t^(2r - 2k - 2)
    closed = (0.5 - 0.5 * math.pi * t / math.tanh(math.pi * t) + riemann_zeta(2.0) * t ** 2) / t ** 4
    assert w.re == pytest.approx(closed, rel=1e-10)
    with pytest.raises(DomainError):
        F_transcendental(1.0, -1.0)
    with pytest.raises(DomainError):
        F_transcendental(0.3, 0.5)


def test_F_vs_mpmath(rng):
    for _ in range(20):
        x = rng.uniform(-0.95, 0.95)
        z = rng.uniform(-4, 0)
        ref = float(mpmath.nsum(lambda n: mpmath.zeta(n + 2 - z) * x ** n, [0, mpmath.inf]))
        assert F_transcendental(x, z) == pytest.approx(ref, rel=1e-12)


def test_coth_identity(rng):
    for _ in range(40):
        x = rng.uniform(0.05, 0.45)
        series = 1 / (math.pi * x) - 2 / (math.pi * x) * math.fsum(
            (-1) ** r * riemann_zeta(2.0 * r) * x ** (2 * r) for r in range(1, 41))
        assert series == pytest.approx(1 / math.tanh(math.pi * x), abs=1e-10)


def test_divisor_sums_and_dirichlet_identity():
    assert divisor_sigma(1, 6) == 12
    assert divisor_sigma(3, 1) == 1
    assert divisor_sigma(0, 12) == 6
    target = riemann_zeta(6.0) * riemann_zeta(3.0)
    sig = divisor_sigma_table(3, 12000)
    partial = [0.0]
    for n in range(1, 12001):
        partial.append(partial[-1] + sig[n] / n ** 6)
    # sum_{n <= x} sigma_3(n) ~ zeta(4) x^4 / 4, so the tail after N is ~ zeta(4) / (2 N^2)
    assert abs(partial[12000] - target) <= 1e-8
    N = 2000
    assert 1e-8 < target - partial[N]
    assert abs(partial[N] + riemann_zeta(4.0) / (2 * N ** 2) - target) <= 1e-9


def test_eisenstein_at_zero():
    k, alpha = 2, 5.0
    value, tail = eisenstein_G_alpha(k, alpha, 0.0, full_output=True)
    pref = 2 * (-1) ** k * (2 * math.pi) ** (2 * k) / math.factorial(2 * k - 1) * gamma(alpha + 1)
    closed = pref * riemann_zeta(alpha + 1) * riemann_zeta(alpha + 2 - 2 * k) / (2 * math.pi) ** (alpha + 1)
    assert abs(value.re - closed) <= tail + 1e-12 * abs(closed)
    assert value.im == pytest.approx(0.0, abs=1e-15)
    assert 0 < tail < 1e-6


def test_eisenstein_vs_direct_sum(rng):
    for _ in range(5):
        k = rng.randint(2, 3)
        alpha = rng.uniform(2 * k + 0.5, 9)
        q = rng.uniform(0, 1)
        value, tail = eisenstein_G_alpha(k, alpha, q, n_terms=3000, full_output=True)
        pref = 2 * (-1) ** k * (2 * math.pi) ** (2 * k) / math.factorial(2 * k - 1) * gamma(alpha + 1)
        direct = pref * sum(divisor_sigma(2 * k - 1, n) / (2 * math.pi * n) ** (alpha + 1)
                            * cmath.exp(2j * math.pi * n * q) for n in range(1, 3001))
        assert abs(complex(value) - direct) <= 1e-10 * abs(pref)
        assert tail > 0


def test_eisenstein_divergent():
    with pytest.raises(DivergenceError):
        eisenstein_G_alpha(2, 3.0, 0.2)
    with pytest.raises(DomainError):
        eisenstein_G_alpha(2, 5.0, 1.5)


def test_hypergeom_4F3():
    assert hypergeom_4F3_unit((1, 1, 1, 1), (1, 1, 1), x=0.0) == 1.0
    v = hypergeom_4F3_unit((1, 1, 1.5, 1.5), (2, 2, 2))
    assert abs(math.pi / 32 * (16 * math.log(2) - v) - CATALAN) <= 1e-7
    ref = float(mpmath.hyper([1, 1, 1.5, 1.5], [2, 2, 2], 1))
    assert v == pytest.approx(ref, rel=1e-12)
    with pytest.raises(DivergenceError):
        hypergeom_4F3_unit((1, 1, 1, 1), (1, 1, 2))


def test_hypergeom_partial_sums_decay():
    from hurwitz_kit.hurwitz import _hyper_partial_sums
    a, b = (1, 1, 1.5, 1.5), (2, 2, 2)
    limit = float(mpmath.hyper(list(a), list(b), 1))
    for N in (100, 400, 1600):
        sN, s2N = _hyper_partial_sums(a, b, [N, 2 * N])
        # terms ~ k^-2, so the tail after N terms is about C/N
        assert 0 < limit - s2N < limit - sN
        assert (limit - sN) * N == pytest.approx((limit - s2N) * 2 * N, rel=0.05)
