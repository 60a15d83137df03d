"""Catalan's constant, Clausen functions, Berndt's S_N and C_N, and
Eisenstein series moments."""
import cmath
from functools import lru_cache
import math

import numpy as np

from ..hurwitz import (EisensteinMoment, berndt_C, berndt_G, berndt_G_fourier, berndt_S,
                       clausen, divisor_sigma_table, hurwitz_zeta, hypergeom_4F3_unit,
                       polylog_unit_circle)
from ..specfun import (_cospi, _sinpi, bernoulli_number, bernoulli_poly, dirichlet_beta,
                       euler_number, gamma, riemann_zeta)
from ..errors import DivergenceError, SingularError
from ..quad import NO_HINT
from ._core import Identity, Integral, Value, integer, real
from .helpers import (LN2, LOG_BOTH, TWO_PI, alternating_c_partial, alternating_c_series,
                      cos_pi_unit, dist_even, pref, secant_psi_series, trig_poly)

IDENTITIES = []


def _add(**kw):
    IDENTITIES.append(Identity(**kw))


def _neg(name="z", default=-1.5, low=-3.0, high=-0.05):
    return real(name, default, low, high)


def _need_negative(p):
    return None if p["z"] < 0 else f"z must be negative, got {p['z']}"


def _fact(n):
    return float(math.factorial(n))


# ---------------------------------------------------------------------------
# catalan
# ---------------------------------------------------------------------------

_ANTI_A = (0.4, 0.0, -0.3, 0.2)
_ANTI_B = (1.0, -0.6, 0.0, 0.35)
_anti_f = trig_poly(_ANTI_A, _ANTI_B)


def _antihurtrans_rhs(p):
    z = p["z"]
    s = sum(b * n ** (z - 1.0) for n, b in enumerate(_ANTI_B, start=1))
    return pref(z) * _cospi(z / 2.0) * s


_add(id="antihurtrans2", family="catalan",
     anchor="antihurtrans2: anti-symmetrized transform sees only the sine coefficients",
     params=[_neg(default=-1.3)],
     lhs=lambda p: Integral(lambda q, z=p["z"]: 0.5 * _anti_f(q) * berndt_G(z, q)),
     rhs=_antihurtrans_rhs, constraint=_need_negative)

_add(id="bruceexp", family="catalan", anchor="bruceexp: sine series of G(z, q)",
     params=[_neg(default=-0.7), real("q", 0.3, 0.05, 0.95)], kind="series",
     lhs=lambda p: Value(hurwitz_zeta(p["z"], p["q"]) - hurwitz_zeta(p["z"], 1.0 - p["q"])),
     rhs=lambda p: berndt_G_fourier(p["z"], p["q"]), constraint=_need_negative)


def _gsec(z):
    # G(z, q) / cos(pi q) with q = 1/2 + t; both vanish to first order at t = 0
    limit = 2.0 * z * hurwitz_zeta(z + 1.0, 0.5) / math.pi

    def f(q):
        t = q - 0.5
        if abs(t) < 1e-9:
            return limit
        return berndt_G(z, q) / cos_pi_unit(q)
    return f


_add(id="ex_gsec", family="catalan",
     anchor="Ex-Gsec: anti-symmetrized transform of sec(pi q)",
     params=[_neg(default=-1.5)],
     lhs=lambda p: Integral(_gsec(p["z"]), scale=0.5),
     rhs=lambda p: (16.0 * gamma(1.0 - p["z"]) * _cospi(p["z"] / 2.0) / TWO_PI ** (2.0 - p["z"])
                    * alternating_c_series(1.0 - p["z"])),
     constraint=_need_negative)


def _gr1_f(n):
    limit = (-1) ** (n + 1) * 2.0 * n

    def f(q):
        t = q - 0.5
        if abs(t) < 1e-9:
            return limit
        # sin(2 n pi q) / cos(pi q) rewritten around q = 1/2
        return (-1) ** (n + 1) * math.sin(TWO_PI * n * t) / math.sin(math.pi * t)
    return f


def _c_direct(n):
    return math.fsum((-1) ** k / (2 * k + 1.0) for k in range(n))


_add(id="gr1", family="catalan", anchor="gr1: sin(2 n pi q) / cos(pi q) integrates to a partial Leibniz sum",
     params=[integer("n", 3, 1, 30)],
     lhs=lambda p: Integral(_gr1_f(p["n"])),
     rhs=lambda p: (-1) ** (p["n"] + 1) * 4.0 / math.pi * _c_direct(p["n"]))

_add(id="newcata", family="catalan",
     anchor="newcata: Catalan's constant as an alternating sum of partial Leibniz sums",
     params=[], kind="series",
     lhs=lambda p: Value(alternating_c_series(1.0)),
     rhs=lambda p: dirichlet_beta(2.0), default_tol=1e-12,
     note="the series is summed by splitting c_n = pi/4 + (-1)^n d_n / 4 into eta(1) and a digamma series")


def _half_minus_q_sec(q):
    t = q - 0.5
    if abs(t) < 1e-9:
        return 1.0 / math.pi
    return t / math.sin(math.pi * t)


_add(id="intcata", family="catalan", anchor="intcata: (1/2 - q) sec(pi q) against the Catalan series",
     params=[],
     lhs=lambda p: Integral(_half_minus_q_sec),
     rhs=lambda p: 4.0 / math.pi ** 2 * alternating_c_series(1.0))


def _t_csc(t):
    return 1.0 if t < 1e-9 else t / math.sin(t)


_add(id="cata1", family="catalan", anchor="cata1: t / sin t over [0, pi/2] gives 2G",
     params=[],
     lhs=lambda p: Integral(_t_csc, 0.0, math.pi / 2.0, scale=2.0 / math.pi ** 2),
     rhs=lambda p: 4.0 * dirichlet_beta(2.0) / math.pi ** 2)

_add(id="catalan2", family="catalan",
     anchor="catalan2: G from 16 ln 2 and a 4F3 at unit argument",
     params=[], kind="series",
     lhs=lambda p: Value(math.pi / 32.0 * (16.0 * LN2 - hypergeom_4F3_unit((1, 1, 1.5, 1.5), (2, 2, 2)))),
     rhs=lambda p: dirichlet_beta(2.0), default_tol=1e-12)


@lru_cache(maxsize=None)
def _odd_bernoulli_about_half(m):
    # B_(2m+1)(1/2 + t) = t * sum_j c_j t^(2j); only even-index B_k(1/2) survive
    n = 2 * m + 1
    coeffs = []
    for k in range(0, n, 2):
        bk_half = (2.0 ** (1 - k) - 1.0) * float(bernoulli_number(k))
        coeffs.append(math.comb(n, k) * bk_half)
    # coeffs[i] multiplies t^(n - 2i); reorder by ascending power of t^2
    return tuple(reversed(coeffs))


def _sec_bernoulli_f(m):
    coeffs = _odd_bernoulli_about_half(m)

    def f(q):
        t = q - 0.5
        u = t * t
        poly = 0.0
        for c in reversed(coeffs):
            poly = poly * u + c
        # B(1/2 + t) / cos(pi (1/2 + t)) = -t P(t^2) / sin(pi t)
        if abs(t) < 1e-9:
            return -poly / math.pi
        return -t * poly / math.sin(math.pi * t)
    return f


def _secant1_rhs(p):
    m = p["m"]
    return ((-1) ** (m + 1) * 16.0 * _fact(2 * m + 1) / TWO_PI ** (2 * m + 2)
            * alternating_c_series(2.0 * m + 1.0))


_PSI_TERMS = 4000


def _averaged(partial, s, N):
    # the terms alternate to leading order; averaging S_N and S_(N+1) cancels it
    return 0.5 * (partial(s, N) + partial(s, N + 1))


def _secant2_rhs(p):
    m = p["m"]
    star = _averaged(secant_psi_series, 2 * m + 1, _PSI_TERMS)
    return (-1) ** m * 4.0 * _fact(2 * m + 1) / TWO_PI ** (2 * m + 2) * star


_m_domain = [integer("m", 1, 1, 5)]

_add(id="secant1", family="catalan", anchor="secant1: sec(pi q) against B_(2m+1), Leibniz-sum form",
     params=_m_domain,
     lhs=lambda p: Integral(_sec_bernoulli_f(p["m"])), rhs=_secant1_rhs,
     note="m >= 1: at m = 0 the series converges only conditionally")

_add(id="secant2", family="catalan", anchor="secant2: sec(pi q) against B_(2m+1), two-sided digamma form",
     params=_m_domain,
     lhs=lambda p: Integral(_sec_bernoulli_f(p["m"])), rhs=_secant2_rhs,
     note="the two-sided digamma sum is truncated at |n| <= 4000 and averaged over the last two partial sums")

_add(id="catalan_m", family="catalan",
     anchor="catalan-m: the Leibniz-sum series equals -1/4 of the two-sided digamma sum",
     params=_m_domain, kind="series",
     lhs=lambda p: Value(_averaged(alternating_c_partial, 2 * p["m"] + 1, _PSI_TERMS)),
     rhs=lambda p: -0.25 * _averaged(secant_psi_series, 2 * p["m"] + 1, _PSI_TERMS))


# ---------------------------------------------------------------------------
# clausen
# ---------------------------------------------------------------------------

def _polylog_hint(n):
    return LOG_BOTH if n == 1 else NO_HINT


def _int_polylog(p):
    z, n = p["z"], p["n"]
    return pref(z) * cmath.exp(0.5j * math.pi * (1.0 - z)) * riemann_zeta(1.0 - z + n)


_add(id="int_polylog_re", family="clausen",
     anchor="int-polylog: real part of the transform of Li_n(exp(2 pi i q))",
     params=[_neg(default=-0.8), integer("n", 2, 1, 4)],
     lhs=lambda p: Integral(lambda q, z=p["z"], n=p["n"]: polylog_unit_circle(n, q).re * hurwitz_zeta(z, q),
                            hint=_polylog_hint(p["n"])),
     rhs=lambda p: _int_polylog(p).real, constraint=_need_negative)

_add(id="int_polylog_im", family="clausen",
     anchor="int-polylog: imaginary part of the transform of Li_n(exp(2 pi i q))",
     params=[_neg(default=-1.4), integer("n", 1, 1, 4)],
     lhs=lambda p: Integral(lambda q, z=p["z"], n=p["n"]: polylog_unit_circle(n, q).im * hurwitz_zeta(z, q),
                            hint=_polylog_hint(p["n"])),
     rhs=lambda p: _int_polylog(p).imag, constraint=_need_negative)


def _cl(order):
    return lambda q: clausen(order, TWO_PI * q)


_add(id="clausen1", family="clausen", anchor="clausen1: transform of Cl_2n(2 pi q)",
     params=[_neg(default=-1.1), integer("n", 1, 1, 3)],
     lhs=lambda p: Integral(lambda q, f=_cl(2 * p["n"]), z=p["z"]: f(q) * hurwitz_zeta(z, q)),
     rhs=lambda p: pref(p["z"]) * _cospi(p["z"] / 2.0) * riemann_zeta(1.0 - p["z"] + 2 * p["n"]),
     constraint=_need_negative)

_add(id="clausen2", family="clausen", anchor="clausen2: transform of Cl_(2n+1)(2 pi q)",
     params=[_neg(default=-0.6), integer("n", 0, 0, 3)],
     lhs=lambda p: Integral(lambda q, f=_cl(2 * p["n"] + 1), z=p["z"]: f(q) * hurwitz_zeta(z, q),
                            hint=_polylog_hint(2 * p["n"] + 1)),
     rhs=lambda p: pref(p["z"]) * _sinpi(p["z"] / 2.0) * riemann_zeta(2.0 - p["z"] + 2 * p["n"]),
     constraint=_need_negative)


def _ber_clausen_even_rhs(p):
    m, n = p["m"], p["n"]
    if m % 2 == 0:
        return 0.0
    return (-1) ** ((m + 1) // 2) * _fact(m) * TWO_PI ** (-m) * riemann_zeta(float(m + 2 * n))


def _ber_clausen_odd_rhs(p):
    m, n = p["m"], p["n"]
    if m % 2 == 1:
        return 0.0
    return (-1) ** (m // 2 + 1) * _fact(m) * TWO_PI ** (-m) * riemann_zeta(float(m + 2 * n + 1))


_add(id="ber_clausen_even", family="clausen", anchor="Bernoulli-Clausen example: B_m against Cl_2n(2 pi q)",
     params=[integer("m", 3, 1, 8), integer("n", 1, 1, 3)],
     lhs=lambda p: Integral(lambda q, f=_cl(2 * p["n"]), m=p["m"]: bernoulli_poly(m, q) * f(q)),
     rhs=_ber_clausen_even_rhs)

_add(id="ber_clausen_odd", family="clausen",
     anchor="Bernoulli-Clausen example: B_m against Cl_(2n+1)(2 pi q)",
     params=[integer("m", 2, 1, 8), integer("n", 1, 0, 3)],
     lhs=lambda p: Integral(lambda q, f=_cl(2 * p["n"] + 1), m=p["m"]: bernoulli_poly(m, q) * f(q),
                            hint=_polylog_hint(2 * p["n"] + 1)),
     rhs=_ber_clausen_odd_rhs)


def _mom_clausen_even_rhs(p):
    m, n = p["m"], p["n"]
    return _fact(m) * sum((-1) ** (j + 1) * riemann_zeta(2.0 * n + 2 * j + 1)
                          / (_fact(m - 2 * j) * TWO_PI ** (2 * j + 1)) for j in range((m - 1) // 2 + 1))


def _mom_clausen_odd_rhs(p):
    m, n = p["m"], p["n"]
    return _fact(m) * sum((-1) ** (j + 1) * riemann_zeta(2.0 * n + 2 * j + 1)
                          / (_fact(m - 2 * j + 1) * TWO_PI ** (2 * j)) for j in range(1, m // 2 + 1))


_add(id="mom_clausen_even", family="clausen", anchor="moment example: q^m against Cl_2n(2 pi q)",
     params=[integer("m", 3, 1, 8), integer("n", 1, 1, 3)],
     lhs=lambda p: Integral(lambda q, f=_cl(2 * p["n"]), m=p["m"]: q ** m * f(q)),
     rhs=_mom_clausen_even_rhs)

_add(id="mom_clausen_odd", family="clausen", anchor="moment example: q^m against Cl_(2n+1)(2 pi q)",
     params=[integer("m", 4, 1, 8), integer("n", 1, 1, 3)],
     lhs=lambda p: Integral(lambda q, f=_cl(2 * p["n"] + 1), m=p["m"]: q ** m * f(q)),
     rhs=_mom_clausen_odd_rhs)


# ---------------------------------------------------------------------------
# berndt_beta
# ---------------------------------------------------------------------------

# S_1 is log-singular and C_1 jumps at q = 1/4 and 3/4
_QUARTERS = (0.25, 0.75)


def _at_quarters(fn, N):
    def f(q):
        try:
            return fn(N, TWO_PI * q)
        except (DivergenceError, SingularError):
            # a node rounded onto the integrable log singularity of S_1;
            # its tanh-sinh weight is below 1e-15, so it contributes nothing
            return 0.0
    return f


def _S(N):
    return _at_quarters(berndt_S, N)


def _C(N):
    return _at_quarters(berndt_C, N)


def _integral(f):
    return Integral(f, breakpoints=_QUARTERS)


_N_domain = integer("N", 2, 1, 4)

_add(id="beta1", family="berndt_beta", anchor="beta1: transform of S_N(2 pi q)",
     params=[_neg(default=-0.9), _N_domain],
     lhs=lambda p: _integral(lambda q, f=_S(p["N"]), z=p["z"]: f(q) * hurwitz_zeta(z, q)),
     rhs=lambda p: pref(p["z"]) * _cospi(p["z"] / 2.0) * dirichlet_beta(1.0 - p["z"] + p["N"]),
     constraint=_need_negative)

_add(id="beta2", family="berndt_beta", anchor="beta2: transform of C_N(2 pi q)",
     params=[_neg(default=-1.7), integer("N", 1, 1, 4)],
     lhs=lambda p: _integral(lambda q, f=_C(p["N"]), z=p["z"]: f(q) * hurwitz_zeta(z, q)),
     rhs=lambda p: pref(p["z"]) * _sinpi(p["z"] / 2.0) * dirichlet_beta(1.0 - p["z"] + p["N"]),
     constraint=_need_negative)


def _ber_S_rhs(p):
    m, N = p["m"], p["N"]
    if m % 2 == 0:
        return 0.0
    return (-1) ** ((m + 1) // 2) * TWO_PI ** (-m) * _fact(m) * dirichlet_beta(float(m + N))


def _ber_C_rhs(p):
    m, N = p["m"], p["N"]
    if m % 2 == 1:
        return 0.0
    return (-1) ** (m // 2 + 1) * TWO_PI ** (-m) * _fact(m) * dirichlet_beta(float(m + N))


_add(id="ber_S", family="berndt_beta", anchor="Bernoulli example: B_m against S_N(2 pi q)",
     params=[integer("m", 3, 0, 8), _N_domain],
     lhs=lambda p: _integral(lambda q, f=_S(p["N"]), m=p["m"]: bernoulli_poly(m, q) * f(q)),
     rhs=_ber_S_rhs)

_add(id="ber_C", family="berndt_beta", anchor="Bernoulli example: B_m against C_N(2 pi q)",
     params=[integer("m", 2, 1, 8), _N_domain],
     lhs=lambda p: _integral(lambda q, f=_C(p["N"]), m=p["m"]: bernoulli_poly(m, q) * f(q)),
     rhs=_ber_C_rhs,
     note="m >= 1: C_N has mean zero, so the even-m closed form does not extend to m = 0")


def _qsn_rhs(p):
    m, N = p["m"], p["N"]
    return _fact(m) * sum((-1) ** (k + 1) * dirichlet_beta(2.0 * k + 1 + N)
                          / (_fact(m - 2 * k) * TWO_PI ** (2 * k + 1)) for k in range((m - 1) // 2 + 1))


def _qcn_rhs(p):
    m, N = p["m"], p["N"]
    return _fact(m) * sum((-1) ** (k + 1) * dirichlet_beta(2.0 * k + N)
                          / (_fact(m + 1 - 2 * k) * TWO_PI ** (2 * k)) for k in range(1, m // 2 + 1))


_add(id="qsn", family="berndt_beta", anchor="qsn: q^m against S_N(2 pi q)",
     params=[integer("m", 3, 1, 8), _N_domain],
     lhs=lambda p: _integral(lambda q, f=_S(p["N"]), m=p["m"]: q ** m * f(q)),
     rhs=_qsn_rhs,
     note="closed form without a (2k+1)! factor in the summand, as repeated integration by parts gives")

_add(id="qcn", family="berndt_beta", anchor="qsn companion: q^m against C_N(2 pi q)",
     params=[integer("m", 4, 1, 8), _N_domain],
     lhs=lambda p: _integral(lambda q, f=_C(p["N"]), m=p["m"]: q ** m * f(q)),
     rhs=_qcn_rhs,
     note="sum over 1 <= k <= m/2 with no (2k)! factor, as repeated integration by parts gives")

_add(id="betaodd", family="berndt_beta", anchor="betaodd: beta at odd integers via Euler numbers",
     params=[integer("k", 2, 0, 10)], kind="series",
     lhs=lambda p: Value(dirichlet_beta(2.0 * p["k"] + 1.0)),
     rhs=lambda p: (abs(euler_number(2 * p["k"])) / (2.0 * _fact(2 * p["k"]))
                    * (math.pi / 2.0) ** (2 * p["k"] + 1)),
     default_tol=1e-12)


def _s2n_euler_rhs(p):
    m, n = p["m"], p["n"]
    s = sum((-1) ** (k + 1) * abs(euler_number(2 * n + 2 * k))
            / (2.0 ** (4 * k) * _fact(m - 2 * k) * _fact(2 * n + 2 * k)) for k in range((m - 1) // 2 + 1))
    return _fact(m) * math.pi ** (2 * n) / 2.0 ** (2 * n + 3) * s


def _c2n1_euler_rhs(p):
    m, n = p["m"], p["n"]
    s = sum((-1) ** (k + 1) * abs(euler_number(2 * n + 2 * k))
            / (2.0 ** (4 * k) * _fact(m - 2 * k + 1) * _fact(2 * n + 2 * k)) for k in range(1, m // 2 + 1))
    return _fact(m) * math.pi ** (2 * n + 1) / 2.0 ** (2 * n + 2) * s


_add(id="s2n_euler", family="berndt_beta", anchor="betaodd applied to qsn: q^m against S_2n, Euler-number form",
     params=[integer("m", 3, 1, 8), integer("n", 1, 1, 2)],
     lhs=lambda p: _integral(lambda q, f=_S(2 * p["n"]), m=p["m"]: q ** m * f(q)),
     rhs=_s2n_euler_rhs, note="follows the corrected qsn form")

_add(id="c2n1_euler", family="berndt_beta",
     anchor="betaodd applied to the qsn companion: q^m against C_(2n+1), Euler-number form",
     params=[integer("m", 4, 1, 8), integer("n", 1, 0, 1)],
     lhs=lambda p: _integral(lambda q, f=_C(2 * p["n"] + 1), m=p["m"]: q ** m * f(q)),
     rhs=_c2n1_euler_rhs, note="follows the corrected qsn companion form")


# ---------------------------------------------------------------------------
# eisenstein
# ---------------------------------------------------------------------------

# truncation target for the Eisenstein series: a tenth of the default tolerance
_EIS_TAIL = 1e-9


@lru_cache(maxsize=16)
def _eis_series(k, alpha):
    return EisensteinMoment(k, alpha, EisensteinMoment.terms_for(k, alpha, _EIS_TAIL))


def _zeta_sup(z):
    # |zeta(z, q)| on (0, 1] for z < 0; zeta(z, 0) = zeta(z, 1) by the shift law
    return 1.05 * max(abs(hurwitz_zeta(z, i / 32.0)) for i in range(1, 33))


def _inteins_lhs(part):
    def lhs(p):
        series = _eis_series(p["k"], p["alpha"])
        z = p["z"]
        f = ((lambda q: series(q).real * hurwitz_zeta(z, q)) if part == "re"
             else (lambda q: series(q).imag * hurwitz_zeta(z, q)))
        # truncation error of G_k^(alpha), integrated against |zeta(z, q)|
        return [Integral(f), Value(0.0, series.tail * _zeta_sup(z))]
    return lhs


def _inteins_dirichlet(p):
    k, alpha, z = p["k"], p["alpha"], p["z"]
    s = 2.0 + alpha - z
    return (2.0 * gamma(alpha + 1.0) * gamma(1.0 - z) * (-1) ** k * 1j * cmath.exp(-0.5j * math.pi * z)
            / (_fact(2 * k - 1) * TWO_PI ** (2.0 - z - 2 * k + alpha))
            * riemann_zeta(s) * riemann_zeta(s - (2 * k - 1)))


def _inteins_riemann(p):
    k, alpha, z = p["k"], p["alpha"], p["z"]
    return (2j * math.pi * cmath.exp(-0.5j * math.pi * z) / _sinpi((alpha - z) / 2.0)
            * gamma(alpha + 1.0) * gamma(1.0 - z) / (gamma(2.0 * k) * gamma(3.0 + alpha - z - 2 * k))
            * riemann_zeta(2.0 + alpha - z) * riemann_zeta(z + 2 * k - 2.0 - alpha))


def _eis_params(alpha=5.0, z=-1.0):
    return [integer("k", 2, 2, 3), real("alpha", alpha, 5.0, 8.0), real("z", z, -2.0, -0.1)]


def _eis_constraint(p):
    if p["alpha"] < 2 * p["k"] + 1:
        return f"need alpha >= 2k + 1 for a rapidly convergent series, got alpha={p['alpha']}, k={p['k']}"
    if p["z"] >= 0:
        return f"z must be negative, got {p['z']}"
    return None


_EIS_NOTE = "the Eisenstein series is truncated where its tail bound falls below 1e-9"

_add(id="inteins", family="eisenstein",
     anchor="inteins: transform of G_k^(alpha), real part, before Riemann's relation",
     params=_eis_params(), lhs=_inteins_lhs("re"), rhs=lambda p: _inteins_dirichlet(p).real,
     constraint=_eis_constraint, default_tol=1e-8, note=_EIS_NOTE)

_add(id="inteins_im", family="eisenstein",
     anchor="inteins: transform of G_k^(alpha), imaginary part, before Riemann's relation",
     params=_eis_params(5.5, -0.6), lhs=_inteins_lhs("im"), rhs=lambda p: _inteins_dirichlet(p).imag,
     constraint=_eis_constraint, default_tol=1e-8, note=_EIS_NOTE)

_add(id="inteins_riemann", family="eisenstein",
     anchor="inteins: transform of G_k^(alpha) in the form after Riemann's relation, real part",
     params=_eis_params(5.5, -1.2), lhs=_inteins_lhs("re"), rhs=lambda p: _inteins_riemann(p).real,
     constraint=_eis_constraint, loci=lambda p: dist_even(p["alpha"] - p["z"]), default_tol=1e-8,
     note="second zeta factor is zeta(z + 2k - 2 - alpha), the image of zeta(3 + alpha - z - 2k) under "
          "Riemann's relation; " + _EIS_NOTE)

_APOSTOL_TERMS = 50_000


@lru_cache(maxsize=8)
def _sigma(p):
    return divisor_sigma_table(p, _APOSTOL_TERMS)[1:]


def _apostol_lhs(p):
    k, u = p["k"], p["u"]
    power = 2 * k - 1
    s = u + power
    n = np.arange(1, _APOSTOL_TERMS + 1, dtype=float)
    head = float(np.sum((_sigma(power) / n ** power)[::-1] * (n ** -u)[::-1]))
    # sigma_p(n) <= zeta(p) n^p bounds the omitted terms
    tail = riemann_zeta(float(power)) * _APOSTOL_TERMS ** (1.0 - u) / (u - 1.0)
    return Value(head, tail)


_add(id="apostol", family="eisenstein", anchor="apostol: Dirichlet series of sigma_p(n) is zeta(s) zeta(s - p)",
     params=[integer("k", 2, 2, 4), real("u", 4.0, 3.5, 6.0)], kind="series",
     lhs=_apostol_lhs,
     rhs=lambda p: riemann_zeta(p["u"] + 2 * p["k"] - 1.0) * riemann_zeta(p["u"]),
     note="p = 2k - 1 and s = p + u; 5 x 10^4 terms with a tail bound")
