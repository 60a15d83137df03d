"""Transforms involving ln sin, ln Gamma, z-derivatives of zeta and polygamma."""
from fractions import Fraction
import math

from ..hurwitz import hurwitz_zeta, hurwitz_zeta_zderiv
from ..specfun import (_cospi, _sinpi, bernoulli_number, bernoulli_poly, digamma,
                       harmonic, polygamma, riemann_zeta, riemann_zeta_deriv,
                       zeta_nonpositive_exact)
from ._core import Identity, Integral, Value, integer, real
from .helpers import (A_CONST, CATALAN, GAMMA_E, LN2, LN_SQRT_2PI, LOG_BOTH, LOG_LEFT,
                      TWO_PI, ln_sin_pi, pref)

IDENTITIES = []
PI2 = math.pi ** 2


def _add(**kw):
    IDENTITIES.append(Identity(**kw))


def _need_negative(p):
    return None if p["z"] < 0 else f"z must be negative, got {p['z']}"


def _lnsin_int(g, **kw):
    return Integral(lambda q: g(q) * ln_sin_pi(q), hint=LOG_BOTH, **kw)


def _lngamma_int(g, a=0.0, b=1.0):
    return Integral(lambda q: g(q) * math.lgamma(q), a=a, b=b, hint=LOG_LEFT)


# ---------------------------------------------------------------------------
# logsine
# ---------------------------------------------------------------------------

_add(id="lotszeta1", family="logsine", anchor="lotszeta1: transform of ln sin(pi q), Gamma form",
     params=[real("z", -1.3, -4.0, -0.05)],
     lhs=lambda p: _lnsin_int(lambda q, z=p["z"]: hurwitz_zeta(z, q)),
     rhs=lambda p: -pref(p["z"]) * _sinpi(p["z"] / 2.0) * riemann_zeta(2.0 - p["z"]),
     constraint=_need_negative)

_add(id="lotszeta", family="logsine", anchor="lotszeta: transform of ln sin(pi q), zeta-ratio form",
     params=[real("z", -2.6, -4.0, -0.05)],
     lhs=lambda p: _lnsin_int(lambda q, z=p["z"]: hurwitz_zeta(z, q)),
     rhs=lambda p: -riemann_zeta(p["z"]) * riemann_zeta(2.0 - p["z"]) / (2.0 * riemann_zeta(1.0 - p["z"])),
     constraint=_need_negative)


def _logsine_rhs(p):
    m = p["m"]
    if m % 2:
        return 0.0
    return (-1) ** (m // 2) * math.factorial(m) * riemann_zeta(m + 1.0) / TWO_PI ** m


_add(id="logsine", family="logsine", anchor="logsine: integral of ln sin(pi q) against B_m",
     params=[integer("m", 4, 1, 10)],
     lhs=lambda p: _lnsin_int(lambda q, m=p["m"]: bernoulli_poly(m, q)),
     rhs=_logsine_rhs)


def _momlogsine_rhs(p):
    n = p["n"]
    s = 0.0
    for k in range(1, n // 2 + 1):
        s += (-1) ** k * riemann_zeta(2.0 * k + 1.0) / (TWO_PI ** (2 * k) * math.factorial(n + 1 - 2 * k))
    return -LN2 / (n + 1) + math.factorial(n) * s


_add(id="momlogsine", family="logsine", anchor="momlogsine: power moments of ln sin(pi q)",
     params=[integer("n", 5, 0, 10)],
     lhs=lambda p: _lnsin_int(lambda q, n=p["n"]: q ** n),
     rhs=_momlogsine_rhs)

_add(id="classic", family="logsine", anchor="classic: the integral of ln sin(pi q) is -ln 2",
     params=[], lhs=lambda p: _lnsin_int(lambda q: 1.0), rhs=lambda p: -LN2)

_EXAMPLE4 = {
    1: lambda: -LN2 / 2.0,
    2: lambda: -LN2 / 3.0 - riemann_zeta(3.0) / (2.0 * PI2),
    3: lambda: -LN2 / 4.0 - 3.0 * riemann_zeta(3.0) / (4.0 * PI2),
    4: lambda: -LN2 / 5.0 - riemann_zeta(3.0) / PI2 + 3.0 * riemann_zeta(5.0) / (2.0 * PI2 * PI2),
}
for _k, _v in _EXAMPLE4.items():
    _add(id=f"example4_q{_k}", family="logsine",
         anchor=f"example4: the q^{_k} moment of ln sin(pi q) in closed form",
         params=[], lhs=lambda p, k=_k: _lnsin_int(lambda q: q ** k),
         rhs=lambda p, v=_v: v())


# ---------------------------------------------------------------------------
# loggamma
# ---------------------------------------------------------------------------

def _loggamma_rhs(p):
    z = p["z"]
    s = 2.0 - z
    zs = riemann_zeta(s)
    return (pref(z) / TWO_PI * zs
            * (math.pi * _sinpi(z / 2.0) + 2.0 * _cospi(z / 2.0) * (A_CONST - riemann_zeta_deriv(s) / zs)))


_add(id="loggamma", family="loggamma", anchor="loggamma: transform of ln Gamma(q)",
     params=[real("z", -0.8, -4.0, -0.05)],
     lhs=lambda p: _lngamma_int(lambda q, z=p["z"]: hurwitz_zeta(z, q)),
     rhs=_loggamma_rhs, constraint=_need_negative)

_add(id="logga1", family="loggamma", anchor="logga1: sine coefficients of ln Gamma(q)",
     params=[integer("n", 3, 1, 12)],
     lhs=lambda p: _lngamma_int(lambda q, n=p["n"]: math.sin(TWO_PI * n * q)),
     rhs=lambda p: (A_CONST + math.log(p["n"])) / (TWO_PI * p["n"]))

_add(id="logga2", family="loggamma", anchor="logga2: cosine coefficients of ln Gamma(q)",
     params=[integer("n", 2, 1, 12)],
     lhs=lambda p: _lngamma_int(lambda q, n=p["n"]: math.cos(TWO_PI * n * q)),
     rhs=lambda p: 0.25 / p["n"])

KOLBIG_TERMS = 10_000


def _kolbig_sum(c, N=KOLBIG_TERMS):
    """sum_{k >= 2} ln k / (4k^2 - c^2): N terms plus an Euler-Maclaurin tail."""
    head = math.fsum(math.log(k) / (4.0 * k * k - c * c) for k in range(2, N + 1))
    lnN = math.log(N)
    # int_N^inf ln x / (4x^2 - c^2) dx via the geometric expansion in c^2 / 4x^2
    integral = 0.0
    for j in range(4):
        e = 2 * j + 1
        integral += (c * c / 4.0) ** j / 4.0 * (lnN / e + 1.0 / e ** 2) / N ** e
    den = 4.0 * N * N - c * c
    fN = lnN / den
    dfN = (den / N - 8.0 * N * lnN) / den ** 2
    return head + integral - 0.5 * fN - dfN / 12.0


def _kolbig_rhs(p):
    c = 2 * p["n"] + 1.0
    return 2.0 / PI2 * (A_CONST / c ** 2 + 2.0 * _kolbig_sum(c))


_add(id="kolbig", family="loggamma",
     anchor="odd-cosine companion of logga2: ln Gamma(q) against cos((2n+1) pi q)",
     params=[integer("n", 1, 0, 6)],
     lhs=lambda p: _lngamma_int(lambda q, n=p["n"]: math.cos((2 * n + 1) * math.pi * q)),
     rhs=_kolbig_rhs, default_tol=1e-9,
     note="RHS sum truncated at 10^4 terms; the remainder is added by Euler-Maclaurin")

_add(id="special1", family="loggamma", anchor="special1: B_2m against ln Gamma(q)",
     params=[integer("m", 2, 1, 5)],
     lhs=lambda p: _lngamma_int(lambda q, m=p["m"]: bernoulli_poly(2 * m, q)),
     rhs=lambda p: ((-1) ** (p["m"] + 1) * math.factorial(2 * p["m"]) * riemann_zeta(2.0 * p["m"] + 1.0)
                    / (2.0 * TWO_PI ** (2 * p["m"]))))

_add(id="special1_deriv", family="loggamma", anchor="special1: B_2m against ln Gamma(q) equals -zeta'(-2m)",
     params=[integer("m", 1, 1, 5)],
     lhs=lambda p: _lngamma_int(lambda q, m=p["m"]: bernoulli_poly(2 * m, q)),
     rhs=lambda p: -riemann_zeta_deriv(-2.0 * p["m"]))

_add(id="special2", family="loggamma", anchor="special2: B_(2m-1) against ln Gamma(q)",
     params=[integer("m", 2, 1, 5)],
     lhs=lambda p: _lngamma_int(lambda q, m=p["m"]: bernoulli_poly(2 * m - 1, q)),
     rhs=lambda p: (float(bernoulli_number(2 * p["m"])) / (2 * p["m"])
                    * (riemann_zeta_deriv(2.0 * p["m"]) / riemann_zeta(2.0 * p["m"]) - A_CONST)))


def _special3_rhs(p):
    m = p["m"]
    if m % 2 == 0:
        return -riemann_zeta_deriv(-float(m))
    return float(harmonic(m)) * riemann_zeta(-float(m)) + riemann_zeta_deriv(-float(m))


_add(id="special3", family="loggamma", anchor="special3: B_m against ln Gamma(q), both parities",
     params=[integer("m", 3, 0, 9)],
     lhs=lambda p: _lngamma_int(lambda q, m=p["m"]: bernoulli_poly(m, q)),
     rhs=_special3_rhs)

_add(id="zzero", family="loggamma", anchor="zzero: (q - 1/2) against ln Gamma(q)",
     params=[], lhs=lambda p: _lngamma_int(lambda q: q - 0.5),
     rhs=lambda p: (6.0 * riemann_zeta_deriv(2.0) / PI2 - 2.0 * LN_SQRT_2PI - GAMMA_E) / 12.0)

_add(id="zeta3", family="loggamma", anchor="zeta3: B_2(q) against ln Gamma(q) is zeta(3)/(4 pi^2)",
     params=[], lhs=lambda p: _lngamma_int(lambda q: q * q - q + 1.0 / 6.0),
     rhs=lambda p: riemann_zeta(3.0) / (4.0 * PI2))


def _loggamma1_rhs(p):
    n = p["n"]
    s1 = 0.0
    for k in range(1, (n + 1) // 2 + 1):
        s1 += ((-1) ** k * math.comb(n + 1, 2 * k - 1) * math.factorial(2 * k) / (k * TWO_PI ** (2 * k))
               * (A_CONST * riemann_zeta(2.0 * k) - riemann_zeta_deriv(2.0 * k)))
    s2 = 0.0
    for k in range(1, n // 2 + 1):
        s2 += ((-1) ** k * math.comb(n + 1, 2 * k) * math.factorial(2 * k) / (2.0 * TWO_PI ** (2 * k))
               * riemann_zeta(2.0 * k + 1.0))
    return (s1 - s2 + LN_SQRT_2PI) / (n + 1)


_add(id="loggamma1", family="loggamma", anchor="loggamma1: power moments of ln Gamma(q)",
     params=[integer("n", 4, 1, 8)],
     lhs=lambda p: _lngamma_int(lambda q, n=p["n"]: q ** n),
     rhs=_loggamma1_rhs)

_LG_MOMENTS = {
    1: lambda: riemann_zeta_deriv(2.0) / (2 * PI2) + LN_SQRT_2PI / 3.0 - GAMMA_E / 12.0,
    2: lambda: (riemann_zeta_deriv(2.0) / (2 * PI2) + riemann_zeta(3.0) / (4 * PI2)
                + LN_SQRT_2PI / 6.0 - GAMMA_E / 12.0),
    3: lambda: (riemann_zeta_deriv(2.0) / (2 * PI2) + 3.0 * riemann_zeta(3.0) / (8 * PI2)
                - 3.0 * riemann_zeta_deriv(4.0) / (4 * PI2 * PI2) + LN_SQRT_2PI / 10.0 - 3.0 * GAMMA_E / 40.0),
}
for _k, _v in _LG_MOMENTS.items():
    _add(id=f"loggamma1_q{_k}", family="loggamma",
         anchor=f"loggamma1: the q^{_k} moment of ln Gamma(q) written out",
         params=[], lhs=lambda p, k=_k: _lngamma_int(lambda q: q ** k),
         rhs=lambda p, v=_v: v())

_add(id="nice", family="loggamma", anchor="nice: the integral of ln Gamma(q) is ln sqrt(2 pi)",
     params=[], lhs=lambda p: _lngamma_int(lambda q: 1.0), rhs=lambda p: LN_SQRT_2PI)

_add(id="gosper1", family="loggamma", anchor="gosper1: ln Gamma(q + 1) over [0, 1/2]",
     params=[],
     lhs=lambda p: Integral(lambda q: math.lgamma(q + 1.0), 0.0, 0.5),
     rhs=lambda p: (GAMMA_E / 8.0 + 0.75 * LN_SQRT_2PI - 13.0 * LN2 / 24.0
                    - 3.0 * riemann_zeta_deriv(2.0) / (4.0 * PI2) - 0.5))

_add(id="gosper2", family="loggamma", anchor="gosper2: ln Gamma(q + 1) over [0, 1/4], involving Catalan's G",
     params=[],
     lhs=lambda p: Integral(lambda q: math.lgamma(q + 1.0), 0.0, 0.25),
     rhs=lambda p: (3.0 * GAMMA_E / 32.0 + 7.0 * LN_SQRT_2PI / 16.0 - LN2 / 2.0
                    - 9.0 * riemann_zeta_deriv(2.0) / (16.0 * PI2) + CATALAN / (4.0 * math.pi) - 0.25))

_add(id="logsum", family="loggamma", anchor="logsum: reflection formula for ln Gamma",
     params=[real("q", 0.3, 0.01, 0.99)], kind="series",
     lhs=lambda p: Value(math.lgamma(p["q"]) + math.lgamma(1.0 - p["q"])),
     rhs=lambda p: math.log(math.pi) - ln_sin_pi(p["q"]), default_tol=1e-13)


# ---------------------------------------------------------------------------
# zderiv
# ---------------------------------------------------------------------------

def _derivmain_rhs(p):
    z, w = p["z"], p["zp"]
    s = 2.0 - z - w
    om = 0.5 * math.pi * (z - w)
    zs = riemann_zeta(s)
    base = -2.0 * math.gamma(1.0 - z) * math.gamma(1.0 - w) / TWO_PI ** s * zs * math.cos(om)
    return base * (riemann_zeta_deriv(s) / zs + 0.5 * math.pi * math.tan(om)
                   - 2.0 * LN_SQRT_2PI + digamma(1.0 - z))


_add(id="derivmain", family="zderiv", anchor="derivmain: transform of zeta(z', q) differentiated in z",
     params=[real("z", -0.6, -3.0, -0.05), real("zp", -1.4, -3.0, -0.05)],
     lhs=lambda p: Integral(lambda q, z=p["z"], w=p["zp"]: hurwitz_zeta_zderiv(z, q) * hurwitz_zeta(w, q)),
     rhs=_derivmain_rhs,
     constraint=lambda p: None if p["z"] < 0 and p["zp"] < 0 else "z and z' must be negative",
     loci=lambda p: abs(math.cos(0.5 * math.pi * (p["z"] - p["zp"]))))

_add(id="loggamma0", family="zderiv", anchor="loggamma0: d/dz zeta(z, q) at z = 0 is ln Gamma(q) - ln sqrt(2 pi)",
     params=[real("q", 0.7, 0.05, 4.0)], kind="series",
     lhs=lambda p: Value(hurwitz_zeta_zderiv(0.0, p["q"])),
     rhs=lambda p: math.lgamma(p["q"]) - LN_SQRT_2PI, default_tol=1e-12)


def _poch_poly(k):
    # coefficients in z of (1 - z)_k, exact
    coeffs = [Fraction(1)]
    for j in range(k):
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i] += c * (1 + j)
            nxt[i + 1] -= c
        coeffs = nxt
    return coeffs


_add(id="pochderiv", family="zderiv", anchor="pochderiv: d/dz (1 - z)_k at z = 0 is -k! H_k",
     params=[integer("k", 5, 1, 12)], kind="exact",
     lhs=lambda p: _poch_poly(p["k"])[1],
     rhs=lambda p: -math.factorial(p["k"]) * harmonic(p["k"]))

_add(id="riemann3", family="zderiv", anchor="Riemann3: logarithmic derivatives of zeta at 1 - 2k and 2k",
     params=[integer("k", 2, 1, 6)], kind="series",
     lhs=lambda p: Value(riemann_zeta_deriv(1.0 - 2 * p["k"]) / riemann_zeta(1.0 - 2 * p["k"])
                         + riemann_zeta_deriv(2.0 * p["k"]) / riemann_zeta(2.0 * p["k"])),
     rhs=lambda p: 2.0 * LN_SQRT_2PI + GAMMA_E - float(harmonic(2 * p["k"] - 1)), default_tol=1e-12)

_add(id="loggammasquared", family="zderiv", anchor="loggammasquared: integral of ln^2 Gamma(q)",
     params=[],
     lhs=lambda p: Integral(lambda q: math.lgamma(q) ** 2, hint=LOG_LEFT),
     rhs=lambda p: (GAMMA_E ** 2 / 12.0 + PI2 / 48.0 + GAMMA_E * LN_SQRT_2PI / 3.0
                    + 4.0 / 3.0 * LN_SQRT_2PI ** 2
                    - (GAMMA_E + 2.0 * LN_SQRT_2PI) * riemann_zeta_deriv(2.0) / PI2
                    + riemann_zeta_deriv(2.0, 2) / (2.0 * PI2)),
     default_tol=1e-8)

_add(id="logslogg", family="zderiv", anchor="logslogg: integral of ln sin(pi q) ln Gamma(q)",
     params=[],
     lhs=lambda p: Integral(lambda q: ln_sin_pi(q) * math.lgamma(q), hint=LOG_BOTH),
     rhs=lambda p: -LN2 * LN_SQRT_2PI - PI2 / 24.0, default_tol=1e-8)

_add(id="zetaprimeofone", family="zderiv", anchor="zetaprimeofone: zeta'(-1) through zeta'(2)",
     params=[], kind="series",
     lhs=lambda p: Value(riemann_zeta_deriv(-1.0)),
     rhs=lambda p: riemann_zeta_deriv(2.0) / (2.0 * PI2) - (2.0 * LN_SQRT_2PI + GAMMA_E - 1.0) / 12.0,
     default_tol=1e-12)


# ---------------------------------------------------------------------------
# polygamma
# ---------------------------------------------------------------------------

_add(id="poly_hurwitz", family="polygamma", anchor="poly-hurwitz: polygamma as a Hurwitz zeta value",
     params=[integer("m", 2, 1, 6), real("q", 0.6, 0.05, 5.0)], kind="series",
     lhs=lambda p: Value(polygamma(p["m"], p["q"])),
     rhs=lambda p: (-1) ** (p["m"] + 1) * math.factorial(p["m"]) * hurwitz_zeta(p["m"] + 1.0, p["q"]),
     default_tol=1e-12)


def _psi_limit(q, h=1e-3):
    """lim_{z -> 1} [1/(z - 1) - zeta(z, q)] from symmetric differences, Richardson in h^2."""
    def sym(hh):
        return 0.5 * ((1.0 / hh - hurwitz_zeta(1.0 + hh, q)) + (-1.0 / hh - hurwitz_zeta(1.0 - hh, q)))
    a, b, c = sym(h), sym(2.0 * h), sym(4.0 * h)
    r1, r2 = (4.0 * a - b) / 3.0, (4.0 * b - c) / 3.0
    # r1 - r2 is 15x the h^4 remainder of r1; 2e-13 / h covers the ~1e-13 relative
    # accuracy of zeta(1 +- h, q) ~ 1/h lost in the cancellation against 1/h
    return Value(r1, abs(r1 - r2) / 15.0 + 2e-13 / h)


_add(id="psi_hurwitz", family="polygamma", anchor="psi-hurwitz: digamma as the finite part of zeta(z, q) at z = 1",
     params=[real("q", 0.45, 0.05, 5.0)], kind="series",
     lhs=lambda p: _psi_limit(p["q"]),
     rhs=lambda p: digamma(p["q"]), default_tol=1e-9)


def _mompolys_lhs(p):
    n, m = p["n"], p["m"]
    # psi^(m)(q) = (-1)^(m+1) m! q^-(m+1) + psi^(m)(q + 1); the first piece integrates exactly
    singular = (-1) ** (m + 1) * math.factorial(m) / (n - m)
    return [Value(singular), Integral(lambda q: q ** n * polygamma(m, q + 1.0))]


def _mompolys_rhs(p):
    n, m = p["n"], p["m"]
    s1 = 0.0
    for k in range(m - 1):
        s1 += math.gamma(m - k) * riemann_zeta(float(m - k)) / math.factorial(n - k)
    s2 = 0.0
    for k in range(n - m):
        s2 += (-1) ** k * math.comb(n - m, k) * (float(harmonic(k)) * riemann_zeta(-float(k))
                                                  + riemann_zeta_deriv(-float(k)))
    return ((-1) ** m * math.factorial(n) / math.factorial(n - m)
            * (GAMMA_E / (n - m + 1) + math.factorial(n - m) * s1 + s2))


_add(id="mompolys", family="polygamma", anchor="mompolys: power moments of polygamma functions",
     params=[integer("n", 3, 2, 8), integer("m", 1, 1, 4)],
     lhs=_mompolys_lhs, rhs=_mompolys_rhs, default_tol=1e-9,
     constraint=lambda p: None if p["n"] > p["m"] else "need n > m")

_add(id="ident1", family="polygamma", anchor="ident1: alternating binomial sum of zeta at non-positive integers",
     params=[integer("j", 4, 0, 12)], kind="exact",
     lhs=lambda p: sum((Fraction((-1) ** r * math.comb(p["j"] + 1, r)) * zeta_nonpositive_exact(r)
                        for r in range(p["j"] + 1)), Fraction(0)),
     rhs=lambda p: Fraction(-1, p["j"] + 2))


def _momdigamma_lhs(p):
    n = p["n"]
    # psi(q) = -1/q + psi(q + 1)
    return [Value(-1.0 / n), Integral(lambda q: q ** n * digamma(q + 1.0))]


def _momdigamma_rhs(p):
    n = p["n"]
    s = riemann_zeta_deriv(0.0)
    for k in range(1, n):
        s += (-1) ** k * math.comb(n, k) * (float(harmonic(k)) * riemann_zeta(-float(k))
                                            + riemann_zeta_deriv(-float(k)))
    return s


_add(id="momdigamma", family="polygamma", anchor="momdigamma: power moments of the digamma function",
     params=[integer("n", 2, 1, 8)],
     lhs=_momdigamma_lhs, rhs=_momdigamma_rhs, default_tol=1e-9)
