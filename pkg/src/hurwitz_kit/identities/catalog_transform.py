"""Hurwitz transforms of trigonometric functions, Bernoulli polynomials,
powers, exponentials and of zeta itself."""
import cmath
from fractions import Fraction
import math

from ..hurwitz import (F_transcendental, hurwitz_zeta, hurwitz_zeta_hermite,
                       hurwitz_zeta_zderiv)
from ..specfun import (_cospi, _sinpi, bernoulli_number, bernoulli_poly, beta_function,
                       gamma, pochhammer, rgamma, riemann_zeta)
from ._core import Identity, Integral, Value, integer, real
from .helpers import (LN_SQRT_2PI, TWO_PI, alg_left, dist_even, dist_int, dist_odd,
                      pref, transform_of_trig_poly, trig_poly, zeta_fn)

IDENTITIES = []


def _add(**kw):
    IDENTITIES.append(Identity(**kw))


def _neg(name="z", default=-1.5, low=-4.0, high=-0.05):
    return real(name, default, low, high)


def _need_negative(*names):
    def check(p):
        for n in names:
            if p[n] >= 0:
                return f"{n} must be negative, got {p[n]}"
        return None
    return check


# ---------------------------------------------------------------------------
# fourier
# ---------------------------------------------------------------------------

def _fou1_rhs(p):
    z, k = p["z"], p["k"]
    return TWO_PI ** z * k ** (z - 1.0) * rgamma(z) / (4.0 * _sinpi(z / 2.0))


def _fou2_rhs(p):
    z, k = p["z"], p["k"]
    return TWO_PI ** z * k ** (z - 1.0) * rgamma(z) / (4.0 * _cospi(z / 2.0))


_add(id="fou1", family="fourier", anchor="fou1: sine Fourier coefficients of zeta(z, q)",
     params=[_neg(default=-1.5), integer("k", 2, 1, 6)],
     lhs=lambda p: Integral(lambda q, z=p["z"], k=p["k"]: math.sin(TWO_PI * k * q) * hurwitz_zeta(z, q)),
     rhs=_fou1_rhs, constraint=_need_negative("z"), loci=lambda p: dist_even(p["z"]))

_add(id="fou2", family="fourier", anchor="fou2: cosine Fourier coefficients of zeta(z, q)",
     params=[_neg(default=-0.5), integer("k", 1, 1, 6)],
     lhs=lambda p: Integral(lambda q, z=p["z"], k=p["k"]: math.cos(TWO_PI * k * q) * hurwitz_zeta(z, q)),
     rhs=_fou2_rhs, constraint=_need_negative("z"), loci=lambda p: dist_odd(p["z"]))

_add(id="firstfou", family="fourier",
     anchor="firstfou: first sine coefficient, continued to 1 < z < 2",
     params=[real("z", 1.5, 1.1, 1.9)],
     lhs=lambda p: Integral(lambda q, z=p["z"]: math.sin(TWO_PI * q) * hurwitz_zeta(z, q),
                            hint=alg_left(p["z"] - 1.0)),
     rhs=lambda p: _fou1_rhs({"z": p["z"], "k": 1}),
     constraint=lambda p: None if 1.0 < p["z"] < 2.0 else "need 1 < z < 2",
     default_tol=1e-9)

_MAIN_A = (0.3, -0.7, 0.2, 0.0, 0.5)
_MAIN_B = (1.0, 0.5, -0.25, 0.1, 0.0)
_main_f = trig_poly(_MAIN_A, _MAIN_B)

_add(id="mainint", family="fourier",
     anchor="mainint: transform of a trigonometric series as a Dirichlet series in its coefficients",
     params=[_neg(default=-1.2)],
     lhs=lambda p: Integral(lambda q, z=p["z"]: _main_f(q) * hurwitz_zeta(z, q)),
     rhs=lambda p: transform_of_trig_poly(p["z"], _MAIN_A, _MAIN_B),
     constraint=_need_negative("z"))

_add(id="mainint2", family="fourier",
     anchor="mainint2: the same transform against zeta(z, 1 - q)",
     params=[_neg(default=-2.3)],
     lhs=lambda p: Integral(lambda q, z=p["z"]: _main_f(q) * hurwitz_zeta(z, 1.0 - q)),
     rhs=lambda p: transform_of_trig_poly(p["z"], _MAIN_A, _MAIN_B, reflected=True),
     constraint=_need_negative("z"))

_add(id="vanishing", family="fourier", anchor="vanishing: zeta(z, q) integrates to zero for z < 0",
     params=[_neg(default=-3.7, low=-6.0)],
     lhs=lambda p: Integral(zeta_fn(p["z"])),
     rhs=lambda p: 0.0, constraint=_need_negative("z"))


# ---------------------------------------------------------------------------
# zeta_zeta
# ---------------------------------------------------------------------------

def _zz_sym(p):
    z, w = p["z"], p["zp"]
    return (2.0 * gamma(1.0 - z) * gamma(1.0 - w) / TWO_PI ** (2.0 - z - w)
            * riemann_zeta(2.0 - z - w) * _cospi((z - w) / 2.0))


def _zz_refl(p):
    z, w = p["z"], p["zp"]
    return (-2.0 * gamma(1.0 - z) * gamma(1.0 - w) / TWO_PI ** (2.0 - z - w)
            * riemann_zeta(2.0 - z - w) * _cospi((z + w) / 2.0))


def _zz_params(z=-0.5, zp=-1.3):
    return [real("z", z, -3.0, -0.05), real("zp", zp, -3.0, -0.05)]


_zz_neg = _need_negative("z", "zp")

_add(id="zzpri1", family="zeta_zeta", anchor="zzpri1: transform of zeta(z', q), Gamma-cosine form",
     params=_zz_params(),
     lhs=lambda p: Integral(lambda q, z=p["z"], w=p["zp"]: hurwitz_zeta(z, q) * hurwitz_zeta(w, q)),
     rhs=_zz_sym, constraint=_zz_neg)

_add(id="zprima", family="zeta_zeta", anchor="zprima: transform of zeta(z', q), beta-function form",
     params=_zz_params(-0.4, -1.1),
     lhs=lambda p: Integral(lambda q, z=p["z"], w=p["zp"]: hurwitz_zeta(z, q) * hurwitz_zeta(w, q)),
     rhs=lambda p: (-riemann_zeta(p["z"] + p["zp"] - 1.0) * beta_function(1.0 - p["z"], 1.0 - p["zp"])
                    * _cospi((p["z"] - p["zp"]) / 2.0) / _cospi((p["z"] + p["zp"]) / 2.0)),
     constraint=_zz_neg, loci=lambda p: dist_odd(p["z"] + p["zp"]))

_add(id="zzpri1refl", family="zeta_zeta", anchor="zzpri1refl: transform of zeta(z', 1 - q), Gamma form",
     params=_zz_params(-0.7, -1.9),
     lhs=lambda p: Integral(lambda q, z=p["z"], w=p["zp"]: hurwitz_zeta(z, q) * hurwitz_zeta(w, 1.0 - q)),
     rhs=_zz_refl, constraint=_zz_neg)

_add(id="zprimarefl", family="zeta_zeta", anchor="zprimarefl: transform of zeta(z', 1 - q), beta form",
     params=_zz_params(-0.6, -2.2),
     lhs=lambda p: Integral(lambda q, z=p["z"], w=p["zp"]: hurwitz_zeta(z, q) * hurwitz_zeta(w, 1.0 - q)),
     rhs=lambda p: riemann_zeta(p["z"] + p["zp"] - 1.0) * beta_function(1.0 - p["z"], 1.0 - p["zp"]),
     constraint=_zz_neg)


def _zetasq_rhs(p):
    z = p["z"]
    return 2.0 * gamma(1.0 - z) ** 2 * TWO_PI ** (2.0 * z - 2.0) * riemann_zeta(2.0 - 2.0 * z)


_add(id="zetasq", family="zeta_zeta", anchor="zetasq: mean square of zeta(z, q) over a period",
     params=[real("z", -1.2, -3.0, -0.05)],
     lhs=lambda p: Integral(lambda q, z=p["z"]: hurwitz_zeta(z, q) ** 2),
     rhs=_zetasq_rhs, constraint=_need_negative("z"))

_add(id="zetasq2", family="zeta_zeta", anchor="zetasq2: mean square at z = -1/2 equals zeta(3)/(16 pi^2)",
     params=[],
     lhs=lambda p: Integral(lambda q: hurwitz_zeta(-0.5, q) ** 2),
     rhs=lambda p: riemann_zeta(3.0) / (16.0 * math.pi ** 2), default_tol=1e-8)

_add(id="zetasqrefl", family="zeta_zeta", anchor="zetasqrefl: integral of zeta(z, q) zeta(z, 1 - q)",
     params=[real("z", -0.8, -3.0, -0.05)],
     lhs=lambda p: Integral(lambda q, z=p["z"]: hurwitz_zeta(z, q) * hurwitz_zeta(z, 1.0 - q)),
     rhs=lambda p: -_cospi(p["z"]) * _zetasq_rhs(p), constraint=_need_negative("z"))


def _zetahalf_rhs(p):
    m = p["m"]
    c = math.factorial(2 * m) / (4.0 ** m * math.factorial(m))
    return c * c * riemann_zeta(2.0 * m + 1.0) / TWO_PI ** (2 * m)


_add(id="zetahalf", family="zeta_zeta", anchor="zetahalf: mean square at half-integers z = 1/2 - m",
     params=[integer("m", 2, 1, 4)],
     lhs=lambda p: Integral(lambda q, z=0.5 - p["m"]: hurwitz_zeta(z, q) ** 2),
     rhs=_zetahalf_rhs)


# ---------------------------------------------------------------------------
# bernoulli
# ---------------------------------------------------------------------------

def _bern(m):
    return lambda q: bernoulli_poly(m, q)


_add(id="intber1", family="bernoulli", anchor="intber1: transform of the Bernoulli polynomial B_m",
     params=[_neg(default=-0.7), integer("m", 3, 1, 8)],
     lhs=lambda p: Integral(lambda q, z=p["z"], m=p["m"]: bernoulli_poly(m, q) * hurwitz_zeta(z, q)),
     rhs=lambda p: ((-1) ** (p["m"] + 1) * math.factorial(p["m"]) * riemann_zeta(p["z"] - p["m"])
                    / pochhammer(1.0 - p["z"], p["m"])),
     constraint=_need_negative("z"))


def _orth_rhs(p):
    m, n = p["m"], p["n"]
    if (m + n) % 2:
        return 0.0
    return float((-1) ** (m + 1) * bernoulli_number(m + n) / math.comb(m + n, m))


_add(id="orthogonality", family="bernoulli", anchor="orthogonality: integral of B_m B_n over a period",
     params=[integer("m", 2, 1, 8), integer("n", 4, 1, 8)],
     lhs=lambda p: Integral(lambda q, m=p["m"], n=p["n"]: bernoulli_poly(m, q) * bernoulli_poly(n, q)),
     rhs=_orth_rhs)

_add(id="bsq", family="bernoulli", anchor="bsq: mean square of B_m",
     params=[integer("m", 3, 1, 8)],
     lhs=lambda p: Integral(lambda q, m=p["m"]: bernoulli_poly(m, q) ** 2),
     rhs=lambda p: float(abs(bernoulli_number(2 * p["m"])) / math.comb(2 * p["m"], p["m"])))


def _mom_rhs(p):
    z, n = p["z"], p["n"]
    s = 0.0
    for j in range(1, n + 1):
        s += riemann_zeta(z - j) / (pochhammer(z - j, j) * math.factorial(n - j + 1))
    return -math.factorial(n) * s


def _mom_refl_rhs(p):
    z, n = p["z"], p["n"]
    s = 0.0
    for j in range(1, n + 1):
        s += riemann_zeta(z - j) / (pochhammer(1.0 - z, j) * math.factorial(n - j + 1))
    return -math.factorial(n) * s


_add(id="mom", family="bernoulli", anchor="mom: power moments of zeta(z, q)",
     params=[_neg(default=-0.5), integer("n", 3, 1, 6)],
     lhs=lambda p: Integral(lambda q, z=p["z"], n=p["n"]: q ** n * hurwitz_zeta(z, q)),
     rhs=_mom_rhs, constraint=_need_negative("z"))

_add(id="mom_refl", family="bernoulli", anchor="mom-refl: power moments of zeta(z, 1 - q)",
     params=[_neg(default=-1.3), integer("n", 2, 1, 6)],
     lhs=lambda p: Integral(lambda q, z=p["z"], n=p["n"]: q ** n * hurwitz_zeta(z, 1.0 - q)),
     rhs=_mom_refl_rhs, constraint=_need_negative("z"))


def _qbern1(p):
    m, n = p["m"], p["n"]
    s = Fraction(0)
    for j in range(1, n + 1):
        s += Fraction((-1) ** (j + 1) * math.comb(n + 1, j), math.comb(m + j, j)) * bernoulli_number(m + j)
    return float(s / (n + 1))


def _qbern2(p):
    m, n = p["m"], p["n"]
    s = Fraction(0)
    for j in range(1, n + 1):
        s += (-1) ** (j + 1) * math.comb(n + 1 + m, n + 1 - j) * bernoulli_number(m + j)
    return float(s * Fraction(math.factorial(n) * math.factorial(m), math.factorial(n + 1 + m)))


_add(id="qbernoulli", family="bernoulli", anchor="qbernoulli: power moments of B_m, binomial-ratio form",
     params=[integer("m", 3, 1, 8), integer("n", 4, 1, 8)],
     lhs=lambda p: Integral(lambda q, m=p["m"], n=p["n"]: q ** n * bernoulli_poly(m, q)),
     rhs=_qbern1)

_add(id="qbernoulli2", family="bernoulli", anchor="qbernoulli: power moments of B_m, factorial form",
     params=[integer("m", 4, 1, 8), integer("n", 3, 1, 8)],
     lhs=lambda p: Integral(lambda q, m=p["m"], n=p["n"]: q ** n * bernoulli_poly(m, q)),
     rhs=_qbern2)


def _poly_coeffs_bernoulli_sum(n, sign):
    # coefficients (ascending powers) of 1/(n+1) sum_j sign^j C(n+1, j) B_j(q)
    out = [Fraction(0)] * (n + 1)
    for j in range(n + 1):
        w = Fraction(sign ** j * math.comb(n + 1, j), n + 1)
        for k in range(j + 1):
            # B_j(q) = sum_k C(j, k) B_{j-k} q^k
            out[k] += w * math.comb(j, k) * bernoulli_number(j - k)
    return tuple(out)


def _power_coeffs(n, reflected):
    if not reflected:
        return tuple(Fraction(int(k == n)) for k in range(n + 1))
    return tuple(Fraction((-1) ** k * math.comb(n, k)) for k in range(n + 1))


_add(id="polyinv", family="bernoulli", anchor="polyinv: q^n expanded in Bernoulli polynomials",
     params=[integer("n", 5, 0, 12)], kind="exact",
     lhs=lambda p: _power_coeffs(p["n"], False),
     rhs=lambda p: _poly_coeffs_bernoulli_sum(p["n"], 1))

_add(id="polyinv1", family="bernoulli", anchor="polyinv1: (1 - q)^n expanded in Bernoulli polynomials",
     params=[integer("n", 5, 0, 12)], kind="exact",
     lhs=lambda p: _power_coeffs(p["n"], True),
     rhs=lambda p: _poly_coeffs_bernoulli_sum(p["n"], -1))


def _gener_lhs(p):
    q, t = p["q"], p["t"]
    s = 0.0
    tm = 1.0
    for m in range(61):
        s += bernoulli_poly(m, q) * tm
        tm *= t / (m + 1)
    last = abs(bernoulli_poly(60, q) * t ** 60 / math.factorial(60))
    return Value(s, last)


_add(id="gener", family="bernoulli", anchor="gener: exponential generating function of B_m(q)",
     params=[real("q", 0.3, 0.0, 1.0), real("t", 1.7, 0.1, 3.0)], kind="series",
     lhs=_gener_lhs,
     rhs=lambda p: p["t"] * math.exp(p["q"] * p["t"]) / math.expm1(p["t"]))

_add(id="berzeta", family="bernoulli", anchor="berzeta: zeta at even integers via Bernoulli numbers",
     params=[integer("n", 3, 1, 10)], kind="series",
     lhs=lambda p: Value(riemann_zeta(2.0 * p["n"])),
     rhs=lambda p: float((-1) ** (p["n"] + 1) * bernoulli_number(2 * p["n"]) / (2 * math.factorial(2 * p["n"])))
     * TWO_PI ** (2 * p["n"]), default_tol=1e-12)

_add(id="berzeta1", family="bernoulli", anchor="berzeta1: zeta at negative integers via Bernoulli numbers",
     params=[integer("n", 4, 2, 10)], kind="series",
     lhs=lambda p: Value(hurwitz_zeta_hermite(1.0 - p["n"], 1.0)),
     rhs=lambda p: float((-1) ** (p["n"] + 1) * bernoulli_number(p["n"]) / p["n"]))

_add(id="berzeta2", family="bernoulli", anchor="berzeta2: zeta' at negative even integers",
     params=[integer("n", 2, 1, 6)], kind="series",
     lhs=lambda p: Value(hurwitz_zeta_zderiv(-2.0 * p["n"], 1.0)),
     rhs=lambda p: ((-1) ** p["n"] * math.factorial(2 * p["n"]) * riemann_zeta(2.0 * p["n"] + 1.0)
                    / (2.0 * TWO_PI ** (2 * p["n"]))))

_add(id="berzeta3", family="bernoulli", anchor="berzeta3: zeta'(0) = -ln sqrt(2 pi)",
     params=[], kind="series",
     lhs=lambda p: Value(hurwitz_zeta_zderiv(0.0, 1.0)),
     rhs=lambda p: -LN_SQRT_2PI, default_tol=1e-12)


# ---------------------------------------------------------------------------
# exponential
# ---------------------------------------------------------------------------

def _exponen_rhs(p):
    z, t = p["z"], p["t"]
    F = complex(F_transcendental(complex(0.0, t), z))
    return (2.0 * -math.expm1(TWO_PI * t) * pref(z) / TWO_PI
            * (cmath.exp(0.5j * math.pi * z) * F).real)


_add(id="exponen", family="exponential", anchor="exponen: transform of exp(2 pi t q) through F(x, z)",
     params=[_neg(default=-1.4, low=-3.0), real("t", 0.4, 0.05, 0.9)],
     lhs=lambda p: Integral(lambda q, z=p["z"], t=p["t"]: math.exp(TWO_PI * t * q) * hurwitz_zeta(z, q)),
     rhs=_exponen_rhs, constraint=_need_negative("z"))


def _expber_rhs(p):
    m, t = p["m"], p["t"]
    s = 0.0
    for r in range(1, m // 2 + 1):
        s += (-1) ** r * riemann_zeta(2.0 * r) * t ** (2 * r)
    bracket = 1.0 - math.pi * t / math.tanh(math.pi * t) - 2.0 * s
    return (-1) ** m * math.expm1(TWO_PI * t) * math.factorial(m) / (TWO_PI * t) ** (m + 1) * bracket


_add(id="expber", family="exponential", anchor="expber: integral of exp(2 pi t q) B_m(q)",
     params=[integer("m", 3, 1, 8), real("t", 0.6, 0.2, 0.9)],
     lhs=lambda p: Integral(lambda q, m=p["m"], t=p["t"]: math.exp(TWO_PI * t * q) * bernoulli_poly(m, q)),
     rhs=_expber_rhs, default_tol=1e-9)


def _coth_lhs(p):
    x = p["x"]
    s = 0.0
    r = 1
    x2 = x * x
    xr = x2
    while True:
        term = (-1) ** r * riemann_zeta(2.0 * r) * xr
        s += term
        if abs(term) < 1e-18 or r > 2000:
            break
        r += 1
        xr *= x2
    return Value(1.0 / (math.pi * x) - 2.0 / (math.pi * x) * s, abs(term))


_add(id="coth", family="exponential", anchor="coth: Taylor series of coth(pi x) in zeta(2r)",
     params=[real("x", 0.5, 0.05, 0.9)], kind="series",
     lhs=_coth_lhs, rhs=lambda p: 1.0 / math.tanh(math.pi * p["x"]), default_tol=1e-12)
