"""Integrals over [0, 1/2], powers of sine and cosine, and the continuation
to positive z through zeta_*(z, q) = zeta(z, q + 1)."""
from fractions import Fraction
import math
from math import comb

from ..hurwitz import hurwitz_zeta, hurwitz_zeta_star, hurwitz_zeta_zderiv
from ..specfun import (_cospi, _sinpi, bernoulli_number, bernoulli_poly, gamma, pochhammer,
                       riemann_zeta, riemann_zeta_deriv)
from ._core import Identity, Integral, Value, integer, real
from .helpers import (LN2, LN_SQRT_2PI, LOG_LEFT, TWO_PI, alg_left, kogan_cos_even,
                      kogan_cos_odd, kogan_sin_even, kogan_sin_odd, pref, sin_pi_unit)

IDENTITIES = []


def _add(**kw):
    IDENTITIES.append(Identity(**kw))


def _neg(name="z", default=-1.5, low=-3.0, high=-0.05):
    return real(name, default, low, high)


def _need_negative(p):
    return None if p["z"] < 0 else f"z must be negative, got {p['z']}"


def _fact(n):
    return float(math.factorial(n))


def _bpoly(m):
    return lambda q: float(bernoulli_poly(m, q))


def _half(f, hint=None):
    return Integral(f, 0.0, 0.5) if hint is None else Integral(f, 0.0, 0.5, hint=hint)


def _dist_to_set(z, points):
    return min((abs(z - j) for j in points), default=math.inf)


# ---------------------------------------------------------------------------
# half_interval
# ---------------------------------------------------------------------------

def _half0_rhs(p):
    z = p["z"]
    return (4.0 * gamma(1.0 - z) / TWO_PI ** (2.0 - z) * _cospi(z / 2.0)
            * (1.0 - 2.0 ** (z - 2.0)) * riemann_zeta(2.0 - z))


def _half01_rhs(p):
    z = p["z"]
    return 2.0 * (2.0 ** (z - 2.0) - 1.0) / (1.0 - z) * riemann_zeta(z - 1.0)


_add(id="half0", family="half_interval", anchor="half0: zeta(z, q) over [0, 1/2], Gamma-cosine form",
     params=[_neg(default=-1.3)],
     lhs=lambda p: _half(lambda q, z=p["z"]: hurwitz_zeta(z, q)), rhs=_half0_rhs,
     constraint=_need_negative)

_add(id="half01", family="half_interval", anchor="half01: zeta(z, q) over [0, 1/2] via zeta(z - 1)",
     params=[_neg(default=-2.2)],
     lhs=lambda p: _half(lambda q, z=p["z"]: hurwitz_zeta(z, q)), rhs=_half01_rhs,
     constraint=_need_negative)


def _beronehalf_rhs(p):
    m = p["m"]
    return float(-(2 ** (m + 1) - 1) * bernoulli_number(m + 1) / (Fraction(2) ** m * (m + 1)))


_add(id="beronehalf", family="half_interval", anchor="beronehalf: B_m over [0, 1/2]",
     params=[integer("m", 3, 0, 12)],
     lhs=lambda p: _half(_bpoly(p["m"])), rhs=_beronehalf_rhs, default_tol=1e-12,
     note="sign factor is -1 for every m; the (-1)^(m+1) form fails for odd m")


def _recul_lhs(p):
    z, n = p["z"], p["n"]
    # I(z, n) + n/(1 - z) I(z - 1, n - 1) equals the boundary term
    return [_half(lambda q: q ** n * hurwitz_zeta(z, q)),
            Integral(lambda q: q ** (n - 1) * hurwitz_zeta(z - 1.0, q), 0.0, 0.5, scale=n / (1.0 - z))]


_add(id="recul", family="half_interval", anchor="recul: recursion for the half-interval moments I(z, n)",
     params=[_neg(default=-1.5), integer("n", 3, 1, 6)],
     lhs=_recul_lhs,
     rhs=lambda p: ((2.0 ** (p["z"] - 1.0) - 1.0) / (2.0 ** p["n"] * (1.0 - p["z"]))
                    * riemann_zeta(p["z"] - 1.0)),
     constraint=_need_negative)


def _I1(p):
    z = p["z"]
    return (-(2.0 ** z - 2.0) * riemann_zeta(z - 1.0) / (4.0 * (z - 1.0))
            - (2.0 ** z - 8.0) * riemann_zeta(z - 2.0) / (4.0 * (z - 1.0) * (z - 2.0)))


def _I2(p):
    z = p["z"]
    return (-(2.0 ** z - 2.0) * riemann_zeta(z - 1.0) / (8.0 * (z - 1.0))
            - (2.0 ** z - 4.0) * riemann_zeta(z - 2.0) / (4.0 * (z - 1.0) * (z - 2.0))
            - (2.0 ** z - 16.0) * riemann_zeta(z - 3.0) / (4.0 * (z - 1.0) * (z - 2.0) * (z - 3.0)))


_add(id="half_I1", family="half_interval", anchor="recul applied once: I(z, 1) in closed form",
     params=[_neg(default=-0.8)],
     lhs=lambda p: _half(lambda q, z=p["z"]: q * hurwitz_zeta(z, q)), rhs=_I1,
     constraint=_need_negative)

_add(id="half_I2", family="half_interval", anchor="recul applied twice: I(z, 2) in closed form",
     params=[_neg(default=-1.9)],
     lhs=lambda p: _half(lambda q, z=p["z"]: q * q * hurwitz_zeta(z, q)), rhs=_I2,
     constraint=_need_negative)


def _halfmoments_rhs(p):
    z, n = p["z"], p["n"]
    s = sum((-1) ** j * (1.0 - 2.0 ** (z - j)) * riemann_zeta(z - j)
            / (_fact(n + 1 - j) * 2.0 ** (n + 1 - j) * pochhammer(1.0 - z, j)) for j in range(1, n + 2))
    return _fact(n) * s + (-1) ** (n + 1) * _fact(n) * riemann_zeta(z - n - 1.0) / pochhammer(1.0 - z, n + 1)


_add(id="halfmoments", family="half_interval",
     anchor="halfmomentsofzeta: q^n zeta(z, q) over [0, 1/2] as a finite zeta sum",
     params=[_neg(default=-1.1), integer("n", 2, 0, 6)],
     lhs=lambda p: _half(lambda q, z=p["z"], n=p["n"]: q ** n * hurwitz_zeta(z, q)),
     rhs=_halfmoments_rhs, constraint=_need_negative)


def _half_bernoulli_exact(p):
    n, m = p["n"], p["m"]
    # B_m(q) = sum_k C(m, k) B_k q^(m - k); integrate q^(n + m - k) over [0, 1/2]
    total = Fraction(0)
    for k in range(m + 1):
        e = n + m - k + 1
        total += comb(m, k) * bernoulli_number(k) * Fraction(1, 2 ** e * e)
    return total


def _half_bernoulli_rhs(p):
    n, m = p["n"], p["m"]
    N = n + m + 1
    bracket = bernoulli_number(N) + sum(
        comb(N, n + 1 - j) * (Fraction(1, 2 ** (n + 1 - j)) - Fraction(1, 2 ** (n + m))) * bernoulli_number(m + j)
        for j in range(1, n + 2))
    return (-1) ** m * Fraction(math.factorial(n) * math.factorial(m), math.factorial(N)) * bracket


_add(id="half_bernoulli_moment", family="half_interval",
     anchor="half Bernoulli moments: q^n B_m(q) over [0, 1/2] in Bernoulli numbers",
     params=[integer("m", 3, 1, 10), integer("n", 2, 1, 8)], kind="exact",
     lhs=_half_bernoulli_exact, rhs=_half_bernoulli_rhs,
     note="both sides in exact rational arithmetic; LHS integrates the Bernoulli polynomial term by term")

_ZP_MINUS1 = riemann_zeta_deriv(-1.0)

_add(id="gosper_route", family="half_interval",
     anchor="Gosper-proof route: ln Gamma(q + 1) over [0, 1/2] via zeta'(-1)",
     params=[],
     lhs=lambda p: _half(lambda q: math.lgamma(q + 1.0)),
     rhs=lambda p: -3.0 / 8.0 - 13.0 * LN2 / 24.0 + LN_SQRT_2PI / 2.0 - 1.5 * _ZP_MINUS1)

_add(id="gosper_route_dz", family="half_interval",
     anchor="Gosper-proof route: z-derivative at z = 0 of the half-interval integral",
     params=[],
     lhs=lambda p: _half(lambda q: hurwitz_zeta_zderiv(0.0, q), LOG_LEFT),
     rhs=lambda p: 1.0 / 8.0 - LN2 / 24.0 - 1.5 * _ZP_MINUS1)


# ---------------------------------------------------------------------------
# trig_power
# ---------------------------------------------------------------------------

def _sin2n(n):
    return lambda q: sin_pi_unit(q) ** (2 * n)


def _sin2n1(n):
    return lambda q: math.sin(TWO_PI * q) ** (2 * n + 1)


def _cos2n(n):
    return lambda q: math.cos(math.pi * q) ** (2 * n)


def _cos2n1(n):
    return lambda q: math.cos(TWO_PI * q) ** (2 * n + 1)


def _even_sum(n, s, alternating):
    return sum((-1 if alternating else 1) ** k / k ** s * comb(2 * n, n - k) for k in range(1, n + 1))


def _odd_sum(n, s, alternating):
    return sum((-1 if alternating else 1) ** k / (2 * k + 1.0) ** s * comb(2 * n + 1, n - k) for k in range(n + 1))


def _zeta_int(f):
    return lambda p: Integral(lambda q, g=f(p["n"]), z=p["z"]: g(q) * hurwitz_zeta(z, q))


_n_domain = integer("n", 2, 1, 6)

_add(id="sin2nzeta", family="trig_power", anchor="sin2nzeta: transform of sin^2n(pi q)",
     params=[_neg(default=-1.4), _n_domain], lhs=_zeta_int(_sin2n),
     rhs=lambda p: (pref(p["z"]) / 2.0 ** (2 * p["n"] - 1) * _sinpi(p["z"] / 2.0)
                    * _even_sum(p["n"], 1.0 - p["z"], True)),
     constraint=_need_negative)

_add(id="sin2n1zeta", family="trig_power", anchor="Kogan companion: transform of sin^(2n+1)(2 pi q)",
     params=[_neg(default=-0.9), integer("n", 1, 0, 6)], lhs=_zeta_int(_sin2n1),
     rhs=lambda p: (pref(p["z"]) / 2.0 ** (2 * p["n"]) * _cospi(p["z"] / 2.0)
                    * _odd_sum(p["n"], 1.0 - p["z"], True)),
     constraint=_need_negative)

_add(id="cos2nzeta", family="trig_power", anchor="Kogan companion: transform of cos^2n(pi q)",
     params=[_neg(default=-2.1), _n_domain], lhs=_zeta_int(_cos2n),
     rhs=lambda p: (pref(p["z"]) / 2.0 ** (2 * p["n"] - 1) * _sinpi(p["z"] / 2.0)
                    * _even_sum(p["n"], 1.0 - p["z"], False)),
     constraint=_need_negative)

_add(id="cos2n1zeta", family="trig_power", anchor="Kogan companion: transform of cos^(2n+1)(2 pi q)",
     params=[_neg(default=-0.4), integer("n", 1, 0, 6)], lhs=_zeta_int(_cos2n1),
     rhs=lambda p: (pref(p["z"]) / 2.0 ** (2 * p["n"]) * _sinpi(p["z"] / 2.0)
                    * _odd_sum(p["n"], 1.0 - p["z"], False)),
     constraint=_need_negative)


def _ber_trig(f, parity_nonzero, closed):
    """B_j against a trig power; zero unless j has the given parity."""
    def rhs(p):
        j, n = p["j"], p["n"]
        if j % 2 != parity_nonzero:
            return 0.0
        return closed(j // 2, n)

    def lhs(p):
        return Integral(lambda q, b=_bpoly(p["j"]), g=f(p["n"]): b(q) * g(q))
    return lhs, rhs


def _c_sin2n(m, n):
    return (-1) ** (m + 1) * _fact(2 * m) / (2.0 ** (2 * n - 1) * TWO_PI ** (2 * m)) * _even_sum(n, 2 * m, True)


def _c_sin2n1(m, n):
    return ((-1) ** (m + 1) * _fact(2 * m + 1) / (2.0 ** (2 * n) * TWO_PI ** (2 * m + 1))
            * _odd_sum(n, 2 * m + 1, True))


def _c_cos2n(m, n):
    return (-1) ** (m + 1) * _fact(2 * m) / (2.0 ** (2 * n - 1) * TWO_PI ** (2 * m)) * _even_sum(n, 2 * m, False)


def _c_cos2n1(m, n):
    return (-1) ** (m + 1) * _fact(2 * m) / (2.0 ** (2 * n) * TWO_PI ** (2 * m)) * _odd_sum(n, 2 * m, False)


_lhs, _rhs = _ber_trig(_sin2n, 0, _c_sin2n)
_add(id="ber_sin2n", family="trig_power", anchor="Bernoulli example: B_j against sin^2n(pi q)",
     params=[integer("j", 4, 0, 10), _n_domain], lhs=_lhs, rhs=_rhs,
     note="j = 0 reproduces Wallis' integral")

_lhs, _rhs = _ber_trig(_sin2n1, 1, _c_sin2n1)
_add(id="ber_sin2n1", family="trig_power", anchor="Bernoulli example: B_j against sin^(2n+1)(2 pi q)",
     params=[integer("j", 3, 0, 10), integer("n", 1, 0, 6)], lhs=_lhs, rhs=_rhs)

_lhs, _rhs = _ber_trig(_cos2n, 0, _c_cos2n)
_add(id="ber_cos2n", family="trig_power", anchor="Bernoulli example: B_j against cos^2n(pi q)",
     params=[integer("j", 2, 1, 10), _n_domain], lhs=_lhs, rhs=_rhs,
     note="j >= 1: at j = 0 the constant Fourier mode of cos^2n is not captured")

_lhs, _rhs = _ber_trig(_cos2n1, 0, _c_cos2n1)
_add(id="ber_cos2n1", family="trig_power", anchor="Bernoulli example: B_j against cos^(2n+1)(2 pi q)",
     params=[integer("j", 4, 1, 10), integer("n", 1, 0, 6)], lhs=_lhs, rhs=_rhs,
     note="j >= 1: at j = 0 the closed form gives -1 while the integral vanishes")

_add(id="sin2n_lngamma", family="trig_power", anchor="sin^2n(pi q) against ln Gamma(q)",
     params=[integer("n", 2, 1, 8)],
     lhs=lambda p: Integral(lambda q, g=_sin2n(p["n"]): g(q) * math.lgamma(q), hint=LOG_LEFT),
     rhs=lambda p: (_even_sum(p["n"], 1, True) / 2.0 ** (2 * p["n"] + 1)
                    + comb(2 * p["n"], p["n"]) / 4.0 ** p["n"] * LN_SQRT_2PI))

_add(id="wallis", family="trig_power", anchor="Wallis' integral of sin^2n(pi q)",
     params=[integer("n", 3, 0, 12)],
     lhs=lambda p: Integral(_sin2n(p["n"])),
     rhs=lambda p: comb(2 * p["n"], p["n"]) / 4.0 ** p["n"], default_tol=1e-12)


def _kogan(expansion, power):
    _add(id=f"kogan_{expansion.__name__[6:]}", family="trig_power",
         anchor=f"Kogan expansion of {power} as a finite Fourier sum",
         params=[integer("n", 3, 1, 10), real("x", 0.7, -3.0, 3.0)], kind="series",
         lhs=lambda p: Value(expansion(p["n"], p["x"])),
         rhs=lambda p, e=expansion: _POWERS[e.__name__](p["n"], p["x"]), default_tol=1e-12)


_POWERS = {
    "kogan_sin_even": lambda n, x: math.sin(x) ** (2 * n),
    "kogan_sin_odd": lambda n, x: math.sin(x) ** (2 * n + 1),
    "kogan_cos_even": lambda n, x: math.cos(x) ** (2 * n),
    "kogan_cos_odd": lambda n, x: math.cos(x) ** (2 * n + 1),
}

_kogan(kogan_sin_even, "sin^2n x")
_kogan(kogan_sin_odd, "sin^(2n+1) x")
_kogan(kogan_cos_even, "cos^2n x")
_kogan(kogan_cos_odd, "cos^(2n+1) x")


# ---------------------------------------------------------------------------
# positive_z
# ---------------------------------------------------------------------------

# Beyond this endpoint exponent a visible share of int_0^1 q^-alpha dq lies
# below the smallest double, so quadrature cannot certify the value.
MAX_ENDPOINT_EXPONENT = 0.9


def _exponent_too_large(alpha):
    if alpha > MAX_ENDPOINT_EXPONENT:
        return (f"endpoint singularity q^-{alpha:g} is beyond the quadrature limit "
                f"alpha <= {MAX_ENDPOINT_EXPONENT}")
    return None


def _intber1_constraint(p):
    m, z = p["m"], p["z"]
    softened = m % 2 == 1 and m >= 3
    limit = 2.0 if softened else 1.0
    if not 0.0 < z < limit:
        return f"need 0 < z < {limit:g} for m = {m}"
    return _exponent_too_large(z - 1.0 if softened else z)


def _power_zeta(z, n):
    """q^n zeta(z, q) = q^(n - z) + q^n zeta(z, q + 1); no overflow as q -> 0."""
    return lambda q: q ** (n - z) + q ** n * hurwitz_zeta_star(z, q)


def _intber1_pos_lhs(p):
    m, z = p["m"], p["z"]
    b = _bpoly(m)
    if m % 2 == 1 and m >= 3:
        # B_m(0) = 0 here, which softens the q^-z singularity by one power
        g = _power_zeta(z, 1)
        return Integral(lambda q: b(q) / q * g(q), hint=alg_left(z - 1.0))
    g = _power_zeta(z, 0)
    return Integral(lambda q: b(q) * g(q), hint=alg_left(z))


_add(id="intber1_pos", family="positive_z", anchor="intber1 continued to 0 < z < 1 (z < 2 for odd m >= 3)",
     params=[integer("m", 3, 1, 6), real("z", 1.4, 0.05, 1.95)],
     lhs=_intber1_pos_lhs,
     rhs=lambda p: (-1) ** (p["m"] + 1) * _fact(p["m"]) * riemann_zeta(p["z"] - p["m"]) / pochhammer(1.0 - p["z"], p["m"]),
     constraint=_intber1_constraint, loci=lambda p: abs(p["z"] - 1.0), default_tol=1e-9)

_add(id="zetasq_pos", family="positive_z", anchor="zetasq continued to 0 < z < 1/2",
     params=[real("z", 0.25, 0.05, 0.45)],
     lhs=lambda p: Integral(lambda q, g=_power_zeta(p["z"], 0): g(q) ** 2, hint=alg_left(2.0 * p["z"])),
     rhs=lambda p: 2.0 * gamma(1.0 - p["z"]) ** 2 * TWO_PI ** (2.0 * p["z"] - 2.0) * riemann_zeta(2.0 - 2.0 * p["z"]),
     constraint=lambda p: None if 0.0 < p["z"] < 0.5 else "need 0 < z < 1/2", default_tol=1e-9)


def _star(z):
    return lambda q: hurwitz_zeta_star(z, q)


_add(id="zetastaralone", family="positive_z", anchor="zetastaralone: zeta_*(z, q) integrates to 1/(z - 1)",
     params=[real("z", 2.5, -3.0, 6.0)],
     lhs=lambda p: Integral(_star(p["z"])), rhs=lambda p: 1.0 / (p["z"] - 1.0),
     loci=lambda p: abs(p["z"] - 1.0))


def _zetastar0_rhs(p):
    z, r = p["z"], p["r"]
    s = sum(pochhammer(z - 2 * r - 1.0, k) / pochhammer(1.0 - z, k + 1)
            * (riemann_zeta(z - k - 1.0) + riemann_zeta(z - 2 * r - 1.0 + k)) for k in range(2 * r + 1))
    return 1.0 / (2.0 * (1.0 + r - z)) - 0.5 * s


def _zetastar0_loci(p):
    return _dist_to_set(p["z"], range(1, 2 * p["r"] + 3))


_add(id="zetastar0", family="positive_z", anchor="zetastar0: product zeta_*(z - 2r - 1, q) zeta_*(z, q)",
     params=[real("z", 3.7, -2.0, 6.0), integer("r", 1, 0, 2)],
     lhs=lambda p: Integral(lambda q, a=_star(p["z"] - 2 * p["r"] - 1.0), b=_star(p["z"]): a(q) * b(q)),
     rhs=_zetastar0_rhs, loci=_zetastar0_loci, default_tol=1e-9)

_add(id="zetastar0withr0", family="positive_z", anchor="zetastar0withr0: the case r = 0",
     params=[real("z", 1.5, -2.0, 6.0)],
     lhs=lambda p: Integral(lambda q, a=_star(p["z"] - 1.0), b=_star(p["z"]): a(q) * b(q)),
     rhs=lambda p: (2.0 * riemann_zeta(p["z"] - 1.0) - 1.0) / (2.0 * (p["z"] - 1.0)),
     loci=lambda p: _dist_to_set(p["z"], (1, 2)))


def _antideriv2_constraint(p):
    return None if p["a"] < p["b"] else "need a < b"


_add(id="antideriv2", family="positive_z",
     anchor="antideriv2: zeta_*(z - 1, q) zeta_*(z, q) has antiderivative -zeta_*^2(z - 1, q) / (2(z - 1))",
     params=[real("z", 2.6, -2.0, 6.0), real("a", 0.1, 0.0, 0.5), real("b", 0.8, 0.5, 1.0)],
     lhs=lambda p: Integral(lambda q, a=_star(p["z"] - 1.0), b=_star(p["z"]): a(q) * b(q), p["a"], p["b"]),
     rhs=lambda p: -(hurwitz_zeta_star(p["z"] - 1.0, p["b"]) ** 2 - hurwitz_zeta_star(p["z"] - 1.0, p["a"]) ** 2)
     / (2.0 * (p["z"] - 1.0)),
     constraint=_antideriv2_constraint, loci=lambda p: _dist_to_set(p["z"], (1, 2)))

_add(id="intz2and5", family="positive_z", anchor="intz2and5: zeta_*(2, q) zeta_*(5, q)",
     params=[],
     lhs=lambda p: Integral(lambda q: hurwitz_zeta_star(2.0, q) * hurwitz_zeta_star(5.0, q)),
     rhs=lambda p: -1.0 / 6.0 + math.pi ** 2 / 24.0 + math.pi ** 4 / 360.0 - riemann_zeta(3.0) / 6.0)

_add(id="zetastar_52", family="positive_z", anchor="zetastar0 at z = 5/2, r = 2: zeta_*(-5/2, q) zeta_*(5/2, q)",
     params=[],
     lhs=lambda p: Integral(lambda q: hurwitz_zeta_star(-2.5, q) * hurwitz_zeta_star(2.5, q)),
     rhs=lambda p: (1.0 + 2.0 / 3.0 * riemann_zeta(-2.5) + 10.0 / 3.0 * riemann_zeta(-1.5)
                    - 10.0 * riemann_zeta(-0.5) + 10.0 / 3.0 * riemann_zeta(0.5) + 2.0 / 3.0 * riemann_zeta(1.5)),
     default_tol=1e-10)


def _mom_sum(z, n):
    return _fact(n) * sum((-1) ** k * riemann_zeta(z - k - 1.0) / (_fact(n - k) * pochhammer(1.0 - z, k + 1))
                          for k in range(n))


def _integer_loci(p):
    return _dist_to_set(p["z"], range(1, p["n"] + 2))


_add(id="zetastarqn", family="positive_z", anchor="zetastarqn: moments of zeta_*(z, q)",
     params=[real("z", 2.5, -2.0, 6.0), integer("n", 3, 0, 5)],
     lhs=lambda p: Integral(lambda q, f=_star(p["z"]), n=p["n"]: q ** n * f(q)),
     rhs=lambda p: -1.0 / (1.0 - p["z"] + p["n"]) + _mom_sum(p["z"], p["n"]),
     loci=_integer_loci, default_tol=1e-9)


def _poch_exact(x, k):
    out = Fraction(1)
    for i in range(k):
        out *= x + i
    return out


def _exact_z(p):
    return Fraction(p["z"])


_add(id="pochhammersum1", family="positive_z",
     anchor="pochhammersum1: sum_k (z - 2r - 1)_k / (1 - z)_(k+1) = 1/(1 + r - z)",
     params=[real("z", 3.7, -4.0, 8.0), integer("r", 1, 0, 12)], kind="exact",
     lhs=lambda p: sum(_poch_exact(_exact_z(p) - 2 * p["r"] - 1, k) / _poch_exact(1 - _exact_z(p), k + 1)
                       for k in range(2 * p["r"] + 1)),
     rhs=lambda p: 1 / (1 + p["r"] - _exact_z(p)),
     loci=lambda p: _dist_to_set(p["z"], range(1, 2 * p["r"] + 2)),
     note="z is converted exactly from its binary floating-point value")

_add(id="pochhammersum2", family="positive_z",
     anchor="pochhammersum2: n! sum_k (-1)^k / ((n - k)! (1 - z)_(k+1)) = 1/(1 - z + n)",
     params=[real("z", 2.5, -4.0, 8.0), integer("n", 3, 0, 12)], kind="exact",
     lhs=lambda p: math.factorial(p["n"]) * sum(
         Fraction((-1) ** k, math.factorial(p["n"] - k)) / _poch_exact(1 - _exact_z(p), k + 1)
         for k in range(p["n"] + 1)),
     rhs=lambda p: 1 / (1 - _exact_z(p) + p["n"]),
     loci=_integer_loci,
     note="z is converted exactly from its binary floating-point value")


def _zetaparts_lhs(p):
    z, n, c = p["z"], p["n"], p["c"]
    star_z, star_zn = _star(z), _star(z - n)
    scale = -(-1) ** n / pochhammer(1.0 - z, n)
    # the remainder integral is moved to the left so the right side is closed form
    return [Integral(lambda q: math.exp(c * q) * star_z(q)),
            Integral(lambda q: c ** n * math.exp(c * q) * star_zn(q), scale=scale)]


def _zetaparts_rhs(p):
    z, n, c = p["z"], p["n"], p["c"]
    total = 0.0
    for k in range(n):
        d1 = c ** k * math.exp(c)
        d0 = c ** k
        poch = pochhammer(1.0 - z, k + 1)
        total += -(-1) ** k * d1 / poch + (-1) ** k * (d1 - d0) / poch * riemann_zeta(z - k - 1.0)
    return total


_add(id="zetaparts", family="positive_z", anchor="zetaparts: repeated integration by parts against zeta_*(z, q), f = exp(c q)",
     params=[real("z", 2.5, -2.0, 6.0), integer("n", 3, 1, 4), real("c", 0.7, -2.0, 2.0)],
     lhs=_zetaparts_lhs, rhs=_zetaparts_rhs, loci=_integer_loci, default_tol=1e-9)


def _mom2_constraint(p):
    if not p["n"] - p["z"] + 1.0 > 0:
        return "need n - z + 1 > 0"
    return _exponent_too_large(p["z"] - p["n"])


_add(id="mom2", family="positive_z", anchor="mom2: moments of zeta(z, q) for n - z + 1 > 0",
     params=[real("z", 2.5, -2.0, 5.5), integer("n", 3, 0, 5)],
     lhs=lambda p: Integral(_power_zeta(p["z"], p["n"]), hint=alg_left(p["z"] - p["n"])),
     rhs=lambda p: _mom_sum(p["z"], p["n"]),
     constraint=_mom2_constraint, loci=_integer_loci, default_tol=1e-9)
