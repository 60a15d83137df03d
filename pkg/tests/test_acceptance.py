"""One test per acceptance criterion, each at its stated tolerance."""
import math
import random
import re
import time
from fractions import Fraction

import mpmath

from hurwitz_kit import hurwitz_zeta, hurwitz_zeta_hermite, integrate
from hurwitz_kit.cli import main
from hurwitz_kit.identities import (catalan_series_partial, check, get, registry,
                                    transform_of_trig_poly, trig_poly)

PI = mpmath.pi
ZETA = mpmath.zeta
LN2 = mpmath.log(2)


def _worst(pairs):
    return max(abs(float(a) - float(b)) for a, b in pairs)


def test_01_hermite_oracle(criterion):
    rng = random.Random(1)
    points = []
    while len(points) < 200:
        z = rng.uniform(-8.0, 8.0)
        if abs(z - 1.0) >= 0.1:
            points.append((z, rng.uniform(0.1, 5.0)))
    t0 = time.perf_counter()
    worst = 0.0
    for z, q in points:
        a, b = hurwitz_zeta(z, q), hurwitz_zeta_hermite(z, q)
        worst = max(worst, abs(a - b) / max(1.0, abs(b)))
    elapsed = time.perf_counter() - t0
    criterion(1, "Euler-Maclaurin vs Hermite, 200 points", worst <= 1e-10 and elapsed < 10.0,
              f"max err {worst:.2e}, {elapsed:.2f} s")


def test_02_zetasq2(criterion):
    expected = float(ZETA(3) / (16 * PI ** 2))
    r = check("zetasq2", {}, 1e-8)
    err = abs(r.lhs_value - expected) / expected
    criterion(2, "zetasq2 = zeta(3)/(16 pi^2)", r.passed and err <= 1e-8, f"rel err {err:.2e}")


def test_03_bsq(criterion):
    worst = 0.0
    ok = True
    for m in range(1, 7):
        expected = abs(mpmath.bernoulli(2 * m)) / mpmath.binomial(2 * m, m)
        r = check("bsq", {"m": m}, 1e-10)
        ok &= r.passed
        worst = max(worst, abs(r.lhs_value - float(expected)) / float(expected))
    criterion(3, "bsq for m = 1..6", ok and worst <= 1e-10, f"max rel err {worst:.2e}")


def test_04_orthogonality(criterion):
    zero_worst = nonzero_worst = 0.0
    ok = True
    for m in range(1, 10):
        for n in range(1, 11 - m):
            r = check("orthogonality", {"m": m, "n": n}, 1e-10)
            # (-1)^(n-1) m! n! / (m+n)! B_(m+n)
            exact = ((-1) ** (n - 1) * mpmath.factorial(m) * mpmath.factorial(n)
                     / mpmath.factorial(m + n) * mpmath.bernoulli(m + n))
            ok &= r.passed
            if exact == 0:
                zero_worst = max(zero_worst, abs(r.lhs_value))
            else:
                nonzero_worst = max(nonzero_worst, abs(r.lhs_value / float(exact) - 1))
    ok &= zero_worst <= 1e-11 and nonzero_worst <= 1e-10
    criterion(4, "orthogonality for m + n <= 10", ok,
              f"zero cases {zero_worst:.2e}, nonzero rel {nonzero_worst:.2e}")


def test_05_logsine(criterion):
    z3, z5 = ZETA(3), ZETA(5)
    table = {"classic": -LN2,
             "example4_q1": -LN2 / 2,
             "example4_q2": -LN2 / 3 - z3 / (2 * PI ** 2),
             "example4_q3": -LN2 / 4 - 3 * z3 / (4 * PI ** 2),
             "example4_q4": -LN2 / 5 - z3 / PI ** 2 + 3 * z5 / (2 * PI ** 4)}
    reports = {i: check(i, {}, 1e-10) for i in table}
    worst = _worst((reports[i].lhs_value, v) for i, v in table.items())
    ok = all(r.passed for r in reports.values()) and worst <= 1e-10
    criterion(5, "logsine set", ok, f"max abs err {worst:.2e}")


def test_06_loggamma(criterion):
    def moment(g):
        return mpmath.quad(lambda q: g(q) * mpmath.loggamma(q), [0, 1])
    g_const = mpmath.catalan
    zp2 = mpmath.zeta(2, derivative=1)
    table = {"nice": mpmath.log(mpmath.sqrt(2 * PI)),
             "zzero": moment(lambda q: q - 0.5),
             "zeta3": ZETA(3) / (4 * PI ** 2),
             "loggamma1_q1": moment(lambda q: q),
             "loggamma1_q2": moment(lambda q: q ** 2),
             "loggamma1_q3": moment(lambda q: q ** 3),
             "gosper1": mpmath.quad(lambda q: mpmath.loggamma(q + 1), [0, 0.5]),
             "gosper2": mpmath.quad(lambda q: mpmath.loggamma(q + 1), [0, 0.25])}
    # the Catalan closed form for gosper2 evaluated independently
    ln_s2p = mpmath.log(mpmath.sqrt(2 * PI))
    gosper2_closed = (3 * mpmath.euler / 32 + 7 * ln_s2p / 16 - LN2 / 2
                      - 9 * zp2 / (16 * PI ** 2) + g_const / (4 * PI) - mpmath.mpf(1) / 4)
    reports = {i: check(i, {}, 1e-9) for i in table}
    worst = _worst([(reports[i].lhs_value, v) for i, v in table.items()]
                   + [(reports[i].rhs_value, v) for i, v in table.items()])
    ok = (all(r.passed for r in reports.values()) and worst <= 1e-9
          and abs(gosper2_closed - table["gosper2"]) <= 1e-20)
    criterion(6, "loggamma set", ok, f"max abs err {worst:.2e}")


def test_07_derivative_set(criterion):
    sq = mpmath.quad(lambda q: mpmath.loggamma(q) ** 2, [0, 1])
    ls = -LN2 * mpmath.log(mpmath.sqrt(2 * PI)) - PI ** 2 / 24
    ls_quad = mpmath.quad(lambda q: mpmath.log(mpmath.sin(PI * q)) * mpmath.loggamma(q), [0, 0.5, 1])
    r1, r2 = check("loggammasquared", {}, 1e-8), check("logslogg", {}, 1e-8)
    worst = _worst([(r1.lhs_value, sq), (r1.rhs_value, sq), (r2.lhs_value, ls), (r2.rhs_value, ls)])
    ok = r1.passed and r2.passed and worst <= 1e-8 and abs(ls_quad - ls) <= 1e-20
    criterion(7, "loggammasquared and logslogg", ok, f"max abs err {worst:.2e}")


def test_08_positive_z(criterion):
    expected = float(-mpmath.mpf(1) / 6 + PI ** 2 / 24 + PI ** 4 / 360 - ZETA(3) / 6)
    r = check("intz2and5", {}, 1e-9)
    e1 = abs(r.lhs_value - expected) / abs(expected)

    def zstar(s, q):
        return ZETA(s, q + 1)
    comp = mpmath.quad(lambda q: zstar(-2.5, q) * zstar(2.5, q), [0, 1])
    r2 = check("zetastar_52", {}, 1e-8)
    e2 = max(abs(r2.lhs_value - float(comp)), abs(r2.rhs_value - float(comp))) / abs(float(comp))
    ok = r.passed and r2.passed and e1 <= 1e-9 and e2 <= 1e-8
    criterion(8, "intz2and5 and the z = 5/2 companion", ok, f"rel errs {e1:.2e}, {e2:.2e}")


def test_09_catalan_quadrilateral(criterion):
    G = float(mpmath.catalan)
    quad_val = check("cata1", {}).lhs_value * math.pi ** 2 / 4
    series_val = check("newcata", {}).lhs_value
    recon_val = check("catalan2", {}).lhs_value
    s_even, s_odd = catalan_series_partial(10 ** 4), catalan_series_partial(10 ** 4 + 1)
    bracket = s_even < G < s_odd and abs(s_even - G) <= 2e-4 and abs(s_odd - G) <= 2e-4
    gaps = [abs(0.5 * (catalan_series_partial(n) + catalan_series_partial(n + 1)) - G)
            for n in (10, 100, 1000, 10 ** 4)]
    monotone = all(x > y for x, y in zip(gaps, gaps[1:])) and gaps[-1] <= 2e-4
    values = (quad_val, series_val, recon_val)
    spread = max(values) - min(values)
    ok = (abs(quad_val - G) <= 1e-9 and abs(recon_val - G) <= 1e-7 and bracket and monotone
          and spread <= 1e-6)
    criterion(9, "Catalan quadrilateral", ok,
              f"cata1 {quad_val - G:.1e}, catalan2 {recon_val - G:.1e}, spread {spread:.1e}")


def test_10_transform_property(criterion):
    rng = random.Random(10)
    worst = 0.0
    for _ in range(50):
        deg = rng.randint(1, 5)
        a = [rng.uniform(-1, 1) for _ in range(deg)]
        b = [rng.uniform(-1, 1) for _ in range(deg)]
        z = rng.uniform(-4.0, -1e-3)
        f = trig_poly(a, b)
        direct = integrate(lambda q: f(q) * hurwitz_zeta(z, q), 0.0, 1.0, tol=1e-12).value
        refl = integrate(lambda q: f(q) * hurwitz_zeta(z, 1.0 - q), 0.0, 1.0, tol=1e-12).value
        worst = max(worst, abs(direct - transform_of_trig_poly(z, a, b)),
                    abs(refl - transform_of_trig_poly(z, a, b, reflected=True)))
    criterion(10, "mainint/mainint2 on 50 random trig polynomials", worst <= 1e-9,
              f"max abs err {worst:.2e}")


def test_11_full_registry(criterion, capsys):
    code = main(["verify", "--filter", "all", "--samples", "3", "--seed", "42"])
    out = capsys.readouterr().out
    known = {i.id for i in registry()}
    passed = {line.split()[0] for line in out.splitlines()
              if line.split() and line.split()[0] in known and line.rstrip().endswith("PASS")}
    summary = re.search(r"(\d+) reports, (\d+) passed, (\d+) failed", out)
    ok = code == 0 and len(passed) >= 60 and summary and summary.group(3) == "0"
    criterion(11, "verify --filter all --samples 3 --seed 42", bool(ok),
              f"exit {code}, {len(passed)} ids, {summary.group(0) if summary else 'no summary'}")


def test_12_exact_identities(criterion):
    z_values = (3.7, 2.5, -1.25, 0.3, 5.5, -3.9)
    ranges = {"pochhammersum1": ("r", z_values), "pochhammersum2": ("n", z_values),
              "ident1": ("j", None), "polyinv": ("n", None), "polyinv1": ("n", None)}
    checked = 0
    ok = True
    for ident_id, (index, zs) in ranges.items():
        ident = get(ident_id)
        for k in range(0, 13):
            for z in (zs or (None,)):
                p = {index: k} if z is None else {index: k, "z": z}
                if ident.constraint(p) is not None or ident.loci(p) < 1e-12:
                    continue
                lhs, rhs = ident.lhs(p), ident.rhs(p)
                # polyinv and polyinv1 compare coefficient vectors
                flat = [*lhs, *rhs] if isinstance(lhs, tuple) else [lhs, rhs]
                exact = all(isinstance(v, (int, Fraction)) for v in flat)
                r = check(ident_id, p)
                ok &= exact and lhs == rhs and r.passed and r.abs_err == 0
                checked += 1
    criterion(12, "exact identities for indices <= 12", ok and checked >= 100, f"{checked} cases")


def test_13_polygamma_moments(criterion):
    worst = 0.0
    ok = True
    for n, m in ((2, 1), (3, 1), (3, 2), (4, 2)):
        ref = mpmath.quad(lambda q: q ** n * mpmath.psi(m, q), [0, 1])
        r = check("mompolys", {"n": n, "m": m}, 1e-8)
        ok &= r.passed
        worst = max(worst, abs(r.lhs_value - float(ref)), abs(r.rhs_value - float(ref)))
    for n in range(1, 5):
        ref = mpmath.quad(lambda q: q ** n * mpmath.digamma(q), [0, 1])
        r = check("momdigamma", {"n": n}, 1e-8)
        ok &= r.passed
        worst = max(worst, abs(r.lhs_value - float(ref)), abs(r.rhs_value - float(ref)))
    criterion(13, "mompolys and momdigamma", ok and worst <= 1e-8, f"max abs err {worst:.2e}")


def test_14_inteins(criterion):
    t0 = time.perf_counter()
    r = check("inteins", {"k": 2, "alpha": 5.0, "z": -1.0}, 1e-6)
    elapsed = time.perf_counter() - t0
    rel = r.abs_err / abs(r.rhs_value)
    ok = r.passed and rel <= 1e-6 and elapsed < 30.0
    criterion(14, "inteins at k = 2, alpha = 5, z = -1", ok, f"rel err {rel:.2e}, {elapsed:.2f} s")
