from dataclasses import FrozenInstanceError
import importlib
import math
import random

import mpmath
import pytest

from hurwitz_kit.errors import DomainError
from hurwitz_kit.identities import (DEFAULTS, FAMILIES, Identity, Integral, Randomized,
                                    UnknownIdentityError, catalan_series_partial, check,
                                    check_suite, fourier_coefficients_of, get, registry, select)
from hurwitz_kit.identities.helpers import (alternating_c_partial, kogan_cos_even, kogan_cos_odd,
                                            kogan_sin_even, kogan_sin_odd, secant_psi_series)
from hurwitz_kit.identities.check import EXPLICIT_MARGIN, SAMPLING_MARGIN, sample_params
from hurwitz_kit.quad import integrate

check_module = importlib.import_module("hurwitz_kit.identities.check")

CATALAN = float(mpmath.catalan)
ZETA3 = float(mpmath.zeta(3))


# --- registry -----------------------------------------------------------------

def test_registry_size_and_uniqueness():
    reg = registry()
    assert len(reg) >= 60
    ids = [i.id for i in reg]
    assert len(ids) == len(set(ids))
    assert {i.family for i in reg} == set(FAMILIES)
    assert all(i.anchor for i in reg)


def test_registry_is_immutable():
    reg = registry()
    assert isinstance(reg, tuple)
    assert registry() is reg
    with pytest.raises(FrozenInstanceError):
        reg[0].default_tol = 1.0


def test_default_points_inside_domain():
    for ident in registry():
        assert ident.constraint(dict(ident.defaults)) is None, ident.id
        assert ident.loci(dict(ident.defaults)) >= SAMPLING_MARGIN, ident.id
        for p in ident.params:
            assert p.low <= p.default <= p.high


def test_registry_examples():
    z = get("zetasq2")
    assert "zetasq2" in z.anchor
    mom2 = get("mom2")
    assert sorted(p.name for p in mom2.params) == ["n", "z"]
    assert mom2.constraint({"n": 1, "z": 2.5}) is not None
    assert mom2.constraint({"n": 3, "z": 2.5}) is None
    assert get("intz2and5").family == "positive_z"
    with pytest.raises(UnknownIdentityError):
        get("nosuch")


# --- check ----------------------------------------------------------------------

def test_check_zetasq2():
    r = check("zetasq2", {}, 1e-8)
    expected = float(mpmath.zeta(3) / (16 * mpmath.pi ** 2))
    assert r.passed
    assert r.lhs_value == pytest.approx(expected, rel=1e-10)
    assert r.rhs_value == pytest.approx(expected, rel=1e-13)


def test_check_example4_q1():
    r = check("example4_q1", {}, 1e-10)
    assert r.passed
    assert r.lhs_value == pytest.approx(-math.log(2) / 2, abs=1e-10)
    assert r.rhs_value == pytest.approx(-math.log(2) / 2, abs=1e-15)


def test_check_vanishing():
    r = check("vanishing", {"z": -3.7}, 1e-10)
    assert r.passed
    assert abs(r.lhs_value) <= 1e-10
    assert r.rhs_value == 0.0


def test_check_intz2and5():
    pi = mpmath.pi
    expected = float(-mpmath.mpf(1) / 6 + pi ** 2 / 24 + pi ** 4 / 360 - mpmath.zeta(3) / 6)
    r = check("intz2and5", {}, 1e-8)
    assert r.passed
    assert r.lhs_value == pytest.approx(expected, rel=1e-9)
    assert r.rhs_value == pytest.approx(expected, rel=1e-13)


def test_check_errors():
    with pytest.raises(UnknownIdentityError):
        check("nosuch")
    with pytest.raises(DomainError):
        check("vanishing", {"w": 1.0})
    with pytest.raises(DomainError):
        check("mom2", {"n": 0, "z": 2.5})
    with pytest.raises(DomainError):
        check("orthogonality", {"m": 2.5})
    with pytest.raises(DomainError):
        check("vanishing", {"z": math.nan})
    with pytest.raises(DomainError):
        check("vanishing", {}, tol=0.0)
    # exactly on a removable singularity of the closed form
    with pytest.raises(DomainError):
        check("intber1_pos", {"z": 1.0})


def test_check_is_deterministic():
    a = check("zprima", {"z": -0.3, "zp": -2.1})
    b = check("zprima", {"z": -0.3, "zp": -2.1})
    assert (a.lhs_value, a.rhs_value, a.lhs_quadrature_error) == (b.lhs_value, b.rhs_value,
                                                                 b.lhs_quadrature_error)


def test_report_pass_rule():
    for r in check_suite("all", Randomized(7, 1)):
        if r.diagnostic.startswith(("DomainError", "PoleError")):
            continue
        if get(r.id).kind == "exact":
            assert r.passed == (r.abs_err == 0)
            continue
        threshold = max(r.tol * max(1.0, abs(r.rhs_value)), 10 * r.lhs_quadrature_error)
        assert (r.abs_err <= threshold) == r.passed, r.id


def test_non_convergence_is_a_failure():
    from hurwitz_kit.identities._core import real
    hard = Identity(id="hard", family="fourier", anchor="test: undeclared dense oscillation",
                    params=[real("z", -1.0, -2.0, 0.0)],
                    lhs=lambda p: Integral(lambda q: math.sin(1e5 * q) * math.log(q)),
                    rhs=lambda p: 0.0, default_tol=1e-14)
    r = check_module._run(hard, dict(hard.defaults), None)
    assert not r.passed
    assert "did not converge" in r.diagnostic


def test_closed_form_errors_surface_as_failures():
    from hurwitz_kit.identities._core import real
    from hurwitz_kit.specfun import riemann_zeta
    pole = Identity(id="pole", family="fourier", anchor="test: pole in the closed form",
                    params=[real("z", 1.0, 0.0, 2.0)],
                    lhs=lambda p: Integral(lambda q: 1.0), rhs=lambda p: riemann_zeta(p["z"]))
    r = check_module._run(pole, dict(pole.defaults), None)
    assert not r.passed and r.diagnostic.startswith("PoleError")


# --- check_suite ------------------------------------------------------------------

def test_suite_bernoulli_defaults():
    reports = check_suite("bernoulli", DEFAULTS)
    assert reports and all(r.passed for r in reports)
    orth = [r for r in reports if r.id == "orthogonality"]
    assert orth[0].params == {"m": 2, "n": 4}
    # -B_6 / C(6, 2) = -1/630, and the integral evaluated independently
    ref = float(mpmath.quad(lambda q: mpmath.bernpoly(2, q) * mpmath.bernpoly(4, q), [0, 1]))
    assert ref == pytest.approx(-1 / 630, abs=1e-15)
    assert orth[0].lhs_value == pytest.approx(ref, abs=1e-12)
    assert orth[0].rhs_value == pytest.approx(-1 / 630, abs=1e-15)


def test_suite_half_interval_recul():
    reports = check_suite("half_interval", DEFAULTS)
    assert all(r.passed for r in reports)
    rec = [r for r in reports if r.id == "recul"]
    assert rec[0].params == {"z": -1.5, "n": 3}
    # independent check of the two half-interval moments entering the recursion
    z, n = -1.5, 3
    I = lambda zz, nn: float(mpmath.quad(lambda q: q ** nn * mpmath.zeta(zz, q), [0, 0.5]))
    boundary = rec[0].rhs_value
    assert I(z, n) + n / (1 - z) * I(z - 1, n - 1) == pytest.approx(boundary, abs=1e-10)


def test_suite_randomized_cardinality_and_order():
    reports = check_suite("all", Randomized(seed=42, count=3))
    reg = registry()
    assert len(reports) == 4 * len(reg) >= 240
    order = {i.id: k for k, i in enumerate(reg)}
    ranks = [order[r.id] for r in reports]
    assert ranks == sorted(ranks)
    assert all(r.passed for r in reports)


def test_suite_points_independent_of_selection():
    full = [r for r in check_suite("all", Randomized(3, 2)) if r.id == "mom2"]
    alone = check_suite("mom2", Randomized(3, 2))
    assert [r.params for r in full] == [r.params for r in alone]


def test_suite_parallel_matches_serial():
    serial = check_suite("logsine", Randomized(5, 2), workers=1)
    parallel = check_suite("logsine", Randomized(5, 2), workers=3)
    assert [(r.id, r.params, r.lhs_value, r.rhs_value) for r in serial] == \
           [(r.id, r.params, r.lhs_value, r.rhs_value) for r in parallel]


def test_thread_cap_env(monkeypatch):
    monkeypatch.setenv("HURWITZ_KIT_THREADS", "0")
    with pytest.raises(DomainError):
        check_suite("zetasq2")
    monkeypatch.setenv("HURWITZ_KIT_THREADS", "2")
    assert check_suite("zetasq2")[0].passed


def test_select():
    assert {i.family for i in select("catalan")} == {"catalan"}
    assert [i.id for i in select("example4_*")] == ["example4_q1", "example4_q2", "example4_q3",
                                                    "example4_q4"]
    assert len(select("all")) == len(registry())
    with pytest.raises(UnknownIdentityError):
        select("nosuchfamily")


def test_sampling_respects_constraints_and_margin():
    for ident in registry():
        rng = random.Random(f"t:{ident.id}")
        for _ in range(5):
            p = sample_params(ident, rng)
            assert ident.constraint(p) is None
            assert ident.loci(p) >= SAMPLING_MARGIN > EXPLICIT_MARGIN


# --- Catalan partial sums and Fourier coefficients -----------------------------------

def test_catalan_series_partial():
    assert catalan_series_partial(1) == 1.0
    assert abs(catalan_series_partial(10 ** 4) - CATALAN) <= 2e-4
    with pytest.raises(DomainError):
        catalan_series_partial(0)


def test_catalan_series_brackets():
    prev = None
    for N in (100, 200, 400, 800, 1600):
        lo, hi = catalan_series_partial(N), catalan_series_partial(N + 1)
        assert lo < CATALAN < hi
        gap = abs(0.5 * (lo + hi) - CATALAN)
        assert prev is None or gap < prev
        prev = gap
    for N in (1000, 2000):
        assert abs(catalan_series_partial(2 * N) - CATALAN) < abs(catalan_series_partial(N) - CATALAN)


def test_fourier_coefficients_lngamma():
    A = float(mpmath.euler + mpmath.log(2 * mpmath.pi))
    for n in (1, 2, 5):
        a, b = fourier_coefficients_of("lngamma", n)
        assert a == pytest.approx(1 / (2 * n), abs=1e-11)
        assert b == pytest.approx((A + math.log(n)) / (math.pi * n), abs=1e-11)


def test_fourier_coefficients_lnsin():
    a0, _ = fourier_coefficients_of("lnsin", 0)
    assert a0 / 2 == pytest.approx(-math.log(2), abs=1e-12)
    for n in (1, 3):
        a, b = fourier_coefficients_of("lnsin", n)
        assert a == pytest.approx(-1 / n, abs=1e-11)
        assert b == pytest.approx(0.0, abs=1e-11)


def test_fourier_coefficients_sec_antisym():
    a, b = fourier_coefficients_of("sec_antisym", 2)
    ref = float(mpmath.quad(lambda q: mpmath.sin(4 * mpmath.pi * q) / mpmath.cos(mpmath.pi * q),
                            [0, 0.5, 1]))
    assert ref == pytest.approx((-1) ** 3 * 4 / math.pi * (1 - 1 / 3), abs=1e-14)
    assert b / 2 == pytest.approx(ref, abs=1e-11)
    assert a == 0.0


def test_fourier_coefficients_other_slugs():
    a, b = fourier_coefficients_of("sin_power", 1, power=2)
    assert (a, b) == (pytest.approx(-0.5, abs=1e-12), pytest.approx(0.0, abs=1e-12))
    a, b = fourier_coefficients_of("classic", 1)
    assert a == pytest.approx(-1.0, abs=1e-10)
    with pytest.raises(UnknownIdentityError):
        fourier_coefficients_of("nosuch", 1)
    with pytest.raises(DomainError):
        fourier_coefficients_of("lnsin", -1)


# --- properties ---------------------------------------------------------------------

def test_zprima_equals_zzpri1(rng):
    zp_form, zz_form = get("zprima"), get("zzpri1")
    tested = 0
    while tested < 100:
        p = {"z": rng.uniform(-3, -0.05), "zp": rng.uniform(-3, -0.05)}
        if zp_form.loci(p) < SAMPLING_MARGIN or zz_form.loci(p) < SAMPLING_MARGIN:
            continue
        a, b = zp_form.rhs(p), zz_form.rhs(p)
        assert abs(a - b) <= 1e-11 * max(1.0, abs(b)), p
        tested += 1


def test_moments_from_bernoulli_route(rng):
    mom, intber1 = get("mom"), get("intber1")
    for n in range(1, 9):
        for _ in range(4):
            z = rng.uniform(-4, -0.05)
            # q^n = 1/(n+1) sum_j C(n+1, j) B_j(q); the j = 0 term integrates to 0
            s = sum(math.comb(n + 1, j) * intber1.rhs({"z": z, "m": j}) for j in range(1, n + 1)) / (n + 1)
            direct = mom.rhs({"z": z, "n": n})
            assert abs(s - direct) <= 1e-11 * max(1.0, abs(direct)), (n, z)


def test_mom2_continues_mom(rng):
    mom, mom2 = get("mom"), get("mom2")
    for n in range(1, 6):
        p = {"z": -0.5, "n": n}
        assert abs(mom2.rhs(p) - mom.rhs(p)) <= 1e-11 * max(1.0, abs(mom.rhs(p)))


def test_gosper_chain():
    # zeta'(0, q) = ln Gamma(q) - ln sqrt(2 pi), and ln Gamma(q + 1) = ln Gamma(q) + ln q
    dz = get("gosper_route_dz").rhs({})
    route = get("gosper_route").rhs({})
    ln_sqrt_2pi = 0.5 * math.log(2 * math.pi)
    int_ln_q = 0.5 * math.log(0.5) - 0.5
    assert abs(dz + 0.5 * ln_sqrt_2pi + int_ln_q - route) <= 1e-12
    direct = integrate(lambda q: math.lgamma(q + 1.0), 0.0, 0.5, tol=1e-13)
    ref = float(mpmath.quad(lambda q: mpmath.loggamma(q + 1), [0, 0.5]))
    assert abs(route - direct.value) <= 1e-9
    assert abs(route - ref) <= 1e-9
    assert check("gosper_route_dz").passed and check("gosper_route").passed


def test_kogan_expansions(rng):
    cases = [(kogan_sin_even, lambda n, x: math.sin(x) ** (2 * n)),
             (kogan_sin_odd, lambda n, x: math.sin(x) ** (2 * n + 1)),
             (kogan_cos_even, lambda n, x: math.cos(x) ** (2 * n)),
             (kogan_cos_odd, lambda n, x: math.cos(x) ** (2 * n + 1))]
    for expansion, power in cases:
        for n in range(1, 7):
            xs = [rng.uniform(-math.pi, math.pi) for _ in range(100)]
            worst = max(abs(expansion(n, x) - power(n, x)) for x in xs)
            assert worst <= 1e-12, (expansion.__name__, n)


def test_secant_psi_truncations_agree():
    # catalan-m at m = 1: sum (-1)^(n+1) c_n / n^3 = -1/4 two-sided psi sum
    for N in (200, 1000, 4000):
        a = alternating_c_partial(3, N)
        b = -0.25 * secant_psi_series(3, N)
        assert abs(a - b) <= 1e-6
    assert check("secant1", {"m": 1}).passed and check("secant2", {"m": 1}).passed


def test_quadrature_rules_agree_on_catalog_integrands():
    from hurwitz_kit.identities import Integral
    from hurwitz_kit.quad import integrate_crosscheck
    compared = 0
    for ident in registry():
        if ident.kind != "integral":
            continue
        terms = ident.lhs(dict(ident.defaults))
        for t in terms if isinstance(terms, list) else [terms]:
            if not isinstance(t, Integral):
                continue
            r1 = integrate(t.f, t.a, t.b, tol=1e-12, hint=t.hint, breakpoints=t.breakpoints)
            r2 = integrate_crosscheck(t.f, t.a, t.b, tol=1e-12, breakpoints=t.breakpoints)
            if not (r1.converged and r2.converged):
                continue
            bound = 3 * max(r1.error_estimate, r2.error_estimate, 1e-15)
            assert abs(r1.value - r2.value) <= bound, ident.id
            compared += 1
    assert compared >= 100
