"""Evaluate identities: single checks and whole suites."""
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
import fnmatch
import math
import os
import random
import time
from typing import Dict, List, Mapping, Optional, Union

from ..errors import DomainError, HurwitzKitError
from ..quad import integrate
from ._core import (FAMILIES, Identity, Integral, UnknownIdentityError, Value,
                    exact_distance, exact_equal, exact_magnitude)
from .registry import get, registry

SAMPLING_MARGIN = 1e-3
EXPLICIT_MARGIN = 1e-12
_MAX_DRAWS = 2000
# tanh-sinh cannot certify much below this absolute level
_QUAD_FLOOR = 1e-14


@dataclass(frozen=True)
class CheckReport:
    id: str
    params: Dict[str, Union[int, float]]
    lhs_value: float
    rhs_value: float
    abs_err: float
    rel_err: float
    lhs_quadrature_error: float
    passed: bool
    wall_time: float
    tol: float
    diagnostic: str = ""


@dataclass(frozen=True)
class Randomized:
    """Sampling strategy: ``count`` extra points per identity from ``seed``."""
    seed: int
    count: int


DEFAULTS = "defaults"


def _resolve_params(ident: Identity, params: Optional[Mapping], margin: float):
    names = {p.name for p in ident.params}
    params = dict(params or {})
    extra = set(params) - names
    if extra:
        raise DomainError(f"{ident.id}: unknown parameter(s) {sorted(extra)}; expected {sorted(names)}")
    out = {}
    for spec in ident.params:
        value = params.get(spec.name, spec.default)
        try:
            value = spec.coerce(value)
        except (TypeError, ValueError) as exc:
            raise DomainError(f"{ident.id}: {exc}") from None
        if not math.isfinite(value):
            raise DomainError(f"{ident.id}: parameter {spec.name} must be finite")
        out[spec.name] = value
    why = ident.constraint(out)
    if why:
        raise DomainError(f"{ident.id}: {why}")
    if ident.loci(out) < margin:
        raise DomainError(f"{ident.id}: parameters {out} sit on a removable singularity of the closed form")
    return out


def _evaluate_lhs(expr, tol):
    """Return (value, error estimate, converged, diagnostic)."""
    terms = expr if isinstance(expr, (list, tuple)) else [expr]
    share = tol / max(1, len(terms))
    value = err = 0.0
    ok = True
    notes = []
    for t in terms:
        if isinstance(t, Integral):
            scale = abs(t.scale) or 1.0
            r = integrate(t.f, t.a, t.b, tol=max(share / scale, _QUAD_FLOOR),
                          hint=t.hint, breakpoints=t.breakpoints)
            value += t.scale * r.value
            err += scale * r.error_estimate
            if not r.converged:
                ok = False
                notes.append(f"quadrature on [{t.a}, {t.b}] did not converge "
                             f"(estimate {r.error_estimate:.3g})")
        elif isinstance(t, Value):
            value += t.value
            err += t.error
            if not t.converged:
                ok = False
                notes.append("series term did not converge")
        else:
            raise TypeError(f"unsupported LHS term {t!r}")
    return value, err, ok, "; ".join(notes)


def check(identity_id: str, params: Optional[Mapping] = None, tol: Optional[float] = None) -> CheckReport:
    """Evaluate both sides of one identity at one parameter point.

    Parameters
    ----------
    identity_id : str
        Registry id.
    params : mapping, optional
        Overrides for the default parameter point.
    tol : float, optional
        Combined tolerance; the comparison is abs_err <= tol * max(1, |rhs|),
        relaxed to 10x the quadrature's own error estimate when that is larger.

    Raises
    ------
    UnknownIdentityError
        For an id not in the registry.
    DomainError
        When the parameters fall outside the identity's domain.
    """
    ident = get(identity_id)
    p = _resolve_params(ident, params, EXPLICIT_MARGIN)
    return _run(ident, p, tol)


def _run(ident: Identity, p, tol):
    if tol is None:
        tol = ident.default_tol
    if not tol > 0:
        raise DomainError(f"tolerance must be positive, got {tol!r}")
    start = time.perf_counter()
    if ident.kind == "exact":
        return _run_exact(ident, p, tol, start)
    try:
        rhs = float(ident.rhs(p))
        scale = max(1.0, abs(rhs))
        lhs, qerr, ok, note = _evaluate_lhs(ident.lhs(p), tol * scale / 10.0)
    except HurwitzKitError as exc:
        return CheckReport(ident.id, p, math.nan, math.nan, math.nan, math.nan, math.nan,
                           False, time.perf_counter() - start, tol, f"{type(exc).__name__}: {exc}")
    abs_err = abs(lhs - rhs)
    rel_err = abs_err / abs(rhs) if rhs != 0 else abs_err
    threshold = max(tol * scale, 10.0 * qerr)
    passed = ok and math.isfinite(abs_err) and abs_err <= threshold
    if ok and not passed:
        note = f"abs_err {abs_err:.3g} exceeds threshold {threshold:.3g}"
    return CheckReport(ident.id, p, lhs, rhs, abs_err, rel_err, qerr, passed,
                       time.perf_counter() - start, tol, note)


def _run_exact(ident, p, tol, start):
    lhs = ident.lhs(p)
    rhs = ident.rhs(p)
    equal = exact_equal(lhs, rhs)
    dist = exact_distance(lhs, rhs)
    mag = exact_magnitude(rhs)
    return CheckReport(ident.id, p, exact_magnitude(lhs), mag, dist,
                       dist / mag if mag else dist, 0.0, equal, time.perf_counter() - start, tol,
                       "" if equal else "exact sides differ")


def sample_params(ident: Identity, rng: random.Random):
    """Draw one admissible point uniformly from the identity's parameter box."""
    for _ in range(_MAX_DRAWS):
        draw = {}
        for spec in ident.params:
            if spec.kind == "int":
                draw[spec.name] = rng.randint(spec.low, spec.high)
            else:
                draw[spec.name] = rng.uniform(spec.low, spec.high)
        if ident.constraint(draw) is None and ident.loci(draw) >= SAMPLING_MARGIN:
            return draw
    raise DomainError(f"{ident.id}: no admissible random point found in {_MAX_DRAWS} draws")


def select(filter: str = "all") -> List[Identity]:
    """Identities matching 'all', a family name, or an id glob, in registry order.

    Raises
    ------
    UnknownIdentityError
        When nothing matches.
    """
    reg = registry()
    if filter == "all":
        return list(reg)
    if filter in FAMILIES:
        return [i for i in reg if i.family == filter]
    chosen = [i for i in reg if fnmatch.fnmatchcase(i.id, filter)]
    if not chosen:
        raise UnknownIdentityError(f"no identity or family matches {filter!r}")
    return chosen


def _plan(idents, strategy):
    jobs = []
    for ident in idents:
        jobs.append((ident.id, dict(ident.defaults)))
        if isinstance(strategy, Randomized) and strategy.count > 0:
            rng = random.Random(f"{strategy.seed}:{ident.id}")
            for _ in range(strategy.count):
                jobs.append((ident.id, sample_params(ident, rng)))
    return jobs


def _job(args):
    identity_id, p, tol = args
    ident = get(identity_id)
    return _run(ident, p, tol)


def thread_cap():
    raw = os.environ.get("HURWITZ_KIT_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        raise DomainError(f"HURWITZ_KIT_THREADS must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise DomainError(f"HURWITZ_KIT_THREADS must be a positive integer, got {raw!r}")
    return n


def check_suite(filter: str = "all", strategy=DEFAULTS, tol: Optional[float] = None,
                workers: Optional[int] = None) -> List[CheckReport]:
    """Check every identity matching ``filter``.

    ``strategy`` is DEFAULTS or Randomized(seed, count).  Each identity is run
    at its default point and, when randomized, at ``count`` further points
    drawn from a generator seeded by (seed, id), so the points do not depend
    on which other identities are selected.  Reports come back in registry
    order whatever the execution order.  ``workers`` defaults to the
    HURWITZ_KIT_THREADS cap (1 when unset).
    """
    if strategy != DEFAULTS and not isinstance(strategy, Randomized):
        raise DomainError(f"unknown parameter strategy {strategy!r}")
    jobs = [(i, p, tol) for i, p in _plan(select(filter), strategy)]
    n = thread_cap() if workers is None else max(1, int(workers))
    if n == 1 or len(jobs) < 2:
        return [_job(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=n) as pool:
        return list(pool.map(_job, jobs, chunksize=4))
