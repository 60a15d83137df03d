"""One-dimensional quadrature on finite intervals.

The main rule is tanh-sinh (double exponential), which tolerates algebraic
and logarithmic endpoint singularities.  An adaptive Gauss-Kronrod G7/K15
rule provides an independent second opinion.

Neither rule ever evaluates the integrand exactly at an endpoint.
"""
from dataclasses import dataclass
import heapq
import math
from typing import Callable, Sequence

from .errors import DomainError, QuadratureEvaluationError

DEFAULT_TOL = 1e-11
MAX_LEVEL = 12
MIN_LEVEL = 3
MAX_SUBINTERVALS = 2000


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error_estimate: float
    nodes_used: int
    converged: bool


@dataclass(frozen=True)
class Endpoint:
    """Behaviour of an integrand at one end of the interval.

    kind is "none", "algebraic" (f ~ d^(-exponent), 0 <= exponent < 1, d the
    distance to the endpoint) or "logarithmic".
    """
    kind: str = "none"
    exponent: float = 0.0

    def __post_init__(self):
        if self.kind not in ("none", "algebraic", "logarithmic"):
            raise DomainError(f"unknown endpoint kind {self.kind!r}")
        if self.kind == "algebraic" and not 0.0 <= self.exponent < 1.0:
            raise DomainError(f"algebraic exponent must lie in [0, 1), got {self.exponent}")

    @classmethod
    def algebraic(cls, exponent):
        return cls("algebraic", float(exponent))


SMOOTH = Endpoint()
LOGARITHMIC = Endpoint("logarithmic")


@dataclass(frozen=True)
class SingularityHint:
    left: Endpoint = SMOOTH
    right: Endpoint = SMOOTH


NO_HINT = SingularityHint()


def _min_distance(end, width):
    # closest approach to an endpoint; beyond it the omitted mass is below ~1e-18
    if end.kind == "algebraic":
        d = 1e-18 ** (1.0 / (1.0 - end.exponent))
    elif end.kind == "logarithmic":
        d = 1e-22
    else:
        d = 1e-20
    return max(d * max(width, 1.0), 1e-300)


def _sample(f, x):
    y = f(x)
    try:
        y = float(y)
    except TypeError:
        raise QuadratureEvaluationError(x, f"integrand returned non-real {y!r}") from None
    if not math.isfinite(y):
        raise QuadratureEvaluationError(x, f"integrand returned {y!r}")
    return y


class _TanhSinh:
    """Lazily refined tanh-sinh sum on [a, b]."""

    def __init__(self, f, a, b, hint):
        self.f = f
        self.a = a
        self.b = b
        self.width = b - a
        self.hint = hint
        self.t_max = {}
        widths = self.width
        for side, end in (("left", hint.left), ("right", hint.right)):
            d = _min_distance(end, widths)
            u = 0.5 * math.log(widths / d)
            self.t_max[side] = math.asinh(2.0 * u / math.pi)
        self.nodes = 0
        # last (closest) node actually used on each side, for the tail model
        self.closest = {"left": None, "right": None}

    def _node(self, t):
        u = 0.5 * math.pi * math.sinh(t)
        e = math.exp(-2.0 * u)
        d = self.width * e / (1.0 + e)
        w = self.width * math.pi * math.cosh(t) * e / (1.0 + e) ** 2
        return d, w

    def _side(self, t, side):
        if t > self.t_max[side]:
            return 0.0
        d, w = self._node(t)
        x = self.a + d if side == "left" else self.b - d
        if x <= self.a or x >= self.b:
            return 0.0
        dist = x - self.a if side == "left" else self.b - x
        y = _sample(self.f, x)
        self.nodes += 1
        prev = self.closest[side]
        if prev is None or dist < prev[0]:
            self.closest[side] = (dist, y, w)
        return w * y

    def level_sum(self, level):
        """Sum of weighted samples at the nodes new to this level (h = 2^-level)."""
        h = 2.0 ** -level
        total = 0.0
        if level == 0:
            d, w = self._node(0.0)
            total += w * _sample(self.f, self.a + d)
            self.nodes += 1
            j, step = 1, 1
        else:
            j, step = 1, 2
        t_cap = max(self.t_max.values())
        while j * h <= t_cap:
            t = j * h
            total += self._side(t, "left") + self._side(t, "right")
            j += step
        return total

    def tail(self, h):
        """Analytic estimate of the mass closer to each endpoint than the last node.

        The trapezoid sum already gives the last node full weight where half
        belongs to the omitted part, hence the h w y / 2 term.
        """
        corr = 0.0
        for side, end in (("left", self.hint.left), ("right", self.hint.right)):
            last = self.closest[side]
            if last is None or end.kind == "none":
                continue
            dist, y, w = last
            if end.kind == "algebraic":
                corr += y * dist / (1.0 - end.exponent) - 0.5 * h * w * y
            else:
                # f ~ c ln d integrates to about f(dist) dist over [0, dist]
                corr += y * dist - 0.5 * h * w * y
        return corr


def _tanh_sinh(f, a, b, tol, hint):
    rule = _TanhSinh(f, a, b, hint)
    acc = rule.level_sum(0)
    h = 1.0
    prev = acc * h
    err = math.inf
    for level in range(1, MAX_LEVEL + 1):
        acc += rule.level_sum(level)
        h *= 0.5
        cur = acc * h
        err = abs(cur - prev)
        prev = cur
        if level >= MIN_LEVEL and err <= tol:
            break
    tail = rule.tail(h)
    err += 0.1 * abs(tail)
    return prev + tail, err, rule.nodes


def _split(a, b, breakpoints):
    pts = [a] + sorted(p for p in (breakpoints or ()) if a < p < b) + [b]
    return list(zip(pts[:-1], pts[1:]))


def _algebraic_cap(f, p, sign, alpha, width):
    """Integral of f over the strip of width delta next to a singular point p != 0.

    Abscissae cannot get closer to p than its ulp, so the strip is modelled
    as f ~ C d^(-alpha) + s0 from two samples.  Returns (value, delta, floor),
    floor being the rounding limit left on the rest of the interval.
    """
    delta = 2.0 ** (math.floor(math.log2(max(abs(p), width))) - 30)
    f1 = _sample(f, p + sign * delta)
    f2 = _sample(f, p + sign * 0.5 * delta)
    r = 2.0 ** alpha
    c = (f2 - f1) / (r - 1.0)
    s0 = f1 - c
    value = c * delta / (1.0 - alpha) + s0 * delta
    # beyond the strip f is only sampled at doubles spaced ulp(p) apart, so the
    # graded pieces cannot beat ~ ulp(p) times the variation of f, about |f1|
    floor = math.ulp(p) * abs(f1)
    return value, delta, floor


def _piece(f, lo, hi, tol, hint):
    extra = floor = 0.0
    capped = 0
    left, right = hint.left, hint.right
    inner = []
    if left.kind == "algebraic" and lo != 0.0:
        v, dl, fl = _algebraic_cap(f, lo, 1.0, left.exponent, hi - lo)
        extra += v
        floor += fl
        inner += _grading(lo, dl, 1.0, hi - lo)
        lo += dl
        left = SMOOTH
        capped += 2
    if right.kind == "algebraic" and hi != 0.0:
        v, dr, fl = _algebraic_cap(f, hi, -1.0, right.exponent, hi - lo)
        extra += v
        floor += fl
        inner += _grading(hi, dr, -1.0, hi - lo)
        hi -= dr
        right = SMOOTH
        capped += 2
    pts = [lo] + sorted(p for p in inner if lo < p < hi) + [hi]
    pieces = list(zip(pts[:-1], pts[1:]))
    # refining below the rounding floor cannot help
    share = max(tol, floor) / len(pieces)
    value, err, nodes = extra, floor, 0
    for i, (u, w) in enumerate(pieces):
        h = SingularityHint(left if i == 0 else SMOOTH, right if i == len(pieces) - 1 else SMOOTH)
        v, e, n = _tanh_sinh(f, u, w, share, h)
        value += v
        err += e
        nodes += n
    return value, err, nodes + capped


def _grading(p, delta, sign, width):
    # geometric breakpoints so that each piece sits at a distance from p comparable to its length
    pts = []
    d = 8.0 * delta
    while d < 0.25 * width:
        pts.append(p + sign * d)
        d *= 8.0
    return pts


def integrate(f: Callable[[float], float], a: float, b: float, tol: float = DEFAULT_TOL,
              hint: SingularityHint = NO_HINT,
              breakpoints: Sequence[float] = ()) -> QuadratureResult:
    """Tanh-sinh quadrature of f over (a, b).

    Parameters
    ----------
    f : callable
        Real integrand, evaluated only strictly inside the interval.
    a, b : float
        Finite limits with a < b.
    tol : float
        Absolute tolerance on the difference of successive levels.
    hint : SingularityHint
        Endpoint behaviour at a and b.
    breakpoints : sequence of float
        Interior points where f is singular; each is treated as a
        logarithmic endpoint of the adjoining pieces.

    Returns
    -------
    QuadratureResult
        ``converged`` is False if the level cap was hit first.

    Raises
    ------
    QuadratureEvaluationError
        If f returns a non-finite value; carries the abscissa.
    """
    if not (math.isfinite(a) and math.isfinite(b)) or not a < b:
        raise DomainError(f"need finite a < b, got a={a!r}, b={b!r}")
    if not tol > 0:
        raise DomainError(f"tolerance must be positive, got {tol!r}")
    pieces = _split(a, b, breakpoints)
    share = tol / len(pieces)
    value = err = 0.0
    nodes = 0
    for i, (lo, hi) in enumerate(pieces):
        left = hint.left if i == 0 else LOGARITHMIC
        right = hint.right if i == len(pieces) - 1 else LOGARITHMIC
        v, e, n = _piece(f, lo, hi, share, SingularityHint(left, right))
        value += v
        err += e
        nodes += n
    return QuadratureResult(value, err, nodes, err <= tol)


# Gauss-Kronrod 15-point nodes on [-1, 1]; the odd-indexed ones are Gauss 7 nodes.
_XGK = (0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
        0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
        0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
        0.207784955007898467600689403773245, 0.0)
_WGK = (0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
        0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
        0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
        0.204432940075298892414161999234649, 0.209482141084727828012999174891714)
_WG = (0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
       0.381830050505118944950369775488975, 0.417959183673469387755102040816327)


def _gk15(f, a, b):
    c = 0.5 * (a + b)
    r = 0.5 * (b - a)
    fc = _sample(f, c)
    k = _WGK[7] * fc
    g = _WG[3] * fc
    for i in range(7):
        dx = r * _XGK[i]
        s = _sample(f, c - dx) + _sample(f, c + dx)
        k += _WGK[i] * s
        if i % 2:
            g += _WG[i // 2] * s
    return k * r, abs((k - g) * r)


def integrate_crosscheck(f: Callable[[float], float], a: float, b: float,
                         tol: float = DEFAULT_TOL,
                         breakpoints: Sequence[float] = ()) -> QuadratureResult:
    """Adaptive G7/K15 quadrature by bisection of the worst subinterval.

    The error estimate is the sum of |K15 - G7| over subintervals, which
    is pessimistic for smooth integrands.
    """
    if not (math.isfinite(a) and math.isfinite(b)) or not a < b:
        raise DomainError(f"need finite a < b, got a={a!r}, b={b!r}")
    if not tol > 0:
        raise DomainError(f"tolerance must be positive, got {tol!r}")
    heap = []
    total = err = 0.0
    for lo, hi in _split(a, b, breakpoints):
        v, e = _gk15(f, lo, hi)
        heapq.heappush(heap, (-e, lo, hi, v))
        total += v
        err += e
    nodes = 15 * len(heap)
    frozen = []
    while heap and err > tol and len(heap) + len(frozen) < MAX_SUBINTERVALS:
        e, lo, hi, v = heapq.heappop(heap)
        mid = 0.5 * (lo + hi)
        if hi - lo <= 1e3 * math.ulp(max(abs(lo), abs(hi))):
            # too narrow to bisect without nodes landing on the endpoints
            frozen.append((e, lo, hi, v))
            continue
        v1, e1 = _gk15(f, lo, mid)
        v2, e2 = _gk15(f, mid, hi)
        nodes += 30
        heapq.heappush(heap, (-e1, lo, mid, v1))
        heapq.heappush(heap, (-e2, mid, hi, v2))
        # re-sum to keep rounding from drifting over many updates
        total = math.fsum(item[3] for item in heap + frozen)
        err = math.fsum(-item[0] for item in heap + frozen)
    return QuadratureResult(total, err, nodes, err <= tol)
