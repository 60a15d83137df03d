"""Data types shared by the identity catalog and the checker."""
from dataclasses import dataclass, field
from fractions import Fraction
import math
from typing import Callable, Mapping, Optional, Sequence, Union

from ..errors import HurwitzKitError
from ..quad import NO_HINT, SingularityHint

FAMILIES = (
    "fourier", "zeta_zeta", "bernoulli", "exponential", "logsine", "loggamma",
    "zderiv", "catalan", "clausen", "berndt_beta", "eisenstein", "half_interval",
    "trig_power", "positive_z", "polygamma",
)
KINDS = ("integral", "series", "exact")


class UnknownIdentityError(HurwitzKitError, KeyError):
    """No identity (or family, or glob match) with the requested name."""

    def __str__(self):
        return str(self.args[0]) if self.args else "unknown identity"


@dataclass(frozen=True)
class Param:
    """One named parameter with a default and a sampling box [low, high]."""
    name: str
    default: Union[int, float]
    low: Union[int, float]
    high: Union[int, float]
    kind: str = "real"

    def __post_init__(self):
        if self.kind not in ("real", "int"):
            raise ValueError(f"parameter kind must be 'real' or 'int', got {self.kind!r}")
        if not self.low <= self.default <= self.high:
            raise ValueError(f"default of {self.name} outside [{self.low}, {self.high}]")

    def coerce(self, value):
        if self.kind == "int":
            if isinstance(value, bool) or int(value) != value:
                raise TypeError(f"parameter {self.name} must be an integer, got {value!r}")
            return int(value)
        return float(value)

    def schema(self):
        return {"name": self.name, "kind": self.kind, "default": self.default,
                "low": self.low, "high": self.high}


def real(name, default, low, high):
    return Param(name, float(default), float(low), float(high), "real")


def integer(name, default, low, high):
    return Param(name, int(default), int(low), int(high), "int")


@dataclass(frozen=True)
class Integral:
    """scale * int_a^b f(q) dq, evaluated by tanh-sinh with the given hint."""
    f: Callable[[float], float]
    a: float = 0.0
    b: float = 1.0
    hint: SingularityHint = NO_HINT
    breakpoints: Sequence[float] = ()
    scale: float = 1.0


@dataclass(frozen=True)
class Value:
    """An already evaluated LHS term (a series, a pointwise value)."""
    value: float
    error: float = 0.0
    converged: bool = True


Term = Union[Integral, Value]
Side = Callable[[Mapping[str, Union[int, float]]], object]


def _no_constraint(p):
    return None


def _far(p):
    return math.inf


@dataclass(frozen=True)
class Identity:
    """An LHS/RHS pair with its parameter box.

    ``lhs(p)`` returns an Integral, a Value or a list of them (summed);
    ``rhs(p)`` returns a float.  For ``kind == "exact"`` both sides return
    Fractions (or tuples of Fractions) and are compared for equality.

    ``constraint(p)`` returns None or a message saying why p is outside the
    domain.  ``loci(p)`` is the distance from p to the nearest removable
    singularity of the closed form; sampling rejects points closer than
    1e-3 and explicit points closer than 1e-12.
    """
    id: str
    family: str
    anchor: str
    params: Sequence[Param]
    lhs: Side
    rhs: Side
    default_tol: float = 1e-10
    kind: str = "integral"
    constraint: Callable = _no_constraint
    loci: Callable = _far
    note: str = ""
    defaults: Mapping = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"{self.id}: unknown family {self.family!r}")
        if self.kind not in KINDS:
            raise ValueError(f"{self.id}: unknown kind {self.kind!r}")
        if not self.anchor:
            raise ValueError(f"{self.id}: empty anchor")
        object.__setattr__(self, "params", tuple(self.params))
        object.__setattr__(self, "defaults", {p.name: p.default for p in self.params})

    def params_schema(self):
        return [p.schema() for p in self.params]


def exact_equal(a, b):
    if isinstance(a, (tuple, list)):
        return len(a) == len(b) and all(exact_equal(x, y) for x, y in zip(a, b))
    return Fraction(a) == Fraction(b)


def exact_distance(a, b):
    if isinstance(a, (tuple, list)):
        n = max(len(a), len(b))
        a = list(a) + [Fraction(0)] * (n - len(a))
        b = list(b) + [Fraction(0)] * (n - len(b))
        return max((abs(float(Fraction(x) - Fraction(y))) for x, y in zip(a, b)), default=0.0)
    return abs(float(Fraction(a) - Fraction(b)))


def exact_magnitude(a):
    if isinstance(a, (tuple, list)):
        return max((abs(float(x)) for x in a), default=0.0)
    return abs(float(a))
