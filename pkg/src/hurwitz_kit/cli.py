"""Command-line entry point: evaluate functions, verify identities, emit reports.

Exit status is 0 when every emitted report passes, 1 when some report
fails, 2 on usage, domain or unknown-name errors, and 3 on I/O errors.
"""
import argparse
from dataclasses import dataclass
import json
import math
import sys
from typing import List, Optional, Sequence

from . import hurwitz, specfun
from .errors import HurwitzKitError
from .identities import DEFAULTS, Randomized, check_suite, select
from .identities.export import fmt, registry_json, reports_csv, reports_json

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3
MAX_SAMPLES = 100
# randomized runs without --seed still need a fixed stream for reproducible output
DEFAULT_SEED = 0

# argument kinds per slug; a trailing "int?" is optional
EVAL_FUNCTIONS = {
    "hurwitz_zeta": (hurwitz.hurwitz_zeta, ("real", "real")),
    "hurwitz_zeta_zderiv": (hurwitz.hurwitz_zeta_zderiv, ("real", "real")),
    "riemann_zeta": (specfun.riemann_zeta, ("real",)),
    "riemann_zeta_deriv": (specfun.riemann_zeta_deriv, ("real", "int?")),
    "dirichlet_beta": (specfun.dirichlet_beta, ("real",)),
    "bernoulli_poly": (specfun.bernoulli_poly, ("int", "real")),
    "clausen": (hurwitz.clausen, ("int", "real")),
    "polygamma": (specfun.polygamma, ("int", "real")),
    "berndt_G": (hurwitz.berndt_G, ("real", "real")),
    "berndt_S": (hurwitz.berndt_S, ("int", "real")),
    "berndt_C": (hurwitz.berndt_C, ("int", "real")),
}


class UsageError(Exception):
    """Bad command-line input; reported with exit status 2."""


@dataclass(frozen=True)
class CliConfig:
    command: str
    filter: str = "all"
    tol_override: Optional[float] = None
    format: str = "text"
    seed: Optional[int] = None
    samples: int = 0
    output_path: Optional[str] = None
    timing: bool = False

    def __post_init__(self):
        if self.tol_override is not None and not self.tol_override > 0:
            raise UsageError(f"--tol must be positive, got {self.tol_override!r}")
        if not 0 <= self.samples <= MAX_SAMPLES:
            raise UsageError(f"--samples must be in [0, {MAX_SAMPLES}], got {self.samples}")

    @property
    def strategy(self):
        if self.samples == 0:
            return DEFAULTS
        return Randomized(DEFAULT_SEED if self.seed is None else self.seed, self.samples)


# ---------------------------------------------------------------------------
# Text rendering
# ---------------------------------------------------------------------------

def _table(header: Sequence[str], rows: List[Sequence[str]], right: Sequence[bool]) -> str:
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h)
              for i, h in enumerate(header)]

    def line(cells):
        parts = [c.rjust(w) if r else c.ljust(w) for c, w, r in zip(cells, widths, right)]
        return "  ".join(parts).rstrip()

    sep = "  ".join("-" * w for w in widths)
    return "\n".join([line(header), sep, *(line(r) for r in rows)]) + "\n"


def _params_text(params) -> str:
    if not params:
        return "-"
    return ", ".join(f"{k}={v}" if isinstance(v, int) else f"{k}={v:.6g}" for k, v in params.items())


def _num_text(x: float) -> str:
    return fmt(x) if math.isfinite(x) else "nan"


def _verify_text(reports, timing: bool) -> str:
    header = ["id", "params", "lhs", "rhs", "rel_err", "result"]
    right = [False, False, True, True, True, False]
    if timing:
        header.append("ms")
        right.append(True)
    rows = []
    for r in reports:
        row = [r.id, _params_text(r.params), _num_text(r.lhs_value), _num_text(r.rhs_value),
               "%.2e" % r.rel_err if math.isfinite(r.rel_err) else "nan",
               "PASS" if r.passed else "FAIL"]
        if timing:
            row.append("%.1f" % (r.wall_time * 1e3))
        rows.append(row)
    out = _table(header, rows, right)
    failed = [r for r in reports if not r.passed]
    for r in failed:
        if r.diagnostic:
            out += f"FAIL {r.id} {_params_text(r.params)}: {r.diagnostic}\n"
    out += f"{len(reports)} reports, {len(reports) - len(failed)} passed, {len(failed)} failed\n"
    return out


def _summary_text(reports, idents) -> str:
    family_of = {i.id: i.family for i in idents}
    order, stats = [], {}
    for r in reports:
        fam = family_of[r.id]
        if fam not in stats:
            order.append(fam)
            stats[fam] = {"ids": set(), "n": 0, "ok": 0, "worst": 0.0}
        s = stats[fam]
        s["ids"].add(r.id)
        s["n"] += 1
        s["ok"] += r.passed
        if math.isfinite(r.rel_err):
            s["worst"] = max(s["worst"], r.rel_err)
    rows = [[f, str(len(stats[f]["ids"])), str(stats[f]["n"]), str(stats[f]["ok"]),
             str(stats[f]["n"] - stats[f]["ok"]), "%.2e" % stats[f]["worst"]] for f in order]
    header = ["family", "identities", "reports", "passed", "failed", "max rel_err"]
    out = _table(header, rows, [False, True, True, True, True, True])
    failed = sum(not r.passed for r in reports)
    out += f"{len(reports)} reports, {len(reports) - failed} passed, {failed} failed\n"
    return out


def _list_text(idents) -> str:
    rows = [[i.id, i.family, i.kind, ", ".join(p.name for p in i.params) or "-", i.anchor]
            for i in idents]
    return _table(["id", "family", "kind", "params", "anchor"], rows, [False] * 5)


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def _emit(text: str, config: CliConfig):
    if config.output_path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        with open(config.output_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _run_suite(config: CliConfig):
    return check_suite(config.filter, config.strategy, tol=config.tol_override)


def _render_reports(reports, config: CliConfig, text_renderer) -> str:
    if config.format == "json":
        return reports_json(reports, config.timing)
    if config.format == "csv":
        return reports_csv(reports, config.timing)
    return text_renderer(reports)


def cmd_verify(config: CliConfig) -> int:
    """Run the suite over the filter and print one row per report."""
    reports = _run_suite(config)
    _emit(_render_reports(reports, config, lambda rs: _verify_text(rs, config.timing)), config)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_report(config: CliConfig) -> int:
    """Run the suite; text format prints a per-family summary, json/csv the full reports."""
    idents = select(config.filter)
    reports = _run_suite(config)
    _emit(_render_reports(reports, config, lambda rs: _summary_text(rs, idents)), config)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_list(config: CliConfig) -> int:
    """Print the matching registry entries; json emits the registry export."""
    idents = select(config.filter)
    if config.format == "json":
        text = registry_json(idents)
    elif config.format == "csv":
        text = "id,family,kind,params,default_tol\n" + "".join(
            f"{i.id},{i.family},{i.kind},{' '.join(p.name for p in i.params)},{i.default_tol!r}\n"
            for i in idents)
    else:
        text = _list_text(idents)
    _emit(text, config)
    return EXIT_OK


def _parse_arg(kind: str, raw: str, position: int):
    if kind.startswith("int"):
        try:
            return int(raw)
        except ValueError:
            raise UsageError(f"argument {position} must be an integer, got {raw!r}") from None
    try:
        return float(raw)
    except ValueError:
        raise UsageError(f"argument {position} must be a real number, got {raw!r}") from None


def _format_value(value) -> str:
    if isinstance(value, (complex, hurwitz.ComplexValue)):
        w = complex(value)
        return f"{fmt(w.real)} {fmt(w.imag)}"
    return fmt(float(value))


def cmd_eval(slug: str, args: Sequence[str], config: Optional[CliConfig] = None) -> int:
    """Evaluate one named function and print the value at 15 significant digits."""
    if slug not in EVAL_FUNCTIONS:
        raise UsageError(f"unknown function {slug!r}; choose from {', '.join(EVAL_FUNCTIONS)}")
    fn, kinds = EVAL_FUNCTIONS[slug]
    required = sum(not k.endswith("?") for k in kinds)
    if not required <= len(args) <= len(kinds):
        want = str(required) if required == len(kinds) else f"{required} to {len(kinds)}"
        raise UsageError(f"{slug} takes {want} argument(s), got {len(args)}")
    values = [_parse_arg(k, a, i + 1) for i, (k, a) in enumerate(zip(kinds, args))]
    value = fn(*values)
    text = _format_value(value)
    if config is not None and config.format == "json":
        w = complex(value)
        record = {"function": slug, "args": values, "value": float(fmt(w.real))}
        if isinstance(value, (complex, hurwitz.ComplexValue)):
            record["value"] = [float(fmt(w.real)), float(fmt(w.imag))]
        text = json.dumps(record)
    _emit(text + "\n", config or CliConfig("eval"))
    return EXIT_OK


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------

def _positive_float(raw: str) -> float:
    try:
        x = float(raw)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {raw!r}") from None
    if not x > 0 or not math.isfinite(x):
        raise argparse.ArgumentTypeError(f"must be a positive finite number, got {raw!r}")
    return x


def _samples(raw: str) -> int:
    try:
        n = int(raw)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {raw!r}") from None
    if not 0 <= n <= MAX_SAMPLES:
        raise argparse.ArgumentTypeError(f"must be in [0, {MAX_SAMPLES}], got {n}")
    return n


def _common(p: argparse.ArgumentParser, suite: bool):
    p.add_argument("--filter", default="all", help="'all', a family name, or an id glob")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--output", dest="output_path", default=None, help="write to this file")
    if suite:
        p.add_argument("--tol", dest="tol_override", type=_positive_float, default=None,
                       help="override every identity's default tolerance")
        p.add_argument("--seed", type=int, default=None, help="seed for randomized points")
        p.add_argument("--samples", type=_samples, default=0,
                       help=f"randomized points per identity (0 to {MAX_SAMPLES})")
        p.add_argument("--timing", action="store_true", help="report wall time per check")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hurwitz-kit",
        description="Hurwitz zeta numerics and numerical verification of integral identities.")
    sub = parser.add_subparsers(dest="command", required=True)
    _common(sub.add_parser("verify", help="check identities and print one row per report"), True)
    _common(sub.add_parser("report", help="check identities and print a per-family summary"), True)
    _common(sub.add_parser("list", help="list registry entries"), False)
    ev = sub.add_parser("eval", help="evaluate a function", description=(
        "Evaluate one function: " + ", ".join(
            f"{s}({' '.join(k.rstrip('?') for k in kinds)})"
            for s, (_, kinds) in EVAL_FUNCTIONS.items())))
    ev.add_argument("function", metavar="FUNCTION")
    ev.add_argument("args", nargs="*", metavar="ARG")
    ev.add_argument("--format", choices=("text", "json"), default="text")
    ev.add_argument("--output", dest="output_path", default=None)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv[:1] == ["eval"]:
        argv = _eval_argv(argv[1:])
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 after --help
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if ns.command == "eval":
            config = CliConfig("eval", format=ns.format, output_path=ns.output_path)
            return cmd_eval(ns.function, ns.args, config)
        config = CliConfig(ns.command, filter=ns.filter, format=ns.format,
                           output_path=ns.output_path,
                           tol_override=getattr(ns, "tol_override", None),
                           seed=getattr(ns, "seed", None), samples=getattr(ns, "samples", 0),
                           timing=getattr(ns, "timing", False))
        return {"verify": cmd_verify, "report": cmd_report, "list": cmd_list}[ns.command](config)
    except (UsageError, HurwitzKitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


def _eval_argv(rest: List[str]) -> List[str]:
    # negative numbers such as -0.5 are values, not options: pull the real
    # options out and put every other token after a "--" separator
    head, values = ["eval"], []
    it = iter(rest)
    for tok in it:
        if tok in ("--format", "--output"):
            head += [tok, next(it, "")]
        elif tok.startswith(("--format=", "--output=")) or tok in ("-h", "--help"):
            head.append(tok)
        elif tok != "--":
            values.append(tok)
    return head + ["--"] + values


if __name__ == "__main__":
    sys.exit(main())
