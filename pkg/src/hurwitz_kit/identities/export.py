"""Serialize the registry and check reports as JSON or CSV.

Every result number is written with 15 significant digits, so parsing the
output back gives exactly the printed values; parameter points keep their
shortest round-trip form so a printed point can be re-run exactly.
Non-finite numbers become JSON null and an empty CSV cell.
"""
import csv
import io
import json
import math
from typing import Iterable, List, Optional, Sequence

from ._core import Identity
from .check import CheckReport

REPORT_COLUMNS = ("id", "param_json", "lhs", "rhs", "abs_err", "rel_err", "quad_err", "pass", "ms")


def fmt(x: float) -> str:
    """``x`` at 15 significant digits; 'nan', 'inf' or '-inf' when not finite."""
    return "%.15g" % x


def _num(x: float) -> Optional[float]:
    # %.15g round-trips through a double unchanged, so json.dumps prints the same digits
    return float(fmt(x)) if math.isfinite(x) else None


def params_json(params) -> str:
    """Compact JSON object of one parameter point, keys in declaration order."""
    return json.dumps(dict(params), separators=(",", ":"))


def identity_record(ident: Identity) -> dict:
    return {"id": ident.id, "family": ident.family, "anchor": ident.anchor,
            "params_schema": ident.params_schema(), "default_tol": ident.default_tol}


def registry_json(idents: Iterable[Identity]) -> str:
    return json.dumps([identity_record(i) for i in idents], indent=2) + "\n"


def _ms(report: CheckReport, timing: bool) -> Optional[float]:
    return _num(report.wall_time * 1e3) if timing else None


def report_record(report: CheckReport, timing: bool = False) -> dict:
    """One report as a JSON-ready dict.  ``ms`` is null unless ``timing``."""
    return {"id": report.id,
            "params": dict(report.params),
            "lhs": _num(report.lhs_value), "rhs": _num(report.rhs_value),
            "abs_err": _num(report.abs_err), "rel_err": _num(report.rel_err),
            "quad_err": _num(report.lhs_quadrature_error),
            "pass": bool(report.passed), "ms": _ms(report, timing),
            "tol": report.tol, "diagnostic": report.diagnostic}


def reports_json(reports: Sequence[CheckReport], timing: bool = False) -> str:
    return json.dumps([report_record(r, timing) for r in reports], indent=2) + "\n"


def _cell(x: Optional[float]) -> str:
    return "" if x is None else fmt(x)


def reports_csv(reports: Sequence[CheckReport], timing: bool = False) -> str:
    """CSV with the fixed columns of REPORT_COLUMNS and a header row."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(REPORT_COLUMNS)
    for r in reports:
        w.writerow([r.id, params_json(r.params), _cell(_num(r.lhs_value)), _cell(_num(r.rhs_value)),
                    _cell(_num(r.abs_err)), _cell(_num(r.rel_err)),
                    _cell(_num(r.lhs_quadrature_error)), "true" if r.passed else "false",
                    _cell(_ms(r, timing))])
    return buf.getvalue()


def parse_reports_csv(text: str) -> List[dict]:
    """Inverse of reports_csv: rows as dicts with floats, bools and parsed params."""
    rows = []
    for row in csv.DictReader(io.StringIO(text)):
        out = {"id": row["id"], "params": json.loads(row["param_json"])}
        for key in ("lhs", "rhs", "abs_err", "rel_err", "quad_err", "ms"):
            out[key] = float(row[key]) if row[key] else None
        out["pass"] = row["pass"] == "true"
        rows.append(out)
    return rows
