"""JSON and CSV formats for problems, tables and results.

Rationals are strings ``"num/den"``; integers drop the ``/1``.  Polynomials
are arrays of such strings in ascending powers.
"""
from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from pathlib import Path

from .algebra import Polynomial
from .errors import ProblemFileError
from .genfun import BiPoly, BivariateRational
from .laurent import LaurentTail, RationalFunction


def fmt_rational(v) -> str:
    v = Fraction(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def parse_rational(s) -> Fraction:
    if isinstance(s, bool):
        raise ProblemFileError(f"not a rational: {s!r}")
    if isinstance(s, (int, Fraction)):
        return Fraction(s)
    if isinstance(s, str):
        try:
            return Fraction(s.strip())
        except (ValueError, ZeroDivisionError):
            pass
    raise ProblemFileError(f"not a rational: {s!r}")


def poly_to_json(p: Polynomial) -> list:
    return [fmt_rational(c) for c in p.coeffs]


def poly_from_json(data, name: str = "polynomial") -> Polynomial:
    if not isinstance(data, list):
        raise ProblemFileError(f"{name} must be a JSON array of rationals")
    return Polynomial([parse_rational(c) for c in data])


def tail_to_json(t: LaurentTail) -> dict:
    return {"order": t.order, "coeffs": [fmt_rational(c) for c in t.coeffs]}


def tail_from_json(data) -> LaurentTail:
    try:
        coeffs = [parse_rational(c) for c in data["coeffs"]]
        order = int(data["order"])
    except (KeyError, TypeError) as exc:
        raise ProblemFileError(f"bad LaurentTail: {exc}") from None
    if order != len(coeffs) - 1:
        raise ProblemFileError(f"order {order} does not match {len(coeffs)} coefficients")
    return LaurentTail(coeffs)


def bipoly_to_json(b: BiPoly) -> list:
    return [[fmt_rational(c) for c in b.row(j).coeffs] for j in range(b.w_degree + 1)]


def bipoly_from_json(rows) -> BiPoly:
    return BiPoly([[parse_rational(c) for c in r] for r in rows])


def genfun_to_json(gf: BivariateRational) -> dict:
    return {"num": bipoly_to_json(gf.num), "den": bipoly_to_json(gf.den),
            "text": str(gf)}


def genfun_from_json(data) -> BivariateRational:
    return BivariateRational(bipoly_from_json(data["num"]), bipoly_from_json(data["den"]))


def _part_to_json(part):
    if isinstance(part, RationalFunction):
        return {"num": poly_to_json(part.num), "den": poly_to_json(part.den)}
    return [fmt_rational(v) for v in part]


def _part_from_json(data, name):
    if isinstance(data, dict):
        try:
            return RationalFunction(poly_from_json(data["num"], f"{name}.num"),
                                    poly_from_json(data["den"], f"{name}.den"))
        except KeyError as exc:
            raise ProblemFileError(f"{name} needs 'num' and 'den' ({exc})") from None
    if isinstance(data, list):
        return [parse_rational(v) for v in data]
    raise ProblemFileError(f"{name} must be an array or a {{num, den}} object")


def spec_to_json(spec) -> dict:
    """A :class:`RiordanSpec` or :class:`CauchyProblem` as a JSON-ready dict."""
    from .cauchy import CauchyProblem

    if isinstance(spec, CauchyProblem):
        return {"kind": "cauchy", "P": poly_to_json(spec.P), "Q": poly_to_json(spec.Q),
                "phi_row0": _part_to_json(spec.row0),
                "phi_cols": [_part_to_json(c) for c in spec.cols]}
    if not spec.is_rational:
        raise ProblemFileError("only specs with rational d can be serialized")
    return {"kind": "riordan", "P": poly_to_json(spec.P), "Q": poly_to_json(spec.Q),
            "d_num": poly_to_json(spec.d_num), "d_den": poly_to_json(spec.d_den)}


def spec_from_json(data):
    """Inverse of :func:`spec_to_json`; ``kind`` defaults from the keys present."""
    from .cauchy import CauchyProblem
    from .riordan import RiordanSpec

    if not isinstance(data, dict):
        raise ProblemFileError("problem file must hold a JSON object")
    kind = data.get("kind") or ("cauchy" if "phi_row0" in data else "riordan")
    try:
        P = poly_from_json(data["P"], "P")
        Q = poly_from_json(data["Q"], "Q")
        if kind == "riordan":
            return RiordanSpec(P, Q, poly_from_json(data["d_num"], "d_num"),
                               poly_from_json(data["d_den"], "d_den"))
        if kind == "cauchy":
            row0 = _part_from_json(data["phi_row0"], "phi_row0")
            cols = [_part_from_json(c, f"phi_cols[{k}]")
                    for k, c in enumerate(data["phi_cols"])]
            try:
                return CauchyProblem(P, Q, row0, cols)
            except ValueError as exc:
                raise ProblemFileError(str(exc)) from None
    except KeyError as exc:
        raise ProblemFileError(f"missing field {exc}") from None
    except ZeroDivisionError as exc:
        raise ProblemFileError(str(exc)) from None
    raise ProblemFileError(f"unknown kind {kind!r}")


def load_spec(path):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ProblemFileError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return spec_from_json(json.loads(text))
    except json.JSONDecodeError as exc:
        raise ProblemFileError(f"{path}: invalid JSON ({exc.msg})") from None


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def table_to_csv(table) -> str:
    """Rows ``x,y,value`` in x-major order."""
    xs, ys = table.shape
    return _csv(["x", "y", "value"],
                ([x, y, fmt_rational(table[x, y])] for x in range(xs) for y in range(ys)))


def table_to_json(table) -> dict:
    return {"xmax": table.shape[0] - 1, "ymax": table.shape[1] - 1,
            "values": [[fmt_rational(v) for v in row] for row in table]}


def table_from_csv(text: str) -> dict:
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or rows[0] != ["x", "y", "value"]:
        raise ProblemFileError("table CSV must start with header x,y,value")
    return {(int(x), int(y)): parse_rational(v) for x, y, v in rows[1:]}


def fmt_float(v: float) -> str:
    return f"{v:.16e}"


def cloud_to_csv(rows) -> str:
    return _csv(["t", "eta_lo", "eta_hi"],
                ([fmt_float(t), fmt_float(lo), fmt_float(hi)] for t, lo, hi in rows))


def probe_to_csv(rows) -> str:
    return _csv(["lambda", "exact", "estimate", "ratio"],
                ([r.lam, fmt_rational(r.exact), fmt_float(r.estimate), fmt_float(r.ratio)]
                 for r in rows))
