"""Command line front end.

Every subcommand takes ``--spec`` (a path, or the name of a bundled example
such as ``example1``), ``--format``, ``-o`` and ``--jobs``.  Exit status is 0
on success, 1 when a check fails and 2 on bad input; errors are reported on
stderr as JSON ``{"error": <class name>, "message": ...}``.
"""
from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from pathlib import Path

from . import amoeba, asympt, genfun, serialize
from .cauchy import (
    CauchyProblem,
    DifferenceEquation,
    riordan_initial_data,
    solve,
    well_posed,
)
from .errors import ProblemFileError, RiordanError
from .riordan import RiordanSpec, entry, require_valid, table, validate

EXIT_OK, EXIT_FAIL, EXIT_BAD = 0, 1, 2
BUNDLED = ("example1", "example2_m2", "example2_m3", "example2_m2_riordan",
           "example2_m3_riordan", "example3")


class CheckFailed(Exception):
    pass


def bundled_path(name: str):
    stem = name[:-5] if name.endswith(".json") else name
    if stem not in BUNDLED:
        return None
    return resources.files("riordan_arrays") / "data" / f"{stem}.json"


def read_problem(ref: str):
    """``(spec, raw)`` from a path or bundled name."""
    path = Path(ref)
    if not path.exists():
        bundled = bundled_path(ref)
        if bundled is None:
            raise ProblemFileError(f"no such file or bundled example: {ref}")
        text = bundled.read_text()
    else:
        try:
            text = path.read_text()
        except OSError as exc:
            raise ProblemFileError(f"cannot read {ref}: {exc.strerror}") from None
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProblemFileError(f"{ref}: invalid JSON ({exc.msg})") from None
    return serialize.spec_from_json(raw), raw


def _equation(spec) -> DifferenceEquation:
    if isinstance(spec, CauchyProblem):
        return spec.eq
    return DifferenceEquation.from_spec(spec)


def _checked(spec):
    if isinstance(spec, RiordanSpec):
        return require_valid(spec)
    return spec


def _window(spec, xmax, ymax):
    """Entries on the window: residue formula for Riordan specs, recursion otherwise."""
    if isinstance(spec, RiordanSpec):
        return None
    return spec.solve(xmax, ymax)


def cmd_validate(args, spec, raw):
    if isinstance(spec, RiordanSpec):
        report = validate(spec)
        out = report.as_dict()
        out["well_posed"] = report.ok and bool(well_posed(_equation(spec)))
        return out, EXIT_OK if report.ok else EXIT_FAIL
    report = well_posed(spec.eq)
    return {"valid": report.ok, "violations": [] if report.ok else report.messages,
            "warnings": [], "well_posed": report.ok}, EXIT_OK if report.ok else EXIT_FAIL


def cmd_entry(args, spec, raw):
    if args.x < 0 or args.y < 0:
        raise ValueError("indices must be nonnegative")
    if isinstance(spec, RiordanSpec):
        v = entry(require_valid(spec), args.x, args.y)
    else:
        v = spec.solve(args.x, args.y)[args.x, args.y]
    return serialize.fmt_rational(v), EXIT_OK


def cmd_table(args, spec, raw):
    spec = _checked(spec)
    if isinstance(spec, RiordanSpec):
        t = table(spec, args.xmax, args.ymax, jobs=args.jobs)
    else:
        t = spec.solve(args.xmax, args.ymax)
    return t, EXIT_OK


def cmd_solve(args, spec, raw):
    spec = _checked(spec)
    if isinstance(spec, RiordanSpec):
        eq = DifferenceEquation.from_spec(spec)
        t = solve(eq, riordan_initial_data(spec, args.xmax, args.ymax), args.xmax, args.ymax)
    else:
        t = spec.solve(args.xmax, args.ymax)
    return t, EXIT_OK


def _assemble(spec):
    if isinstance(spec, RiordanSpec):
        return genfun.assemble_riordan(spec)
    return genfun.assemble_problem(spec)


def cmd_genfun(args, spec, raw):
    gf = _assemble(_checked(spec))
    if args.format == "json":
        return serialize.genfun_to_json(gf), EXIT_OK
    return str(gf), EXIT_OK


def cmd_amoeba(args, spec, raw):
    eq = _equation(_checked(spec))
    if args.census:
        census = amoeba.component_census(eq)
        np_ = amoeba.newton_polygon(eq)
        out = census.as_dict()
        out["vertices"] = [list(v) for v in np_.vertices]
        try:
            out["cone"] = [list(g) for g in amoeba.cone_omega(np_).generators]
        except RiordanError as exc:
            out["cone"] = None
            out["cone_error"] = str(exc)
        out["smoothness"] = amoeba.smoothness_probe(eq, (args.tmin, args.tmax))
        return out, EXIT_OK
    rows = amoeba.boundary_table(eq, (args.tmin, args.tmax), args.nt, args.nphi, args.jobs)
    if args.format == "json":
        return {"rows": [{"t": t, "eta_lo": lo, "eta_hi": hi} for t, lo, hi in rows]}, EXIT_OK
    return serialize.cloud_to_csv(rows), EXIT_OK


def cmd_asympt(args, spec, raw):
    if not isinstance(spec, RiordanSpec):
        raise ProblemFileError("asympt needs a riordan problem (d and h)")
    spec = require_valid(spec)
    direction = asympt.Direction(args.p, args.q)
    lambdas = [int(v) for v in args.lambdas.split(",") if v.strip()]
    rows = asympt.convergence_probe(spec, direction, lambdas)
    if args.format == "json":
        res = asympt.dominant_saddle(_equation(spec), direction)
        return {
            "direction": [direction.p, direction.q],
            "z0": [res.z0.real, res.z0.imag], "w0": [res.w0.real, res.w0.imag],
            "H": [complex(res.H).real, complex(res.H).imag],
            "rows": [{"lambda": r.lam, "exact": serialize.fmt_rational(r.exact),
                      "estimate": serialize.fmt_float(r.estimate),
                      "ratio": serialize.fmt_float(r.ratio)} for r in rows],
        }, EXIT_OK
    return serialize.probe_to_csv(rows), EXIT_OK


def _first_mismatch(named, xmax, ymax):
    (n0, t0), *others = named
    for x in range(xmax + 1):
        for y in range(ymax + 1):
            for n1, t1 in others:
                if t0[x, y] != t1[x, y]:
                    return {"x": x, "y": y, n0: serialize.fmt_rational(t0[x, y]),
                            n1: serialize.fmt_rational(t1[x, y])}
    return None


def cmd_verify(args, spec, raw):
    """Residue table, recursion and series expansion must agree on the window.

    When the file stores a ``genfun``, that stored closed form is expanded
    instead of a freshly assembled one, so a corrupted coefficient shows up.
    """
    spec = _checked(spec)
    xmax, ymax = args.xmax, args.ymax
    gf = serialize.genfun_from_json(raw["genfun"]) if "genfun" in raw else _assemble(spec)
    named = []
    if isinstance(spec, RiordanSpec):
        eq = DifferenceEquation.from_spec(spec)
        named.append(("residue", table(spec, xmax, ymax, jobs=args.jobs)))
        named.append(("recursion",
                      solve(eq, riordan_initial_data(spec, xmax, ymax), xmax, ymax)))
    else:
        named.append(("recursion", spec.solve(xmax, ymax)))
    named.append(("series", genfun.series_of(gf, xmax, ymax)))
    bad = _first_mismatch(named, xmax, ymax)
    report = {"ok": bad is None, "window": [xmax, ymax], "methods": [n for n, _ in named],
              "genfun": str(gf)}
    if bad:
        report["first_mismatch"] = bad
    return report, EXIT_OK if bad is None else EXIT_FAIL


def _common(p: argparse.ArgumentParser, fmt_default: str):
    p.add_argument("--spec", required=True,
                   help="problem JSON file or bundled example name")
    p.add_argument("--format", choices=("csv", "json"), default=fmt_default)
    p.add_argument("-o", "--output", help="write output here instead of stdout")
    p.add_argument("--jobs", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="riordan-arrays",
        description="Rational Riordan arrays: tables, recursion, generating functions, "
                    "amoebas and diagonal asymptotics.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a problem file")
    _common(p, "json")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("entry", help="one entry r(x, y)")
    _common(p, "csv")
    p.add_argument("-x", type=int, required=True)
    p.add_argument("-y", type=int, required=True)
    p.set_defaults(func=cmd_entry)

    for name, func, text in (("table", cmd_table, "entries by the residue formula"),
                             ("solve", cmd_solve, "entries by the recursion")):
        p = sub.add_parser(name, help=text)
        _common(p, "csv")
        p.add_argument("--xmax", type=int, default=10)
        p.add_argument("--ymax", type=int, default=10)
        p.set_defaults(func=func)

    p = sub.add_parser("genfun", help="closed-form bivariate generating function")
    _common(p, "csv")
    p.set_defaults(func=cmd_genfun)

    p = sub.add_parser("amoeba", help="amoeba boundary cloud or component census")
    _common(p, "csv")
    p.add_argument("--census", action="store_true")
    p.add_argument("--tmin", type=float, default=-3.0)
    p.add_argument("--tmax", type=float, default=3.0)
    p.add_argument("--nt", type=int, default=200)
    p.add_argument("--nphi", type=int, default=1024)
    p.set_defaults(func=cmd_amoeba)

    p = sub.add_parser("asympt", help="diagonal asymptotics against exact entries")
    _common(p, "csv")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-q", type=int, required=True)
    p.add_argument("--lambdas", default="10,50,200")
    p.set_defaults(func=cmd_asympt)

    p = sub.add_parser("verify", help="cross-check residue, recursion and series")
    _common(p, "json")
    p.add_argument("--xmax", type=int, default=20)
    p.add_argument("--ymax", type=int, default=10)
    p.set_defaults(func=cmd_verify)
    return parser


def _render(result, fmt: str) -> str:
    if isinstance(result, str):
        return result if result.endswith("\n") else result + "\n"
    if hasattr(result, "shape"):
        if fmt == "json":
            return serialize.dump_json(serialize.table_to_json(result))
        return serialize.table_to_csv(result)
    return serialize.dump_json(result)


def _error(exc: Exception) -> int:
    sys.stderr.write(json.dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n")
    return EXIT_BAD


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.jobs < 1:
            raise ValueError("--jobs must be >= 1")
        spec, raw = read_problem(args.spec)
        result, code = args.func(args, spec, raw)
    except (RiordanError, ValueError, ZeroDivisionError, KeyError, TypeError) as exc:
        return _error(exc)
    text = _render(result, args.format)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
