"""Command-line front end with machine-readable output.

Standard output carries exactly one JSON document (or CSV for table);
progress notes go to standard error.  Exit codes: 0 success, 1 bad
input or environment, 2 internal inconsistency (a mathematical check
failed, which means a defect, not a user error).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import engine, forms, gyz, nodepoly
from .series import SeriesError
from .tangency import InvalidState, seq_from_text, seq_to_text

DEFAULT_CACHE_PATH = "./severi.cache"
CACHE_ENV_VAR = "SEVERI_CACHE"


class UsageError(ValueError):
    """Bad command line: unknown flag, missing argument, unparsable value."""


class UnsupportedFormat(ValueError):
    """--format csv is only available for the table subcommand."""


# failures of internal cross-checks: the math is wrong, not the input
_INCONSISTENCY_ERRORS = (
    engine.CacheCorruption,
    gyz.InconsistentSystem,
    gyz.NonIntegralPrediction,
    nodepoly.DegreeCheckFailed,
    nodepoly.NotQuadratic,
)

_INPUT_ERRORS = (
    UsageError,
    UnsupportedFormat,
    InvalidState,
    SeriesError,
    engine.VersionMismatch,
    engine.ParseError,
    gyz.DegreeTooSmall,
    nodepoly.InvalidInvariants,
    ValueError,
    OSError,
)


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit(2); we map usage to 1
        raise UsageError(message)


def _progress(message: str) -> None:
    print(message, file=sys.stderr)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="severi", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--format", choices=["json", "csv"], default="json")
        p.add_argument("--cache", default=None, metavar="PATH")
        p.add_argument("--no-cache", action="store_true")
        return p

    p = add("count", "one Severi degree, optionally with tangency conditions")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--alpha", default=None, metavar="SEQ")
    p.add_argument("--beta", default=None, metavar="SEQ")

    p = add("table", "all Severi degrees up to a degree and node bound")
    p.add_argument("--dmax", type=int, required=True)
    p.add_argument("--deltamax", type=int, required=True)

    p = add("nodepoly", "fit one node polynomial")
    p.add_argument("--delta", type=int, required=True)

    p = add("threshold", "least degree from which the node polynomial counts")
    p.add_argument("--delta", type=int, required=True)

    p = add("logforms", "quadratic forms in the log of the generating function")
    p.add_argument("--deltamax", type=int, required=True)

    p = add("bell", "complete Bell polynomial of given rational arguments")
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--values", required=True, metavar="RAT[,RAT...]")

    p = add("bseries", "extract B1 and B2 from plane data")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--dlist", required=True, metavar="D[,D...]")

    p = add("predict", "predict counts for a plane degree from extracted B-series")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--dlist", required=True, metavar="D[,D...]")

    p = add("forms", "dump the quasimodular form catalog")
    p.add_argument("--order", type=int, required=True)

    p = add("cache", "inspect or drop the persistent cache")
    p.add_argument("action", choices=["stats", "clear"])

    return parser


def _cache_path(args: argparse.Namespace) -> str:
    if args.cache is not None:
        return args.cache
    return os.environ.get(CACHE_ENV_VAR) or DEFAULT_CACHE_PATH


def _load_store(args: argparse.Namespace) -> tuple[engine.CacheStore, str | None]:
    """The store to compute with, and the path to save back to (if any)."""
    if args.no_cache:
        return engine.CacheStore(), None
    path = _cache_path(args)
    if os.path.exists(path):
        return engine.cache_load(path), path
    return engine.CacheStore(), path


def _parse_int_list(text: str, flag: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise UsageError(f"{flag} expects comma-separated integers, got {text!r}")


def _strings(series) -> list[str]:
    return series.to_strings()


def _run_count(args) -> dict:
    store, path = _load_store(args)
    doc: dict = {"d": args.d, "delta": args.delta}
    alpha = seq_from_text(args.alpha) if args.alpha is not None else ()
    beta = seq_from_text(args.beta) if args.beta is not None else None
    if args.alpha is not None:
        doc["alpha"] = seq_to_text(alpha)
    if args.beta is not None:
        doc["beta"] = seq_to_text(beta)
    value = engine.relative_severi(args.d, args.delta, alpha, beta, cache=store)
    doc["value"] = str(value)
    if path:
        engine.cache_save(store, path)
    return doc


def _run_table(args) -> dict | list[str]:
    store, path = _load_store(args)
    rows = engine.severi_table(args.dmax, args.deltamax, cache=store)
    if path:
        engine.cache_save(store, path)
    if args.format == "csv":
        lines = ["d,delta,value"]
        for d, row in enumerate(rows, start=1):
            for delta, value in enumerate(row):
                lines.append(f"{d},{delta},{value}")
        return lines
    return {
        "dmax": args.dmax,
        "deltamax": args.deltamax,
        "rows": [[str(v) for v in row] for row in rows],
    }


def _run_nodepoly(args) -> dict:
    store, path = _load_store(args)
    poly = nodepoly.fit_node_polynomial(args.delta, cache=store)
    if path:
        engine.cache_save(store, path)
    return {
        "delta": poly.delta,
        "coeffs": [str(c) for c in poly.coeffs],
        "fit_range": list(poly.fit_range),
        "verified": poly.verified_extra,
    }


def _run_threshold(args) -> dict:
    store, path = _load_store(args)
    report = nodepoly.threshold_report(args.delta, cache=store)
    if path:
        engine.cache_save(store, path)
    if report.witness is not None:
        w = report.witness
        _progress(
            f"witness: T_{args.delta}({w.d}) = {w.predicted} vs count {w.actual}"
        )
    return {"delta": report.delta, "threshold": report.threshold}


def _run_logforms(args) -> dict:
    store, path = _load_store(args)
    out = nodepoly.log_forms(args.deltamax, cache=store)
    if path:
        engine.cache_save(store, path)
    return {
        "deltamax": args.deltamax,
        "forms": [
            {"kappa": f.kappa, "a2": str(f.a2), "a1": str(f.a1), "a0": str(f.a0)}
            for f in out
        ],
    }


def _run_bell(args) -> dict:
    from fractions import Fraction

    try:
        values = [Fraction(part) for part in args.values.split(",")]
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"--values expects comma-separated rationals, got {args.values!r}")
    result = nodepoly.bell_polynomial(args.delta, values)
    return {
        "delta": args.delta,
        "values": [str(v) for v in values],
        "value": str(result),
    }


def _run_bseries(args) -> dict:
    store, path = _load_store(args)
    degrees = _parse_int_list(args.dlist, "--dlist")
    _progress(f"extracting B-series to order {args.order} from degrees {degrees}")
    sol = gyz.extract_b_series(args.order, degrees, cache=store)
    if path:
        engine.cache_save(store, path)
    return {
        "order": sol.order,
        "b1": _strings(sol.b1),
        "b2": _strings(sol.b2),
        "d_used": list(sol.d_used),
        "consistent": sol.consistent,
        "integral": sol.integral,
    }


def _run_predict(args) -> dict:
    store, path = _load_store(args)
    degrees = _parse_int_list(args.dlist, "--dlist")
    if args.d in degrees:
        _progress(f"note: --d {args.d} is in --dlist, prediction is in-sample")
    catalog = forms.form_catalog(max(args.order, 1))
    sol = gyz.extract_b_series(args.order, degrees, cache=store, forms=catalog)
    inv = nodepoly.plane_invariants(args.d)
    values = gyz.gyz_predict(inv, sol, forms=catalog, order=args.order)
    if path:
        engine.cache_save(store, path)
    return {
        "d": args.d,
        "order": args.order,
        "values": [str(v) for v in values],
    }


def _run_forms(args) -> dict:
    catalog = forms.form_catalog(args.order)
    return {
        "order": catalog.order,
        "u": _strings(catalog.u),
        "b3": _strings(catalog.b3),
        "b4": _strings(catalog.b4),
        "delta_form": _strings(catalog.delta_form),
    }


def _run_cache(args) -> dict:
    path = _cache_path(args)
    if args.action == "clear":
        existed = os.path.exists(path)
        if existed:
            os.remove(path)
        return {"path": path, "cleared": existed}
    if os.path.exists(path):
        store = engine.cache_load(path)
        return {"path": path, "version": store.version, "entries": len(store)}
    return {"path": path, "version": engine.CACHE_VERSION, "entries": 0}


_RUNNERS = {
    "count": _run_count,
    "table": _run_table,
    "nodepoly": _run_nodepoly,
    "threshold": _run_threshold,
    "logforms": _run_logforms,
    "bell": _run_bell,
    "bseries": _run_bseries,
    "predict": _run_predict,
    "forms": _run_forms,
    "cache": _run_cache,
}


def format_output(doc, fmt: str) -> str:
    """Render a result document; key order is fixed, integers stay exact."""
    if fmt == "json":
        return json.dumps(doc) + "\n"
    if fmt == "csv":
        if not isinstance(doc, list):
            raise UnsupportedFormat("CSV output exists only for the table subcommand")
        return "\n".join(doc) + "\n"
    raise UnsupportedFormat(f"unknown format {fmt!r}")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
        if args.format == "csv" and args.command != "table":
            raise UnsupportedFormat(
                "CSV output exists only for the table subcommand"
            )
        doc = _RUNNERS[args.command](args)
        sys.stdout.write(format_output(doc, args.format))
        return 0
    except _INCONSISTENCY_ERRORS as exc:
        _emit_error(exc)
        return 2
    except _INPUT_ERRORS as exc:
        _emit_error(exc)
        return 1


def _emit_error(exc: Exception) -> None:
    doc = {"error": {"type": type(exc).__name__, "message": str(exc)}}
    sys.stdout.write(json.dumps(doc) + "\n")


if __name__ == "__main__":
    sys.exit(main())
