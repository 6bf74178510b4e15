"""Command-line front end.

Every subcommand emits a deterministic data file (CSV or JSON) built from
the exact pushforward machinery; there is no plotting here, any tool can
consume the output. Exit codes: 0 success, 1 numerical-guard failure
(a computation refused its input), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from .densities import make_density, parse_density, sample
from .montecarlo import histogram, ks_statistic, push_samples
from .pushforward import (
    asymptotic_bounded_factor,
    bounded_factor,
    convergence_report,
    default_grid,
    mass_left_of_zero,
    pushforward_cdf,
    pushforward_on_grid,
    sup_error,
)
from .spectral import even_moment_sum, expand_density, normalization_residual

MC_BINS = 50


def parse_ks(text):
    """Parse a k-list: comma-separated integers and inclusive ranges a..b[:step]."""
    out = []
    for part in str(text).split(","):
        part = part.strip()
        if not part:
            raise ValueError(f"empty entry in k list {text!r}")
        if ".." in part:
            lo_s, _, rest = part.partition("..")
            hi_s, _, step_s = rest.partition(":")
            lo, hi = int(lo_s), int(hi_s)
            step = int(step_s) if step_s else 1
            if step < 1 or hi < lo:
                raise ValueError(f"bad range {part!r}: need a <= b and step >= 1")
            out.extend(range(lo, hi + 1, step))
        else:
            out.append(int(part))
    if not out or any(k < 1 for k in out):
        raise ValueError(f"k values must be positive integers, got {text!r}")
    return tuple(out)


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise ValueError(f"must be a positive integer, got {text}")
    return value


def _cell(value):
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return "%.17g" % float(value)
    return str(value)


def _json_value(value):
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        v = float(value)
        return None if math.isnan(v) else v
    return value


def _emit(ns, headers, rows, trailers=()):
    """Write rows (+ trailing summary records) in the selected format.

    CSV: header, data rows, then one row per trailer ("name,value,...").
    JSON: a bare array of row records, or {"rows": [...], trailer: ...}
    when trailers exist. Field names match between formats.
    """
    if ns.format == "json":
        records = [
            {h: _json_value(v) for h, v in zip(headers, row)} for row in rows
        ]
        if trailers:
            payload = {"rows": records}
            for name, value in trailers:
                if isinstance(value, dict):
                    payload[name] = {k: _json_value(v) for k, v in value.items()}
                else:
                    payload[name] = _json_value(value)
            text = json.dumps(payload, indent=2) + "\n"
        else:
            text = json.dumps(records, indent=2) + "\n"
    else:
        lines = [",".join(headers)]
        for row in rows:
            lines.append(",".join(_cell(v) for v in row))
        for name, value in trailers:
            if isinstance(value, dict):
                cells = [name] + [_cell(v) for v in value.values()]
            else:
                cells = [name, _cell(value)]
            lines.append(",".join(cells))
        text = "\n".join(lines) + "\n"
    if ns.out == "-":
        sys.stdout.write(text)
    else:
        with open(ns.out, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_pdf(ns):
    res = pushforward_on_grid(ns.dist, ns.k, ns.grid)
    rows = list(zip(res.z, res.pdf, res.bounded, res.limit_pdf, res.abs_error))
    _emit(ns, ("z", "f_k", "s_k", "limit_pdf", "abs_error"), rows)


def cmd_dance(ns):
    rows = []
    for k in ns.ks:
        res = pushforward_on_grid(ns.dist, k, ns.grid)
        mass = mass_left_of_zero(ns.dist, k)
        rows.extend((k, z, f, mass) for z, f in zip(res.z, res.pdf))
    _emit(ns, ("k", "z", "f_k", "mass_left_of_zero"), rows)


def cmd_converge(ns):
    d = ns.dist
    report = convergence_report(d, ns.ks, ns.grid)
    series = expand_density(d) if d.expandable else None
    z = default_grid(ns.grid)
    rows = []
    for k, err in zip(report.ks, report.sup_errors):
        if series is not None and k >= 2:
            asym = float(np.max(np.abs(
                bounded_factor(d, k, z) - asymptotic_bounded_factor(series, k, z))))
        else:
            asym = float("nan")
        rows.append((k, err, asym))
    trailer = ("fitted_order", {"value": report.fitted_order, "label": report.label})
    _emit(ns, ("k", "sup_error", "asymptotic_prediction_error"), rows, (trailer,))


def cmd_expand(ns):
    series = expand_density(ns.dist, order=ns.order)
    rows = list(enumerate(series.coeffs))
    trailers = (
        ("normalization_residual", normalization_residual(series)),
        ("even_moment_sum", even_moment_sum(series)),
    )
    _emit(ns, ("l", "mu_l"), rows, trailers)


def cmd_mc(ns):
    d = ns.dist
    pushed = push_samples(sample(d, ns.n, ns.seed), ns.k)
    edges, density = histogram(pushed, MC_BINS)
    rows = list(zip(edges[:-1], edges[1:], density))
    exact = ks_statistic(pushed, lambda x: pushforward_cdf(d, ns.k, x))
    limit = ks_statistic(pushed, make_density("arcsine").cdf)
    trailers = (
        ("ks_exact", {"statistic": exact.statistic, "threshold": exact.threshold,
                      "pass": exact.passed}),
        ("ks_limit", {"statistic": limit.statistic, "threshold": limit.threshold,
                      "pass": limit.passed}),
    )
    _emit(ns, ("bin_left", "bin_right", "density"), rows, trailers)


def cmd_invariance(ns):
    arc = make_density("arcsine")
    rows = [(k, sup_error(arc, k, ns.grid)) for k in range(1, ns.k + 1)]
    _emit(ns, ("k", "max_abs_deviation"), rows)


def _add_io_flags(sp):
    sp.add_argument("--format", choices=("csv", "json"), default="csv",
                    help="output format")
    sp.add_argument("--out", default="-", metavar="PATH",
                    help="output path, - for stdout")


def _add_grid_flag(sp):
    sp.add_argument("--grid", type=_positive_int, default=201, metavar="N",
                    help="number of evaluation grid points")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="chebpush",
        description="Exact and asymptotic distributions of T_k(X) for random "
                    "variables on [-1, 1], and their convergence to the arcsine law.")
    sub = parser.add_subparsers(dest="command", required=True)
    fmt = argparse.ArgumentDefaultsHelpFormatter

    p = sub.add_parser("pdf", formatter_class=fmt,
                       help="exact pushforward density on a grid")
    p.add_argument("--dist", type=parse_density, required=True,
                   help="density selector: arcsine | uniform | ramp | uniform01 | gauss:MU,SIGMA")
    p.add_argument("--k", type=_positive_int, required=True, help="Chebyshev index")
    _add_grid_flag(p)
    _add_io_flags(p)
    p.set_defaults(func=cmd_pdf)

    p = sub.add_parser("dance", formatter_class=fmt,
                       help="pushforward across a ladder of k for a centered bump, "
                            "with the mass left of zero per k")
    p.add_argument("--dist", type=parse_density, default="gauss:0,0.25",
                   help="density selector")
    p.add_argument("--ks", type=parse_ks, default="2..24",
                   help="k list: comma values and/or inclusive ranges a..b[:step]")
    _add_grid_flag(p)
    _add_io_flags(p)
    p.set_defaults(func=cmd_dance)

    p = sub.add_parser("converge", formatter_class=fmt,
                       help="sup-error trace over k with a fitted log-log order")
    p.add_argument("--dist", type=parse_density, required=True, help="density selector")
    p.add_argument("--ks", type=parse_ks, default="8,16,32,64,128", help="k list")
    _add_grid_flag(p)
    _add_io_flags(p)
    p.set_defaults(func=cmd_converge)

    p = sub.add_parser("expand", formatter_class=fmt,
                       help="Chebyshev coefficients of a density, with the "
                            "normalization residual and even-coefficient sum")
    p.add_argument("--dist", type=parse_density, required=True, help="density selector")
    p.add_argument("--order", type=_positive_int, default=64, help="truncation order")
    _add_io_flags(p)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("mc", formatter_class=fmt,
                       help="seeded Monte Carlo: histogram of pushed samples plus KS "
                            "distances against the exact law and the arcsine limit")
    p.add_argument("--dist", type=parse_density, required=True, help="density selector")
    p.add_argument("--k", type=_positive_int, required=True, help="Chebyshev index")
    p.add_argument("--n", type=_positive_int, default=100000, help="sample count")
    p.add_argument("--seed", type=int, default=42, help="stream seed")
    _add_io_flags(p)
    p.set_defaults(func=cmd_mc)

    p = sub.add_parser("invariance", formatter_class=fmt,
                       help="max deviation of the arcsine pushforward from its own "
                            "law, for every k up to a cap")
    p.add_argument("--k", type=_positive_int, default=64, metavar="KMAX",
                   help="largest Chebyshev index checked")
    _add_grid_flag(p)
    _add_io_flags(p)
    p.set_defaults(func=cmd_invariance)

    return parser


def main(argv=None):
    ns = build_parser().parse_args(argv)
    try:
        ns.func(ns)
    except ValueError as exc:
        print(f"chebpush: error: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        return 0
    return 0


def main_entry():
    raise SystemExit(main())
