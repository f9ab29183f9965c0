"""Command-line front end: ``heckesectors <subcommand> ...``.

Exit codes: 0 ok, 2 usage or parse error, 3 boundary system infeasible.
The defaults for ``--cap`` and ``--tol`` can be overridden with the
``HECKESECTORS_CAP`` and ``HECKESECTORS_TOL`` environment variables.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from fractions import Fraction

from . import density, empirical, moments, poles, repring

EXIT_OK, EXIT_USAGE, EXIT_INFEASIBLE = 0, 2, 3


def _exact(x: Fraction) -> str:
    return str(Fraction(x))


def _dec(x) -> str:
    return f"{float(x):.12g}"


def _rad(x: float) -> str:
    return f"{x:.5f}"


def _floor(x: float, digits: int) -> str:
    """Truncate towards zero so a printed lower bound stays a lower bound."""
    scale = 10**digits
    return f"{math.floor(x * scale) / scale:.{digits}f}"


def _fraction_arg(s: str) -> Fraction:
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number or fraction: {s!r}") from None


def _positive_r(s: str) -> int:
    try:
        r = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"r must be an integer, got {s!r}") from None
    if r < 2:
        raise argparse.ArgumentTypeError("r must be >= 2")
    return r


def _nonneg(s: str) -> int:
    v = int(s)
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def _s_list(s: str) -> list[float]:
    try:
        vals = [float(v) for v in s.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad s list {s!r}") from None
    if not vals or any(v <= 1 for v in vals):
        raise argparse.ArgumentTypeError("every s must exceed 1")
    return vals


def _env_float(name: str, default: float) -> float:
    raw = os.environ.get(name)
    if raw is None:
        return default
    return float(Fraction(raw))


def emit(rows: list[dict], fmt: str, out=None, title: str | None = None) -> None:
    """Write a list of flat records as an aligned table, csv or json."""
    out = out or sys.stdout
    if fmt == "json":
        out.write(json.dumps(rows, indent=1, ensure_ascii=False) + "\n")
        return
    cols: list[str] = []
    for row in rows:
        cols.extend(c for c in row if c not in cols)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        out.write(buf.getvalue())
        return
    if title:
        out.write(title + "\n")
    if not rows:
        out.write("(empty)\n")
        return
    cells = [cols] + [[str(row.get(c, "")) for c in cols] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(cols))]
    for r in cells:
        out.write("  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip() + "\n")


# -- subcommands -------------------------------------------------------------------------


def cmd_decompose(args) -> int:
    if args.m + args.n < 1:
        raise _UsageError("need m + n >= 1")
    dec = repring.tensor_power(args.m, args.n)
    if args.format == "table":
        print(", ".join(f"{repring.format_symdet(c)}: {v}" for c, v in dec.items()))
    else:
        emit([{"sym": c.a, "det": c.b, "label": repring.format_symdet(c), "multiplicity": v}
              for c, v in dec.items()], args.format)
    return EXIT_OK


def cmd_atable(args) -> int:
    rows = []
    for n in range(9):
        p = poles.a_table(n, args.r)
        rows.append({"n": n, "lo": p.lo, "hi": p.hi, "A": poles.a_table_label(p)})
    if args.format == "table":
        for row in rows:
            print(f"n={row['n']}: {row['A']}")
    else:
        emit(rows, args.format)
    return EXIT_OK


def cmd_constants(args) -> int:
    mb = moments.moment_bounds(args.r)
    q4 = mb.q4
    rows = [{"name": "q3", "exact": _exact(mb.q3), "decimal": _dec(mb.q3), "kind": "eq"}]
    if args.phi is not None:
        exact = _exact(q4.constant) if q4.is_constant else ""
        rows.append({"name": f"q4(phi={args.phi})", "exact": exact, "decimal": _dec(q4(args.phi)), "kind": "eq"})
    else:
        rows.append({"name": "q4", "exact": str(q4), "decimal": _dec(q4.constant) if q4.is_constant else "",
                     "kind": "eq"})
    rows.append({"name": "q6", "exact": str(mb.q6), "decimal": "", "kind": "le"})
    rows.append({"name": "q6_upper", "exact": _exact(mb.q6_upper), "decimal": _dec(mb.q6_upper), "kind": "le"})
    rows.append({"name": "q8_upper", "exact": _exact(mb.q8_upper), "decimal": _dec(mb.q8_upper), "kind": "le",
                 "times_256": f"{moments.q8_table_value(args.r)}/256"})
    if args.r >= 6:
        u = moments.q8_uniform(6)
        rows.append({"name": "q8_uniform_r>=6", "exact": _exact(u), "decimal": _dec(u), "kind": "le",
                     "times_256": f"{int(u * 256)}/256"})
    if args.format == "table":
        for row in rows:
            extra = f"  (2^8·q8 = {row['times_256']})" if "times_256" in row else ""
            rel = "=" if row["kind"] == "eq" else "≤"
            if row["exact"] and row["decimal"] and row["exact"] != row["decimal"]:
                value = f"{row['exact']} ≈ {row['decimal']}"
            else:
                value = row["exact"] or row["decimal"]
            print(f"{row['name']} {rel} {value}{extra}")
    else:
        emit(rows, args.format)
    return EXIT_OK


def cmd_sector(args) -> int:
    res = density.theorem_pipeline(args.r, args.cap_override)
    rows = [{
        "r": res.r, "threshold": res.threshold, "Q": res.Q, "cap": res.cap,
        "half_angle_rad": res.half_angle, "half_angle_deg": math.degrees(res.half_angle),
        "full_angle_rad": res.full_angle,
    }]
    if args.r <= 5:
        rows[0]["ray_sector_rad"] = density.min_guaranteed_sector(args.r)
    for b in res.branches:
        rows.append({"branch": b.label, "q4": b.q4, "threshold": b.threshold, "min_abs": b.min_abs})
    if args.format == "table":
        r0 = rows[0]
        print(f"r = {res.r}  cap = {res.cap:.6g}")
        print(f"threshold = {res.threshold:.5f}")
        print(f"Q = {res.Q}")
        print(f"half-angle = {_rad(res.half_angle)} rad = {math.degrees(res.half_angle):.3f}°")
        print(f"full sector = {_rad(res.full_angle)} rad")
        if "ray_sector_rad" in r0:
            print(f"ray-arrangement sector = {_rad(r0['ray_sector_rad'])} rad")
        for b in res.branches:
            line = f"branch {b.label}: Re(a e^-iφ) > {_floor(b.threshold, 4)}"
            if b.min_abs > b.threshold:
                line += f", |a| > {_floor(b.min_abs, 3)}"
            print(line)
    else:
        emit(rows, args.format)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        ds = empirical.load_dataset(args.data)
    except (empirical.DatasetParseError, ValueError, OSError) as err:
        print(f"error: {args.data}: {err}", file=sys.stderr)
        return EXIT_USAGE
    for w in ds.warnings:
        print(f"warning: {w}", file=sys.stderr)
    rep = empirical.compare_report(ds, args.r, args.s, phi=args.phi, cap=args.cap)
    if not len(ds):
        rep.rows = []
    if args.format == "json":
        sys.stdout.write(rep.to_json() + "\n")
    elif args.format == "csv":
        sys.stdout.write(rep.to_csv())
    else:
        sys.stdout.write(rep.to_table() if rep.rows else "(empty)\n")
    return EXIT_OK


def cmd_poles(args) -> int:
    k = args.m + args.n
    h = poles.Hypotheses(args.r)
    builders = {
        3: [poles.k3_factorization],
        4: [poles.k4_factorization],
        6: [poles.k6_factorization_sym3, poles.k6_factorization_sym4],
        8: [poles.k8_factorization],
    }
    if k not in builders:
        raise _UsageError("m + n must be 3, 4, 6 or 8")
    rows = []
    for build in builders[k]:
        f = build(args.n)
        p = poles.pole_order_product(f, h)
        rows.append({"factorization": f.label, "verified": repring.verify_factorization(args.m, args.n, f),
                     "lo": p.lo, "hi": p.hi, "product": str(f)})
    total = poles.moment_pole_order(k, args.n, h)
    rows.append({"factorization": "reconciled", "verified": True, "lo": total.lo, "hi": total.hi, "product": ""})
    emit(rows, args.format)
    return EXIT_OK


def cmd_boundary(args) -> int:
    sol = density.solve_boundary(args.q4, args.q6, args.q8, args.cap, tol=args.tol)
    row = {"d": sol.d, "beta": sol.beta, "alpha": sol.alpha, "threshold": sol.threshold,
           "cap": sol.cap, "residual_s": sol.residuals[0], "residual_t": sol.residuals[1]}
    if args.scan:
        sc = density.threshold_scan(args.q4, args.q6, args.q8, args.cap, args.grid)
        row.update({"scan_argmin_d": sc.argmin_d, "scan_min_threshold": sc.min_threshold,
                    "scan_matches": sc.matches_solution, "s_only": sc.s_only})
    emit([row], args.format)
    return EXIT_OK


def cmd_lemma(args) -> int:
    rows = []
    if args.Q is not None:
        b = density.ks_bound(args.Q if args.Q.denominator != 1 else int(args.Q))
        rows.append({"Q": str(args.Q), "bound_exact": _exact(b), "bound": _dec(b)})
    if args.invert is not None:
        q = density.min_Q_for_cap(float(args.invert))
        rows.append({"cap": str(args.invert), "min_Q": f"{q:.9f}"})
    if not rows:
        raise _UsageError("give --Q and/or --invert")
    emit(rows, args.format)
    return EXIT_OK


def cmd_lines(args) -> int:
    arr = density.argument_lines(args.r)
    emit([{"k": k, "rad": _rad(t), "deg": f"{math.degrees(t):.3f}"} for k, t in enumerate(arr.rays)],
         args.format)
    return EXIT_OK


def cmd_check_sector(args) -> int:
    if not 2 <= args.r <= 5:
        raise _UsageError("check-sector needs 2 <= r <= 5")
    res = density.low_order_sector_check(args.r, args.center, args.angle, args.step)
    emit([{"r": args.r, "center": args.center, "angle": args.angle, "ok": res.ok,
           "phi_witness": None if res.phi_witness is None else _rad(res.phi_witness),
           "threshold_used": None if res.threshold_used is None else round(res.threshold_used, 4)}],
         args.format)
    return EXIT_OK


def cmd_synth(args) -> int:
    ds = empirical.synth_dataset(args.seed, args.model, args.count, args.r)
    if args.out:
        empirical.save_dataset(ds, args.out)
        print(f"wrote {len(ds)} records to {args.out}", file=sys.stderr)
    else:
        emit([{"norm": rec.norm, "re": rec.a.real, "im": rec.a.imag, "mu": rec.mu} for rec in ds.records],
             "csv" if args.format == "table" else args.format)
    return EXIT_OK


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    cap_default = _env_float("HECKESECTORS_CAP", density.DEFAULT_CAP)
    tol_default = _env_float("HECKESECTORS_TOL", density.RESIDUAL_TOL)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "csv", "json"), default="table")
    common.add_argument("--tol", type=float, default=tol_default)
    common.add_argument("--grid", type=int, default=10_000)

    p = _Parser(prog="heckesectors", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("decompose", parents=[common], help="Sym-det decomposition of pi^m x conj(pi)^n")
    s.add_argument("--m", type=_nonneg, required=True)
    s.add_argument("--n", type=_nonneg, required=True)
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("atable", parents=[common], help="pole orders A(n, r), n = 0..8")
    s.add_argument("--r", type=_positive_r, required=True)
    s.set_defaults(func=cmd_atable)

    s = sub.add_parser("constants", parents=[common], help="q3, q4, q6, q8 for order r")
    s.add_argument("--r", type=_positive_r, required=True)
    s.add_argument("--phi", type=float)
    s.set_defaults(func=cmd_constants)

    s = sub.add_parser("sector", parents=[common], help="threshold, Q and sector angle")
    s.add_argument("--r", type=_positive_r, required=True)
    s.add_argument("--cap", dest="cap_override", type=lambda v: float(Fraction(v)),
                   default=None if "HECKESECTORS_CAP" not in os.environ else cap_default)
    s.set_defaults(func=cmd_sector)

    s = sub.add_parser("verify", parents=[common], help="compare a dataset with the constants")
    s.add_argument("--data", required=True)
    s.add_argument("--r", type=_positive_r, default=7)
    s.add_argument("--s", type=_s_list, default=list(empirical.DEFAULT_S))
    s.add_argument("--phi", type=float, default=0.0)
    s.add_argument("--cap", type=lambda v: float(Fraction(v)), default=cap_default)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("poles", parents=[common], help="pole order of pi^m x conj(pi)^n at s=1")
    s.add_argument("--m", type=_nonneg, required=True)
    s.add_argument("--n", type=_nonneg, required=True)
    s.add_argument("--r", type=_positive_r, required=True)
    s.set_defaults(func=cmd_poles)

    s = sub.add_parser("boundary", parents=[common], help="solve the boundary system")
    s.add_argument("--q4", type=_fraction_arg, default=Fraction(3, 4))
    s.add_argument("--q6", type=_fraction_arg, default=Fraction(25, 16))
    s.add_argument("--q8", type=_fraction_arg, default=Fraction(519, 128))
    s.add_argument("--cap", type=lambda v: float(Fraction(v)), default=cap_default)
    s.add_argument("--scan", action="store_true")
    s.set_defaults(func=cmd_boundary)

    s = sub.add_parser("lemma", parents=[common], help="large-eigenvalue density bound")
    s.add_argument("--Q", type=_fraction_arg)
    s.add_argument("--invert", type=_fraction_arg, metavar="CAP")
    s.set_defaults(func=cmd_lemma)

    s = sub.add_parser("lines", parents=[common], help="possible eigenvalue arguments for order r")
    s.add_argument("--r", type=_positive_r, required=True)
    s.set_defaults(func=cmd_lines)

    s = sub.add_parser("check-sector", parents=[common], help="ray-arrangement sector check (r <= 5)")
    s.add_argument("--r", type=_positive_r, required=True)
    s.add_argument("--center", type=float, required=True)
    s.add_argument("--angle", type=float, required=True)
    s.add_argument("--step", type=float, default=1e-3)
    s.set_defaults(func=cmd_check_sector)

    s = sub.add_parser("synth", parents=[common], help="write a synthetic dataset")
    s.add_argument("--seed", type=int, default=1)
    s.add_argument("--model", choices=("rays", "uniform-angle"), default="rays")
    s.add_argument("--count", type=_nonneg, default=1000)
    s.add_argument("--r", type=_positive_r)
    s.add_argument("--out")
    s.set_defaults(func=cmd_synth)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.tol <= 0 or args.grid < 10:
        print("error: need tol > 0 and grid >= 10", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (density.InfeasibleError, density.ConstraintError) as err:
        print(f"infeasible: {err}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (_UsageError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
