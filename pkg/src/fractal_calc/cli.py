"""``fractal-calc`` command-line front end.

Tabular results go to stdout (or ``--out``) as CSV with a header row;
``verify`` writes JSON lines. Exit codes: 0 success, 1 usage or parse error,
2 numerical divergence, 3 internal error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

import numpy as np

from .calculus import Contour, IntegralScheme, contour_integral, lf_integral, lfd_numeric
from .claims import claim_ids, run_all, run_claim
from .errors import DivergenceError, FractalCalcError, NonConvergenceError
from .expr import as_function, evaluate, lfd_symbolic, to_string
from .gamma import FractalOrder
from .geometry import FCircleSpec, circle_param, sphere_param
from .mittag_leffler import period_solve
from .parser import parse_expr, parse_series
from .series import lfd, lfi
from .transforms import QuadSpec, lf_fourier, lf_laplace

__all__ = ["main", "run", "build_parser"]

EXIT_OK, EXIT_USAGE, EXIT_DIVERGENCE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _alpha(text: str) -> float:
    try:
        return FractalOrder(float(text)).alpha
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _point(text: str) -> complex | float:
    value = complex(text.replace(" ", ""))
    return value.real if value.imag == 0 and "j" not in text else value


def _fmt(v) -> str:
    return repr(float(v))


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="fractal-calc", description="Local fractional calculus of fractal order alpha.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def command(name, help_text, columns):
        sp = sub.add_parser(name, help=help_text, description=f"{help_text}\n\nCSV columns: {columns}",
                            formatter_class=argparse.RawDescriptionHelpFormatter)
        sp.add_argument("--alpha", type=_alpha, required=True, help="fractal order in (0, 1]")
        sp.add_argument("--out", help="write output to this path instead of stdout")
        return sp

    sp = command("eval", "Evaluate an expression.", "x,value (x,re,im for complex points); a single --at prints the bare value")
    sp.add_argument("--expr", required=True)
    sp.add_argument("--at", type=_point, action="append", help="evaluation point; repeatable")
    sp.add_argument("--from", dest="lo", type=float)
    sp.add_argument("--to", dest="hi", type=float)
    sp.add_argument("--n", type=int, default=10, help="grid intervals for --from/--to")

    sp = command("derive", "Local fractional derivative by the rule system.",
                 "x,value (symbolic) or x,estimate,converged (--numeric); without --at prints the derivative")
    sp.add_argument("--expr", required=True)
    sp.add_argument("--at", type=float, action="append")
    sp.add_argument("--numeric", action="store_true", help="use the limit definition instead of the rules")

    sp = command("integrate", "Local fractional integral over [from, to].", "scheme,n,value,converged")
    sp.add_argument("--expr", required=True)
    sp.add_argument("--from", dest="lo", type=float, required=True)
    sp.add_argument("--to", dest="hi", type=float, required=True)
    sp.add_argument("--scheme", default="stieltjes", help="stieltjes | literal:<n> | literal-limit")
    sp.add_argument("--n", type=int, help="fixed partition size (default: refine by doubling)")

    sp = command("contour", "Local fractional integral along a polyline.", "re,im")
    sp.add_argument("--expr", required=True)
    sp.add_argument("--points", required=True, help="semicolon-separated plane points, e.g. '1;2+1j;3'")
    sp.add_argument("--closed", action="store_true")
    sp.add_argument("--scheme", default="stieltjes")
    sp.add_argument("--n", type=int, help="pieces per segment")

    for name, var, col in (("fourier", "omega", "omega,re,im"), ("laplace", "s", "s,value")):
        sp = command(name, f"Local fractional {name.capitalize()} transform.", col)
        sp.add_argument("--expr", required=True)
        sp.add_argument(f"--{var}", type=float, action="append", required=True)
        sp.add_argument("--cutoff", type=float, default=40.0)
        sp.add_argument("--n", type=int, default=100_000)
        sp.add_argument("--scheme", default="stieltjes", help="stieltjes | literal:<n>")

    sp = command("period", "Search for P with E(i^a P^a) = 1.", "p,residual")
    sp.add_argument("--pmax", type=float, default=4 * math.pi)
    sp.add_argument("--grid", type=int, default=20_000)

    sp = command("circle", "Fractional circle parametrization.", "theta,xa,ya,residual")
    sp.add_argument("--radius", type=float, default=1.0)
    sp.add_argument("--n", type=int, default=100)

    sp = command("sphere", "Fractional sphere parametrization.", "eta,theta,ua,va,wa,residual")
    sp.add_argument("--radius", type=float, default=1.0)
    sp.add_argument("--n", type=int, default=20)

    sp = sub.add_parser("verify", help="Run the identity registry.",
                        description="Run the identity registry; one JSON object per line with keys "
                                    "claim, eq, alpha, grid, max_residual, tol, status.")
    sp.add_argument("--alpha", type=_alpha, nargs="+", required=True)
    sp.add_argument("--claim", action="append", choices=claim_ids())
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out")

    sp = command("series", "Fractional power series operations.", "x,value for --op eval")
    sp.add_argument("--series", required=True, help="literal '[c0, c1, ...]' (optionally '@alpha')")
    sp.add_argument("--op", choices=("show", "lfd", "lfi", "eval"), default="show")
    sp.add_argument("--at", type=float, action="append")
    return p


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([c if isinstance(c, str) else _fmt(c) for c in row])
    return buf.getvalue()


def _scheme(args, fixed_n=None):
    try:
        return IntegralScheme.parse(args.scheme, fixed_n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _cmd_eval(args):
    node = parse_expr(args.expr)
    points = list(args.at or [])
    if args.lo is not None or args.hi is not None:
        if args.lo is None or args.hi is None:
            raise UsageError("--from and --to go together")
        points += list(np.linspace(args.lo, args.hi, args.n + 1))
    if not points:
        raise UsageError("give --at or --from/--to")
    if args.at and len(points) == 1:
        v = evaluate(node, points[0], args.alpha)
        return _fmt(v) + "\n" if not isinstance(v, complex) else f"{_fmt(v.real)},{_fmt(v.imag)}\n"
    if any(isinstance(p, complex) for p in points):
        vals = evaluate(node, np.array(points, dtype=complex), args.alpha)
        return _csv(("x", "re", "im"), ((str(p), v.real, v.imag) for p, v in zip(points, vals)))
    vals = evaluate(node, np.array(points, dtype=float), args.alpha)
    return _csv(("x", "value"), zip(points, vals))


def _cmd_derive(args):
    node = parse_expr(args.expr)
    if args.numeric:
        if not args.at:
            raise UsageError("--numeric needs --at")
        f = as_function(node, args.alpha)
        rows = []
        for x in args.at:
            est, conv, _ = lfd_numeric(f, x, args.alpha)
            rows.append((x, est, str(conv).lower()))
        return _csv(("x", "estimate", "converged"), rows)
    d = lfd_symbolic(node, args.alpha)
    if not args.at:
        return to_string(d) + "\n"
    return _csv(("x", "value"), zip(args.at, evaluate(d, np.array(args.at, float), args.alpha)))


def _cmd_integrate(args):
    f = as_function(parse_expr(args.expr), args.alpha)
    scheme = _scheme(args, args.n)
    value, diag = lf_integral(f, args.lo, args.hi, args.alpha, scheme)
    return _csv(("scheme", "n", "value", "converged"),
                [(str(scheme), str(diag.n[-1]), value, str(diag.converged).lower())])


def _cmd_contour(args):
    try:
        pts = tuple(complex(p.replace(" ", "")) for p in args.points.split(";") if p.strip())
    except ValueError as exc:
        raise UsageError(f"bad --points: {exc}") from None
    node = parse_expr(args.expr)
    f = lambda z: evaluate(node, np.asarray(z, dtype=complex), args.alpha)
    value, _ = contour_integral(f, Contour(pts, args.closed), args.alpha, _scheme(args, args.n))
    return _csv(("re", "im"), [(value.real, value.imag)])


def _quadspec(args):
    return QuadSpec(args.cutoff, args.n, _scheme(args, args.n))


def _cmd_fourier(args):
    f = as_function(parse_expr(args.expr), args.alpha)
    q = _quadspec(args)
    rows = []
    for w in args.omega:
        v = lf_fourier(f, w, args.alpha, q).value
        rows.append((w, v.a, v.b))
    return _csv(("omega", "re", "im"), rows)


def _cmd_laplace(args):
    f = as_function(parse_expr(args.expr), args.alpha)
    q = _quadspec(args)
    rows = []
    for s in args.s:
        v = lf_laplace(f, s, args.alpha, q).value
        rows.append((s, v if isinstance(v, float) else v.a))
    return _csv(("s", "value"), rows)


def _cmd_period(args):
    p, r = period_solve(args.alpha, args.pmax, args.grid)
    return _csv(("p", "residual"), [(p, r)])


def _cmd_circle(args):
    theta = np.linspace(0.0, 2 * math.pi, args.n + 1)
    xa, ya, res = circle_param(theta, FCircleSpec(args.radius, args.alpha))
    return _csv(("theta", "xa", "ya", "residual"), zip(theta, xa, ya, res))


def _cmd_sphere(args):
    eta, theta = np.meshgrid(np.linspace(0.0, math.pi, args.n + 1),
                             np.linspace(0.0, 2 * math.pi, args.n + 1), indexing="ij")
    eta, theta = eta.ravel(), theta.ravel()
    ua, va, wa, res = sphere_param(eta, theta, FCircleSpec(args.radius, args.alpha))
    return _csv(("eta", "theta", "ua", "va", "wa", "residual"), zip(eta, theta, ua, va, wa, res))


def _cmd_verify(args):
    if args.claim:
        reports = [run_claim(c, a, seed=args.seed) for c in sorted(set(args.claim)) for a in sorted(args.alpha)]
    else:
        reports = run_all(args.alpha, seed=args.seed)
    return "".join(r.to_json() + "\n" for r in reports)


def _cmd_series(args):
    text = args.series.strip()
    if "@" not in text:
        text += f"@{args.alpha!r}"
    s = parse_series(text)
    if s.alpha != args.alpha:
        raise UsageError(f"series order {s.alpha} differs from --alpha {args.alpha}")
    if args.op == "show":
        return f"{s}\n"
    if args.op == "lfd":
        return f"{lfd(s)}\n"
    if args.op == "lfi":
        return f"{lfi(s)}\n"
    if not args.at:
        raise UsageError("--op eval needs --at")
    return _csv(("x", "value"), ((x, s.eval(x)) for x in args.at))


_COMMANDS = {
    "eval": _cmd_eval, "derive": _cmd_derive, "integrate": _cmd_integrate, "contour": _cmd_contour,
    "fourier": _cmd_fourier, "laplace": _cmd_laplace, "period": _cmd_period, "circle": _cmd_circle,
    "sphere": _cmd_sphere, "verify": _cmd_verify, "series": _cmd_series,
}


def run(argv, stdout=None, stderr=None) -> int:
    """Execute one command; returns the exit code."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        text = _COMMANDS[args.command](args)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except UsageError as exc:
        print(exc, file=stderr)
        return EXIT_USAGE
    except (DivergenceError, NonConvergenceError) as exc:
        print(f"divergence: {exc}", file=stderr)
        diag = getattr(exc, "diagnostics", None)
        if diag is not None:
            payload = diag.to_dict() if hasattr(diag, "to_dict") else diag
            print(json.dumps({"divergence": str(exc), **payload}), file=stdout)
        return EXIT_DIVERGENCE
    except (FractalCalcError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001 - last-resort mapping to the internal-error code
        print(f"internal error: {type(exc).__name__}: {exc}", file=stderr)
        return EXIT_INTERNAL
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return EXIT_OK


def main(argv=None) -> None:
    sys.exit(run(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
