"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 domain error, 3 I/O error.
Floats are printed with ``repr`` (shortest round-trip form).
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
import warnings

import numpy as np

from . import approx_error as ae
from .chebyshev import OutOfDomainWarning, clenshaw_eval, monomial_expansion, truncate
from .exact_combinatorics import DomainError
from .matpow import (
    SpectrumWarning,
    SymMatrix,
    auto_matpow,
    cheb_matpow,
    read_vector,
    repeated_matpow,
)

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _fmt(x) -> str:
    return repr(float(x))


def _frac(q) -> str:
    return f"{q.numerator}" if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _positive_int(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {s}")
    return v


def _nonneg_int(s: str) -> int:
    v = int(s)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {s}")
    return v


def _points(s: str) -> list[float]:
    try:
        return [float(t) for t in s.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad point list {s!r}") from None


def cmd_coeffs(args, out) -> None:
    series = monomial_expansion(args.n)
    if args.k is not None:
        series = truncate(series, args.k)
    last = args.n if args.k is None else args.k
    rows = [(j, series.coeffs[j] if j < len(series) else 0) for j in range(last + 1)]
    if args.format == "text":
        out.write(f"x^{args.n} = c_0/2 + sum_j c_j T_j(x)  (j=0 term halved)\n")
        for j, c in rows:
            out.write(f"{j:>6}  {_frac(c):>24}  {_fmt(c)}\n")
        return
    out.write("# j=0 coefficient enters halved: x^n = c_0/2 + sum_{j>=1} c_j T_j(x)\n")
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["j", "c_exact", "c_float"])
    for j, c in rows:
        w.writerow([j, _frac(c), _fmt(c)])


def cmd_error(args, out) -> None:
    r = ae.estimates(args.n, args.k)
    out.write(f"n: {r.n}\nk: {r.k}\n")
    if r.exact is not None:
        out.write(f"exact: {_frac(r.exact)}\n")
    else:
        out.write("exact: (log-space evaluation, n above exact-path limit)\n")
    out.write(f"exact_float: {_fmt(r.exact_float)}\n")
    out.write(f"hoeffding: {_fmt(r.hoeffding)}\n")
    out.write(f"erfc_p_estimate: {_fmt(r.erfc_p_estimate)}\n")
    out.write(f"erfc_best_estimate: {_fmt(r.erfc_best_estimate)}\n")


def cmd_degree(args, out) -> None:
    plan = ae.select_degree(args.n, args.eps, args.method)
    achieved = plan.achieved
    out.write(f"n: {plan.n}\nepsilon: {_fmt(plan.epsilon)}\nmethod: {plan.method}\n")
    out.write(f"k: {plan.k}\n")
    if isinstance(achieved, float):
        out.write(f"achieved: {_fmt(achieved)}\n")
    else:
        out.write(f"achieved: {_frac(achieved)}\nachieved_float: {_fmt(achieved)}\n")


def cmd_eval(args, out) -> None:
    if args.points is not None:
        x = np.array(args.points, dtype=float)
    else:
        if args.grid < 2:
            raise DomainError(f"grid size must be at least 2, got {args.grid}")
        x = ae.sup_grid(args.grid)
    if args.k > args.n:
        raise DomainError(f"k={args.k} exceeds n={args.n}")
    phi = truncate(monomial_expansion(args.n), args.k)
    xn = ae.float_power(x, args.n)
    approx = np.atleast_1d(clenshaw_eval(phi, x))
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["x", "x^n", "phi_k", "abs_diff"])
    for xi, a, b in zip(x, xn, approx):
        w.writerow([_fmt(xi), _fmt(a), _fmt(b), _fmt(abs(a - b))])


def cmd_table(args, out) -> None:
    if args.kmax > args.n:
        raise DomainError(f"kmax={args.kmax} exceeds n={args.n}")
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["k", "p_exact", "hoeffding", "erfc_p_estimate"])
    for k in range(args.kmax + 1):
        r = ae.estimates(args.n, k)
        w.writerow([k, _fmt(r.exact_float), _fmt(r.hoeffding), _fmt(r.erfc_p_estimate)])


def cmd_matpow(args, out) -> None:
    try:
        A = SymMatrix.from_file(args.matrix)
        v = read_vector(args.vector)
    except (OSError, ValueError) as exc:
        if isinstance(exc, DomainError):
            raise
        raise OSError(str(exc)) from exc
    if args.k is not None:
        result, matvecs = cheb_matpow(A, v, args.n, args.k)
        k = args.k
    else:
        result, k, matvecs = auto_matpow(A, v, args.n, args.eps)
    out.write(f"# n: {args.n}\n# k: {k}\n# matvecs: {matvecs}\n")
    if args.baseline:
        ref, _ = repeated_matpow(A, v, args.n)
        out.write(f"# baseline_error: {_fmt(np.linalg.norm(result - ref))}\n")
        out.write(f"# v_norm: {_fmt(np.linalg.norm(v))}\n")
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["i", "value"])
    for i, y in enumerate(result):
        w.writerow([i, _fmt(y)])


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="chebmono", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("coeffs", help="Chebyshev coefficients of x^n")
    s.add_argument("--n", type=_positive_int, required=True)
    s.add_argument("--k", type=_nonneg_int)
    s.add_argument("--format", choices=["csv", "text"], default="csv")
    s.add_argument("--out")
    s.set_defaults(func=cmd_coeffs)

    s = sub.add_parser("error", help="exact error, bound and estimates for (n, k)")
    s.add_argument("--n", type=_positive_int, required=True)
    s.add_argument("--k", type=_nonneg_int, required=True)
    s.add_argument("--out")
    s.set_defaults(func=cmd_error)

    s = sub.add_parser("degree", help="degree needed for tolerance eps")
    s.add_argument("--n", type=_positive_int, required=True)
    s.add_argument("--eps", type=float, required=True)
    s.add_argument("--method", choices=["bound", "exact"], default="exact")
    s.add_argument("--out")
    s.set_defaults(func=cmd_degree)

    s = sub.add_parser("eval", help="compare x^n and phi_k at points")
    s.add_argument("--n", type=_positive_int, required=True)
    s.add_argument("--k", type=_nonneg_int, required=True)
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--points", type=_points, help="comma-separated; use --points=-0.5,1 for negatives")
    g.add_argument("--grid", type=int, help="Chebyshev nodes of this order plus +-1")
    s.add_argument("--out")
    s.set_defaults(func=cmd_eval)

    s = sub.add_parser("table", help="p, Hoeffding bound and erfc estimate for k = 0..kmax")
    s.add_argument("--n", type=_positive_int, required=True)
    s.add_argument("--kmax", type=_nonneg_int, required=True)
    s.add_argument("--out")
    s.set_defaults(func=cmd_table)

    s = sub.add_parser("matpow", help="A^n v with k matvecs")
    s.add_argument("--matrix", required=True)
    s.add_argument("--vector", required=True)
    s.add_argument("--n", type=_positive_int, required=True)
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--eps", type=float)
    g.add_argument("--k", type=_nonneg_int)
    s.add_argument("--baseline", action="store_true")
    s.add_argument("--out")
    s.set_defaults(func=cmd_matpow)
    return p


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        stderr.write(f"{exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE

    buf = io.StringIO()
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", OutOfDomainWarning)
            warnings.simplefilter("always", SpectrumWarning)
            args.func(args, buf)
        for w in caught:
            stderr.write(f"warning: {w.message}\n")
    except DomainError as exc:
        stderr.write(f"domain error: {exc}\n")
        return EXIT_DOMAIN
    except OSError as exc:
        stderr.write(f"I/O error: {exc}\n")
        return EXIT_IO

    try:
        if args.out:
            with open(args.out, "w", newline="") as f:
                f.write(buf.getvalue())
        else:
            stdout.write(buf.getvalue())
    except OSError as exc:
        stderr.write(f"I/O error: {exc}\n")
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
