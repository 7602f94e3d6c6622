"""Command-line frontend: eval, table, plotdata, divergence-demo, verify.

Exit codes: 0 success, 1 usage error, 2 domain error, 3 verification
failure.  File output goes to --out (stdout by default); plotdata can
additionally render the same rows to an image with --plot.
"""

from __future__ import annotations

import argparse
import sys

from .errors import DomainError
from .extended import ext_beta, gen_ext_beta, naive_series_partial_sums
from .modified import modified_beta_incomplete, modified_beta_quad, modified_beta_series
from .report import (
    COLUMN_KINDS,
    ENGINES,
    FIGURES,
    TableRequest,
    generate_plotdata,
    generate_table,
    render_figure,
    rows_to_csv,
)
from .special import beta_classical
from .verify import run_suites

USAGE_ERROR, DOMAIN_ERROR, VERIFY_FAILED = 1, 2, 3

EVAL_FUNCTIONS = ("beta", "ext_beta", "gen_ext_beta", "mecbf", "mecbf_incomplete")


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage problems; the contract here is 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)


def _fmt_value(v) -> str:
    if isinstance(v, complex):
        return f"{_fmt_value(v.real)} {'+' if v.imag >= 0 else '-'} {_fmt_value(abs(v.imag))}j"
    if v == 0.0 or 1e-4 <= abs(v) < 1e10:
        return f"{v:.12f}"
    return f"{v:.12e}"


def _parse_m(text: str):
    try:
        return float(text)
    except ValueError:
        return complex(text)


def _float_list(text: str) -> tuple[float, ...]:
    return tuple(float(tok) for tok in text.split(",") if tok.strip())


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="betaext", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate one function at one point")
    p_eval.add_argument("--fn", required=True, choices=EVAL_FUNCTIONS)
    p_eval.add_argument("--alpha", type=float, required=True)
    p_eval.add_argument("--beta", type=float, required=True)
    p_eval.add_argument("--p", type=float, default=0.0, help="decaying-kernel strength")
    p_eval.add_argument("--m", type=_parse_m, default=0.0, help="bounded-kernel strength")
    p_eval.add_argument("--delta", type=float, default=1.0)
    p_eval.add_argument("--zeta", type=float, default=1.0)
    p_eval.add_argument("--kappa", type=float, default=1.0)
    p_eval.add_argument("--mu", type=float, default=1.0)
    p_eval.add_argument("--x", type=float, default=1.0, help="incomplete upper limit")
    p_eval.add_argument("--engine", choices=ENGINES, default="quadrature")
    p_eval.add_argument("--enforce-radius", action="store_true",
                        help="reject |m| > 2.0335")

    p_table = sub.add_parser("table", help="comparison table as CSV")
    p_table.add_argument("--x-start", type=float, default=0.0)
    p_table.add_argument("--x-stop", type=float, default=10.0)
    p_table.add_argument("--x-step", type=float, default=1.0)
    p_table.add_argument("--y", type=float, default=None,
                         help="fixed second shape (default: follows x)")
    p_table.add_argument("--columns", type=str, default="classical,extended_p,mecbf",
                         help=f"comma list from {COLUMN_KINDS}")
    p_table.add_argument("--p-values", type=_float_list, default=(0.01, 0.0))
    p_table.add_argument("--m-values", type=_float_list, default=(0.01, 0.0))
    p_table.add_argument("--engine", choices=ENGINES, default="series")
    p_table.add_argument("--series-n-max", type=int, default=5)
    p_table.add_argument("--out", type=str, default=None)

    p_plot = sub.add_parser("plotdata", help="curve/surface points as CSV")
    p_plot.add_argument("--figure", required=True, choices=FIGURES)
    p_plot.add_argument("--x", type=float, default=2.0)
    p_plot.add_argument("--y", type=float, default=2.0)
    p_plot.add_argument("--out", type=str, default=None)
    p_plot.add_argument("--plot", type=str, default=None,
                        help="also render the rows to this image file")

    p_div = sub.add_parser("divergence-demo",
                           help="termwise expansion vs direct quadrature")
    p_div.add_argument("--alpha", type=float, required=True)
    p_div.add_argument("--beta", type=float, required=True)
    p_div.add_argument("--p", type=float, required=True)
    p_div.add_argument("--n-max", type=int, default=8)

    p_ver = sub.add_parser("verify", help="run the built-in property suites")
    p_ver.add_argument("--suite", default="all",
                       choices=("identities", "representations", "distribution",
                                "convergence", "all"))
    p_ver.add_argument("--tol", type=float, default=None)
    return parser


def cmd_eval(args) -> int:
    if args.fn == "beta":
        value = beta_classical(args.alpha, args.beta)
        est, method, evals = 4e-16 * abs(value), "gamma-relation", 0
    elif args.fn == "ext_beta":
        r = ext_beta(args.alpha, args.beta, args.p)
        value, est, method, evals = r.value, r.abs_err_est, r.method, r.evals
    elif args.fn == "gen_ext_beta":
        r = gen_ext_beta(args.alpha, args.beta, args.p,
                         args.delta, args.zeta, args.kappa, args.mu)
        value, est, method, evals = r.value, r.abs_err_est, r.method, r.evals
    elif args.fn == "mecbf":
        if args.engine == "series":
            r, _ = modified_beta_series(args.alpha, args.beta, args.m,
                                        enforce_radius=args.enforce_radius)
        else:
            r = modified_beta_quad(args.alpha, args.beta, args.m,
                                   enforce_radius=args.enforce_radius)
        value, est, method, evals = r.value, r.abs_err_est, r.method, r.evals
    else:  # mecbf_incomplete
        r = modified_beta_incomplete(args.x, args.alpha, args.beta, args.m)
        value, est, method, evals = r.value, r.abs_err_est, r.method, r.evals
    print(f"value: {_fmt_value(value)}")
    print(f"abs_err_est: {est:.3e}")
    print(f"method: {method}")
    print(f"evals: {evals}")
    return 0


def cmd_table(args) -> int:
    req = TableRequest(
        x_start=args.x_start,
        x_stop=args.x_stop,
        x_step=args.x_step,
        fixed_y=args.y,
        columns=tuple(tok for tok in args.columns.split(",") if tok),
        p_values=args.p_values,
        m_values=args.m_values,
        engine=args.engine,
        series_n_max=args.series_n_max,
    )
    header, rows = generate_table(req)
    _write_text(rows_to_csv(header, rows), args.out)
    return 0


def cmd_plotdata(args) -> int:
    header, rows = generate_plotdata(args.figure, x=args.x, y=args.y)
    _write_text(rows_to_csv(header, rows), args.out)
    if args.plot:
        render_figure(args.figure, header, rows, args.plot)
    return 0


def cmd_divergence_demo(args) -> int:
    records = naive_series_partial_sums(args.alpha, args.beta, args.p, args.n_max)
    print(f"{'n':>3s}  {'term':>24s}  {'partial_sum':>24s}  status")
    for rec in records:
        term = f"{rec.term:.15e}" if rec.defined else "--"
        print(f"{rec.n:>3d}  {term:>24s}  {rec.partial_sum:>24.15e}  "
              f"{'ok' if rec.defined else 'UNDEFINED'}")
    quad = ext_beta(args.alpha, args.beta, args.p)
    print(f"\ndirect quadrature of the kernel integral: "
          f"{quad.value:.15e} (est {quad.abs_err_est:.1e})")
    undefined = [rec.n for rec in records if not rec.defined]
    if undefined:
        print(f"terms n in {{{', '.join(map(str, undefined))}}} are undefined: "
              f"a shifted shape reaches zero, while the integral above stays finite.")
    else:
        print("all requested terms are defined.")
    return 0


def cmd_verify(args) -> int:
    results = run_suites(args.suite, args.tol)
    failures = [r for r in results if not r.passed]
    for r in results:
        mark = "PASS" if r.passed else "FAIL"
        print(f"{mark} [{r.suite}] {r.name} ({r.params}) "
              f"residual={r.residual:.3e} tol={r.tol:.3e}")
    print(f"\n{len(results) - len(failures)}/{len(results)} checks passed")
    if failures:
        print("failing cases:")
        for r in failures:
            print(f"  ({r.params}) {r.name}")
        return VERIFY_FAILED
    return 0


def _write_text(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "eval": cmd_eval,
        "table": cmd_table,
        "plotdata": cmd_plotdata,
        "divergence-demo": cmd_divergence_demo,
        "verify": cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return DOMAIN_ERROR


if __name__ == "__main__":
    sys.exit(main())
