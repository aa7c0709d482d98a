"""Command-line front end.

Subcommands:

* ``eig``        full eigensystem of T_{n,q,alpha} (JSON or CSV)
* ``apply``      apply the operator to explicit samples or to t^k samples
* ``basis``      basis polynomial values at a point or on a grid
* ``limits``     large-n limit eigenvalue and limit eigenvector coefficients
* ``converge``   finite-n coefficients against their limits over an n-schedule
* ``plot-data``  eigenvector curves on a uniform x-grid, one column per (q, alpha)
* ``verify``     run the exact-oracle suite; nonzero exit on any failure

Scalars parse rationally by default (``--q 0.4`` means exactly 2/5); pass
``--mode float`` for float arithmetic. Exit codes: 0 success, 1 verification
or degeneracy failure, 2 usage or parameter error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .asymptotics import RegimeError, convergence_table, limit_coeffs
from .bernstein import (
    OperatorParams,
    apply_to_samples,
    basis_values,
    inject_fault,
    sample_nodes,
)
from .eigen import DegenerateEigenvalueError, eigensystem, eigenvector
from .polynomials import poly_eval
from .scalars import (
    MixedModeError,
    Scalar,
    format_scalar,
    parse_scalar,
    scalar_to_json,
)
from .verify import run_verify


def _parse_scalar_list(text: str, mode: str) -> list[Scalar]:
    return [parse_scalar(part, mode) for part in text.split(",") if part.strip()]


def _single(values: list, flag: str):
    if len(values) != 1:
        raise ValueError(f"{flag} takes exactly one value here, got {len(values)}")
    return values[0]


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv_text(header: list[str], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _params_from(args) -> OperatorParams:
    q = _single(_parse_scalar_list(args.q, args.mode), "--q")
    alpha = _single(_parse_scalar_list(args.alpha, args.mode), "--alpha")
    return OperatorParams(args.n, q, alpha)


def cmd_eig(args) -> int:
    params = _params_from(args)
    system = eigensystem(params)
    if args.format == "json":
        _emit(_json_text(system.as_dict()), args.out)
    else:
        width = params.n + 1
        rows = []
        for k in range(width):
            coeffs = [system.vectors[k].coeff(j) for j in range(width)]
            rows.append(
                [str(k), format_scalar(system.lambdas[k])]
                + [format_scalar(c) for c in coeffs]
            )
        header = ["k", "lambda"] + [f"c{j}" for j in range(width)]
        _emit(_csv_text(header, rows), args.out)
    return 0


def cmd_apply(args) -> int:
    params = _params_from(args)
    if (args.f is None) == (args.k is None):
        raise ValueError("pass exactly one of --f (samples) or --k (monomial power)")
    if args.f is not None:
        samples = _parse_scalar_list(args.f, args.mode)
    else:
        if args.k < 0:
            raise ValueError(f"--k must be >= 0, got {args.k}")
        samples = [t**args.k for t in sample_nodes(params)]
    image = apply_to_samples(samples, params)
    if args.format == "json":
        obj = {
            "n": params.n,
            "q": scalar_to_json(params.q),
            "alpha": scalar_to_json(params.alpha),
            "image": [scalar_to_json(c) for c in image.coeffs],
        }
        _emit(_json_text(obj), args.out)
    else:
        rows = [[str(j), format_scalar(c)] for j, c in enumerate(image.coeffs)]
        _emit(_csv_text(["j", "coeff"], rows), args.out)
    return 0


def cmd_basis(args) -> int:
    params = _params_from(args)
    if (args.x is None) == (args.samples is None):
        raise ValueError("pass exactly one of --x (a point) or --samples (a grid)")
    if args.x is not None:
        x = parse_scalar(args.x, args.mode)
        values = basis_values(params, x)
        obj = {
            "n": params.n,
            "q": scalar_to_json(params.q),
            "alpha": scalar_to_json(params.alpha),
            "x": scalar_to_json(x),
            "values": [scalar_to_json(v) for v in values],
        }
        _emit(_json_text(obj), args.out)
        return 0
    grid = _x_grid(args.samples, args.mode)
    header = ["x"] + [f"p{i}" for i in range(params.n + 1)]
    rows = []
    for x in grid:
        vals = basis_values(params, x)
        rows.append([format_scalar(x)] + [format_scalar(v) for v in vals])
    _emit(_csv_text(header, rows), args.out)
    return 0


def cmd_limits(args) -> int:
    q = _single(_parse_scalar_list(args.q, args.mode), "--q")
    alpha = _single(_parse_scalar_list(args.alpha, args.mode), "--alpha")
    lc = limit_coeffs(q, alpha, args.k)
    if args.format == "json":
        obj = {
            "regime": lc.regime,
            "k": lc.k,
            "q": scalar_to_json(lc.q),
            "alpha": scalar_to_json(lc.alpha),
            "limit_lambda": scalar_to_json(lc.limit_lambda),
            "coeffs": [scalar_to_json(c) for c in lc.coeffs],
        }
        _emit(_json_text(obj), args.out)
    else:
        rows = [
            [str(j), format_scalar(c), format_scalar(lc.limit_lambda)]
            for j, c in enumerate(lc.coeffs)
        ]
        _emit(_csv_text(["j", "coeff", "limit_lambda"], rows), args.out)
    return 0


def cmd_converge(args) -> int:
    q = _single(_parse_scalar_list(args.q, args.mode), "--q")
    alpha = _single(_parse_scalar_list(args.alpha, args.mode), "--alpha")
    n_list = [int(part) for part in args.n.split(",") if part.strip()]
    if not n_list:
        raise ValueError("--n needs at least one value, e.g. --n 25,50,100")
    rows = convergence_table(q, alpha, args.k, n_list, mode=args.mode)
    if args.format == "json":
        obj = [
            {
                "n": r.n,
                "j": r.j,
                "finite": scalar_to_json(r.finite),
                "limit": scalar_to_json(r.limit),
                "abs_error": scalar_to_json(r.abs_error),
            }
            for r in rows
        ]
        _emit(_json_text(obj), args.out)
    else:
        table = [
            [
                str(r.n),
                str(r.j),
                format_scalar(r.finite),
                format_scalar(r.limit),
                format_scalar(r.abs_error),
            ]
            for r in rows
        ]
        _emit(_csv_text(["n", "j", "finite", "limit", "abs_error"], table), args.out)
    return 0


def _x_grid(samples: int, mode: str) -> list[Scalar]:
    if samples < 2:
        raise ValueError(f"--samples must be >= 2, got {samples}")
    if mode == "float":
        return [t / (samples - 1) for t in range(samples)]
    return [Fraction(t, samples - 1) for t in range(samples)]


def cmd_plot_data(args) -> int:
    q_list = _parse_scalar_list(args.q, args.mode)
    alpha_list = _parse_scalar_list(args.alpha, args.mode)
    if args.k > args.n:
        raise ValueError(f"--k must be <= --n, got k={args.k}, n={args.n}")
    grid = _x_grid(args.samples, args.mode)
    columns = []
    for q in q_list:
        for alpha in alpha_list:
            vec = eigenvector(args.k, OperatorParams(args.n, q, alpha))
            columns.append((q, alpha, [poly_eval(vec, x) for x in grid]))
    if args.format == "json":
        obj = {
            "n": args.n,
            "k": args.k,
            "x": [scalar_to_json(x) for x in grid],
            "columns": [
                {
                    "q": scalar_to_json(q),
                    "alpha": scalar_to_json(alpha),
                    "values": [scalar_to_json(v) for v in values],
                }
                for q, alpha, values in columns
            ],
        }
        _emit(_json_text(obj), args.out)
        return 0
    header = ["x"] + [
        f"p_{args.k}[q={format_scalar(q)},alpha={format_scalar(alpha)}]"
        for q, alpha, _ in columns
    ]
    rows = []
    for t, x in enumerate(grid):
        rows.append(
            [format_scalar(x)] + [format_scalar(values[t]) for _, _, values in columns]
        )
    _emit(_csv_text(header, rows), args.out)
    return 0


def cmd_verify(args) -> int:
    if args.inject_fault:
        with inject_fault(args.inject_fault):
            report = run_verify(max_n=args.max_n)
    else:
        report = run_verify(max_n=args.max_n)
    _emit(_json_text(report.as_dict()), args.out)
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aqbernstein",
        description="Eigenstructure of the (alpha,q)-Bernstein operator.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, *, n=False, k=False, q=True, alpha=True, samples=False,
               default_mode="exact"):
        if n:
            p.add_argument("--n", type=int, required=True, help="operator degree")
        if k:
            p.add_argument("--k", type=int, required=True, help="polynomial degree")
        if q:
            p.add_argument("--q", required=True, help="q value(s), comma separated")
        if alpha:
            p.add_argument("--alpha", required=True,
                           help="alpha value(s), comma separated")
        if samples:
            p.add_argument("--samples", type=int, default=33,
                           help="grid size on [0,1]")
        p.add_argument("--mode", choices=["exact", "float"], default=default_mode)
        p.add_argument("--format", choices=["json", "csv"], default=None)
        p.add_argument("--out", default=None, help="write output to this path")

    p = sub.add_parser("eig", help="compute the full eigensystem")
    common(p, n=True)
    p.set_defaults(func=cmd_eig, default_format="json")

    p = sub.add_parser("apply", help="apply the operator to samples")
    common(p, n=True)
    p.add_argument("--f", default=None, help="comma-separated samples f_0..f_n")
    p.add_argument("--k", type=int, default=None, help="use samples of t^k")
    p.set_defaults(func=cmd_apply, default_format="json")

    p = sub.add_parser("basis", help="evaluate the basis polynomials")
    common(p, n=True)
    p.add_argument("--x", default=None, help="single evaluation point")
    p.add_argument("--samples", type=int, default=None, help="grid size on [0,1]")
    p.set_defaults(func=cmd_basis, default_format="csv")

    p = sub.add_parser("limits", help="large-n limit eigenvalue and coefficients")
    common(p, k=True)
    p.set_defaults(func=cmd_limits, default_format="json")

    p = sub.add_parser("converge", help="finite-n coefficients vs their limits")
    common(p, k=True, default_mode="float")
    p.add_argument("--n", required=True, help="comma-separated n schedule")
    p.set_defaults(func=cmd_converge, default_format="csv")

    p = sub.add_parser("plot-data", help="eigenvector curves on an x-grid")
    common(p, n=True, k=True, samples=True)
    p.set_defaults(func=cmd_plot_data, default_format="csv")

    p = sub.add_parser("verify", help="run the exact-oracle verification suite")
    p.add_argument("--max-n", type=int, default=6, dest="max_n")
    p.add_argument("--inject-fault", choices=["ark-sign"], default=None,
                   help="test-only: corrupt a formula to prove the suite catches it")
    p.add_argument("--format", choices=["json"], default="json")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_verify, default_format="json")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "format", None) is None:
        args.format = getattr(args, "default_format", "json")
    try:
        return args.func(args)
    except DegenerateEigenvalueError as exc:
        print(f"degeneracy: {exc}", file=sys.stderr)
        return 1
    except (RegimeError, MixedModeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
