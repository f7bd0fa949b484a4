"""Command line interface.

Subcommands: rank, basis, fixed-points, pair, matrix, power, chern, secant,
cone.  Global flags ``--format json|text`` (csv additionally for matrices)
and ``--dprime-diag N`` (the configurable A'.A pairing diagonal) may appear
before or after the subcommand.  Exit codes: 0 success, 2 validation error,
3 unsupported operation.  JSON output follows
``schemas/cli_output.schema.json``.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import io
import json
import sys

from .chern_secant import SecantProblem, TautBundle, chern_taut, secant_degree, \
    secant_degree_mu_closed, secant_degree_mu_intersection, secant_oracle
from .chow import BasisId, GradedClass, chow_rank, enumerate_basis
from .errors import InvalidInput, UnsupportedError, ValidationError
from .fixed_points import bb_cell_of, enumerate_fixed_points
from .pairing import (
    PairingConfig,
    effectivity_pairings,
    intersection_matrix,
    is_effective,
    is_nef,
    pair_symbols,
)
from .products import MonomialSpec, eval_monomial
from .serialize import (
    emit_class,
    format_class,
    format_rational,
    format_symbol,
    parse_class,
    parse_symbol,
    symbol_to_doc,
)

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_UNSUPPORTED = 3


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("text", "json", "csv"), default=argparse.SUPPRESS,
        help="output format (csv is available for matrix only; default text)",
    )
    common.add_argument(
        "--dprime-diag", type=int, default=argparse.SUPPRESS, metavar="N",
        help="value of the A'.A pairing diagonal (default 1)",
    )

    parser = argparse.ArgumentParser(
        prog="hilb2",
        description="Exact intersection-theory calculator for the Hilbert scheme "
        "of two points on P^n.",
    )
    parser.add_argument("--format", choices=("text", "json", "csv"), default="text")
    parser.add_argument("--dprime-diag", type=int, default=1, metavar="N")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rank", parents=[common], help="rank of a graded Chow group")
    p.add_argument("--n", type=int, required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--codim", type=int)
    g.add_argument("--dim", type=int)

    p = sub.add_parser("basis", parents=[common], help="list basis symbols")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--basis", choices=("BB", "ES", "MS"), required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--codim", type=int)
    g.add_argument("--dim", type=int)
    g.add_argument("--all", action="store_true")

    p = sub.add_parser("fixed-points", parents=[common], help="torus-fixed monomial ideals")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--generators", action="store_true", help="include ideal generators")

    p = sub.add_parser("pair", parents=[common], help="intersection number of two symbols")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x", required=True, metavar="JSON", help='e.g. {"family":"B\'","i":1,"j":1}')
    p.add_argument("--y", required=True, metavar="JSON")

    p = sub.add_parser("matrix", parents=[common], help="complementary-codimension pairing matrix")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True, help="rows have dimension k, columns codimension k")
    p.add_argument("--rows", choices=("ES", "MS"), default="ES")
    p.add_argument("--cols", choices=("MS",), default="MS")

    p = sub.add_parser("power", parents=[common], help="evaluate B'_{n-1,n-1}^k . C_{n-1,n-1}^b")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True, help="exponent of B'_{n-1,n-1} (k >= 1)")
    p.add_argument("--c-exp", type=int, default=0, metavar="B", help="exponent of C_{n-1,n-1}")

    p = sub.add_parser("chern", parents=[common], help="Chern classes of the tautological bundle of O(d)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)

    p = sub.add_parser("secant", parents=[common], help="degree of the secant variety of a complete intersection")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--degrees", required=True, metavar="D1,D2,...")
    p.add_argument("--mu1", type=int, default=1)
    p.add_argument("--variant", choices=("proof", "intro"), default="proof")
    p.add_argument("--check-oracle", action="store_true",
                   help="compare against the classical chord/curve formulas and the intersection route")

    p = sub.add_parser("cone", parents=[common], help="nef / effective cone membership")
    p.add_argument("--class", dest="class_doc", required=True, metavar="JSON",
                   help="class document in MS coordinates")
    p.add_argument("--test", choices=("nef", "effective"), required=True)
    p.add_argument("--k", type=int, default=None)

    return parser


def _parse_degrees(text: str) -> list[int]:
    out = []
    for piece in text.split(","):
        piece = piece.strip()
        try:
            out.append(int(piece))
        except ValueError:
            raise InvalidInput(f"bad degree {piece!r} in --degrees") from None
    return out


def _cmd_rank(args, cfg):
    n = args.n
    codim = args.codim if args.codim is not None else 2 * n - args.dim
    rank = chow_rank(n, codim)
    result = {"n": n, "codim": codim, "dim": 2 * n - codim, "rank": rank}
    return result, str(rank), []


def _cmd_basis(args, cfg):
    kwargs, kind, k = {}, "all", None
    if args.dim is not None:
        kwargs, kind, k = {"dim": args.dim}, "dim", args.dim
    elif args.codim is not None:
        kwargs, kind, k = {"codim": args.codim}, "codim", args.codim
    symbols = enumerate_basis(args.n, BasisId(args.basis), **kwargs)
    result = {
        "n": args.n,
        "basis": args.basis,
        "grading": {"kind": kind, "k": k},
        "symbols": [symbol_to_doc(s) for s in symbols],
    }
    return result, " ".join(format_symbol(s) for s in symbols), []


def _cmd_fixed_points(args, cfg):
    records, lines = [], []
    points = enumerate_fixed_points(args.n)
    for fp in points:
        cell, dim = bb_cell_of(fp)
        rec = {
            "kind": fp.kind.value,
            "i": fp.i,
            "j": fp.j,
            "cell": symbol_to_doc(cell),
            "cell_dim": dim,
        }
        line = f"{fp} -> {cell} (dim {dim})"
        if args.generators:
            gens = fp.generators()
            rec["generators"] = gens
            line += "  ideal (" + ", ".join(gens) + ")"
        records.append(rec)
        lines.append(line)
    result = {"n": args.n, "count": len(points), "fixed_points": records}
    return result, "\n".join(lines), []


def _cmd_pair(args, cfg):
    x = parse_symbol(args.x, args.n)
    y = parse_symbol(args.y, args.n)
    value = pair_symbols(x, y, cfg)
    result = {
        "n": args.n,
        "x": symbol_to_doc(x),
        "y": symbol_to_doc(y),
        "value": format_rational(value),
    }
    return result, format_rational(value), []


def _cmd_matrix(args, cfg):
    M = intersection_matrix(args.n, args.k, BasisId(args.rows), BasisId(args.cols), cfg)
    header = [""] + [format_symbol(s) for s in M.col_symbols]
    grid = [
        [format_symbol(r)] + [format_rational(v) for v in row]
        for r, row in zip(M.row_symbols, M.entries)
    ]
    widths = [max(len(line[c]) for line in [header] + grid) for c in range(len(header))]
    text_lines = [
        "  ".join(cell.rjust(w) for cell, w in zip(line, widths))
        for line in [header] + grid
    ]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(grid)
    result = {
        "n": args.n,
        "k": args.k,
        "rows": args.rows,
        "cols": args.cols,
        "row_symbols": [symbol_to_doc(s) for s in M.row_symbols],
        "col_symbols": [symbol_to_doc(s) for s in M.col_symbols],
        "entries": [[format_rational(v) for v in row] for row in M.entries],
    }
    return result, "\n".join(text_lines), [], buf.getvalue().rstrip("\n")


def _cmd_power(args, cfg):
    X = eval_monomial(MonomialSpec(args.n, args.k, args.c_exp))
    result = {
        "n": args.n,
        "bprime_exponent": args.k,
        "c_exponent": args.c_exp,
        "class": emit_class(X),
    }
    return result, format_class(X), []


def _cmd_chern(args, cfg):
    c1, c2 = chern_taut(TautBundle(args.n, args.d))
    result = {"n": args.n, "d": args.d, "c1": emit_class(c1), "c2": emit_class(c2)}
    return result, f"c1 = {format_class(c1)}\nc2 = {format_class(c2)}", []


def _cmd_secant(args, cfg):
    degrees = _parse_degrees(args.degrees)
    problem = SecantProblem(args.n, degrees, mu1=args.mu1, variant=args.variant)
    warnings = []
    if any(d == 1 for d in degrees):
        warnings.append(
            "degree-1 hypersurfaces make X degenerate in P^n; the count is for its linear span"
        )
    deg_mu = secant_degree_mu_closed(problem)
    degree = secant_degree(problem)
    result = {
        "n": args.n,
        "degrees": degrees,
        "m": problem.m,
        "mu1": args.mu1,
        "variant": args.variant,
        "degree_times_mu1": deg_mu,
        "degree": format_rational(degree),
        "oracle": None,
        "oracle_match": None,
    }
    lines = [f"deg(Sec X) * mu1 = {deg_mu}", f"deg(Sec X) = {format_rational(degree)}"]
    if args.check_oracle:
        checks = {"intersection": secant_degree_mu_intersection(problem)}
        oracle = secant_oracle(args.n, degrees)
        if oracle is not None:
            checks["classical"] = oracle
        result["oracle"] = oracle
        ok = all(v == deg_mu for v in checks.values())
        result["oracle_match"] = ok
        for name, v in checks.items():
            lines.append(f"{name} = {v}")
        lines.append("OK" if ok else "MISMATCH")
    return result, "\n".join(lines), warnings


def _cmd_cone(args, cfg):
    X = parse_class(args.class_doc)
    if args.test == "nef":
        member = is_nef(X, args.k)
        pairings = None
    else:
        member = is_effective(X, args.k, cfg)
        pairings = [
            {"symbol": symbol_to_doc(sym), "value": format_rational(v)}
            for sym, v in effectivity_pairings(X, cfg)
        ]
    k = args.k
    if k is None and not X.is_zero:
        k = X.codimension() if args.test == "nef" else X.dimension()
    result = {"n": X.n, "test": args.test, "k": k, "member": member}
    if pairings is not None:
        result["pairings"] = pairings
    return result, "true" if member else "false", []


_HANDLERS = {
    "rank": _cmd_rank,
    "basis": _cmd_basis,
    "fixed-points": _cmd_fixed_points,
    "pair": _cmd_pair,
    "matrix": _cmd_matrix,
    "power": _cmd_power,
    "chern": _cmd_chern,
    "secant": _cmd_secant,
    "cone": _cmd_cone,
}


def run_command(argv) -> tuple[int, str]:
    """Run one CLI invocation; returns (exit code, output text)."""
    parser = _build_parser()
    captured = io.StringIO()
    try:
        with contextlib.redirect_stdout(captured), contextlib.redirect_stderr(captured):
            args = parser.parse_args(list(argv))
    except SystemExit as exc:
        text = captured.getvalue().rstrip("\n")
        code = EXIT_OK if exc.code in (0, None) else EXIT_VALIDATION
        return code, text

    fmt = args.format
    command = args.command
    try:
        cfg = PairingConfig(ap_a_diagonal=args.dprime_diag)
        out = _HANDLERS[command](args, cfg)
        result, text, warnings = out[0], out[1], out[2]
        csv_text = out[3] if len(out) > 3 else None
        if fmt == "csv":
            if csv_text is None:
                raise InvalidInput("csv format is available for the matrix command only")
            return EXIT_OK, csv_text
        if fmt == "json":
            envelope = {"command": command, "result": result}
            if warnings:
                envelope["warnings"] = warnings
            return EXIT_OK, json.dumps(envelope, indent=2)
        if warnings:
            text = "\n".join(f"warning: {w}" for w in warnings) + "\n" + text
        return EXIT_OK, text
    except (ValidationError, UnsupportedError) as exc:
        code = EXIT_VALIDATION if isinstance(exc, ValidationError) else EXIT_UNSUPPORTED
        if fmt == "json":
            envelope = {
                "command": command,
                "error": {"type": type(exc).__name__, "message": str(exc)},
            }
            return code, json.dumps(envelope, indent=2)
        return code, f"error: {exc}"


def main(argv=None) -> int:
    code, text = run_command(sys.argv[1:] if argv is None else argv)
    if text:
        print(text, file=sys.stderr if code else sys.stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
