"""Command-line front end: ``python3 -m flagloop <verb> ...``."""

from __future__ import annotations

import argparse
import sys

from .combinatorics import mahonian_row
from .exactmat import SNF_ENGINES, is_prime, parse_matrix_text, snf_mod_p
from .specseq import GroupFamily, PageCoordinate, column_labels, differential_matrix
from .symquot import quotient_basis
from .torsion import DEFAULT_BUDGET, cross_check, torsion_table

EXIT_OK, EXIT_USAGE, EXIT_COMPUTE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _nonneg(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {v}")
    return v


def _prime(text):
    v = _nonneg(text)
    if not is_prime(v):
        raise argparse.ArgumentTypeError(f"{v} is not prime")
    return v


def _budget(text):
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected seconds, got {text!r}") from None
    if v <= 0:
        raise argparse.ArgumentTypeError("budget must be positive")
    return v


def build_parser():
    p = _Parser(prog="flagloop", description="E3 pages of free loop spaces of flag manifolds")
    sub = p.add_subparsers(dest="verb", metavar="VERB", parser_class=_Parser)
    sub.required = True

    s = sub.add_parser("mahonian", help="row n of the Mahonian triangle")
    s.add_argument("n", type=_nonneg)

    s = sub.add_parser("basis", help="quotient basis of Z[x1..xn]/[h1..hn] by degree")
    s.add_argument("n", type=_nonneg)

    s = sub.add_parser("diffmat", help="differential matrix of one E2 slice")
    s.add_argument("n", type=_nonneg)
    s.add_argument("x", type=_nonneg)
    s.add_argument("y", type=_nonneg)
    s.add_argument("--family", choices=["su", "sp"], default="su")
    s.add_argument("--out", metavar="FILE")

    s = sub.add_parser("snf", help="Smith diagonal of a matrix file")
    s.add_argument("file")
    s.add_argument("--algo", choices=sorted(SNF_ENGINES), default="naive")
    s.add_argument("--mod", type=_prime, metavar="P")
    s.add_argument("--largest-first", action="store_true")

    s = sub.add_parser("torsion", help="E3 torsion table for SU(n+1)/T^n")
    s.add_argument("n", type=_nonneg)
    s.add_argument("--mod", type=_prime, metavar="P")
    s.add_argument("--format", choices=["text", "json"], default="text")
    s.add_argument("--budget", type=_budget, default=DEFAULT_BUDGET, metavar="SECONDS")

    s = sub.add_parser("check", help="closed forms and consistency checks")
    s.add_argument("n", type=_nonneg)
    return p


def _format_monomial(m):
    mono = " ".join(f"x{i}" if a == 1 else f"x{i}^{a}" for i, a in enumerate(m, 1) if a)
    return mono or "1"


def _cmd_mahonian(args, out):
    out.write(" ".join(map(str, mahonian_row(args.n))) + "\n")
    return EXIT_OK


def _cmd_basis(args, out):
    if args.n < 1:
        raise UsageError("basis: n must be at least 1")
    for d, level in enumerate(quotient_basis(args.n).by_degree):
        out.write(f"{d}: " + ", ".join(_format_monomial(m) for m in level) + "\n")
    return EXIT_OK


def _cmd_diffmat(args, out):
    try:
        coord = PageCoordinate(args.n, args.x, args.y, GroupFamily.parse(args.family))
    except ValueError as exc:
        raise UsageError(f"diffmat: {exc}") from None
    m = differential_matrix(coord)
    comments = [f"n={coord.n} x={coord.x} y={coord.y} family={coord.family.value}",
                "columns: " + " ".join(column_labels(coord))]
    text = m.to_text(comments)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


def _cmd_snf(args, out):
    try:
        with open(args.file, encoding="utf-8") as fh:
            m, _ = parse_matrix_text(fh.read())
    except OSError as exc:
        raise UsageError(f"snf: cannot read {args.file}: {exc.strerror}") from None
    except ValueError as exc:
        raise UsageError(f"snf: malformed matrix file: {exc}") from None
    if args.mod:
        rank, nullity = snf_mod_p(m, args.mod)
        out.write(f"rank={rank} nullity={nullity}\n")
        return EXIT_OK
    d = SNF_ENGINES[args.algo](m)
    diag = d.largest_first() if args.largest_first else d.diagonal
    out.write(" ".join(map(str, diag)) + "\n")
    return EXIT_OK


def _cmd_torsion(args, out, err):
    if args.n < 2:
        raise UsageError("torsion: n must be at least 2")
    table = torsion_table(args.n, p=args.mod, budget=args.budget)
    out.write(table.to_json() + "\n" if args.format == "json" else table.to_text())
    if not table.complete:
        err.write("torsion: some cells exceeded the time budget and are marked unknown\n")
        return EXIT_COMPUTE
    return EXIT_OK


def _cmd_check(args, out):
    if args.n < 2:
        raise UsageError("check: n must be at least 2")
    results = cross_check(args.n)
    for r in results:
        line = f"{'PASS' if r.passed else 'FAIL'}  {r.name}"
        out.write(line + (f"  [{r.detail}]" if r.detail else "") + "\n")
    return EXIT_OK if all(r.passed for r in results) else EXIT_COMPUTE


def main(argv=None, out=None, err=None):
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        if args.verb == "torsion":
            return _cmd_torsion(args, out, err)
        handler = {"mahonian": _cmd_mahonian, "basis": _cmd_basis, "diffmat": _cmd_diffmat,
                   "snf": _cmd_snf, "check": _cmd_check}[args.verb]
        return handler(args, out)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except (ArithmeticError, RuntimeError, MemoryError) as exc:
        err.write(f"computation failed: {exc}\n")
        return EXIT_COMPUTE


def run():
    sys.exit(main())
