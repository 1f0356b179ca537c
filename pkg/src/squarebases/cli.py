"""Command-line interface.

Exit status: 0 on success, 1 for invalid arguments or input, 2 when an
enumeration guard (see SQUAREBASES_MAX_TABLES) is exceeded.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import serialize as ser
from .basis import basis_dway, basis_vmn, expand
from .exact import RationalMatrix
from .magic import magic_basis, magic_parts
from .squares import SquareKind, check, enumerate_latin, sign_class_census
from .sudoku import sudoku_basis
from .symmetry import classify_basis_centro, symmetrized_basis
from .transport import (ContingencyTable, Marginals, ResourceGuardError,
                        connectivity_check, markov_walk, northwest_corner,
                        scaling_bound)
from .tree import build_tree, u_set


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


class Output:
    def __init__(self, fmt: str | None, path: str | None):
        self.fmt = fmt
        self.path = path

    def emit(self, text: str):
        if not text.endswith("\n"):
            text += "\n"
        if self.path:
            Path(self.path).write_text(text)
        else:
            sys.stdout.write(text)

    def json(self, obj):
        self.emit(ser.dumps(obj))


def _read_matrix(path: str) -> RationalMatrix:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    arr = ser.loads_matrix(text)
    if not isinstance(arr, RationalMatrix):
        raise ser.FormatError("expected a 2-d matrix")
    return arr


def _emit_basis(out: Output, basis, extra: dict | None = None):
    if out.fmt == "csv":
        out.emit(ser.documents_csv(
            (f"{e.label()} squared_norm={e.squared_norm}", e.matrix) for e in basis))
        return
    doc = ser.basis_document(basis)
    if extra:
        doc.update(extra)
    out.json(doc)


def cmd_uset(args, out):
    vectors = [list(u.vector) for u in u_set(args.n)]
    if out.fmt == "csv":
        out.emit(ser.rows_csv([f"x{j}" for j in range(args.n)], vectors))
    elif args.verbose:
        out.json([{"index": u.dfs_index, "vector": list(u.vector),
                   "symmetry": u.symmetry.value} for u in u_set(args.n)])
    else:
        out.json(vectors)


def cmd_tree(args, out):
    tree = build_tree(args.n)
    if out.fmt == "json":
        out.json(tree.to_dict())
    else:
        out.emit(tree.render())


def cmd_basis(args, out):
    if args.dway:
        basis = basis_dway(args.dway)
    else:
        if args.m is None or args.n is None:
            raise UsageError("basis needs m n, or --dway p1 p2 ...")
        basis = basis_vmn(args.m, args.n)
    _emit_basis(out, basis)


def cmd_magic_basis(args, out):
    parts = magic_parts(args.n)
    _emit_basis(out, magic_basis(args.n),
                {"ell_values": list(parts.ell_values), "ell": parts.ell})


def cmd_sudoku_basis(args, out):
    _emit_basis(out, sudoku_basis(args.n))


def cmd_symm_basis(args, out):
    _emit_basis(out, symmetrized_basis(args.n))


def cmd_classify(args, out):
    B = basis_vmn(args.n, args.n)
    classes, counts = classify_basis_centro(B)
    rows = [{"index": list(e.index), "centro": c.centro.value, "transpose": c.transpose.value}
            for e, c in zip(B, classes)]
    if out.fmt == "csv":
        out.emit(ser.rows_csv(["i", "j", "centro", "transpose"],
                              [[r["index"][0], r["index"][1], r["centro"], r["transpose"]] for r in rows]))
    else:
        out.json({"n": args.n, "elements": rows,
                  "counts": {k.value: v for k, v in counts.items()}})


def _basis_for(kind: str, M: RationalMatrix):
    m, n = M.shape
    if kind == "vmn":
        return basis_vmn(m, n)
    if m != n:
        raise UsageError(f"basis {kind} needs a square matrix, got {m}x{n}")
    if kind == "magic":
        return magic_basis(n)
    if kind == "symm":
        return symmetrized_basis(n)
    if kind == "sudoku":
        b = round(n ** 0.5)
        if b * b != n:
            raise UsageError(f"Sudoku basis needs a perfect-square order, got {n}")
        return sudoku_basis(b)
    raise UsageError(f"unknown basis {kind}")


def cmd_expand(args, out):
    M = _read_matrix(args.input)
    basis = _basis_for(args.basis, M)
    coords = expand(M, basis)
    if out.fmt == "csv":
        out.emit(ser.rows_csv([e.label() for e in basis], [coords.coefficients]))
    else:
        out.json(ser.coordinates_document(coords, basis))


def cmd_enumerate(args, out):
    squares = list(enumerate_latin(args.n))
    if out.fmt == "csv":
        out.emit(ser.rows_csv([f"x{i}{j}" for i in range(1, args.n + 1) for j in range(1, args.n + 1)],
                              ([x for row in sq for x in row] for sq in squares)))
    else:
        out.json({"n": args.n, "count": len(squares), "squares": [list(map(list, s)) for s in squares]})


def cmd_census(args, out):
    classes = sign_class_census(args.n)
    if out.fmt == "csv":
        labels = [f"bv{u.dfs_index}{v.dfs_index}" for u in u_set(args.n) for v in u_set(args.n)]
        out.emit(ser.rows_csv(labels + ["size"], (list(c.signature) + [c.size] for c in classes)))
        return
    doc = {
        "n": args.n,
        "squares": sum(c.size for c in classes),
        "classes": len(classes),
        "min_size": min(c.size for c in classes),
        "signatures": [],
    }
    for c in classes:
        item = {"signature": [ser.format_rational(x) for x in c.signature], "size": c.size}
        if args.members:
            item["members"] = list(c.members)
        doc["signatures"].append(item)
    out.json(doc)


def cmd_check(args, out):
    M = _read_matrix(args.input)
    if not M.is_square():
        raise UsageError(f"{args.kind} check needs a square matrix, got {M.rows}x{M.cols}")
    result = check(args.kind, M, args.magic_sum)
    if out.fmt == "csv":
        out.emit(ser.rows_csv(["kind", "result"], [[args.kind, str(result).lower()]]))
    else:
        out.json({"kind": args.kind, "rows": M.rows, "cols": M.cols, "result": result})


def _marginals(args) -> Marginals:
    return Marginals(tuple(args.rows), tuple(args.cols))


def cmd_sample(args, out):
    marg = _marginals(args)
    if args.start:
        M = _read_matrix(args.start)
        if not M.is_integral():
            raise UsageError("start table must be integral")
        start = ContingencyTable([[int(x) for x in M.row(i)] for i in range(M.rows)])
        if start.marginals != marg:
            raise UsageError("start table does not have the requested marginals")
    else:
        start = northwest_corner(marg)
    end = markov_walk(start, args.steps, args.seed)
    if out.fmt == "csv":
        out.emit(ser.matrix_csv(end.matrix()))
    else:
        out.json({"rows": [str(x) for x in marg.r], "cols": [str(x) for x in marg.c],
                  "steps": args.steps, "seed": args.seed,
                  "start": [list(r) for r in start.entries],
                  "table": [list(r) for r in end.entries]})


def cmd_connectivity(args, out):
    res = connectivity_check(_marginals(args), moves=args.moves)
    row = {"tables": res.tables, "edges": res.edges, "components": res.components,
           "connected": res.connected, "moves": args.moves}
    if out.fmt == "csv":
        out.emit(ser.rows_csv(list(row), [list(row.values())]))
    else:
        out.json(row)


def cmd_scaling_bound(args, out):
    out.json({"m": args.m, "n": args.n, "bound": scaling_bound(args.m, args.n)})


def cmd_verify(args, out):
    from .verify import run
    lines = []
    ok = run(full=args.full, log=lines.append)
    out.emit("\n".join(lines))
    return 0 if ok else 1


def _rational(s: str) -> Fraction:
    try:
        return ser.parse_rational(s)
    except ser.FormatError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv"], default=None,
                        help="output format (default json; tree defaults to text)")
    common.add_argument("--output", "-o", help="write to this file instead of stdout")

    p = _Parser(prog="squarebases", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("uset", parents=[common], help="the vectors U(n)")
    s.add_argument("n", type=int)
    s.add_argument("--verbose", action="store_true", help="include DFS index and symmetry")
    s.set_defaults(func=cmd_uset)

    s = sub.add_parser("tree", parents=[common], help="the labeled tree T_n")
    s.add_argument("n", type=int)
    s.set_defaults(func=cmd_tree)

    s = sub.add_parser("basis", parents=[common], help="B_{m,n} or the d-way product basis")
    s.add_argument("m", type=int, nargs="?")
    s.add_argument("n", type=int, nargs="?")
    s.add_argument("--dway", type=int, nargs="+", metavar="P")
    s.set_defaults(func=cmd_basis)

    for name, func, helptext in (
            ("magic-basis", cmd_magic_basis, "basis of zeroed magic squares"),
            ("sudoku-basis", cmd_sudoku_basis, "basis of Sud_{n^2} (n is the block order)"),
            ("symm-basis", cmd_symm_basis, "symmetric/skew replacement basis of V_{n,n}"),
            ("classify", cmd_classify, "centrosymmetry classes of B_{n,n}")):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("n", type=int)
        s.set_defaults(func=func)

    s = sub.add_parser("expand", parents=[common], help="coordinates of a matrix in a basis")
    s.add_argument("--basis", choices=["vmn", "magic", "sudoku", "symm"], default="vmn")
    s.add_argument("--input", required=True, help="JSON or CSV matrix file, '-' for stdin")
    s.set_defaults(func=cmd_expand)

    s = sub.add_parser("enumerate", parents=[common], help="all order-n Latin squares (n <= 5)")
    s.add_argument("n", type=int)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("census", parents=[common], help="sign classes of Latin square coordinates")
    s.add_argument("n", type=int)
    s.add_argument("--members", action="store_true", help="list member indices per class")
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("check", parents=[common], help="test a square against a predicate")
    s.add_argument("--kind", required=True, choices=[k.value for k in SquareKind])
    s.add_argument("--input", required=True)
    s.add_argument("--magic-sum", type=_rational, default=None,
                   help="S for semimagic/magic (default: first row sum)")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("sample", parents=[common], help="seeded lazy walk on contingency tables")
    s.add_argument("--rows", type=int, nargs="+", required=True)
    s.add_argument("--cols", type=int, nargs="+", required=True)
    s.add_argument("--steps", type=int, required=True)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--start", help="starting table (default: northwest corner rule)")
    s.set_defaults(func=cmd_sample)

    s = sub.add_parser("connectivity", parents=[common], help="is the move graph on T(r,c) connected")
    s.add_argument("--rows", type=int, nargs="+", required=True)
    s.add_argument("--cols", type=int, nargs="+", required=True)
    s.add_argument("--moves", choices=["adjacent", "basic"], default="adjacent")
    s.set_defaults(func=cmd_connectivity)

    s = sub.add_parser("scaling-bound", parents=[common],
                       help="lcm of denominators of F_{a,b} expressed in B_{m,n}")
    s.add_argument("m", type=int)
    s.add_argument("n", type=int)
    s.set_defaults(func=cmd_scaling_bound)

    s = sub.add_parser("verify", parents=[common], help="run the invariant suite")
    s.add_argument("--full", action="store_true", help="include order-5 enumeration and census")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = Output(args.format, args.output)
    try:
        status = args.func(args, out)
    except ResourceGuardError as exc:
        print(f"squarebases: {exc}", file=sys.stderr)
        return 2
    except (UsageError, ValueError, OSError) as exc:
        print(f"squarebases: {exc}", file=sys.stderr)
        return 1
    return status or 0


if __name__ == "__main__":
    sys.exit(main())
