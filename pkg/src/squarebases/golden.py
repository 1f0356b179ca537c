"""Constructed objects compared with hand-transcribed reference matrices.

Reference values live in golden/reference.json.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from .basis import basis_vmn, expand
from .exact import RationalMatrix
from .magic import magic_basis, magic_parts
from .sudoku import sudoku_basis
from .symmetry import symmetrized_basis
from .tree import build_tree, u_vectors, w_vector


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


@lru_cache(maxsize=None)
def load() -> dict:
    text = resources.files("squarebases").joinpath("golden/reference.json").read_text()
    return json.loads(text)


def _m(rows) -> RationalMatrix:
    return RationalMatrix(rows)


def _tree_matches(node, ref) -> bool:
    if node is None or ref is None:
        return node is None and ref is None
    return (list(node.label) == ref["label"]
            and _tree_matches(node.left, ref["left"])
            and _tree_matches(node.right, ref["right"]))


def check_w_table() -> Check:
    ref = load()["w_table"]
    bad = [n for n, w in ref.items() if list(w_vector(int(n))) != w]
    return Check("w(n) reference table, n=3..12", not bad, f"mismatch at n={bad}" if bad else "")


def check_u_sets() -> list[Check]:
    return [Check(f"U({n})", [list(u) for u in u_vectors(int(n))] == ref)
            for n, ref in load()["u_sets"].items()]


def check_tree_11() -> Check:
    t = build_tree(11)
    return Check("tree T_11", _tree_matches(t.root, load()["tree_11"]) and len(t) == 10)


def check_b33() -> Check:
    B = basis_vmn(3, 3)
    ref = load()["b33"]
    ok = len(B) == 4 and all(
        B.find(int(k[0]), int(k[1])) == _m(rows) for k, rows in ref.items())
    order = [e.index for e in B] == [(1, 1), (1, 2), (2, 1), (2, 2)]
    return Check("B_3,3 four matrices", ok and order)


def check_table2() -> Check:
    B = basis_vmn(3, 3)
    rows = load()["table2"]
    bad = []
    for k, row in enumerate(rows, 1):
        coords = expand(_m(row["square"]), B)
        want = tuple(Fraction(c) for c in row["coefficients"])
        if coords.coefficients != want or not coords.residual_is_zero:
            bad.append(k)
    return Check("order-3 Latin expansions (12 rows)", not bad and len(rows) == 12,
                 f"rows {bad} differ" if bad else "")


def check_symmetrized_33() -> Check:
    got = symmetrized_basis(3).matrices
    return Check("symmetrized B_3,3", got == [_m(r) for r in load()["symmetrized_33"]])


def check_vbar_3() -> Check:
    got = magic_basis(3).matrices
    return Check("Vbar_3 = <bv12, bv21>", got == [_m(r) for r in load()["vbar_3"]])


def check_magic_6() -> list[Check]:
    ref = load()["magic_6"]
    p = magic_parts(6)
    return [
        Check("n=6 ell_1, ell_2, ell", list(p.ell_values) == ref["ell_values"] and p.ell == ref["ell"]),
        Check("n=6 x1 (built from u3; reference misprints the row-6 sign)",
              p.x_list[0] == _m(ref["x1_corrected"]) and p.x_list[0] != _m(ref["x1_misprint"])),
        Check("n=6 x2, x3", p.x_list[1:] == (_m(ref["x2"]), _m(ref["x3"]))),
        Check("n=6 y1, y2", p.y_list == (_m(ref["y1"]), _m(ref["y2"]))),
        Check("n=6 xbar1, xbar2", p.xbar == (_m(ref["xbar1"]), _m(ref["xbar2"]))),
        Check("n=6 ybar1", p.ybar == (_m(ref["ybar1"]),)),
    ]


def check_sudoku_3() -> Check:
    S = sudoku_basis(3)
    bad = []
    for item in load()["sudoku_3"]:
        try:
            got = S.find(*item["index"], tag=item["tag"])
        except KeyError:
            got = None
        if got != _m(item["matrix"]):
            bad.append(item["tag"])
    return Check("Sudoku n=3 examples (A, B, C)", not bad, f"{bad} differ" if bad else "")


def all_checks() -> list[Check]:
    return [check_w_table(), *check_u_sets(), check_tree_11(), check_b33(),
            check_table2(), check_symmetrized_33(), check_vbar_3(),
            *check_magic_6(), check_sudoku_3()]
