"""Orthogonal basis for Sud_{n^2}: zero row, column and n x n block sums."""

from __future__ import annotations

from fractions import Fraction

from .basis import BasisElement, OrthogonalBasis, marginal_constraints
from .exact import DimensionError, RationalMatrix, outer, rank
from .tree import u_set


def e_vector(n: int, i: int) -> tuple[int, ...]:
    """Standard unit vector of length n with a 1 at (1-indexed) position i."""
    return tuple(1 if a == i - 1 else 0 for a in range(n))


def f_vector(n: int) -> tuple[int, ...]:
    return (1,) * n


def block_product(X: RationalMatrix, Y: RationalMatrix) -> RationalMatrix:
    """Block (a, b) of the result is X[a, b] * Y (first factor picks the block)."""
    n1, n2 = X.shape
    p, q = Y.shape
    rows = []
    for a in range(n1):
        for r in range(p):
            rows.append([X[a, b] * Y[r, c] for b in range(n2) for c in range(q)])
    return RationalMatrix(rows)


def _check(n):
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"Sudoku block order must be >= 2, got {n!r}")


def sudoku_basis(n: int) -> OrthogonalBasis:
    """Families A (e^i e^j (x) u^k u^l), B (u^i e^j (x) f u^k), C (e^j u^i (x) u^k f)."""
    _check(n)
    U = u_set(n)
    f = f_vector(n)
    elements = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            X = outer(e_vector(n, i), e_vector(n, j))
            for k in U:
                for l in U:
                    elements.append(BasisElement(
                        block_product(X, outer(k.vector, l.vector)),
                        (i, j, k.dfs_index, l.dfs_index), "sudA"))
    for ui in U:
        for j in range(1, n + 1):
            for uk in U:
                elements.append(BasisElement(
                    block_product(outer(ui.vector, e_vector(n, j)), outer(f, uk.vector)),
                    (ui.dfs_index, j, uk.dfs_index), "sudB"))
    for ui in U:
        for j in range(1, n + 1):
            for uk in U:
                elements.append(BasisElement(
                    block_product(outer(e_vector(n, j), ui.vector), outer(uk.vector, f)),
                    (ui.dfs_index, j, uk.dfs_index), "sudC"))
    return OrthogonalBasis(elements, name=f"Sud_{n * n}")


def block_sums(M: RationalMatrix, n: int) -> list[list[Fraction]]:
    if M.shape != (n * n, n * n):
        raise DimensionError(f"expected a {n * n}x{n * n} matrix, got {M.shape}")
    return [[M.submatrix(a * n, b * n, n, n).total() for b in range(n)] for a in range(n)]


def in_sudoku_space(M: RationalMatrix, n: int) -> bool:
    return M.has_zero_marginals() and not any(x for r in block_sums(M, n) for x in r)


def sudoku_constraints(n: int) -> list[list[int]]:
    N = n * n
    rows = marginal_constraints(N, N)
    for a in range(n):
        for b in range(n):
            rows.append([1 if i // n == a and j // n == b else 0
                         for i in range(N) for j in range(N)])
    return rows


def dimension_sudoku(n: int) -> int:
    """n(n-1)^2(n+2), asserted against n^4 minus the rank of the 3n^2 constraints."""
    _check(n)
    formula = n * (n - 1) ** 2 * (n + 2)
    oracle = n ** 4 - rank(sudoku_constraints(n))
    if formula != oracle:
        raise AssertionError(f"dim Sud_{n * n}: formula {formula} vs rank oracle {oracle}")
    return formula
