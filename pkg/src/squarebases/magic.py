"""Orthogonal basis for the zero-diagonal-sum subspace of V_{n,n} (zeroed magic squares)."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .basis import BasisElement, OrthogonalBasis
from .exact import DimensionError, RationalMatrix, outer, rank
from .basis import marginal_constraints
from .tree import u_set, u_vectors


@dataclass(frozen=True)
class MagicBasisParts:
    n: int
    off_diagonal: tuple[BasisElement, ...]
    x_list: tuple[RationalMatrix, ...]   # u u for skew-symmetric u, DFS order
    y_list: tuple[RationalMatrix, ...]   # u u for symmetric u, DFS order
    xbar: tuple[RationalMatrix, ...]
    ybar: tuple[RationalMatrix, ...]
    ell_values: tuple[int, ...]
    ell: int

    @property
    def k(self) -> int:
        return len(self.x_list)

    @property
    def k_prime(self) -> int:
        return len(self.y_list)


def _combine(weights, mats) -> RationalMatrix:
    total = None
    for w, m in zip(weights, mats):
        if w:
            total = m * w if total is None else total + m * w
    return total


def magic_parts(n: int) -> MagicBasisParts:
    if not isinstance(n, int) or n < 3:
        raise ValueError(f"magic basis needs n >= 3, got {n!r}")
    U = u_set(n)
    off = tuple(BasisElement(outer(u.vector, v.vector), (u.dfs_index, v.dfs_index))
                for u in U for v in U if u.dfs_index != v.dfs_index)
    skew = [u for u in U if u.is_skew]
    sym = [u for u in U if not u.is_skew]
    xs = tuple(outer(u.vector, u.vector) for u in skew)
    ys = tuple(outer(u.vector, u.vector) for u in sym)
    k, kp = len(xs), len(ys)

    # x-bar^i = sum_j u^{k;i}_j x^j
    xbar = tuple(_combine(c, xs) for c in u_vectors(k)[:k - 1]) if k >= 2 else ()

    ells = tuple(u.squared_norm() for u in sym)
    ell = math.lcm(*ells) if ells else 1
    # y-bar^i = sum_j (ell/ell_j) u^{k';i}_j y^j
    ybar = ()
    if kp >= 2:
        ybar = tuple(_combine([Fraction(ell, lj) * c for lj, c in zip(ells, coeffs)], ys)
                     for coeffs in u_vectors(kp)[:kp - 1])
    return MagicBasisParts(n, off, xs, ys, xbar, ybar, ells, ell)


def magic_basis(n: int) -> OrthogonalBasis:
    """bv_ij for i != j, then x-bar^1..x-bar^{k-1}, then y-bar^1..y-bar^{k'-1}."""
    parts = magic_parts(n)
    elements = list(parts.off_diagonal)
    elements += [BasisElement(m, (i,), "xbar") for i, m in enumerate(parts.xbar, 1)]
    elements += [BasisElement(m, (i,), "ybar") for i, m in enumerate(parts.ybar, 1)]
    return OrthogonalBasis(elements, name=f"Vbar_{n}")


def diagonal_sums(M: RationalMatrix) -> tuple[Fraction, Fraction]:
    """(main diagonal sum, antidiagonal sum)."""
    if M.rows != M.cols:
        raise DimensionError(f"diagonal sums need a square matrix, got {M.shape}")
    n = M.rows
    return (sum((M[i, i] for i in range(n)), Fraction(0)),
            sum((M[i, n - 1 - i] for i in range(n)), Fraction(0)))


def in_vbar(M: RationalMatrix) -> bool:
    return M.has_zero_marginals() and diagonal_sums(M) == (0, 0)


def magic_constraints(n: int) -> list[list[int]]:
    rows = marginal_constraints(n, n)
    rows.append([1 if i == j else 0 for i in range(n) for j in range(n)])
    rows.append([1 if i + j == n - 1 else 0 for i in range(n) for j in range(n)])
    return rows


def dimension_magic(n: int) -> int:
    """(n-1)^2 - 2, asserted against n^2 minus the rank of all 2n + 2 constraints."""
    if not isinstance(n, int) or n < 3:
        raise ValueError(f"magic subspace needs n >= 3, got {n!r}")
    formula = (n - 1) ** 2 - 2
    oracle = n * n - rank(magic_constraints(n))
    if formula != oracle:
        raise AssertionError(f"dim Vbar_{n}: formula {formula} vs rank oracle {oracle}")
    return formula
