"""Orthogonal bases built from outer products of U(n) vectors, and exact projection."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exact import (DimensionError, RationalArray, RationalMatrix, dot, outer,
                    rank, tensor_outer)
from .tree import u_set


@dataclass(frozen=True)
class BasisElement:
    matrix: RationalArray
    index: tuple
    tag: str = "bv"
    squared_norm: Fraction = field(default=None)

    def __post_init__(self):
        if self.squared_norm is None:
            object.__setattr__(self, "squared_norm", dot(self.matrix, self.matrix))

    def label(self) -> str:
        return f"{self.tag}{''.join(str(i) for i in self.index)}" if all(
            i < 10 for i in self.index) else f"{self.tag}{self.index}"


class OrthogonalBasis:
    """Ordered, pairwise-orthogonal list of nonzero arrays of one shape."""

    def __init__(self, elements: Sequence[BasisElement], name: str = ""):
        self.elements = tuple(elements)
        self.name = name
        if not self.elements:
            raise ValueError("empty basis")
        shape = self.elements[0].matrix.shape
        for e in self.elements:
            if e.matrix.shape != shape:
                raise DimensionError("basis elements differ in shape")
            if e.squared_norm <= 0:
                raise ValueError(f"basis element {e.index} is zero")
        self.shape = shape

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, k) -> BasisElement:
        return self.elements[k]

    @property
    def matrices(self) -> list[RationalArray]:
        return [e.matrix for e in self.elements]

    def find(self, *index, tag: str | None = None) -> RationalArray:
        for e in self.elements:
            if e.index == index and (tag is None or e.tag == tag):
                return e.matrix
        raise KeyError(index)

    def gram(self) -> list[list[Fraction]]:
        mats = self.matrices
        return [[dot(a, b) for b in mats] for a in mats]

    def is_orthogonal(self) -> bool:
        mats = self.matrices
        return all(dot(mats[i], mats[j]) == 0
                   for i in range(len(mats)) for j in range(i + 1, len(mats)))


@dataclass(frozen=True)
class CoordinateVector:
    coefficients: tuple[Fraction, ...]
    residual: RationalArray

    @property
    def residual_is_zero(self) -> bool:
        return self.residual.is_zero()

    def __len__(self):
        return len(self.coefficients)


def _check_dims(*dims):
    for p in dims:
        if not isinstance(p, int) or p < 2:
            raise ValueError(f"dimensions must be integers >= 2, got {p!r}")


def basis_vmn(m: int, n: int) -> OrthogonalBasis:
    """B_{m,n}: products u u' ordered lexicographically by DFS index."""
    _check_dims(m, n)
    elements = [BasisElement(outer(u.vector, v.vector), (u.dfs_index, v.dfs_index))
                for u in u_set(m) for v in u_set(n)]
    return OrthogonalBasis(elements, name=f"B_{m},{n}")


def basis_dway(dims: Sequence[int]) -> OrthogonalBasis:
    """d-fold products u^{i_1} ... u^{i_d}, orthogonal basis of the d-way zero-margin space."""
    dims = tuple(dims)
    if len(dims) < 2:
        raise ValueError("need at least two dimensions")
    _check_dims(*dims)
    elements = []
    for combo in itertools.product(*(u_set(p) for p in dims)):
        arr = tensor_outer([u.vector for u in combo])
        elements.append(BasisElement(arr, tuple(u.dfs_index for u in combo)))
    return OrthogonalBasis(elements, name="B_" + ",".join(map(str, dims)))


def expand(x: RationalArray, basis: OrthogonalBasis) -> CoordinateVector:
    """Orthogonal projection coefficients dot(x, e)/|e|^2 plus the leftover x - sum c e."""
    if x.shape != basis.shape:
        raise DimensionError(f"input shape {x.shape} does not match basis shape {basis.shape}")
    coeffs = tuple(dot(x, e.matrix) / e.squared_norm for e in basis)
    return CoordinateVector(coeffs, x - _combination(coeffs, basis))


def _combination(coeffs, basis) -> RationalArray:
    total = None
    for c, e in zip(coeffs, basis):
        if c:
            term = e.matrix * c
            total = term if total is None else total + term
    if total is None:
        return basis[0].matrix * 0
    return total


def reconstruct(coords, basis: OrthogonalBasis) -> RationalArray:
    """sum c_k e_k for a CoordinateVector or a plain coefficient sequence."""
    coeffs = coords.coefficients if isinstance(coords, CoordinateVector) else tuple(coords)
    if len(coeffs) != len(basis):
        raise DimensionError(f"{len(coeffs)} coefficients for a basis of size {len(basis)}")
    return _combination([Fraction(c) for c in coeffs], basis)


def product_coordinates(x_scaled: Sequence[Sequence[int]], m: int, n: int) -> tuple[Fraction, ...]:
    """Coordinates of an integer matrix in B_{m,n}, computed as u^T X u' / (|u|^2 |u'|^2).

    Same numbers as expand(x, basis_vmn(m, n)) without building Fraction
    matrices; used for bulk work such as the sign-class census.
    """
    U, V = u_set(m), u_set(n)
    xv = [[sum(row[b] * v.vector[b] for b in range(n)) for v in V] for row in x_scaled]
    out = []
    for u in U:
        un = u.squared_norm()
        for jv, v in enumerate(V):
            num = sum(u.vector[a] * xv[a][jv] for a in range(m))
            out.append(Fraction(num, un * v.squared_norm()))
    return tuple(out)


def dimension_vmn(m: int, n: int) -> int:
    """(m-1)(n-1), asserted equal to mn minus the rank of the marginal constraints."""
    formula = (m - 1) * (n - 1)
    oracle = m * n - rank(marginal_constraints(m, n))
    if formula != oracle:
        raise AssertionError(f"dim V_{m},{n}: formula {formula} vs rank oracle {oracle}")
    return formula


def marginal_constraints(m: int, n: int) -> list[list[int]]:
    """Row-sum then column-sum constraints on row-major m x n variables."""
    rows = []
    for i in range(m):
        rows.append([1 if a == i else 0 for a in range(m) for _ in range(n)])
    for j in range(n):
        rows.append([1 if b == j else 0 for _ in range(m) for b in range(n)])
    return rows


def dway_line_sums_zero(arr: RationalArray) -> bool:
    """True when every axis-parallel line of the array sums to zero."""
    return all(arr.line_sums(axis).is_zero() for axis in range(arr.ndim))


def dway_dimension(dims: Sequence[int]) -> int:
    return math.prod(p - 1 for p in dims)
