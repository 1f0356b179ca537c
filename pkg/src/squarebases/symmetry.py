"""Centrosymmetric splitting of V_{n,n} and the symmetric/skew replacement basis."""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass

from .basis import BasisElement, OrthogonalBasis, basis_vmn
from .exact import DimensionError, RationalMatrix


class Centro(enum.Enum):
    CENTROSYMMETRIC = "centrosymmetric"
    SKEW_CENTROSYMMETRIC = "skew_centrosymmetric"
    NEITHER = "neither"


class Transpose(enum.Enum):
    SYMMETRIC = "symmetric"
    SKEW_SYMMETRIC = "skew_symmetric"
    NEITHER = "neither"


@dataclass(frozen=True)
class SymmetryClass:
    centro: Centro
    transpose: Transpose


def _square(A: RationalMatrix):
    if not A.is_square():
        raise DimensionError(f"expected a square matrix, got {A.shape}")


def rotate180(A: RationalMatrix) -> RationalMatrix:
    _square(A)
    return RationalMatrix._scaled(A.shape, A.numerators[::-1], A.denominator)


def centro_split(A: RationalMatrix) -> tuple[RationalMatrix, RationalMatrix]:
    """(A + rot(A))/2 and (A - rot(A))/2."""
    r = rotate180(A)
    return (A + r) / 2, (A - r) / 2


def classify(A: RationalMatrix) -> SymmetryClass:
    _square(A)
    r, t = rotate180(A), A.transpose()
    if A == r:
        c = Centro.CENTROSYMMETRIC
    elif A == -r:
        c = Centro.SKEW_CENTROSYMMETRIC
    else:
        c = Centro.NEITHER
    if A == t:
        s = Transpose.SYMMETRIC
    elif A == -t:
        s = Transpose.SKEW_SYMMETRIC
    else:
        s = Transpose.NEITHER
    return SymmetryClass(c, s)


def classify_basis_centro(basis: OrthogonalBasis) -> tuple[list[SymmetryClass], Counter]:
    classes = [classify(e.matrix) for e in basis]
    return classes, Counter(c.centro for c in classes)


def symmetrized_basis(n: int) -> OrthogonalBasis:
    """B_{n,n} with each pair {bv_ij, bv_ji}, i < j, replaced by its symmetric and skew parts."""
    B = basis_vmn(n, n)
    out = []
    for e in B:
        i, j = e.index
        if i == j:
            out.append(e)
        elif i < j:
            M, Mt = e.matrix, e.matrix.transpose()
            out.append(BasisElement((M + Mt) / 2, (i, j), "sym"))
            out.append(BasisElement((M - Mt) / 2, (i, j), "skew"))
    return OrthogonalBasis(out, name=f"Bsym_{n},{n}")
