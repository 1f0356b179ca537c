"""Exact rational arrays, dot and outer products.

Arrays keep their entries as integer numerators over one shared positive
denominator, reduced so that the gcd of the numerators and the denominator
is 1.  Individual entries come back as :class:`fractions.Fraction`, which is
always in canonical form.
"""

from __future__ import annotations

import math
import operator
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

Rational = Fraction
IntegerVector = tuple  # tuple[int, ...]


class DimensionError(ValueError):
    """Operands have incompatible shapes."""


def _lcm(values: Iterable[int]) -> int:
    return reduce(lambda a, b: a * b // math.gcd(a, b), values, 1)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


class RationalArray:
    """Immutable dense d-way array of exact rationals (row-major)."""

    __slots__ = ("shape", "_num", "_den", "_hash")

    def __init__(self, shape: Sequence[int], entries: Iterable):
        fr = [_as_fraction(x) for x in entries]
        den = _lcm(f.denominator for f in fr)
        nums = [f.numerator * (den // f.denominator) for f in fr]
        self._init(tuple(shape), nums, den)

    def _init(self, shape, nums, den):
        size = math.prod(shape)
        if any(s < 1 for s in shape) or len(nums) != size:
            raise DimensionError(f"{len(nums)} entries do not fill shape {shape}")
        g = math.gcd(den, *nums)
        if g > 1:
            nums = [x // g for x in nums]
            den //= g
        self.shape = shape
        self._num = tuple(nums)
        self._den = den
        self._hash = None

    @classmethod
    def _scaled(cls, shape, nums, den=1):
        obj = cls.__new__(cls)
        obj._init(tuple(shape), list(nums), den)
        return obj

    # -- access -----------------------------------------------------------

    @property
    def ndim(self) -> int:
        return len(self.shape)

    @property
    def size(self) -> int:
        return len(self._num)

    @property
    def numerators(self) -> tuple:
        return self._num

    @property
    def denominator(self) -> int:
        return self._den

    def is_integral(self) -> bool:
        return self._den == 1

    def _flat_index(self, idx) -> int:
        if isinstance(idx, int):
            idx = (idx,)
        if len(idx) != len(self.shape):
            raise IndexError(f"expected {len(self.shape)} indices, got {len(idx)}")
        flat = 0
        for i, s in zip(idx, self.shape):
            if not 0 <= i < s:
                raise IndexError(f"index {idx} out of range for shape {self.shape}")
            flat = flat * s + i
        return flat

    def __getitem__(self, idx) -> Fraction:
        return Fraction(self._num[self._flat_index(idx)], self._den)

    def flat(self) -> list[Fraction]:
        d = self._den
        return [Fraction(x, d) for x in self._num]

    def tolist(self):
        """Nested lists of Fractions."""
        out = self.flat()
        for s in reversed(self.shape[1:]):
            out = [out[i:i + s] for i in range(0, len(out), s)]
        return out

    def total(self) -> Fraction:
        return Fraction(sum(self._num), self._den)

    def is_zero(self) -> bool:
        return not any(self._num)

    # -- arithmetic -------------------------------------------------------

    def _check_shape(self, other):
        if not isinstance(other, RationalArray):
            return NotImplemented
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch: {self.shape} vs {other.shape}")
        return None

    def _combine(self, other, op):
        if self._check_shape(other) is NotImplemented:
            return NotImplemented
        den = _lcm((self._den, other._den))
        fa, fb = den // self._den, den // other._den
        nums = [op(a * fa, b * fb) for a, b in zip(self._num, other._num)]
        return type(self)._scaled(self.shape, nums, den)

    def __add__(self, other):
        return self._combine(other, operator.add)

    def __sub__(self, other):
        return self._combine(other, operator.sub)

    def __neg__(self):
        return type(self)._scaled(self.shape, [-x for x in self._num], self._den)

    def __mul__(self, scalar):
        if isinstance(scalar, RationalArray):
            return NotImplemented
        s = _as_fraction(scalar)
        nums = [x * s.numerator for x in self._num]
        return type(self)._scaled(self.shape, nums, self._den * s.denominator)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        s = _as_fraction(scalar)
        if s == 0:
            raise ZeroDivisionError("division of array by zero")
        return self * (1 / s)

    def __eq__(self, other):
        if not isinstance(other, RationalArray):
            return NotImplemented
        return (self.shape == other.shape and self._den == other._den
                and self._num == other._num)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.shape, self._num, self._den))
        return self._hash

    def __repr__(self):
        return f"{type(self).__name__}(shape={self.shape}, entries={[str(f) for f in self.flat()]})"

    def line_sums(self, axis: int) -> RationalArray:
        """Sum along one axis; the result drops that axis (a 1-d result for 2-d input)."""
        if not 0 <= axis < self.ndim:
            raise ValueError(f"axis {axis} out of range")
        shape = self.shape
        outer_n = math.prod(shape[:axis])
        inner_n = math.prod(shape[axis + 1:])
        n = shape[axis]
        nums = []
        for o in range(outer_n):
            base = o * n * inner_n
            for i in range(inner_n):
                nums.append(sum(self._num[base + k * inner_n + i] for k in range(n)))
        new_shape = shape[:axis] + shape[axis + 1:] or (1,)
        return RationalArray._scaled(new_shape, nums, self._den)


class RationalMatrix(RationalArray):
    """Immutable dense m x n matrix of exact rationals."""

    __slots__ = ()

    def __init__(self, rows: Sequence[Sequence]):
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise DimensionError("matrix must have at least one row and column")
        n = len(rows[0])
        if any(len(r) != n for r in rows):
            raise DimensionError("ragged rows")
        super().__init__((len(rows), n), [x for r in rows for x in r])

    def _init(self, shape, nums, den):
        if len(shape) != 2:
            raise DimensionError(f"matrix needs a 2-d shape, got {shape}")
        super()._init(shape, nums, den)

    @classmethod
    def from_flat(cls, rows: int, cols: int, entries: Iterable) -> RationalMatrix:
        arr = RationalArray((rows, cols), entries)
        return cls._scaled(arr.shape, arr._num, arr._den)

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> RationalMatrix:
        cols = rows if cols is None else cols
        return cls._scaled((rows, cols), [0] * (rows * cols))

    @classmethod
    def ones(cls, rows: int, cols: int | None = None) -> RationalMatrix:
        """The all-ones matrix J."""
        cols = rows if cols is None else cols
        return cls._scaled((rows, cols), [1] * (rows * cols))

    @classmethod
    def unit(cls, rows: int, cols: int, i: int, j: int) -> RationalMatrix:
        nums = [0] * (rows * cols)
        nums[i * cols + j] = 1
        return cls._scaled((rows, cols), nums)

    @property
    def rows(self) -> int:
        return self.shape[0]

    @property
    def cols(self) -> int:
        return self.shape[1]

    def is_square(self) -> bool:
        return self.shape[0] == self.shape[1]

    def row(self, i: int) -> list[Fraction]:
        c, d = self.cols, self._den
        return [Fraction(x, d) for x in self._num[i * c:(i + 1) * c]]

    def column(self, j: int) -> list[Fraction]:
        return [Fraction(x, self._den) for x in self._num[j::self.cols]]

    def transpose(self) -> RationalMatrix:
        m, n = self.shape
        nums = [self._num[i * n + j] for j in range(n) for i in range(m)]
        return RationalMatrix._scaled((n, m), nums, self._den)

    @property
    def T(self) -> RationalMatrix:
        return self.transpose()

    def row_sums(self) -> list[Fraction]:
        n, d = self.cols, self._den
        return [Fraction(sum(self._num[i * n:(i + 1) * n]), d) for i in range(self.rows)]

    def col_sums(self) -> list[Fraction]:
        n, d = self.cols, self._den
        return [Fraction(sum(self._num[j::n]), d) for j in range(n)]

    def has_zero_marginals(self) -> bool:
        return not any(self.row_sums()) and not any(self.col_sums())

    def submatrix(self, r0: int, c0: int, h: int, w: int) -> RationalMatrix:
        n = self.cols
        nums = [self._num[(r0 + i) * n + c0 + j] for i in range(h) for j in range(w)]
        return RationalMatrix._scaled((h, w), nums, self._den)


def dot(a: RationalArray, b: RationalArray) -> Fraction:
    """Entrywise inner product sum(a_ij * b_ij)."""
    if a.shape != b.shape:
        raise DimensionError(f"shape mismatch: {a.shape} vs {b.shape}")
    return Fraction(sum(map(operator.mul, a._num, b._num)), a._den * b._den)


def squared_norm(a: RationalArray) -> Fraction:
    return dot(a, a)


def _vector_parts(v) -> tuple[list[int], int]:
    fr = [_as_fraction(x) for x in v]
    if not fr:
        raise DimensionError("empty vector")
    den = _lcm(f.denominator for f in fr)
    return [f.numerator * (den // f.denominator) for f in fr], den


def outer(a: Sequence, b: Sequence) -> RationalMatrix:
    """The m x n matrix whose (i, j) entry is a_i * b_j."""
    na, da = _vector_parts(a)
    nb, db = _vector_parts(b)
    return RationalMatrix._scaled((len(na), len(nb)),
                                  [x * y for x in na for y in nb], da * db)


def tensor_outer(vectors: Sequence[Sequence]) -> RationalArray:
    """d-fold outer product; entry (j_1..j_d) is the product of (v_k)_{j_k}."""
    if len(vectors) < 2:
        raise ValueError("tensor_outer needs at least two vectors")
    parts = [_vector_parts(v) for v in vectors]
    nums, den = [1], 1
    for vn, vd in parts:
        nums = [x * y for x in nums for y in vn]
        den *= vd
    shape = tuple(len(vn) for vn, _ in parts)
    if len(shape) == 2:
        return RationalMatrix._scaled(shape, nums, den)
    return RationalArray._scaled(shape, nums, den)


def rank(rows: Sequence[Sequence]) -> int:
    """Rank of a rational matrix by Gaussian elimination over Fractions."""
    work = [[_as_fraction(x) for x in r] for r in rows]
    if not work:
        return 0
    ncols = len(work[0])
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(work)) if work[i][c] != 0), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        pr = work[r]
        for i in range(r + 1, len(work)):
            f = work[i][c]
            if f:
                q = f / pr[c]
                work[i] = [x - q * y for x, y in zip(work[i], pr)]
        r += 1
        if r == len(work):
            break
    return r


def solve(columns: Sequence[RationalArray], target: RationalArray) -> list[Fraction] | None:
    """Coefficients c with sum(c_k * columns[k]) == target, or None if inconsistent.

    Plain Gauss-Jordan elimination; assumes the columns are linearly independent.
    """
    k = len(columns)
    system = [[col[idx] for col in columns] + [target[idx]]
              for idx in _all_indices(target.shape)]
    r = 0
    pivots = []
    for c in range(k):
        pivot = next((i for i in range(r, len(system)) if system[i][c] != 0), None)
        if pivot is None:
            raise ValueError("columns are linearly dependent")
        system[r], system[pivot] = system[pivot], system[r]
        p = system[r][c]
        system[r] = [x / p for x in system[r]]
        for i in range(len(system)):
            if i != r and system[i][c]:
                f = system[i][c]
                system[i] = [x - f * y for x, y in zip(system[i], system[r])]
        pivots.append(r)
        r += 1
    if any(row[k] != 0 for row in system[r:]):
        return None
    return [system[i][k] for i in pivots]


def _all_indices(shape):
    idx = [()]
    for s in shape:
        idx = [t + (i,) for t in idx for i in range(s)]
    return idx
