"""Latin squares, magic squares and Sudoku boards: predicates, zeroing,
enumeration and coordinate analysis."""

from __future__ import annotations

import enum
import itertools
import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .basis import product_coordinates
from .exact import RationalMatrix

MAX_LATIN_ORDER = 5


class ValidationError(ValueError):
    """Input does not satisfy the predicate its operation requires."""


class SquareKind(enum.Enum):
    LATIN = "latin"
    ZEROED_LATIN = "zeroed_latin"
    SEMIMAGIC = "semimagic"
    MAGIC = "magic"
    NORMAL_MAGIC = "normal_magic"
    SUDOKU = "sudoku"
    ZEROED_SUDOKU = "zeroed_sudoku"


def _entries(M) -> list[list[Fraction]]:
    if isinstance(M, RationalMatrix):
        return M.tolist()
    return [[Fraction(x) for x in row] for row in M]


def _is_square(rows) -> bool:
    return bool(rows) and all(len(r) == len(rows) for r in rows)


def _is_perm(values, n) -> bool:
    return sorted(values) == list(range(1, n + 1))


def is_latin(M) -> bool:
    """Every row and column is a permutation of 1..n."""
    rows = _entries(M)
    if not _is_square(rows):
        return False
    n = len(rows)
    return (all(_is_perm(r, n) for r in rows)
            and all(_is_perm(c, n) for c in zip(*rows)))


def _block_order(N: int) -> int:
    n = math.isqrt(N)
    if n * n != N:
        raise ValueError(f"Sudoku boards need a perfect-square order, got {N}")
    return n


def is_sudoku(M) -> bool:
    rows = _entries(M)
    if not _is_square(rows):
        raise ValueError("Sudoku board must be square")
    N = len(rows)
    n = _block_order(N)
    if not is_latin(rows):
        return False
    for a in range(n):
        for b in range(n):
            block = [rows[a * n + i][b * n + j] for i in range(n) for j in range(n)]
            if not _is_perm(block, N):
                return False
    return True


def _shift(rows, delta):
    return [[x + delta for x in r] for r in rows]


def is_zeroed_latin(M) -> bool:
    rows = _entries(M)
    return _is_square(rows) and is_latin(_shift(rows, Fraction(len(rows) + 1, 2)))


def is_zeroed_sudoku(M) -> bool:
    rows = _entries(M)
    return _is_square(rows) and is_sudoku(_shift(rows, Fraction(len(rows) + 1, 2)))


def is_semimagic(M, S) -> bool:
    """Rows and columns all sum to S and the n^2 entries are distinct."""
    rows = _entries(M)
    if not _is_square(rows):
        return False
    S = Fraction(S)
    flat = [x for r in rows for x in r]
    return (len(set(flat)) == len(flat)
            and all(sum(r) == S for r in rows)
            and all(sum(c) == S for c in zip(*rows)))


def is_magic(M, S) -> bool:
    rows = _entries(M)
    if not is_semimagic(rows, S):
        return False
    n = len(rows)
    return (sum(rows[i][i] for i in range(n)) == S
            and sum(rows[i][n - 1 - i] for i in range(n)) == S)


def is_normal_magic(M) -> bool:
    """Magic with entries exactly 1..n^2 (so S = n(n^2+1)/2)."""
    rows = _entries(M)
    if not _is_square(rows):
        return False
    n = len(rows)
    if sorted(x for r in rows for x in r) != list(range(1, n * n + 1)):
        return False
    return is_magic(rows, Fraction(n * (n * n + 1), 2))


def check(kind: SquareKind | str, M, magic_sum=None) -> bool:
    kind = SquareKind(kind)
    if kind in (SquareKind.SEMIMAGIC, SquareKind.MAGIC):
        rows = _entries(M)
        S = Fraction(magic_sum) if magic_sum is not None else sum(rows[0])
        return (is_semimagic if kind is SquareKind.SEMIMAGIC else is_magic)(rows, S)
    return {
        SquareKind.LATIN: is_latin,
        SquareKind.ZEROED_LATIN: is_zeroed_latin,
        SquareKind.NORMAL_MAGIC: is_normal_magic,
        SquareKind.SUDOKU: is_sudoku,
        SquareKind.ZEROED_SUDOKU: is_zeroed_sudoku,
    }[kind](M)


def zero_square(M, kind: SquareKind | str = SquareKind.LATIN) -> RationalMatrix:
    """Subtract (N+1)/2 from every entry of an order-N Latin square or Sudoku board."""
    kind = SquareKind(kind)
    rows = _entries(M)
    if kind is SquareKind.LATIN:
        ok = is_latin(rows)
    elif kind is SquareKind.SUDOKU:
        ok = _is_square(rows) and is_sudoku(rows)
    else:
        raise ValueError(f"cannot zero a square of kind {kind.value}")
    if not ok:
        raise ValidationError(f"input is not a valid {kind.value} square")
    return RationalMatrix(_shift(rows, -Fraction(len(rows) + 1, 2)))


# -- enumeration ------------------------------------------------------------

def enumerate_latin(n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All order-n Latin squares in lexicographic row-major order (2 <= n <= 5)."""
    if not isinstance(n, int) or not 2 <= n <= MAX_LATIN_ORDER:
        raise ValueError(f"Latin enumeration supports 2 <= n <= {MAX_LATIN_ORDER}, got {n!r}")
    perms = list(itertools.permutations(range(1, n + 1)))
    # bit c*n + (v-1) marks value v used in column c
    masks = [sum(1 << (c * n + v - 1) for c, v in enumerate(p)) for p in perms]
    full = (1 << (n * n)) - 1

    def last_row(used):
        free = full & ~used
        row = []
        for c in range(n):
            bits = (free >> (c * n)) & ((1 << n) - 1)
            row.append(bits.bit_length())
        return tuple(row)

    def extend(rows, used):
        if len(rows) == n - 1:
            yield tuple(rows) + (last_row(used),)
            return
        for p, mask in zip(perms, masks):
            if not used & mask:
                rows.append(p)
                yield from extend(rows, used | mask)
                rows.pop()

    yield from extend([], 0)


def count_latin(n: int) -> int:
    return sum(1 for _ in enumerate_latin(n))


def count_reduced_latin(n: int) -> int:
    """Latin squares with first row and column 1..n, by brute force over row choices."""
    rows_by_first = {
        i: [p for p in itertools.permutations(range(1, n + 1)) if p[0] == i]
        for i in range(2, n + 1)
    }
    first = tuple(range(1, n + 1))
    count = 0
    for rest in itertools.product(*(rows_by_first[i] for i in range(2, n + 1))):
        square = (first,) + rest
        if all(len(set(col)) == n for col in zip(*square)):
            count += 1
    return count


def enumerate_sudoku(n: int = 2) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All order-n^2 Sudoku boards by cell-by-cell backtracking (desk scale: n = 2)."""
    N = n * n
    grid = [[0] * N for _ in range(N)]

    def allowed(i, j):
        used = set(grid[i]) | {grid[r][j] for r in range(N)}
        bi, bj = i - i % n, j - j % n
        used |= {grid[bi + a][bj + b] for a in range(n) for b in range(n)}
        return [v for v in range(1, N + 1) if v not in used]

    def fill(k):
        if k == N * N:
            yield tuple(tuple(r) for r in grid)
            return
        i, j = divmod(k, N)
        for v in allowed(i, j):
            grid[i][j] = v
            yield from fill(k + 1)
        grid[i][j] = 0

    yield from fill(0)


def normal_magic_3x3() -> list[tuple[tuple[int, ...], ...]]:
    """All normal 3x3 magic squares, by filtering permutations of 1..9 with row pruning."""
    found = []
    for top in itertools.permutations(range(1, 10), 3):
        if sum(top) != 15:
            continue
        rest = [v for v in range(1, 10) if v not in top]
        for mid in itertools.permutations(rest, 3):
            if sum(mid) != 15:
                continue
            bottom_vals = [v for v in rest if v not in mid]
            for bottom in itertools.permutations(bottom_vals):
                sq = (top, mid, tuple(bottom))
                if is_normal_magic(sq):
                    found.append(sq)
    return found


# -- coordinates ------------------------------------------------------------

def latin_norm_check(n: int) -> bool:
    """Every zeroed order-n Latin square has squared norm n^2(n^2-1)/12."""
    target = Fraction(n * n * (n * n - 1), 12)
    for L in enumerate_latin(n):
        # 2z = 2L - (n+1) keeps the arithmetic integral
        s = sum((2 * x - n - 1) ** 2 for row in L for x in row)
        if Fraction(s, 4) != target:
            return False
    return True


@dataclass(frozen=True)
class SignClass:
    signature: tuple[Fraction, ...]
    members: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)


def latin_coordinates(L: Sequence[Sequence[int]]) -> tuple[Fraction, ...]:
    """Coordinates of zero_square(L) in B_{n,n}."""
    n = len(L)
    doubled = [[2 * x - n - 1 for x in row] for row in L]
    return tuple(c / 2 for c in product_coordinates(doubled, n, n))


def sign_class_census(n: int, normalized: bool = False) -> list[SignClass]:
    """Group the order-n Latin squares by entrywise |coordinates| in B_{n,n}.

    Members are indices into enumerate_latin(n).  With normalized=True the
    grouping key is the squared orthonormal coordinate c_k^2 |e_k|^2
    instead, which must give the same partition.
    """
    from .tree import u_set

    norms = None
    if normalized:
        norms = [Fraction(u.squared_norm() * v.squared_norm())
                 for u in u_set(n) for v in u_set(n)]
    groups: dict[tuple, list[int]] = defaultdict(list)
    for idx, L in enumerate(enumerate_latin(n)):
        coords = latin_coordinates(L)
        if normalized:
            key = tuple(c * c * w for c, w in zip(coords, norms))
        else:
            key = tuple(abs(c) for c in coords)
        groups[key].append(idx)
    return [SignClass(k, tuple(v)) for k, v in sorted(groups.items())]
