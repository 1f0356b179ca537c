"""Transportation-polytope tools: marginals, translation into V_{m,n}, the
F_{a,b} Markov moves and a seeded random walk on contingency tables."""

from __future__ import annotations

import math
import os
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .basis import basis_vmn
from .exact import RationalMatrix, solve
from .squares import ValidationError

MASK64 = (1 << 64) - 1
GUARD_ENV = "SQUAREBASES_MAX_TABLES"
DEFAULT_MAX_TABLES = 10 ** 6


class ResourceGuardError(RuntimeError):
    """An enumeration would exceed the configured size limit."""


def max_tables() -> int:
    return int(os.environ.get(GUARD_ENV, DEFAULT_MAX_TABLES))


@dataclass(frozen=True)
class Marginals:
    r: tuple[Fraction, ...]
    c: tuple[Fraction, ...]

    def __post_init__(self):
        r = tuple(Fraction(x) for x in self.r)
        c = tuple(Fraction(x) for x in self.c)
        if not r or not c:
            raise ValidationError("marginals must be nonempty")
        if any(x < 0 for x in r + c):
            raise ValidationError("marginals must be nonnegative")
        if sum(r) != sum(c):
            raise ValidationError(f"row total {sum(r)} != column total {sum(c)}")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "c", c)

    @property
    def total(self) -> Fraction:
        return sum(self.r, Fraction(0))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.r), len(self.c)

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self.r + self.c)

    @classmethod
    def of(cls, M: RationalMatrix) -> Marginals:
        return cls(tuple(M.row_sums()), tuple(M.col_sums()))


@dataclass(frozen=True)
class ContingencyTable:
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.entries)
        if not rows or not rows[0] or any(len(r) != len(rows[0]) for r in rows):
            raise ValidationError("table must be a nonempty rectangular array")
        if any(x < 0 for r in rows for x in r):
            raise ValidationError("table entries must be nonnegative")
        object.__setattr__(self, "entries", rows)

    @property
    def marginals(self) -> Marginals:
        return Marginals(tuple(sum(r) for r in self.entries),
                         tuple(sum(c) for c in zip(*self.entries)))

    def matrix(self) -> RationalMatrix:
        return RationalMatrix(self.entries)


def northwest_corner(marg: Marginals) -> ContingencyTable:
    """A starting table for integral marginals via the northwest-corner rule."""
    if not marg.is_integral():
        raise ValidationError("northwest corner rule needs integral marginals")
    r = [int(x) for x in marg.r]
    c = [int(x) for x in marg.c]
    table = [[0] * len(c) for _ in r]
    i = j = 0
    while i < len(r) and j < len(c):
        x = min(r[i], c[j])
        table[i][j] = x
        r[i] -= x
        c[j] -= x
        if r[i] == 0:
            i += 1
        else:
            j += 1
    return ContingencyTable(table)


def translate_to_v(x: RationalMatrix, marg: Marginals | None = None) -> tuple[RationalMatrix, RationalMatrix]:
    """Shift a point of T(r, c) to V_{m,n}: x - r c^T / N.

    Returns the shifted point and the entrywise lower bounds -r_i c_j / N
    that replace x_ij >= 0.
    """
    marg = Marginals.of(x) if marg is None else marg
    if Marginals.of(x) != marg:
        raise ValidationError("matrix does not have the given marginals")
    if x.shape != marg.shape:
        raise ValidationError(f"matrix shape {x.shape} does not match marginals {marg.shape}")
    N = marg.total
    if N == 0:
        return x, RationalMatrix.zeros(*x.shape)
    independence = RationalMatrix([[ri * cj / N for cj in marg.c] for ri in marg.r])
    return x - independence, -independence


def f_move(m: int, n: int, a: int, b: int) -> RationalMatrix:
    """F_{a,b} (1-indexed): +1 at (a,b), (a+1,b+1); -1 at (a+1,b), (a,b+1)."""
    if not (1 <= a <= m - 1 and 1 <= b <= n - 1):
        raise ValueError(f"move index ({a}, {b}) out of range for {m}x{n}")
    nums = [0] * (m * n)
    i, j = a - 1, b - 1
    nums[i * n + j] = nums[(i + 1) * n + j + 1] = 1
    nums[(i + 1) * n + j] = nums[i * n + j + 1] = -1
    return RationalMatrix._scaled((m, n), nums)


def f_basis(m: int, n: int) -> dict[tuple[int, int], RationalMatrix]:
    if m < 2 or n < 2:
        raise ValueError("f_basis needs m, n >= 2")
    return {(a, b): f_move(m, n, a, b) for a in range(1, m) for b in range(1, n)}


def to_f_coordinates(M: RationalMatrix) -> list[list[Fraction]]:
    """Coefficients of M in {F_{a,b}}: the northwest partial sums of M."""
    if not M.has_zero_marginals():
        raise ValidationError("matrix is not in V_{m,n}: marginals are nonzero")
    m, n = M.shape
    out = [[Fraction(0)] * (n - 1) for _ in range(m - 1)]
    for a in range(m - 1):
        for b in range(n - 1):
            s = M[a, b]
            if a:
                s += out[a - 1][b]
            if b:
                s += out[a][b - 1]
            if a and b:
                s -= out[a - 1][b - 1]
            out[a][b] = s
    return out


def from_f_coordinates(coeffs: Sequence[Sequence], m: int, n: int) -> RationalMatrix:
    total = RationalMatrix.zeros(m, n)
    for a, row in enumerate(coeffs, 1):
        for b, c in enumerate(row, 1):
            if c:
                total = total + f_move(m, n, a, b) * c
    return total


def scaling_bound(m: int, n: int) -> int:
    """lcm of the denominators of every F_{a,b} written in B_{m,n}.

    Multiplying the B_{m,n} elements by 1/bound makes every Markov move an
    integer combination of the rescaled basis.  Coordinates come from a
    direct linear solve rather than the orthogonal projection.
    """
    B = basis_vmn(m, n).matrices
    dens = []
    for F in f_basis(m, n).values():
        coeffs = solve(B, F)
        if coeffs is None:
            raise AssertionError("F move outside span of B_{m,n}")
        dens.extend(c.denominator for c in coeffs)
    return math.lcm(*dens)


# -- seeded walk ------------------------------------------------------------

class SplitMix64:
    """splitmix64: state += 0x9E3779B97F4A7C15, then two xor-shift-multiply rounds."""

    GAMMA = 0x9E3779B97F4A7C15
    MUL1 = 0xBF58476D1CE4E5B9
    MUL2 = 0x94D049BB133111EB

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + self.GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * self.MUL1) & MASK64
        z = ((z ^ (z >> 27)) * self.MUL2) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Integer in [0, bound) as the high word of next() * bound."""
        return (self.next() * bound) >> 64


def markov_walk(start: ContingencyTable, steps: int, seed: int) -> ContingencyTable:
    """Lazy walk: propose +-F_{a,b} uniformly, stay put if an entry would go negative."""
    if steps < 0:
        raise ValueError("steps must be nonnegative")
    state = start.entries
    for state in markov_chain(start, steps, seed):
        pass
    return ContingencyTable(state)


def markov_chain(start: ContingencyTable, steps: int, seed: int):
    """Yield the table (as a tuple of tuples) after each of `steps` walk steps.

    Step k draws k = rng.below(2(m-1)(n-1)); bit 0 picks the sign (0 is +),
    k >> 1 = a(n-1) + b picks F_{a+1,b+1}.
    """
    table = [list(r) for r in start.entries]
    m, n = len(table), len(table[0])
    if m < 2 or n < 2:
        for _ in range(steps):
            yield start.entries
        return
    rng = SplitMix64(seed)
    moves = 2 * (m - 1) * (n - 1)
    for _ in range(steps):
        k = rng.below(moves)
        sign = 1 if k & 1 == 0 else -1
        a, b = divmod(k >> 1, n - 1)
        if sign == 1:
            ok = table[a + 1][b] > 0 and table[a][b + 1] > 0
        else:
            ok = table[a][b] > 0 and table[a + 1][b + 1] > 0
        if ok:
            table[a][b] += sign
            table[a + 1][b + 1] += sign
            table[a + 1][b] -= sign
            table[a][b + 1] -= sign
        yield tuple(map(tuple, table))


# -- enumeration and connectivity -------------------------------------------

def enumerate_tables(marg: Marginals, limit: int | None = None) -> list[ContingencyTable]:
    """All nonnegative integer tables with the given marginals (row-by-row backtracking)."""
    if not marg.is_integral():
        raise ValidationError("table enumeration needs integral marginals")
    limit = max_tables() if limit is None else limit
    r = [int(x) for x in marg.r]
    c = [int(x) for x in marg.c]
    m, n = len(r), len(c)
    found: list[ContingencyTable] = []
    rows: list[tuple[int, ...]] = []

    def compositions(total, caps, j=0, prefix=()):
        if j == len(caps) - 1:
            if total <= caps[j]:
                yield prefix + (total,)
            return
        for x in range(min(total, caps[j]) + 1):
            yield from compositions(total - x, caps, j + 1, prefix + (x,))

    def fill(i, remaining):
        if i == m - 1:
            row = tuple(remaining)
            if sum(row) == r[i]:
                found.append(ContingencyTable(tuple(rows) + (row,)))
                if len(found) > limit:
                    raise ResourceGuardError(
                        f"more than {limit} tables; raise {GUARD_ENV} to allow more")
            return
        for row in compositions(r[i], remaining):
            rows.append(row)
            fill(i + 1, [cap - x for cap, x in zip(remaining, row)])
            rows.pop()

    fill(0, c)
    return found


@dataclass(frozen=True)
class Connectivity:
    tables: int
    edges: int
    components: int

    @property
    def connected(self) -> bool:
        return self.components <= 1


def _move_set(m: int, n: int, moves: str):
    if moves == "adjacent":
        return [(a, a + 1, b, b + 1) for a in range(m - 1) for b in range(n - 1)]
    if moves == "basic":
        return [(a, a2, b, b2) for a in range(m) for a2 in range(a + 1, m)
                for b in range(n) for b2 in range(b + 1, n)]
    raise ValueError(f"unknown move set {moves!r}")


def fiber_graph(marg: Marginals, limit: int | None = None, moves: str = "adjacent"):
    """Tables of T(r, c) and the adjacency lists of the move graph.

    moves="adjacent" uses the F_{a,b}; moves="basic" uses every swap on a
    pair of rows and a pair of columns.
    """
    tables = [t.entries for t in enumerate_tables(marg, limit)]
    index = {t: k for k, t in enumerate(tables)}
    m, n = marg.shape
    adj = [[] for _ in tables]
    for k, t in enumerate(tables):
        for a, a2, b, b2 in _move_set(m, n, moves):
            # only the + direction, so each edge is found once
            if t[a2][b] > 0 and t[a][b2] > 0:
                nxt = [list(row) for row in t]
                nxt[a][b] += 1
                nxt[a2][b2] += 1
                nxt[a2][b] -= 1
                nxt[a][b2] -= 1
                j = index[tuple(map(tuple, nxt))]
                adj[k].append(j)
                adj[j].append(k)
    return tables, adj


def connectivity_check(marg: Marginals, limit: int | None = None,
                       moves: str = "adjacent") -> Connectivity:
    """Enumerate T(r, c), join tables differing by a move, count BFS components."""
    tables, adj = fiber_graph(marg, limit, moves)
    seen = [False] * len(tables)
    components = 0
    for s in range(len(tables)):
        if seen[s]:
            continue
        components += 1
        seen[s] = True
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    edges = sum(len(a) for a in adj) // 2
    return Connectivity(len(tables), edges, components)
