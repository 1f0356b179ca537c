"""Independent reference computations used by the tests.

Nothing here imports from squarebases; each helper is a direct,
deliberately naive restatement of a definition.
"""

from fractions import Fraction
from itertools import permutations, product

import sympy


def mat(rows):
    return [[Fraction(x) for x in r] for r in rows]


def flat(rows):
    return [x for r in rows for x in r]


def inner(a, b):
    return sum(x * y for x, y in zip(flat(a), flat(b)))


def outer(u, v):
    return [[Fraction(x) * y for y in v] for x in u]


def rank(rows):
    return sympy.Matrix([[sympy.Rational(str(x)) for x in r] for r in rows]).rank()


def nullity(constraints, size):
    """Dimension of {x in Q^size : every constraint row annihilates x}."""
    if not constraints:
        return size
    return size - rank(constraints)


def marginal_rows(m, n):
    rows = []
    for i in range(m):
        rows.append([1 if k // n == i else 0 for k in range(m * n)])
    for j in range(n):
        rows.append([1 if k % n == j else 0 for k in range(m * n)])
    return rows


def diagonal_rows(n):
    return [[1 if k // n == k % n else 0 for k in range(n * n)],
            [1 if k // n + k % n == n - 1 else 0 for k in range(n * n)]]


def block_rows(n):
    N = n * n
    return [[1 if (k // N) // n == bi and (k % N) // n == bj else 0 for k in range(N * N)]
            for bi in range(n) for bj in range(n)]


def project(x, basis):
    """Coefficients <x,e>/<e,e> and the residual, by direct summation."""
    coeffs = [inner(x, e) / inner(e, e) for e in basis]
    rebuilt = [[Fraction(0)] * len(x[0]) for _ in x]
    for c, e in zip(coeffs, basis):
        for i, row in enumerate(e):
            for j, v in enumerate(row):
                rebuilt[i][j] += c * v
    residual = [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(x, rebuilt)]
    return coeffs, residual


def latin_squares_bruteforce(n):
    """Every order-n Latin square, built row by row from permutations."""
    perms = list(permutations(range(1, n + 1)))
    out = []

    def grow(rows):
        if len(rows) == n:
            out.append(tuple(rows))
            return
        for p in perms:
            if all(p[j] != r[j] for r in rows for j in range(n)):
                grow(rows + [p])

    grow([])
    return out


def reduced_latin_count(n):
    """Squares whose first row and first column are 1..n in order."""
    return sum(1 for L in latin_squares_bruteforce(n)
               if list(L[0]) == list(range(1, n + 1))
               and [r[0] for r in L] == list(range(1, n + 1)))


def sudoku4_count():
    """Order-4 Sudoku boards by filtering Latin squares on 2x2 blocks."""
    count = 0
    for L in latin_squares_bruteforce(4):
        if all(len({L[2 * bi + i][2 * bj + j] for i in range(2) for j in range(2)}) == 4
               for bi in range(2) for bj in range(2)):
            count += 1
    return count


def magic3_bruteforce():
    out = []
    for p in permutations(range(1, 10)):
        M = [p[0:3], p[3:6], p[6:9]]
        lines = M + [tuple(c) for c in zip(*M)] + [
            (M[0][0], M[1][1], M[2][2]), (M[0][2], M[1][1], M[2][0])]
        if all(sum(line) == 15 for line in lines):
            out.append(tuple(M))
    return out


def tables_bruteforce(r, c):
    """All nonnegative integer tables with row sums r and column sums c."""
    m, n = len(r), len(c)
    out = []
    for cells in product(range(max(r) + 1), repeat=m * n):
        T = [cells[i * n:(i + 1) * n] for i in range(m)]
        if [sum(row) for row in T] == list(r) and [sum(col) for col in zip(*T)] == list(c):
            out.append(tuple(map(tuple, T)))
    return out


def components(vertices, adjacent):
    """Connected components by BFS; adjacent(u, v) -> bool."""
    seen, comps = set(), []
    for s in vertices:
        if s in seen:
            continue
        comp, frontier = {s}, [s]
        seen.add(s)
        while frontier:
            u = frontier.pop()
            for v in vertices:
                if v not in seen and adjacent(u, v):
                    seen.add(v)
                    comp.add(v)
                    frontier.append(v)
        comps.append(comp)
    return comps


def differ_by_adjacent_move(s, t):
    """True if t - s = +-F_{a,b} for some adjacent 2x2 window."""
    m, n = len(s), len(s[0])
    d = [[t[i][j] - s[i][j] for j in range(n)] for i in range(m)]
    for a in range(m - 1):
        for b in range(n - 1):
            for sign in (1, -1):
                want = [[0] * n for _ in range(m)]
                want[a][b] = want[a + 1][b + 1] = sign
                want[a][b + 1] = want[a + 1][b] = -sign
                if d == want:
                    return True
    return False
