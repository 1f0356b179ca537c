"""The w(n) vectors, the labeled binary tree T_n and the orthogonal set U(n)."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator


class Symmetry(enum.Enum):
    SYMMETRIC = "symmetric"
    SKEW_SYMMETRIC = "skew_symmetric"


def _check_order(n: int) -> None:
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"order must be an integer >= 2, got {n!r}")


@lru_cache(maxsize=None)
def w_vector(n: int) -> tuple[int, ...]:
    """Root label of T_n.

    Odd n alternates (n-1)/2 at even positions and -(n+1)/2 at odd
    positions, so the entries sum to zero; even n > 4 repeats w(n/2) twice.
    """
    _check_order(n)
    if n == 2:
        return (1, -1)
    if n == 4:
        return (1, -1, -1, 1)
    if n % 2:
        pos, neg = (n - 1) // 2, -(n + 1) // 2
        return tuple(neg if i % 2 else pos for i in range(n))
    half = w_vector(n // 2)
    return half + half


@dataclass(frozen=True)
class TreeNode:
    label: tuple[int, ...]
    left: TreeNode | None = None
    right: TreeNode | None = None

    @property
    def positive(self) -> tuple[int, ...]:
        return tuple(i for i, x in enumerate(self.label) if x > 0)

    @property
    def negative(self) -> tuple[int, ...]:
        return tuple(i for i, x in enumerate(self.label) if x < 0)

    def is_leaf(self) -> bool:
        return self.left is None and self.right is None

    def preorder(self) -> Iterator[TreeNode]:
        yield self
        if self.left is not None:
            yield from self.left.preorder()
        if self.right is not None:
            yield from self.right.preorder()


@dataclass(frozen=True)
class LabeledTree:
    n: int
    root: TreeNode

    def nodes(self) -> list[TreeNode]:
        """Vertices in depth-first preorder, left child before right."""
        return list(self.root.preorder())

    def __len__(self) -> int:
        return len(self.nodes())

    def render(self, zero: str = "_") -> str:
        """Indented text, one node per line; children marked L/R."""
        lines: list[str] = []

        def fmt(label):
            return " ".join(zero if x == 0 else str(x) for x in label)

        def walk(node, depth, tag):
            lines.append("  " * depth + tag + fmt(node.label))
            if node.left is not None:
                walk(node.left, depth + 1, "L: ")
            if node.right is not None:
                walk(node.right, depth + 1, "R: ")

        walk(self.root, 0, "")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        def conv(node):
            if node is None:
                return None
            return {"label": list(node.label), "left": conv(node.left), "right": conv(node.right)}
        return {"n": self.n, "root": conv(self.root)}


def _substitute(n: int, positions: tuple[int, ...]) -> tuple[int, ...]:
    w = w_vector(len(positions))
    label = [0] * n
    for r, i in enumerate(positions):
        label[i] = w[r]
    return tuple(label)


def _grow(n: int, label: tuple[int, ...]) -> TreeNode:
    pos = tuple(i for i, x in enumerate(label) if x > 0)
    neg = tuple(i for i, x in enumerate(label) if x < 0)
    left = _grow(n, _substitute(n, pos)) if len(pos) >= 2 else None
    right = _grow(n, _substitute(n, neg)) if len(neg) >= 2 else None
    return TreeNode(label, left, right)


@lru_cache(maxsize=None)
def build_tree(n: int) -> LabeledTree:
    """T_n: a vertex gets a left (right) child built on its positive
    (negative) positions whenever there are at least two of them."""
    _check_order(n)
    return LabeledTree(n, _grow(n, w_vector(n)))


def classify(vector: tuple[int, ...]) -> Symmetry:
    """Skew-symmetric iff the nonzero entries read (1, -1)."""
    nonzero = [x for x in vector if x]
    return Symmetry.SKEW_SYMMETRIC if nonzero == [1, -1] else Symmetry.SYMMETRIC


@dataclass(frozen=True)
class BasisVector:
    vector: tuple[int, ...]
    dfs_index: int
    symmetry: Symmetry = field(compare=False)

    @property
    def is_skew(self) -> bool:
        return self.symmetry is Symmetry.SKEW_SYMMETRIC

    def squared_norm(self) -> int:
        return sum(x * x for x in self.vector)


@lru_cache(maxsize=None)
def u_set(n: int) -> tuple[BasisVector, ...]:
    """U(n): the labels of T_n in DFS preorder, indexed from 1."""
    return tuple(BasisVector(node.label, i, classify(node.label))
                 for i, node in enumerate(build_tree(n).nodes(), start=1))


def u_vectors(n: int) -> list[tuple[int, ...]]:
    return [b.vector for b in u_set(n)]


def symmetry_census(n: int) -> tuple[int, int]:
    """(number skew-symmetric, number symmetric) in U(n), checked against floor formulas."""
    basis = u_set(n)
    skew = sum(b.is_skew for b in basis)
    sym = len(basis) - skew
    if (skew, sym) != (n // 2, (n - 1) // 2):
        raise AssertionError(f"U({n}) census {(skew, sym)} disagrees with {(n // 2, (n - 1) // 2)}")
    return skew, sym
