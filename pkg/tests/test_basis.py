import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from squarebases.basis import (basis_dway, basis_vmn, dimension_vmn, dway_dimension,
                               dway_line_sums_zero, expand, product_coordinates,
                               reconstruct)
from squarebases.exact import DimensionError, RationalMatrix, dot
from squarebases.tree import u_vectors

import oracles


@pytest.mark.parametrize("m,n", [(2, 2), (2, 5), (3, 3), (4, 3), (5, 6), (7, 7)])
def test_vmn_gram_diagonal(m, n):
    B = basis_vmn(m, n)
    assert len(B) == (m - 1) * (n - 1)
    mats = [oracles.mat(e.matrix.tolist()) for e in B]
    for i, a in enumerate(mats):
        assert oracles.inner(a, a) > 0
        for b in mats[i + 1:]:
            assert oracles.inner(a, b) == 0
        assert all(sum(r) == 0 for r in a) and all(sum(c) == 0 for c in zip(*a))


@pytest.mark.parametrize("m,n", [(m, n) for m in range(2, 9) for n in range(2, 9)])
def test_dimension_formula_against_sympy_rank(m, n):
    assert dimension_vmn(m, n) == oracles.nullity(oracles.marginal_rows(m, n), m * n)


def test_order_is_lexicographic_dfs():
    assert [e.index for e in basis_vmn(3, 4)] == [(i, j) for i in (1, 2) for j in (1, 2, 3)]
    assert basis_vmn(3, 4).find(2, 3) == RationalMatrix(
        oracles.outer(u_vectors(3)[1], u_vectors(4)[2]))


@st.composite
def pair_of_vectors(draw):
    m = draw(st.integers(2, 6))
    n = draw(st.integers(2, 6))
    vec = lambda k: st.lists(st.integers(-5, 5), min_size=k, max_size=k)
    return draw(vec(m)), draw(vec(n)), draw(vec(m)), draw(vec(n))


@given(pair_of_vectors())
def test_outer_product_inner_product_factorizes(vs):
    u, up, v, vp = vs
    lhs = oracles.inner(oracles.outer(u, up), oracles.outer(v, vp))
    assert lhs == sum(a * b for a, b in zip(u, v)) * sum(a * b for a, b in zip(up, vp))
    from squarebases.exact import outer
    assert dot(outer(u, up), outer(v, vp)) == lhs


@st.composite
def zero_marginal_matrix(draw):
    m = draw(st.integers(2, 5))
    n = draw(st.integers(2, 5))
    inner = draw(st.lists(st.lists(st.integers(-9, 9), min_size=n - 1, max_size=n - 1),
                          min_size=m - 1, max_size=m - 1))
    rows = [r + [-sum(r)] for r in inner]
    rows.append([-sum(c) for c in zip(*rows)])
    return rows


@given(zero_marginal_matrix())
@settings(max_examples=60)
def test_expand_reconstructs_zero_marginal_matrices(rows):
    m, n = len(rows), len(rows[0])
    B = basis_vmn(m, n)
    x = RationalMatrix(rows)
    coords = expand(x, B)
    assert coords.residual_is_zero
    assert reconstruct(coords, B) == x
    want, residual = oracles.project(oracles.mat(rows), [oracles.mat(e.matrix.tolist()) for e in B])
    assert list(coords.coefficients) == want
    assert coords.coefficients == product_coordinates(rows, m, n)


def test_expand_reports_residual_outside_v():
    B = basis_vmn(2, 2)
    c = expand(RationalMatrix([[1, 0], [0, 0]]), B)
    assert c.coefficients == (Fraction(1, 4),)
    assert not c.residual_is_zero


def test_expand_shape_mismatch():
    with pytest.raises(DimensionError):
        expand(RationalMatrix([[1, -1]]), basis_vmn(2, 2))
    with pytest.raises(DimensionError):
        reconstruct([1, 2], basis_vmn(2, 2))


def direct_line_sums_zero(arr, dims):
    """Every 1-marginal by direct summation over all free indices."""
    for axis in range(len(dims)):
        others = [range(p) for k, p in enumerate(dims) if k != axis]
        for rest in itertools.product(*others):
            total = 0
            for t in range(dims[axis]):
                idx = list(rest)
                idx.insert(axis, t)
                total += arr[tuple(idx)]
            if total:
                return False
    return True


@pytest.mark.parametrize("dims", [(2, 2, 2), (3, 3, 3), (3, 4, 5), (2, 3, 2, 3)])
def test_dway_basis(dims):
    D = basis_dway(dims)
    assert len(D) == dway_dimension(dims)
    mats = D.matrices
    for i, a in enumerate(mats):
        assert dway_line_sums_zero(a) and direct_line_sums_zero(a, dims)
        for b in mats[i + 1:]:
            assert dot(a, b) == 0


def test_dway_dimension_against_rank():
    dims = (3, 3, 3)
    cells = list(itertools.product(*(range(p) for p in dims)))
    rows = []
    for axis in range(3):
        for rest in itertools.product(*(range(p) for k, p in enumerate(dims) if k != axis)):
            rows.append([1 if tuple(c[k] for k in range(3) if k != axis) == rest else 0
                         for c in cells])
    assert dway_dimension(dims) == oracles.nullity(rows, len(cells))


def test_dway_needs_two_dims():
    with pytest.raises(ValueError):
        basis_dway([3])
    with pytest.raises(ValueError):
        basis_vmn(1, 3)
