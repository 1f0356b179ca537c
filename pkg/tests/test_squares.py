from fractions import Fraction

import pytest

from squarebases.basis import basis_vmn, expand
from squarebases.exact import RationalMatrix
from squarebases.squares import (SquareKind, ValidationError, check, count_latin,
                                 count_reduced_latin, enumerate_latin, enumerate_sudoku,
                                 is_latin, is_magic, is_normal_magic, is_semimagic,
                                 is_sudoku, is_zeroed_latin, latin_coordinates,
                                 latin_norm_check, normal_magic_3x3, sign_class_census,
                                 zero_square)

import oracles

CYCLIC3 = [[1, 2, 3], [2, 3, 1], [3, 1, 2]]


def test_latin_predicate():
    assert is_latin(CYCLIC3)
    assert not is_latin([[1, 2, 3], [2, 3, 1], [3, 2, 1]])
    assert not is_latin([[1, 2, 3], [2, 3, 1]])
    assert not is_latin([[0, 1], [1, 0]])


def test_zeroed_latin_predicate():
    z = zero_square(CYCLIC3)
    assert z == RationalMatrix([[-1, 0, 1], [0, 1, -1], [1, -1, 0]])
    assert is_zeroed_latin(z)
    assert check("zeroed_latin", z.tolist())
    with pytest.raises(ValidationError):
        zero_square([[1, 1], [2, 2]])


def test_zeroed_latin_even_order_has_half_integers():
    z = zero_square([[1, 2], [2, 1]])
    assert z[0, 0] == Fraction(-1, 2)


def test_sudoku_predicate():
    board = [[1, 2, 3, 4], [3, 4, 1, 2], [2, 1, 4, 3], [4, 3, 2, 1]]
    assert is_sudoku(board)
    assert not is_sudoku([[1, 2, 3, 4], [2, 3, 4, 1], [3, 4, 1, 2], [4, 1, 2, 3]])
    with pytest.raises(ValueError):
        is_sudoku(CYCLIC3)


def test_magic_predicates():
    lo = [[2, 7, 6], [9, 5, 1], [4, 3, 8]]
    assert is_normal_magic(lo) and is_magic(lo, 15) and is_semimagic(lo, 15)
    assert not is_magic(lo, 14)
    semi = [[1, 6, 8], [5, 7, 3], [9, 2, 4]]
    assert is_semimagic(semi, 15) and not is_magic(semi, 15)
    # repeated entries are not semimagic even with equal line sums
    assert not is_semimagic(CYCLIC3, 6)
    assert check(SquareKind.MAGIC, lo)
    assert check("semimagic", semi) and not check("magic", semi)


def test_normal_magic_sum_is_per_line():
    # 4x4 Durer square: every line sums to n(n^2+1)/2 = 34
    durer = [[16, 3, 2, 13], [5, 10, 11, 8], [9, 6, 7, 12], [4, 15, 14, 1]]
    assert is_normal_magic(durer)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_enumeration_against_bruteforce(n):
    ours = list(enumerate_latin(n))
    ref = oracles.latin_squares_bruteforce(n)
    assert sorted(ours) == sorted(ref)
    assert ours == sorted(ours)
    assert len(set(ours)) == len(ours)


def test_reduced_count_oracle():
    assert count_reduced_latin(4) == oracles.reduced_latin_count(4) == 4
    assert count_latin(4) == 4 * 3 * 2 * 3 * 2 * count_reduced_latin(4)


def test_enumeration_range():
    with pytest.raises(ValueError):
        list(enumerate_latin(6))
    with pytest.raises(ValueError):
        list(enumerate_latin(1))


@pytest.mark.slow
def test_order_five_count():
    assert count_latin(5) == 161280


def test_sudoku_enumeration():
    boards = list(enumerate_sudoku(2))
    assert len(boards) == oracles.sudoku4_count() == 288
    assert all(is_sudoku(b) for b in boards)


def test_normal_magic_enumeration():
    assert sorted(normal_magic_3x3()) == sorted(oracles.magic3_bruteforce())


@pytest.mark.parametrize("n", [2, 3, 4])
def test_norm_sphere(n):
    assert latin_norm_check(n)
    target = Fraction(n * n * (n * n - 1), 12)
    for L in oracles.latin_squares_bruteforce(n):
        z = [[Fraction(x) - Fraction(n + 1, 2) for x in r] for r in L]
        assert oracles.inner(z, z) == target


@pytest.mark.parametrize("n", [3, 4])
def test_latin_coordinates_match_expand(n):
    B = basis_vmn(n, n)
    for L in list(enumerate_latin(n))[:60]:
        assert latin_coordinates(L) == expand(zero_square(L), B).coefficients


def test_order3_census():
    classes = sign_class_census(3)
    assert [c.signature for c in classes] == [
        tuple(map(Fraction, ("0", "1/2", "1/2", "0"))),
        tuple(map(Fraction, ("1/4", "1/4", "1/4", "3/4")))]
    assert [c.size for c in classes] == [4, 8]
    assert sorted(i for c in classes for i in c.members) == list(range(12))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_census_partition_independent_of_normalization(n):
    a = sorted(c.members for c in sign_class_census(n))
    b = sorted(c.members for c in sign_class_census(n, normalized=True))
    assert a == b


@pytest.mark.slow
def test_order5_census():
    classes = sign_class_census(5)
    assert len(classes) == 4665
    assert min(c.size for c in classes) >= 16
