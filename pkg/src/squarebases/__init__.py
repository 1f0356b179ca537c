"""Exact orthogonal bases for zeroed Latin, magic and Sudoku squares."""

from .exact import (DimensionError, Rational, RationalArray, RationalMatrix, dot,
                    outer, rank, solve, squared_norm, tensor_outer)
from .tree import (BasisVector, LabeledTree, Symmetry, TreeNode, build_tree,
                   symmetry_census, u_set, u_vectors, w_vector)
from .basis import (BasisElement, CoordinateVector, OrthogonalBasis, basis_dway,
                    basis_vmn, dimension_vmn, dway_dimension, expand, reconstruct)
from .magic import dimension_magic, in_vbar, magic_basis, magic_parts
from .sudoku import block_product, dimension_sudoku, in_sudoku_space, sudoku_basis
from .symmetry import (Centro, SymmetryClass, Transpose, centro_split,
                       classify_basis_centro, rotate180, symmetrized_basis)
from .squares import (SignClass, SquareKind, ValidationError, check, count_latin,
                      enumerate_latin, enumerate_sudoku, is_latin, is_magic,
                      is_normal_magic, is_semimagic, is_sudoku, is_zeroed_latin,
                      is_zeroed_sudoku, latin_coordinates, sign_class_census,
                      zero_square)
from .transport import (ContingencyTable, Marginals, ResourceGuardError, SplitMix64,
                        connectivity_check, f_basis, f_move, from_f_coordinates,
                        markov_chain, markov_walk, northwest_corner, scaling_bound,
                        to_f_coordinates, translate_to_v)
from .serialize import FormatError, format_rational, parse_rational

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
