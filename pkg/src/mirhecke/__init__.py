"""Exact computational kernel for the mirabolic Hecke algebra.

Subpackages:

- `ring`: Laurent scalars over Z[v, v^-1] (q = v^2), rational functions,
  fraction-free linear solving.
- `combinatorics`: partitions, skew strips, Kostka numbers, permutations,
  and the standard basis index set.
- `algebra`: normal-form arithmetic in the standard basis.
- `symfun`: symmetric polynomials (monomial/Schur bases) and the
  Hall-Littlewood-type generators driving the character theory.
- `characters`: strip weights, the recursive character engine, character
  tables, and class polynomials.
- `tensorrep`: the sparse tensor-space action and the weighted-trace
  character oracle used for cross-validation.
- `cli`: the `mirhecke` command-line interface.
"""

from .ring import LaurentScalar, RationalFunction, solve_linear
from .combinatorics import BasisIndex, SkewStripData, partitions_up_to, standard_basis
from .algebra import AlgebraElement, GeneratorWord, basis_word, hat_T, mul, rmul_gen
from .symfun import SymPoly, qtilde, schur, schur_expand
from .characters import CharacterTable, character_table, class_polynomials, mn_character
from .tensorrep import TensorState, char_oracle, image_rank, trace_D

__all__ = [
    "LaurentScalar",
    "RationalFunction",
    "solve_linear",
    "BasisIndex",
    "SkewStripData",
    "partitions_up_to",
    "standard_basis",
    "AlgebraElement",
    "GeneratorWord",
    "basis_word",
    "hat_T",
    "mul",
    "rmul_gen",
    "SymPoly",
    "qtilde",
    "schur",
    "schur_expand",
    "CharacterTable",
    "character_table",
    "class_polynomials",
    "mn_character",
    "TensorState",
    "char_oracle",
    "image_rank",
    "trace_D",
]
