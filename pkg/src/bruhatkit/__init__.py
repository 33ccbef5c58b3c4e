"""Exact computations with the Bruhat order on permutations of N, eventually
identity matrices, Bruhat decompositions, Schubert rank conditions and flags."""

from .colmat import (
    ColMatrix,
    Cofinal,
    elementary_add,
    elementary_scale,
    from_row,
    inverse,
    multiply,
    permutation_matrix,
    submatrix_rank,
    triangular_inverse,
)
from .decomp import BruhatFactorization, bruhat_decompose, coset_label, degenerate_to_cell
from .errors import (
    BruhatkitError,
    DimensionMismatch,
    EqualPermutations,
    InternalContradiction,
    InvalidFiltration,
    InvalidPair,
    InvalidPermutation,
    NotADescent,
    NotAField,
    NotAUnit,
    NotComparable,
    NotInvertible,
    RingMismatch,
    TooLarge,
    UndecidableWithoutBound,
)
from .flags import (
    Filtration,
    Flag,
    Subspace,
    chain,
    intersection_gradation,
    is_almost_gradation,
    is_independent,
    nonspanning_demo,
    product_of_chains,
    relative_position,
    spans,
    stabilizes_standard_flag,
)
from .moves import DescentChain, DescentStep, chain_toward, descent_test, going_down_step, reduce_first_difference
from .permutation import (
    IDENTITY,
    Permutation,
    bruhat_leq,
    bruhat_leq_tableau,
    bruhat_lt,
    compare,
    converges_prefix,
    first_difference,
    rank_nw,
    rank_sw,
)
from .scalar import GF, QQ, ZZ, Scalar, invert, is_unit, parse_scalar, ring_from_spec
from .schubert import closure_cover_check, y_sigma_contains

__version__ = "0.1.0"
