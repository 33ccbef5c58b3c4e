import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bruhatkit.colmat import (
    ColMatrix,
    Cofinal,
    elementary_add,
    elementary_scale,
    inverse,
    multiply,
    permutation_matrix,
    submatrix_rank,
    triangular_inverse,
)
from bruhatkit.errors import NotAField, NotAUnit, NotInvertible, RingMismatch
from bruhatkit.oracle import enumerate_sn
from bruhatkit.permutation import Permutation, rank_nw
from bruhatkit.scalar import GF, QQ, ZZ

from conftest import random_invertible, random_triangular

P = Permutation.from_one_line
I = ColMatrix.identity(QQ)
SWAP = ColMatrix([[0, 1], [1, 0]], QQ)


def test_normalization_and_entries():
    g = ColMatrix([[1, 2, 0], [0, 1, 0], [0, 0, 1]], QQ)
    assert g.window == 2
    assert g.entry(5, 5) == 1 and g.entry(5, 1) == 0
    assert ColMatrix([[1, 0], [0, 1]]) == I
    assert I.window == 0


def test_multiply_examples():
    x = ColMatrix([[1, 2], [3, 4]], QQ)
    assert multiply(I, x) == x and multiply(x, I) == x
    assert multiply(SWAP, SWAP) == I
    assert multiply(elementary_add(2, 1, 1), elementary_add(2, 1, 1)) == elementary_add(2, 1, 2)
    with pytest.raises(RingMismatch):
        multiply(ColMatrix([[2]], GF(5)), ColMatrix([[2]], QQ))


def test_triangular_inverse_examples():
    assert triangular_inverse(I) == I
    assert triangular_inverse(ColMatrix([[1, 2], [0, 1]])) == ColMatrix([[1, -2], [0, 1]])
    with pytest.raises(NotInvertible) as err:
        triangular_inverse(ColMatrix([[2, 0], [0, 1]], ZZ))
    assert err.value.index == 1
    with pytest.raises(NotInvertible) as err:
        triangular_inverse(ColMatrix([[1, 5], [0, 0]], QQ))
    assert err.value.index == 2


def test_elementary_examples():
    assert elementary_add(2, 1, 0) == I
    assert permutation_matrix(P([2, 1])) == SWAP
    g = elementary_scale(3, 5)
    assert g.entry(3, 3) == 5 and g.window == 3
    with pytest.raises(NotAUnit):
        elementary_scale(1, 2, ZZ)
    with pytest.raises(NotAUnit):
        elementary_scale(1, 0, QQ)


def test_permutation_matrices_multiply_like_permutations():
    s3 = enumerate_sn(3)
    for s, t in itertools.product(s3, repeat=2):
        assert multiply(permutation_matrix(s), permutation_matrix(t)) == permutation_matrix(s * t)


def test_submatrix_rank_examples():
    assert submatrix_rank(I, [1, 2, 3], [1, 2, 3]) == 3
    assert submatrix_rank(ColMatrix([[1, 1], [1, 0]]), Cofinal(2), [1]) == 1
    with pytest.raises(NotAField):
        submatrix_rank(ColMatrix([[1, 1], [1, 0]], ZZ), [1], [1])


def test_submatrix_rank_matches_rank_nw_on_s4():
    for s in enumerate_sn(4):
        m = permutation_matrix(s)
        for p in range(1, 5):
            for q in range(1, 5):
                assert submatrix_rank(m, range(1, p + 1), range(1, q + 1)) == rank_nw(s, p, q)


def test_cofinal_rows_beyond_window():
    g = ColMatrix([[1, 1], [1, 0]], QQ)
    # columns past the window pick up their identity rows
    assert submatrix_rank(g, Cofinal(1), range(1, 6)) == 5
    assert submatrix_rank(g, Cofinal(4), range(1, 6)) == 2


@pytest.mark.parametrize("ring", [QQ, GF(5)], ids=["Q", "F5"])
def test_random_triangular_inverses(rng, ring):
    for _ in range(100):
        n = rng.randint(0, 12)
        b = random_triangular(rng, n, ring)
        c = triangular_inverse(b)
        e = ColMatrix.identity(ring)
        assert multiply(b, c) == e and multiply(c, b) == e
        assert c.window <= b.window
        assert c.is_upper_triangular()


@pytest.mark.parametrize("ring", [QQ, GF(7)], ids=["Q", "F7"])
def test_associativity_and_block_distributivity(rng, ring):
    for _ in range(40):
        n = rng.randint(1, 5)
        x, y, z = (random_invertible(rng, n, ring) for _ in range(3))
        assert multiply(multiply(x, y), z) == multiply(x, multiply(y, z))
        # distributivity on the window block (sums leave the eventually-identity class)
        X, Y, Z = (m.padded(n) for m in (x, y, z))
        YZ = [[ring.add(a, b) for a, b in zip(r, s)] for r, s in zip(Y, Z)]
        lhs = _block_mul(X, YZ, ring)
        xy, xz = _block_mul(X, Y, ring), _block_mul(X, Z, ring)
        assert lhs == [[ring.add(a, b) for a, b in zip(r, s)] for r, s in zip(xy, xz)]


def _block_mul(a, b, ring):
    n = len(a)
    return [[ring.coerce(sum(a[i][k] * b[k][j] for k in range(n))) for j in range(n)]
            for i in range(n)]


def test_general_inverse(rng):
    for _ in range(30):
        g = random_invertible(rng, rng.randint(1, 5), QQ)
        assert multiply(g, inverse(g)) == I


def test_json_round_trip():
    g = ColMatrix([[1, "1/2"], [3, 0]], QQ)
    assert ColMatrix.from_json(g.to_json()) == g
    h = ColMatrix([[1, 2], [3, 0]], GF(5))
    assert h.to_json()["block"][0][1] == "2 mod 5"
    assert ColMatrix.from_json(h.to_json()) == h


@settings(max_examples=60)
@given(st.integers(1, 6), st.integers(0, 2 ** 32))
def test_inverse_recursions_agree_property(n, seed):
    import random

    rng = random.Random(seed)
    b = random_triangular(rng, n, GF(5))
    assert multiply(triangular_inverse(b), b) == ColMatrix.identity(GF(5))
