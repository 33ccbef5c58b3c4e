import pytest

from bruhatkit.colmat import ColMatrix, permutation_matrix
from bruhatkit.errors import DimensionMismatch, InvalidFiltration, NotInvertible
from bruhatkit.flags import (
    Filtration,
    Flag,
    Subspace,
    chain,
    intersection_filtration,
    intersection_gradation,
    is_almost_gradation,
    is_gradation,
    is_independent,
    nonspanning_demo,
    product_of_chains,
    random_almost_gradation,
    relative_position,
    relative_position_jumps,
    relative_position_matrix,
    spans,
    stabilizes_standard_flag,
    tail_chain_example,
)
from bruhatkit.oracle import double_cosets, enumerate_sn
from bruhatkit.permutation import IDENTITY, Permutation
from bruhatkit.scalar import GF, QQ

from conftest import random_invertible, random_triangular

P = Permutation.from_one_line


def standard_filtration(d, ring):
    return Flag.standard(d, ring).filtration()


def test_subspace_basics():
    a = Subspace([[1, 1, 0], [0, 1, 0]])
    b = Subspace.span_of_basis([1, 2], 3)
    assert a == b and a.dim == 2
    c = Subspace.span_of_basis([2, 3], 3)
    assert (a & c) == Subspace.span_of_basis([2], 3)
    assert (a + c).dim == 3
    assert Subspace.zero(3) <= a
    with pytest.raises(DimensionMismatch):
        a + Subspace.zero(4)


def test_almost_gradation_examples():
    ring = GF(5)
    F = standard_filtration(3, ring)
    C = {i: Subspace.span_of_basis(range(i, i + 1), 3, ring) if i else Subspace.zero(3, ring)
         for i in range(4)}
    assert is_almost_gradation(F, C) and is_independent(C) and spans(F, C)
    bad = {i: F[i] for i in range(4)}
    assert not is_almost_gradation(F, bad)


def test_truncated_tail_example():
    F, C = tail_chain_example(4)
    assert is_almost_gradation(F, C) and is_gradation(F, C)
    # against the standard chain the f-vectors fail at the bottom step
    E = standard_filtration(4, QQ)
    C_std = {0: C[0], 1: C[4], 2: C[3], 3: C[2], 4: C[1]}
    assert not is_almost_gradation(E, C_std)


def test_independence_examples():
    e1 = Subspace.span_of_basis([1], 2)
    assert not is_independent({"a": e1, "b": e1})
    assert is_independent({"a": e1, "b": Subspace.span_of_basis([2], 2)})


def test_spans_fails_when_top_is_wrong():
    F = standard_filtration(2, QQ)
    C = {0: Subspace.zero(2), 1: Subspace.span_of_basis([1], 2), 2: Subspace.zero(2)}
    assert not spans(F, C)


def test_filtration_validation():
    z, full = Subspace.zero(2), Subspace.full(2)
    with pytest.raises(InvalidFiltration):
        Filtration(chain(1), {0: full, 1: full})
    with pytest.raises(InvalidFiltration):
        Filtration(chain(1), {0: z, 1: Subspace.span_of_basis([1], 2)})
    with pytest.raises(InvalidFiltration):
        Filtration(chain(2), {0: z, 1: full, 2: Subspace.span_of_basis([1], 2)})


def test_nonspanning():
    assert nonspanning_demo(1)
    assert nonspanning_demo(10)
    assert nonspanning_demo(50)


def random_linear_filtration(rng, d, ring, length=None):
    length = length or rng.randint(1, d + 2)
    g = random_invertible(rng, d, ring)
    cols = [g.column(j, d) for j in range(1, d + 1)]
    cuts = sorted(rng.randint(0, d) for _ in range(length - 1)) + [d]
    modules = {0: Subspace.zero(d, ring)}
    for t, k in enumerate(cuts, start=1):
        modules[t] = Subspace(cols[:k], d, ring) if k else Subspace.zero(d, ring)
    return Filtration(chain(length), modules)


def test_random_linear_almost_gradations(rng):
    ring = GF(7)
    for _ in range(40):
        d = rng.randint(1, 8)
        F = random_linear_filtration(rng, d, ring)
        C = random_almost_gradation(F, rng)
        assert is_almost_gradation(F, C)
        assert is_independent(C) and spans(F, C)


def test_random_product_almost_gradations(rng):
    ring = GF(3)
    for _ in range(15):
        d = rng.randint(1, 6)
        A = random_linear_filtration(rng, d, ring, length=rng.randint(1, 4))
        B = random_linear_filtration(rng, d, ring, length=rng.randint(1, 4))
        m, n = len(A.poset.elements) - 1, len(B.poset.elements) - 1
        F = Filtration(product_of_chains(m, n),
                       {(i, j): A[i] & B[j] for i in range(m + 1) for j in range(n + 1)})
        C = random_almost_gradation(F, rng)
        assert is_almost_gradation(F, C) and is_independent(C) and spans(F, C)


def test_relative_position_examples():
    E = Flag.standard(3, GF(2))
    assert relative_position(E, E) == IDENTITY
    for s in enumerate_sn(3):
        F = Flag.permuted(s, 3, GF(2))
        assert relative_position(F, E) == s
        assert relative_position(E, F) == s.inverse()


def test_relative_position_methods_agree(rng):
    for ring in (QQ, GF(5)):
        for _ in range(40):
            d = rng.randint(1, 5)
            F = Flag(random_invertible(rng, d, ring), d)
            E = Flag(random_invertible(rng, d, ring), d)
            w = relative_position_matrix(F, E)
            assert w == relative_position_jumps(F, E)
            assert relative_position(E, F) == w.inverse()


def test_flag_side_orbits_on_gl3_f2():
    ring = GF(2)
    E = Flag.standard(3, ring)
    cosets = double_cosets(3, 2)
    for s, members in cosets.items():
        for block in members:
            assert relative_position(Flag(ColMatrix(block, ring), 3), E) == s


def test_intersection_gradation_examples():
    E = Flag.standard(2, QQ)
    diag = intersection_gradation(E, E)
    assert {k for k, v in diag.items() if v.dim} == {(1, 1), (2, 2)}
    assert diag[(1, 1)] == Subspace.span_of_basis([1], 2)
    swapped = intersection_gradation(Flag.permuted(P([2, 1]), 2, QQ), E)
    assert {k for k, v in swapped.items() if v.dim} == {(1, 2), (2, 1)}
    for s in enumerate_sn(3):
        F = Flag.permuted(s, 3, GF(5))
        table = intersection_gradation(F, Flag.standard(3, GF(5)))
        assert {k for k, v in table.items() if v.dim} == {(i, s.apply(i)) for i in range(1, 4)}


def test_intersection_gradation_is_gradation(rng):
    ring = GF(5)
    for _ in range(20):
        d = rng.randint(1, 5)
        F, E = Flag(random_invertible(rng, d, ring), d), Flag(random_invertible(rng, d, ring), d)
        C = intersection_gradation(F, E)
        G = intersection_filtration(F, E)
        assert is_gradation(G, C)
        w = relative_position(F, E)
        for (i, j), s in C.items():
            assert s.dim == (1 if i and j == w.apply(i) else 0)
        fs, es = F.steps(), E.steps()
        for i in range(d + 1):
            row = Subspace.zero(d, ring)
            col = Subspace.zero(d, ring)
            for a in range(i + 1):
                for b in range(d + 1):
                    row = row + C[(a, b)]
                    col = col + C[(b, a)]
            assert row == fs[i] and col == es[i]


def test_stabilizer_examples(rng):
    assert stabilizes_standard_flag(ColMatrix.identity())
    assert not stabilizes_standard_flag(permutation_matrix(P([2, 1])))
    with pytest.raises(NotInvertible):
        stabilizes_standard_flag(ColMatrix([[1, 1], [1, 1]]))
    ring = GF(3)
    for i in range(200):
        n = rng.randint(1, 4)
        g = random_triangular(rng, n, ring) if i % 2 else random_invertible(rng, n, ring)
        assert stabilizes_standard_flag(g) == g.is_upper_triangular()


def test_flag_json_round_trip():
    F = Flag.permuted(P([3, 1, 2]), 3, GF(2))
    G = Flag.from_json(F.to_json())
    assert relative_position(G, F) == IDENTITY
