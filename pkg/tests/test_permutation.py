import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bruhatkit.errors import EqualPermutations, InvalidPermutation, UndecidableWithoutBound
from bruhatkit.moves import chain_toward
from bruhatkit.oracle import bruhat_leq_bruteforce, enumerate_sn
from bruhatkit.permutation import (
    IDENTITY,
    Permutation,
    bruhat_leq,
    bruhat_leq_tableau,
    compare,
    converges_prefix,
    first_difference,
    rank_nw,
    rank_sw,
    region_leq,
)

P = Permutation.from_one_line
RHO = Permutation.paper_rho()
S4 = enumerate_sn(4)


def test_rho_one_line():
    assert RHO.one_line(11) == [3, 1, 5, 2, 7, 4, 9, 6, 11, 8, 13]
    assert RHO.apply(1) == 3
    assert RHO.apply(4) == 2
    assert IDENTITY.apply(7) == 7


def test_rho_inverse():
    inv = RHO.inverse()
    for n in range(1, 60):
        assert inv.apply(RHO.apply(n)) == n
        assert RHO.preimage(n) == inv.apply(n)


def test_patch_validation():
    with pytest.raises(InvalidPermutation):
        Permutation({1: 2})
    with pytest.raises(InvalidPermutation):
        P([1, 1, 2])
    # swapping two rho values stays a bijection
    s = RHO.swap_positions(1, 2)
    assert s.apply(1) == 1 and s.apply(2) == 3
    assert s.tail is RHO.tail


def test_canonical_equality():
    assert P([1, 2, 3]) == IDENTITY
    assert P([2, 1, 3]) == P([2, 1])
    assert hash(P([2, 1, 3])) == hash(P([2, 1]))
    assert Permutation({1: 3, 2: 1, 3: 5, 4: 2}, "paper-rho") == RHO


def test_json_round_trip():
    for s in (IDENTITY, P([3, 1, 2]), RHO, RHO.swap_positions(1, 2)):
        assert Permutation.from_json(s.to_json()) == s
    assert IDENTITY.to_json() == []


def test_compose_and_inverse():
    for s, t in itertools.product(enumerate_sn(3), repeat=2):
        st_ = s * t
        for n in range(1, 5):
            assert st_.apply(n) == s.apply(t.apply(n))
        assert s * s.inverse() == IDENTITY


def test_rank_examples():
    assert rank_nw(IDENTITY, 3, 5) == 3
    assert rank_nw(RHO, 2, 3) == 1
    assert rank_nw(P([3, 2, 1]), 2, 2) == 1
    assert rank_sw(IDENTITY, 1, 7) == 7
    assert rank_sw(RHO, 2, 2) == 1
    assert rank_sw(P([2, 1]), 2, 1) == 1


@pytest.mark.parametrize("sigma", S4)
def test_rank_complement(sigma):
    for p in range(1, 6):
        for q in range(1, 6):
            assert rank_nw(sigma, p, q) + rank_sw(sigma, p + 1, q) == q


def test_bruhat_examples():
    for s in S4:
        assert bruhat_leq(IDENTITY, s)
    assert not bruhat_leq(P([2, 3, 1]), P([3, 1, 2]))
    assert not bruhat_leq(P([3, 1, 2]), P([2, 3, 1]))
    assert bruhat_leq(P([2, 1, 3]), P([2, 3, 1]))
    assert bruhat_leq_tableau(IDENTITY, IDENTITY, 10)
    assert bruhat_leq_tableau(P([1, 3, 2]), P([2, 3, 1]), 3)


def test_partial_order_on_s4():
    leq = {(s, t): bruhat_leq(s, t) for s in S4 for t in S4}
    for s in S4:
        assert leq[s, s]
    for s, t in itertools.product(S4, repeat=2):
        if leq[s, t] and leq[t, s]:
            assert s == t
    for s, t, u in itertools.product(S4, repeat=3):
        if leq[s, t] and leq[t, u]:
            assert leq[s, u]


def test_s3_levels_match_oracle():
    s3 = enumerate_sn(3)
    for s, t in itertools.product(s3, repeat=2):
        assert bruhat_leq(s, t) == bruhat_leq_bruteforce(s, t, 3)
    # 3 levels by length: 1 / 2 / 2 / 1 elements, 231 and 312 in the middle
    below_top = [s for s in s3 if bruhat_leq(s, P([3, 2, 1]))]
    assert len(below_top) == 6


def test_tableau_agrees_beyond_support():
    for s, t in itertools.product(S4, repeat=2):
        assert bruhat_leq(s, t) == bruhat_leq_tableau(s, t, 4) == bruhat_leq_tableau(s, t, 6)


def test_non_identity_tail_needs_bound():
    with pytest.raises(UndecidableWithoutBound):
        bruhat_leq(IDENTITY, RHO)
    v = compare(IDENTITY, RHO, bound=40)
    assert v.leq and not v.exact and v.bound == 40
    assert not compare(RHO, IDENTITY, bound=40).leq


def test_first_difference_examples():
    assert first_difference(IDENTITY, RHO) == 1
    assert first_difference(P([1, 3, 2]), P([1, 2, 3])) == 2
    with pytest.raises(EqualPermutations):
        first_difference(RHO, RHO)
    assert first_difference(RHO, RHO.swap_positions(5, 8)) == 5


def test_converges_prefix_examples():
    s = P([2, 1])
    assert converges_prefix([s] * 4, s, 3) == 1
    assert converges_prefix([P([2, 1])], IDENTITY, 1) is None
    assert converges_prefix([], IDENTITY, 1) is None
    chain = chain_toward(IDENTITY, RHO, 50)
    assert converges_prefix(chain.results, IDENTITY, 5) is not None


def test_convergence_passes_to_inverses():
    results = chain_toward(IDENTITY, RHO, 60).results
    inverses = [r.inverse() for r in results]
    for m in range(1, 8):
        assert converges_prefix(results, IDENTITY, m) is not None
        assert converges_prefix(inverses, IDENTITY, m) is not None


@given(st.permutations(range(1, 7)), st.permutations(range(1, 7)))
def test_reduction_bound_matches_double_bound(a, b):
    s, t = P(a), P(b)
    assert bruhat_leq(s, t) == region_leq(s, t, 12)
