"""Permutations of N = {1, 2, ...} and the infinite Bruhat order.

A :class:`Permutation` is a finite *patch* laid over a *tail rule*. The tail
rule is a computable bijection of N (the identity, or one of the named
builtins below); the patch overrides it on finitely many positions. Positions
are 1-based throughout.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Optional, Sequence

from .errors import (
    EqualPermutations,
    InvalidPermutation,
    UndecidableWithoutBound,
)


@dataclass(frozen=True)
class TailRule:
    name: str
    forward: Callable[[int], int]
    backward: Callable[[int], int]
    inverse_name: str

    def __repr__(self):
        return f"TailRule({self.name!r})"


def _rho(n: int) -> int:
    if n % 2 == 1:
        return n + 2
    return 1 if n == 2 else n - 2


def _rho_inv(v: int) -> int:
    if v == 1:
        return 2
    return v - 2 if v % 2 == 1 else v + 2


IDENTITY_TAIL = TailRule("identity", lambda n: n, lambda n: n, "identity")
RHO_TAIL = TailRule("paper-rho", _rho, _rho_inv, "paper-rho-inverse")
RHO_INV_TAIL = TailRule("paper-rho-inverse", _rho_inv, _rho, "paper-rho")

TAIL_RULES = {t.name: t for t in (IDENTITY_TAIL, RHO_TAIL, RHO_INV_TAIL)}


def tail_rule(name: str) -> TailRule:
    try:
        return TAIL_RULES[name]
    except KeyError:
        raise InvalidPermutation(f"unknown tail rule {name!r}") from None


class Permutation:
    """A bijection of N given by a finite patch over a tail rule.

    The patch is validated at construction: its values must be distinct and
    must be exactly the tail values of its domain, so that the combined map
    is a bijection. Entries agreeing with the tail are dropped, which makes
    equality and hashing canonical.
    """

    __slots__ = ("_patch", "_tail", "_inv_patch", "_key")

    def __init__(self, patch: Optional[Mapping[int, int]] = None, tail: TailRule | str = IDENTITY_TAIL):
        if isinstance(tail, str):
            tail = tail_rule(tail)
        raw = dict(patch or {})
        for n, v in raw.items():
            if not (isinstance(n, int) and isinstance(v, int)) or n < 1 or v < 1:
                raise InvalidPermutation(f"patch entries must be positive integers, got {n}->{v}")
        if len(set(raw.values())) != len(raw):
            raise InvalidPermutation("patch values are not distinct")
        displaced = {tail.forward(n) for n in raw}
        if set(raw.values()) != displaced:
            raise InvalidPermutation(
                "patch values must equal the tail values they displace "
                f"(got {sorted(raw.values())}, tail gives {sorted(displaced)})"
            )
        self._patch = {n: v for n, v in sorted(raw.items()) if v != tail.forward(n)}
        self._tail = tail
        self._inv_patch = {v: n for n, v in self._patch.items()}
        self._key = (tuple(self._patch.items()), tail.name)

    # -- constructors -----------------------------------------------------

    @classmethod
    def identity(cls) -> "Permutation":
        return cls()

    @classmethod
    def from_one_line(cls, values: Sequence[int]) -> "Permutation":
        """``[3, 1, 2]`` is the permutation 1->3, 2->1, 3->2 fixing everything else."""
        values = list(values)
        if sorted(values) != list(range(1, len(values) + 1)):
            raise InvalidPermutation(f"{values} is not a permutation of 1..{len(values)}")
        return cls({i + 1: v for i, v in enumerate(values)})

    @classmethod
    def transposition(cls, p: int, q: int) -> "Permutation":
        if p == q:
            return cls()
        return cls({p: q, q: p})

    @classmethod
    def paper_rho(cls) -> "Permutation":
        """Odd n -> n+2, even m != 2 -> m-2, 2 -> 1; one-line 3,1,5,2,7,4,..."""
        return cls(tail=RHO_TAIL)

    # -- basic accessors --------------------------------------------------

    @property
    def patch(self) -> dict:
        return dict(self._patch)

    @property
    def tail(self) -> TailRule:
        return self._tail

    @property
    def has_identity_tail(self) -> bool:
        return self._tail is IDENTITY_TAIL

    def __call__(self, n: int) -> int:
        return self.apply(n)

    def apply(self, n: int) -> int:
        if n < 1:
            raise ValueError(f"positions start at 1, got {n}")
        v = self._patch.get(n)
        return v if v is not None else self._tail.forward(n)

    def preimage(self, v: int) -> int:
        if v < 1:
            raise ValueError(f"positions start at 1, got {v}")
        n = self._inv_patch.get(v)
        return n if n is not None else self._tail.backward(v)

    def inverse(self) -> "Permutation":
        return Permutation(self._inv_patch, TAIL_RULES[self._tail.inverse_name])

    def patch_bound(self) -> int:
        """Largest position the patch touches (0 for a pure tail)."""
        return max(self._patch, default=0)

    def support(self) -> frozenset:
        if not self.has_identity_tail:
            raise UndecidableWithoutBound(f"tail {self._tail.name!r} has infinite support")
        return frozenset(self._patch)

    def max_support(self) -> int:
        return max(self.support(), default=0)

    def one_line(self, length: Optional[int] = None) -> list:
        """Values at 1..length; for identity tails the default trims trailing fixed points."""
        if length is None:
            length = self.max_support()
        return [self.apply(n) for n in range(1, length + 1)]

    # -- group operations -------------------------------------------------

    def swap_positions(self, p: int, q: int) -> "Permutation":
        """Right multiplication by the transposition (p, q)."""
        patch = dict(self._patch)
        patch[p], patch[q] = self.apply(q), self.apply(p)
        return Permutation(patch, self._tail)

    def compose(self, other: "Permutation") -> "Permutation":
        """``self ∘ other``: first apply ``other``, then ``self``."""
        if other.has_identity_tail:
            domain = set(other._patch) | set(self._patch)
            tail = self._tail
        elif self.has_identity_tail:
            domain = set(other._patch) | {other._tail.backward(v) for v in self._patch}
            tail = other._tail
        else:
            raise InvalidPermutation("composition of two non-identity tails is not representable")
        return Permutation({n: self.apply(other.apply(n)) for n in domain}, tail)

    __mul__ = compose

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        if self.has_identity_tail:
            return f"Permutation.from_one_line({self.one_line()})"
        return f"Permutation({self._patch}, tail={self._tail.name!r})"

    # -- serialization ----------------------------------------------------

    def to_json(self):
        if self.has_identity_tail:
            return self.one_line()
        return {"patch": {str(n): v for n, v in self._patch.items()}, "tail": self._tail.name}

    @classmethod
    def from_json(cls, data) -> "Permutation":
        if isinstance(data, list):
            return cls.from_one_line(data)
        if isinstance(data, dict):
            try:
                patch = {int(k): int(v) for k, v in data.get("patch", {}).items()}
            except (TypeError, ValueError) as exc:
                raise InvalidPermutation(f"bad patch: {exc}") from None
            return cls(patch, data.get("tail", "identity"))
        raise InvalidPermutation(f"cannot read a permutation from {data!r}")


IDENTITY = Permutation()


# -- rank functions ---------------------------------------------------------

def rank_nw(sigma: Permutation, p: int, q: int) -> int:
    """Number of n <= q with sigma(n) <= p (ones in the first p rows, q columns)."""
    _check_positions(p, q)
    return sum(1 for n in range(1, q + 1) if sigma.apply(n) <= p)


def rank_sw(sigma: Permutation, p: int, q: int) -> int:
    """Number of n <= q with sigma(n) >= p (lower-left block with corner (p, q))."""
    _check_positions(p, q)
    return sum(1 for n in range(1, q + 1) if sigma.apply(n) >= p)


def _check_positions(p, q):
    if p < 1 or q < 1:
        raise ValueError(f"rank queries need p, q >= 1, got ({p}, {q})")


# -- Bruhat order -----------------------------------------------------------

@dataclass(frozen=True)
class BruhatVerdict:
    leq: bool
    exact: bool
    bound: Optional[int]

    def __bool__(self):
        return self.leq


def region_leq(sigma: Permutation, tau: Permutation, bound: int) -> bool:
    """Check r_{i,j}(sigma) >= r_{i,j}(tau) for all i, j <= bound.

    Column j of the rank table is built incrementally from column j-1, so the
    whole table costs O(bound^2).
    """
    counts_s = [0] * (bound + 2)
    counts_t = [0] * (bound + 2)
    for j in range(1, bound + 1):
        s, t = sigma.apply(j), tau.apply(j)
        if s <= bound:
            counts_s[s] += 1
        if t <= bound:
            counts_t[t] += 1
        rs = rt = 0
        for i in range(1, bound + 1):
            rs += counts_s[i]
            rt += counts_t[i]
            if rs < rt:
                return False
    return True


def comparison_bound(sigma: Permutation, tau: Permutation) -> int:
    """Positions beyond this bound are fixed by both (identity tails only)."""
    return max(sigma.max_support(), tau.max_support())


def compare(sigma: Permutation, tau: Permutation, bound: Optional[int] = None) -> BruhatVerdict:
    """Bruhat comparison ``sigma <= tau`` with provenance.

    For identity tails the answer is exact: outside [1, M]^2, with M the
    larger support maximum, both rank tables coincide. Otherwise the region
    criterion is checked on [1, bound]^2 and the verdict is flagged inexact.
    """
    if sigma.has_identity_tail and tau.has_identity_tail:
        return BruhatVerdict(region_leq(sigma, tau, comparison_bound(sigma, tau)), True, None)
    if bound is None:
        raise UndecidableWithoutBound(
            f"comparing tails {sigma.tail.name!r} and {tau.tail.name!r} needs a verification bound"
        )
    return BruhatVerdict(region_leq(sigma, tau, bound), False, bound)


def bruhat_leq(sigma: Permutation, tau: Permutation, bound: Optional[int] = None) -> bool:
    return compare(sigma, tau, bound).leq


def bruhat_lt(sigma: Permutation, tau: Permutation, bound: Optional[int] = None) -> bool:
    return sigma != tau and bruhat_leq(sigma, tau, bound)


def bruhat_leq_tableau(sigma: Permutation, tau: Permutation, depth: int) -> bool:
    """Row-sorted prefix dominance {sigma(1..n)} <= {tau(1..n)} for all n <= depth."""
    if depth < 1:
        raise ValueError("depth must be >= 1")
    row_s: list = []
    row_t: list = []
    for n in range(1, depth + 1):
        bisect.insort(row_s, sigma.apply(n))
        bisect.insort(row_t, tau.apply(n))
        if any(a > b for a, b in zip(row_s, row_t)):
            return False
    return True


def first_difference(sigma: Permutation, tau: Permutation, search_limit: int = 4096) -> int:
    """d(sigma, tau): the least position where the two permutations disagree."""
    if sigma.tail is tau.tail:
        candidates = sorted(set(sigma._patch) | set(tau._patch))
        for n in candidates:
            if sigma.apply(n) != tau.apply(n):
                return n
        raise EqualPermutations("permutations are equal")
    limit = max(sigma.patch_bound(), tau.patch_bound()) + search_limit
    for n in range(1, limit + 1):
        if sigma.apply(n) != tau.apply(n):
            return n
    raise UndecidableWithoutBound(f"no difference found up to position {limit}")


def converges_prefix(seq: Iterable[Permutation], sigma: Permutation, m: int) -> Optional[int]:
    """Least 1-based N with seq[n] agreeing with sigma on [1, m] for all n >= N.

    Only the supplied finite prefix is inspected; returns ``None`` (not yet
    stabilized) when its last element still disagrees, or when it is empty.
    """
    target = [sigma.apply(ell) for ell in range(1, m + 1)]
    stable_from = None
    count = 0
    for n, perm in enumerate(seq, start=1):
        count = n
        agrees = all(perm.apply(ell) == target[ell - 1] for ell in range(1, m + 1))
        if agrees:
            if stable_from is None:
                stable_from = n
        else:
            stable_from = None
    if count == 0:
        return None
    return stable_from
