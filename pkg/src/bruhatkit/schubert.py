"""Rank conditions cutting out the closure of a Bruhat cell."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .colmat import ColMatrix, lower_left_rank
from .decomp import coset_label
from .errors import InternalContradiction, NotAField
from .permutation import Permutation, bruhat_leq, rank_sw


@dataclass(frozen=True)
class MinorCondition:
    """All ell x ell minors of rows >= p, columns <= q vanish."""

    p: int
    q: int
    ell: int


def quantification_bound(sigma: Permutation, g: ColMatrix) -> int:
    """W = max(window(g), max Supp(sigma)); p, q range over [1, W + 1]."""
    return max(g.window, sigma.max_support())


def minor_conditions(sigma: Permutation, bound: int):
    """The smallest vanishing minor size at each corner (p, q) <= bound."""
    return [MinorCondition(p, q, rank_sw(sigma, p, q) + 1)
            for p in range(1, bound + 1) for q in range(1, bound + 1)]


def _first_violation(sigma, g, bound) -> Optional[MinorCondition]:
    for p in range(1, bound + 1):
        for q in range(1, bound + 1):
            allowed = rank_sw(sigma, p, q)
            if lower_left_rank(g, p, q) > allowed:
                return MinorCondition(p, q, allowed + 1)
    return None


def y_sigma_contains(sigma: Permutation, g: ColMatrix, bound: Optional[int] = None) -> bool:
    """Whether every lower-left block of g has rank at most that of sigma.

    By default the corners (p, q) run over [1, W + 1]^2. Past W, g and sigma
    both act as the identity, so moving a corner beyond W changes the two
    sides of the inequality by the same amount.
    """
    if not g.ring.is_field:
        raise NotAField(f"rank conditions need a field, got {g.ring.tag}")
    if bound is None:
        bound = quantification_bound(sigma, g) + 1
    return _first_violation(sigma, g, bound) is None


def violated_condition(sigma: Permutation, g: ColMatrix) -> Optional[MinorCondition]:
    return _first_violation(sigma, g, quantification_bound(sigma, g) + 1)


def closure_cover_check(sigma: Permutation, g: ColMatrix):
    """Return ``(in_closure, tau)`` with tau = coset_label(g).

    Membership in Y_sigma must agree with tau <= sigma; a disagreement raises
    :class:`InternalContradiction`.
    """
    tau = coset_label(g)
    inside = y_sigma_contains(sigma, g)
    below = bruhat_leq(tau, sigma)
    if inside != below:
        raise InternalContradiction(
            f"membership {inside} but coset {tau.one_line()} <= {sigma.one_line()} is {below}"
        )
    return inside, tau
