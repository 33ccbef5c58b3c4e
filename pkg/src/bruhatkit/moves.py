"""Descending in the Bruhat order by right multiplication with transpositions."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional

from .errors import InvalidPair, NotComparable
from .permutation import Permutation, compare, first_difference

DEFAULT_EXTRA_BOUND = 32


@dataclass(frozen=True)
class DescentStep:
    p: int
    q: int
    before: Permutation
    result: Permutation

    @property
    def transposition(self) -> Permutation:
        return Permutation.transposition(self.p, self.q)

    def to_json(self):
        return {"p": self.p, "q": self.q, "result": self.result.to_json()}


@dataclass
class DescentChain:
    start: Permutation
    target: Permutation
    steps: List[DescentStep] = field(default_factory=list)
    terminated: bool = False
    # set when some comparison was only verified on a finite window
    bound_limited: Optional[int] = None

    @property
    def results(self) -> List[Permutation]:
        """tau, tau t1, tau t1 t2, ... (the start is included)."""
        return [self.start] + [s.result for s in self.steps]

    @property
    def current(self) -> Permutation:
        return self.steps[-1].result if self.steps else self.start

    def product(self) -> Permutation:
        """Recompose start with every recorded transposition."""
        perm = self.start
        for s in self.steps:
            perm = perm.compose(s.transposition)
        return perm

    def to_json(self):
        return [s.to_json() for s in self.steps]


def descent_test(tau: Permutation, p: int, q: int) -> bool:
    """Whether tau·(p, q) < tau, i.e. tau(p) > tau(q)."""
    if p >= q:
        raise InvalidPair(f"need p < q, got ({p}, {q})")
    return tau.apply(p) > tau.apply(q)


def _verification_bound(sigma, tau, extra):
    return max(sigma.patch_bound(), tau.patch_bound()) + extra


def _require_less(sigma, tau, extra):
    """Check sigma < tau; returns the finite bound used, or None when exact."""
    if sigma == tau:
        raise NotComparable("sigma equals tau")
    bound = None
    if not (sigma.has_identity_tail and tau.has_identity_tail):
        bound = _verification_bound(sigma, tau, extra)
    if not compare(sigma, tau, bound).leq:
        raise NotComparable(f"{sigma!r} is not below {tau!r} in the Bruhat order")
    return bound


def _step(sigma: Permutation, tau: Permutation, p: int) -> DescentStep:
    sp, tp = sigma.apply(p), tau.apply(p)
    if not sp < tp:
        raise NotComparable(f"sigma({p}) = {sp} is not below tau({p}) = {tp}")
    # q = min{n > p : sigma(p) <= tau(n) < tau(p)}, found through preimages
    candidates = [n for n in (tau.preimage(v) for v in range(sp, tp)) if n > p]
    if not candidates:
        raise NotComparable(f"no transposition lowers tau at position {p}")
    q = min(candidates)
    return DescentStep(p, q, tau, tau.swap_positions(p, q))


def going_down_step(sigma: Permutation, tau: Permutation, extra_bound: int = DEFAULT_EXTRA_BOUND) -> DescentStep:
    """One transposition t = (p, q) with sigma <= tau·t < tau.

    Here p = d(sigma, tau) and q is the least n > p with
    sigma(p) <= tau(n) < tau(p); tau·t agrees with tau before p.
    """
    _require_less(sigma, tau, extra_bound)
    return _step(sigma, tau, first_difference(sigma, tau))


def _segment(sigma, tau, budget=None):
    p = first_difference(sigma, tau)
    target = sigma.apply(p)
    steps = []
    current = tau
    while current.apply(p) != target:
        if budget is not None and len(steps) >= budget:
            break
        step = _step(sigma, current, p)
        steps.append(step)
        current = step.result
    return steps


def reduce_first_difference(sigma: Permutation, tau: Permutation,
                            extra_bound: int = DEFAULT_EXTRA_BOUND) -> List[DescentStep]:
    """Going-down steps until d(sigma, ·) strictly increases."""
    _require_less(sigma, tau, extra_bound)
    return _segment(sigma, tau)


def chain_toward(sigma: Permutation, tau: Permutation, max_steps: int,
                 extra_bound: int = DEFAULT_EXTRA_BOUND) -> DescentChain:
    """Strictly decreasing chain tau > tau t1 > tau t1 t2 > ... toward sigma.

    Stops when sigma is reached (``terminated``) or after ``max_steps``
    transpositions; in the latter case the chain's agreement with sigma on
    an initial segment grows with every completed segment.
    """
    bound = _require_less(sigma, tau, extra_bound)
    chain = DescentChain(start=tau, target=sigma, bound_limited=bound)
    current = tau
    while current != sigma and len(chain.steps) < max_steps:
        steps = _segment(sigma, current, budget=max_steps - len(chain.steps))
        chain.steps.extend(steps)
        current = chain.current
    chain.terminated = current == sigma
    return chain
