"""Brute-force reference answers for small symmetric and general linear groups.

Nothing here reuses the elimination routines of the main modules: ranks
come from enumerating minors with the Leibniz formula, double cosets from
literal orbit expansion, and the Bruhat order from the full rank table.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import factorial
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import TooLarge
from .permutation import Permutation

MAX_SN = 7
MAX_GL_SIZE = 10 ** 7

Block = Tuple[Tuple[int, ...], ...]


def enumerate_sn(n: int) -> List[Permutation]:
    """All permutations supported in [1, n], in lexicographic one-line order."""
    if n > MAX_SN:
        raise TooLarge(f"S_{n} has {factorial(n)} elements; limit is n <= {MAX_SN}")
    if n < 0:
        raise ValueError("n must be >= 0")
    return [Permutation.from_one_line(v) for v in itertools.permutations(range(1, n + 1))]


def _perm_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


_LEIBNIZ: Dict[int, list] = {}


def _leibniz_terms(k: int):
    if k not in _LEIBNIZ:
        _LEIBNIZ[k] = [(perm, _perm_sign(perm)) for perm in itertools.permutations(range(k))]
    return _LEIBNIZ[k]


def det(rows: Sequence[Sequence], p: Optional[int] = None):
    """Leibniz determinant; reduced mod p when p is given."""
    k = len(rows)
    total = 0
    for perm, sign in _leibniz_terms(k):
        term = sign
        for i in range(k):
            term *= rows[i][perm[i]]
            if term == 0:
                break
        total += term
    return total % p if p is not None else total


def minor_rank(rows: Sequence[Sequence], p: Optional[int] = None) -> int:
    """Largest k with a nonzero k x k minor."""
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    for k in range(min(nrows, ncols), 0, -1):
        for ri in itertools.combinations(range(nrows), k):
            for ci in itertools.combinations(range(ncols), k):
                if det([[rows[i][j] for j in ci] for i in ri], p) != 0:
                    return k
    return 0


def enumerate_gl(n: int, p: int) -> List[Block]:
    """All invertible n x n matrices over F_p as tuples of rows of ints."""
    if p ** (n * n) > MAX_GL_SIZE:
        raise TooLarge(f"{p}^{n * n} candidate matrices exceeds {MAX_GL_SIZE}")
    out = []
    for entries in itertools.product(range(p), repeat=n * n):
        rows = tuple(tuple(entries[i * n:(i + 1) * n]) for i in range(n))
        if det(rows, p) != 0:
            out.append(rows)
    return out


def gl_order(n: int, p: int) -> int:
    total = 1
    for i in range(n):
        total *= p ** n - p ** i
    return total


def enumerate_b(n: int, p: int) -> List[Block]:
    """Invertible upper triangular n x n matrices over F_p."""
    slots = [(i, j) for i in range(n) for j in range(i + 1, n)]
    out = []
    for diag in itertools.product(range(1, p), repeat=n):
        for upper in itertools.product(range(p), repeat=len(slots)):
            m = [[0] * n for _ in range(n)]
            for i in range(n):
                m[i][i] = diag[i]
            for (i, j), x in zip(slots, upper):
                m[i][j] = x
            out.append(tuple(tuple(r) for r in m))
    return out


def matmul(a: Sequence[Sequence], b: Sequence[Sequence], p: Optional[int] = None) -> Block:
    n, m, k = len(a), len(b[0]), len(b)
    rows = []
    for i in range(n):
        row = []
        for j in range(m):
            s = sum(a[i][t] * b[t][j] for t in range(k))
            row.append(s % p if p is not None else s)
        rows.append(tuple(row))
    return tuple(rows)


def perm_block(sigma: Permutation, n: int) -> Block:
    """entry (i, j) = [i == sigma(j)] on the leading n x n block."""
    return tuple(tuple(1 if i == sigma.apply(j) else 0 for j in range(1, n + 1))
                 for i in range(1, n + 1))


def bruhat_leq_bruteforce(sigma: Permutation, tau: Permutation, n: int) -> bool:
    """r_{i,j}(sigma) >= r_{i,j}(tau) for every i, j <= n, each count taken from scratch."""
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            rs = len([m for m in range(1, j + 1) if sigma.apply(m) <= i])
            rt = len([m for m in range(1, j + 1) if tau.apply(m) <= i])
            if rs < rt:
                return False
    return True


def lower_left_rank_bruteforce(g: Sequence[Sequence], p_row: int, q: int, p: Optional[int]) -> int:
    """Rank of rows >= p_row, columns <= q of a finite block (1-based)."""
    sub = [list(row[:q]) for row in g[p_row - 1:]]
    if not sub or q == 0:
        return 0
    return minor_rank(sub, p)


def coset_label_bruteforce(g: Sequence[Sequence], p: Optional[int]) -> Permutation:
    """The sigma in S_n whose lower-left rank table matches g's."""
    n = len(g)
    table = [[lower_left_rank_bruteforce(g, a, b, p) for b in range(1, n + 1)] for a in range(1, n + 1)]
    for sigma in enumerate_sn(n):
        ps = perm_block(sigma, n)
        if all(table[a - 1][b - 1] == lower_left_rank_bruteforce(ps, a, b, None)
               for a in range(1, n + 1) for b in range(1, n + 1)):
            return sigma
    raise ValueError("matrix is not invertible")


def double_cosets(n: int, p: int) -> Dict[Permutation, frozenset]:
    """B sigma B for each sigma in S_n, by expanding {b sigma c}."""
    borel = enumerate_b(n, p)
    out = {}
    for sigma in enumerate_sn(n):
        s = perm_block(sigma, n)
        left = {matmul(b, s, p) for b in borel}
        out[sigma] = frozenset(matmul(x, c, p) for x in left for c in borel)
    return out


def span_dim(vectors: Sequence[Sequence], p: Optional[int]) -> int:
    return minor_rank([list(v) for v in vectors], p) if vectors else 0


def intersection_dim(a: Sequence[Sequence], b: Sequence[Sequence], p: Optional[int]) -> int:
    """dim(span a ∩ span b) = dim a + dim b - dim(a + b)."""
    return span_dim(a, p) + span_dim(b, p) - span_dim(list(a) + list(b), p)


# -- suites -----------------------------------------------------------------

@dataclass
class SuiteResult:
    suite: str
    checked: int = 0
    mismatch: Optional[dict] = None
    notes: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.mismatch is None

    def to_json(self):
        return {"suite": self.suite, "ok": self.ok, "checked": self.checked, "mismatch": self.mismatch}


def _block_from(colmat, n):
    return tuple(tuple(int(colmat.entry(i, j)) for j in range(1, n + 1)) for i in range(1, n + 1))


def suite_bruhat(n: int) -> SuiteResult:
    from .permutation import bruhat_leq, bruhat_leq_tableau

    res = SuiteResult("bruhat")
    perms = enumerate_sn(n)
    for s in perms:
        for t in perms:
            ref = bruhat_leq_bruteforce(s, t, n)
            got = bruhat_leq(s, t)
            tab = bruhat_leq_tableau(s, t, max(n, 1))
            res.checked += 1
            if not (ref == got == tab):
                res.mismatch = {"sigma": s.to_json(), "tau": t.to_json(),
                                "oracle": ref, "region": got, "tableau": tab}
                return res
    return res


def suite_decomp(n: int, p: int) -> SuiteResult:
    from .colmat import ColMatrix
    from .decomp import bruhat_decompose, coset_label
    from .scalar import GF

    ring = GF(p)
    res = SuiteResult("decomp")
    cosets = double_cosets(n, p)
    owner = {}
    for sigma, members in cosets.items():
        for m in members:
            if m in owner:
                res.mismatch = {"matrix": [list(r) for r in m], "reason": "double cosets overlap"}
                return res
            owner[m] = sigma
    for g in enumerate_gl(n, p):
        res.checked += 1
        cm = ColMatrix(g, ring)
        fac = bruhat_decompose(cm)
        label = coset_label(cm)
        product = matmul(matmul(_block_from(fac.b, n), perm_block(fac.sigma, n), p), _block_from(fac.c, n), p)
        tri = all(_block_from(x, n)[i][j] == 0 for x in (fac.b, fac.c) for i in range(n) for j in range(i))
        if product != g or not tri or fac.sigma != label or owner.get(g) != label:
            res.mismatch = {"matrix": [list(r) for r in g], "sigma": fac.sigma.to_json(),
                            "label": label.to_json(),
                            "oracle": owner[g].to_json() if g in owner else None}
            return res
    if len(owner) != gl_order(n, p):
        res.mismatch = {"reason": f"double cosets cover {len(owner)} of {gl_order(n, p)} matrices"}
    return res


def suite_closure(n: int, p: int) -> SuiteResult:
    from .colmat import ColMatrix
    from .schubert import y_sigma_contains
    from .scalar import GF

    ring = GF(p)
    res = SuiteResult("closure")
    perms = enumerate_sn(n)
    for g in enumerate_gl(n, p):
        tau = coset_label_bruteforce(g, p)
        cm = ColMatrix(g, ring)
        for sigma in perms:
            res.checked += 1
            expected = bruhat_leq_bruteforce(tau, sigma, n)
            if y_sigma_contains(sigma, cm) != expected:
                res.mismatch = {"matrix": [list(r) for r in g], "sigma": sigma.to_json(),
                                "coset": tau.to_json(), "expected": expected}
                return res
    return res


def suite_flags(n: int, p: int) -> SuiteResult:
    from .colmat import ColMatrix
    from .flags import Flag, relative_position
    from .scalar import GF

    ring = GF(p)
    res = SuiteResult("flags")
    E = Flag.standard(n, ring)
    for sigma in enumerate_sn(n):
        res.checked += 1
        got = relative_position(Flag.permuted(sigma, n, ring), E)
        if got != sigma:
            res.mismatch = {"sigma": sigma.to_json(), "got": got.to_json()}
            return res
    for g in enumerate_gl(n, p):
        res.checked += 1
        got = relative_position(Flag(ColMatrix(g, ring), n), E)
        # w(i) = the j where dim(F_i ∩ E_j) jumps in both directions
        cols = [[g[r][c] for r in range(n)] for c in range(n)]
        std = [[1 if r == c else 0 for r in range(n)] for c in range(n)]
        d = [[intersection_dim(cols[:i], std[:j], p) if i and j else 0
              for j in range(n + 1)] for i in range(n + 1)]
        want = [next(j for j in range(1, n + 1)
                     if d[i][j] - d[i - 1][j] - d[i][j - 1] + d[i - 1][j - 1] == 1)
                for i in range(1, n + 1)]
        if got.one_line(n) != want:
            res.mismatch = {"matrix": [list(r) for r in g], "got": got.to_json(), "oracle": want}
            return res
    return res


SUITES = ("bruhat", "decomp", "closure", "flags")


def run_suite(name: str, n: int, p: int = 2) -> SuiteResult:
    if name == "bruhat":
        return suite_bruhat(n)
    if name == "decomp":
        return suite_decomp(n, p)
    if name == "closure":
        return suite_closure(n, p)
    if name == "flags":
        return suite_flags(n, p)
    raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
