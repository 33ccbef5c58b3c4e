"""Column-finite N x N matrices that equal the identity outside a leading block.

``entry(i, j)`` is ``block[i-1][j-1]`` for ``i, j <= window`` and the
Kronecker delta otherwise. The class is closed under products and inverses
and contains every finitely supported permutation matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Iterable, Sequence

from .errors import InternalContradiction, NotAField, NotAUnit, NotInvertible, RingMismatch
from .permutation import Permutation
from .scalar import QQ, PrimeField, Rationals, Ring, Scalar, ring_from_spec


class ColMatrix:
    __slots__ = ("ring", "block", "_hash")

    def __init__(self, block: Sequence[Sequence] = (), ring: Ring = QQ):
        rows = [[ring.coerce(x) for x in row] for row in block]
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("block must be square")
        zero, one = ring.zero, ring.one
        # trim trailing rows/columns that already look like the identity
        while n and all(rows[n - 1][k] == (one if k == n - 1 else zero) for k in range(n)) \
                and all(rows[k][n - 1] == zero for k in range(n - 1)):
            n -= 1
        self.ring = ring
        self.block = tuple(tuple(r[:n]) for r in rows[:n])
        self._hash = None

    @classmethod
    def identity(cls, ring: Ring = QQ) -> "ColMatrix":
        return cls((), ring)

    @classmethod
    def _raw(cls, block, ring):
        # caller guarantees entries are already canonical ring values
        m = cls.__new__(cls)
        m.ring = ring
        zero, one = ring.zero, ring.one
        rows = [list(r) for r in block]
        n = len(rows)
        while n and all(rows[n - 1][k] == (one if k == n - 1 else zero) for k in range(n)) \
                and all(rows[k][n - 1] == zero for k in range(n - 1)):
            n -= 1
        m.block = tuple(tuple(r[:n]) for r in rows[:n])
        m._hash = None
        return m

    @property
    def window(self) -> int:
        return len(self.block)

    def entry(self, i: int, j: int):
        if i < 1 or j < 1:
            raise ValueError("positions start at 1")
        n = self.window
        if i <= n and j <= n:
            return self.block[i - 1][j - 1]
        return self.ring.one if i == j else self.ring.zero

    def scalar(self, i: int, j: int) -> Scalar:
        return Scalar(self.entry(i, j), self.ring)

    def padded(self, n: int) -> list:
        """Leading n x n truncation as a fresh list of lists."""
        return [[self.entry(i, j) for j in range(1, n + 1)] for i in range(1, n + 1)]

    def column(self, j: int, length: int) -> list:
        return [self.entry(i, j) for i in range(1, length + 1)]

    def __matmul__(self, other):
        return multiply(self, other)

    def __eq__(self, other):
        if not isinstance(other, ColMatrix):
            return NotImplemented
        return self.ring == other.ring and self.block == other.block

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self.block))
        return self._hash

    def __repr__(self):
        rows = [[self.ring.format(x) for x in r] for r in self.block]
        return f"ColMatrix({rows}, ring={self.ring!r})"

    def is_upper_triangular(self) -> bool:
        zero = self.ring.zero
        return all(self.block[i][j] == zero for i in range(self.window) for j in range(i))

    def to_json(self):
        return {
            "field": self.ring.tag,
            "window": self.window,
            "block": [[self.ring.format(x) for x in row] for row in self.block],
        }

    @classmethod
    def from_json(cls, data) -> "ColMatrix":
        ring = ring_from_spec(data.get("field", "Q"))
        block = data.get("block", [])
        if "window" in data and data["window"] != len(block):
            raise ValueError(f"window {data['window']} does not match block size {len(block)}")
        return cls([[ring.coerce(x) if not isinstance(x, str) else ring.parse(x) for x in row]
                    for row in block], ring)


def multiply(x: ColMatrix, y: ColMatrix) -> ColMatrix:
    """(xy)_{ij} = sum_n x_{in} y_{nj}; only the common window is non-trivial."""
    if x.ring != y.ring:
        raise RingMismatch(f"{x.ring!r} vs {y.ring!r}")
    ring = x.ring
    n = max(x.window, y.window)
    if n == 0:
        return x
    a, b = x.padded(n), y.padded(n)
    zero = ring.zero
    add, mul = ring.add, ring.mul
    out = []
    for i in range(n):
        ai = a[i]
        row = []
        for j in range(n):
            s = zero
            for k in range(n):
                if ai[k] != zero:
                    s = add(s, mul(ai[k], b[k][j]))
            row.append(s)
        out.append(row)
    return ColMatrix._raw(out, ring)


def _triangular_setup(b: ColMatrix):
    ring = b.ring
    if not b.is_upper_triangular():
        raise ValueError("matrix is not upper triangular")
    n = b.window
    B = b.padded(n)
    for i in range(n):
        if not ring.is_unit(B[i][i]):
            raise NotInvertible(f"diagonal entry {i + 1} is not a unit", index=i + 1)
    return ring, n, B, [ring.inv(B[i][i]) for i in range(n)]


def right_inverse_recursion(b: ColMatrix) -> ColMatrix:
    """c with bc = I, column by column: c_{j,n} = -b_jj^-1 (b_{j,j+1} c_{j+1,n} + ... + b_{j,n} c_{n,n})."""
    ring, n, B, inv_diag = _triangular_setup(b)
    zero, add, mul, neg = ring.zero, ring.add, ring.mul, ring.neg
    right = [[zero] * n for _ in range(n)]
    for col in range(n):
        right[col][col] = inv_diag[col]
        for j in range(col - 1, -1, -1):
            s = zero
            for k in range(j + 1, col + 1):
                s = add(s, mul(B[j][k], right[k][col]))
            right[j][col] = neg(mul(inv_diag[j], s))
    return ColMatrix._raw(right, ring)


def left_inverse_recursion(b: ColMatrix) -> ColMatrix:
    """a with ab = I, row by row: a_{n,j} = -b_jj^-1 (a_{n,n} b_{n,j} + ... + a_{n,j-1} b_{j-1,j})."""
    ring, n, B, inv_diag = _triangular_setup(b)
    zero, add, mul, neg = ring.zero, ring.add, ring.mul, ring.neg
    left = [[zero] * n for _ in range(n)]
    for row in range(n):
        left[row][row] = inv_diag[row]
        for j in range(row + 1, n):
            s = zero
            for k in range(row, j):
                s = add(s, mul(left[row][k], B[k][j]))
            left[row][j] = neg(mul(inv_diag[j], s))
    return ColMatrix._raw(left, ring)


def triangular_inverse(b: ColMatrix) -> ColMatrix:
    """Inverse of an upper triangular matrix with unit diagonal entries.

    Runs both the right-inverse and the left-inverse recursion and insists
    that they agree.
    """
    right = right_inverse_recursion(b)
    if left_inverse_recursion(b) != right:
        raise InternalContradiction("left and right triangular inverses differ")
    return right


def elementary_add(row: int, col: int, x, ring: Ring = QQ) -> ColMatrix:
    """L_{row,col}(x): the identity plus x at (row, col), row != col."""
    if row == col:
        raise ValueError("off-diagonal position required")
    n = max(row, col)
    block = [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)]
    block[row - 1][col - 1] = ring.coerce(x)
    return ColMatrix._raw(block, ring)


def elementary_scale(i: int, r, ring: Ring = QQ) -> ColMatrix:
    """D_i(r): the identity with the unit r at (i, i)."""
    r = ring.coerce(r)
    if not ring.is_unit(r):
        raise NotAUnit(f"{ring.format(r)} is not a unit")
    block = [[ring.one if a == c else ring.zero for c in range(i)] for a in range(i)]
    block[i - 1][i - 1] = r
    return ColMatrix._raw(block, ring)


def permutation_matrix(sigma: Permutation, ring: Ring = QQ) -> ColMatrix:
    """Matrix with entry(i, j) = [i == sigma(j)]; sigma must be finitely supported."""
    n = sigma.max_support()
    block = [[ring.zero] * n for _ in range(n)]
    for j in range(1, n + 1):
        block[sigma.apply(j) - 1][j - 1] = ring.one
    return ColMatrix._raw(block, ring)


# -- rank ------------------------------------------------------------------

def _rank_mod_p(rows: list, p: int) -> int:
    rows = [[x % p for x in r] for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][c]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][c], -1, p)
        prow = [x * inv % p for x in rows[rank]]
        rows[rank] = prow
        for r in range(rank + 1, len(rows)):
            f = rows[r][c]
            if f:
                rows[r] = [(x - f * y) % p for x, y in zip(rows[r], prow)]
        rank += 1
    return rank


def _rank_bareiss(rows: list) -> int:
    """Fraction-free elimination on an integer matrix."""
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    rank = 0
    prev = 1
    for c in range(ncols):
        pivot = next((r for r in range(rank, nrows) if m[r][c] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        pv = m[rank][c]
        for r in range(rank + 1, nrows):
            f = m[r][c]
            m[r] = [(pv * m[r][k] - f * m[rank][k]) // prev for k in range(ncols)]
        prev = pv
        rank += 1
    return rank


def matrix_rank(rows: list, ring: Ring) -> int:
    """Exact rank of a finite matrix (list of rows of raw ring values)."""
    if not ring.is_field:
        raise NotAField(f"rank over {ring.tag} is not supported")
    if not rows or not rows[0]:
        return 0
    if isinstance(ring, PrimeField):
        return _rank_mod_p(rows, ring.p)
    if isinstance(ring, Rationals):
        ints = []
        for r in rows:
            d = lcm(*(x.denominator for x in r))
            ints.append([int(x * d) for x in r])
        return _rank_bareiss(ints)
    raise NotAField(f"no rank routine for {ring!r}")


@dataclass(frozen=True)
class Cofinal:
    """The row set [start, infinity)."""

    start: int


def from_row(p: int) -> Cofinal:
    return Cofinal(p)


def submatrix_rank(g: ColMatrix, rows, cols: Iterable[int]) -> int:
    """Rank of g restricted to ``rows`` x ``cols``.

    ``rows`` is a finite iterable of positions or a :class:`Cofinal` [p, inf).
    In the cofinal case rows beyond max(window, max col) meet the chosen
    columns only in zeros, so they are dropped.
    """
    if not g.ring.is_field:
        raise NotAField(f"rank over {g.ring.tag} is not supported")
    cols = sorted(set(cols))
    if not cols:
        return 0
    if isinstance(rows, Cofinal):
        top = max(g.window, cols[-1])
        rows = range(rows.start, top + 1)
    rows = sorted(set(rows))
    if not rows:
        return 0
    sub = [[g.entry(i, j) for j in cols] for i in rows]
    return matrix_rank(sub, g.ring)


def lower_left_rank(g: ColMatrix, p: int, q: int) -> int:
    """r_{>=p, q}(g): rank of rows >= p, columns <= q."""
    return submatrix_rank(g, Cofinal(p), range(1, q + 1))


def is_invertible(g: ColMatrix) -> bool:
    return matrix_rank(g.padded(g.window), g.ring) == g.window if g.window else True


def inverse(g: ColMatrix) -> ColMatrix:
    """General inverse over a field by Gauss-Jordan on the window block."""
    ring = g.ring
    if not ring.is_field:
        raise NotAField(f"general inversion over {ring.tag} is not supported")
    n = g.window
    a = g.padded(n)
    inv = [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)]
    zero = ring.zero
    for c in range(n):
        pivot = next((r for r in range(c, n) if a[r][c] != zero), None)
        if pivot is None:
            raise NotInvertible("matrix is singular", index=c + 1)
        a[c], a[pivot] = a[pivot], a[c]
        inv[c], inv[pivot] = inv[pivot], inv[c]
        f = ring.inv(a[c][c])
        a[c] = [ring.mul(f, x) for x in a[c]]
        inv[c] = [ring.mul(f, x) for x in inv[c]]
        for r in range(n):
            if r != c and a[r][c] != zero:
                f = a[r][c]
                a[r] = [ring.sub(x, ring.mul(f, y)) for x, y in zip(a[r], a[c])]
                inv[r] = [ring.sub(x, ring.mul(f, y)) for x, y in zip(inv[r], inv[c])]
    return ColMatrix._raw(inv, ring)
