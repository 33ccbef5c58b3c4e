"""Bruhat factorization g = b·sigma·c over a field, and the degeneration identity."""

from __future__ import annotations

from dataclasses import dataclass

from .colmat import (
    ColMatrix,
    elementary_add,
    elementary_scale,
    lower_left_rank,
    matrix_rank,
    multiply,
    permutation_matrix,
    triangular_inverse,
)
from .errors import NotADescent, NotAField, NotAUnit, NotInvertible
from .permutation import Permutation
from .scalar import Ring


@dataclass(frozen=True)
class BruhatFactorization:
    b: ColMatrix
    sigma: Permutation
    c: ColMatrix

    def product(self) -> ColMatrix:
        return multiply(self.b, multiply(permutation_matrix(self.sigma, self.b.ring), self.c))

    def to_json(self):
        return {"b": self.b.to_json(), "sigma": self.sigma.to_json(), "c": self.c.to_json()}


def _require_invertible_field(g: ColMatrix):
    if not g.ring.is_field:
        raise NotAField(f"Bruhat decomposition needs a field, got {g.ring.tag}")
    n = g.window
    if n and matrix_rank(g.padded(n), g.ring) != n:
        raise NotInvertible("matrix is singular")


def coset_label(g: ColMatrix) -> Permutation:
    """The permutation sigma with g in B·sigma·B.

    With R(p, q) the rank of rows >= p, columns <= q, the indicator
    [sigma(q) >= p] equals R(p, q) - R(p, q-1); summing over p gives sigma(q).
    """
    _require_invertible_field(g)
    n = g.window
    if n == 0:
        return Permutation()
    values = []
    for q in range(1, n + 1):
        v = 0
        for p in range(1, n + 2):
            jump = lower_left_rank(g, p, q) - (lower_left_rank(g, p, q - 1) if q > 1 else 0)
            if jump not in (0, 1):
                raise NotInvertible(f"rank jump {jump} at ({p}, {q})")
            v += jump
        values.append(v)
    return Permutation.from_one_line(values)


def bruhat_decompose(g: ColMatrix) -> BruhatFactorization:
    """Factor an invertible g as b·sigma·c with b, c upper triangular.

    Column by column: pivot on the lowest nonzero entry, clear above it with
    row operations (row k += a·row i for k < i, an upper triangular left
    factor) and clear its row to the right with column operations (an upper
    triangular right factor). What remains is the permutation matrix.
    """
    _require_invertible_field(g)
    ring = g.ring
    n = g.window
    if n == 0:
        return BruhatFactorization(g, Permutation(), g)
    zero, one = ring.zero, ring.one
    a = g.padded(n)
    left = [[one if i == j else zero for j in range(n)] for i in range(n)]
    right = [[one if i == j else zero for j in range(n)] for i in range(n)]
    sigma = [0] * n

    for j in range(n):
        i = next((r for r in range(n - 1, -1, -1) if a[r][j] != zero), None)
        if i is None:
            raise NotInvertible(f"column {j + 1} has no pivot", index=j + 1)
        sigma[j] = i + 1
        s = ring.inv(a[i][j])
        for r in range(n):
            a[r][j] = ring.mul(a[r][j], s)
            right[r][j] = ring.mul(right[r][j], s)
        for k in range(i):
            f = a[k][j]
            if f != zero:
                a[k] = [ring.sub(x, ring.mul(f, y)) for x, y in zip(a[k], a[i])]
                left[k] = [ring.sub(x, ring.mul(f, y)) for x, y in zip(left[k], left[i])]
        for l in range(j + 1, n):
            f = a[i][l]
            if f != zero:
                for r in range(n):
                    a[r][l] = ring.sub(a[r][l], ring.mul(f, a[r][j]))
                    right[r][l] = ring.sub(right[r][l], ring.mul(f, right[r][j]))

    # left·g·right = sigma, hence g = left^{-1}·sigma·right^{-1}
    b = triangular_inverse(ColMatrix._raw(left, ring))
    c = triangular_inverse(ColMatrix._raw(right, ring))
    return BruhatFactorization(b, Permutation.from_one_line(sigma), c)


def degenerate_to_cell(tau: Permutation, p: int, q: int, r, ring: Ring):
    """Upper triangular (b, c) with sigma·L_{q,p}(r) = b·tau·c, sigma = tau·(p, q).

    b = (L_{sigma(p),sigma(q)}(r) D_{sigma(p)}(-r) D_{sigma(q)}(r^-1))^-1 and
    c = L_{p,q}(-r^-1)^-1.
    """
    if not p < q:
        raise NotADescent(f"need p < q, got ({p}, {q})")
    if not tau.apply(p) > tau.apply(q):
        raise NotADescent(f"tau({p}) = {tau.apply(p)} is not above tau({q}) = {tau.apply(q)}")
    r = ring.coerce(r)
    if not ring.is_unit(r):
        raise NotAUnit(f"{ring.format(r)} is not a unit")
    sigma = tau.swap_positions(p, q)
    sp, sq = sigma.apply(p), sigma.apply(q)
    rinv = ring.inv(r)
    lhs = multiply(
        elementary_add(sp, sq, r, ring),
        multiply(elementary_scale(sp, ring.neg(r), ring), elementary_scale(sq, rinv, ring)),
    )
    b = triangular_inverse(lhs)
    c = triangular_inverse(elementary_add(p, q, ring.neg(rinv), ring))
    return b, c
