"""Finite-dimensional filtrations, almost gradations and flags over an exact field.

Subspaces of F^D are kept as reduced row echelon bases, so equality is
structural. Flags are given by an invertible D x D matrix whose first i
columns span the i-th step.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Hashable, Iterable, List, Mapping, Optional, Sequence, Tuple

from .colmat import ColMatrix, inverse, is_invertible, multiply, permutation_matrix
from .decomp import coset_label
from .errors import DimensionMismatch, InternalContradiction, InvalidFiltration, NotAField, NotInvertible
from .permutation import Permutation
from .scalar import QQ, Ring, ring_from_spec


def _rref(rows: List[list], ring: Ring) -> List[tuple]:
    """Nonzero rows of the reduced row echelon form."""
    zero = ring.zero
    rows = [list(r) for r in rows]
    if not rows:
        return []
    ncols = len(rows[0])
    rank = 0
    for c in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][c] != zero), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        f = ring.inv(rows[rank][c])
        rows[rank] = [ring.mul(f, x) for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][c] != zero:
                g = rows[r][c]
                rows[r] = [ring.sub(x, ring.mul(g, y)) for x, y in zip(rows[r], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return [tuple(r) for r in rows[:rank]]


class Subspace:
    """A subspace of ring^dim, stored as an RREF basis."""

    __slots__ = ("dim_ambient", "ring", "basis")

    def __init__(self, vectors: Iterable[Sequence] = (), dim: Optional[int] = None, ring: Ring = QQ):
        if not ring.is_field:
            raise NotAField(f"subspaces need a field, got {ring.tag}")
        vecs = [[ring.coerce(x) for x in v] for v in vectors]
        if dim is None:
            if not vecs:
                raise DimensionMismatch("ambient dimension is required for an empty spanning set")
            dim = len(vecs[0])
        if any(len(v) != dim for v in vecs):
            raise DimensionMismatch(f"vectors must have length {dim}")
        self.dim_ambient = dim
        self.ring = ring
        self.basis = tuple(_rref(vecs, ring))

    @classmethod
    def _from_rref(cls, basis, dim, ring):
        s = cls.__new__(cls)
        s.dim_ambient, s.ring, s.basis = dim, ring, tuple(basis)
        return s

    @classmethod
    def zero(cls, dim: int, ring: Ring = QQ) -> "Subspace":
        return cls._from_rref((), dim, ring)

    @classmethod
    def full(cls, dim: int, ring: Ring = QQ) -> "Subspace":
        return cls.span_of_basis(range(1, dim + 1), dim, ring)

    @classmethod
    def span_of_basis(cls, indices: Iterable[int], dim: int, ring: Ring = QQ) -> "Subspace":
        """span(e_i : i in indices), 1-based."""
        vecs = []
        for i in indices:
            v = [ring.zero] * dim
            v[i - 1] = ring.one
            vecs.append(v)
        return cls(vecs, dim, ring)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _check(self, other: "Subspace"):
        if self.dim_ambient != other.dim_ambient or self.ring != other.ring:
            raise DimensionMismatch("subspaces live in different ambient spaces")

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace._from_rref(_rref(list(self.basis) + list(other.basis), self.ring),
                                   self.dim_ambient, self.ring)

    def __and__(self, other: "Subspace") -> "Subspace":
        """Intersection by the Zassenhaus trick."""
        self._check(other)
        if not self.basis or not other.basis:
            return Subspace.zero(self.dim_ambient, self.ring)
        zero = self.ring.zero
        d = self.dim_ambient
        rows = [list(u) + list(u) for u in self.basis]
        rows += [list(w) + [zero] * d for w in other.basis]
        red = _rref(rows, self.ring)
        meet = [r[d:] for r in red if all(x == zero for x in r[:d])]
        return Subspace._from_rref(_rref(meet, self.ring), d, self.ring)

    def contains_vector(self, v: Sequence) -> bool:
        v = [self.ring.coerce(x) for x in v]
        return len(_rref(list(self.basis) + [v], self.ring)) == self.dim

    def __le__(self, other: "Subspace") -> bool:
        self._check(other)
        return (self + other).dim == other.dim

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.dim_ambient, self.ring, self.basis) == (other.dim_ambient, other.ring, other.basis)

    def __hash__(self):
        return hash((self.dim_ambient, self.ring, self.basis))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.dim_ambient}, ring={self.ring!r})"

    def to_json(self):
        return [[self.ring.format(x) for x in row] for row in self.basis]


def sum_of(spaces: Iterable[Subspace], dim: int, ring: Ring) -> Subspace:
    total = Subspace.zero(dim, ring)
    for s in spaces:
        total = total + s
    return total


def complement(inner: Subspace, outer: Subspace, rng: Optional[random.Random] = None) -> Subspace:
    """A complement of ``inner`` inside ``outer``.

    Deterministic (echelon order of ``outer``'s basis) unless ``rng`` is
    given, in which case random combinations of the basis are tried.
    """
    if not inner <= outer:
        raise InvalidFiltration("inner subspace is not contained in the outer one")
    ring = outer.ring
    need = outer.dim - inner.dim
    current = inner
    chosen = []
    if rng is None:
        candidates = iter(outer.basis)
    else:
        candidates = _random_vectors(outer, rng)
    while len(chosen) < need:
        v = next(candidates)
        bigger = current + Subspace([v], outer.dim_ambient, ring)
        if bigger.dim > current.dim:
            chosen.append(v)
            current = bigger
    return Subspace(chosen, outer.dim_ambient, ring)


def _random_scalar(ring: Ring, rng: random.Random):
    p = getattr(ring, "p", None)
    if p is not None:
        return rng.randrange(p)
    return Fraction(rng.randint(-4, 4), rng.randint(1, 3))


def _random_vectors(space: Subspace, rng: random.Random):
    ring = space.ring
    while True:
        v = [ring.zero] * space.dim_ambient
        for row in space.basis:
            a = _random_scalar(ring, rng)
            v = [ring.add(x, ring.mul(a, y)) for x, y in zip(v, row)]
        yield v


# -- posets and filtrations -------------------------------------------------

@dataclass(frozen=True)
class Poset:
    elements: Tuple[Hashable, ...]
    leq: Callable[[Hashable, Hashable], bool]

    def below(self, p) -> List[Hashable]:
        """Elements strictly below p."""
        return [q for q in self.elements if q != p and self.leq(q, p)]

    def at_most(self, p) -> List[Hashable]:
        return [q for q in self.elements if self.leq(q, p)]


def chain(n: int) -> Poset:
    """The chain 0 < 1 < ... < n."""
    return Poset(tuple(range(n + 1)), lambda a, b: a <= b)


def product_of_chains(m: int, n: int) -> Poset:
    elems = tuple((i, j) for i in range(m + 1) for j in range(n + 1))
    return Poset(elems, lambda a, b: a[0] <= b[0] and a[1] <= b[1])


class Filtration:
    """An order-preserving map from a finite poset to subspaces of ring^dim."""

    def __init__(self, poset: Poset, modules: Mapping[Hashable, Subspace]):
        if set(modules) != set(poset.elements):
            raise InvalidFiltration("modules must be indexed by exactly the poset elements")
        spaces = list(modules.values())
        if not spaces:
            raise InvalidFiltration("empty filtration")
        dim, ring = spaces[0].dim_ambient, spaces[0].ring
        for s in spaces:
            if s.dim_ambient != dim or s.ring != ring:
                raise DimensionMismatch("all modules must share the ambient space")
        if not any(s.dim == 0 for s in spaces):
            raise InvalidFiltration("(F1) no index maps to the zero subspace")
        if not any(s.dim == dim for s in spaces):
            raise InvalidFiltration("(F2) no index maps to the whole space")
        for p in poset.elements:
            for q in poset.elements:
                if poset.leq(p, q) and not modules[p] <= modules[q]:
                    raise InvalidFiltration(f"(F3) not order preserving at {p!r} <= {q!r}")
        self.poset = poset
        self.modules = dict(modules)
        self.dim = dim
        self.ring = ring

    def __getitem__(self, p) -> Subspace:
        return self.modules[p]

    def strictly_below(self, p) -> Subspace:
        """F_{<p}."""
        return sum_of((self.modules[q] for q in self.poset.below(p)), self.dim, self.ring)

    def is_linear(self) -> bool:
        """Whether the modules form a chain under inclusion."""
        spaces = list(self.modules.values())
        return all(a <= b or b <= a for a in spaces for b in spaces)


def _check_table(F: Filtration, C: Mapping[Hashable, Subspace]):
    if set(C) != set(F.poset.elements):
        raise DimensionMismatch("gradation table must be indexed by the filtration's poset")
    for s in C.values():
        if s.dim_ambient != F.dim or s.ring != F.ring:
            raise DimensionMismatch("gradation table lives in a different ambient space")


def is_almost_gradation(F: Filtration, C: Mapping[Hashable, Subspace]) -> bool:
    """F_{<p} ∩ C_p = 0 and F_{<p} + C_p = F_p for every p."""
    _check_table(F, C)
    for p in F.poset.elements:
        lower = F.strictly_below(p)
        if (lower & C[p]).dim != 0 or lower + C[p] != F[p]:
            return False
    return True


def is_independent(C: Mapping[Hashable, Subspace]) -> bool:
    spaces = list(C.values())
    if not spaces:
        return True
    total = sum_of(spaces, spaces[0].dim_ambient, spaces[0].ring)
    return total.dim == sum(s.dim for s in spaces)


def spans(F: Filtration, C: Mapping[Hashable, Subspace]) -> bool:
    """Sum of C_q over q <= p equals F_p for every p."""
    _check_table(F, C)
    return all(
        sum_of((C[q] for q in F.poset.at_most(p)), F.dim, F.ring) == F[p]
        for p in F.poset.elements
    )


def is_gradation(F: Filtration, C: Mapping[Hashable, Subspace]) -> bool:
    return is_almost_gradation(F, C) and is_independent(C) and spans(F, C)


def random_almost_gradation(F: Filtration, rng: random.Random) -> Dict[Hashable, Subspace]:
    """C_p a random complement of F_{<p} inside F_p."""
    return {p: complement(F.strictly_below(p), F[p], rng) for p in F.poset.elements}


def nonspanning_demo(bound: int) -> bool:
    """e_1 is outside span(f_1, ..., f_b) for every b <= bound, f_k = e_k - e_{k+1}.

    Every f_k lies in the kernel of the coordinate-sum functional, which
    e_1 does not, so no finite stage of this almost gradation reaches e_1.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    for b in range(1, bound + 1):
        dim = b + 1
        fs = []
        for k in range(1, b + 1):
            v = [0] * dim
            v[k - 1], v[k] = 1, -1
            fs.append(v)
        e1 = [1] + [0] * b
        if Subspace(fs, dim, QQ).contains_vector(e1):
            return False
    return True


def tail_chain_example(dim: int, ring: Ring = QQ):
    """Truncation of the tail filtration G_k = span(e_k, ..., e_dim) with f-gradation.

    Index t in 0..dim stands for G_{dim-t+1} (so t = 0 is the zero space).
    The table puts span(e_dim) at t = 1 and span(f_k), k = dim-t+1, above it.
    Returns ``(filtration, table)``; the table is a gradation of the truncation.
    """
    modules = {t: Subspace.span_of_basis(range(dim - t + 1, dim + 1), dim, ring)
               for t in range(dim + 1)}
    table = {0: Subspace.zero(dim, ring), 1: Subspace.span_of_basis([dim], dim, ring)}
    for t in range(2, dim + 1):
        k = dim - t + 1
        v = [0] * dim
        v[k - 1], v[k] = 1, -1
        table[t] = Subspace([v], dim, ring)
    return Filtration(chain(dim), modules), table


# -- flags ------------------------------------------------------------------

class Flag:
    """Complete flag F_i = span(first i columns of an invertible matrix)."""

    def __init__(self, matrix: ColMatrix, dim: Optional[int] = None):
        if not matrix.ring.is_field:
            raise NotAField(f"flags need a field, got {matrix.ring.tag}")
        if not is_invertible(matrix):
            raise NotInvertible("flag columns are not a basis")
        self.matrix = matrix
        self.ring = matrix.ring
        self.dim = max(matrix.window, dim or 0)

    @classmethod
    def standard(cls, dim: int, ring: Ring = QQ) -> "Flag":
        return cls(ColMatrix.identity(ring), dim)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], ring: Ring = QQ) -> "Flag":
        d = len(columns)
        block = [[columns[j][i] for j in range(d)] for i in range(d)]
        return cls(ColMatrix(block, ring), d)

    @classmethod
    def permuted(cls, sigma: Permutation, dim: int, ring: Ring = QQ) -> "Flag":
        """sigma·E: step i is span(e_sigma(1), ..., e_sigma(i))."""
        return cls(permutation_matrix(sigma, ring), dim)

    def columns(self) -> List[list]:
        return [self.matrix.column(j, self.dim) for j in range(1, self.dim + 1)]

    def step(self, i: int) -> Subspace:
        if i == 0:
            return Subspace.zero(self.dim, self.ring)
        return Subspace(self.columns()[:i], self.dim, self.ring)

    def steps(self) -> List[Subspace]:
        """F_0, F_1, ..., F_dim."""
        cols = self.columns()
        out = [Subspace.zero(self.dim, self.ring)]
        for i in range(1, self.dim + 1):
            out.append(out[-1] + Subspace([cols[i - 1]], self.dim, self.ring))
        return out

    def filtration(self) -> Filtration:
        return Filtration(chain(self.dim), dict(enumerate(self.steps())))

    def to_json(self):
        return {"field": self.ring.tag,
                "columns": [[self.ring.format(x) for x in c] for c in self.columns()]}

    @classmethod
    def from_json(cls, data) -> "Flag":
        ring = ring_from_spec(data.get("field", "Q"))
        cols = [[ring.parse(x) if isinstance(x, str) else ring.coerce(x) for x in c]
                for c in data["columns"]]
        if any(len(c) != len(cols) for c in cols):
            raise DimensionMismatch("flag needs D columns of length D")
        return cls.from_columns(cols, ring)


def _aligned(F: Flag, E: Flag) -> int:
    if F.ring != E.ring:
        raise DimensionMismatch("flags over different fields")
    return max(F.dim, E.dim)


def relative_position_matrix(F: Flag, E: Flag) -> Permutation:
    """w_{F,E} as the Bruhat cell of h^{-1} g where F = gE_std, E = hE_std."""
    _aligned(F, E)
    return coset_label(multiply(inverse(E.matrix), F.matrix))


def dimension_table(F: Flag, E: Flag) -> List[List[int]]:
    """d[i][j] = dim(F_i ∩ E_j) for 0 <= i, j <= D."""
    d = _aligned(F, E)
    F = Flag(F.matrix, d)
    E = Flag(E.matrix, d)
    fs, es = F.steps(), E.steps()
    return [[(fi & ej).dim for ej in es] for fi in fs]


def relative_position_jumps(F: Flag, E: Flag) -> Permutation:
    """w(i) = the j where d(i,j) - d(i-1,j) - d(i,j-1) + d(i-1,j-1) = 1."""
    d = dimension_table(F, E)
    n = len(d) - 1
    values = []
    for i in range(1, n + 1):
        js = [j for j in range(1, n + 1)
              if d[i][j] - d[i - 1][j] - d[i][j - 1] + d[i - 1][j - 1] == 1]
        if len(js) != 1:
            raise InternalContradiction(f"row {i} of the jump table has {len(js)} unit jumps")
        values.append(js[0])
    return Permutation.from_one_line(values)


def relative_position(F: Flag, E: Flag) -> Permutation:
    """w_{F,E}, computed from the matrix cell and from the jump table."""
    a = relative_position_matrix(F, E)
    b = relative_position_jumps(F, E)
    if a != b:
        raise InternalContradiction(f"relative position methods disagree: {a!r} vs {b!r}")
    return a


def intersection_gradation(F: Flag, E: Flag) -> Dict[Tuple[int, int], Subspace]:
    """Gradation of (i, j) -> F_i ∩ E_j on the product of chains 0..D.

    C_{(i,j)} is the echelon complement of F_{i-1}∩E_j + F_i∩E_{j-1} in
    F_i∩E_j (zero on the boundary rows i = 0 or j = 0).
    """
    d = _aligned(F, E)
    fs, es = Flag(F.matrix, d).steps(), Flag(E.matrix, d).steps()
    meet = [[fi & ej for ej in es] for fi in fs]
    table = {}
    for i in range(d + 1):
        for j in range(d + 1):
            if i == 0 or j == 0:
                table[(i, j)] = Subspace.zero(d, F.ring)
                continue
            table[(i, j)] = complement(meet[i - 1][j] + meet[i][j - 1], meet[i][j])
    return table


def intersection_filtration(F: Flag, E: Flag) -> Filtration:
    d = _aligned(F, E)
    fs, es = Flag(F.matrix, d).steps(), Flag(E.matrix, d).steps()
    return Filtration(product_of_chains(d, d),
                      {(i, j): fs[i] & es[j] for i in range(d + 1) for j in range(d + 1)})


def stabilizes_standard_flag(g: ColMatrix) -> bool:
    """Whether g·E_i = E_i for every i <= window."""
    if not is_invertible(g):
        raise NotInvertible("matrix is singular")
    n = g.window
    for i in range(1, n + 1):
        image = Subspace([g.column(j, n) for j in range(1, i + 1)], n, g.ring)
        if image != Subspace.span_of_basis(range(1, i + 1), n, g.ring):
            return False
    return True
