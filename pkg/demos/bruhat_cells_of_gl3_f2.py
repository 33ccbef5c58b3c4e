"""Sorting the 168 invertible 3x3 matrices over F_2 into Bruhat cells.

Each matrix factors as b * sigma * c with b, c upper triangular. The
permutation sigma depends only on the double coset, and a cell B sigma B
over F_q has |B| * q^length(sigma) elements.
"""

from collections import Counter

from bruhatkit import ColMatrix, GF, bruhat_decompose
from bruhatkit.oracle import enumerate_gl

F2 = GF(2)
cells = Counter()
for block in enumerate_gl(3, 2):
    g = ColMatrix(block, F2)
    fac = bruhat_decompose(g)
    assert fac.product() == g
    cells[tuple(fac.sigma.one_line(3))] += 1

for sigma, size in sorted(cells.items(), key=lambda kv: kv[1]):
    print(f"sigma = {sigma}: {size:3d} matrices")
print("total:", sum(cells.values()))

g = ColMatrix([[0, 1, 1], [1, 1, 0], [1, 0, 0]], F2)
fac = bruhat_decompose(g)
print("\nexample factorization of", [list(r) for r in g.block])
print("b     =", fac.b.to_json()["block"])
print("sigma =", fac.sigma.one_line(3))
print("c     =", fac.c.to_json()["block"])
