"""Rank conditions versus the Bruhat order on GL_3(F_2).

A matrix g lies in Y_sigma when every lower-left block (rows >= p, columns
<= q) has rank at most the matching count for sigma. The closure relation
says this happens exactly when the cell of g sits below sigma.
"""

from bruhatkit import ColMatrix, GF, bruhat_leq, coset_label, y_sigma_contains
from bruhatkit.oracle import enumerate_gl, enumerate_sn

F2 = GF(2)
matrices = [ColMatrix(b, F2) for b in enumerate_gl(3, 2)]
for sigma in enumerate_sn(3):
    inside = [g for g in matrices if y_sigma_contains(sigma, g)]
    cells = sorted({tuple(coset_label(g).one_line(3)) for g in inside})
    agree = all(y_sigma_contains(sigma, g) == bruhat_leq(coset_label(g), sigma) for g in matrices)
    print(f"Y_{sigma.one_line(3)}: {len(inside):3d} matrices, cells {cells}, matches order: {agree}")
