"""Relative position of two flags, read off an intersection gradation.

For complete flags F and E, the spaces F_i ∩ E_j grow by one dimension at
exactly one new j per step i. The resulting permutation labels the orbit of
the pair, and the gradation cells C_(i,j) are nonzero exactly on its graph.
"""

from bruhatkit import ColMatrix, Flag, GF, intersection_gradation, nonspanning_demo, relative_position

F5 = GF(5)
g = ColMatrix([[0, 0, 4, 2], [1, 2, 0, 1], [0, 0, 0, 3], [0, 3, 1, 3]], F5)
F = Flag(g, 4)
E = Flag.standard(4, F5)

w = relative_position(F, E)
print("w_{F,E} =", w.one_line(4), "  w_{E,F} =", relative_position(E, F).one_line(4))

table = intersection_gradation(F, E)
for i in range(1, 5):
    row = "".join("#" if table[(i, j)].dim else "." for j in range(1, 5))
    print(f"  i={i}: {row}")

# an almost gradation of an infinite filtration that never spans
print("\ne_1 stays outside span(e_k - e_(k+1) : k <= 50):", nonspanning_demo(50))
