"""
Duality and maps out of pickets
===============================

The dual embedding (ann A in B*) swaps the sub and quotient types.  Its
tableau predicts the dimensions of Hom(P_q^m, M) modulo maps through h.
"""

from picketlab import dual, picket
from picketlab.corpus import worked_example_embedding
from picketlab.homs import to_picket_rows, from_picket_rows

M = worked_example_embedding()
D = dual(M)
print("M :", *M.type)
print("M*:", *D.type)

rows_dual = {(r.ell, r.m): r.dim for r in to_picket_rows(D, 5)}
rows_h = {(r.ell, r.m): r.dim for r in from_picket_rows(M, 5)}
print("h-route equals tableau of M*:", rows_dual == rows_h)

# pickets dualize to pickets
for ell in range(4):
    print(f"P_{ell}^3 -> ", dual(picket(2, ell, 3)).gens)
