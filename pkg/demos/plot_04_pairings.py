"""
Non-degenerate pairings with C and A
====================================

C_ell^m has a single box labelled ell in row m.  Composing maps C -> M with
maps M -> P_ell^m gives a pairing, and every nonzero class on the right is
detected by some map from C.
"""

from picketlab import construct_a, construct_c, make_embedding, pairing_left, pairing_right
from picketlab.corpus import worked_example_embedding

C = construct_c(5, 2, 4)
print("C_2^4:", C.to_json(), C.tableau.to_json())

M = worked_example_embedding()
rep = pairing_left(5, 2, 4, M)
print("left:", rep.cosets_checked, "cosets checked,", len(rep.failures), "without witness")

# the same data on the dual side, with A_2^4
print("A_2^4:", construct_a(5, 2, 4).to_json())
N = make_embedding(2, (5, 3, 1), [(8, 1, 1), (16, 1, 1)])
rep = pairing_right(5, 2, 4, N)
print("right:", rep.cosets_checked, "cosets checked, ok =", rep.ok)
