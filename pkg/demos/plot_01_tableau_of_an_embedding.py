"""
The LR-tableau of an embedding
==============================

Build a submodule of M(5,3,1) over Z/2^5, read off its chain of quotient
types, and draw the tableau.
"""

from picketlab import make_embedding, validate
from picketlab.cli import render_tableau

# generators are rows in the standard coordinates of B = Z/32 + Z/8 + Z/2
M = make_embedding(2, (5, 3, 1), [(0, 2, 1), (28, 4, 1)])
print("alpha, beta, gamma:", *M.type)

# the chain B/p^k A for k = 0, 1, ..., alpha_1
t = M.tableau
print("chain:", t.to_json())

# parts are drawn as columns, row 1 on top
print(render_tableau(t))

# any increasing chain can be checked directly
print(validate([(3,), (3, 1), (4, 1), (5, 1)]).type)
