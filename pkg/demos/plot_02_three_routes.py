"""
Counting boxes three ways
=========================

For each (ell, m) the number of boxes labelled ell in row m is computed
from the tableau, from a Hom-length formula, from the semisimple subfactor
and by solving for Hom spaces directly.  All four must agree.
"""

from picketlab.corpus import worked_example_embedding
from picketlab.homs import to_picket_rows

M = worked_example_embedding()

print("ell  m  dim  routes")
for rep in to_picket_rows(M, max_m=5):
    if rep.dim:
        print(f"{rep.ell:3d} {rep.m:2d} {rep.dim:4d}  {rep.routes}")

# cells with nonzero dimension are exactly the maps into pickets that
# do not factor through the sink map g
