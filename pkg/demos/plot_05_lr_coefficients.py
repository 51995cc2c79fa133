"""
Littlewood-Richardson coefficients
==================================

Enumerate the tableaux of a given type and compare with a quick census of
random embeddings.
"""

from collections import Counter

from picketlab import enumerate_tableaux
from picketlab.corpus import random_embedding

for t in enumerate_tableaux((2, 1), (3, 2, 1), (2, 1)):
    print(t.to_json())

# which tableaux do random submodules of M(3,2,1) realize?
seen = Counter()
for seed in range(300):
    M = random_embedding(3, (3, 2, 1), 2, seed)
    seen[str(M.tableau.to_json())] += 1
for chain, n in seen.most_common(5):
    print(n, chain)
