"""The Markov quiver: every mutation negates the matrix, and the variables never repeat.

Run: python demos/markov_growth.py
"""

from tropf.catalog import MARKOV, markov_principal
from tropf.laurent import format_laurent
from tropf.seeds import mutate_matrix, vertices

for k in (1, 2, 3):
    print(f"mu_{k}(B) = {mutate_matrix(MARKOV, k).rows}")

root = markov_principal()
seen = set()
for depth in range(5):
    for t in vertices(3, depth):
        if len(t) == depth:
            seen.update(root.seed_at(t).cluster[:3])
    print(f"depth {depth}: {len(seen)} distinct unfrozen variables")

x = root.seed_at((1, 2, 3)).cluster[2]
print(f"\nx_3 at [1 2 3] has {len(x)} terms, all with positive coefficients: {all(c > 0 for c in x.coefficients())}")
print("first few terms:", " + ".join(format_laurent(x).split(" + ")[:4]), "+ ...")
