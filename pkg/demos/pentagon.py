"""Walk the coefficient-free A2 exchange tree and watch it close up into a pentagon.

Run: python demos/pentagon.py
"""

from tropf.catalog import a2_coefficient_free
from tropf.laurent import format_laurent
from tropf.seeds import format_word, vertices

root = a2_coefficient_free()

# Alternate mutations 1, 2, 1, 2, ... and print the cluster after each step.
word = ()
for step in range(6):
    cluster = root.seed_at(word).cluster
    shown = ", ".join(format_laurent(x, root.names) for x in cluster)
    print(f"[{format_word(word):>11}]  {shown}")
    word = word + (step % 2 + 1,)

# Every reduced word to depth 6 produces only five distinct variables.
distinct = {x for t in vertices(2, 6) for x in root.seed_at(t).cluster}
print(f"\ndistinct cluster variables up to depth 6: {len(distinct)}")
for x in sorted(distinct, key=lambda p: (len(p), format_laurent(p))):
    print("  ", format_laurent(x, root.names))

# After five steps the cluster comes back with its two entries swapped.
print("\nseed at [1 2 1 2 1]:", [format_laurent(x) for x in root.seed_at((1, 2, 1, 2, 1)).cluster])
