"""F-invariants on A2 with principal coefficients.

The pairing <u, v>_t depends on the chart t only through bookkeeping: its value is
the same at every vertex. Its symmetrisation, the F-invariant, is zero exactly when
u and v can sit together in one cluster.

Run: python demos/f_invariant_tour.py
"""

import itertools

from tropf.catalog import a2_principal
from tropf.invariant import check_seed_independence, f_invariant, is_log_canonical, is_product_cluster_monomial
from tropf.laurent import format_laurent
from tropf.pointed import certificate_at
from tropf.seeds import format_word, vertices

root = a2_principal()

variables = []
for t in vertices(2, 5):
    for x in root.seed_at(t).cluster[:2]:
        if x not in variables:
            variables.append(x)

print("cluster variables, with degree and F-polynomial at the root:")
for i, x in enumerate(variables):
    cert = certificate_at(x, root, ())
    print(f"  u{i} = {format_laurent(x)}")
    print(f"       g = {cert.g}   F = {format_laurent(cert.fpoly, ('y1', 'y2'))}")

print("\nF-invariant table:")
print("      " + "  ".join(f"u{j}" for j in range(len(variables))))
for i, u in enumerate(variables):
    print(f"  u{i}  " + "  ".join(f"{f_invariant(u, v, root):2}" for v in variables))

u, v = variables[0], root.seed_at((1,)).cluster[0]
report = check_seed_independence(u, v, root, 3)
print("\npairing of x1 with its exchange partner at every vertex to depth 3:")
for w, value in report.values.items():
    print(f"  [{format_word(w):>5}]  <u,v> = {value}   (u||v) = {report.symmetrized[w]}")

print("\nproduct test against log-canonicity:")
for a, b in itertools.combinations(range(len(variables)), 2):
    verdict = is_product_cluster_monomial(variables[a], variables[b], root)
    lc = is_log_canonical(variables[a], variables[b], root)
    print(f"  u{a} u{b}: cluster monomial = {bool(verdict)!s:5}  invariant = {verdict.invariant}  log-canonical = {lc.verdict}")
