"""Tropical points of the two dual patterns on A2 with principal coefficients.

Run: python demos/tropical_points.py
"""

from tropf.catalog import a2_principal
from tropf.pointed import certificate_at
from tropf.seeds import format_word, vertices
from tropf.tropical import are_compatible, point_x, point_y, transport_x, transport_y, uplus, x_to_y, y_to_x

root = a2_principal()

p = point_y((), (1, 0, 0, 0), root)
q = point_x((), (1, 0, 0, 0), root)
print("coordinates of one Y-point and one X-point along the tree:")
for w in vertices(2, 3):
    print(f"  [{format_word(w):>5}]  Y: {transport_y(p, w, root)}   X: {transport_x(q, w, root)}")

print("\nmaps between the two kinds of points at the root:")
print("  Y (1,0,0,0) -> X", y_to_x(p, root).coord)
print("  X (0,0,1,0) -> Y", x_to_y(point_x((), (0, 0, 1, 0), root), root).coord)

# Degrees of a cluster variable in every chart trace out a Y-point.
x = root.seed_at((1, 2)).cluster[0]
start = point_y((), certificate_at(x, root, ()).g, root)
print("\ndegrees of x_{1;[1 2]} against the tropical transport:")
for w in vertices(2, 3):
    print(f"  [{format_word(w):>5}]  {certificate_at(x, root, w).g}  {transport_y(start, w, root)}")

a, b = point_y((), (1, 0, 0, 0), root), point_y((), (0, 1, 0, 0), root)
print("\ncompatible:", are_compatible(a, b, 5, root).verdict, " sum:", uplus(a, b, 5, root).coord)
c = point_y((), (-1, 1, 0, 0), root)
print("incompatible:", are_compatible(a, c, 5, root).verdict)
