"""
Boundary divisors of the compactified universal Jacobian
=========================================================

The boundary over the locus of curves with one node splits into one divisor
per node type, and some of those split again in two.  Which ones split
depends only on g and on d modulo 2g-2.
"""

from univjac import GD, boundary_table, invariants, pullback_boundary, total_boundary

# The integer k controls everything: a vine divisor of type (i, g-i) splits
# when k divides 2i-1.
gd = GD(4, 3)
print("k =", invariants(gd).k)

# Each row carries the generic multidegree on the two-component curve.
for row in boundary_table(gd):
    print(f"{row.label:5s} case {row.case}  multidegree {row.multidegree}")

# In even genus the middle divisor is special: it appears twice in the
# pull-back of the boundary of the moduli space of curves.
print(pullback_boundary(gd, 2))
print(total_boundary(gd))

# Sweep a few degrees to watch the split pattern move with d.
for d in range(0, 6):
    labels = [row.label for row in boundary_table(GD(4, d))]
    print(d, " ".join(labels))
