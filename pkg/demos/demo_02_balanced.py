"""
Balanced multidegrees on a quasistable curve
============================================

A line bundle on a nodal fibre is allowed in the compactification when its
multidegree satisfies the basic inequality on every subcurve.  Here we look
at a vine curve and at a curve with an exceptional component.
"""

from univjac import DualGraph, enumerate_balanced, is_d_special, vine
from univjac.balanced import basic_bounds

# Two elliptic curves meeting in two points: genus 3.
v = vine(1, 1, 2)
print(v.genus, basic_bounds(v, ["C1"], 2))

# Three properly balanced multidegrees, only one of them strictly.
print(enumerate_balanced(v, 2))
print(enumerate_balanced(v, 2, strict=True))

# That gap is exactly what makes the curve d-special for d = 2.
print("d-special for d=2:", is_d_special(v, 2))
print("d-special for d=1:", is_d_special(v, 1))

# Inserting a rational bridge E forces degree one on it.
q = DualGraph([("A", 1), ("E", 0), ("B", 1)], [("A", "E"), ("E", "B"), ("A", "B")])
for md in enumerate_balanced(q, 3):
    print(dict(zip(q.ids, md)))
