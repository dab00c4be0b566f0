"""
Tautological line bundles in the free basis
===========================================

Every determinant-of-cohomology bundle Lambda(n, m) is a combination of
three basic ones and the boundary.  The weight of the scalar automorphisms
on Lambda(n, m) is a quadratic polynomial in n and m.
"""

from univjac import GD, reduce_lambda, res_weight, theta_relation, xi_element
from univjac.picard import grr_degree_one, kappa_to_lambda, restrict

gd = GD(3, 2)

# Mumford's relation in degree two, pulled back.
print(reduce_lambda(gd, 2, 0))

# The same class computed from the Chern character side.
print(grr_degree_one(2, 1).as_dict())
print(kappa_to_lambda(gd, grr_degree_one(2, 1)))
print(reduce_lambda(gd, 2, 1))

# Restricting to smooth curves forgets the boundary.
print(restrict(reduce_lambda(gd, 2, 1)))

# Weights: only combinations of weight zero descend to the rigidification.
for n, m in [(0, 1), (1, 1), (2, 1), (1, -1)]:
    print((n, m), res_weight(gd, reduce_lambda(gd, n, m)))

# The weight-zero generator Xi, and its relation to the theta divisor.
for g, d in [(3, 2), (3, 0), (4, 1)]:
    rel = theta_relation(GD(g, d))
    print(GD(g, d), xi_element(GD(g, d)), "exponent", rel.exponent)
