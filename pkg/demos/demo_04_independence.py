"""
Why the boundary divisors are independent
==========================================

For every boundary divisor there is a complete one-parameter family that
meets it with degree -1 and misses all divisors further down the list.
Laid out as a matrix, the rows are unit lower triangular, so no relation
among the boundary classes can survive restriction to all the families.
"""

from univjac import GD, compare_report, independence_matrix
from univjac.families import all_families

gd = GD(6, 5)
for name, rep in all_families(gd):
    if isinstance(rep, str):
        print(name, "-", rep)
    else:
        print(name, rep.multidegree, "balanced" if rep.is_balanced() else "NOT balanced")

# Question marks are intersection numbers we never need.
m = independence_matrix(gd)
print("      " + " ".join(f"{c:>5s}" for c in m.cols))
for rep in m.rows:
    print(f"{rep.family:6s}" + " ".join(f"{str(rep.row[c]):>5s}" for c in m.cols))
print(m.verdict)

# Compared with the moduli scheme, split divisors leave a free summand in
# the cokernel and the middle divisor in even genus leaves Z/2.
print(compare_report(GD(4, 3)).to_dict()["columns"])
