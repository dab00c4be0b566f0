"""Slow reference implementations used to cross-check the library.

Nothing here imports the package under test; every quantity is recomputed
from its definition with plain loops or sympy.
"""

from fractions import Fraction
from itertools import combinations, product
from math import floor, gcd

import sympy


def k_dg(g, d):
    return (2 * g - 2) // gcd(2 * g - 2, d + g - 1)


def is_half(x):
    return Fraction(x).denominator == 2


def boundary_labels(g, d):
    """Labels from the half-integer test on d(2i-1)/(2g-2), not from divisibility by k."""
    out = ["d0"]
    for i in range(1, g // 2 + 1):
        x = Fraction(d * (2 * i - 1), 2 * g - 2)
        if is_half(x) and 2 * i == g:
            out.append("dg2")
        elif is_half(x):
            out += [f"d{i}_1", f"d{i}_2"]
        else:
            out.append(f"d{i}")
    return out


def nearest(x):
    """Closest integer via sympy rounding of an exact rational (no ties expected)."""
    r = sympy.Rational(x.numerator, x.denominator)
    lo = sympy.floor(r)
    return int(lo) if r - lo < sympy.Rational(1, 2) else int(lo) + 1


# -- graphs as plain (genera, edge list) ------------------------------------------


def vertex_valence(n, edges, v):
    return sum((a == v) + (b == v) for a, b in edges)


def crossing(edges, Z):
    return [(a, b) for a, b in edges if (a in Z) != (b in Z)]


def exceptional(genera, edges):
    n = len(genera)
    return {v for v in range(n)
            if genera[v] == 0 and vertex_valence(n, edges, v) == 2 and (v, v) not in edges}


def total_genus(genera, edges):
    return sum(genera) + len(edges) - len(genera) + 1


def inequality(genera, edges, Z, d):
    g = total_genus(genera, edges)
    w = sum(2 * genera[v] - 2 + vertex_valence(len(genera), edges, v) for v in Z)
    k = len(crossing(edges, Z))
    c = Fraction(d * w, 2 * g - 2)
    return c - Fraction(k, 2), c + Fraction(k, 2)


def all_subsets(n):
    for r in range(1, n):
        yield from (set(c) for c in combinations(range(n), r))


def properly_balanced(genera, edges, md):
    d = sum(md)
    exc = exceptional(genera, edges)
    if any(md[v] != 1 for v in exc):
        return False
    for Z in all_subsets(len(genera)):
        lo, hi = inequality(genera, edges, Z, d)
        if not lo <= sum(md[v] for v in Z) <= hi:
            return False
    return True


def strictly_balanced(genera, edges, md):
    if not properly_balanced(genera, edges, md):
        return False
    d = sum(md)
    exc = exceptional(genera, edges)
    for Z in all_subsets(len(genera)):
        lo, _ = inequality(genera, edges, Z, d)
        if sum(md[v] for v in Z) == lo:
            if any(a not in exc and b not in exc for a, b in crossing(edges, Z)):
                return False
    return True


def balanced_box(genera, edges, d, strict=False):
    """Every multidegree allowed by the one-vertex inequalities, filtered by the definitions."""
    n = len(genera)
    if n == 1:
        spans = [range(d, d + 1)]
    else:
        spans = []
        for v in range(n):
            lo, hi = inequality(genera, edges, {v}, d)
            spans.append(range(floor(lo) - 1, floor(hi) + 2))
    test = strictly_balanced if strict else properly_balanced
    found = []
    for head in product(*spans[:-1]):
        md = head + (d - sum(head),)
        if test(genera, edges, md):
            found.append(md)
    return sorted(found)


def vine_special(g1, g2, nodes, d):
    """Brute force on the two-component graph itself."""
    genera = [g1, g2]
    edges = [(0, 1)] * nodes
    g = total_genus(genera, edges)
    lo_, hi_ = inequality(genera, edges, {0}, d)
    for a in range(floor(lo_) - 1, floor(hi_) + 2):
        md = (a, d - a)
        if properly_balanced(genera, edges, md) and not strictly_balanced(genera, edges, md):
            return True
    assert g == g1 + g2 + nodes - 1
    return False


# -- symbolic checks ------------------------------------------------------------------

n_, m_ = sympy.symbols("n m", integer=True)
L10, L01, L11, DELTA = sympy.symbols("L10 L01 L11 delta")


def lambda_exponents_symbolic():
    """Lambda(n, m) over L10, L01, L11, delta from the degree-one GRR formula.

    Substitutes the kappa classes by their expressions in the Lambda classes
    and returns the coefficient polynomials in n and m.
    """
    k10 = 12 * L10 - DELTA
    k01 = L11 - L01
    k12 = -2 * L10 + L01 + L11
    expr = (sympy.Rational(1, 12) * (6 * n_**2 - 6 * n_ + 1) * k10
            + sympy.Rational(1, 2) * (2 * n_ * m_ - m_) * k01
            + sympy.Rational(1, 2) * m_**2 * k12
            + sympy.Rational(1, 12) * DELTA)
    expr = sympy.expand(expr)
    return {name: sympy.expand(expr.coeff(sym)) for name, sym in
            (("L10", L10), ("L01", L01), ("L11", L11), ("delta", DELTA))}


def smith_diagonal(rows):
    """Invariant factors from sympy's Smith normal form over ZZ."""
    from sympy.matrices.normalforms import smith_normal_form
    M = sympy.Matrix(rows)
    S = smith_normal_form(M, domain=sympy.ZZ)
    diag = [abs(int(S[i, i])) for i in range(min(S.shape))]
    return [x for x in diag if x]


def determinantal_divisors(rows):
    """Invariant factors as ratios of gcds of minors, straight from the definition."""
    M = sympy.Matrix(rows)
    m, n = M.shape
    out, prev = [], 1
    for r in range(1, min(m, n) + 1):
        g = 0
        for ri in combinations(range(m), r):
            for ci in combinations(range(n), r):
                g = gcd(g, int(M.extract(list(ri), list(ci)).det()))
        if g == 0:
            break
        out.append(g // prev)
        prev = g
    return out
