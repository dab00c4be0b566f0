from fractions import Fraction
from math import gcd

import pytest
import sympy
from hypothesis import given, strategies as st

import oracle
from conftest import grid
from univjac.arith import GD, invariants
from univjac.balanced import is_properly_balanced
from univjac.errors import DomainError, RangeError
from univjac.picard import (
    PicElement, QClass, basis, binom2, boundary_labels, boundary_table, chi_d, eta_decomposition,
    eta_topo, grr_degree_one, include_rigid, kappa_to_lambda, membership_J, presentation,
    pullback_boundary, reduce_K, reduce_lambda, res_weight, restrict, spin_grr, theta_relation,
    topo_class, total_boundary, xi_element,
)


def E(space, **c):
    return PicElement(space, c)


# -- boundary ----------------------------------------------------------------------------


def test_boundary_goldens():
    t = boundary_table(GD(3, 2))
    assert [(r.label, r.multidegree) for r in t] == [("d0", (2,)), ("d1_1", (0, 2)), ("d1_2", (1, 1))]
    t = boundary_table(GD(3, 1))
    assert [(r.label, r.multidegree) for r in t] == [("d0", (1,)), ("d1", (0, 1))]
    t = boundary_table(GD(4, 3))
    assert [r.label for r in t] == ["d0", "d1_1", "d1_2", "dg2"]
    assert t[-1].multidegree == (1, 2)
    assert len(boundary_table(GD(4, 0))) == 3


def test_boundary_against_oracle(full_grid):
    for gd in full_grid:
        g, d = gd.g, gd.d
        assert list(boundary_labels(gd)) == oracle.boundary_labels(g, d)
        for row in boundary_table(gd):
            assert sum(row.multidegree) == d
            assert is_properly_balanced(row.generic_graph(), row.multidegree)
            if row.case == "B":
                x = Fraction(d * (2 * row.i - 1), 2 * g - 2)
                y = Fraction(d * (2 * (g - row.i) - 1), 2 * g - 2)
                assert row.multidegree == (oracle.nearest(x), oracle.nearest(y))


@given(st.integers(3, 12), st.integers(-60, 60))
def test_boundary_count_shift_invariant(g, d):
    assert boundary_labels(GD(g, d)) == boundary_labels(GD(g, d + 2 * g - 2))


def test_pullback_examples():
    assert pullback_boundary(GD(3, 1), 1) == E("barjac", d1=1)
    assert pullback_boundary(GD(3, 2), 1) == E("barjac", d1_1=1, d1_2=1)
    assert pullback_boundary(GD(4, 3), 2) == E("barjac", dg2=2)
    with pytest.raises(RangeError):
        pullback_boundary(GD(4, 3), 3)
    with pytest.raises(RangeError):
        pullback_boundary(GD(4, 3), -1)


def test_total_boundary_examples():
    assert total_boundary(GD(3, 1)) == E("barjac", d0=1, d1=1)
    assert total_boundary(GD(3, 2)) == E("barjac", d0=1, d1_1=1, d1_2=1)
    assert total_boundary(GD(4, 3)) == E("barjac", d0=1, d1_1=1, d1_2=1, dg2=2)


# -- elements ---------------------------------------------------------------------------


def test_element_arithmetic_and_spaces():
    a = E("barjac", L10=2, d0=1)
    b = E("barjac", L10=-2, L01=3)
    assert a + b == E("barjac", L01=3, d0=1)
    assert 3 * a - a == 2 * a
    assert (a - a).coeffs == {}
    with pytest.raises(DomainError):
        a + E("jac", L10=1)
    with pytest.raises(DomainError):
        E("j", L01=1)
    with pytest.raises(DomainError):
        E("jac", d0=1)
    with pytest.raises(DomainError):
        E("jac", L10=Fraction(1, 2))
    with pytest.raises(DomainError):
        E("space", L10=1)
    with pytest.raises(DomainError):
        E("barjac", d7=1).vector(GD(3, 1))
    assert PicElement.from_dict(a.to_dict()) == a
    assert restrict(a) == E("jac", L10=2)


def test_basis():
    assert basis(GD(3, 2), "barjac") == ("L10", "L01", "L11", "d0", "d1_1", "d1_2")
    assert basis(GD(3, 2), "j") == ("L10", "Xi")
    with pytest.raises(DomainError):
        basis(GD(3, 2), "other")


# -- GRR and reductions -----------------------------------------------------------------


def test_grr_examples():
    q = Fraction
    assert grr_degree_one(1, 0).coeffs == (q(1, 12), 0, 0, q(1, 12))
    assert grr_degree_one(0, 1).coeffs == (q(1, 12), q(-1, 2), q(1, 2), q(1, 12))
    assert grr_degree_one(0, 0).coeffs == (q(1, 12), 0, 0, q(1, 12))


def test_reduce_lambda_examples():
    gd = GD(3, 2)
    assert reduce_lambda(gd, 1, 0) == E("barjac", L10=1)
    assert reduce_lambda(gd, 2, 0) == E("barjac", L10=13) - total_boundary(gd)
    assert reduce_lambda(gd, 2, 1) == E("barjac", L10=12, L01=-1, L11=2, d0=-1, d1_1=-1, d1_2=-1)
    assert binom2(-1) == 1 and binom2(0) == 0 and binom2(5) == 10


def test_reduce_lambda_symbolic():
    """The exponent polynomials agree with sympy's expansion of the GRR class."""
    sym = oracle.lambda_exponents_symbolic()
    for gd in (GD(3, 2), GD(5, 3), GD(6, 5)):
        for n in range(-5, 6):
            for m in range(-5, 6):
                got = reduce_lambda(gd, n, m)
                subs = {oracle.n_: n, oracle.m_: m}
                for name in ("L10", "L01", "L11"):
                    assert got[name] == sym[name].subs(subs)
                dcoef = sym["delta"].subs(subs)
                assert got - E("barjac", L10=got["L10"], L01=got["L01"], L11=got["L11"]) == \
                    int(dcoef) * total_boundary(gd)


def test_reduce_K_examples():
    gd = GD(3, 1)
    assert reduce_K(gd, "K01") == E("barjac", L11=1, L01=-1)
    assert reduce_K(gd, "K_12") == E("barjac", L01=1, L11=1, L10=-2)
    assert reduce_K(gd, "K10") == E("barjac", L10=12, d0=-1, d1=-1)
    with pytest.raises(DomainError):
        reduce_K(gd, "K22")


def test_kappa_roundtrip():
    gd = GD(4, 3)
    assert kappa_to_lambda(gd, QClass("kappa", (1, 0, 0, 0))) == reduce_K(gd, "K10")
    with pytest.raises(DomainError):
        kappa_to_lambda(gd, QClass("kappa", (0, 0, 0, Fraction(1, 2))))
    with pytest.raises(DomainError):
        QClass("kappa", (1, 2))


# -- weights, Xi and chi -------------------------------------------------------------------


def test_weight_examples():
    gd = GD(3, 2)
    assert res_weight(gd, E("jac", L01=1)) == 0
    assert res_weight(gd, E("jac", L11=1)) == 4
    assert res_weight(gd, E("barjac", d0=5)) == 0
    assert res_weight(gd, E("j", Xi=3)) == 0


def test_weight_formula_symbolic():
    n, m, g, d = sympy.symbols("n m g d", integer=True)
    l01 = -m * n + (m + 1) * m / 2
    l11 = m * n + m * (m - 1) / 2
    weight = (d - g + 1) * l01 + (d + g - 1) * l11
    assert sympy.expand(weight - m * (n * (2 * g - 2) + m * d + 1 - g)) == 0


def test_weight_gcd_is_gerbe_order(full_grid):
    for gd in full_grid:
        w = gcd(res_weight(gd, E("jac", L01=1)), res_weight(gd, E("jac", L11=1)))
        assert w == gcd(gd.d + 1 - gd.g, 2 * gd.g - 2)


def test_xi_examples():
    assert xi_element(GD(3, 2)) == E("jac", L01=1)
    assert xi_element(GD(4, 1)) == E("jac", L01=2, L11=1)
    assert membership_J(GD(4, 1), E("jac", L01=1)) is None
    assert membership_J(GD(4, 1), E("jac", L10=1)) == (1, 0)
    assert chi_d(GD(3, 2), E("j", Xi=1)) == 1
    assert chi_d(GD(4, 1), E("j", Xi=1)) == 3
    assert chi_d(GD(4, 1), E("j", L10=7)) == 0
    with pytest.raises(DomainError):
        chi_d(GD(4, 1), E("jac", L10=1))


def test_rigid_inclusion(full_grid):
    for gd in full_grid:
        xi = xi_element(gd)
        assert include_rigid(gd, E("j", Xi=1)) == xi
        elem = include_rigid(gd, E("j", L10=3, Xi=-2))
        assert membership_J(gd, elem) == (3, -2)
        assert include_rigid(gd, E("barj", Xi=1, d0=1)) == PicElement("barjac", xi.coeffs) + E("barjac", d0=1)


# -- presentations -------------------------------------------------------------------------


def test_presentation_examples():
    p = presentation(GD(3, 2), "barjac")
    assert p.rank == 6 and p.basis == ("L10", "L01", "L11", "d0", "d1_1", "d1_2")
    p = presentation(GD(4, 3), "barj")
    assert p.rank == 6 and p.basis == ("L10", "Xi", "d0", "d1_1", "d1_2", "dg2")
    assert presentation(GD(7, 4), "j").rank == 2
    assert presentation(GD(3, 2), "barj").report["res_image_generator"] == 4
    with pytest.raises(DomainError):
        presentation(GD(3, 2), "J")


# -- topology ------------------------------------------------------------------------------


def test_topo_examples():
    t = topo_class(GD(3, 2), E("jac", L10=1))
    assert (t.lam, t.zeta, t.kappa) == (1, 0, 0)
    t = topo_class(GD(3, 2), E("jac", L11=1))
    assert (t.lam, t.zeta, t.kappa) == (0, -1, 0)
    t = topo_class(GD(3, 2), xi_element(GD(3, 2)))
    assert (t.lam, t.zeta, t.kappa) == (1, 1, 1) and t.integral
    assert eta_decomposition(GD(3, 2), xi_element(GD(3, 2))) == (1, 1)
    assert eta_decomposition(GD(4, 1), E("jac", L01=1)) is None
    with pytest.raises(DomainError):
        topo_class(GD(3, 2), E("j", Xi=1))


def test_eta_against_kappa_formula(full_grid):
    """c1(Xi) - p*lambda agrees with eta written over zeta and kappa."""
    for gd in full_grid:
        xi = xi_element(gd)
        p = xi["L01"]
        t = topo_class(gd, xi)
        eta = eta_topo(gd)
        assert (t.lam - p, t.zeta, t.kappa) == (eta.lam, eta.zeta, eta.kappa)
        lam, coef = eta_decomposition(gd, xi)
        assert (lam, coef) == (p, 1)


# -- theta ---------------------------------------------------------------------------------


def test_theta_examples():
    r = theta_relation(GD(3, 0))
    assert (r.k, r.e, r.exponent, r.verified) == (2, -1, 1, True)
    r = theta_relation(GD(4, 1))
    assert (r.k, r.e, r.exponent, r.verified) == (3, -1, 3, True)
    r = theta_relation(GD(3, 2))
    assert (r.k, r.e, r.exponent) == (1, 0, 0)


def test_theta_symbolic():
    k, e, n, m = sympy.symbols("k e n m")

    def D(n, m):
        return sympy.Matrix([(6 * n**2 - 6 * k * n + k**2) / 12, (2 * m * n - k * m) / 2, m**2 / 2])

    diff = (k + e) * D(0, 1) - e * D(k, 1) - k * D(-e, 1)
    assert sympy.simplify(diff - sympy.Matrix([-k * (k + e) * e / 2, 0, 0])) == sympy.zeros(3, 1)


def test_spin_grr_matches_pairing_formula():
    for k in range(1, 6):
        c = spin_grr(k, 2, 3)
        assert c.coeffs == (Fraction(24 - 12 * k + k * k, 12), Fraction(12 - 3 * k, 2), Fraction(9, 2))


def test_invariants_consistent_with_theta(full_grid):
    for gd in full_grid:
        inv = invariants(gd)
        r = theta_relation(gd)
        assert (r.k, r.e) == (inv.k, inv.e)
        assert r.exponent == -inv.k * (inv.k + inv.e) * inv.e // 2


def test_grid_helper():
    assert len(grid(3, 3)) == 4


def test_table_cache_under_threads():
    from concurrent.futures import ThreadPoolExecutor
    from univjac import picard

    picard._TABLES.clear()
    with ThreadPoolExecutor(max_workers=8) as pool:
        tables = list(pool.map(lambda _: boundary_table(GD(9, 4)), range(64)))
    assert all(t is tables[0] for t in tables)
