"""Grid sweeps that re-check the structural results end to end.

Each check returns a :class:`CheckResult`; ``run_all`` runs them in order.
The checks are deterministic: the random graphs of the balance check come
from a seeded generator.
"""

import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .arith import GD, invariants
from .balanced import enumerate_balanced, is_d_special, is_properly_balanced, vine_is_d_special
from .compare import compare_report, pic_J0
from .dualgraph import DualGraph, Stability, classify, vine
from .errors import DomainError, UnivJacError
from .families import all_families, independence_matrix
from .picard import (
    PicElement, binom2, boundary_case, boundary_table, chi_d, eta_decomposition,
    grr_degree_one, kappa_to_lambda, membership_J, presentation, reduce_lambda,
    res_weight, theta_relation, topo_class, total_boundary, xi_element,
)

__all__ = ["CheckResult", "Grid", "parse_grid", "thread_count", "CHECKS", "run_all"]


@dataclass(frozen=True)
class Grid:
    genera: tuple
    degrees: tuple = None  # None: every d in [0, 2g-3]

    def points(self):
        for g in self.genera:
            ds = range(0, 2 * g - 2) if self.degrees is None else self.degrees
            for d in ds:
                yield GD(g, d)


DEFAULT_GRID = Grid(tuple(range(3, 11)))


def _parse_range(text):
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            return int(lo), int(lo)
        return int(lo), (None if hi == "max" else int(hi))
    except ValueError:
        raise DomainError(f"bad range {text!r}") from None


def parse_grid(items):
    """Parse ``["g=3..8", "d=0..max"]`` into a :class:`Grid`."""
    genera, degrees = None, None
    for item in items:
        key, eq, value = item.partition("=")
        if not eq or key not in ("g", "d"):
            raise DomainError(f"grid entries look like g=3..8 or d=0..max, got {item!r}")
        lo, hi = _parse_range(value)
        if key == "g":
            if hi is None:
                raise DomainError("the genus range needs an upper bound")
            genera = tuple(range(lo, hi + 1))
        else:
            degrees = None if (lo == 0 and hi is None) else (lo, hi)
    if genera is None:
        genera = DEFAULT_GRID.genera
    if not genera or min(genera) < 3:
        raise DomainError("genus range must be nonempty with g >= 3")
    if degrees is not None:
        lo, hi = degrees
        if hi is None:
            raise DomainError("a degree range with 'max' must start at 0")
        if hi < lo:
            raise DomainError("empty degree range")
        degrees = tuple(range(lo, hi + 1))
    return Grid(genera, degrees)


def thread_count():
    raw = os.environ.get("UNIVJAC_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return min(8, os.cpu_count() or 1)


def _sweep(fn, grid, threads):
    """Apply ``fn`` to each grid point; returns the failures in grid order."""
    points = list(grid.points())
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(fn, points))
    else:
        results = [fn(p) for p in points]
    return [(p, msg) for p, msg in zip(points, results) if msg]


@dataclass
class CheckResult:
    number: int
    title: str
    passed: bool
    detail: list = field(default_factory=list)

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        extra = f" ({self.detail[0]})" if self.detail else ""
        return f"[{status}] {self.number:2d} {self.title}{extra}"


def _result(number, title, failures):
    detail = [f"g={p.g} d={p.d}: {msg}" if isinstance(p, GD) else f"{p}: {msg}"
              for p, msg in failures]
    return CheckResult(number, title, not failures, detail)


# -- individual checks ---------------------------------------------------------


def _boundary_point(gd):
    g, d = gd.g, gd.d
    k = invariants(gd).k
    expected = ["d0"]
    for i in range(1, g // 2 + 1):
        if 2 * i == g and (g - 1) % k == 0:
            expected.append("dg2")
        elif (2 * i - 1) % k == 0:
            expected += [f"d{i}_1", f"d{i}_2"]
        else:
            expected.append(f"d{i}")
    table = boundary_table(gd)
    if [row.label for row in table] != expected:
        return f"labels {[row.label for row in table]} != {expected}"
    for row in table:
        if sum(row.multidegree) != d:
            return f"{row.label} multidegree does not sum to d"
        if not is_properly_balanced(row.generic_graph(), row.multidegree):
            return f"{row.label} multidegree {row.multidegree} is not balanced"
    return None


def check_boundary(grid, threads=1):
    failures = _sweep(_boundary_point, grid, threads)
    goldens = {(3, 2): 3, (3, 1): 2, (4, 3): 4, (4, 0): 3}
    for (g, d), count in goldens.items():
        got = len(boundary_table(GD(g, d)))
        if got != count:
            failures.append((GD(g, d), f"{got} divisors, expected {count}"))
    return _result(1, "boundary tables", failures)


def random_quasistable(rng, max_vertices=6, max_edges=9):
    """A random connected quasistable graph of genus at least 2, by rejection."""
    while True:
        n = rng.randint(1, max_vertices)
        verts = [(f"v{i}", rng.choice((0, 0, 0, 1, 2))) for i in range(n)]
        edges = [(f"v{i}", f"v{rng.randrange(i)}") for i in range(1, n)]
        for _ in range(rng.randint(0, max_edges - len(edges))):
            a, b = rng.randrange(n), rng.randrange(n)
            edges.append((f"v{a}", f"v{b}"))
        graph = DualGraph(verts, edges)
        if graph.genus >= 2 and classify(graph) in (Stability.STABLE, Stability.QUASISTABLE):
            return graph


def check_enumeration(samples=200, seed=20240601):
    rng = random.Random(seed)
    failures = []
    for n in range(samples):
        graph = random_quasistable(rng)
        d = rng.randint(-10, 10)
        fast = enumerate_balanced(graph, d, mode="connected")
        slow = enumerate_balanced(graph, d, mode="all")
        strict = enumerate_balanced(graph, d, strict=True)
        if fast != slow:
            failures.append((f"sample {n}", f"{graph!r} d={d}: {len(fast)} vs {len(slow)}"))
        elif not set(strict) <= set(slow):
            failures.append((f"sample {n}", "strict multidegree not properly balanced"))
    return _result(2, "balanced enumeration against all subcurves", failures)


def stable_vine_types(g):
    """``(i, k)`` for every stable vine of genus ``g`` with components of genera ``i`` and ``g-i-k+1``."""
    out = []
    for k in range(1, g + 2):
        for i in range(0, g - k + 2):
            j = g - i - k + 1
            if i > j:
                continue
            if (i == 0 and k < 3) or (j == 0 and k < 3):
                continue
            out.append((i, k))
    return out


def check_dspecial(genera=range(3, 9)):
    failures = []
    for g in genera:
        for d in range(0, 2 * g - 2):
            for i, k in stable_vine_types(g):
                graph = vine(i, g - i - k + 1, k)
                fast = vine_is_d_special(g, i, k, d)
                slow = is_d_special(graph, d)
                if fast != slow:
                    failures.append((GD(g, d), f"vine ({i},{k}): fast={fast} brute={slow}"))
    return _result(3, "d-special vines", failures)


def _taut_point(gd):
    for n, m, name in ((1, 0, "L10"), (0, 1, "L01"), (1, 1, "L11")):
        if reduce_lambda(gd, n, m) != PicElement("barjac", {name: 1}):
            return f"reduce_lambda({n},{m}) is not {name}"
    for n in range(-3, 6):
        mumford = PicElement("barjac", {"L10": 6 * n * n - 6 * n + 1}) + (-binom2(n)) * total_boundary(gd)
        if reduce_lambda(gd, n, 0) != mumford:
            return f"reduce_lambda({n},0) differs from the Mumford relation"
    for n in range(-5, 6):
        for m in range(-5, 6):
            if kappa_to_lambda(gd, grr_degree_one(n, m)) != reduce_lambda(gd, n, m):
                return f"GRR substitution differs at ({n},{m})"
    return None


def check_tautological(grid, threads=1):
    return _result(4, "tautological reduction", _sweep(_taut_point, grid, threads))


def _weight_point(gd):
    g, d = gd.g, gd.d
    for n in range(-5, 6):
        for m in range(-5, 6):
            want = m * (n * (2 * g - 2) + m * d + 1 - g)
            if res_weight(gd, reduce_lambda(gd, n, m)) != want:
                return f"res(Lambda({n},{m})) != {want}"
    w01 = res_weight(gd, PicElement("jac", {"L01": 1}))
    w11 = res_weight(gd, PicElement("jac", {"L11": 1}))
    if gcd(w01, w11) != invariants(gd).gerbe_order or gcd(w01, w11) != gcd(d + 1 - g, 2 * g - 2):
        return "gcd of weights is not the gerbe order"
    return None


def check_weights(grid, threads=1):
    return _result(5, "weight consistency", _sweep(_weight_point, grid, threads))


def _xi_point(gd):
    xi = xi_element(gd)
    if res_weight(gd, xi):
        return "res(Xi) != 0"
    if chi_d(gd, PicElement("j", {"Xi": 1})) != invariants(gd).k:
        return "chi(Xi) != k"
    if chi_d(gd, PicElement("j", {"L10": 1})) != 0:
        return "chi(L10) != 0"
    if membership_J(gd, xi) != (0, 1):
        return "Xi is not (0, 1) in J"
    if gd.d == gd.g - 1 and xi != PicElement("jac", {"L01": 1}):
        return "Xi != L01 at d = g-1"
    return None


def check_xi(grid, threads=1):
    return _result(6, "Xi and chi", _sweep(_xi_point, grid, threads))


def _theta_point(gd):
    rel = theta_relation(gd)
    if not rel.verified or not isinstance(rel.exponent, int):
        return f"pairing computation gave {rel.difference.coeffs}"
    return None


def check_theta(grid, threads=1):
    failures = _sweep(_theta_point, grid, threads)
    for (g, d), want in (((3, 0), 1), ((4, 1), 3)):
        got = theta_relation(GD(g, d)).exponent
        if got != want:
            failures.append((GD(g, d), f"exponent {got}, expected {want}"))
    return _result(7, "theta relation", failures)


def _family_point(gd):
    for name, rep in all_families(gd):
        if not isinstance(rep, str) and not rep.is_balanced():
            return f"{name} multidegree {rep.multidegree} is not balanced"
        if not isinstance(rep, str) and rep.graph.genus != gd.g:
            return f"{name} fibre has genus {rep.graph.genus}"
    try:
        independence_matrix(gd)
    except UnivJacError as exc:
        return str(exc)
    return None


def check_families(grid, threads=1):
    return _result(8, "families and independence", _sweep(_family_point, grid, threads))


def _presentation_point(gd):
    B = len(boundary_table(gd))
    ranks = tuple(presentation(gd, s).rank for s in ("jac", "j", "barjac", "barj"))
    if ranks != (3, 2, 3 + B, 2 + B):
        return f"ranks {ranks}"
    rep = compare_report(gd)
    if not rep.consistent:
        return "alpha_d disagrees with the boundary pull-back"
    for col in rep.columns:
        want = {"A": (0, ()), "B": (0, ()), "C": (1, ()), "D": (0, (2,))}[boundary_case(gd, col.i)]
        if (col.free_rank, col.torsion) != want:
            return f"cokernel at i={col.i} is {col.describe()}"
    pic = pic_J0(gd)
    want = ((("L10", 9),), ("Xi",)) if gd.g == 3 else ((), ("L10", "Xi"))
    if (pic.torsion, pic.free) != want:
        return f"Pic(J0) is {pic.describe()}"
    return None


def check_presentations(grid, threads=1):
    return _result(9, "presentations and comparison", _sweep(_presentation_point, grid, threads))


def _topo_point(gd):
    basics = {"L10": (1, 0, 0), "L11": (0, -1, 0), "L01": (1, 1, 1)}
    for name, want in basics.items():
        t = topo_class(gd, PicElement("jac", {name: 1}))
        if (t.lam, t.zeta, t.kappa) != tuple(map(Fraction, want)):
            return f"topological class of {name}"
    g, d = gd.g, gd.d
    G = gcd(d + g - 1, d - g + 1)
    lam, eta = eta_decomposition(gd, xi_element(gd))
    if (lam, eta) != ((d + g - 1) // G, 1):
        return f"eta decomposition of Xi is {(lam, eta)}"
    return None


def check_topology(grid, threads=1):
    return _result(10, "topological basis", _sweep(_topo_point, grid, threads))


CHECKS = (
    lambda grid, t: check_boundary(grid, t),
    lambda grid, t: check_enumeration(),
    lambda grid, t: check_dspecial([g for g in grid.genera if g <= 8]),
    check_tautological,
    check_weights,
    check_xi,
    check_theta,
    check_families,
    check_presentations,
    check_topology,
)


def run_all(grid=DEFAULT_GRID, threads=None):
    threads = thread_count() if threads is None else threads
    return [check(grid, threads) for check in CHECKS]
