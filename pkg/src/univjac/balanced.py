"""Balanced multidegrees on quasistable curves.

A multidegree is a tuple of integers aligned with ``graph.ids``.  All bounds
are exact ``Fraction`` values; half-integral bounds are what separates the
properly and strictly balanced conditions, so no floats appear here.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import ceil, floor

from .arith import GD, divides, invariants
from .dualgraph import Stability, classify, is_quasistable, subcurve_stats, subcurves
from .errors import DomainError

__all__ = [
    "BalanceBounds",
    "basic_bounds",
    "as_multidegree",
    "balance_witness",
    "is_properly_balanced",
    "is_strictly_balanced",
    "enumerate_balanced",
    "is_d_special",
    "vine_is_d_special",
    "has_properly_not_strictly_balanced",
]


@dataclass(frozen=True)
class BalanceBounds:
    mZ: Fraction
    MZ: Fraction

    def contains(self, value):
        return self.mZ <= value <= self.MZ


def _require_genus(graph):
    g = graph.genus
    if g < 2:
        raise DomainError(f"balanced multidegrees need genus >= 2, graph has genus {g}")
    return g


def basic_bounds(graph, Z, d):
    """Lower and upper bounds of the basic inequality for the subcurve ``Z``."""
    g = _require_genus(graph)
    st = subcurve_stats(graph, Z)
    centre = Fraction(d * st.wZ, 2 * g - 2)
    half = Fraction(st.kZ, 2)
    return BalanceBounds(centre - half, centre + half)


def as_multidegree(graph, md):
    """Coerce a mapping or sequence into a tuple aligned with ``graph.ids``."""
    if isinstance(md, dict):
        missing = set(graph.ids).difference(md)
        if missing or len(md) != len(graph):
            raise DomainError("multidegree keys must be exactly the vertex ids")
        return tuple(int(md[v]) for v in graph.ids)
    md = tuple(int(x) for x in md)
    if len(md) != len(graph):
        raise DomainError(f"multidegree has {len(md)} entries for {len(graph)} vertices")
    return md


class _System:
    """The basic inequalities of ``graph`` in degree ``d``, precomputed once."""

    def __init__(self, graph, d, mode):
        g = _require_genus(graph)
        self.graph = graph
        self.d = d
        exc = set(graph.exceptional_vertices())
        self.exceptional = tuple(graph.index(v) for v in graph.ids if v in exc)
        self.rows = []
        for Z in subcurves(graph, mode):
            st = subcurve_stats(graph, Z)
            centre = Fraction(d * st.wZ, 2 * g - 2)
            half = Fraction(st.kZ, 2)
            zset = set(Z)
            crossing_exceptional = all(
                a in exc or b in exc
                for a, b in graph.edges
                if (a in zset) != (b in zset)
            )
            idx = tuple(graph.index(v) for v in Z)
            self.rows.append((Z, idx, centre - half, centre + half, crossing_exceptional))

    def witness(self, md):
        for i in self.exceptional:
            if md[i] != 1:
                return (self.graph.ids[i],)
        for Z, idx, lo, hi, _ in self.rows:
            s = sum(md[i] for i in idx)
            if not lo <= s <= hi:
                return Z
        return None

    def strict(self, md):
        for _, idx, lo, _, crossing_exc in self.rows:
            if not crossing_exc and sum(md[i] for i in idx) == lo:
                return False
        return True


def _require_quasistable(graph):
    if not is_quasistable(graph):
        raise DomainError(f"graph is {classify(graph).value}, expected quasistable")


def balance_witness(graph, md, mode="connected"):
    """First subcurve violating the properly balanced conditions, or ``None``.

    A violated exceptional-degree condition is reported as the one-vertex
    subcurve of that exceptional component.  A wrong total degree shows up
    as a violated bound on whichever side of a cut carries the excess.
    """
    _require_quasistable(graph)
    md = as_multidegree(graph, md)
    return _System(graph, sum(md), mode).witness(md)


def is_properly_balanced(graph, md, mode="connected"):
    return balance_witness(graph, md, mode) is None


def is_strictly_balanced(graph, md):
    _require_quasistable(graph)
    md = as_multidegree(graph, md)
    system = _System(graph, sum(md), "all")
    if system.witness(md) is not None:
        raise DomainError("multidegree is not properly balanced")
    return system.strict(md)


def enumerate_balanced(graph, d, strict=False, mode="connected"):
    """All properly (or strictly) balanced multidegrees of total degree ``d``, sorted."""
    _require_quasistable(graph)
    g = _require_genus(graph)
    system = _System(graph, d, mode)
    strict_system = _System(graph, d, "all") if strict else None
    ranges = []
    for v in graph.ids:
        if graph.is_exceptional(v):
            ranges.append(range(1, 2))
            continue
        st = subcurve_stats(graph, (v,)) if len(graph) > 1 else None
        if st is None:
            ranges.append(range(d, d + 1))
            continue
        centre = Fraction(d * st.wZ, 2 * g - 2)
        half = Fraction(st.kZ, 2)
        ranges.append(range(ceil(centre - half), floor(centre + half) + 1))
    last = ranges[-1]
    out = []
    for head in product(*ranges[:-1]):
        tail = d - sum(head)
        if tail not in last:
            continue
        md = head + (tail,)
        if system.witness(md) is not None:
            continue
        if strict and not strict_system.strict(md):
            continue
        out.append(md)
    return out


def has_properly_not_strictly_balanced(graph, d):
    """Whether some properly balanced multidegree on ``graph`` fails to be strict.

    Only ``graph`` itself is examined, not its quasistable models.
    """
    proper = enumerate_balanced(graph, d, strict=False, mode="all")
    system = _System(graph, d, "all")
    return any(not system.strict(md) for md in proper)


def _vine_type(graph):
    if len(graph) != 2 or any(a == b for a, b in graph.edges) or not graph.edges:
        raise DomainError("graph is not a vine curve (two components, no self-nodes)")
    if classify(graph) is not Stability.STABLE:
        raise DomainError("vine curve is not stable")
    return graph.genus_of(graph.ids[0]), len(graph.edges)


def vine_is_d_special(g, i, k, d):
    """Divisibility criterion for a stable vine of type ``(i, g-i-k+1)`` with ``k`` nodes."""
    if k < 1 or i < 0 or g - i - k + 1 < 0:
        raise DomainError(f"no vine curve of genus {g} with i={i}, k={k}")
    kdg = invariants(GD(g, d)).k
    return divides(kdg, 2 * i - 2 + k)


def is_d_special(graph, d, fast=False):
    """Speciality test on a stable graph.

    ``fast=True`` applies the divisibility criterion and requires a vine;
    otherwise the graph is searched for a properly but not strictly
    balanced multidegree.
    """
    if fast:
        i, k = _vine_type(graph)
        return vine_is_d_special(graph.genus, i, k, d)
    if classify(graph) is not Stability.STABLE:
        raise DomainError("d-speciality is tested on stable graphs")
    return has_properly_not_strictly_balanced(graph, d)
