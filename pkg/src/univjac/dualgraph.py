"""Dual graphs of nodal curves.

A dual graph has one vertex per irreducible component, weighted by its
geometric genus, and one edge per node.  Edges form a multiset and loops
(self-nodes) are allowed.  A loop contributes two to the valence of its
vertex and one to the edge count.
"""

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
import json

from .errors import DomainError

__all__ = [
    "DualGraph",
    "SubcurveStats",
    "Stability",
    "classify",
    "subcurve_stats",
    "subcurves",
    "stabilize",
    "vine",
]


class Stability(str, Enum):
    STABLE = "stable"
    QUASISTABLE = "quasistable"
    SEMISTABLE_NOT_QUASISTABLE = "semistable-not-quasistable"
    UNSTABLE = "unstable"


@dataclass(frozen=True)
class SubcurveStats:
    wZ: int
    kZ: int


class DualGraph:
    """Immutable genus-weighted multigraph.

    ``vertices`` is a sequence of ``(id, genus)`` pairs; ``edges`` a sequence
    of vertex-id pairs.  Vertex order is preserved and used to index
    multidegrees.
    """

    __slots__ = ("_ids", "_genus", "_edges", "_index")

    def __init__(self, vertices, edges=()):
        ids = []
        genus = {}
        for vid, gv in vertices:
            vid = str(vid)
            if vid in genus:
                raise DomainError(f"duplicate vertex id {vid!r}")
            if not isinstance(gv, int) or gv < 0:
                raise DomainError(f"genus of {vid!r} must be a nonnegative integer")
            ids.append(vid)
            genus[vid] = gv
        if not ids:
            raise DomainError("a dual graph needs at least one vertex")
        index = {v: n for n, v in enumerate(ids)}
        canon = []
        for e in edges:
            if len(e) != 2:
                raise DomainError(f"edge {e!r} must join two vertices")
            a, b = str(e[0]), str(e[1])
            if a not in genus or b not in genus:
                raise DomainError(f"edge {e!r} uses an unknown vertex")
            canon.append((a, b) if index[a] <= index[b] else (b, a))
        canon.sort(key=lambda p: (index[p[0]], index[p[1]]))
        self._ids = tuple(ids)
        self._genus = genus
        self._edges = tuple(canon)
        self._index = index

    # -- basic accessors -------------------------------------------------

    @property
    def ids(self):
        return self._ids

    @property
    def vertices(self):
        return tuple((v, self._genus[v]) for v in self._ids)

    @property
    def edges(self):
        return self._edges

    def genus_of(self, v):
        return self._genus[v]

    def index(self, v):
        return self._index[v]

    def __len__(self):
        return len(self._ids)

    def valence(self, v):
        return sum((a == v) + (b == v) for a, b in self._edges)

    def neighbours(self, v):
        out = []
        for a, b in self._edges:
            if a == v:
                out.append(b)
            elif b == v:
                out.append(a)
        return out

    @property
    def genus(self):
        """Arithmetic genus: sum of vertex genera plus first Betti number."""
        return sum(self._genus.values()) + len(self._edges) - len(self._ids) + 1

    def is_connected(self, subset=None):
        verts = set(self._ids if subset is None else subset)
        if not verts:
            return False
        start = next(iter(verts))
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in self.neighbours(v):
                if w in verts and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen == verts

    def is_exceptional(self, v):
        """Genus 0, valence exactly 2, and no loop at ``v``."""
        if self._genus[v] != 0 or self.valence(v) != 2:
            return False
        return all(not (a == v and b == v) for a, b in self._edges)

    def exceptional_vertices(self):
        return tuple(v for v in self._ids if self.is_exceptional(v))

    # -- value semantics ---------------------------------------------------

    def _key(self):
        return (self.vertices, self._edges)

    def __eq__(self, other):
        if not isinstance(other, DualGraph):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"DualGraph(vertices={list(self.vertices)!r}, edges={list(self._edges)!r})"

    # -- JSON ------------------------------------------------------------------

    def to_dict(self):
        return {
            "vertices": [{"id": v, "genus": gv} for v, gv in self.vertices],
            "edges": [list(e) for e in self._edges],
        }

    @classmethod
    def from_dict(cls, data):
        try:
            verts = [(item["id"], item["genus"]) for item in data["vertices"]]
            edges = [tuple(e) for e in data.get("edges", [])]
        except (KeyError, TypeError) as exc:
            raise DomainError(f"malformed graph description: {exc}") from None
        return cls(verts, edges)

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DomainError(f"graph file is not valid JSON: {exc}") from None
        return cls.from_dict(data)


def vine(g1, g2, k):
    """Two smooth components of genera ``g1``, ``g2`` meeting in ``k`` nodes."""
    if k < 1:
        raise DomainError("a vine curve needs at least one node")
    return DualGraph([("C1", g1), ("C2", g2)], [("C1", "C2")] * k)


def classify(graph):
    if not graph.is_connected():
        raise DomainError("dual graph is disconnected")
    low = [v for v in graph.ids if graph.genus_of(v) == 0 and graph.valence(v) < 3]
    if not low:
        return Stability.STABLE
    for v in low:
        # valence-2 genus-0 vertices carrying a loop only occur when |V| = 1
        if graph.valence(v) < 2 or not graph.is_exceptional(v):
            return Stability.UNSTABLE
    exc = set(low)
    for a, b in graph.edges:
        if a in exc and b in exc:
            return Stability.SEMISTABLE_NOT_QUASISTABLE
    return Stability.QUASISTABLE


def is_quasistable(graph):
    return classify(graph) in (Stability.STABLE, Stability.QUASISTABLE)


def _check_subcurve(graph, Z):
    Z = frozenset(Z)
    if not Z or len(Z) >= len(graph):
        raise DomainError("a subcurve must be a nonempty proper vertex subset")
    unknown = Z.difference(graph.ids)
    if unknown:
        raise DomainError(f"unknown vertices {sorted(unknown)!r}")
    return Z


def subcurve_stats(graph, Z):
    """Canonical degree ``wZ`` and number ``kZ`` of nodes joining ``Z`` to its complement."""
    Z = _check_subcurve(graph, Z)
    w = sum(2 * graph.genus_of(v) - 2 + graph.valence(v) for v in Z)
    k = sum((a in Z) != (b in Z) for a, b in graph.edges)
    return SubcurveStats(wZ=w, kZ=k)


def subcurves(graph, mode="all"):
    """Yield nonempty proper subcurves as sorted tuples of vertex ids.

    ``mode="connected"`` (alias ``"connected-both-sides"``) keeps only the
    subcurves ``Z`` for which both ``Z`` and its complement are connected.
    """
    if mode not in ("all", "connected", "connected-both-sides"):
        raise DomainError(f"unknown subcurve mode {mode!r}")
    ids = sorted(graph.ids)
    n = len(ids)
    subsets = []
    for r in range(1, n):
        subsets.extend(combinations(ids, r))
    subsets.sort()
    for Z in subsets:
        if mode != "all":
            rest = [v for v in ids if v not in Z]
            if not (graph.is_connected(Z) and graph.is_connected(rest)):
                continue
        yield Z


def stabilize(graph):
    """Contract every exceptional component of a quasistable graph."""
    if not is_quasistable(graph):
        raise DomainError("stabilization is only defined here for quasistable graphs")
    exc = set(graph.exceptional_vertices())
    if not exc:
        return graph
    kept = [(v, gv) for v, gv in graph.vertices if v not in exc]
    edges = [e for e in graph.edges if e[0] not in exc and e[1] not in exc]
    for v in graph.ids:
        if v in exc:
            a, b = graph.neighbours(v)
            edges.append((a, b))
    return DualGraph(kept, edges)


def edge_multiplicities(graph):
    return Counter(graph.edges)
