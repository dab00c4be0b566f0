import random

import pytest
from hypothesis import given, settings, strategies as st

from univjac.dualgraph import (
    DualGraph, Stability, classify, stabilize, subcurve_stats, subcurves, vine,
)
from univjac.errors import DomainError
from univjac.verify import random_quasistable


def chain(*genera):
    ids = [f"v{i}" for i in range(len(genera))]
    return DualGraph(list(zip(ids, genera)), list(zip(ids, ids[1:])))


def test_genus_and_valence_with_loops():
    g = DualGraph([("A", 1), ("B", 0)], [("A", "A"), ("A", "B"), ("B", "A"), ("B", "B")])
    assert g.valence("A") == 4 and g.valence("B") == 4
    assert g.genus == 1 + 4 - 2 + 1
    assert len(g.edges) == 4


def test_edges_are_canonical():
    a = DualGraph([("A", 1), ("B", 2)], [("B", "A")])
    b = DualGraph([("A", 1), ("B", 2)], [("A", "B")])
    assert a == b and hash(a) == hash(b)


def test_json_roundtrip():
    g = DualGraph([("C", 0), ("R1", 0), ("R2", 0)],
                  [("R1", "R2"), ("C", "R1"), ("C", "R1"), ("C", "R2"), ("C", "R2")])
    assert DualGraph.from_json(g.to_json()) == g
    assert DualGraph.from_dict(g.to_dict()) == g


@pytest.mark.parametrize("bad", [
    {"vertices": []},
    {"vertices": [{"id": "A", "genus": -1}]},
    {"vertices": [{"id": "A", "genus": 1}, {"id": "A", "genus": 1}]},
    {"vertices": [{"id": "A", "genus": 1}], "edges": [["A", "B"]]},
    {"edges": []},
])
def test_bad_graphs(bad):
    with pytest.raises(DomainError):
        DualGraph.from_dict(bad)


def test_classify_examples():
    assert classify(DualGraph([("C", 3)])) is Stability.STABLE
    assert classify(vine(1, 2, 1)) is Stability.STABLE
    assert classify(chain(1, 0, 2)) is Stability.QUASISTABLE
    assert classify(chain(1, 0, 0, 2)) is Stability.SEMISTABLE_NOT_QUASISTABLE
    assert classify(chain(1, 0)) is Stability.UNSTABLE
    assert classify(DualGraph([("P", 0)], [("P", "P")])) is Stability.UNSTABLE
    with pytest.raises(DomainError):
        classify(DualGraph([("A", 1), ("B", 1)]))


def test_subcurve_stats_examples():
    s = subcurve_stats(vine(1, 1, 2), ["C1"])
    assert (s.wZ, s.kZ) == (2, 2)
    F = DualGraph([("C", 2), ("R1", 0), ("R2", 0)],
                  [("R1", "R2")] + [("C", "R1")] * 2 + [("C", "R2")] * 2)
    s = subcurve_stats(F, ["R1"])
    assert (s.wZ, s.kZ) == (1, 3)
    with pytest.raises(DomainError):
        subcurve_stats(F, [])
    with pytest.raises(DomainError):
        subcurve_stats(F, ["C", "R1", "R2"])


def test_subcurve_counts():
    assert list(subcurves(vine(1, 1, 1), "all")) == [("C1",), ("C2",)]
    path = chain(1, 1, 1, 1)
    conn = list(subcurves(path, "connected-both-sides"))
    assert len(conn) == 6
    assert list(subcurves(path, "connected")) == conn
    for n in range(1, 6):
        assert len(list(subcurves(chain(*[1] * n), "all"))) == 2 ** n - 2
    with pytest.raises(DomainError):
        list(subcurves(path, "some"))


def test_stabilize_examples():
    smooth = vine(2, 1, 1)
    assert stabilize(smooth) == smooth
    assert stabilize(chain(1, 0, 2)) == DualGraph([("v0", 1), ("v2", 2)], [("v0", "v2")])
    looped = DualGraph([("C", 2), ("E", 0)], [("C", "E"), ("C", "E")])
    out = stabilize(looped)
    assert out == DualGraph([("C", 2)], [("C", "C")])
    assert out.genus == looped.genus
    with pytest.raises(DomainError):
        stabilize(chain(1, 0, 0, 2))


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2 ** 32))
def test_random_graph_properties(seed):
    graph = random_quasistable(random.Random(seed))
    g = graph.genus
    assert sum(2 * gv - 2 + graph.valence(v) for v, gv in graph.vertices) == 2 * g - 2
    for Z in subcurves(graph, "all"):
        rest = [v for v in graph.ids if v not in Z]
        a, b = subcurve_stats(graph, Z), subcurve_stats(graph, rest)
        assert a.kZ == b.kZ and a.wZ + b.wZ == 2 * g - 2
    st_ = stabilize(graph)
    assert classify(st_) is Stability.STABLE
    assert st_.genus == g
    assert stabilize(st_) == st_
