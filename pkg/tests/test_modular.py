import pytest

from lapmax.corpus import complete, path
from lapmax.errors import DisconnectedGraphError, InputError
from lapmax.graph import Graph, Partition
from lapmax.modular import (
    canonical_partition,
    copartition_subgraph,
    enumerate_modules_bruteforce,
    is_module,
    maximal_proper_modules,
    maximal_proper_modules_bruteforce,
    module_report,
    restrict_to_block,
    smallest_module_containing,
)


def test_is_module(p4):
    assert all(is_module(p4, {v}) for v in p4.vertices)
    assert is_module(p4, range(1, 5))
    assert not is_module(p4, {2, 3})
    with pytest.raises(InputError):
        is_module(p4, set())


def test_bruteforce_enumeration(k2, p3, p4):
    as_sets = lambda ms: {frozenset(m) for m in ms}  # noqa: E731
    assert as_sets(enumerate_modules_bruteforce(k2)) == as_sets([{1}, {2}, {1, 2}])
    assert as_sets(enumerate_modules_bruteforce(p4)) == as_sets([{1}, {2}, {3}, {4}, {1, 2, 3, 4}])
    assert as_sets(enumerate_modules_bruteforce(p3)) == as_sets([{1}, {2}, {3}, {1, 3}, {1, 2, 3}])


def test_module_report(p3):
    r = module_report(p3, {1, 3})
    assert r.is_proper and r.is_nontrivial and not r.is_connected
    with pytest.raises(InputError):
        module_report(Graph(4, [(1, 2), (2, 3), (3, 4)]), {2, 3})


def test_smallest_module_containing(p4):
    assert smallest_module_containing(p4, {2, 3}) == frozenset({1, 2, 3, 4})
    assert smallest_module_containing(path(3), {1, 3}) == frozenset({1, 3})


def test_canonical_partition_examples(p3, k3, p4):
    d = canonical_partition(p3)
    assert not d.complement_connected
    assert d.partition == Partition(3, [[1, 3], [2]])
    assert d.copartition == p3
    d = canonical_partition(k3)
    assert d.partition == Partition(3, [[1], [2], [3]]) and d.copartition == k3
    d = canonical_partition(p4)
    assert d.complement_connected
    assert d.partition == Partition(4, [[1], [2], [3], [4]]) and d.copartition == p4


def test_canonical_partition_on_a_modular_graph():
    # P4 with vertex 1 blown up into an edge {1, 5}.
    g = Graph(5, [(1, 2), (2, 3), (3, 4), (1, 5), (5, 2)])
    d = canonical_partition(g)
    assert d.complement_connected
    assert d.partition == Partition(5, [[1, 5], [2], [3], [4]])
    assert not d.copartition.has_edge(1, 5)
    assert maximal_proper_modules(g) == Partition(5, maximal_proper_modules_bruteforce(g))


def test_canonical_partition_rejects_bad_input():
    with pytest.raises(DisconnectedGraphError):
        canonical_partition(Graph(3, [(1, 2)]))
    with pytest.raises(InputError):
        canonical_partition(Graph(1))


def test_copartition_subgraph(p3, p4):
    assert copartition_subgraph(p3, Partition(3, [[1, 2, 3]])) == Graph(3)
    assert copartition_subgraph(complete(3), Partition(3, [[1], [2], [3]])) == complete(3)
    assert copartition_subgraph(p4, Partition(4, [[1, 2], [3, 4]])) == Graph(4, [(2, 3)])


def test_restrict_to_block(p3, p4):
    assert restrict_to_block(p3, {1, 3}) == Graph(3)
    assert restrict_to_block(p4, {1, 2}) == Graph(4, [(1, 2)])
    assert restrict_to_block(p4, range(1, 5)) == p4
