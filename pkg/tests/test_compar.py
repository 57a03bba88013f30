from collections import Counter

import pytest

from lapmax.compar import (
    count_via_decomposition,
    enumerate_transitive_orientations,
    recognize_bruteforce,
    recognize_cone,
    recognize_spectral,
    sample_nondegenerate,
    spectral_orient,
)
from lapmax.corpus import RandomPosetSpec, complete, complete_multipartite, cycle, random_poset_graph
from lapmax.errors import ConsistencyError, DisconnectedGraphError, NotComparabilityError, SizeLimitError
from lapmax.graph import Graph
from lapmax.orientation import is_transitive


def test_recognize_bruteforce(p4, c5, k3):
    r = recognize_bruteforce(p4)
    assert r.is_comparability and is_transitive(p4, r.certificate)
    assert not recognize_bruteforce(c5).is_comparability
    assert recognize_bruteforce(k3).is_comparability


def test_recognize_bruteforce_size_limit():
    with pytest.raises(SizeLimitError):
        recognize_bruteforce(complete(7))


def test_enumeration_counts(k3, p4, c5, p3):
    assert enumerate_transitive_orientations(k3).count == 6
    assert enumerate_transitive_orientations(p4).count == 2
    assert enumerate_transitive_orientations(c5).count == 0
    assert enumerate_transitive_orientations(p3).count == 2


def test_p4_orientations_are_reverses(p4):
    a, b = enumerate_transitive_orientations(p4).orientations
    assert b == a.reversed()
    assert {(2, 1), (2, 3), (4, 3)} in ({*a.arcs}, {*b.arcs})


@pytest.mark.parametrize(
    "g, count",
    [
        (complete(3), 6),
        (Graph(3, [(1, 2), (2, 3)]), 2),
        (Graph(4, [(1, 2), (2, 3), (3, 4)]), 2),
        (complete_multipartite([2, 2]), 2),
        (complete_multipartite([1, 1, 2]), 6),
        (complete(4), 24),
    ],
)
def test_count_via_decomposition_matches_enumeration(g, count):
    assert enumerate_transitive_orientations(g).count == count
    assert count_via_decomposition(g) == count


def test_count_via_decomposition_rejects_non_comparability(c5):
    with pytest.raises(NotComparabilityError):
        count_via_decomposition(c5)


def test_spectral_orient_small(p3, k2):
    seen = {frozenset(spectral_orient(p3, s).arcs) for s in range(40)}
    assert seen == {frozenset({(2, 1), (2, 3)}), frozenset({(1, 2), (3, 2)})}
    assert {spectral_orient(k2, s).arcs for s in range(40)} == {((1, 2),), ((2, 1),)}


def test_spectral_orient_covers_k3(k3):
    counts = Counter(spectral_orient(k3, s) for s in range(2000))
    assert len(counts) == 6


def test_spectral_orient_p4_split(p4):
    counts = Counter(spectral_orient(p4, s) for s in range(2000))
    assert len(counts) == 2
    assert all(abs(c / 2000 - 0.5) < 0.05 for c in counts.values())


def test_spectral_orient_is_deterministic(p4):
    assert spectral_orient(p4, 11) == spectral_orient(p4, 11)


def test_spectral_orient_rejects_bad_input(c5):
    with pytest.raises(ConsistencyError):
        spectral_orient(c5, 0)
    with pytest.raises(DisconnectedGraphError):
        spectral_orient(Graph(3, [(1, 2)]), 0)


def test_sample_nondegenerate_separates_copartition_edges(p4):
    x, attempts = sample_nondegenerate(p4, 3)
    assert attempts >= 1
    assert all(abs(x[i - 1] - x[j - 1]) > 1e-5 for i, j in p4.edge_list)


def test_recognize_spectral(p4, c5, k3):
    r = recognize_spectral(p4, trials=3)
    assert r.is_comparability and r.method == "spectral" and is_transitive(p4, r.certificate)
    r = recognize_spectral(c5, trials=3)
    assert not r.is_comparability and r.method == "bruteforce"
    assert recognize_spectral(k3).is_comparability


@pytest.mark.parametrize("seed", range(5))
def test_spectral_orient_on_random_posets(seed):
    g = random_poset_graph(RandomPosetSpec(7, 0.4, seed))
    o = spectral_orient(g, seed)
    assert o.is_full and is_transitive(g, o)


def test_recognize_cone_agrees(p4, c5, k3):
    assert recognize_cone(p4).is_comparability
    assert not recognize_cone(c5).is_comparability
    assert recognize_cone(k3).is_comparability
