"""Seeded random graph families used by the verification suites and ``gen``."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import DomainError, InputError
from .graph import Graph, complement

MAX_ATTEMPTS = 1000


@dataclass(frozen=True)
class RandomPosetSpec:
    n: int
    density: float
    seed: int

    def __post_init__(self):
        if self.n < 1:
            raise InputError("n must be at least 1")
        if not 0 < self.density < 1:
            raise InputError("density must lie strictly between 0 and 1")


def _rng(seed_or_rng):
    if isinstance(seed_or_rng, np.random.Generator):
        return seed_or_rng
    return np.random.default_rng(seed_or_rng)


def poset_comparability_graph(n: int, density: float, rng) -> Graph:
    """Comparability graph of the reachability order of a random DAG.

    The DAG draws each arc forward along a random linear order with
    probability ``density``.
    """
    rng = _rng(rng)
    perm = rng.permutation(n) + 1
    reach = np.zeros((n + 1, n + 1), dtype=bool)
    for a in range(n):
        for b in range(a + 1, n):
            if rng.random() < density:
                reach[perm[a], perm[b]] = True
    # Closure in topological order: predecessors of perm[b] are earlier.
    for b in range(n):
        vb = perm[b]
        for a in range(b):
            va = perm[a]
            if reach[va, vb]:
                reach[:, vb] |= reach[:, va]
    return Graph(n, ((i, j) for i, j in combinations(range(1, n + 1), 2) if reach[i, j] or reach[j, i]))


def _connected(draw, what):
    for _ in range(MAX_ATTEMPTS):
        g = draw()
        if g.is_connected():
            return g
    raise DomainError(f"no connected {what} found in {MAX_ATTEMPTS} attempts")


def random_poset_graph(spec: RandomPosetSpec) -> Graph:
    """Connected comparability graph drawn per ``spec`` (rejection sampling)."""
    rng = _rng(spec.seed)
    return _connected(lambda: poset_comparability_graph(spec.n, spec.density, rng), "poset graph")


def gnp(n: int, p: float, rng) -> Graph:
    rng = _rng(rng)
    return Graph(n, (e for e in combinations(range(1, n + 1), 2) if rng.random() < p))


def connected_gnp(n: int, p: float, rng) -> Graph:
    if not 0 < p < 1:
        raise InputError("density must lie strictly between 0 and 1")
    rng = _rng(rng)
    return _connected(lambda: gnp(n, p, rng), "G(n, p) sample")


def complete_multipartite(sizes) -> Graph:
    part = []
    for k, s in enumerate(sizes):
        part.extend([k] * s)
    n = len(part)
    return Graph(n, ((i, j) for i, j in combinations(range(1, n + 1), 2) if part[i - 1] != part[j - 1]))


def integer_partitions(m: int, largest: int | None = None):
    """Partitions of ``m`` as non-increasing tuples."""
    largest = m if largest is None else largest
    if m == 0:
        yield ()
        return
    for first in range(min(m, largest), 0, -1):
        for rest in integer_partitions(m - first, first):
            yield (first,) + rest


def random_bipartite_connected(n: int, p: float, rng) -> tuple[Graph, frozenset[int], frozenset[int]]:
    """Connected bipartite graph with its two colour classes."""
    rng = _rng(rng)
    for _ in range(MAX_ATTEMPTS):
        side = rng.random(n) < 0.5
        if side.all() or not side.any():
            continue
        g = Graph(n, ((i, j) for i, j in combinations(range(1, n + 1), 2)
                      if side[i - 1] != side[j - 1] and rng.random() < p))
        if g.is_connected():
            x = frozenset(v for v in g.vertices if side[v - 1])
            return g, x, frozenset(g.vertices) - x
    raise DomainError("no connected bipartite sample found")


def substitute(outer: Graph, inner: list[Graph]) -> Graph:
    """Replace vertex ``v`` of ``outer`` by ``inner[v-1]``; each copy is a module."""
    offsets, total = [], 0
    for h in inner:
        offsets.append(total)
        total += h.n
    edges = []
    for v, h in enumerate(inner):
        edges.extend((i + offsets[v], j + offsets[v]) for i, j in h.edges)
    for a, b in outer.edges:
        for i in range(1, inner[a - 1].n + 1):
            for j in range(1, inner[b - 1].n + 1):
                edges.append((i + offsets[a - 1], j + offsets[b - 1]))
    return Graph(total, edges)


def relabel(g: Graph, rng) -> Graph:
    rng = _rng(rng)
    perm = rng.permutation(g.n) + 1
    return Graph(g.n, ((perm[i - 1], perm[j - 1]) for i, j in g.edges))


def random_modular_graph(n: int, rng) -> Graph:
    """Connected graph with connected complement and nontrivial modules."""
    rng = _rng(rng)
    for _ in range(MAX_ATTEMPTS):
        k = int(rng.integers(4, max(5, n)))
        outer = gnp(k, 0.5, rng)
        sizes = np.ones(k, dtype=int)
        for _ in range(n - k):
            sizes[rng.integers(k)] += 1
        inner = [gnp(int(s), 0.5, rng) for s in sizes]
        g = relabel(substitute(outer, inner), rng)
        if g.is_connected() and complement(g).is_connected():
            return g
    raise DomainError("no modular sample found")


def random_join(n: int, rng) -> Graph:
    """Connected graph whose complement is disconnected."""
    rng = _rng(rng)
    k = int(rng.integers(2, min(n, 4) + 1))
    sizes = np.ones(k, dtype=int)
    for _ in range(n - k):
        sizes[rng.integers(k)] += 1
    inner = [gnp(int(s), 0.5, rng) for s in sizes]
    return relabel(substitute(Graph(k, combinations(range(1, k + 1), 2)), inner), rng)


def random_spanning_subgraph(g: Graph, keep: float, rng) -> Graph:
    rng = _rng(rng)
    return Graph(g.n, (e for e in g.edge_list if rng.random() < keep))


# -- small named graphs ------------------------------------------------------

def path(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(1, n)))


def cycle(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def complete(n: int) -> Graph:
    return Graph(n, combinations(range(1, n + 1), 2))
