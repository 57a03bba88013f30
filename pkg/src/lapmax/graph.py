"""Simple undirected graphs on vertices ``1..n`` and their Laplacians.

Vectors and matrices indexed by vertices use 0-based numpy positions:
vertex ``v`` lives at index ``v - 1``.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

import numpy as np

from .errors import InputError, ParseError

Edge = tuple[int, int]


def _edge(i: int, j: int) -> Edge:
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph with vertex set ``{1, ..., n}``."""

    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        n = int(n)
        if n < 0:
            raise InputError(f"vertex count must be non-negative, got {n}")
        normalized = set()
        for i, j in edges:
            i, j = int(i), int(j)
            if i == j:
                raise InputError(f"self-loop at vertex {i}")
            if not (1 <= i <= n and 1 <= j <= n):
                raise InputError(f"edge {{{i},{j}}} has an endpoint outside 1..{n}")
            normalized.add(_edge(i, j))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(normalized))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edge_list})"

    @cached_property
    def edge_list(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def neighbors(self) -> dict[int, frozenset[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return {v: frozenset(s) for v, s in adj.items()}

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def has_edge(self, i: int, j: int) -> bool:
        return _edge(i, j) in self.edges

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def is_connected(self) -> bool:
        return len(connected_components(self).blocks) <= 1


@dataclass(frozen=True, eq=False)
class Partition:
    """Disjoint nonempty blocks covering ``1..n``.

    Block order is kept as given (fibers list blocks by ascending value);
    equality ignores it.
    """

    n: int
    blocks: tuple[frozenset[int], ...]

    def __init__(self, n: int, blocks: Iterable[Iterable[int]]):
        frozen = tuple(frozenset(int(v) for v in b) for b in blocks)
        seen: set[int] = set()
        for b in frozen:
            if not b:
                raise InputError("partition has an empty block")
            if seen & b:
                raise InputError("partition blocks overlap")
            seen |= b
        if seen != set(range(1, n + 1)):
            raise InputError(f"partition blocks do not cover 1..{n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "blocks", frozen)

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self.n == other.n and set(self.blocks) == set(other.blocks)

    def __hash__(self):
        return hash((self.n, frozenset(self.blocks)))

    def __len__(self):
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __repr__(self):
        return f"Partition({[sorted(b) for b in self.blocks]})"

    def sorted_blocks(self) -> list[list[int]]:
        """Blocks as sorted lists, ordered by minimum vertex."""
        return sorted((sorted(b) for b in self.blocks), key=lambda b: b[0])

    def block_of(self, v: int) -> frozenset[int]:
        for b in self.blocks:
            if v in b:
                return b
        raise KeyError(v)


def _check_subset(g: Graph, x: Iterable[int]) -> frozenset[int]:
    x = frozenset(int(v) for v in x)
    bad = [v for v in x if not 1 <= v <= g.n]
    if bad:
        raise InputError(f"vertices {sorted(bad)} outside 1..{g.n}")
    return x


def laplacian(g: Graph) -> np.ndarray:
    """Degree matrix minus adjacency matrix, as a float array."""
    m = np.zeros((g.n, g.n))
    for i, j in g.edges:
        m[i - 1, j - 1] = m[j - 1, i - 1] = -1.0
        m[i - 1, i - 1] += 1.0
        m[j - 1, j - 1] += 1.0
    return m


def complement(g: Graph) -> Graph:
    return Graph(g.n, (e for e in combinations(g.vertices, 2) if e not in g.edges))


def connected_components(g: Graph) -> Partition:
    seen: set[int] = set()
    blocks = []
    for s in g.vertices:
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        while stack:
            v = stack.pop()
            for w in g.neighbors[v]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        blocks.append(comp)
    return Partition(g.n, blocks)


def open_neighborhood(g: Graph, x: Iterable[int]) -> frozenset[int]:
    x = _check_subset(g, x)
    out: set[int] = set()
    for v in x:
        out |= g.neighbors[v]
    return frozenset(out - x)


def induced_subgraph(g: Graph, x: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced on ``x``, relabelled to ``1..|x|``.

    Returns the graph and the label map: new vertex ``k`` is original
    vertex ``labels[k - 1]``. Labels keep the original order.
    """
    x = _check_subset(g, x)
    if not x:
        raise InputError("induced subgraph of an empty vertex set")
    labels = tuple(sorted(x))
    index = {v: k for k, v in enumerate(labels, start=1)}
    edges = ((index[i], index[j]) for i, j in g.edges if i in x and j in x)
    return Graph(len(labels), edges), labels


def completely_adjacent(g: Graph, x: Iterable[int], y: Iterable[int]) -> bool:
    x, y = frozenset(x), frozenset(y)
    if x & y:
        return False
    return all(g.has_edge(i, j) for i in x for j in y)


# -- edge-list text format ---------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse ``n <N>`` followed by ``e <i> <j>`` lines; ``#`` starts a comment."""
    n = None
    edges: list[Edge] = []
    seen: set[Edge] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if parts[0] != "n" or len(parts) != 2:
                raise ParseError("expected header 'n <N>'", lineno)
            try:
                n = int(parts[1])
            except ValueError:
                raise ParseError(f"bad vertex count {parts[1]!r}", lineno) from None
            if n < 1:
                raise ParseError("vertex count must be at least 1", lineno)
            continue
        if parts[0] != "e" or len(parts) != 3:
            raise ParseError(f"expected 'e <i> <j>', got {line!r}", lineno)
        try:
            i, j = int(parts[1]), int(parts[2])
        except ValueError:
            raise ParseError(f"bad edge endpoints in {line!r}", lineno) from None
        if not 1 <= i < j <= n:
            raise ParseError(f"edge endpoints must satisfy 1 <= i < j <= {n}", lineno)
        if (i, j) in seen:
            raise ParseError(f"duplicate edge {i} {j}", lineno)
        seen.add((i, j))
        edges.append((i, j))
    if n is None:
        raise ParseError("missing header 'n <N>'")
    return Graph(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"e {i} {j}" for i, j in g.edge_list)
    return "\n".join(lines) + "\n"


def read_edge_list(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())
