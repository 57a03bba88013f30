"""Modules, the canonical partition and the copartition subgraph."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from functools import lru_cache

from .errors import DisconnectedGraphError, InputError, SizeLimitError
from .graph import Graph, Partition, complement, connected_components

MAX_BRUTEFORCE_VERTICES = 16


def _as_block(g: Graph, a: Iterable[int]) -> frozenset[int]:
    a = frozenset(int(v) for v in a)
    if not a:
        raise InputError("module test on an empty vertex set")
    if not a <= set(g.vertices):
        raise InputError(f"vertex set {sorted(a)} not contained in 1..{g.n}")
    return a


def is_module(g: Graph, a: Iterable[int]) -> bool:
    """All members of ``a`` see the same neighbours outside ``a``."""
    a = _as_block(g, a)
    it = iter(a)
    outside = g.neighbors[next(it)] - a
    return all(g.neighbors[v] - a == outside for v in it)


@dataclass(frozen=True)
class ModuleReport:
    block: frozenset[int]
    is_proper: bool
    is_nontrivial: bool
    is_connected: bool


def module_report(g: Graph, a: Iterable[int]) -> ModuleReport:
    from .graph import induced_subgraph

    a = _as_block(g, a)
    if not is_module(g, a):
        raise InputError(f"{sorted(a)} is not a module")
    sub, _ = induced_subgraph(g, a)
    return ModuleReport(a, len(a) < g.n, len(a) > 1, sub.is_connected())


def enumerate_modules_bruteforce(g: Graph) -> list[frozenset[int]]:
    """Every nonempty module, by size then lexicographically (2^n scan)."""
    if g.n > MAX_BRUTEFORCE_VERTICES:
        raise SizeLimitError(f"brute-force module scan limited to {MAX_BRUTEFORCE_VERTICES} vertices")
    nbr = [0] * (g.n + 1)
    for v in g.vertices:
        for w in g.neighbors[v]:
            nbr[v] |= 1 << w
    found = []
    for mask in range(1, 1 << g.n):
        members = [v for v in g.vertices if mask >> (v - 1) & 1]
        a = mask << 1
        outside = nbr[members[0]] & ~a
        if all(nbr[v] & ~a == outside for v in members[1:]):
            found.append(tuple(members))
    found.sort(key=lambda s: (len(s), s))
    return [frozenset(s) for s in found]


def smallest_module_containing(g: Graph, seed: Iterable[int]) -> frozenset[int]:
    """Close ``seed`` under splitters: any outside vertex adjacent to some
    but not all members must belong to every module containing ``seed``."""
    m = set(_as_block(g, seed))
    changed = True
    while changed:
        changed = False
        for z in g.vertices:
            if z in m:
                continue
            hits = len(g.neighbors[z] & m)
            if 0 < hits < len(m):
                m.add(z)
                changed = True
    return frozenset(m)


def maximal_proper_modules(g: Graph) -> Partition:
    """Maximal proper modules of a graph whose complement is connected.

    ``u`` and ``v`` share a maximal proper module iff the smallest module
    containing both is proper.
    """
    full = frozenset(g.vertices)
    blocks: list[set[int]] = []
    assigned: dict[int, int] = {}
    for u in g.vertices:
        if u in assigned:
            continue
        block = {u}
        for v in g.vertices:
            if v != u and v not in assigned and smallest_module_containing(g, (u, v)) != full:
                block.add(v)
        for v in block:
            assigned[v] = len(blocks)
        blocks.append(block)
    return Partition(g.n, sorted(blocks, key=min))


def maximal_proper_modules_bruteforce(g: Graph) -> list[frozenset[int]]:
    proper = [m for m in enumerate_modules_bruteforce(g) if len(m) < g.n]
    return [m for m in proper if not any(m < other for other in proper)]


@dataclass(frozen=True)
class CanonicalDecomposition:
    partition: Partition
    copartition: Graph
    complement_connected: bool


def copartition_subgraph(g: Graph, p: Partition) -> Graph:
    """``g`` minus every edge with both endpoints in one block."""
    block = {v: k for k, b in enumerate(p.blocks) for v in b}
    return Graph(g.n, (e for e in g.edges if block[e[0]] != block[e[1]]))


@lru_cache(maxsize=4096)
def canonical_partition(g: Graph) -> CanonicalDecomposition:
    if g.n < 2:
        raise InputError("canonical partition needs at least two vertices")
    if not g.is_connected():
        raise DisconnectedGraphError("canonical partition requires a connected graph")
    co = connected_components(complement(g))
    if len(co) > 1:
        p = Partition(g.n, sorted(co.blocks, key=min))
        connected = False
    else:
        p = maximal_proper_modules(g)
        connected = True
    return CanonicalDecomposition(p, copartition_subgraph(g, p), connected)


def restrict_to_block(g: Graph, x: Iterable[int]) -> Graph:
    """Same vertex set as ``g``, keeping only edges inside ``x``."""
    x = _as_block(g, x)
    return Graph(g.n, (e for e in g.edges if e[0] in x and e[1] in x))
