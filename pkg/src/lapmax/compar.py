"""Comparability recognition and transitive orientations.

Two independent routes: an exhaustive backtracking search over edge
orientations, and the spectral route that orients the copartition
subgraph with a random unit vector of the top eigenspace and recurses
into the components of each canonical block.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import (
    ConsistencyError,
    DegeneracyError,
    DisconnectedGraphError,
    InconclusiveError,
    NotComparabilityError,
    SizeLimitError,
)
from .graph import Graph, connected_components, induced_subgraph
from .modular import canonical_partition
from .orientation import (
    PartialOrientation,
    acyclic_orientations,
    is_cone_invariant,
    is_transitive,
)
from .spectral import (
    DEFAULT_TOL,
    ToleranceConfig,
    derive_seed,
    induce_orientation,
    max_eigenspace,
    sample_ucuv,
)

MAX_ORIENTATION_EDGES = 20
SAMPLE_ATTEMPTS = 16
DEGENERACY_FACTOR = 10.0


@dataclass(frozen=True)
class RecognitionResult:
    is_comparability: bool
    certificate: PartialOrientation | None
    method: str


@dataclass(frozen=True)
class OrientationCensus:
    orientations: tuple[PartialOrientation, ...]

    @property
    def count(self) -> int:
        return len(self.orientations)


def _search_order(g: Graph) -> list[tuple[int, int]]:
    # Breadth-first edge order keeps neighbouring edges close, so the
    # transitivity pruning fires early.
    order, seen = [], set()
    for start in g.vertices:
        queue = [start]
        visited = {start}
        while queue:
            v = queue.pop(0)
            for w in sorted(g.neighbors[v]):
                e = (min(v, w), max(v, w))
                if e not in seen:
                    seen.add(e)
                    order.append(e)
                if w not in visited:
                    visited.add(w)
                    queue.append(w)
    return order


def _transitive_orientations(g: Graph, max_edges: int, first_only: bool):
    if g.edge_count > max_edges:
        raise SizeLimitError(
            f"orientation search limited to {max_edges} edges, graph has {g.edge_count}"
        )
    order = _search_order(g)
    succ = {v: set() for v in g.vertices}
    pred = {v: set() for v in g.vertices}
    found = []

    def ok(a, b):
        for c in succ[b]:
            if not g.has_edge(a, c) or c in pred[a]:
                return False
        for c in pred[a]:
            if not g.has_edge(c, b) or c in succ[b]:
                return False
        return True

    def extend(k):
        if k == len(order):
            found.append(tuple(sorted((t, h) for t in g.vertices for h in succ[t])))
            return first_only
        i, j = order[k]
        for a, b in ((i, j), (j, i)):
            if ok(a, b):
                succ[a].add(b)
                pred[b].add(a)
                stop = extend(k + 1)
                succ[a].discard(b)
                pred[b].discard(a)
                if stop:
                    return True
        return False

    extend(0)
    result = []
    for arcs in found:
        o = PartialOrientation.from_arcs(g, arcs)
        # Pruning only sees local patterns; the final check is the definition.
        if is_transitive(g, o):
            result.append(o)
    return result


def recognize_bruteforce(g: Graph, max_edges: int = MAX_ORIENTATION_EDGES) -> RecognitionResult:
    if not g.is_connected():
        raise DisconnectedGraphError("recognition requires a connected graph")
    found = _transitive_orientations(g, max_edges, first_only=True)
    return RecognitionResult(bool(found), found[0] if found else None, "bruteforce")


def enumerate_transitive_orientations(
    g: Graph, max_edges: int = MAX_ORIENTATION_EDGES
) -> OrientationCensus:
    if not g.is_connected():
        raise DisconnectedGraphError("enumeration requires a connected graph")
    found = _transitive_orientations(g, max_edges, first_only=False)
    return OrientationCensus(tuple(sorted(found, key=PartialOrientation.sort_key)))


def count_via_decomposition(g: Graph, max_edges: int = MAX_ORIENTATION_EDGES) -> int:
    """Transitive orientations of the copartition subgraph times the counts
    of every component of every canonical block, recursively."""
    if g.n == 1:
        return 1
    dec = canonical_partition(g)
    total = enumerate_transitive_orientations(dec.copartition, max_edges).count
    for block in dec.partition.blocks:
        sub, _ = induced_subgraph(g, block)
        for comp in connected_components(sub).blocks:
            h, _ = induced_subgraph(sub, comp)
            total *= count_via_decomposition(h, max_edges)
    if total == 0:
        raise NotComparabilityError("graph is not a comparability graph")
    return total


# -- spectral route ----------------------------------------------------------

@dataclass(frozen=True, eq=False)
class _Plan:
    basis: object
    copartition: Graph
    tails: np.ndarray
    heads: np.ndarray
    children: tuple  # (subgraph, label map into parent, block min, component min)


@lru_cache(maxsize=4096)
def _plan(g: Graph, cfg: ToleranceConfig) -> _Plan:
    dec = canonical_partition(g)
    gp = dec.copartition
    ends = np.array(gp.edge_list, dtype=int).reshape(-1, 2) - 1
    children = []
    for block in sorted(dec.partition.blocks, key=min):
        sub, labels = induced_subgraph(g, block)
        for comp in sorted(connected_components(sub).blocks, key=min):
            if len(comp) < 2:
                continue
            h, inner = induced_subgraph(sub, comp)
            lift = tuple(labels[v - 1] for v in inner)
            children.append((h, lift, min(block), lift[0]))
    return _Plan(max_eigenspace(g, cfg), gp, ends[:, 0], ends[:, 1], tuple(children))


def sample_nondegenerate(g: Graph, seed: int, cfg: ToleranceConfig = DEFAULT_TOL):
    """Unit vector of the top eigenspace separating every copartition edge.

    A sample is degenerate when some copartition edge has endpoint values
    within ``10 * fiber_tol``; such samples are redrawn with derived seeds.
    Returns ``(x, attempts_used)``.
    """
    plan = _plan(g, cfg)
    limit = DEGENERACY_FACTOR * cfg.fiber_tol
    s = seed
    for attempt in range(1, SAMPLE_ATTEMPTS + 1):
        x = sample_ucuv(plan.basis, s)
        if not len(plan.tails) or np.min(np.abs(x[plan.tails] - x[plan.heads])) > limit:
            return x, attempt
        s = derive_seed(seed, attempt)
    raise DegeneracyError("every sampled eigenvector tied a copartition edge", SAMPLE_ATTEMPTS)


def _spectral_arcs(g: Graph, seed: int, cfg: ToleranceConfig) -> list[tuple[int, int]]:
    if g.n == 1:
        return []
    plan = _plan(g, cfg)
    x, _ = sample_nondegenerate(g, seed, cfg)
    op = induce_orientation(plan.copartition, x, cfg)
    if not op.is_full or not is_transitive(plan.copartition, op):
        raise ConsistencyError("induced orientation of the copartition subgraph is not transitive")
    arcs = list(op.arcs)
    for h, lift, block_min, comp_min in plan.children:
        child = derive_seed(seed, block_min, comp_min)
        arcs.extend((lift[t - 1], lift[u - 1]) for t, u in _spectral_arcs(h, child, cfg))
    return arcs


def spectral_orient(g: Graph, seed: int, cfg: ToleranceConfig = DEFAULT_TOL) -> PartialOrientation:
    """Random transitive orientation built from top-eigenspace samples.

    Raises ConsistencyError when the result is not transitive, which on
    a connected input means it is not a comparability graph (or the
    tolerances are off).
    """
    if not g.is_connected():
        raise DisconnectedGraphError("spectral orientation requires a connected graph")
    o = PartialOrientation.from_arcs(g, _spectral_arcs(g, seed, cfg))
    if not o.is_full or not is_transitive(g, o):
        raise ConsistencyError("union of spectral orientations is not transitive")
    return o


def recognize_spectral(
    g: Graph,
    trials: int = 3,
    seed: int = 0,
    cfg: ToleranceConfig = DEFAULT_TOL,
    max_edges: int = MAX_ORIENTATION_EDGES,
) -> RecognitionResult:
    """Try the spectral route; if every trial fails, confirm by brute force."""
    if not g.is_connected():
        raise DisconnectedGraphError("recognition requires a connected graph")
    for t in range(trials):
        try:
            return RecognitionResult(True, spectral_orient(g, derive_seed(seed, t), cfg), "spectral")
        except (ConsistencyError, DegeneracyError):
            continue
    if g.edge_count > max_edges:
        raise InconclusiveError(
            f"spectral route failed {trials} trials and the graph is too large to confirm"
        )
    return recognize_bruteforce(g, max_edges)


def recognize_cone(g: Graph, cfg: ToleranceConfig = DEFAULT_TOL, max_vertices: int = 8) -> RecognitionResult:
    """Search the acyclic orientations for one whose cone ``L`` preserves."""
    if not g.is_connected():
        raise DisconnectedGraphError("recognition requires a connected graph")
    for o in acyclic_orientations(g, max_vertices):
        if is_cone_invariant(g, o, 0.0, cfg):
            return RecognitionResult(True, o, "cone")
    return RecognitionResult(False, None, "cone")

