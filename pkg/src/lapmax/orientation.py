"""Edge orientations, their induced orders, and the closed cones ``C_O``.

``C_O`` is the closure of the graphical-arrangement region of an acyclic
orientation: the vectors that weakly increase along every arc.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from functools import cached_property
from graphlib import CycleError, TopologicalSorter
from itertools import permutations

import numpy as np

from .errors import DomainError, InputError, ParseError, SizeLimitError
from .graph import Graph, laplacian

UNORIENTED, FORWARD, BACKWARD = 0, 1, -1

MAX_FILTER_VERTICES = 16


@dataclass(frozen=True)
class PartialOrientation:
    """Per-edge state aligned with ``graph.edge_list``.

    For edge ``(i, j)`` with ``i < j``: ``FORWARD`` is the arc ``i -> j``,
    ``BACKWARD`` is ``j -> i``, ``UNORIENTED`` leaves the edge undirected.
    """

    graph: Graph
    states: tuple[int, ...]

    def __post_init__(self):
        if len(self.states) != self.graph.edge_count:
            raise InputError(
                f"{len(self.states)} edge states for {self.graph.edge_count} edges"
            )
        if any(s not in (UNORIENTED, FORWARD, BACKWARD) for s in self.states):
            raise InputError("edge states must be 0, 1 or -1")

    @classmethod
    def from_arcs(cls, graph: Graph, arcs: Iterable[tuple[int, int]]) -> PartialOrientation:
        """Orientation with the given arcs; edges not mentioned stay unoriented."""
        index = {e: k for k, e in enumerate(graph.edge_list)}
        states = [UNORIENTED] * graph.edge_count
        for tail, head in arcs:
            key = (min(tail, head), max(tail, head))
            if key not in index:
                raise InputError(f"arc ({tail},{head}) is not an edge of the graph")
            k = index[key]
            state = FORWARD if tail < head else BACKWARD
            if states[k] not in (UNORIENTED, state):
                raise InputError(f"edge {key} oriented both ways")
            states[k] = state
        return cls(graph, tuple(states))

    @classmethod
    def unoriented(cls, graph: Graph) -> PartialOrientation:
        return cls(graph, (UNORIENTED,) * graph.edge_count)

    @cached_property
    def arcs(self) -> tuple[tuple[int, int], ...]:
        out = []
        for (i, j), s in zip(self.graph.edge_list, self.states):
            if s == FORWARD:
                out.append((i, j))
            elif s == BACKWARD:
                out.append((j, i))
        return tuple(out)

    @property
    def unoriented_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(e for e, s in zip(self.graph.edge_list, self.states) if s == UNORIENTED)

    @property
    def is_full(self) -> bool:
        return UNORIENTED not in self.states

    def reversed(self) -> PartialOrientation:
        return PartialOrientation(self.graph, tuple(-s for s in self.states))

    @cached_property
    def successors(self) -> dict[int, frozenset[int]]:
        succ: dict[int, set[int]] = {v: set() for v in self.graph.vertices}
        for tail, head in self.arcs:
            succ[tail].add(head)
        return {v: frozenset(s) for v, s in succ.items()}

    def sort_key(self):
        return tuple(sorted(self.arcs))


def _require_full(o: PartialOrientation):
    if not o.is_full:
        raise InputError("operation needs a full orientation (no unoriented edges)")


def is_acyclic(o: PartialOrientation) -> bool:
    _require_full(o)
    ts = TopologicalSorter({v: () for v in o.graph.vertices})
    for tail, head in o.arcs:
        ts.add(head, tail)
    try:
        ts.prepare()
    except CycleError:
        return False
    return True


def is_transitive(g: Graph, o: PartialOrientation) -> bool:
    """Acyclic, and ``i->j``, ``j->k`` always come with the arc ``i->k``."""
    _require_full(o)
    if o.graph != g:
        raise InputError("orientation belongs to a different graph")
    succ = o.successors
    for i in g.vertices:
        for j in succ[i]:
            if not succ[j] <= succ[i]:
                return False
    # A closed arc set with a cycle through i would contain the loop (i, i),
    # so closure already implies acyclicity.
    return True


@dataclass(frozen=True, eq=False)
class Preorder:
    """Reflexive-transitive relation; ``reaches[u-1, v-1]`` means ``u <= v``."""

    reaches: np.ndarray

    @property
    def n(self) -> int:
        return self.reaches.shape[0]

    def leq(self, u: int, v: int) -> bool:
        return bool(self.reaches[u - 1, v - 1])

    def principal_filter(self, v: int) -> frozenset[int]:
        return frozenset(int(k) + 1 for k in np.flatnonzero(self.reaches[v - 1]))


def induced_preorder(o: PartialOrientation) -> Preorder:
    if not is_acyclic(o):
        raise DomainError("orientation has a directed cycle")
    n = o.graph.n
    r = np.eye(n, dtype=bool)
    for tail, head in o.arcs:
        r[tail - 1, head - 1] = True
    for k in range(n):
        r |= np.outer(r[:, k], r[k, :])
    return Preorder(r)


def _arc_arrays(o: PartialOrientation):
    arcs = np.array(o.arcs, dtype=int).reshape(-1, 2) - 1
    return arcs[:, 0], arcs[:, 1]


def cone_contains(o: PartialOrientation, x, cone_tol: float = 1e-9) -> bool:
    """``x_i <= x_j + cone_tol`` for every arc ``i -> j``."""
    _require_full(o)
    x = np.asarray(x)
    tails, heads = _arc_arrays(o)
    return bool(np.all(x[tails] <= x[heads] + cone_tol))


def up_sets(p: Preorder) -> list[frozenset[int]]:
    """Nonempty proper up-sets, by size then lexicographically."""
    n = p.n
    if n > MAX_FILTER_VERTICES:
        raise SizeLimitError(f"up-set enumeration limited to {MAX_FILTER_VERTICES} vertices")
    above = [sum(1 << int(k) for k in np.flatnonzero(p.reaches[v])) for v in range(n)]
    found = []
    full = (1 << n) - 1
    for mask in range(1, full):
        ok = True
        m = mask
        while m:
            low = m & -m
            v = low.bit_length() - 1
            if above[v] & ~mask:
                ok = False
                break
            m ^= low
        if ok:
            found.append(tuple(v + 1 for v in range(n) if mask >> v & 1))
    found.sort(key=lambda s: (len(s), s))
    return [frozenset(s) for s in found]


@dataclass(frozen=True, eq=False)
class ConeGenerators:
    """Conical generating set of ``C_O``: ``+1``, ``-1`` and up-set indicators."""

    generators: np.ndarray  # shape (k, n)
    up_sets: tuple[frozenset[int], ...]

    def __len__(self):
        return self.generators.shape[0]


def indicator(n: int, members: Iterable[int]) -> np.ndarray:
    e = np.zeros(n)
    for v in members:
        e[v - 1] = 1.0
    return e


def cone_generators(o: PartialOrientation) -> ConeGenerators:
    _require_full(o)
    n = o.graph.n
    ups = up_sets(induced_preorder(o))
    rows = [np.ones(n), -np.ones(n)] + [indicator(n, f) for f in ups]
    return ConeGenerators(np.array(rows).reshape(len(rows), n), tuple(ups))


@dataclass(frozen=True, eq=False)
class InvarianceResult:
    """Outcome of a cone-invariance check; truthy when invariant.

    On failure ``generator`` is a cone generator whose image leaves the
    cone, ``violated_arc`` an arc along which the image decreases, and
    ``principal_of`` the vertex ``l`` when the generator is the indicator
    of the principal filter of ``l``.
    """

    invariant: bool
    generator: np.ndarray | None = None
    violated_arc: tuple[int, int] | None = None
    principal_of: int | None = None

    def __bool__(self):
        return self.invariant


def transitivity_violators(o: PartialOrientation) -> set[int]:
    """Vertices ``k`` with arcs ``i->j->k`` but no arc ``i->k``."""
    succ = o.successors
    bad = set()
    for i in o.graph.vertices:
        for j in succ[i]:
            bad |= succ[j] - succ[i]
    return bad


def _first_violation(o, y, tol):
    for tail, head in o.arcs:
        if y[tail - 1] > y[head - 1] + tol:
            return (tail, head)
    return None


def is_cone_invariant(g: Graph, o: PartialOrientation, alpha: float = 0.0, cfg=None) -> InvarianceResult:
    """Check ``(alpha I + L) C_O <= C_O`` on a conical generating set of ``C_O``."""
    from .spectral import DEFAULT_TOL

    cfg = cfg or DEFAULT_TOL
    if alpha < 0:
        raise InputError("alpha must be non-negative")
    if o.graph != g:
        raise InputError("orientation belongs to a different graph")
    _require_full(o)
    if not is_acyclic(o):
        raise DomainError("cone invariance needs an acyclic orientation")
    n = g.n
    m = alpha * np.eye(n) + laplacian(g)
    # Integer generators and integral alpha keep products exact.
    tol = 0.0 if float(alpha).is_integer() else cfg.cone_tol
    order = induced_preorder(o)

    violators = transitivity_violators(o)
    if violators:
        maximal = [l for l in sorted(violators)
                   if not any(k != l and order.leq(l, k) for k in violators)]
        for l in maximal:
            e = indicator(n, order.principal_filter(l))
            arc = _first_violation(o, m @ e, tol)
            if arc is not None:
                return InvarianceResult(False, e, arc, l)

    gens = cone_generators(o).generators
    images = gens @ m.T
    if len(o.arcs):
        tails, heads = _arc_arrays(o)
        bad = np.flatnonzero(np.any(images[:, tails] > images[:, heads] + tol, axis=1))
        if len(bad):
            k = int(bad[0])
            return InvarianceResult(False, gens[k], _first_violation(o, images[k], tol))
    return InvarianceResult(True)


def acyclic_orientations(g: Graph, max_vertices: int = 8) -> list[PartialOrientation]:
    """Every full acyclic orientation, each induced by some linear order."""
    if g.n > max_vertices:
        raise SizeLimitError(f"acyclic orientation enumeration limited to {max_vertices} vertices")
    found = set()
    for perm in permutations(g.vertices):
        pos = {v: k for k, v in enumerate(perm)}
        found.add(tuple(FORWARD if pos[i] < pos[j] else BACKWARD for i, j in g.edge_list))
    return sorted((PartialOrientation(g, s) for s in found), key=PartialOrientation.sort_key)


# -- orientation text format -------------------------------------------------

def format_orientation(o: PartialOrientation) -> str:
    lines = [f"n {o.graph.n}"]
    for (i, j), s in zip(o.graph.edge_list, o.states):
        if s == FORWARD:
            lines.append(f"a {i} {j}")
        elif s == BACKWARD:
            lines.append(f"a {j} {i}")
        else:
            lines.append(f"u {i} {j}")
    return "\n".join(lines) + "\n"


def parse_orientation(text: str, graph: Graph | None = None) -> PartialOrientation:
    """Parse ``a <i> <j>`` (arc) and ``u <i> <j>`` (unoriented edge) lines.

    Without ``graph`` the edge set is read off the lines themselves.
    """
    n = None
    arcs, plain = [], []
    seen = set()
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
            continue
        if parts[0] not in ("a", "u") or len(parts) != 3:
            raise ParseError(f"expected 'a <i> <j>' or 'u <i> <j>', got {line!r}", lineno)
        try:
            i, j = int(parts[1]), int(parts[2])
        except ValueError:
            raise ParseError(f"bad endpoints in {line!r}", lineno) from None
        if i == j or not (1 <= i <= n and 1 <= j <= n):
            raise ParseError(f"endpoints must be distinct vertices in 1..{n}", lineno)
        key = (min(i, j), max(i, j))
        if key in seen:
            raise ParseError(f"edge {key[0]} {key[1]} listed twice", lineno)
        seen.add(key)
        (arcs if parts[0] == "a" else plain).append((i, j))
    if n is None:
        raise ParseError("missing header 'n <N>'")
    if graph is None:
        graph = Graph(n, seen)
    elif graph.n != n or graph.edges != frozenset(seen):
        raise InputError("orientation does not match the graph's edge set")
    return PartialOrientation.from_arcs(graph, arcs)
