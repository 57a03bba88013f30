"""Property suites over seeded random corpora.

Each suite returns a :class:`SuiteReport` with one :class:`PropertyResult`
per property: how many instances were checked, how many failed, and the
first counterexample in JSON-friendly form.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np
from scipy.optimize import nnls

from . import compar, modular, orientation
from .corpus import (
    complete_multipartite,
    connected_gnp,
    cycle,
    complete,
    integer_partitions,
    path,
    poset_comparability_graph,
    random_bipartite_connected,
    random_join,
    random_modular_graph,
    random_spanning_subgraph,
)
from .errors import LapmaxError, NotComparabilityError
from .graph import (
    Graph,
    completely_adjacent,
    complement,
    connected_components,
    induced_subgraph,
    laplacian,
)
from .spectral import (
    DEFAULT_TOL,
    derive_seed,
    eigendecompose,
    fiber_labels,
    max_eigenspace,
    sample_ucuv_batch,
)

SUITES = ("spectra", "modules", "eigenspace", "orientations", "cone", "decomposition")

DENSITIES = (0.3, 0.5, 0.7)

RESIDUAL_TOL = 1e-8
ORTHO_TOL = 1e-9
SPECTRUM_TOL = 1e-7
CONSTANCY_TOL = 1e-8
SIGN_TOL = 1e-9
PROJECTOR_TOL = 1e-7
HULL_TOL = 1e-7
FREQUENCY_TOL = 0.05


def _graph_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edge_list]}


@dataclass
class PropertyResult:
    name: str
    checked: int = 0
    failed: int = 0
    counterexample: dict | None = None

    def check(self, ok: bool, example=None) -> bool:
        self.checked += 1
        if not ok:
            self.failed += 1
            if self.counterexample is None:
                self.counterexample = example() if callable(example) else example
        return ok

    @property
    def passed(self) -> bool:
        return self.failed == 0 and self.checked > 0

    def to_dict(self) -> dict:
        out = {"name": self.name, "checked": self.checked, "failed": self.failed, "passed": self.passed}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


@dataclass
class SuiteReport:
    suite: str
    properties: dict[str, PropertyResult] = field(default_factory=dict)
    seconds: float = 0.0

    def prop(self, name: str) -> PropertyResult:
        if name not in self.properties:
            self.properties[name] = PropertyResult(name)
        return self.properties[name]

    @property
    def passed(self) -> bool:
        return all(p.passed for p in self.properties.values())

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "seconds": round(self.seconds, 3),
            "properties": [p.to_dict() for p in self.properties.values()],
        }


class _timed:
    def __init__(self, report):
        self.report = report

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self.report

    def __exit__(self, *exc):
        self.report.seconds += time.perf_counter() - self.t0
        return False


# -- corpora -----------------------------------------------------------------

def random_connected_corpus(seed: int, count: int, n_range=(4, 12)) -> list[Graph]:
    rng = np.random.default_rng(derive_seed(seed, 1))
    lo, hi = n_range
    return [connected_gnp(int(rng.integers(lo, hi + 1)), float(rng.choice(DENSITIES)), rng)
            for _ in range(count)]


def comparability_corpus(seed: int, count: int, n_range=(4, 8), max_edges: int = 20) -> list[Graph]:
    """Connected poset comparability graphs small enough for exhaustive search."""
    rng = np.random.default_rng(derive_seed(seed, 2))
    lo, hi = n_range
    out = []
    while len(out) < count:
        g = poset_comparability_graph(int(rng.integers(lo, hi + 1)), float(rng.choice(DENSITIES)), rng)
        if g.is_connected() and g.edge_count <= max_edges:
            out.append(g)
    return out


def connected_complement_corpus(seed: int, count: int, n_range=(4, 10)) -> list[Graph]:
    """Mix of module-rich substitutions, poset graphs and plain G(n, p),
    all connected with connected complement."""
    rng = np.random.default_rng(derive_seed(seed, 3))
    lo, hi = n_range
    out = []
    while len(out) < count:
        n = int(rng.integers(lo, hi + 1))
        kind = len(out) % 3
        if kind == 0 and n >= 6:
            g = random_modular_graph(n, rng)
        elif kind == 1:
            g = poset_comparability_graph(n, float(rng.choice(DENSITIES)), rng)
        else:
            g = connected_gnp(n, float(rng.choice(DENSITIES)), rng)
        if g.is_connected() and complement(g).is_connected():
            out.append(g)
    return out


def disconnected_complement_corpus(seed: int, count: int, n_range=(3, 10)) -> list[Graph]:
    rng = np.random.default_rng(derive_seed(seed, 4))
    lo, hi = n_range
    return [random_join(int(rng.integers(lo, hi + 1)), rng) for _ in range(count)]


# -- spectra -----------------------------------------------------------------

def _check_spectrum(report, g, s):
    L = laplacian(g)
    lam, V = s.eigenvalues, s.eigenvectors
    res = np.linalg.norm(L @ V.T - V.T * lam, axis=0)
    report.prop("residual").check(
        bool(np.all(res <= RESIDUAL_TOL * np.maximum(1.0, lam))),
        lambda: {"graph": _graph_json(g), "max_residual": float(res.max())},
    )
    report.prop("orthonormal").check(
        bool(np.max(np.abs(V @ V.T - np.eye(g.n))) <= ORTHO_TOL), lambda: {"graph": _graph_json(g)}
    )
    recon = np.linalg.norm(L - V.T @ np.diag(lam) @ V)
    report.prop("reconstruction").check(
        bool(recon <= RESIDUAL_TOL * max(1.0, np.linalg.norm(L))),
        lambda: {"graph": _graph_json(g), "error": float(recon)},
    )
    report.prop("ascending_psd").check(
        bool(np.all(np.diff(lam) >= 0) and lam[0] >= -1e-9), lambda: {"graph": _graph_json(g)}
    )


def _zero_multiplicity(lam) -> int:
    return int(np.sum(np.abs(lam) <= DEFAULT_TOL.eig_group_tol * max(1.0, float(lam[-1]))))


def spectra_suite(seed: int = 0, count: int = 200, pairs: int = 100, n_range=(4, 12)) -> SuiteReport:
    """Eigensolver accuracy, the upper bound ``lambda_max <= n``, zero
    multiplicity, complement spectra and spanning-subgraph monotonicity."""
    report = SuiteReport("spectra")
    with _timed(report):
        corpus = random_connected_corpus(seed, count, n_range)
        rng = np.random.default_rng(derive_seed(seed, 10))
        spectra = [eigendecompose(laplacian(g)) for g in corpus]
        for g, s in zip(corpus, spectra):
            _check_spectrum(report, g, s)
            report.prop("lambda_max_le_n").check(
                s.lambda_max <= g.n + SPECTRUM_TOL, lambda: {"graph": _graph_json(g), "lambda_max": s.lambda_max}
            )
            report.prop("zero_multiplicity_components").check(
                _zero_multiplicity(s.eigenvalues) == len(connected_components(g)),
                lambda: {"graph": _graph_json(g)},
            )
            gc = complement(g)
            L, Lc = laplacian(g), laplacian(gc)
            report.prop("complement_laplacian_identity").check(
                bool(np.array_equal(Lc, g.n * np.eye(g.n) - np.ones((g.n, g.n)) - L)),
                lambda: {"graph": _graph_json(g)},
            )
            if gc.is_connected():
                expected = np.sort(np.concatenate([[0.0], g.n - s.eigenvalues[1:]]))
                got = eigendecompose(Lc).eigenvalues
                report.prop("complement_spectrum").check(
                    bool(np.max(np.abs(expected - got)) <= SPECTRUM_TOL), lambda: {"graph": _graph_json(g)}
                )
        for k in range(pairs):
            g = corpus[k % len(corpus)]
            s = spectra[k % len(corpus)]
            h = random_spanning_subgraph(g, float(rng.uniform(0.2, 0.9)), rng)
            sh = eigendecompose(laplacian(h))
            _check_spectrum(report, h, sh)
            report.prop("zero_multiplicity_components").check(
                _zero_multiplicity(sh.eigenvalues) == len(connected_components(h)),
                lambda: {"graph": _graph_json(h)},
            )
            report.prop("subgraph_monotonicity").check(
                bool(np.all(s.eigenvalues >= sh.eigenvalues - SPECTRUM_TOL)),
                lambda: {"graph": _graph_json(g), "subgraph": _graph_json(h)},
            )
    return report


def partite_suite(seed: int = 0, max_total: int = 10, bipartite_count: int = 50) -> SuiteReport:
    """Complete multipartite spectra and sign patterns on bipartite graphs."""
    report = SuiteReport("partite")
    with _timed(report):
        for m in range(2, max_total + 1):
            for sizes in integer_partitions(m):
                if len(sizes) < 2:
                    continue
                g = complete_multipartite(sizes)
                basis = max_eigenspace(g)
                example = lambda: {"sizes": list(sizes)}  # noqa: E731
                report.prop("multipartite_lambda_max").check(abs(basis.lambda_max - g.n) <= SPECTRUM_TOL, example)
                report.prop("multipartite_dimension").check(basis.dim == len(sizes) - 1, example)
                start, spread = 0, 0.0
                for size in sizes:
                    part = basis.vectors[:, start:start + size]
                    spread = max(spread, float(np.max(part.max(axis=1) - part.min(axis=1))))
                    start += size
                report.prop("multipartite_constant_on_parts").check(spread <= CONSTANCY_TOL, example)
        rng = np.random.default_rng(derive_seed(seed, 20))
        for _ in range(bipartite_count):
            g, x_side, y_side = random_bipartite_connected(int(rng.integers(2, 13)), float(rng.choice(DENSITIES)), rng)
            basis = max_eigenspace(g)
            ok_dim = report.prop("bipartite_dimension").check(basis.dim == 1, lambda: {"graph": _graph_json(g)})
            if not ok_dim:
                continue
            v = basis.vectors[0]
            xs = v[[i - 1 for i in sorted(x_side)]]
            ys = v[[i - 1 for i in sorted(y_side)]]
            opposite = (np.all(xs < -SIGN_TOL) and np.all(ys > SIGN_TOL)) or (
                np.all(xs > SIGN_TOL) and np.all(ys < -SIGN_TOL)
            )
            report.prop("bipartite_opposite_signs").check(bool(opposite), lambda: {"graph": _graph_json(g)})
    return report


# -- modules -----------------------------------------------------------------

def modules_suite(seed: int = 0, count: int = 100) -> SuiteReport:
    """Maximal proper modules against brute force; basic module facts."""
    report = SuiteReport("modules")
    with _timed(report):
        for g in connected_complement_corpus(seed, count, (4, 10)):
            mods = modular.enumerate_modules_bruteforce(g)
            maximal = modular.maximal_proper_modules_bruteforce(g)
            ex = lambda: {"graph": _graph_json(g)}  # noqa: E731
            report.prop("maximal_modules_disjoint").check(
                all(not (a & b) for a, b in combinations(maximal, 2)), ex
            )
            covers = sorted(v for m in maximal for v in m) == list(g.vertices)
            report.prop("maximal_modules_partition_gt2").check(covers and len(maximal) > 2, ex)
            dec = modular.canonical_partition(g)
            report.prop("canonical_matches_bruteforce").check(set(dec.partition.blocks) == set(maximal), ex)
            report.prop("disjoint_modules_adjacent_or_not").check(
                all(
                    completely_adjacent(g, a, b) or not any(g.has_edge(i, j) for i in a for j in b)
                    for a, b in combinations(mods, 2)
                    if not (a & b)
                ),
                ex,
            )
        for g in disconnected_complement_corpus(seed, count // 2):
            dec = modular.canonical_partition(g)
            report.prop("disconnected_complement_blocks").check(
                dec.partition == connected_components(complement(g)), lambda: {"graph": _graph_json(g)}
            )
        for g in connected_complement_corpus(seed + 1, count // 2) + disconnected_complement_corpus(seed + 1, count // 2):
            dec = modular.canonical_partition(g)
            ex = lambda: {"graph": _graph_json(g)}  # noqa: E731
            report.prop("canonical_blocks_are_modules").check(
                all(modular.is_module(g, b) for b in dec.partition.blocks), ex
            )
            inner = {e for e in g.edges if any(e[0] in b and e[1] in b for b in dec.partition.blocks)}
            report.prop("copartition_split").check(
                dec.copartition.edges | inner == g.edges and not (dec.copartition.edges & inner), ex
            )
    return report


# -- eigenspace --------------------------------------------------------------

def _complement_span_projector(g: Graph) -> np.ndarray:
    comps = connected_components(complement(g)).blocks
    ind = np.array([[1.0 if v in c else 0.0 for v in g.vertices] for c in comps])
    ind -= ind.mean(axis=1, keepdims=True)
    u, sv, _ = np.linalg.svd(ind.T, full_matrices=False)
    u = u[:, sv > 1e-10]
    return u @ u.T


def eigenspace_suite(seed: int = 0, count: int = 200, disconnected_count: int = 100) -> SuiteReport:
    """Top eigenvectors are constant on modules; disconnected complements
    give the explicit block-constant eigenspace; the copartition subgraph
    has the same top eigenspace."""
    report = SuiteReport("eigenspace")
    with _timed(report):
        for g in connected_complement_corpus(seed, count):
            basis = max_eigenspace(g)
            worst = 0.0
            for m in modular.enumerate_modules_bruteforce(g):
                if 1 < len(m) < g.n:
                    cols = basis.vectors[:, [v - 1 for v in sorted(m)]]
                    worst = max(worst, float(np.max(cols.max(axis=1) - cols.min(axis=1))))
            report.prop("constant_on_modules").check(
                worst <= CONSTANCY_TOL, lambda: {"graph": _graph_json(g), "spread": worst}
            )
            _check_copartition_projector(report, g, basis)
        for g in disconnected_complement_corpus(seed, disconnected_count):
            basis = max_eigenspace(g)
            report.prop("disconnected_lambda_max_n").check(
                abs(basis.lambda_max - g.n) <= SPECTRUM_TOL, lambda: {"graph": _graph_json(g)}
            )
            dist = float(np.linalg.norm(basis.projector() - _complement_span_projector(g)))
            report.prop("disconnected_explicit_span").check(
                dist <= PROJECTOR_TOL, lambda: {"graph": _graph_json(g), "distance": dist}
            )
            _check_copartition_projector(report, g, basis)
    return report


def _check_copartition_projector(report, g, basis):
    gp = modular.canonical_partition(g).copartition
    other = max_eigenspace(gp)
    dist = float(np.linalg.norm(basis.projector() - other.projector()))
    report.prop("copartition_same_eigenspace").check(
        dist <= PROJECTOR_TOL, lambda: {"graph": _graph_json(g), "distance": dist}
    )


# -- fibers and orientations on comparability graphs -----------------------

def _states_from_samples(gp: Graph, xs: np.ndarray) -> np.ndarray:
    ends = np.array(gp.edge_list, dtype=int).reshape(-1, 2) - 1
    return np.sign(xs[:, ends[:, 1]] - xs[:, ends[:, 0]]).astype(int)


def _has_proper_connected_module(g: Graph) -> bool:
    for m in modular.enumerate_modules_bruteforce(g):
        if 1 < len(m) < g.n and induced_subgraph(g, m)[0].is_connected():
            return True
    return False


def _check_fiber_structure(report, g, x, cfg, ex):
    """Components of each fiber are connected modules with comparability
    induced subgraphs; tied edges sit inside proper connected modules on
    which ``x`` is constant."""
    labels = fiber_labels(x, cfg)
    for k in set(labels.tolist()):
        fiber = [v for v in g.vertices if labels[v - 1] == k]
        sub, lab = induced_subgraph(g, fiber)
        for comp in connected_components(sub).blocks:
            block = frozenset(lab[v - 1] for v in comp)
            ok = modular.is_module(g, block)
            if ok and len(block) > 1:
                h, _ = induced_subgraph(g, block)
                ok = compar.recognize_bruteforce(h).is_comparability
            report.prop("fiber_components_modules").check(ok, ex)
            if len(block) > 1:
                vals = x[[v - 1 for v in block]]
                report.prop("tied_edge_in_connected_module").check(
                    len(block) < g.n and modular.is_module(g, block)
                    and float(vals.max() - vals.min()) <= CONSTANCY_TOL,
                    ex,
                )


def orientations_suite(seed: int = 0, count: int = 200, samples: int = 10000,
                       detailed_samples: int = 20, cone_samples: int = 1000) -> SuiteReport:
    """Fibers and induced orientations of top-eigenspace samples on
    comparability graphs, and coverage of the spectral orientation routine."""
    report = SuiteReport("orientations")
    cfg = DEFAULT_TOL
    with _timed(report):
        for idx, g in enumerate(comparability_corpus(seed, count)):
            ex = lambda: {"graph": _graph_json(g)}  # noqa: E731
            census = compar.enumerate_transitive_orientations(g)
            census_set = set(census.orientations)
            dec = modular.canonical_partition(g)
            gp = dec.copartition
            basis = max_eigenspace(g)
            blocks = sorted(dec.partition.blocks, key=min)
            n_co = len(connected_components(complement(g)))

            report.prop("dimension_formula").check(
                basis.dim == (1 if n_co == 1 else n_co - 1), ex
            )
            report.prop("census_duality").check(
                all(o.reversed() in census_set for o in census.orientations), ex
            )
            report.prop("two_orientations_iff_prime").check(
                (census.count == 2) == (not _has_proper_connected_module(g)), ex
            )

            xs = sample_ucuv_batch(basis, derive_seed(seed, 30, idx), samples)
            spread = max(
                float(np.max(xs[:, [v - 1 for v in b]].max(axis=1) - xs[:, [v - 1 for v in b]].min(axis=1)))
                for b in blocks
            )
            report.prop("blocks_in_one_fiber").check(spread <= CONSTANCY_TOL, ex)

            ends = np.array(gp.edge_list, dtype=int).reshape(-1, 2) - 1
            gaps = np.abs(xs[:, ends[:, 0]] - xs[:, ends[:, 1]])
            good = np.all(gaps > 10 * cfg.fiber_tol, axis=1)
            report.prop("degenerate_rate_below_1pct").check(float(np.mean(~good)) < 0.01, ex)
            xs_good = xs[good]

            adjacent_pairs = [(a, b) for a, b in combinations(blocks, 2) if completely_adjacent(g, a, b)]
            for x in xs_good[:detailed_samples]:
                labels = fiber_labels(x, cfg)
                report.prop("adjacent_blocks_split").check(
                    all(labels[min(a) - 1] != labels[min(b) - 1] for a, b in adjacent_pairs), ex
                )
                _check_fiber_structure(report, g, x, cfg, ex)
                independent = all(
                    not g.has_edge(i, j) for i, j in g.edge_list if labels[i - 1] == labels[j - 1]
                )
                report.prop("two_orientations_iff_dim1_independent").check(
                    (census.count == 2) == (basis.dim == 1 and independent), ex
                )

            # Every sample lies in the cone of some transitive orientation.
            covered = np.zeros(min(cone_samples, len(xs)), dtype=bool)
            sub = xs[: len(covered)]
            for o in census.orientations:
                t = np.array(o.arcs, dtype=int) - 1
                covered |= np.all(sub[:, t[:, 0]] <= sub[:, t[:, 1]] + cfg.cone_tol, axis=1)
            report.prop("samples_in_transitive_cones").check(bool(covered.all()), ex)

            # Induced orientations of the copartition subgraph: each is
            # transitive, and together they exhaust its transitive orientations.
            patterns = {tuple(r) for r in np.unique(_states_from_samples(gp, xs_good), axis=0)}
            induced = {orientation.PartialOrientation(gp, p) for p in patterns}
            report.prop("induced_copartition_transitive").check(
                all(orientation.is_transitive(gp, o) for o in induced), ex
            )
            gp_census = set(compar.enumerate_transitive_orientations(gp).orientations)
            report.prop("all_copartition_orientations_induced").check(
                induced == gp_census,
                lambda: {"graph": _graph_json(g), "induced": len(induced), "expected": len(gp_census)},
            )

            # Spectral orientation: transitive outputs covering the census.
            seen = set()
            failures = 0
            for s in range(samples):
                try:
                    seen.add(compar.spectral_orient(g, derive_seed(seed, 31, idx, s), cfg))
                except LapmaxError:
                    failures += 1
                if len(seen) == census.count:
                    break
            report.prop("spectral_orient_transitive").check(failures == 0 and seen <= census_set, ex)
            report.prop("spectral_orient_covers_census").check(
                seen == census_set,
                lambda: {"graph": _graph_json(g), "seen": len(seen), "expected": census.count},
            )
    return report


# -- counting ----------------------------------------------------------------

def decomposition_suite(seed: int = 0, count: int = 200, frequency_trials: int = 10000) -> SuiteReport:
    report = SuiteReport("decomposition")
    with _timed(report):
        for g in comparability_corpus(seed, count):
            n_enum = compar.enumerate_transitive_orientations(g).count
            report.prop("decomposition_count_matches").check(
                compar.count_via_decomposition(g) == n_enum, lambda: {"graph": _graph_json(g)}
            )
        named = {"K3": (complete(3), 6), "P3": (path(3), 2), "P4": (path(4), 2), "C5": (cycle(5), 0)}
        for name, (g, expected) in named.items():
            report.prop("named_counts").check(
                compar.enumerate_transitive_orientations(g).count == expected, {"graph": name}
            )
            if expected:
                report.prop("named_decomposition_counts").check(
                    compar.count_via_decomposition(g) == expected, {"graph": name}
                )
            else:
                try:
                    compar.count_via_decomposition(g)
                    rejected = False
                except NotComparabilityError:
                    rejected = True
                report.prop("non_comparability_rejected").check(rejected, {"graph": name})
        for sizes in [(1, 1), (2, 1), (1, 1, 1), (2, 2, 1), (1, 1, 1, 1), (3, 1, 1, 1)]:
            g = complete_multipartite(sizes)
            fact = int(np.prod(range(1, len(sizes) + 1)))
            report.prop("multipartite_p_factorial").check(
                compar.enumerate_transitive_orientations(g).count == fact, {"sizes": list(sizes)}
            )
        p4 = path(4)
        from collections import Counter

        freq = Counter(compar.spectral_orient(p4, s).arcs for s in range(frequency_trials))
        shares = [c / frequency_trials for c in freq.values()]
        report.prop("p4_even_split").check(
            len(freq) == 2 and all(abs(s - 0.5) <= FREQUENCY_TOL for s in shares), {"shares": shares}
        )
    return report


# -- cone invariance ---------------------------------------------------------

def all_connected_graphs(n: int):
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        g = Graph(n, (p for k, p in enumerate(pairs) if mask >> k & 1))
        if g.is_connected():
            yield g


def _check_cone(report, g, o):
    ex = lambda: {"graph": _graph_json(g), "arcs": [list(a) for a in o.arcs]}  # noqa: E731
    transitive = orientation.is_transitive(g, o)
    if transitive:
        report.prop("transitive_implies_acyclic").check(orientation.is_acyclic(o), ex)
    gens = orientation.cone_generators(o)
    report.prop("generator_soundness").check(
        all(orientation.cone_contains(o, v, 0.0) for v in gens.generators), ex
    )
    result = orientation.is_cone_invariant(g, o, 0.0)
    report.prop("invariant_iff_transitive").check(bool(result) == transitive, ex)
    for alpha in (0.5, 1.0, 10.0):
        r = orientation.is_cone_invariant(g, o, alpha)
        report.prop("alpha_independent").check(bool(r) == transitive, ex)
        if not transitive:
            ok = r.principal_of is not None
            if ok:
                pf = induced_principal_filter(o, r.principal_of)
                img = (alpha * np.eye(g.n) + laplacian(g)) @ r.generator
                t, h = r.violated_arc
                ok = pf == frozenset(np.flatnonzero(r.generator) + 1) and img[t - 1] > img[h - 1]
            report.prop("principal_filter_witness").check(ok, ex)


def induced_principal_filter(o, v):
    return orientation.induced_preorder(o).principal_filter(v)


def _random_cone_members(o, rng, count):
    """Points of ``C_O`` from random linear extensions, some with ties."""
    n = o.graph.n
    pred_count = {v: 0 for v in o.graph.vertices}
    for _, h in o.arcs:
        pred_count[h] += 1
    out = np.empty((count, n))
    for k in range(count):
        remaining = dict(pred_count)
        ready = [v for v, c in remaining.items() if c == 0]
        order = []
        while ready:
            v = ready.pop(int(rng.integers(len(ready))))
            order.append(v)
            for w in o.successors[v]:
                remaining[w] -= 1
                if remaining[w] == 0:
                    ready.append(w)
        values = np.sort(rng.standard_normal(n))
        if k % 2:
            values = np.round(values, 1)
        x = np.empty(n)
        for pos, v in enumerate(order):
            x[v - 1] = values[pos]
        out[k] = x
    return out


def cone_suite(seed: int = 0, exhaustive_max_n: int = 5, random_count: int = 50, random_n: int = 6,
               completeness_orientations: int = 20, completeness_points: int = 1000) -> SuiteReport:
    """Cone invariance under ``alpha I + L`` characterizes transitive
    orientations; the up-set generators span the cone."""
    report = SuiteReport("cone")
    with _timed(report):
        for n in range(2, exhaustive_max_n + 1):
            for g in all_connected_graphs(n):
                for o in orientation.acyclic_orientations(g):
                    _check_cone(report, g, o)
        rng = np.random.default_rng(derive_seed(seed, 40))
        for _ in range(random_count):
            g = connected_gnp(random_n, float(rng.choice(DENSITIES)), rng)
            for o in orientation.acyclic_orientations(g):
                _check_cone(report, g, o)
        for _ in range(completeness_orientations):
            g = connected_gnp(int(rng.integers(3, 7)), float(rng.choice(DENSITIES)), rng)
            perm = rng.permutation(g.n)
            o = orientation.PartialOrientation(g, tuple(1 if perm[i - 1] < perm[j - 1] else -1 for i, j in g.edge_list))
            gens = orientation.cone_generators(o).generators
            worst = 0.0
            for x in _random_cone_members(o, rng, completeness_points):
                if orientation.cone_contains(o, x, 0.0):
                    _, dist = nnls(gens.T, x)
                    worst = max(worst, float(dist))
            report.prop("generator_completeness").check(
                worst <= HULL_TOL, lambda: {"graph": _graph_json(g), "distance": worst}
            )
    return report


def run_suite(name: str, seed: int = 0, count: int | None = None) -> list[SuiteReport]:
    """Suites as run by the command line; ``count`` scales corpus sizes."""
    if name == "all":
        return [r for s in SUITES for r in run_suite(s, seed, count)]
    if name == "spectra":
        c = 200 if count is None else count
        return [spectra_suite(seed, c, max(1, c // 2)), partite_suite(seed, 10, max(1, c // 4))]
    if name == "modules":
        return [modules_suite(seed, 100 if count is None else count)]
    if name == "eigenspace":
        c = 100 if count is None else count
        return [eigenspace_suite(seed, c, max(1, c // 2))]
    if name == "orientations":
        return [orientations_suite(seed, 50 if count is None else count, samples=10000)]
    if name == "decomposition":
        return [decomposition_suite(seed, 50 if count is None else count)]
    if name == "cone":
        return [cone_suite(seed, exhaustive_max_n=4, random_count=50 if count is None else count)]
    raise KeyError(name)
