"""Laplacian eigendecomposition and the top eigenspace.

The eigensolver is a cyclic Jacobi iteration. Everything downstream
(sampling unit vectors of the top eigenspace, fibers, induced
orientations) works on plain numpy arrays indexed by ``vertex - 1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DisconnectedGraphError, InputError, NumericalError
from .graph import Graph, Partition, laplacian


@dataclass(frozen=True)
class ToleranceConfig:
    eig_group_tol: float = 1e-8
    fiber_tol: float = 1e-6
    cone_tol: float = 1e-9
    jacobi_sweep_tol: float = 1e-12
    max_sweeps: int = 100

    def __post_init__(self):
        for name in ("eig_group_tol", "fiber_tol", "cone_tol", "jacobi_sweep_tol", "max_sweeps"):
            value = getattr(self, name)
            if not value > 0:
                raise InputError(f"{name} must be strictly positive, got {value}")

    def as_dict(self) -> dict:
        return {
            "eig_group_tol": self.eig_group_tol,
            "fiber_tol": self.fiber_tol,
            "cone_tol": self.cone_tol,
            "jacobi_sweep_tol": self.jacobi_sweep_tol,
            "max_sweeps": self.max_sweeps,
        }


DEFAULT_TOL = ToleranceConfig()


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Ascending eigenvalues; ``eigenvectors[k]`` pairs with ``eigenvalues[k]``."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray  # shape (n, n), one eigenvector per row

    @property
    def n(self) -> int:
        return len(self.eigenvalues)

    @property
    def lambda_max(self) -> float:
        return float(self.eigenvalues[-1])


@dataclass(frozen=True, eq=False)
class EigenspaceBasis:
    n: int
    vectors: np.ndarray  # shape (dim, n), orthonormal rows
    lambda_max: float

    @property
    def dim(self) -> int:
        return self.vectors.shape[0]

    def projector(self) -> np.ndarray:
        return self.vectors.T @ self.vectors


def _off_diagonal_norm(a: np.ndarray) -> float:
    return math.sqrt(2.0 * float(np.sum(np.triu(a, 1) ** 2)))


def jacobi_eigh(m: np.ndarray, sweep_tol: float = 1e-12, max_sweeps: int = 100):
    """Cyclic Jacobi for a symmetric matrix.

    Returns ``(eigenvalues, V)`` with ``m = V diag(eigenvalues) V^T``,
    unsorted. Raises NumericalError if the off-diagonal mass does not
    fall below ``sweep_tol * ||m||_F`` within ``max_sweeps`` sweeps.
    """
    a = np.array(m, dtype=float)
    n = a.shape[0]
    v = np.eye(n)
    threshold = sweep_tol * float(np.linalg.norm(a))
    for _ in range(max_sweeps + 1):
        if _off_diagonal_norm(a) <= threshold:
            return np.diag(a).copy(), v
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                h = a[q, q] - a[p, p]
                if abs(apq) < 1e-36 * abs(h):
                    t = apq / h
                else:
                    theta = h / (2.0 * apq)
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q]
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :]
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
                vp = v[:, p].copy()
                vq = v[:, q]
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    raise NumericalError(f"Jacobi iteration did not converge in {max_sweeps} sweeps")


def eigendecompose(m: np.ndarray, cfg: ToleranceConfig = DEFAULT_TOL) -> Spectrum:
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise InputError("eigendecompose needs a square matrix")
    if m.size and np.max(np.abs(m - m.T)) > 1e-12:
        raise InputError("matrix is not symmetric")
    values, vecs = jacobi_eigh(m, cfg.jacobi_sweep_tol, cfg.max_sweeps)
    order = np.argsort(values, kind="stable")
    return Spectrum(values[order], vecs[:, order].T.copy())


def top_eigenspace(s: Spectrum, g: Graph, cfg: ToleranceConfig = DEFAULT_TOL) -> EigenspaceBasis:
    """Orthonormal basis of the eigenspace of the largest eigenvalue."""
    if g.n < 2:
        raise InputError("top eigenspace needs at least two vertices")
    if not g.is_connected():
        raise DisconnectedGraphError("top eigenspace requires a connected graph")
    lam = s.lambda_max
    keep = lam - s.eigenvalues <= cfg.eig_group_tol * max(1.0, lam)
    vectors = s.eigenvectors[keep]
    # Strip any drift into the all-ones direction, then re-orthonormalize.
    vectors = vectors - vectors.mean(axis=1, keepdims=True)
    q, _ = np.linalg.qr(vectors.T)
    return EigenspaceBasis(g.n, q.T.copy(), lam)


@lru_cache(maxsize=4096)
def max_eigenspace(g: Graph, cfg: ToleranceConfig = DEFAULT_TOL) -> EigenspaceBasis:
    """Cached ``top_eigenspace(eigendecompose(laplacian(g)), g)``."""
    return top_eigenspace(eigendecompose(laplacian(g), cfg), g, cfg)


def sample_ucuv(basis: EigenspaceBasis, seed: int) -> np.ndarray:
    """Uniform random unit vector in the span of ``basis``.

    Standard Gaussian coefficients on the orthonormal basis, normalized.
    """
    if basis.dim == 0:
        raise InputError("cannot sample from an empty basis")
    coeffs = np.random.default_rng(seed).standard_normal(basis.dim)
    x = coeffs @ basis.vectors
    return x / np.linalg.norm(x)


def sample_ucuv_batch(basis: EigenspaceBasis, seed: int, count: int) -> np.ndarray:
    """``count`` independent uniform unit vectors (rows) from one generator."""
    coeffs = np.random.default_rng(seed).standard_normal((count, basis.dim))
    xs = coeffs @ basis.vectors
    return xs / np.linalg.norm(xs, axis=1, keepdims=True)


def derive_seed(*parts: int) -> int:
    """Deterministic 63-bit seed from a tuple of non-negative integers."""
    words = np.random.SeedSequence([int(p) for p in parts]).generate_state(2, np.uint32)
    return (int(words[0]) << 31) ^ int(words[1])


@dataclass(frozen=True, eq=False)
class Fibers:
    """Level sets of a vector, listed by ascending value."""

    partition: Partition
    values: tuple[float, ...]

    @property
    def blocks(self):
        return self.partition.blocks

    def __iter__(self):
        return iter(zip(self.values, self.partition.blocks))

    def __len__(self):
        return len(self.values)


def fibers(x, cfg: ToleranceConfig = DEFAULT_TOL) -> Fibers:
    """Sorted-gap clustering: cut wherever consecutive sorted values
    differ by more than ``fiber_tol``."""
    x = np.asarray(x, dtype=float)
    if x.ndim != 1 or len(x) == 0:
        raise InputError("fibers need a nonempty vector")
    order = np.argsort(x, kind="stable")
    groups: list[list[int]] = [[int(order[0])]]
    for a, b in zip(order[:-1], order[1:]):
        if x[b] - x[a] > cfg.fiber_tol:
            groups.append([])
        groups[-1].append(int(b))
    blocks = [[k + 1 for k in grp] for grp in groups]
    values = tuple(float(sum(x[k] for k in grp) / len(grp)) for grp in groups)
    return Fibers(Partition(len(x), blocks), values)


def fiber_labels(x, cfg: ToleranceConfig = DEFAULT_TOL) -> np.ndarray:
    """Fiber index of every vertex (0 for the lowest fiber)."""
    labels = np.empty(len(x), dtype=int)
    for k, (_, block) in enumerate(fibers(x, cfg)):
        for v in block:
            labels[v - 1] = k
    return labels


def induce_orientation(g: Graph, x, cfg: ToleranceConfig = DEFAULT_TOL):
    """Orient each edge towards the larger entry of ``x``.

    Edges whose endpoints share a fiber stay unoriented, so ties are
    decided exactly as ``fibers`` decides them.
    """
    from .orientation import PartialOrientation

    x = np.asarray(x, dtype=float)
    if len(x) != g.n:
        raise InputError(f"vector has {len(x)} entries for a graph on {g.n} vertices")
    if g.n == 0:
        return PartialOrientation(g, ())
    labels = fiber_labels(x, cfg)
    states = []
    for i, j in g.edge_list:
        li, lj = labels[i - 1], labels[j - 1]
        states.append(0 if li == lj else (1 if li < lj else -1))
    return PartialOrientation(g, tuple(states))
