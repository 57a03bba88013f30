import math

import numpy as np
import pytest

from lapmax.corpus import complete, complete_multipartite, path
from lapmax.errors import DisconnectedGraphError, InputError
from lapmax.graph import Graph, Partition, laplacian
from lapmax.orientation import UNORIENTED
from lapmax.spectral import (
    DEFAULT_TOL,
    EigenspaceBasis,
    ToleranceConfig,
    derive_seed,
    eigendecompose,
    fibers,
    induce_orientation,
    jacobi_eigh,
    max_eigenspace,
    sample_ucuv,
)


def symmetric_3x3_roots(m):
    """Eigenvalues of a real symmetric 3x3 matrix by the trigonometric
    solution of its characteristic cubic."""
    m = np.asarray(m, dtype=float)
    q = np.trace(m) / 3
    p1 = m[0, 1] ** 2 + m[0, 2] ** 2 + m[1, 2] ** 2
    p2 = sum((m[k, k] - q) ** 2 for k in range(3)) + 2 * p1
    p = math.sqrt(p2 / 6)
    b = (m - q * np.eye(3)) / p
    r = max(-1.0, min(1.0, np.linalg.det(b) / 2))
    phi = math.acos(r) / 3
    hi = q + 2 * p * math.cos(phi)
    lo = q + 2 * p * math.cos(phi + 2 * math.pi / 3)
    return sorted([lo, 3 * q - hi - lo, hi])


def test_closed_form_oracle_is_sane():
    assert symmetric_3x3_roots(np.diag([3.0, 1.0, 2.0])) == pytest.approx([1, 2, 3])


def test_eigenvalues_k2(k2):
    np.testing.assert_allclose(eigendecompose(laplacian(k2)).eigenvalues, [0, 2], atol=1e-12)


def test_eigenvalues_p3_match_closed_form(p3):
    got = eigendecompose(laplacian(p3)).eigenvalues
    np.testing.assert_allclose(got, symmetric_3x3_roots(laplacian(p3)), atol=1e-10)
    np.testing.assert_allclose(got, [0, 1, 3], atol=1e-10)


def test_eigenvalues_k22():
    k22 = complete_multipartite([2, 2])
    np.testing.assert_allclose(eigendecompose(laplacian(k22)).eigenvalues, [0, 2, 2, 4], atol=1e-10)


def test_jacobi_reconstructs():
    rng = np.random.default_rng(3)
    a = rng.standard_normal((7, 7))
    a = a + a.T
    w, v = jacobi_eigh(a)
    np.testing.assert_allclose(v @ np.diag(w) @ v.T, a, atol=1e-10)
    np.testing.assert_allclose(v.T @ v, np.eye(7), atol=1e-12)
    np.testing.assert_allclose(np.sort(w), np.linalg.eigvalsh(a), atol=1e-10)


def test_eigendecompose_rejects_asymmetric():
    with pytest.raises(InputError):
        eigendecompose(np.array([[0.0, 1.0], [0.0, 0.0]]))


def test_top_eigenspace_examples(k3, p3, p4):
    b = max_eigenspace(k3)
    assert b.dim == 2 and b.lambda_max == pytest.approx(3.0, abs=1e-10)
    b = max_eigenspace(p3)
    assert b.dim == 1
    v = np.array([1.0, -2.0, 1.0]) / math.sqrt(6)
    assert abs(float(b.vectors[0] @ v)) == pytest.approx(1.0, abs=1e-12)
    assert max_eigenspace(p4).dim == 1


def test_top_eigenspace_rejects_bad_input():
    with pytest.raises(DisconnectedGraphError):
        max_eigenspace(Graph(3, [(1, 2)]))
    with pytest.raises(InputError):
        max_eigenspace(Graph(1))


def test_sample_on_a_line_is_plus_minus_basis(p3):
    b = max_eigenspace(p3)
    for seed in range(20):
        x = sample_ucuv(b, seed)
        assert min(np.linalg.norm(x - b.vectors[0]), np.linalg.norm(x + b.vectors[0])) < 1e-12


def test_sample_k3_properties(k3):
    b = max_eigenspace(k3)
    x0, x1 = sample_ucuv(b, 0), sample_ucuv(b, 1)
    assert not np.allclose(x0, x1)
    for x in (x0, x1):
        assert abs(x.sum()) < 1e-8
        assert np.linalg.norm(x) == pytest.approx(1.0, abs=1e-12)


def test_sample_is_deterministic(k3):
    b = max_eigenspace(k3)
    np.testing.assert_array_equal(sample_ucuv(b, 42), sample_ucuv(b, 42))


def test_sample_rejects_empty_basis():
    with pytest.raises(InputError):
        sample_ucuv(EigenspaceBasis(3, np.zeros((0, 3)), 0.0), 0)


def test_derive_seed_is_stable_and_distinct():
    assert derive_seed(1, 2) == derive_seed(1, 2)
    assert derive_seed(1, 2) != derive_seed(2, 1)
    assert 0 <= derive_seed(5) < 2**63


def test_fibers_examples():
    f = fibers([1.0, -2.0, 1.0])
    assert f.partition == Partition(3, [[2], [1, 3]])
    assert f.values == (-2.0, 1.0)
    assert sorted(f.partition.blocks[0]) == [2]
    assert len(fibers([0.3, 0.3, 0.3])) == 1
    assert len(fibers([0.0, 0.5, 1.0], ToleranceConfig(fiber_tol=1e-6))) == 3


def test_fibers_merge_within_tolerance():
    assert len(fibers([0.0, 5e-7, 2.0])) == 2


def test_induce_orientation_examples(p3, k2):
    o = induce_orientation(p3, np.array([1.0, -2.0, 1.0]) / math.sqrt(6))
    assert set(o.arcs) == {(2, 1), (2, 3)}
    o = induce_orientation(k2, np.array([-1.0, 1.0]) / math.sqrt(2))
    assert o.arcs == ((1, 2),)
    o = induce_orientation(complete(4), np.full(4, 0.5))
    assert all(s == UNORIENTED for s in o.states)


def test_tolerances_must_be_positive():
    with pytest.raises(InputError):
        ToleranceConfig(fiber_tol=0.0)
    assert DEFAULT_TOL.as_dict()["eig_group_tol"] == 1e-8
