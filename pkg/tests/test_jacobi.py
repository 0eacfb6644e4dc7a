import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qdist.jacobi import (
    ConvergenceError,
    SymmetryError,
    eigenvalues_sym,
    interlacing_check,
    jacobi_batch,
    weyl_check,
)
from qdist.graphs import complete_graph, cycle_graph, disjoint_union, path_graph
from qdist.spectral import q_float


def test_diagonal_matrix():
    s = eigenvalues_sym(np.diag([3.0, -1.0, 7.0]))
    assert s.values == (7.0, 3.0, -1.0)
    assert s.residual <= 1e-12 * (1 + np.sqrt(59))


def test_complete_graph_spectrum():
    s = eigenvalues_sym(q_float(complete_graph(4)))
    assert np.allclose(s.values, [6, 2, 2, 2], atol=1e-9)


def test_cycle_spectrum_values():
    s = eigenvalues_sym(q_float(cycle_graph(5)))
    expect = sorted((2 + 2 * math.cos(2 * math.pi * j / 5) for j in range(5)), reverse=True)
    assert np.allclose(s.values, expect, atol=1e-9)


def test_residual_bound_holds():
    rng = np.random.default_rng(7)
    for _ in range(20):
        n = rng.integers(2, 10)
        A = rng.normal(size=(n, n))
        A = A + A.T
        s = eigenvalues_sym(A)
        assert s.residual <= 1e-12 * (1 + np.linalg.norm(A))
        assert abs(sum(s.values) - np.trace(A)) <= 1e-9 * n


def test_matches_lapack():
    rng = np.random.default_rng(11)
    A = rng.normal(size=(64, 8, 8))
    A = A + A.transpose(0, 2, 1)
    vals, res = jacobi_batch(A)
    ref = np.linalg.eigvalsh(A)[:, ::-1]
    assert np.abs(vals - ref).max() < 1e-10
    assert (res <= 1e-12 * (1 + np.linalg.norm(A, axis=(1, 2)))).all()


def test_rejects_asymmetric():
    with pytest.raises(SymmetryError):
        eigenvalues_sym([[0.0, 1.0], [0.5, 0.0]])
    with pytest.raises(SymmetryError):
        eigenvalues_sym([[1.0, 2.0, 3.0]])


def test_empty_and_single():
    assert eigenvalues_sym(np.zeros((0, 0))).values == ()
    assert eigenvalues_sym([[5.0]]).values == (5.0,)


def test_union_spectrum_is_multiset_union():
    g, h = cycle_graph(4), path_graph(3)
    u = disjoint_union(g, h)
    su = sorted(eigenvalues_sym(q_float(u)).values)
    parts = sorted(list(eigenvalues_sym(q_float(g)).values) + list(eigenvalues_sym(q_float(h)).values))
    assert np.allclose(su, parts, atol=1e-9)


def test_gershgorin_window():
    rng = np.random.default_rng(3)
    for _ in range(25):
        n = int(rng.integers(2, 9))
        mask = rng.random((n, n)) < 0.5
        A = np.triu(mask, 1).astype(float)
        A = A + A.T
        A[np.arange(n), np.arange(n)] = A.sum(axis=1)
        s = eigenvalues_sym(A)
        assert s.values[0] <= 2 * n - 2 + 1e-9
        assert s.values[-1] >= -1e-9


def test_weyl_identity_case():
    ok, (lhs, ra, rb) = weyl_check(np.eye(3), np.eye(3), 1, 1)
    assert ok and lhs == pytest.approx(2.0) and ra == rb == pytest.approx(1.0)


def test_weyl_on_graph_matrices():
    A = q_float(path_graph(4))
    B = np.diag([1.0, 2.0, 2.0, 1.0])
    ok, witness = weyl_check(A, B, 2, 1)
    assert ok
    with pytest.raises(IndexError):
        weyl_check(A, B, 4, 2)


@given(st.integers(0, 10_000), st.integers(2, 8))
@settings(max_examples=80, deadline=None)
def test_weyl_random_pairs(seed, n):
    rng = np.random.default_rng(seed)
    A = rng.normal(size=(n, n))
    A = A + A.T
    B = rng.normal(size=(n, n))
    B = B + B.T
    for i in range(1, n + 1):
        for j in range(1, n + 2 - i):
            ok, _ = weyl_check(A, B, i, j)
            assert ok


def test_interlacing_known():
    M = q_float(complete_graph(3))
    ok, witness = interlacing_check(M, [0, 1])
    assert ok
    # B = [[2,1],[1,2]] has eigenvalues {3,1}, interlacing {4,1,1}
    assert witness[0][1] == pytest.approx(3.0, abs=1e-9)
    assert witness[1][1] == pytest.approx(1.0, abs=1e-9)


def test_interlacing_full_subset_is_equality():
    M = q_float(cycle_graph(5))
    ok, witness = interlacing_check(M, range(5))
    assert ok
    for lo, mid, hi in witness:
        assert lo == pytest.approx(mid, abs=1e-9)


def test_interlacing_errors():
    with pytest.raises(ValueError):
        interlacing_check(np.eye(3), [])
    with pytest.raises(IndexError):
        interlacing_check(np.eye(3), [5])


@given(st.integers(0, 10_000), st.integers(2, 8))
@settings(max_examples=80, deadline=None)
def test_interlacing_random(seed, n):
    rng = np.random.default_rng(seed)
    M = rng.normal(size=(n, n))
    M = M + M.T
    rows = sorted(rng.choice(n, size=int(rng.integers(1, n + 1)), replace=False))
    ok, _ = interlacing_check(M, rows)
    assert ok


def test_nonconvergence_is_reported():
    with pytest.raises(ConvergenceError):
        jacobi_batch(np.array([[[0.0, 1.0], [1.0, 0.0]]]), max_sweeps=0)
