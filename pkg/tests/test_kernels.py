import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from projlmo import kernels
from projlmo._backend import NUMBA_ENABLED

from oracles import hull_project_bruteforce, l1_project_bisect, simplex_project_bruteforce


def finite_vectors(max_dim=8, scale=10.0):
    return st.integers(1, max_dim).flatmap(
        lambda n: arrays(
            np.float64,
            n,
            elements=st.floats(-scale, scale, allow_nan=False, allow_infinity=False),
        )
    )


class TestSimplexProjection:
    def test_threshold_example(self):
        p = kernels.project_simplex(np.array([0.8, 0.4]), 1.0)
        # expected value frozen from the support-enumeration oracle
        assert simplex_project_bruteforce(np.array([0.8, 0.4])) == pytest.approx(
            [0.7, 0.3], abs=1e-15
        )
        np.testing.assert_allclose(p, [0.7, 0.3], atol=1e-15)

    @given(x=finite_vectors())
    @settings(max_examples=150, deadline=None)
    def test_matches_bruteforce(self, x):
        fast = kernels.project_simplex(x, 1.0)
        ref = simplex_project_bruteforce(x, 1.0)
        assert np.linalg.norm(fast - ref) <= 1e-10 * (1 + np.linalg.norm(x))

    @given(x=finite_vectors(), radius=st.floats(0.1, 5.0))
    @settings(max_examples=100, deadline=None)
    def test_feasible(self, x, radius):
        p = kernels.project_simplex(x, radius)
        assert p.min() >= 0.0
        assert p.sum() == pytest.approx(radius, abs=1e-12 * (1 + radius))


class TestL1Projection:
    def test_inside_is_fixed(self):
        x = np.array([0.2, -0.3, 0.1])
        np.testing.assert_array_equal(kernels.project_l1(x, 1.0), x)

    @given(x=finite_vectors(), radius=st.floats(0.1, 5.0))
    @settings(max_examples=150, deadline=None)
    def test_matches_bisection(self, x, radius):
        fast = kernels.project_l1(x, radius)
        ref = l1_project_bisect(x, radius)
        assert np.linalg.norm(fast - ref) <= 1e-9 * (1 + np.linalg.norm(x))
        assert np.abs(fast).sum() <= radius + 1e-12 * (1 + radius)


class TestWolfeTilted:
    def test_matches_bruteforce(self):
        rng = np.random.default_rng(42)
        for _ in range(300):
            n = int(rng.integers(1, 6))
            m = int(rng.integers(1, 9))
            V = rng.normal(size=(m, n))
            z = rng.normal(size=n) * 2.0
            tol = 1e-12 * (1 + np.linalg.norm(z))
            alpha, converged, _, _, _ = kernels.wolfe_tilted(V, -z, tol, 100 * (n + m))
            assert converged
            assert alpha.min() >= 0.0
            assert alpha.sum() == pytest.approx(1.0, abs=1e-12)
            ref = hull_project_bruteforce(V, z)
            assert np.linalg.norm(alpha @ V - ref) <= 1e-9

    def test_objective_trace_nonincreasing(self):
        rng = np.random.default_rng(7)
        for _ in range(100):
            n = int(rng.integers(1, 7))
            m = int(rng.integers(2, 13))
            V = rng.normal(size=(m, n))
            tilt = rng.normal(size=n)
            _, converged, _, log, n_log = kernels.wolfe_tilted(
                V, tilt, 1e-10 * (1 + np.linalg.norm(tilt)), 100 * (n + m)
            )
            assert converged
            diffs = np.diff(log[:n_log])
            assert np.all(diffs <= 1e-12)

    def test_exact_at_huge_tilt(self):
        # the tilt enters only through inner products, so scales up to 1e18
        # must still land exactly on the minimizing vertex set
        rng = np.random.default_rng(3)
        for _ in range(200):
            n = int(rng.integers(1, 7))
            m = int(rng.integers(2, 13))
            V = rng.normal(size=(m, n))
            x = rng.normal(size=n)
            lam = 10.0 ** rng.uniform(6, 18)
            tilt = lam * x
            tol = 1e-10 * (1 + lam * np.linalg.norm(x))
            alpha, converged, _, _, _ = kernels.wolfe_tilted(V, tilt, tol, 100 * (n + m))
            assert converged
            gap = alpha @ V @ x - (V @ x).min()
            assert gap <= 1e-9 * (1 + np.linalg.norm(x))

    def test_duplicate_vertices(self):
        V = np.array([[1.0, 0.0], [1.0, 0.0], [0.0, 1.0], [0.0, 1.0]])
        alpha, converged, _, _, _ = kernels.wolfe_tilted(
            V, np.zeros(2), 1e-10, 1000
        )
        assert converged
        np.testing.assert_allclose(alpha @ V, [0.5, 0.5], atol=1e-9)

    def test_single_vertex(self):
        V = np.array([[2.0, 2.0]])
        alpha, converged, iters, _, _ = kernels.wolfe_tilted(V, np.zeros(2), 1e-10, 10)
        assert converged and alpha[0] == 1.0


class TestBackendEquivalence:
    """The plain-numpy fallback must agree with the jitted kernels."""

    def test_simplex(self):
        rng = np.random.default_rng(0)
        for _ in range(50):
            x = rng.normal(size=int(rng.integers(1, 10))) * 3
            a = kernels.project_simplex(x, 1.0)
            b = kernels._project_simplex(x, 1.0)
            np.testing.assert_array_equal(a, b)

    def test_l1(self):
        rng = np.random.default_rng(1)
        for _ in range(50):
            x = rng.normal(size=int(rng.integers(1, 10))) * 3
            a = kernels.project_l1(x, 1.2)
            b = kernels._project_l1(x, 1.2)
            np.testing.assert_array_equal(a, b)

    def test_wolfe(self):
        rng = np.random.default_rng(2)
        for _ in range(50):
            n = int(rng.integers(1, 6))
            m = int(rng.integers(1, 10))
            V = rng.normal(size=(m, n))
            tilt = rng.normal(size=n)
            a = kernels.wolfe_tilted(V, tilt, 1e-10, 100 * (n + m))
            b = kernels._wolfe_tilted(V, tilt, 1e-10, 100 * (n + m))
            assert a[1] == b[1] and a[2] == b[2]
            assert np.max(np.abs(a[0] - b[0])) <= 1e-14

    def test_backend_flag_is_consistent(self):
        if NUMBA_ENABLED:
            assert kernels.project_simplex is not kernels._project_simplex
        else:
            assert kernels.project_simplex is kernels._project_simplex
