"""Projection onto V-representation polytopes via Wolfe's minimum-norm-point
algorithm, plus the minimal-norm-element oracle used by the exactness search.

The heavy lifting lives in :func:`projlmo.kernels.wolfe_tilted`; this module
validates inputs, fixes default tolerances, and packages results.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .sets import check_vector


@dataclass(frozen=True)
class MnpResult:
    """Outcome of a hull projection.

    point is the convex combination weights @ vertices; weights are
    nonnegative and sum to one, certifying hull membership.  converged is
    False only when the iteration budget ran out (the result is then the
    best point found, never silently wrong).  objective_trace holds the
    value of the minimized objective after each major cycle and is
    nonincreasing for a converged run.
    """

    point: np.ndarray
    weights: np.ndarray
    converged: bool
    iterations: int
    objective_trace: np.ndarray


def _check_vertices(vertices):
    V = np.asarray(vertices, dtype=np.float64)
    if V.ndim != 2 or V.shape[0] < 1:
        raise ValueError("vertices must be a nonempty (m, dim) array")
    if not np.all(np.isfinite(V)):
        raise ValueError("vertices must have finite entries")
    return V


def tilted_min_norm(vertices, tilt, tol: float = 1e-10, max_iter: int | None = None):
    """Minimize 0.5*||p||^2 + <tilt, p> over the convex hull of the vertices.

    Equivalently, project -tilt onto the hull.  The tilt enters only through
    inner products with the vertices, so ||tilt|| may be astronomically
    large without hurting accuracy.  The stopping certificate is
    max_v <p + tilt, p - v> <= tol * (1 + ||tilt||).
    """
    V = _check_vertices(vertices)
    tilt = check_vector(tilt, V.shape[1], "tilt")
    if not tol > 0:
        raise ValueError("tol must be positive")
    if max_iter is None:
        max_iter = 100 * (V.shape[1] + V.shape[0])
    tol_stop = tol * (1.0 + float(np.linalg.norm(tilt)))
    alpha, converged, iters, obj_log, n_log = kernels.wolfe_tilted(
        V, tilt, tol_stop, max_iter
    )
    return MnpResult(alpha @ V, alpha, bool(converged), int(iters), obj_log[:n_log].copy())


def mnp_project(vertices, x, tol: float = 1e-10, max_iter: int | None = None):
    """Project x onto conv(vertices).

    On convergence the returned point p satisfies the vertex-wise optimality
    certificate max_v <x - p, v - p> <= tol * (1 + ||x||), which by
    convexity certifies optimality over the whole hull.
    """
    V = _check_vertices(vertices)
    x = check_vector(x, V.shape[1])
    return tilted_min_norm(V, -x, tol=tol, max_iter=max_iter)


def min_norm_point(vertices, tol: float = 1e-10, max_iter: int | None = None):
    """The element of conv(vertices) closest to the origin."""
    V = _check_vertices(vertices)
    return tilted_min_norm(V, np.zeros(V.shape[1]), tol=tol, max_iter=max_iter)
