"""Approximate linear minimization through a single projection.

For a compact convex set C with diameter delta and norm bound mu, the point
``project(-lam * x)`` satisfies

    0 <= <p, x> - min_c <c, x> <= ||p|| * (||v|| - ||p||) / lam

for every exact minimizer v, and choosing

    lam = min(delta * mu, mu**2) / epsilon

makes the right-hand side at most epsilon.  This module computes the
approximate oracle together with two-sided certificates of those
inequalities, checks the projection/LMO fixed-point identity, and, for
polytopes, searches for a finite scale at which the projection becomes an
exact linear minimizer and coincides with the minimal-norm element of the
optimal face.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .mnp import min_norm_point, tilted_min_norm
from .sets import ConvexSet, PolytopeV, SetConstants, check_vector

# positive floor for the scale parameter when the error bound is identically
# zero (degenerate sets); any positive value is then valid
LAMBDA_MIN = 1e-12


def cert_tol(x_scale: float, norm_bound: float, base: float = 1e-9) -> float:
    """Absolute certificate tolerance at the scale of the inputs.

    Floating point forces a scale-aware slack on inequalities that hold
    exactly in real arithmetic; base * (1 + ||x||) * (1 + mu_C) is used
    throughout.
    """
    return base * (1.0 + x_scale) * (1.0 + norm_bound)


@dataclass(frozen=True)
class GapCertificate:
    """Linear-objective gap of a candidate point in a given direction.

    gap = <point, direction> - min_c <c, direction>; it is None when the set
    exposes no exact minimizer to compute the min against.  bound, when
    present, is the projection-based upper bound ||p||(||v|| - ||p||)/lam;
    relaxed marks bounds where the norm bound mu_C stood in for ||v||.
    """

    point: np.ndarray
    direction: np.ndarray
    gap: float | None
    bound: float | None = None
    lam: float | None = None
    relaxed: bool = False


@dataclass(frozen=True)
class ApproxLmoResult:
    """Output of the projection-based approximate linear minimizer.

    epsilon is the linear-objective error target implied by lam (for the
    explicit-lam variant it is min(delta*mu, mu^2)/lam).
    """

    point: np.ndarray
    lam: float
    epsilon: float
    certificate: GapCertificate


@dataclass(frozen=True)
class LambdaStarResult:
    """Outcome of the finite-scale exactness search on a polytope."""

    lambda_star: float
    point: np.ndarray
    exactness_gap: float
    min_norm_match: bool
    converged: bool
    search_iterations: int


def choose_lambda(constants: SetConstants, epsilon: float) -> float:
    """Smallest scale guaranteeing an epsilon-approximate linear minimizer.

    Returns min(diameter * norm_bound, norm_bound**2) / epsilon, floored at
    LAMBDA_MIN when the numerator vanishes.
    """
    if not epsilon > 0:
        raise ValueError("epsilon must be positive")
    mu = constants.norm_bound
    num = min(constants.diameter * mu, mu * mu)
    return max(num / epsilon, LAMBDA_MIN)


def duality_gap(s: ConvexSet, candidate, x, tol: float | None = None) -> float:
    """<candidate, x> - min_c <c, x>, clamped at zero within tolerance.

    candidate must belong to the set (within tol); the gap is undefined off
    the set.  Requires an exact linear minimizer.
    """
    candidate = check_vector(candidate, s.dim, "candidate")
    x = check_vector(x, s.dim)
    mu = s.constants().norm_bound
    if tol is None:
        tol = cert_tol(float(np.linalg.norm(candidate)), mu)
    if not s.contains(candidate, tol):
        raise ValueError("candidate lies outside the set beyond tolerance")
    v = s.lmo(x)
    raw = float((candidate - v) @ x)
    neg_tol = cert_tol(float(np.linalg.norm(x)), mu)
    if raw < -neg_tol:
        raise ArithmeticError(
            f"candidate beats the exact linear minimizer by {-raw:.3e}; "
            "the oracle is inconsistent"
        )
    return max(raw, 0.0)


def approx_lmo_with_lambda(s: ConvexSet, x, lam: float) -> ApproxLmoResult:
    """Approximate linear minimizer project(-lam * x) for an explicit scale.

    The certificate carries both sides of the two-sided inequality: the gap
    against the exact minimizer (when available) and the upper bound
    ||p|| * (||v|| - ||p||) / lam.  Without an exact minimizer the bound
    substitutes mu_C for ||v|| (valid since ||v|| <= mu_C) and is flagged
    relaxed; the gap is then unknown (None).
    """
    x = check_vector(x, s.dim)
    if not (lam > 0 and np.isfinite(lam)):
        raise ValueError("lam must be positive and finite")
    constants = s.constants()
    mu = constants.norm_bound
    p = s.project(-lam * x)
    pnorm = float(np.linalg.norm(p))
    if s.has_exact_lmo:
        v = s.lmo(x)
        vnorm = float(np.linalg.norm(v))
        raw = float((p - v) @ x)
        if raw < -cert_tol(float(np.linalg.norm(x)), mu):
            raise ArithmeticError("projection point beats the exact minimizer")
        gap = max(raw, 0.0)
        relaxed = False
    else:
        vnorm = mu
        gap = None
        relaxed = True
    bound = max(pnorm * (vnorm - pnorm) / lam, 0.0)
    num = min(constants.diameter * mu, mu * mu)
    cert = GapCertificate(
        point=p, direction=x, gap=gap, bound=bound, lam=lam, relaxed=relaxed
    )
    return ApproxLmoResult(point=p, lam=lam, epsilon=num / lam, certificate=cert)


def approx_lmo(s: ConvexSet, x, epsilon: float) -> ApproxLmoResult:
    """Epsilon-approximate linear minimizer via one projection.

    Uses the default scale rule; the returned point is feasible and its gap
    is guaranteed to be at most epsilon (up to floating-point slack).
    """
    lam = choose_lambda(s.constants(), epsilon)
    result = approx_lmo_with_lambda(s, x, lam)
    return ApproxLmoResult(
        point=result.point,
        lam=lam,
        epsilon=float(epsilon),
        certificate=result.certificate,
    )


def projection_lmo_identity(s: ConvexSet, x) -> GapCertificate:
    """Certificate that project(x) linearly minimizes direction project(x) - x.

    The gap is zero (within tolerance) for every x and every nonempty
    compact convex set.
    """
    x = check_vector(x, s.dim)
    p = s.project(x)
    z = p - x
    gap = duality_gap(s, p, z)
    return GapCertificate(point=p, direction=z, gap=gap)


def lambda_star_search(
    s: PolytopeV,
    x,
    tol_exact: float | None = None,
    lambda0: float = 1.0,
    max_doublings: int = 64,
    match_tol: float = 1e-7,
) -> LambdaStarResult:
    """Find a finite scale at which the projection is an exact minimizer.

    Doubles lam starting from lambda0 until the gap of project(-lam * x)
    drops to tol_exact (default cert_tol(||x||, mu_C)).  On success the
    certified point is compared against the minimal-norm element of the
    optimal face (the convex hull of the vertices attaining the minimum);
    min_norm_match reports whether they coincide within match_tol.

    Exhausting the doubling budget yields converged=False with the best
    scale found; existence of a finite exact scale is guaranteed for
    polytopes but its magnitude is not known in advance.
    """
    if not isinstance(s, PolytopeV):
        raise ValueError("the exactness search requires a V-representation polytope")
    x = check_vector(x, s.dim)
    if not (lambda0 > 0 and np.isfinite(lambda0)):
        raise ValueError("lambda0 must be positive and finite")
    if max_doublings < 0:
        raise ValueError("max_doublings must be nonnegative")
    V = s.vertex_array
    mu = s.constants().norm_bound
    xnorm = float(np.linalg.norm(x))
    if tol_exact is None:
        tol_exact = cert_tol(xnorm, mu)

    scores = V @ x
    vmin = float(scores.min())

    lam = float(lambda0)
    best_lam, best_gap, best_point = lam, np.inf, V[0]
    converged = False
    iterations = 0
    for _ in range(max_doublings + 1):
        iterations += 1
        res = tilted_min_norm(V, lam * x, tol=PolytopeV.mnp_tol)
        p = res.point
        gap = max(float(p @ x) - vmin, 0.0)
        if gap < best_gap:
            best_lam, best_gap, best_point = lam, gap, p
        if gap <= tol_exact:
            converged = True
            break
        lam *= 2.0

    match = False
    if converged:
        face_tol = cert_tol(xnorm, mu, base=1e-12)
        face = V[scores <= vmin + face_tol]
        mn = min_norm_point(face, tol=PolytopeV.mnp_tol)
        match = float(np.linalg.norm(best_point - mn.point)) <= match_tol
    return LambdaStarResult(
        lambda_star=best_lam,
        point=best_point,
        exactness_gap=best_gap,
        min_norm_match=match,
        converged=converged,
        search_iterations=iterations,
    )
