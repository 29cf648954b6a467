"""Randomized invariant suites shared by the verify command and the tests.

Each check draws fresh inputs per trial from a generator derived from
(seed, check index, trial index) and reports a violation value: slack used
beyond the allowed tolerance, so any positive value is a failure.  Results
are aggregated with max/counts only, which makes reports byte-identical no
matter how trials are scheduled across threads.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .instances import direction_with_distinct_scores, random_direction, rng_for
from .lmo import (
    approx_lmo,
    approx_lmo_with_lambda,
    cert_tol,
    duality_gap,
    lambda_star_search,
    projection_lmo_identity,
)
from .mnp import mnp_project
from .sets import Box, ConvexSet, PolytopeV, Simplex


@dataclass(frozen=True)
class CheckOutcome:
    name: str
    trials: int
    failures: int
    worst_slack: float
    skipped: bool = False
    reason: str = ""

    @property
    def passed(self) -> bool:
        return self.skipped or self.failures == 0


@dataclass(frozen=True)
class Check:
    name: str
    trial: Callable[[ConvexSet, np.random.Generator], float]
    applies: Callable[[ConvexSet], bool] = staticmethod(lambda s: True)
    skip_reason: str = ""


def _norm(v) -> float:
    return float(np.linalg.norm(v))


def _projection_optimality(s, rng):
    x = random_direction(rng, s.dim)
    p = s.project(x)
    w = s.lmo(p - x)
    value = float((x - p) @ (w - p))
    return value - cert_tol(_norm(x), s.constants().norm_bound)


def _lmo_optimality(s, rng):
    x = random_direction(rng, s.dim)
    v = s.lmo(x)
    w = s.lmo(x)
    value = float(-x @ (w - v))
    return value - cert_tol(_norm(x), s.constants().norm_bound)


def _idempotence(s, rng):
    x = random_direction(rng, s.dim)
    p = s.project(x)
    return _norm(s.project(p) - p) - 1e-12 * (1.0 + _norm(x))


def _nonexpansive(s, rng):
    x = random_direction(rng, s.dim)
    y = random_direction(rng, s.dim)
    lhs = _norm(s.project(x) - s.project(y))
    return lhs - _norm(x - y) - 1e-12 * (1.0 + _norm(x) + _norm(y))


def _membership(s, rng):
    x = random_direction(rng, s.dim)
    mu = s.constants().norm_bound
    tol = cert_tol(0.0, mu)
    worst = -tol
    for point in (s.project(x), s.lmo(x)) if s.has_exact_lmo else (s.project(x),):
        dist = _norm(point - s.project(point))
        worst = max(worst, dist - tol)
    return worst


def _identity(s, rng):
    x = random_direction(rng, s.dim)
    cert = projection_lmo_identity(s, x)
    return cert.gap - cert_tol(_norm(x), s.constants().norm_bound)


def _two_sided(s, rng):
    x = random_direction(rng, s.dim)
    lam = 10.0 ** rng.uniform(-3.0, 6.0)
    result = approx_lmo_with_lambda(s, x, lam)
    # the gap computation already enforces gap >= -tol; check the upper side
    tol = cert_tol(_norm(x), s.constants().norm_bound)
    return result.certificate.gap - result.certificate.bound - tol


def _norm_domination(s, rng):
    x = random_direction(rng, s.dim)
    lam = 10.0 ** rng.uniform(-3.0, 6.0)
    p = s.project(-lam * x)
    v = s.lmo(x)
    return _norm(p) - _norm(v) - cert_tol(_norm(x), s.constants().norm_bound)


def _epsilon_guarantee(s, rng):
    x = random_direction(rng, s.dim)
    eps = 10.0 ** rng.uniform(-6.0, 0.0)
    result = approx_lmo(s, x, eps)
    tol = cert_tol(_norm(x), s.constants().norm_bound)
    return result.certificate.gap - eps - tol


def _mnp_agreement(s, rng):
    x = random_direction(rng, s.dim)
    res = mnp_project(s.vertices(), x)
    if not res.converged:
        return np.inf
    return _norm(res.point - s.project(x)) - 10.0 * 1e-10 * (1.0 + _norm(x))


def _lambda_star(s, rng):
    x = direction_with_distinct_scores(rng, s)
    result = lambda_star_search(s, x)
    if not (result.converged and result.min_norm_match):
        return np.inf
    return -1.0


def _vertex_enumeration(s, rng):
    x = random_direction(rng, s.dim)
    weights = rng.uniform(0.0, 1.0, size=s.vertex_array.shape[0])
    weights /= weights.sum()
    candidate = weights @ s.vertex_array
    via_lmo = duality_gap(s, candidate, x)
    # independent selection: explicit first-minimum scan over the vertices
    best = 0
    best_score = float(s.vertex_array[0] @ x)
    for i in range(1, s.vertex_array.shape[0]):
        score = float(s.vertex_array[i] @ x)
        if score < best_score:
            best_score = score
            best = i
    brute = max(float((candidate - s.vertex_array[best]) @ x), 0.0)
    return abs(via_lmo - brute)  # exact equality required: any difference fails


def _has_lmo(s):
    return s.has_exact_lmo


def _small_corner_count(s):
    return isinstance(s, Simplex) or (isinstance(s, Box) and s.dim <= 8)


ALL_CHECKS = (
    Check("projection-optimality", _projection_optimality, _has_lmo),
    Check("lmo-optimality", _lmo_optimality, _has_lmo),
    Check("projection-idempotent", _idempotence),
    Check("projection-nonexpansive", _nonexpansive),
    Check("oracle-membership", _membership),
    Check("proj-lmo-identity", _identity, _has_lmo),
    Check("gap-two-sided", _two_sided, _has_lmo),
    Check("norm-domination", _norm_domination, _has_lmo),
    Check("epsilon-guarantee", _epsilon_guarantee, _has_lmo),
    Check(
        "mnp-agreement",
        _mnp_agreement,
        _small_corner_count,
        "simplex and small boxes only",
    ),
    Check(
        "lambda-star-exactness",
        _lambda_star,
        lambda s: isinstance(s, PolytopeV),
        "polytope sets only",
    ),
    Check(
        "vertex-enum-gap-equivalence",
        _vertex_enumeration,
        lambda s: isinstance(s, PolytopeV),
        "polytope sets only",
    ),
)


def run_checks(
    s: ConvexSet, seed: int, trials: int, jobs: int = 1
) -> list[CheckOutcome]:
    """Run every applicable invariant suite against one set.

    Trials are independent and may execute in parallel; per-trial
    generators depend only on (seed, check, trial) so the outcome does not.
    """
    outcomes = []
    for ci, check in enumerate(ALL_CHECKS):
        if not check.applies(s):
            outcomes.append(
                CheckOutcome(check.name, 0, 0, 0.0, True, check.skip_reason)
            )
            continue

        def one_trial(t, ci=ci, check=check):
            return float(check.trial(s, rng_for(seed, ci, t)))

        if jobs > 1:
            with ThreadPoolExecutor(max_workers=jobs) as pool:
                violations = list(pool.map(one_trial, range(trials)))
        else:
            violations = [one_trial(t) for t in range(trials)]
        failures = sum(1 for v in violations if v > 0)
        outcomes.append(
            CheckOutcome(check.name, trials, failures, max(violations))
        )
    return outcomes
