"""Frank-Wolfe solver driven by the projection-based approximate oracle.

The objective is restricted to convex quadratics 0.5 * ||z - target||^2 so
the constrained minimizer has a ground truth, project(target), against
which oracle quality can be judged.  Steps use exact line search on the
quadratic, clipped to [0, 1], which removes step-size noise from the
oracle comparison.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .lmo import choose_lambda
from .sets import ConvexSet, check_vector


def harmonic_epsilon(c: float = 1.0) -> Callable[[int], float]:
    """Schedule eps_k = c / (k + 2)."""
    return lambda k: c / (k + 2.0)


def constant_epsilon(c: float) -> Callable[[int], float]:
    """Schedule eps_k = c."""
    return lambda k: c


@dataclass(frozen=True)
class FwProblem:
    """Minimize 0.5*||z - target||^2 over the set.

    epsilon_schedule maps the iteration counter to the oracle accuracy
    eps_k; None selects the exact linear minimizer instead.
    """

    set: ConvexSet
    target: np.ndarray
    epsilon_schedule: Callable[[int], float] | None = None

    def __post_init__(self):
        object.__setattr__(
            self, "target", check_vector(self.target, self.set.dim, "target")
        )

    def objective(self, z) -> float:
        d = z - self.target
        return 0.5 * float(d @ d)


@dataclass
class FwTrace:
    """Per-iteration log: objective, gap estimate <g, z - v>, eps used."""

    iterations: list[int] = field(default_factory=list)
    objectives: list[float] = field(default_factory=list)
    gap_estimates: list[float] = field(default_factory=list)
    epsilons: list[float] = field(default_factory=list)

    def append(self, k, obj, gap_est, eps):
        self.iterations.append(k)
        self.objectives.append(obj)
        self.gap_estimates.append(gap_est)
        self.epsilons.append(eps)


@dataclass(frozen=True)
class FwResult:
    point: np.ndarray
    trace: FwTrace
    converged: bool


def fw_solve(problem: FwProblem, max_iter: int = 10_000, stop_gap: float = 1e-10):
    """Run the conditional-gradient loop.

    Every iterate is a convex combination of oracle outputs and hence
    feasible.  Stops once gap_estimate + eps_k <= stop_gap (a certified
    bound on the primal suboptimality of the quadratic); exhausting
    max_iter returns the last iterate with converged=False.  With the exact
    oracle the recorded gap estimate itself upper-bounds the primal gap at
    every iteration.
    """
    if not stop_gap > 0:
        raise ValueError("stop_gap must be positive")
    if max_iter < 1:
        raise ValueError("max_iter must be >= 1")
    s = problem.set
    schedule = problem.epsilon_schedule
    constants = s.constants()
    exact = schedule is None
    if exact and not s.has_exact_lmo:
        raise ValueError("exact-oracle mode needs a set with an exact minimizer")

    zero = np.zeros(s.dim)
    z = s.lmo(zero) if s.has_exact_lmo else s.project(zero)
    trace = FwTrace()
    converged = False
    for k in range(max_iter):
        g = z - problem.target
        if exact:
            eps_k = 0.0
            v = s.lmo(g)
        else:
            eps_k = float(schedule(k))
            lam = choose_lambda(constants, eps_k)
            v = s.project(-lam * g)
        d = v - z
        gap_est = float(-(g @ d))
        trace.append(k, problem.objective(z), gap_est, eps_k)
        if gap_est + eps_k <= stop_gap:
            converged = True
            break
        dd = float(d @ d)
        if dd > 0.0 and gap_est > 0.0:
            gamma = min(1.0, gap_est / dd)
            z = z + gamma * d
    return FwResult(point=z, trace=trace, converged=converged)
