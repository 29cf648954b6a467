"""Catalog of compact convex sets with exact projection and linear minimization.

Every set implements the same oracle contract:

* ``project(x)``    -- Euclidean projection onto the set,
* ``lmo(x)``        -- a point of C minimizing <c, x> (a deterministic
                       selection; ties are broken as documented per set),
* ``constants()``   -- the diameter and norm bound of the set,
* ``contains(x, tol)`` -- membership up to distance tol.

All sets are immutable after construction and their oracles are pure
functions, so instances can be shared freely across threads.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass

import numpy as np

from . import kernels


@dataclass(frozen=True)
class SetConstants:
    """Diameter sup ||c1 - c2|| and norm bound sup ||c|| of a compact set."""

    diameter: float
    norm_bound: float

    def __post_init__(self):
        if not (np.isfinite(self.diameter) and np.isfinite(self.norm_bound)):
            raise ValueError("set constants must be finite (set must be bounded)")
        if self.diameter < 0 or self.norm_bound < 0:
            raise ValueError("set constants must be nonnegative")
        # triangle inequality over the set
        if self.diameter > 2.0 * self.norm_bound + 1e-12 * (1.0 + self.norm_bound):
            raise ValueError("diameter exceeds twice the norm bound")


def check_vector(x, dim, name="x"):
    """Coerce to a finite 1-d float64 array of the given length."""
    x = np.asarray(x, dtype=np.float64)
    if x.ndim != 1:
        raise ValueError(f"{name} must be a 1-d vector, got shape {x.shape}")
    if x.shape[0] != dim:
        raise ValueError(f"{name} has dimension {x.shape[0]}, expected {dim}")
    if not np.all(np.isfinite(x)):
        raise ValueError(f"{name} must have finite entries")
    return x


class ConvexSet(ABC):
    """Oracle contract shared by the whole catalog."""

    dim: int
    has_exact_lmo: bool = True

    @abstractmethod
    def project(self, x: np.ndarray) -> np.ndarray:
        """Euclidean projection of x onto the set."""

    @abstractmethod
    def lmo(self, x: np.ndarray) -> np.ndarray:
        """A minimizer of <c, x> over the set."""

    @abstractmethod
    def constants(self) -> SetConstants:
        """Exact diameter and norm bound."""

    def contains(self, x, tol: float = 0.0) -> bool:
        """True iff dist(x, C) <= tol, computed via the projection."""
        x = check_vector(x, self.dim)
        return float(np.linalg.norm(x - self.project(x))) <= tol


class Box(ConvexSet):
    """Axis-aligned box {x : lower <= x <= upper} (componentwise)."""

    def __init__(self, lower, upper):
        lower = np.atleast_1d(np.asarray(lower, dtype=np.float64))
        upper = check_vector(upper, lower.shape[0], "upper")
        lower = check_vector(lower, lower.shape[0], "lower")
        if np.any(lower > upper):
            raise ValueError("box requires lower <= upper componentwise")
        self.lower = lower
        self.upper = upper
        self.dim = lower.shape[0]

    def __repr__(self):
        return f"Box(lower={self.lower.tolist()}, upper={self.upper.tolist()})"

    def project(self, x):
        x = check_vector(x, self.dim)
        return np.minimum(np.maximum(x, self.lower), self.upper)

    def lmo(self, x):
        # zero coordinates are treated as positive, matching the other sets
        x = check_vector(x, self.dim)
        return np.where(x >= 0, self.lower, self.upper)

    def constants(self):
        mu = float(np.sqrt(np.sum(np.maximum(self.lower**2, self.upper**2))))
        return SetConstants(float(np.linalg.norm(self.upper - self.lower)), mu)

    def vertices(self):
        """All 2^dim corners; guarded to small dimensions."""
        if self.dim > 20:
            raise ValueError("corner enumeration limited to dim <= 20")
        corners = np.empty((2**self.dim, self.dim))
        for i in range(2**self.dim):
            for j in range(self.dim):
                corners[i, j] = self.upper[j] if (i >> j) & 1 else self.lower[j]
        return corners


class Ball2(ConvexSet):
    """Euclidean ball {x : ||x - center|| <= radius}."""

    def __init__(self, center, radius):
        center = np.atleast_1d(np.asarray(center, dtype=np.float64))
        self.center = check_vector(center, center.shape[0], "center")
        self.radius = float(radius)
        if not (self.radius > 0 and np.isfinite(self.radius)):
            raise ValueError("radius must be positive and finite")
        self.dim = self.center.shape[0]

    def __repr__(self):
        return f"Ball2(center={self.center.tolist()}, radius={self.radius})"

    def project(self, x):
        x = check_vector(x, self.dim)
        d = x - self.center
        nd = float(np.linalg.norm(d))
        if nd <= self.radius:
            return x.copy()
        return self.center + (self.radius / nd) * d

    def lmo(self, x):
        x = check_vector(x, self.dim)
        nx = float(np.linalg.norm(x))
        if nx == 0.0:
            out = self.center.copy()
            out[0] -= self.radius
            return out
        return self.center - (self.radius / nx) * x

    def constants(self):
        return SetConstants(
            2.0 * self.radius, float(np.linalg.norm(self.center)) + self.radius
        )


class Ball1(ConvexSet):
    """l1 ball {x : sum |x_i| <= radius} centered at the origin."""

    def __init__(self, radius, dim):
        self.radius = float(radius)
        self.dim = int(dim)
        if not (self.radius > 0 and np.isfinite(self.radius)):
            raise ValueError("radius must be positive and finite")
        if self.dim < 1:
            raise ValueError("dim must be >= 1")

    def __repr__(self):
        return f"Ball1(radius={self.radius}, dim={self.dim})"

    def project(self, x):
        x = check_vector(x, self.dim)
        return kernels.project_l1(x, self.radius)

    def lmo(self, x):
        # lowest index wins at ties of |x_i|; the zero direction maps to
        # -radius * e_1 (sign of 0 treated as +1)
        x = check_vector(x, self.dim)
        k = int(np.argmax(np.abs(x)))
        out = np.zeros(self.dim)
        out[k] = -self.radius if x[k] >= 0 else self.radius
        return out

    def constants(self):
        return SetConstants(2.0 * self.radius, self.radius)

    def vertices(self):
        """The 2*dim signed scaled basis vectors."""
        eye = self.radius * np.eye(self.dim)
        return np.concatenate([eye, -eye], axis=0)


class BallInf(ConvexSet):
    """l-infinity ball {x : max |x_i| <= radius} centered at the origin."""

    def __init__(self, radius, dim):
        self.radius = float(radius)
        self.dim = int(dim)
        if not (self.radius > 0 and np.isfinite(self.radius)):
            raise ValueError("radius must be positive and finite")
        if self.dim < 1:
            raise ValueError("dim must be >= 1")

    def __repr__(self):
        return f"BallInf(radius={self.radius}, dim={self.dim})"

    def project(self, x):
        x = check_vector(x, self.dim)
        return np.minimum(np.maximum(x, -self.radius), self.radius)

    def lmo(self, x):
        # coordinatewise -radius * sign(x_i), with sign(0) taken as +1
        x = check_vector(x, self.dim)
        return np.where(x >= 0, -self.radius, self.radius)

    def constants(self):
        root = float(np.sqrt(self.dim))
        return SetConstants(2.0 * self.radius * root, self.radius * root)

    def vertices(self):
        return Box(
            np.full(self.dim, -self.radius), np.full(self.dim, self.radius)
        ).vertices()


class Simplex(ConvexSet):
    """Probability simplex {x : x >= 0, sum x = 1}."""

    def __init__(self, dim):
        self.dim = int(dim)
        if self.dim < 1:
            raise ValueError("dim must be >= 1")

    def __repr__(self):
        return f"Simplex(dim={self.dim})"

    def project(self, x):
        x = check_vector(x, self.dim)
        return kernels.project_simplex(x, 1.0)

    def lmo(self, x):
        x = check_vector(x, self.dim)
        out = np.zeros(self.dim)
        out[int(np.argmin(x))] = 1.0
        return out

    def constants(self):
        return SetConstants(np.sqrt(2.0) if self.dim > 1 else 0.0, 1.0)

    def vertices(self):
        return np.eye(self.dim)


class PolytopeV(ConvexSet):
    """Convex hull of an explicit vertex list (V-representation).

    Projection has no closed form here; it is computed by the Wolfe
    minimum-norm-point kernel, with the optimality certificate
    max_v <x - p, v - p> <= tol * (1 + ||x||) checked over all vertices.
    """

    # stop tolerance passed to the MNP kernel, relative to the input scale
    mnp_tol = 1e-12

    def __init__(self, vertices):
        V = np.asarray(vertices, dtype=np.float64)
        if V.ndim != 2 or V.shape[0] < 1:
            raise ValueError("vertices must be a nonempty (m, dim) array")
        if not np.all(np.isfinite(V)):
            raise ValueError("vertices must have finite entries")
        self.vertex_array = V
        self.dim = V.shape[1]

    def __repr__(self):
        m, n = self.vertex_array.shape
        return f"PolytopeV({m} vertices, dim={n})"

    def project(self, x):
        x = check_vector(x, self.dim)
        V = self.vertex_array
        tol_stop = self.mnp_tol * (1.0 + float(np.linalg.norm(x)))
        max_iter = 100 * (self.dim + V.shape[0])
        alpha, converged, _, _, _ = kernels.wolfe_tilted(V, -x, tol_stop, max_iter)
        if not converged:
            raise RuntimeError("minimum-norm-point projection did not converge")
        return alpha @ V

    def lmo(self, x):
        x = check_vector(x, self.dim)
        return self.vertex_array[int(np.argmin(self.vertex_array @ x))].copy()

    def constants(self):
        V = self.vertex_array
        diff = V[:, None, :] - V[None, :, :]
        diam = float(np.sqrt((diff**2).sum(axis=2).max()))
        mu = float(np.sqrt((V**2).sum(axis=1).max()))
        return SetConstants(diam, mu)

    def vertices(self):
        return self.vertex_array.copy()


class Singleton(ConvexSet):
    """One-point set {point}; both oracles are constant."""

    def __init__(self, point):
        point = np.atleast_1d(np.asarray(point, dtype=np.float64))
        self.point = check_vector(point, point.shape[0], "point")
        self.dim = self.point.shape[0]

    def __repr__(self):
        return f"Singleton(point={self.point.tolist()})"

    def project(self, x):
        check_vector(x, self.dim)
        return self.point.copy()

    def lmo(self, x):
        check_vector(x, self.dim)
        return self.point.copy()

    def constants(self):
        return SetConstants(0.0, float(np.linalg.norm(self.point)))


class ProjectionOnly(ConvexSet):
    """Wrapper hiding the exact LMO of a set, leaving only the projection.

    Used to exercise code paths that must work for sets whose linear
    minimizer is unavailable (error bounds then fall back to the norm
    bound and are flagged as relaxed).
    """

    has_exact_lmo = False

    def __init__(self, inner: ConvexSet):
        self.inner = inner
        self.dim = inner.dim

    def __repr__(self):
        return f"ProjectionOnly({self.inner!r})"

    def project(self, x):
        return self.inner.project(x)

    def lmo(self, x):
        raise NotImplementedError("this set exposes no exact linear minimizer")

    def constants(self):
        return self.inner.constants()


CATALOG_KINDS = ("box", "ball2", "ball1", "ballinf", "simplex", "polytope", "singleton")
