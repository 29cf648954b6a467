"""Hot numeric kernels.

Every kernel exists in two flavours: the plain function ``_name`` (pure
numpy, used as the fallback backend and by the backend-equivalence tests)
and the module-level ``name``, which is the numba-compiled version when the
numba backend is active.  ``benchmarks/bench_kernels.py`` compares the two.

All kernels are pure functions of their arguments and release the GIL under
numba, so they are safe to call from multiple threads.
"""

import numpy as np

from ._backend import jit_kernel


def _project_simplex(x, radius):
    """Project x onto {p : p >= 0, sum(p) = radius} by sort and threshold."""
    n = x.shape[0]
    u = np.sort(x)[::-1]
    css = np.cumsum(u)
    rho = 0
    for j in range(n):
        if u[j] * (j + 1) > css[j] - radius:
            rho = j
    tau = (css[rho] - radius) / (rho + 1)
    return np.maximum(x - tau, 0.0)


project_simplex = jit_kernel(_project_simplex)


def _project_l1(x, radius):
    """Project x onto the l1 ball of the given radius centered at 0."""
    if np.sum(np.abs(x)) <= radius:
        return x.copy()
    mag = project_simplex(np.abs(x), radius)
    return np.sign(x) * mag


project_l1 = jit_kernel(_project_l1)


def _wolfe_tilted(V, tilt, tol_stop, max_iter):
    """Minimize 0.5*||p||^2 + <tilt, p> over p in conv(rows of V).

    This is Wolfe's minimum-norm-point method (major cycles add the vertex
    that most improves the linearized objective, minor cycles solve the
    affine subproblem on the active set and prune negative weights).  Up to
    an additive constant the objective equals 0.5*||p - (-tilt)||^2, so the
    minimizer is the projection of -tilt onto the hull; keeping the tilt as
    a separate linear term preserves accuracy when ||tilt|| is huge (the
    active-set Gram matrix only ever contains vertex inner products).

    Stops when max_i <p + tilt, p - v_i> <= tol_stop, the hull-restricted
    projection optimality certificate.  Returns (weights over all m rows,
    converged flag, iterations used, objective log per major cycle, number
    of logged entries).  converged is False only when max_iter is hit.
    """
    m = V.shape[0]
    Vt = V @ tilt

    best = 0
    bestval = 0.5 * (V[0] @ V[0]) + Vt[0]
    for i in range(1, m):
        val = 0.5 * (V[i] @ V[i]) + Vt[i]
        if val < bestval:
            bestval = val
            best = i

    active = np.empty(m, np.int64)
    active[0] = best
    k = 1
    w = np.zeros(m)
    w[0] = 1.0
    p = V[best].copy()

    obj_log = np.empty(max_iter + 1)
    obj_log[0] = bestval
    n_log = 1

    converged = False
    iters = 0
    while iters < max_iter:
        iters += 1
        s = V @ p + Vt
        pobj = p @ p + p @ tilt
        jmin = np.argmin(s)
        if pobj - s[jmin] <= tol_stop:
            converged = True
            break
        already = False
        for i in range(k):
            if active[i] == jmin:
                already = True
        if already:
            # cannot make progress by re-adding an active vertex; treat as
            # a stall and let the caller see converged=False via max_iter
            iters = max_iter
            break
        active[k] = jmin
        w[k] = 0.0
        k += 1

        while iters < max_iter:
            iters += 1
            # affine minimizer over the active set:
            #   min 0.5 a'Ga + b'a  s.t.  sum(a) = 1
            # via the bordered KKT system [[G, 1], [1', 0]] [a; mu] = [-b; 1],
            # solved by least squares so that affinely dependent active sets
            # (duplicate or degenerate vertices) stay finite instead of
            # blowing up; the minor cycle then prunes them.
            M = np.zeros((k + 1, k + 1))
            rhs = np.empty(k + 1)
            for i in range(k):
                vi = V[active[i]]
                rhs[i] = -Vt[active[i]]
                for j in range(i, k):
                    gij = vi @ V[active[j]]
                    M[i, j] = gij
                    M[j, i] = gij
                M[i, k] = 1.0
                M[k, i] = 1.0
            rhs[k] = 1.0
            a = np.linalg.lstsq(M, rhs, rcond=-1.0)[0][:k]
            if a.min() > 0.0:
                w[:k] = a
                break
            theta = 1.0
            for i in range(k):
                if a[i] <= 0.0 and w[i] - a[i] > 0.0:
                    th = w[i] / (w[i] - a[i])
                    if th < theta:
                        theta = th
            for i in range(k):
                w[i] = (1.0 - theta) * w[i] + theta * a[i]
            i = 0
            dropped = False
            while i < k:
                if w[i] <= 1e-13 and k > 1:
                    for j in range(i, k - 1):
                        active[j] = active[j + 1]
                        w[j] = w[j + 1]
                    k -= 1
                    dropped = True
                else:
                    i += 1
            if not dropped:
                kill = 0
                amin = a[0]
                for i in range(1, k):
                    if a[i] < amin:
                        amin = a[i]
                        kill = i
                if k > 1:
                    for j in range(kill, k - 1):
                        active[j] = active[j + 1]
                        w[j] = w[j + 1]
                    k -= 1

        ssum = 0.0
        for i in range(k):
            ssum += w[i]
        for i in range(k):
            w[i] /= ssum
        p[:] = 0.0
        for i in range(k):
            p += w[i] * V[active[i]]
        obj_log[n_log] = 0.5 * (p @ p) + p @ tilt
        n_log += 1

    alpha = np.zeros(m)
    for i in range(k):
        alpha[active[i]] += w[i]
    return alpha, converged, iters, obj_log, n_log


wolfe_tilted = jit_kernel(_wolfe_tilted)


def warmup():
    """Trigger JIT compilation of all kernels (no-op on the numpy backend)."""
    x = np.array([0.3, -0.2, 0.8])
    project_simplex(x, 1.0)
    project_l1(x, 1.0)
    V = np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]])
    wolfe_tilted(V, np.array([-1.0, -1.0]), 1e-10, 100)
