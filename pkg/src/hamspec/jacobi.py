"""Cyclic Jacobi eigenvalue iteration for dense real symmetric matrices.

A sweep visits every off-diagonal pair once using the round-robin (circle)
ordering: each of the ``n - 1`` rounds rotates ``n / 2`` disjoint pairs at
once. The working matrix is kept permuted so that the pairs of the current
round sit at positions ``(i, h + i)``. Rotating rows and columns then touches
contiguous memory only, and moving to the next round's pairing is a shift of
row and column segments that is folded into the same pass.

Odd orders are padded with one decoupled zero row/column; its pair is always
skipped (the off-diagonal entry is exactly zero), so it never mixes with the
real entries and is dropped from the output.
"""

from __future__ import annotations

import numba
import numpy as np

from .errors import ConvergenceFailure, NonSymmetric

SYMMETRY_TOL = 1e-12


@numba.njit(cache=True)
def _shifted(src, h, n):
    # circle method: position 0 is fixed, the rest rotate one step
    if src == 0:
        return 0
    if src < h - 1:
        return src + 1
    if src == h - 1:
        return n - 1
    if src == h:
        return 1
    return src - 1


@numba.njit(cache=True)
def _round(a, b, cs, sn, tp, tq, h, n):
    for i in range(h):
        c = cs[i]
        s = sn[i]
        p = i
        q = h + i
        for k in range(n):
            x = a[p, k]
            y = a[q, k]
            tp[k] = c * x - s * y
            tq[k] = s * x + c * y
        for j in range(h):
            cj = cs[j]
            sj = sn[j]
            x = tp[j]
            y = tp[h + j]
            tp[j] = cj * x - sj * y
            tp[h + j] = sj * x + cj * y
            x = tq[j]
            y = tq[h + j]
            tq[j] = cj * x - sj * y
            tq[h + j] = sj * x + cj * y
        for side in range(2):
            if side == 0:
                r = tp
                row = b[_shifted(p, h, n)]
            else:
                r = tq
                row = b[_shifted(q, h, n)]
            row[0] = r[0]
            if h == 1:
                row[1] = r[1]
                continue
            row[1] = r[h]
            for k in range(1, h - 1):
                row[k + 1] = r[k]
            row[n - 1] = r[h - 1]
            for k in range(h + 1, n):
                row[k - 1] = r[k]


@numba.njit(cache=True)
def _off_norm(a):
    n = a.shape[0]
    off = 0.0
    for i in range(n):
        for j in range(n):
            if i != j:
                off += a[i, j] * a[i, j]
    return np.sqrt(off)


@numba.njit(cache=True)
def _jacobi(a0, tol, max_sweeps):
    n0 = a0.shape[0]
    n = n0 + (n0 % 2)
    h = n // 2
    a = np.zeros((n, n))
    a[:n0, :n0] = a0
    b = np.empty((n, n))
    label = np.arange(n)
    relabel = np.empty(n, np.int64)
    target = tol * np.sqrt(np.sum(a * a))
    cs = np.empty(h)
    sn = np.empty(h)
    tp = np.empty(n)
    tq = np.empty(n)
    sweeps = 0
    converged = False
    while True:
        if _off_norm(a) <= target:
            converged = True
            break
        if sweeps == max_sweeps:
            break
        for _ in range(n - 1):
            for i in range(h):
                p = i
                q = h + i
                apq = a[p, q]
                app = a[p, p]
                aqq = a[q, q]
                g = 100.0 * abs(apq)
                if abs(app) + g == abs(app) and abs(aqq) + g == abs(aqq):
                    # negligible at working precision
                    a[p, q] = 0.0
                    a[q, p] = 0.0
                    cs[i] = 1.0
                    sn[i] = 0.0
                    continue
                theta = (aqq - app) / (2.0 * apq)
                if theta >= 0.0:
                    t = 1.0 / (theta + np.sqrt(theta * theta + 1.0))
                else:
                    t = -1.0 / (-theta + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                cs[i] = c
                sn[i] = t * c
            _round(a, b, cs, sn, tp, tq, h, n)
            a, b = b, a
            for k in range(n):
                relabel[_shifted(k, h, n)] = label[k]
            label, relabel = relabel, label
        sweeps += 1
    diag = np.empty(n0)
    j = 0
    for k in range(n):
        if label[k] < n0:
            diag[j] = a[k, k]
            j += 1
    return diag, sweeps, converged


def jacobi_eigenvalues(matrix, tol: float = 1e-12, max_sweeps: int = 100):
    """Eigenvalues of a real symmetric matrix, ascending.

    Converged when the off-diagonal Frobenius norm is at most ``tol`` times
    the full Frobenius norm. Returns ``(eigenvalues, sweeps)``.

    Raises NonSymmetric if any ``|a_ij - a_ji| > 1e-12`` and
    ConvergenceFailure if ``max_sweeps`` sweeps do not reach the tolerance.
    """
    a = np.array(matrix, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NonSymmetric(f"expected a square matrix, got shape {a.shape}")
    if a.shape[0] == 0:
        return np.empty(0), 0
    asym = np.max(np.abs(a - a.T))
    if asym > SYMMETRY_TOL:
        raise NonSymmetric(f"max |a_ij - a_ji| = {asym:.3e}")
    # exact symmetrization removes sub-tolerance noise before rotating
    a = 0.5 * (a + a.T)
    diag, sweeps, converged = _jacobi(a, float(tol), int(max_sweeps))
    if not converged:
        raise ConvergenceFailure(f"off-diagonal norm above tolerance after {sweeps} sweeps")
    return np.sort(diag), sweeps
