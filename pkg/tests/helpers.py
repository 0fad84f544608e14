"""Shared test oracles."""

import math

import mpmath
import numpy as np


def norm_check(wf):
    """Full-line integral of |psi|^2 by tanh-sinh quadrature, region by region.

    Independent of the Gauss-Kronrod normalization done at construction.
    """
    pts = [0.0] + wf.boundaries + [wf.z_max]
    total = 0.0
    for a, b in zip(pts, pts[1:]):
        label = wf.region_labels(0.5 * (a + b))
        total += float(mpmath.quad(lambda t: float(wf.branch(label, float(t))) ** 2, [a, b]))
    return 2 * total


def jacobi_eigenvalues(a, sweeps=50):
    """Cyclic Jacobi rotations; independent of LAPACK."""
    a = np.array(a, dtype=float)
    n = a.shape[0]
    for _ in range(sweeps):
        off = np.sqrt(np.sum(np.tril(a, -1) ** 2))
        if off < 1e-14 * np.linalg.norm(a):
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if a[p, q] == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2 * a[p, q])
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1))
                c = 1 / math.sqrt(t * t + 1)
                s = t * c
                ap, aq = a[:, p].copy(), a[:, q].copy()
                a[:, p], a[:, q] = c * ap - s * aq, s * ap + c * aq
                ap, aq = a[p, :].copy(), a[q, :].copy()
                a[p, :], a[q, :] = c * ap - s * aq, s * ap + c * aq
    return np.sort(np.diag(a))


_GL_X, _GL_W = np.polynomial.legendre.leggauss(200)


def quadrature_matrix(pot, z_c, size):
    """Brute-force Gauss-Legendre matrix of the potential in the sine basis.

    Each half of the box gets its own rule because the double well has a kink
    at the centre.
    """
    idx = np.arange(1, size + 1)
    out = np.zeros((size, size))
    for a, b in ((0.0, z_c / 2), (z_c / 2, z_c)):
        z = 0.5 * (b - a) * _GL_X + 0.5 * (a + b)
        basis = np.sin(np.outer(idx, z) * np.pi / z_c)
        out += 0.5 * (b - a) * (basis * (_GL_W * pot(z - z_c / 2))) @ basis.T
    return 2 / z_c * out
