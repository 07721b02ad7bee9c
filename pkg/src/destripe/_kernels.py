"""Hot kernels for the total-variation objective and its gradient.

Two interchangeable backends: numba-compiled stencil loops (default) and a
vectorized pure-numpy path. Set ``DESTRIPE_NUMBA=0`` in the environment
before import to force the numpy path; it is also used automatically when
numba is unavailable. Both backends are deterministic run to run; across
backends results can differ by a few ulps (different summation order).

``benchmarks/bench_tv.py`` times the two against each other.
"""

import math
import os

import numpy as np

__all__ = ["tv_value", "tv_gradient", "ACTIVE_BACKEND"]


def tv_value_numpy(img: np.ndarray, eps: float) -> float:
    dx = np.zeros_like(img)
    dy = np.zeros_like(img)
    dx[:, :-1] = img[:, 1:] - img[:, :-1]
    dy[:-1, :] = img[1:, :] - img[:-1, :]
    # subtracting sqrt(eps) per term before summing makes flat images score
    # exactly 0
    return float(np.sum(np.sqrt(dx * dx + dy * dy + eps) - math.sqrt(eps)))


def tv_gradient_numpy(img: np.ndarray, eps: float) -> np.ndarray:
    dx = np.zeros_like(img)
    dy = np.zeros_like(img)
    dx[:, :-1] = img[:, 1:] - img[:, :-1]
    dy[:-1, :] = img[1:, :] - img[:-1, :]
    inv_t = 1.0 / np.sqrt(dx * dx + dy * dy + eps)
    grad = -(dx + dy) * inv_t
    grad[:, 1:] += dx[:, :-1] * inv_t[:, :-1]
    grad[1:, :] += dy[:-1, :] * inv_t[:-1, :]
    return grad


def _want_numba() -> bool:
    return os.environ.get("DESTRIPE_NUMBA", "1").lower() not in ("0", "false", "no")


try:
    from numba import njit

    @njit(cache=True)
    def tv_value_numba(img, eps):
        h, w = img.shape
        sqrt_eps = math.sqrt(eps)
        total = 0.0
        for i in range(h):
            for j in range(w):
                dx = img[i, j + 1] - img[i, j] if j + 1 < w else 0.0
                dy = img[i + 1, j] - img[i, j] if i + 1 < h else 0.0
                total += math.sqrt(dx * dx + dy * dy + eps) - sqrt_eps
        return total

    @njit(cache=True)
    def tv_gradient_numba(img, eps):
        h, w = img.shape
        grad = np.zeros((h, w), dtype=np.float64)
        for i in range(h):
            for j in range(w):
                dx = img[i, j + 1] - img[i, j] if j + 1 < w else 0.0
                dy = img[i + 1, j] - img[i, j] if i + 1 < h else 0.0
                inv_t = 1.0 / math.sqrt(dx * dx + dy * dy + eps)
                grad[i, j] -= (dx + dy) * inv_t
                if j + 1 < w:
                    grad[i, j + 1] += dx * inv_t
                if i + 1 < h:
                    grad[i + 1, j] += dy * inv_t
        return grad

    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False

if HAVE_NUMBA and _want_numba():
    ACTIVE_BACKEND = "numba"
    tv_value = tv_value_numba
    tv_gradient = tv_gradient_numba
else:
    ACTIVE_BACKEND = "numpy"
    tv_value = tv_value_numpy
    tv_gradient = tv_gradient_numpy
