"""Data-constrained TV minimization.

The solver alternates two moves, starting from the observed image:

1. Data-constraint projection: replace every kept (measured) Fourier
   coefficient of the running image with the observed one; coefficients
   inside the deleted wedge stay free.
2. TV gradient descent: ``tv_steps`` steps of size ``dtvg = alpha * dp``
   along the normalized TV gradient, where ``dp`` is the Euclidean distance
   the projection just moved the image. Coupling the TV step to the
   projection distance makes ``alpha ~ 0.1`` meaningful at any intensity
   scale; on the first iteration the projection is a no-op (the start point
   already satisfies the constraint), so ``dp`` seeds from the Euclidean
   norm of the component the wedge deleted.

A final projection guarantees the output's kept coefficients equal the
observed ones exactly (up to FFT round-off) no matter where the loop
stopped: noise and structure outside the wedge are returned untouched.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .errors import DivergenceError, InvalidInputError, ShapeMismatchError
from .fourier import as_image
from .tv import DEFAULT_EPSILON
from .wedge import WedgeSpec, apply_mask, build_mask

__all__ = ["ReconParams", "ReconTrace", "project_data_constraint", "reconstruct", "residual"]

_GRAD_NORM_FLOOR = 1e-12


@dataclass(frozen=True)
class ReconParams:
    """Solver parameters.

    alpha: TV step size as a fraction of the projection distance, (0, 1].
    iterations: outer loop count.
    tv_steps: gradient-descent steps per outer iteration.
    positivity: clamp negatives after each projection (off by default;
        intensity offsets vary and contrast-reversed data is common).
    stop_rel_change: stop early once the relative image change per outer
        iteration falls below this; None runs all iterations.
    epsilon: TV smoothing constant.
    """

    alpha: float = 0.1
    iterations: int = 150
    tv_steps: int = 20
    positivity: bool = False
    stop_rel_change: float | None = None
    epsilon: float = DEFAULT_EPSILON

    def __post_init__(self):
        if not 0.0 < self.alpha <= 1.0:
            raise InvalidInputError(f"alpha must be in (0, 1], got {self.alpha}")
        if self.iterations < 1:
            raise InvalidInputError(f"iterations must be >= 1, got {self.iterations}")
        if self.tv_steps < 1:
            raise InvalidInputError(f"tv_steps must be >= 1, got {self.tv_steps}")
        if self.stop_rel_change is not None and not self.stop_rel_change > 0.0:
            raise InvalidInputError(
                f"stop_rel_change must be > 0 or None, got {self.stop_rel_change}"
            )
        if not self.epsilon > 0.0:
            raise InvalidInputError(f"epsilon must be > 0, got {self.epsilon}")


@dataclass
class ReconTrace:
    """Per-outer-iteration diagnostics.

    tv_value is the TV after the iteration's descent steps and
    tv_after_projection the TV right before them, so descent within each
    outer iteration is visible. dp is the distance the data projection
    moved the image, dtvg the TV step size derived from it. rel_change
    is the relative distance between consecutive constraint-satisfying
    iterates (each iteration's image as seen after the following
    projection), i.e. how much of this iteration's movement survives
    re-imposing the data constraint.
    """

    iteration: list[int] = field(default_factory=list)
    tv_value: list[float] = field(default_factory=list)
    dp: list[float] = field(default_factory=list)
    dtvg: list[float] = field(default_factory=list)
    rel_change: list[float] = field(default_factory=list)
    tv_after_projection: list[float] = field(default_factory=list)

    def append(self, iteration, tv_value, dp, dtvg, rel_change, tv_after_projection):
        self.iteration.append(iteration)
        self.tv_value.append(tv_value)
        self.dp.append(dp)
        self.dtvg.append(dtvg)
        self.rel_change.append(rel_change)
        self.tv_after_projection.append(tv_after_projection)

    def __len__(self) -> int:
        return len(self.iteration)

    def write_csv(self, path) -> None:
        with open(path, "w", newline="") as fh:
            fh.write("iteration,tv_value,dp,dtvg,rel_change,tv_after_projection\n")
            for row in zip(
                self.iteration,
                self.tv_value,
                self.dp,
                self.dtvg,
                self.rel_change,
                self.tv_after_projection,
            ):
                fh.write(",".join(repr(v) for v in row) + "\n")


def project_data_constraint(
    img: np.ndarray, measured: np.ndarray, keep: np.ndarray
) -> np.ndarray:
    """Project ``img`` onto the set of images whose kept coefficients match
    ``measured``.

    Kept bins take the measured value, deleted bins keep the image's own
    coefficient. Mask symmetry keeps the merged spectrum conjugate-symmetric,
    so the result is real.
    """
    a = as_image(img)
    measured = np.asarray(measured, dtype=np.complex128)
    keep = np.asarray(keep, dtype=bool)
    if a.shape != measured.shape or a.shape != keep.shape:
        raise ShapeMismatchError(
            f"image {a.shape}, measured {measured.shape} and mask {keep.shape} "
            "must share a shape"
        )
    merged = np.where(keep, measured, np.fft.fft2(a))
    return np.fft.ifft2(merged).real


def residual(a, b) -> np.ndarray:
    """Per-pixel absolute difference |a - b|."""
    a = as_image(a)
    b = as_image(b)
    if a.shape != b.shape:
        raise ShapeMismatchError(f"shapes differ: {a.shape} vs {b.shape}")
    return np.abs(a - b)


def reconstruct(
    observed, spec: WedgeSpec, params: ReconParams = ReconParams()
) -> tuple[np.ndarray, ReconTrace]:
    """Delete the wedge from ``observed`` and recover it by TV minimization.

    Returns the reconstructed image and the iteration trace. The output's
    Fourier coefficients outside the wedge equal the observed ones exactly
    (hard data constraint). Raises DivergenceError if non-finite values
    appear, reporting the outer iteration.
    """
    x = as_image(observed)
    height, width = x.shape
    keep = build_mask(spec, width, height)
    measured = apply_mask(np.fft.fft2(x), keep)

    # seed dp with the norm of what the wedge deleted, since the first
    # projection leaves the start point unchanged
    wedge_deleted = np.fft.ifft2(measured).real
    dp = float(np.linalg.norm(x - wedge_deleted))

    def rel_distance(a: np.ndarray, b: np.ndarray) -> float:
        denom = max(float(np.linalg.norm(b)), np.finfo(np.float64).tiny)
        return float(np.linalg.norm(a - b)) / denom

    eps = params.epsilon
    trace = ReconTrace()
    feasible_prev = None
    pending = None  # (iteration, tv_value, dp, dtvg, tv_after_projection)
    for it in range(1, params.iterations + 1):
        projected = np.fft.ifft2(np.where(keep, measured, np.fft.fft2(x))).real
        if it > 1:
            dp = float(np.linalg.norm(projected - x))

        # the previous iteration's record completes once this projection
        # shows how much of its movement survived the data constraint
        if pending is not None:
            rel_change = rel_distance(projected, feasible_prev)
            trace.append(
                iteration=pending[0],
                tv_value=pending[1],
                dp=pending[2],
                dtvg=pending[3],
                rel_change=rel_change,
                tv_after_projection=pending[4],
            )
            pending = None
            if (
                params.stop_rel_change is not None
                and rel_change < params.stop_rel_change
            ):
                # this projection doubles as the final one
                return np.ascontiguousarray(projected), trace
        feasible_prev = projected

        x = np.maximum(projected, 0.0) if params.positivity else projected
        tv_after_projection = _kernels.tv_value(x, eps)
        dtvg = params.alpha * dp
        if dtvg > 0.0:
            for _ in range(params.tv_steps):
                grad = _kernels.tv_gradient(x, eps)
                grad_norm = float(np.linalg.norm(grad))
                if grad_norm < _GRAD_NORM_FLOOR:
                    break
                x = x - (dtvg / grad_norm) * grad
        tv_value = _kernels.tv_value(x, eps)

        if not np.isfinite(x).all() or not math.isfinite(tv_value):
            raise DivergenceError(it)
        pending = (it, tv_value, dp, dtvg, tv_after_projection)

    x = np.fft.ifft2(np.where(keep, measured, np.fft.fft2(x))).real
    trace.append(
        iteration=pending[0],
        tv_value=pending[1],
        dp=pending[2],
        dtvg=pending[3],
        rel_change=rel_distance(x, feasible_prev),
        tv_after_projection=pending[4],
    )
    return np.ascontiguousarray(x), trace
