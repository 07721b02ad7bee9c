"""Reconstruction quality metrics.

The headline number is the normalized RMSE: error of the reconstruction
against the clean image divided by the error of the naive wedge-deleted
image. Below 1 means recovering the wedge beat just deleting it.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateCaseError, ShapeMismatchError
from .fourier import as_image

__all__ = ["EvalRecord", "rmse", "normalized_rmse", "wedge_energy_fraction", "EVAL_CSV_COLUMNS"]

# sweep CSV schema; one row per (wedge, snr, seed) cell, plus a status column
EVAL_CSV_COLUMNS = (
    "wedge_deg",
    "snr",
    "seed",
    "rmse_recon",
    "rmse_wedge",
    "normalized_rmse",
    "runtime_s",
    "status",
)


@dataclass
class EvalRecord:
    """One sweep cell."""

    wedge_width_deg: float
    snr: float  # math.inf for noiseless
    seed: int
    rmse_recon: float
    rmse_wedge: float
    normalized_rmse: float
    runtime_seconds: float
    status: str = "ok"

    def csv_row(self) -> str:
        def num(v: float) -> str:
            if math.isinf(v):
                return "inf"
            return repr(float(v))

        return ",".join(
            (
                num(self.wedge_width_deg),
                num(self.snr),
                str(self.seed),
                num(self.rmse_recon),
                num(self.rmse_wedge),
                num(self.normalized_rmse),
                num(self.runtime_seconds),
                self.status,
            )
        )


def _check_same_shape(*imgs: np.ndarray) -> None:
    shapes = {im.shape for im in imgs}
    if len(shapes) > 1:
        raise ShapeMismatchError(f"images must share a shape, got {sorted(shapes)}")


def rmse(a, b) -> float:
    """Root mean square error sqrt(mean((a - b)^2))."""
    a = as_image(a)
    b = as_image(b)
    _check_same_shape(a, b)
    d = a - b
    return float(np.sqrt(np.mean(d * d)))


def normalized_rmse(clean, recon, wedge_deleted) -> float:
    """rmse(recon, clean) / rmse(wedge_deleted, clean).

    Raises DegenerateCaseError when the denominator is 0 (the wedge deleted
    nothing, so the ratio is undefined).
    """
    clean = as_image(clean)
    recon = as_image(recon)
    wedge_deleted = as_image(wedge_deleted)
    _check_same_shape(clean, recon, wedge_deleted)
    denom = rmse(wedge_deleted, clean)
    if denom == 0.0:
        raise DegenerateCaseError(
            "wedge-deleted image equals the clean image; normalized RMSE undefined"
        )
    return rmse(recon, clean) / denom


def wedge_energy_fraction(img, keep) -> float:
    """Fraction of the image's non-DC spectral energy inside the deleted bins.

    DC is excluded so a mean offset cannot swamp the directional diagnostic.
    Raises DegenerateCaseError for images with no non-DC energy.
    """
    a = as_image(img)
    keep = np.asarray(keep, dtype=bool)
    if a.shape != keep.shape:
        raise ShapeMismatchError(f"image shape {a.shape} != mask shape {keep.shape}")
    energy = np.abs(np.fft.fft2(a)) ** 2
    total = float(energy.sum() - energy[0, 0])
    if total <= 0.0:
        raise DegenerateCaseError("image has no non-DC spectral energy")
    deleted = float(energy[~keep].sum())
    return deleted / total
