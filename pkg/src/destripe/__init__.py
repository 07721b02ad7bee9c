"""Directional artifact removal by Fourier wedge deletion and
data-constrained TV minimization."""

from .errors import (
    CorruptFileError,
    DegenerateCaseError,
    DestripeError,
    DivergenceError,
    HermitianSymmetryError,
    InvalidInputError,
    ShapeMismatchError,
    UnsupportedFormatError,
)
from .fourier import as_image, fft2_forward, fft2_inverse, hermitian_violation
from .imgio import load_image, save_image, save_mask_png
from .metrics import EvalRecord, normalized_rmse, rmse, wedge_energy_fraction
from .recon import ReconParams, ReconTrace, project_data_constraint, reconstruct, residual
from .synth import NoiseSpec, StripeSpec, add_noise, make_phantom, make_stripe_field
from .tv import tv_gradient, tv_norm
from .wedge import WedgeSpec, apply_mask, build_mask, deleted_fraction

__version__ = "0.1.0"

__all__ = [
    "CorruptFileError",
    "DegenerateCaseError",
    "DestripeError",
    "DivergenceError",
    "HermitianSymmetryError",
    "InvalidInputError",
    "ShapeMismatchError",
    "UnsupportedFormatError",
    "as_image",
    "fft2_forward",
    "fft2_inverse",
    "hermitian_violation",
    "load_image",
    "save_image",
    "save_mask_png",
    "EvalRecord",
    "normalized_rmse",
    "rmse",
    "wedge_energy_fraction",
    "ReconParams",
    "ReconTrace",
    "project_data_constraint",
    "reconstruct",
    "residual",
    "NoiseSpec",
    "StripeSpec",
    "add_noise",
    "make_phantom",
    "make_stripe_field",
    "tv_gradient",
    "tv_norm",
    "WedgeSpec",
    "apply_mask",
    "build_mask",
    "deleted_fraction",
    "__version__",
]
