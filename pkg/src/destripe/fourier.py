"""2D discrete Fourier transforms and the conventions the rest of the package
relies on.

Images are real 2D float64 arrays indexed ``[row, col]`` with origin at the
top-left. Spectra are complex128 arrays of the same shape with DC stored at
index ``(0, 0)`` (unshifted). The forward transform is unnormalized,

    C[v, u] = sum_{n,m} x[n, m] * exp(-2j*pi*(u*m/width + v*n/height)),

and the inverse divides by ``width*height``, so swapping coefficients between
two spectra needs no scale bookkeeping. The "centered" signed frequency of a
stored index k along an axis of length n is ``((k + n//2) % n) - n//2``; no
function here ever physically shifts data.
"""

import numpy as np

from .errors import HermitianSymmetryError, InvalidInputError

__all__ = [
    "as_image",
    "fft2_forward",
    "fft2_inverse",
    "hermitian_violation",
]


def as_image(img) -> np.ndarray:
    """Validate and return ``img`` as a 2D float64 array.

    Raises InvalidInputError if the array is not 2D with both dimensions
    >= 2, or contains NaN/Inf. Integer inputs are promoted to float64.
    """
    a = np.asarray(img, dtype=np.float64)
    if a.ndim != 2:
        raise InvalidInputError(f"expected a 2D image, got ndim={a.ndim}")
    if a.shape[0] < 2 or a.shape[1] < 2:
        raise InvalidInputError(f"image dimensions must be >= 2x2, got {a.shape}")
    if not np.isfinite(a).all():
        raise InvalidInputError("image contains non-finite pixel values")
    return a


def _negated_index(n: int) -> np.ndarray:
    # index map k -> (-k) mod n
    return (-np.arange(n)) % n


def hermitian_violation(spec: np.ndarray) -> float:
    """Worst-case |C(u,v) - conj(C(-u,-v))| relative to max |C|.

    Returns 0 for an exactly conjugate-symmetric spectrum. The scale floor
    avoids 0/0 on an all-zero spectrum.
    """
    s = np.asarray(spec, dtype=np.complex128)
    mirrored = s[np.ix_(_negated_index(s.shape[0]), _negated_index(s.shape[1]))]
    scale = max(float(np.max(np.abs(s))), np.finfo(np.float64).tiny)
    return float(np.max(np.abs(s - np.conj(mirrored)))) / scale


def fft2_forward(img) -> np.ndarray:
    """Unnormalized forward 2D DFT of a real image.

    The output of a real input is Hermitian-symmetric:
    ``C(-u,-v) = conj(C(u,v))`` with indices taken modulo the array shape.
    """
    return np.fft.fft2(as_image(img))


def fft2_inverse(spec, symmetry_tol: float = 1e-6) -> np.ndarray:
    """Normalized inverse 2D DFT, returning the real image.

    The input must be conjugate-symmetric within ``symmetry_tol`` (relative
    to its largest coefficient); otherwise the inverse would be silently
    complex and HermitianSymmetryError is raised. The vanishing imaginary
    residue of the inverse is discarded.
    """
    s = np.asarray(spec, dtype=np.complex128)
    if s.ndim != 2 or s.shape[0] < 2 or s.shape[1] < 2:
        raise InvalidInputError(f"expected a 2D spectrum >= 2x2, got shape {s.shape}")
    if not np.isfinite(s.view(np.float64)).all():
        raise InvalidInputError("spectrum contains non-finite coefficients")
    violation = hermitian_violation(s)
    if violation > symmetry_tol:
        raise HermitianSymmetryError(
            f"spectrum breaks conjugate symmetry (relative violation "
            f"{violation:.3e} > {symmetry_tol:.0e}); inverse would not be real"
        )
    return np.ascontiguousarray(np.fft.ifft2(s).real)
