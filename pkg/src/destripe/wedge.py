"""Binary Fourier-space wedge masks.

A stripe field that extends along real-space direction ``a`` degrees
(counterclockwise from the +x / column axis) concentrates in Fourier space on
the line through DC *perpendicular* to it, at ``a + 90`` degrees. Deleting a
wedge around that line removes the stripes; everything outside the wedge is
the "measured" data a reconstruction must honor. Masks here are boolean
arrays, ``True`` = kept/measured, laid out like unshifted spectra (DC at
``[0, 0]``).

Geometry notes:

* Frequencies are taken in normalized per-axis units (cycles/pixel), so the
  wedge direction is correct for non-square images.
* ``wedge_width_deg`` is measured on a coefficient-uniform angular scale:
  a wedge of full width W degrees always deletes W/180 of all Fourier
  coefficients (up to lattice rounding), for any image size. On this scale
  equal widths remove equal amounts of data, which is what the width is for;
  near the axes the Euclidean opening angle is slightly wider than W.
* The deleted wedge is symmetric under frequency negation (both half-lines),
  so masked spectra of real images stay conjugate-symmetric and invert to
  real images. DC is never deleted.
* The angular boundary is inclusive: distance exactly equal to the
  half-width is deleted. A width of exactly 0 deletes nothing.
* ``line_mode`` ignores the width and deletes exactly the one-bin-thick
  central line of the wedge, for perfectly unidirectional artifacts.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidInputError, ShapeMismatchError

__all__ = ["WedgeSpec", "build_mask", "deleted_fraction", "apply_mask"]


@dataclass(frozen=True)
class WedgeSpec:
    """Geometry of one double wedge.

    stripe_angle_deg: direction the real-space stripes extend, degrees in
        [0, 180), from the +x (column) axis toward +y (row). Vertical
        scratches are 90.
    wedge_width_deg: FULL angular width of the deleted wedge, [0, 180).
    dc_notch_radius: radius in frequency bins of a disk around DC that is
        always kept (>= 0). The DC bin itself is always kept regardless.
    line_mode: delete only the one-bin-thick central line (width ignored).
    """

    stripe_angle_deg: float
    wedge_width_deg: float
    dc_notch_radius: float = 0.0
    line_mode: bool = False

    def __post_init__(self):
        if not 0.0 <= self.stripe_angle_deg < 180.0:
            raise InvalidInputError(
                f"stripe_angle_deg must be in [0, 180), got {self.stripe_angle_deg}"
            )
        if not 0.0 <= self.wedge_width_deg < 180.0:
            raise InvalidInputError(
                f"wedge_width_deg must be in [0, 180), got {self.wedge_width_deg}"
            )
        if self.dc_notch_radius < 0.0:
            raise InvalidInputError(
                f"dc_notch_radius must be >= 0, got {self.dc_notch_radius}"
            )


def _unit_direction(deg: float) -> tuple[float, float]:
    # exact axis directions keep axis-aligned masks free of trig roundoff
    d = deg % 360.0
    if d == 0.0:
        return 1.0, 0.0
    if d == 90.0:
        return 0.0, 1.0
    if d == 180.0:
        return -1.0, 0.0
    if d == 270.0:
        return 0.0, -1.0
    r = math.radians(d)
    return math.cos(r), math.sin(r)


def _bin_measure_angle(gu, gv):
    """Angle-like coordinate in [0, 180) of direction (gu, gv), uniform in
    coefficient measure.

    Over the square of normalized frequencies, the fraction of area with this
    coordinate inside a band of width W degrees is exactly W/180 (the
    coordinate parametrizes the square's boundary at constant speed). Points
    are folded to the upper half-plane first, so (gu, gv) and (-gu, -gv)
    yield bit-identical values.
    """
    gu = np.asarray(gu, dtype=np.float64)
    gv = np.asarray(gv, dtype=np.float64)
    flip = (gv < 0) | ((gv == 0) & (gu < 0))
    u = np.where(flip, -gu, gu)
    v = np.where(flip, -gv, gv)
    nu = -u
    in_0_45 = (u >= 0) & (v <= u)
    in_45_90 = (u >= 0) & (v > u)
    in_90_135 = (u < 0) & (nu <= v)
    safe_u = np.where(u == 0, 1.0, u)
    safe_v = np.where(v == 0, 1.0, v)
    safe_nu = np.where(nu == 0, 1.0, nu)
    return np.where(
        in_0_45,
        45.0 * v / safe_u,
        np.where(
            in_45_90,
            90.0 - 45.0 * u / safe_v,
            np.where(in_90_135, 90.0 + 45.0 * nu / safe_v, 180.0 - 45.0 * v / safe_nu),
        ),
    )


def build_mask(spec: WedgeSpec, width: int, height: int) -> np.ndarray:
    """Boolean keep-mask of shape (height, width) for ``spec``.

    A coefficient is deleted iff it lies within ``wedge_width_deg / 2`` of
    the wedge center-line (the line through DC at ``stripe_angle_deg + 90``)
    on the coefficient-uniform angular scale, and its radius in bins exceeds
    ``dc_notch_radius``. ``keep[0, 0]`` is always True.
    """
    if width < 2 or height < 2:
        raise InvalidInputError(f"mask dimensions must be >= 2x2, got {width}x{height}")
    gu = np.fft.fftfreq(width)[None, :]
    gv = np.fft.fftfreq(height)[:, None]
    fu_bins = gu * width
    fv_bins = gv * height
    radius_bins = np.hypot(fu_bins, fv_bins)

    center_deg = (spec.stripe_angle_deg + 90.0) % 180.0
    cu, cv = _unit_direction(center_deg)

    if spec.line_mode:
        # perpendicular offset, in bins, from the center-line
        du, dv = cu * width, cv * height
        norm = math.hypot(du, dv)
        offset = np.abs(fu_bins * (-dv) + fv_bins * du) / norm
        deleted = offset < 0.5
    elif spec.wedge_width_deg == 0.0:
        deleted = np.zeros((height, width), dtype=bool)
    else:
        psi = _bin_measure_angle(gu, gv)
        psi_center = float(_bin_measure_angle(cu, cv))
        delta = np.abs((psi - psi_center + 90.0) % 180.0 - 90.0)
        deleted = delta <= spec.wedge_width_deg / 2.0

    # Nyquist bins of even dimensions alias +/- the same frequency; a bin is
    # in the wedge if either alias is, which also enforces exact negation
    # symmetry of the mask
    neg = np.ix_((-np.arange(height)) % height, (-np.arange(width)) % width)
    deleted |= deleted[neg]

    deleted &= radius_bins > spec.dc_notch_radius
    keep = ~deleted
    keep[0, 0] = True
    return keep


def deleted_fraction(keep: np.ndarray) -> float:
    """Fraction of coefficients the mask deletes, in [0, 1]."""
    keep = np.asarray(keep, dtype=bool)
    return np.count_nonzero(~keep) / keep.size


def apply_mask(spec: np.ndarray, keep: np.ndarray) -> np.ndarray:
    """Zero every deleted coefficient of ``spec``; kept ones copy unchanged."""
    s = np.asarray(spec)
    keep = np.asarray(keep, dtype=bool)
    if s.shape != keep.shape:
        raise ShapeMismatchError(
            f"spectrum shape {s.shape} != mask shape {keep.shape}"
        )
    return np.where(keep, s, 0)
