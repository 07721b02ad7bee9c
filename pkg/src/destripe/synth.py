"""Synthetic phantoms, wedge-confined stripe fields, and Gaussian noise.

These stand in for real micrographs so the wedge-size and SNR studies can be
re-run from scratch. Stripe fields are built by wedge-filtering white noise
rather than drawing line segments: that guarantees the artifact's spectrum
lies exactly inside the target wedge, which is the premise the recovery
claims rest on. Nothing here clips to [0, 1] (clipping would leak energy
outside the wedge); clipping happens only on integer export.

All generators are deterministic functions of their spec, seed and size.
"""

from dataclasses import dataclass

import numpy as np

from .errors import InvalidInputError
from .wedge import WedgeSpec, build_mask

__all__ = ["StripeSpec", "NoiseSpec", "make_phantom", "make_stripe_field", "add_noise"]

PHANTOM_KINDS = ("rectangles", "disks", "interface")


@dataclass(frozen=True)
class StripeSpec:
    """A directional artifact field.

    angle_deg: direction the stripes extend, as in WedgeSpec.
    spread_deg: full angular spread of the field; 0 means perfectly
        unidirectional (one-bin-thick spectral line).
    amplitude: RMS intensity of the field.
    seed: RNG seed.
    """

    angle_deg: float
    spread_deg: float
    amplitude: float
    seed: int = 0

    def __post_init__(self):
        if not 0.0 <= self.spread_deg < 180.0:
            raise InvalidInputError(
                f"spread_deg must be in [0, 180), got {self.spread_deg}"
            )
        if self.amplitude < 0.0:
            raise InvalidInputError(f"amplitude must be >= 0, got {self.amplitude}")


@dataclass(frozen=True)
class NoiseSpec:
    """Additive white Gaussian noise at a target signal-to-noise ratio,
    snr = mean / sigma."""

    snr: float
    seed: int = 0

    def __post_init__(self):
        if not self.snr > 0.0:
            raise InvalidInputError(f"snr must be > 0, got {self.snr}")


def make_phantom(kind: str, width: int, height: int, seed: int = 0) -> np.ndarray:
    """Piecewise-constant test image in [0, 1], deterministic per seed.

    kinds: "rectangles" (random axis-aligned blocks), "disks" (random hard
    disks), "interface" (two gray levels split by one vertical line).
    """
    if width < 16 or height < 16:
        raise InvalidInputError(f"phantom dimensions must be >= 16, got {width}x{height}")
    rng = np.random.default_rng(seed)
    if kind == "rectangles":
        img = np.full((height, width), 0.2)
        for _ in range(int(rng.integers(5, 9))):
            rw = int(rng.integers(width // 8, width // 2))
            rh = int(rng.integers(height // 8, height // 2))
            x0 = int(rng.integers(0, width - rw))
            y0 = int(rng.integers(0, height - rh))
            img[y0 : y0 + rh, x0 : x0 + rw] = rng.uniform(0.1, 0.95)
        return img
    if kind == "disks":
        img = np.full((height, width), 0.15)
        yy = np.arange(height)[:, None]
        xx = np.arange(width)[None, :]
        for _ in range(int(rng.integers(6, 11))):
            r = float(rng.uniform(min(width, height) / 12, min(width, height) / 4))
            cx = float(rng.uniform(0, width))
            cy = float(rng.uniform(0, height))
            img[(xx - cx) ** 2 + (yy - cy) ** 2 <= r * r] = rng.uniform(0.1, 0.95)
        return img
    if kind == "interface":
        img = np.full((height, width), 0.25)
        img[:, width // 2 :] = 0.75
        return img
    raise InvalidInputError(f"unknown phantom kind {kind!r}; choose from {PHANTOM_KINDS}")


def make_stripe_field(spec: StripeSpec, width: int, height: int) -> np.ndarray:
    """Zero-mean stripe field whose spectrum lies inside the wedge for
    ``spec.angle_deg``/``spec.spread_deg``, rescaled to RMS ``amplitude``."""
    if spec.amplitude == 0.0:
        return np.zeros((height, width))
    rng = np.random.default_rng(spec.seed)
    noise = rng.standard_normal((height, width))
    wspec = WedgeSpec(
        stripe_angle_deg=spec.angle_deg % 180.0,
        wedge_width_deg=spec.spread_deg,
        line_mode=spec.spread_deg == 0.0,
    )
    keep = build_mask(wspec, width, height)
    spectrum = np.fft.fft2(noise)
    spectrum[keep] = 0.0  # zeroes everything outside the wedge, DC included
    field = np.fft.ifft2(spectrum).real
    rms = float(np.sqrt(np.mean(field * field)))
    if rms == 0.0:
        return np.zeros((height, width))
    return field * (spec.amplitude / rms)


def add_noise(img: np.ndarray, spec: NoiseSpec) -> np.ndarray:
    """Add i.i.d. Gaussian noise with sigma = mean(img) / snr."""
    img = np.asarray(img, dtype=np.float64)
    mu = float(img.mean())
    if mu <= 0.0:
        raise InvalidInputError(
            f"image mean must be > 0 to define snr = mean/sigma, got {mu}"
        )
    sigma = mu / spec.snr
    rng = np.random.default_rng(spec.seed)
    return img + sigma * rng.standard_normal(img.shape)
