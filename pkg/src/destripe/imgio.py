"""Grayscale image I/O with exact, documented bit behavior.

Formats:

* ``png8`` / ``png16``: integer formats for inspection. Loading divides by
  255 / 65535; saving clamps to [0, 1] (or min-max rescales on request),
  scales, and rounds half away from zero.
* ``pgm``: binary P5, written 8-bit; 8- or 16-bit (big-endian) read.
* ``raw_f32``: little-endian float32 payload plus a JSON sidecar
  ``<path>.json`` with ``{"width", "height", "dtype": "f32le"}``. This is
  the pipeline format: no quantization between processing stages.
"""

import json
import math
import os

import numpy as np
from PIL import Image

from .errors import CorruptFileError, InvalidInputError, UnsupportedFormatError

__all__ = ["FORMATS", "infer_format", "load_image", "save_image", "save_mask_png"]

FORMATS = ("png8", "png16", "pgm", "raw_f32")

_EXTENSIONS = {
    ".png": "png8",
    ".pgm": "pgm",
    ".f32": "raw_f32",
    ".raw": "raw_f32",
}


def infer_format(path: str) -> str:
    ext = os.path.splitext(path)[1].lower()
    try:
        return _EXTENSIONS[ext]
    except KeyError:
        raise UnsupportedFormatError(
            f"cannot infer format from {path!r}; known extensions: "
            f"{sorted(_EXTENSIONS)}"
        ) from None


def _sidecar_path(path: str) -> str:
    return path + ".json"


def _load_png(path: str) -> np.ndarray:
    with Image.open(path) as im:
        if im.mode == "L":
            return np.asarray(im, dtype=np.float64) / 255.0
        if im.mode in ("I;16", "I;16B", "I"):
            a = np.asarray(im, dtype=np.float64)
            if a.max() > 65535 or a.min() < 0:
                raise UnsupportedFormatError(
                    f"{path!r}: integer PNG values outside 16-bit range"
                )
            return a / 65535.0
        raise UnsupportedFormatError(
            f"{path!r} has mode {im.mode!r}; only grayscale images are supported"
        )


def _read_pgm_token(fh) -> bytes:
    # skip whitespace and '#' comment lines, then read one token
    tok = b""
    while True:
        c = fh.read(1)
        if c == b"":
            raise CorruptFileError("unexpected end of PGM header")
        if c == b"#":
            while c not in (b"\n", b""):
                c = fh.read(1)
            continue
        if c.isspace():
            if tok:
                return tok
            continue
        tok += c


def _load_pgm(path: str) -> np.ndarray:
    with open(path, "rb") as fh:
        magic = fh.read(2)
        if magic != b"P5":
            raise UnsupportedFormatError(f"{path!r} is not a binary (P5) PGM file")
        width = int(_read_pgm_token(fh))
        height = int(_read_pgm_token(fh))
        maxval = int(_read_pgm_token(fh))
        if not 0 < maxval < 65536:
            raise CorruptFileError(f"{path!r}: invalid PGM maxval {maxval}")
        dtype = np.dtype(">u2") if maxval > 255 else np.dtype("u1")
        payload = fh.read(width * height * dtype.itemsize)
    if len(payload) != width * height * dtype.itemsize:
        raise CorruptFileError(f"{path!r}: PGM payload shorter than header promises")
    data = np.frombuffer(payload, dtype=dtype).reshape(height, width)
    return data.astype(np.float64) / maxval


def _load_raw_f32(path: str) -> np.ndarray:
    sidecar = _sidecar_path(path)
    with open(sidecar) as fh:
        meta = json.load(fh)
    try:
        width, height, dtype = int(meta["width"]), int(meta["height"]), meta["dtype"]
    except (KeyError, TypeError, ValueError) as exc:
        raise CorruptFileError(f"{sidecar!r}: bad sidecar contents: {exc}") from exc
    if dtype != "f32le":
        raise UnsupportedFormatError(f"{sidecar!r}: unsupported dtype {dtype!r}")
    expected = width * height * 4
    actual = os.path.getsize(path)
    if actual != expected:
        raise CorruptFileError(
            f"{path!r}: payload is {actual} bytes, sidecar promises {expected}"
        )
    data = np.fromfile(path, dtype="<f4").reshape(height, width)
    return data.astype(np.float64)


def load_image(path: str, fmt: str | None = None) -> np.ndarray:
    """Load a grayscale image as a float64 array in row-major, top-left
    origin order. Integer formats are normalized to [0, 1]."""
    fmt = fmt or infer_format(path)
    if fmt in ("png8", "png16"):
        return _load_png(path)
    if fmt == "pgm":
        return _load_pgm(path)
    if fmt == "raw_f32":
        return _load_raw_f32(path)
    raise UnsupportedFormatError(f"unknown format {fmt!r}; choose from {FORMATS}")


def _quantize(img: np.ndarray, maxval: int, rescale: bool) -> np.ndarray:
    a = np.asarray(img, dtype=np.float64)
    if not np.isfinite(a).all():
        raise InvalidInputError("cannot quantize non-finite pixel values")
    if rescale:
        lo, hi = float(a.min()), float(a.max())
        a = np.zeros_like(a) if hi == lo else (a - lo) / (hi - lo)
    else:
        a = np.clip(a, 0.0, 1.0)
    # round half away from zero (values are >= 0 here)
    return np.floor(a * maxval + 0.5)


def save_image(img, path: str, fmt: str | None = None, rescale: bool = False) -> None:
    """Save ``img``. Integer formats clamp to [0, 1] by default or min-max
    rescale with ``rescale=True``; ``raw_f32`` writes float32 verbatim plus
    its JSON sidecar."""
    fmt = fmt or infer_format(path)
    a = np.asarray(img, dtype=np.float64)
    if a.ndim != 2:
        raise InvalidInputError(f"expected a 2D image, got ndim={a.ndim}")
    if fmt == "png8":
        Image.fromarray(_quantize(a, 255, rescale).astype(np.uint8), "L").save(
            path, format="PNG"
        )
    elif fmt == "png16":
        Image.fromarray(_quantize(a, 65535, rescale).astype(np.uint16)).save(
            path, format="PNG"
        )
    elif fmt == "pgm":
        q = _quantize(a, 255, rescale).astype(np.uint8)
        height, width = q.shape
        with open(path, "wb") as fh:
            fh.write(f"P5\n{width} {height}\n255\n".encode("ascii"))
            fh.write(q.tobytes())
    elif fmt == "raw_f32":
        if not np.isfinite(a).all():
            raise InvalidInputError("refusing to write non-finite pixel values")
        height, width = a.shape
        a.astype("<f4").tofile(path)
        with open(_sidecar_path(path), "w") as fh:
            json.dump({"width": width, "height": height, "dtype": "f32le"}, fh)
            fh.write("\n")
    else:
        raise UnsupportedFormatError(f"unknown format {fmt!r}; choose from {FORMATS}")


def save_mask_png(keep: np.ndarray, path: str) -> None:
    """Save a keep-mask as an 8-bit PNG in the centered view
    (255 = kept, 0 = deleted)."""
    keep = np.asarray(keep, dtype=bool)
    centered = np.fft.fftshift(keep).astype(np.uint8) * 255
    Image.fromarray(centered, "L").save(path, format="PNG")
