"""Grid file formats and conversions.

Binary containers (little-endian throughout, payloads are float64):

    QF2D: magic b"QF2D", version u32, M u32, N u32, dx f64, dy f64,
          then M*N*4 floats in C order of data[x, y, component].
    ST4D: magic b"ST4D", version u32, T,X,Y,Z u32, dt,dx,dy,dz f64,
          then T*X*Y*Z*16 floats in C order of data[t, x, y, z, blade].

The same container carries fields and spectra; which one it is depends on
where the file sits in a pipeline.  CSV exchange uses one sample per row,
indices first (x_index, y_index for 2D); CSV carries no spacings, so those
default to 1.  RGB images embed as pure imaginary fields: channel values
scaled to [0, 1] land on the i, j, k components and the real part is zero.
All writes go through a temp file and an atomic rename.
"""

from __future__ import annotations

import io
import os
import struct
import tempfile

import numpy as np

from .qft2d import QuaternionField2D
from .spacetime import SpacetimeField4D

__all__ = [
    "FORMAT_VERSION",
    "GridFileError",
    "write_qf2d",
    "read_qf2d",
    "write_st4d",
    "read_st4d",
    "write_csv_2d",
    "read_csv_2d",
    "write_csv_4d",
    "read_csv_4d",
    "read_image",
    "write_magnitude_csv",
    "sniff_kind",
]

FORMAT_VERSION = 1

_QF2D_MAGIC = b"QF2D"
_ST4D_MAGIC = b"ST4D"


class GridFileError(ValueError):
    """Malformed or mismatched grid file."""


def _atomic_write(path: str, payload: bytes) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".grid-")
    try:
        with os.fdopen(fd, "wb") as handle:
            handle.write(payload)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def write_qf2d(path: str, grid) -> None:
    """Write a QuaternionField2D or QSpectrum2D."""
    header = struct.pack(
        "<4sIIIdd", _QF2D_MAGIC, FORMAT_VERSION, grid.M, grid.N, grid.dx, grid.dy
    )
    _atomic_write(path, header + np.ascontiguousarray(grid.data, "<f8").tobytes())


def _read_exact(handle, count: int, path: str, what: str) -> bytes:
    data = handle.read(count)
    if len(data) != count:
        raise GridFileError(
            f"{path}: truncated {what} at offset {handle.tell() - len(data)}: "
            f"wanted {count} bytes, got {len(data)}"
        )
    return data


def read_qf2d(path: str) -> QuaternionField2D:
    with open(path, "rb") as handle:
        head = _read_exact(handle, struct.calcsize("<4sIIIdd"), path, "header")
        magic, version, m_len, n_len, dx, dy = struct.unpack("<4sIIIdd", head)
        if magic != _QF2D_MAGIC:
            raise GridFileError(f"{path}: bad magic {magic!r}, expected {_QF2D_MAGIC!r}")
        if version != FORMAT_VERSION:
            raise GridFileError(f"{path}: unsupported version {version}")
        if m_len == 0 or n_len == 0:
            raise GridFileError(f"{path}: zero grid size {m_len}x{n_len}")
        count = m_len * n_len * 4
        body = _read_exact(handle, count * 8, path, "payload")
        extra = handle.read(1)
        if extra:
            raise GridFileError(f"{path}: trailing bytes after payload")
    data = np.frombuffer(body, dtype="<f8").reshape(m_len, n_len, 4)
    return QuaternionField2D(data.astype(np.float64), dx, dy)


def write_st4d(path: str, grid) -> None:
    """Write a SpacetimeField4D or STSpectrum4D."""
    t_len, x_len, y_len, z_len = grid.dims
    header = struct.pack(
        "<4sIIIIIdddd",
        _ST4D_MAGIC,
        FORMAT_VERSION,
        t_len,
        x_len,
        y_len,
        z_len,
        grid.dt,
        grid.dx,
        grid.dy,
        grid.dz,
    )
    _atomic_write(path, header + np.ascontiguousarray(grid.data, "<f8").tobytes())


def read_st4d(path: str) -> SpacetimeField4D:
    with open(path, "rb") as handle:
        head = _read_exact(handle, struct.calcsize("<4sIIIIIdddd"), path, "header")
        magic, version, t_len, x_len, y_len, z_len, dt, dx, dy, dz = struct.unpack(
            "<4sIIIIIdddd", head
        )
        if magic != _ST4D_MAGIC:
            raise GridFileError(f"{path}: bad magic {magic!r}, expected {_ST4D_MAGIC!r}")
        if version != FORMAT_VERSION:
            raise GridFileError(f"{path}: unsupported version {version}")
        if min(t_len, x_len, y_len, z_len) == 0:
            raise GridFileError(f"{path}: zero grid size")
        count = t_len * x_len * y_len * z_len * 16
        body = _read_exact(handle, count * 8, path, "payload")
        extra = handle.read(1)
        if extra:
            raise GridFileError(f"{path}: trailing bytes after payload")
    data = np.frombuffer(body, dtype="<f8").reshape(t_len, x_len, y_len, z_len, 16)
    return SpacetimeField4D(data.astype(np.float64), dt, dx, dy, dz)


# --- CSV ---------------------------------------------------------------------

_CSV2D_HEADER = "x_index,y_index,r,i,j,k"
_CSV4D_HEADER = "t_index,x_index,y_index,z_index," + ",".join(
    f"c{b}" for b in range(16)
)


def write_csv_2d(path: str, grid) -> None:
    buf = io.StringIO()
    buf.write(_CSV2D_HEADER + "\n")
    for x in range(grid.M):
        for y in range(grid.N):
            vals = ",".join(repr(float(c)) for c in grid.data[x, y])
            buf.write(f"{x},{y},{vals}\n")
    _atomic_write(path, buf.getvalue().encode())


def _parse_csv(path: str, index_count: int, value_count: int, header: str):
    rows = []
    with open(path, "r", encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, start=1):
            line = line.strip()
            if not line:
                continue
            if lineno == 1 and line.lower().replace(" ", "") == header:
                continue
            parts = line.split(",")
            if len(parts) != index_count + value_count:
                raise GridFileError(
                    f"{path}:{lineno}: expected {index_count + value_count} "
                    f"fields, got {len(parts)}"
                )
            try:
                idx = tuple(int(p) for p in parts[:index_count])
                vals = tuple(float(p) for p in parts[index_count:])
            except ValueError as exc:
                raise GridFileError(f"{path}:{lineno}: {exc}") from None
            if min(idx) < 0:
                raise GridFileError(f"{path}:{lineno}: negative index {idx}")
            rows.append((idx, vals))
    if not rows:
        raise GridFileError(f"{path}: no data rows")
    return rows


def _assemble(path: str, rows, index_count: int, value_count: int) -> np.ndarray:
    dims = tuple(1 + max(idx[a] for idx, _ in rows) for a in range(index_count))
    expected = int(np.prod(dims))
    if len(rows) != expected:
        raise GridFileError(
            f"{path}: {len(rows)} rows do not fill a "
            f"{'x'.join(map(str, dims))} grid ({expected} samples)"
        )
    data = np.full(dims + (value_count,), np.nan)
    for idx, vals in rows:
        if not np.all(np.isnan(data[idx])):
            raise GridFileError(f"{path}: duplicate sample at index {idx}")
        data[idx] = vals
    return data


def read_csv_2d(path: str) -> QuaternionField2D:
    rows = _parse_csv(path, 2, 4, _CSV2D_HEADER)
    return QuaternionField2D(_assemble(path, rows, 2, 4))


def write_csv_4d(path: str, grid) -> None:
    buf = io.StringIO()
    buf.write(_CSV4D_HEADER + "\n")
    t_len, x_len, y_len, z_len = grid.dims
    for t in range(t_len):
        for x in range(x_len):
            for y in range(y_len):
                for z in range(z_len):
                    vals = ",".join(repr(float(c)) for c in grid.data[t, x, y, z])
                    buf.write(f"{t},{x},{y},{z},{vals}\n")
    _atomic_write(path, buf.getvalue().encode())


def read_csv_4d(path: str) -> SpacetimeField4D:
    rows = _parse_csv(path, 4, 16, _CSV4D_HEADER)
    return SpacetimeField4D(_assemble(path, rows, 4, 16))


def write_magnitude_csv(path: str, grid) -> None:
    """Per-sample Euclidean magnitudes, for external plotting."""
    mag = np.sqrt(np.sum(np.asarray(grid.data) ** 2, axis=-1))
    buf = io.StringIO()
    if mag.ndim == 2:
        buf.write("x_index,y_index,magnitude\n")
    else:
        buf.write("t_index,x_index,y_index,z_index,magnitude\n")
    for idx in np.ndindex(*mag.shape):
        buf.write(",".join(map(str, idx)) + f",{float(mag[idx])!r}\n")
    _atomic_write(path, buf.getvalue().encode())


def read_image(path: str) -> QuaternionField2D:
    """RGB image to a pure imaginary field: (R,G,B)/255 -> (i, j, k), r = 0.

    Pixel columns map to the x axis and rows to the y axis, so data[x, y]
    is the pixel at column x, row y.
    """
    from PIL import Image

    with Image.open(path) as img:
        rgb = np.asarray(img.convert("RGB"), dtype=np.float64) / 255.0
    h, w = rgb.shape[:2]
    data = np.zeros((w, h, 4))
    data[..., 1:] = np.transpose(rgb, (1, 0, 2))
    return QuaternionField2D(data)


def sniff_kind(path: str) -> str:
    """Look at the first bytes and classify: 'qf2d', 'st4d' or 'other'."""
    with open(path, "rb") as handle:
        magic = handle.read(4)
    if magic == _QF2D_MAGIC:
        return "qf2d"
    if magic == _ST4D_MAGIC:
        return "st4d"
    return "other"
