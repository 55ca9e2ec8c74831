"""Optional on-disk cache for slow-to-build tables.

Set PERMAP_CACHE to a directory to persist Dickman coefficient tables and
the big-integer cycle-count tables between runs; leave it unset and
everything stays in memory.  Files are versioned and self-describing:

    magic "PMAP" | version u16 | payload kind u8 | payload

kind 1: sequence of float64 arrays (u32 count, then u32 length + doubles,
little-endian).  kind 2: rectangular big-integer rows (u32 rows, u32 cols,
then sign byte + u32 byte-length + little-endian magnitude per entry).

A file that fails any structural check is ignored and rebuilt, never
trusted partially.
"""

from __future__ import annotations

import os
import struct
import tempfile
from typing import Sequence

import numpy as np

_MAGIC = b"PMAP"
_VERSION = 1
_KIND_DOUBLES = 1
_KIND_COUNTS = 2


def _cache_dir() -> str | None:
    path = os.environ.get("PERMAP_CACHE")
    if not path:
        return None
    os.makedirs(path, exist_ok=True)
    return path


def _path(key: str) -> str | None:
    base = _cache_dir()
    return None if base is None else os.path.join(base, key + ".pmc")


def _write(path: str, blob: bytes) -> None:
    fd, tmp = tempfile.mkstemp(dir=os.path.dirname(path), suffix=".tmp")
    try:
        with os.fdopen(fd, "wb") as handle:
            handle.write(blob)
        os.replace(tmp, path)
    except OSError:
        if os.path.exists(tmp):
            os.unlink(tmp)


def _read(path: str, kind: int) -> bytes | None:
    try:
        with open(path, "rb") as handle:
            blob = handle.read()
    except OSError:
        return None
    head = struct.Struct("<4sHB")
    if len(blob) < head.size:
        return None
    magic, version, got = head.unpack_from(blob)
    if magic != _MAGIC or version != _VERSION or got != kind:
        return None
    return blob[head.size:]


def save_doubles(key: str, arrays: Sequence[np.ndarray]) -> None:
    path = _path(key)
    if path is None:
        return
    parts = [struct.pack("<4sHB", _MAGIC, _VERSION, _KIND_DOUBLES),
             struct.pack("<I", len(arrays))]
    for arr in arrays:
        data = np.asarray(arr, dtype="<f8")
        parts.append(struct.pack("<I", data.size))
        parts.append(data.tobytes())
    _write(path, b"".join(parts))


def load_doubles(key: str) -> list[np.ndarray] | None:
    path = _path(key)
    if path is None:
        return None
    body = _read(path, _KIND_DOUBLES)
    if body is None:
        return None
    try:
        (count,) = struct.unpack_from("<I", body)
        pos = 4
        out = []
        for _ in range(count):
            (size,) = struct.unpack_from("<I", body, pos)
            pos += 4
            arr = np.frombuffer(body, dtype="<f8", count=size, offset=pos)
            pos += 8 * size
            out.append(arr.astype(np.float64))
        if pos != len(body):
            return None
        return out
    except (struct.error, ValueError):
        return None


def save_counts(key: str, rows: Sequence[Sequence[int]]) -> None:
    path = _path(key)
    if path is None:
        return
    cols = len(rows[0]) if rows else 0
    parts = [struct.pack("<4sHB", _MAGIC, _VERSION, _KIND_COUNTS),
             struct.pack("<II", len(rows), cols)]
    for row in rows:
        for value in row:
            mag = abs(value)
            data = mag.to_bytes((mag.bit_length() + 7) // 8, "little")
            parts.append(struct.pack("<bI", -1 if value < 0 else 1, len(data)))
            parts.append(data)
    _write(path, b"".join(parts))


def load_counts(key: str) -> list[list[int]] | None:
    path = _path(key)
    if path is None:
        return None
    body = _read(path, _KIND_COUNTS)
    if body is None:
        return None
    try:
        nrows, ncols = struct.unpack_from("<II", body)
        pos = 8
        rows = []
        for _ in range(nrows):
            row = []
            for _ in range(ncols):
                sign, size = struct.unpack_from("<bI", body, pos)
                pos += 5
                row.append(sign * int.from_bytes(body[pos:pos + size], "little"))
                pos += size
            rows.append(row)
        if pos != len(body):
            return None
        return rows
    except (struct.error, ValueError):
        return None
