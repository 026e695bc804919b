"""JSON matrix and vector files.

A matrix file is ``{"dim": n, "data": [[[re, im], ...], ...]}`` with ``n`` rows
of ``n`` ``[re, im]`` pairs; a vector file is ``{"vectors": [[[re, im], ...],
...]}``.  Floats are written with ``repr`` precision, so finite doubles
round-trip bit-exactly.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from .errors import FileDimensionError, MalformedFileError, MissingFileError, NonFiniteEntryError


def _load(path) -> object:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise MissingFileError(p, "no such file") from None
    except IsADirectoryError:
        raise MissingFileError(p, "is a directory, not a file") from None
    except OSError as exc:
        raise MissingFileError(p, f"cannot read file ({exc.strerror})") from None
    except UnicodeDecodeError:
        raise MalformedFileError(p, "not UTF-8 text") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedFileError(p, f"malformed JSON: {exc.msg} at line {exc.lineno} column {exc.colno}") from None


def _is_number(v) -> bool:
    return isinstance(v, (int, float)) and not isinstance(v, bool)


def _entry(path, value, where: str) -> complex:
    if not (isinstance(value, list) and len(value) == 2 and all(_is_number(v) for v in value)):
        raise MalformedFileError(path, f"{where}: expected a [re, im] pair of numbers, got {value!r}")
    try:
        re, im = float(value[0]), float(value[1])
    except OverflowError:  # integer literal beyond the double range
        raise NonFiniteEntryError(path, f"{where}: entry out of floating-point range") from None
    if not (math.isfinite(re) and math.isfinite(im)):
        raise NonFiniteEntryError(path, f"{where}: non-finite entry {value!r}")
    return complex(re, im)


def parse_matrix_file(path) -> np.ndarray:
    """Read a matrix file into a read-only ``complex128`` array."""
    p = Path(path)
    doc = _load(p)
    if not isinstance(doc, dict) or "dim" not in doc or "data" not in doc:
        raise MalformedFileError(p, 'expected an object with keys "dim" and "data"')
    dim, data = doc["dim"], doc["data"]
    if not (isinstance(dim, int) and not isinstance(dim, bool)) or dim < 1:
        raise MalformedFileError(p, f'"dim" must be a positive integer, got {dim!r}')
    if not isinstance(data, list) or not all(isinstance(row, list) for row in data):
        raise MalformedFileError(p, '"data" must be a list of rows')
    if len(data) != dim:
        raise FileDimensionError(p, f"dim is {dim} but data has {len(data)} rows")
    for i, row in enumerate(data):
        if len(row) != dim:
            raise FileDimensionError(p, f"dim is {dim} but row {i} has {len(row)} entries")
    out = np.array(
        [[_entry(p, v, f"entry ({i}, {j})") for j, v in enumerate(row)] for i, row in enumerate(data)],
        dtype=np.complex128,
    )
    out.setflags(write=False)
    return out


def matrix_document(m) -> dict:
    a = np.asarray(m, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    return {"dim": int(a.shape[0]), "data": [[[float(z.real), float(z.imag)] for z in row] for row in a]}


def write_matrix_file(path, m) -> None:
    Path(path).write_text(json.dumps(matrix_document(m), allow_nan=False) + "\n", encoding="utf-8")


def parse_vector_file(path, count: int | None = None) -> list[np.ndarray]:
    """Read a vector file; ``count`` (if given) is the required number of vectors."""
    p = Path(path)
    doc = _load(p)
    if not isinstance(doc, dict) or "vectors" not in doc:
        raise MalformedFileError(p, 'expected an object with key "vectors"')
    vectors = doc["vectors"]
    if not isinstance(vectors, list) or not all(isinstance(v, list) and v for v in vectors):
        raise MalformedFileError(p, '"vectors" must be a list of non-empty vectors')
    if count is not None and len(vectors) != count:
        raise FileDimensionError(p, f"expected {count} vectors, got {len(vectors)}")
    if vectors and any(len(v) != len(vectors[0]) for v in vectors):
        raise FileDimensionError(p, "vectors have different lengths")
    return [
        np.array([_entry(p, z, f"vector {k} entry {i}") for i, z in enumerate(v)], dtype=np.complex128)
        for k, v in enumerate(vectors)
    ]


def write_vector_file(path, vectors) -> None:
    doc = {
        "vectors": [
            [[float(z.real), float(z.imag)] for z in np.asarray(v, dtype=np.complex128).ravel()] for v in vectors
        ]
    }
    Path(path).write_text(json.dumps(doc, allow_nan=False) + "\n", encoding="utf-8")
