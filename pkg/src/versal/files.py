"""Self-describing JSON documents for matrices, structures, and polynomials.

Every document carries a ``kind`` tag and complex scalars serialize as
``[re, im]`` pairs, so one parser covers all fixture files.  Writing is
deterministic and floats round-trip exactly.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .jordan import SegreStructure
from .linalg import as_matrix
from .linearization import MonicPolynomial


def _pairs(matrix):
    return [[float(z.real), float(z.imag)] for z in matrix.ravel()]


def _field(doc, name, kind):
    if name not in doc:
        raise ValueError(f"'{kind}' document is missing field '{name}'")
    return doc[name]


def _complex_pair(value, context):
    if (not isinstance(value, (list, tuple)) or len(value) != 2
            or not all(isinstance(v, (int, float)) for v in value)):
        raise ValueError(f"{context}: expected a [re, im] pair, got {value!r}")
    return complex(value[0], value[1])


def matrix_document(m):
    m = as_matrix(m)
    rows, cols = m.shape
    return {"kind": "matrix", "rows": rows, "cols": cols, "entries": _pairs(m)}


def parse_matrix(doc):
    _expect_kind(doc, "matrix")
    rows = int(_field(doc, "rows", "matrix"))
    cols = int(_field(doc, "cols", "matrix"))
    if rows < 1 or cols < 1:
        raise ValueError(f"matrix dimensions must be positive, got {rows}x{cols}")
    entries = _field(doc, "entries", "matrix")
    if len(entries) != rows * cols:
        raise ValueError(
            f"field 'entries': expected {rows * cols} pairs, got {len(entries)}")
    data = [_complex_pair(e, f"entry {i}") for i, e in enumerate(entries)]
    return as_matrix(np.array(data, dtype=complex).reshape(rows, cols))


def segre_document(structure):
    return {
        "kind": "segre",
        "blocks": [{"eigenvalue": [float(eig.real), float(eig.imag)],
                    "sizes": list(sizes)}
                   for eig, sizes in structure.blocks],
    }


def parse_segre(doc):
    _expect_kind(doc, "segre")
    blocks = []
    for i, block in enumerate(_field(doc, "blocks", "segre")):
        eig = _complex_pair(_field(block, "eigenvalue", "segre"), f"block {i}")
        sizes = _field(block, "sizes", "segre")
        blocks.append((eig, sizes))
    return SegreStructure(blocks)


def polynomial_document(poly):
    return {
        "kind": "polynomial",
        "degree": poly.degree,
        "size": poly.size,
        "coefficients": [_pairs(c) for c in poly.coefficients],
    }


def parse_polynomial(doc):
    _expect_kind(doc, "polynomial")
    degree = int(_field(doc, "degree", "polynomial"))
    size = int(_field(doc, "size", "polynomial"))
    raw = _field(doc, "coefficients", "polynomial")
    if len(raw) != degree:
        raise ValueError(
            f"field 'coefficients': expected {degree} matrices, got {len(raw)}")
    coefficients = []
    for j, entries in enumerate(raw):
        if len(entries) != size * size:
            raise ValueError(
                f"coefficient {j}: expected {size * size} pairs, got {len(entries)}")
        data = [_complex_pair(e, f"coefficient {j} entry {i}")
                for i, e in enumerate(entries)]
        coefficients.append(np.array(data, dtype=complex).reshape(size, size))
    return MonicPolynomial(coefficients)


def pattern_document(pattern):
    return {
        "kind": "pattern",
        "shape": pattern.shape.value,
        "base": segre_document(pattern.base)["blocks"],
        "parameters": pattern.parameter_count,
        "stars": [[row, col, param] for row, col, param in pattern.stars],
    }


def _expect_kind(doc, kind):
    if not isinstance(doc, dict):
        raise ValueError(f"expected a JSON object, got {type(doc).__name__}")
    found = doc.get("kind")
    if found != kind:
        raise ValueError(f"expected a '{kind}' document, got kind={found!r}")


def load_document(path):
    text = Path(path).read_text(encoding="utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise ValueError(f"{path}: top-level value must be a JSON object")
    return doc


def save_document(path, doc):
    Path(path).write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")


def _load(path, parser):
    try:
        return parser(load_document(path))
    except ValueError as exc:
        message = str(exc)
        if not message.startswith(str(path)):
            message = f"{path}: {message}"
        raise ValueError(message) from exc


def load_matrix(path):
    return _load(path, parse_matrix)


def load_segre(path):
    return _load(path, parse_segre)


def load_polynomial(path):
    return _load(path, parse_polynomial)
