"""Data files (CSV of 0/1 cells) and model specification files (JSON).

Model files hold ``n``, optional ``names`` and exactly one of

* ``"p"``: the full table of ``2**n`` probabilities in rank order, or
* ``"layers"``: layer ``k`` lists the cells with ``k`` ones, either as a
  list in ascending rank order or as ``{"011": 0.2, ...}``; the all-ones cell
  takes the remaining mass.
"""

import csv
import json
from importlib import resources
from pathlib import Path

import numpy as np

from .core import ProbabilityTable, build_layered
from .errors import DataFormatError
from .sampling import SampleMatrix

BUNDLED_PREFIX = "bundled:"


def resolve(path):
    """Map ``bundled:<file>`` to the packaged example assets."""
    path = str(path)
    if path.startswith(BUNDLED_PREFIX):
        return Path(str(resources.files("mvbern") / "data" / path[len(BUNDLED_PREFIX):]))
    return Path(path)


def ingest_csv(path):
    """Read a comma-separated file with one header line and 0/1 cells."""
    path = resolve(path)
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise DataFormatError(f"{path}: empty file") from None
        header = [h.strip() for h in header]
        width = len(header)
        rows = []
        for lineno, record in enumerate(reader, start=2):
            if not record or all(not c.strip() for c in record):
                continue
            if len(record) != width:
                raise DataFormatError(
                    f"{path}: line {lineno} has {len(record)} fields, expected {width}"
                )
            row = []
            for col, cell in enumerate(record):
                cell = cell.strip()
                if cell not in ("0", "1"):
                    raise DataFormatError(
                        f"{path}: line {lineno}, column {col + 1} ({header[col]}): "
                        f"expected 0 or 1, got {cell!r}"
                    )
                row.append(cell == "1")
            rows.append(row)
    if not rows:
        raise DataFormatError(f"{path}: no data rows")
    return SampleMatrix(np.array(rows, dtype=np.uint8), header)


def write_csv(sample, fh):
    """Write ``sample`` in the format read by :func:`ingest_csv`."""
    fh.write(",".join(sample.names) + "\n")
    lines = [",".join("1" if c else "0" for c in row) for row in sample.rows.tolist()]
    if lines:
        fh.write("\n".join(lines) + "\n")


def parse_model(doc):
    if not isinstance(doc, dict) or "n" not in doc:
        raise DataFormatError("model document must be an object with an 'n' field")
    forms = [k for k in ("p", "layers") if k in doc]
    if len(forms) != 1:
        raise DataFormatError("model document needs exactly one of 'p' or 'layers'")
    n = doc["n"]
    if not isinstance(n, int):
        raise DataFormatError(f"'n' must be an integer, got {n!r}")
    names = doc.get("names")
    if "p" in doc:
        return ProbabilityTable(doc["p"], n=n, names=names)
    layers = doc["layers"]
    if not isinstance(layers, list):
        raise DataFormatError("'layers' must be a list")
    return build_layered(n, layers, names=names)[0]


def load_model(path):
    path = resolve(path)
    try:
        doc = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise DataFormatError(f"{path}: invalid JSON ({exc})") from None
    return parse_model(doc)


def model_document(table):
    return {"n": table.n, "names": list(table.names), "p": table.p.tolist()}
