"""On-disk JSON documents.

A lattice file is a JSON object with fields ``n`` and ``covers``; the cover
list is read order-insensitively but must be duplicate-free and irredundant
(the lattice constructor rejects redundant or cyclic covers).  A table file
adds an n x n integer matrix under ``table``; a congruence file holds
``blocks``.  Writers always emit the canonical form: sorted keys, sorted
cover list, two-space indent, trailing newline — so equal objects produce
byte-identical files.
"""

import json

from .commutator import CommutatorTable
from .errors import FileFormatError
from .lattice import FiniteLattice, LatticePartition


def canonical_dumps(doc):
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def compact_dumps(doc):
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def lattice_to_doc(lat):
    return {"n": lat.n, "covers": [list(c) for c in lat.cover_pairs()]}


def _expect_int(value, what):
    if not isinstance(value, int) or isinstance(value, bool):
        raise FileFormatError(f"{what} must be an integer, got {value!r}")
    return value


def lattice_from_doc(doc):
    if not isinstance(doc, dict):
        raise FileFormatError("expected a JSON object")
    try:
        n = doc["n"]
        covers = doc["covers"]
    except KeyError as exc:
        raise FileFormatError(f"missing field {exc.args[0]!r}") from None
    _expect_int(n, "n")
    if not isinstance(covers, list):
        raise FileFormatError("covers must be a list of pairs")
    pairs = []
    for entry in covers:
        if not isinstance(entry, list) or len(entry) != 2:
            raise FileFormatError(f"cover entry {entry!r} is not a pair")
        pairs.append((_expect_int(entry[0], "cover element"),
                      _expect_int(entry[1], "cover element")))
    if len(set(pairs)) != len(pairs):
        raise FileFormatError("duplicate cover pair")
    try:
        return FiniteLattice(n, pairs)
    except ValueError as exc:
        raise FileFormatError(str(exc)) from exc


def table_to_doc(table):
    doc = lattice_to_doc(table.lattice)
    doc["table"] = [list(row) for row in table.entries]
    return doc


def table_from_doc(doc):
    lat = lattice_from_doc(doc)
    if "table" not in doc:
        raise FileFormatError("missing field 'table'")
    matrix = doc["table"]
    if (not isinstance(matrix, list) or len(matrix) != lat.n
            or any(not isinstance(row, list) or len(row) != lat.n
                   for row in matrix)):
        raise FileFormatError("table must be an n x n matrix")
    for row in matrix:
        for v in row:
            _expect_int(v, "table entry")
            if not 0 <= v < lat.n:
                raise FileFormatError(f"table entry {v!r} out of range")
    return CommutatorTable(lat, matrix)


def partition_from_doc(doc, lat):
    if not isinstance(doc, dict) or "blocks" not in doc:
        raise FileFormatError("expected a JSON object with field 'blocks'")
    blocks = doc["blocks"]
    if not isinstance(blocks, list) or any(not isinstance(b, list) for b in blocks):
        raise FileFormatError("blocks must be a list of lists")
    for b in blocks:
        for x in b:
            _expect_int(x, "block element")
    try:
        return LatticePartition(lat, blocks)
    except ValueError as exc:
        raise FileFormatError(str(exc)) from exc


def load_doc(path):
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise FileFormatError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"{path} is not valid JSON: {exc}") from exc


def load_lattice(path):
    return lattice_from_doc(load_doc(path))


def load_table(path):
    return table_from_doc(load_doc(path))
