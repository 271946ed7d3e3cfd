"""Document formats: exact, sparse, field-agnostic JSON interchange.

Bialgebra documents carry structure constants as sparse integer tuples
with explicit numerator/denominator, so no floating point ever appears:

* ``mult``:   [i, j, k, num, den]  meaning  (e_i e_j)_k = num/den
* ``comult``: [k, i, j, num, den]  meaning  Delta(e_k)_(i,j) = num/den
* ``unit`` / ``counit``: [i, num, den]

Prime-field documents must use den = 1 and 0 <= num < p.  Parsing
verifies the bialgebra axioms (or the monoid axioms) and fails with a
witness; serialization emits triples in sorted order so that
parse/serialize round-trips are the identity on canonical documents.
"""

from __future__ import annotations

import json
import os

from .bialgebra import Bialgebra, assert_valid, make_bialgebra
from .errors import HopfkitError, ParseError
from .fields import PrimeField, parse_field
from .monoid import FiniteMonoid, make_monoid

BIALGEBRA_SCHEMA = "hopfkit.bialgebra/1"
MONOID_SCHEMA = "hopfkit.monoid/1"


def _expect(cond, where, msg):
    if not cond:
        raise ParseError(f"{where}: {msg}")


def _scalar_from_pair(field, num, den, where):
    _expect(isinstance(num, int) and isinstance(den, int), where, "num/den must be integers")
    _expect(den != 0, where, "zero denominator")
    if isinstance(field, PrimeField):
        _expect(den == 1, where, f"prime-field entries need denominator 1, got {den}")
        _expect(0 <= num < field.p, where, f"prime-field value {num} outside [0, {field.p})")
    return field.from_pair(num, den)


def bialgebra_from_document(doc: dict, verify: bool = True) -> Bialgebra:
    where = "bialgebra document"
    _expect(isinstance(doc, dict), where, "not a JSON object")
    _expect(doc.get("schema") == BIALGEBRA_SCHEMA, where, f"schema must be {BIALGEBRA_SCHEMA}")
    try:
        field = parse_field(doc.get("field", ""))
    except HopfkitError as exc:
        raise ParseError(f"{where}: {exc}") from exc
    dim = doc.get("dim")
    _expect(isinstance(dim, int) and dim >= 1, where, "dim must be a positive integer")
    labels = doc.get("labels")
    if labels is not None:
        _expect(
            isinstance(labels, list) and len(labels) == dim, where,
            "labels must list one string per basis vector",
        )
    mult = field.zeros((dim, dim, dim))
    for t, entry in enumerate(doc.get("mult", [])):
        w = f"mult[{t}]"
        _expect(isinstance(entry, list) and len(entry) == 5, w, "expected [i, j, k, num, den]")
        i, j, k, num, den = entry
        for name, idx in (("i", i), ("j", j), ("k", k)):
            _expect(isinstance(idx, int) and 0 <= idx < dim, w, f"index {name}={idx} out of range")
        mult[i, j, k] = _scalar_from_pair(field, num, den, w)
    comult = field.zeros((dim, dim, dim))
    for t, entry in enumerate(doc.get("comult", [])):
        w = f"comult[{t}]"
        _expect(isinstance(entry, list) and len(entry) == 5, w, "expected [k, i, j, num, den]")
        k, i, j, num, den = entry
        for name, idx in (("k", k), ("i", i), ("j", j)):
            _expect(isinstance(idx, int) and 0 <= idx < dim, w, f"index {name}={idx} out of range")
        comult[k, i, j] = _scalar_from_pair(field, num, den, w)
    unit = field.zeros(dim)
    for t, entry in enumerate(doc.get("unit", [])):
        w = f"unit[{t}]"
        _expect(isinstance(entry, list) and len(entry) == 3, w, "expected [i, num, den]")
        i, num, den = entry
        _expect(isinstance(i, int) and 0 <= i < dim, w, f"index {i} out of range")
        unit[i] = _scalar_from_pair(field, num, den, w)
    counit = field.zeros(dim)
    for t, entry in enumerate(doc.get("counit", [])):
        w = f"counit[{t}]"
        _expect(isinstance(entry, list) and len(entry) == 3, w, "expected [i, num, den]")
        i, num, den = entry
        _expect(isinstance(i, int) and 0 <= i < dim, w, f"index {i} out of range")
        counit[i] = _scalar_from_pair(field, num, den, w)
    b = make_bialgebra(field, mult, comult, unit, counit,
                       tuple(labels) if labels else None)
    return assert_valid(b) if verify else b


def monoid_from_document(doc: dict) -> FiniteMonoid:
    where = "monoid document"
    _expect(isinstance(doc, dict), where, "not a JSON object")
    _expect(doc.get("schema") == MONOID_SCHEMA, where, f"schema must be {MONOID_SCHEMA}")
    size = doc.get("size")
    _expect(isinstance(size, int) and size >= 1, where, "size must be a positive integer")
    table = doc.get("table")
    _expect(
        isinstance(table, list) and len(table) == size
        and all(isinstance(r, list) and len(r) == size for r in table),
        where, "table must be a size x size grid",
    )
    for i, row in enumerate(table):
        for j, v in enumerate(row):
            _expect(isinstance(v, int) and 0 <= v < size, f"table[{i}][{j}]",
                    f"entry {v} out of range")
    identity = doc.get("identity")
    _expect(isinstance(identity, int) and 0 <= identity < size, where,
            "identity index out of range")
    labels = doc.get("labels")
    if labels is not None:
        _expect(isinstance(labels, list) and len(labels) == size, where,
                "labels must list one string per element")
    try:
        return make_monoid(table, identity=identity,
                           labels=tuple(labels) if labels else None)
    except HopfkitError as exc:
        raise ParseError(f"{where}: {exc}") from exc


def serialize_bialgebra(b: Bialgebra) -> dict:
    f = b.field
    mult, comult, unit, counit = [], [], [], []
    d = b.dim
    for i in range(d):
        for j in range(d):
            for k in range(d):
                if b.mult[i, j, k] != 0:
                    num, den = f.scalar_pair(b.mult[i, j, k])
                    mult.append([i, j, k, num, den])
                if b.comult[i, j, k] != 0:
                    num, den = f.scalar_pair(b.comult[i, j, k])
                    comult.append([i, j, k, num, den])
    for i in range(d):
        if b.unit[i] != 0:
            num, den = f.scalar_pair(b.unit[i])
            unit.append([i, num, den])
        if b.counit[i] != 0:
            num, den = f.scalar_pair(b.counit[i])
            counit.append([i, num, den])
    return {
        "schema": BIALGEBRA_SCHEMA,
        "field": f.name,
        "dim": d,
        "labels": list(b.labels),
        "mult": mult,
        "comult": comult,
        "unit": unit,
        "counit": counit,
    }


def serialize_monoid(m: FiniteMonoid) -> dict:
    return {
        "schema": MONOID_SCHEMA,
        "size": m.size,
        "identity": m.identity,
        "table": [[int(v) for v in row] for row in m.table],
        "labels": list(m.labels),
    }


def document_to_text(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def parse_text(text: str, verify: bool = True):
    """Parse a document from JSON text into a verified value.

    With ``verify=False`` a bialgebra document is only shape-checked, so
    callers can produce their own axiom report for bad inputs.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise ParseError("top level must be a JSON object")
    schema = doc.get("schema")
    if schema == BIALGEBRA_SCHEMA:
        return bialgebra_from_document(doc, verify=verify)
    if schema == MONOID_SCHEMA:
        return monoid_from_document(doc)
    raise ParseError(f"unknown schema {schema!r}")


def parse_path(path: str, verify: bool = True):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return parse_text(text, verify=verify)


def parse(source: str, verify: bool = True):
    """Parse either a path to a document or document text itself."""
    if os.path.exists(source):
        return parse_path(source, verify=verify)
    return parse_text(source, verify=verify)
