"""JSON serialization for algebras and modules.

Algebra data carries ``"schema": 1`` and comes in two shapes:

* bound quiver form — ``field``, ``vertices``, ``arrows`` (``[label, source,
  target]`` with 1-based endpoints) and ``relations`` (each a list of
  ``[coefficient, [arrow labels]]`` terms, paths composing left to right);
* structure-constants form — ``field``, ``basis`` (labels), ``unit``,
  ``table`` (row-major: ``table[i][j]`` is the coordinate vector of
  ``basis[i] * basis[j]``) and ``idempotents`` (coordinate vectors of the
  orthogonal primitive idempotent decomposition of the unit).

Both accept optional ``id``, ``order`` and ``construction`` entries; unknown
entries are rejected.  Scalars may be integers or strings (``"3/2"`` works
over any field of characteristic not dividing 2).

:func:`dump_algebra` always emits the structure-constants form with the basis
sorted by label and scalars rendered as strings, so the output is byte-stable
under ``json.dumps(..., sort_keys=True)``.
"""

from __future__ import annotations

import json

from .algebra import AssocAlgebra
from .errors import InputError
from .fields import field_from_json
from .linalg import Matrix
from .modules import ModuleRep, module_from_action
from .quiver import Quiver, compile_bqa

SCHEMA = 1

_COMMON_KEYS = {"schema", "field", "id", "order", "construction"}
_QUIVER_KEYS = _COMMON_KEYS | {"vertices", "arrows", "relations"}
_TABLE_KEYS = _COMMON_KEYS | {"basis", "unit", "table", "idempotents"}
_MODULE_KEYS = {"schema", "dimension", "action"}


def canonical_json(data) -> str:
    """Byte-stable JSON rendering (sorted keys, fixed separators)."""
    return json.dumps(data, sort_keys=True, indent=1)


def _check_schema(data):
    if not isinstance(data, dict):
        raise InputError("expected a JSON object")
    if data.get("schema") != SCHEMA:
        raise InputError(
            f"unsupported schema {data.get('schema')!r}; this reader expects {SCHEMA}"
        )


def _reject_unknown(data, allowed, what):
    unknown = sorted(set(data) - allowed)
    if unknown:
        raise InputError(f"unknown {what} entries: {', '.join(unknown)}")


def _scalar(field, value):
    if isinstance(value, (int, str)):
        return field.normalize(value)
    raise InputError(f"scalars must be integers or strings, got {value!r}")


def _load_quiver_form(field, data):
    vertices = data.get("vertices")
    if not isinstance(vertices, int) or vertices < 1:
        raise InputError("'vertices' must be a positive integer")
    arrows = []
    for entry in data.get("arrows", []):
        if not (isinstance(entry, (list, tuple)) and len(entry) == 3):
            raise InputError(f"an arrow must be [label, source, target]: {entry!r}")
        label, src, tgt = entry
        arrows.append((str(label), int(src), int(tgt)))
    relations = []
    for rel in data.get("relations", []):
        terms = []
        for term in rel:
            if not (isinstance(term, (list, tuple)) and len(term) == 2):
                raise InputError(
                    f"a relation term must be [coefficient, [labels]]: {term!r}"
                )
            coeff, labels = term
            terms.append((_scalar(field, coeff), [str(s) for s in labels]))
        relations.append(terms)
    return compile_bqa(field, Quiver(vertices, arrows), relations)


def _load_table_form(field, data):
    for key in ("basis", "unit", "table", "idempotents"):
        if key not in data:
            raise InputError(f"structure-constants form needs {key!r}")
    labels = [str(s) for s in data["basis"]]
    dim = len(labels)

    def vector(entry, what):
        if len(entry) != dim:
            raise InputError(f"{what} has length {len(entry)}, expected {dim}")
        return tuple(_scalar(field, x) for x in entry)

    table = data["table"]
    if len(table) != dim or any(len(row) != dim for row in table):
        raise InputError("'table' must be a dim x dim array of vectors")
    tensor = tuple(
        tuple(vector(table[i][j], f"table[{i}][{j}]") for j in range(dim))
        for i in range(dim)
    )
    unit = vector(data["unit"], "unit")
    idems = tuple(vector(e, "idempotent") for e in data["idempotents"])
    return AssocAlgebra(field, tensor, unit, labels=labels, idempotents=idems)


def load_algebra(source) -> dict:
    """Decode an algebra record from a dict or JSON text."""
    data = json.loads(source) if isinstance(source, str) else source
    _check_schema(data)
    if "field" not in data:
        raise InputError("algebra data needs a 'field' entry")
    field = field_from_json(data["field"])
    if "table" in data or "basis" in data:
        _reject_unknown(data, _TABLE_KEYS, "algebra")
        algebra = _load_table_form(field, data)
    else:
        _reject_unknown(data, _QUIVER_KEYS, "algebra")
        algebra = _load_quiver_form(field, data)
    order = data.get("order")
    if order is not None:
        order = tuple(int(v) for v in order)
    construction = data.get("construction", {"kind": "loaded"})
    return {
        "id": str(data.get("id", "loaded")),
        "kind": construction.get("kind", "loaded"),
        "field": field,
        "algebra": algebra,
        "order": order,
        "construction": construction,
        "manifest": {"dimension": algebra.dim, "vertices": algebra.n_vertices},
    }


def dump_algebra(algebra, ident=None, order=None, construction=None) -> dict:
    """Canonical structure-constants form (basis sorted by label)."""
    field = algebra.field
    perm = sorted(range(algebra.dim), key=lambda i: algebra.labels[i])
    table = [
        [
            [field.to_str(algebra.tensor[perm[i]][perm[j]][perm[k]])
             for k in range(algebra.dim)]
            for j in range(algebra.dim)
        ]
        for i in range(algebra.dim)
    ]
    data = {
        "schema": SCHEMA,
        "field": field.to_json(),
        "basis": [algebra.labels[i] for i in perm],
        "unit": [field.to_str(algebra.unit[i]) for i in perm],
        "table": table,
        "idempotents": [
            [field.to_str(e[i]) for i in perm] for e in (algebra.idempotents or ())
        ],
    }
    if ident is not None:
        data["id"] = str(ident)
    if order is not None:
        data["order"] = [int(v) for v in order]
    if construction is not None:
        data["construction"] = construction
    return data


def dump_record(record) -> dict:
    """Serialize an example record's algebra with its metadata."""
    return dump_algebra(
        record["algebra"],
        ident=record.get("id"),
        order=record.get("order"),
        construction=record.get("construction"),
    )


def load_module(algebra, source) -> ModuleRep:
    """Decode a module over ``algebra`` from a dict or JSON text."""
    data = json.loads(source) if isinstance(source, str) else source
    _check_schema(data)
    _reject_unknown(data, _MODULE_KEYS, "module")
    dim = data.get("dimension")
    if not isinstance(dim, int) or dim < 0:
        raise InputError("'dimension' must be a nonnegative integer")
    field = algebra.field
    wanted = set(algebra.action_labels())
    given = set(data.get("action", {}))
    if given != wanted:
        raise InputError(
            f"module action must be keyed by {sorted(wanted)}, got {sorted(given)}"
        )
    action = {}
    for label, rows in data["action"].items():
        if len(rows) != dim or any(len(r) != dim for r in rows):
            raise InputError(f"action matrix {label!r} is not {dim} x {dim}")
        action[label] = Matrix(
            field,
            tuple(tuple(_scalar(field, x) for x in r) for r in rows),
            ncols=dim,
        )
    return module_from_action(algebra, action, check="full")


def dump_module(m: ModuleRep) -> dict:
    """Serialize a module by its generator-action matrices."""
    field = m.algebra.field
    return {
        "schema": SCHEMA,
        "dimension": m.dim,
        "action": {
            label: [[field.to_str(x) for x in row] for row in mat.rows]
            for label, mat in sorted(m.action.items())
        },
    }
