"""JSON structure files.

A structure file is one object::

    {"kind": ..., "dimension": n, "basis": [...],
     "scalars": {"parameters": [...], "invertible": [...], "relations": [...]},
     "payload": [...]}

Payload entries by kind:

* ``leibniz-algebra``: ``{"left", "right", "value": {label: coeff}}``
* ``leibniz-coalgebra``: ``{"of", "value": [{"left", "right", "coeff"}]}``
* ``tensor2`` and ``bilinear-form``: ``{"left", "right", "coeff"}``
* ``operator``: ``{"of", "value": {label: coeff}}``, the image of ``of``

Coefficients are coefficient-expression strings. Unlisted entries are zero.
Files from several sources can share one ring: ``merge_scalars`` unions their
declarations, then ``build`` parses each payload in the merged ring.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Mapping

from .errors import ParseError, PreconditionError, ShapeError
from .scalar import ScalarRing
from .structures import BilinearForm, LeibnizAlgebra, LeibnizCoalgebra, LinearOperator
from .tensor import Tensor

__all__ = [
    "KINDS",
    "StructureDoc",
    "read_doc",
    "parse_doc",
    "merge_scalars",
    "build",
    "load",
    "to_doc",
    "dumps",
    "write",
]

KINDS = ("leibniz-algebra", "leibniz-coalgebra", "tensor2", "bilinear-form", "operator")


@dataclass(frozen=True)
class StructureDoc:
    """A validated but not yet ring-bound structure file."""

    kind: str
    basis: tuple[str, ...]
    scalars: dict
    payload: list
    source: str = "<document>"

    @property
    def dimension(self) -> int:
        return len(self.basis)


def _fail(source: str, message: str):
    raise ShapeError(f"{source}: {message}")


def parse_doc(data: Any, source: str = "<document>") -> StructureDoc:
    if not isinstance(data, Mapping):
        _fail(source, "structure file must be a JSON object")
    kind = data.get("kind")
    if kind not in KINDS:
        _fail(source, f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    basis = data.get("basis")
    if not isinstance(basis, list) or not basis or not all(isinstance(b, str) and b for b in basis):
        _fail(source, "basis must be a non-empty list of labels")
    if len(set(basis)) != len(basis):
        _fail(source, f"basis labels not unique: {basis}")
    dim = data.get("dimension", len(basis))
    if dim != len(basis):
        _fail(source, f"dimension {dim} does not match {len(basis)} basis labels")
    scalars = data.get("scalars", {}) or {}
    if not isinstance(scalars, Mapping):
        _fail(source, "scalars must be an object")
    for key in ("parameters", "invertible", "relations"):
        val = scalars.get(key, [])
        if not isinstance(val, list) or not all(isinstance(v, str) for v in val):
            _fail(source, f"scalars.{key} must be a list of strings")
    payload = data.get("payload", [])
    if not isinstance(payload, list):
        _fail(source, "payload must be a list")
    return StructureDoc(kind, tuple(basis), dict(scalars), payload, source)


def read_doc(path: str | Path) -> StructureDoc:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise PreconditionError(f"cannot read {path}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc.msg})", text, exc.pos) from None
    return parse_doc(data, str(path))


def merge_scalars(*docs: StructureDoc) -> ScalarRing:
    """One ring declaring every parameter, invertible and relation of ``docs``."""
    params: list[str] = []
    inv: set[str] = set()
    rels: list[str] = []
    char = 0
    for doc in docs:
        for p in doc.scalars.get("parameters", []):
            if p not in params:
                params.append(p)
        inv.update(doc.scalars.get("invertible", []))
        for r in doc.scalars.get("relations", []):
            if r not in rels:
                rels.append(r)
        c = int(doc.scalars.get("characteristic", 0) or 0)
        if c and char and c != char:
            raise PreconditionError(f"files disagree on the characteristic ({char} vs {c})")
        char = char or c
    return ScalarRing(params, inv, rels, char)


def _label(doc: StructureDoc, pos: dict, label, what: str) -> int:
    if label not in pos:
        _fail(doc.source, f"{what} refers to undeclared basis label {label!r}")
    return pos[label]


def _coeff(ring: ScalarRing, doc: StructureDoc, text):
    if isinstance(text, bool) or not isinstance(text, (str, int)):
        _fail(doc.source, f"coefficient must be a string or integer, got {text!r}")
    try:
        return ring(str(text))
    except ParseError as exc:
        err = ParseError(f"{doc.source}: {exc}")
        err.text, err.position = exc.text, exc.position
        raise err from None


def _entry(doc: StructureDoc, item, keys: tuple[str, ...]):
    if not isinstance(item, Mapping) or any(k not in item for k in keys):
        _fail(doc.source, f"payload entry {item!r} needs keys {', '.join(keys)}")


def build(doc: StructureDoc, ring: ScalarRing | None = None):
    """Parse ``doc``'s payload in ``ring`` (default: the file's own ring)."""
    ring = ring if ring is not None else merge_scalars(doc)
    basis = doc.basis
    n = len(basis)
    pos = {b: i for i, b in enumerate(basis)}
    items = []
    if doc.kind == "leibniz-algebra":
        for it in doc.payload:
            _entry(doc, it, ("left", "right", "value"))
            i, j = _label(doc, pos, it["left"], "left"), _label(doc, pos, it["right"], "right")
            if not isinstance(it["value"], Mapping):
                _fail(doc.source, "bracket value must map labels to coefficients")
            for z, cf in it["value"].items():
                items.append(((i, j, _label(doc, pos, z, "value")), _coeff(ring, doc, cf)))
        return LeibnizAlgebra(Tensor.from_sparse(ring, n, 3, items), basis)
    if doc.kind == "leibniz-coalgebra":
        for it in doc.payload:
            _entry(doc, it, ("of", "value"))
            i = _label(doc, pos, it["of"], "of")
            if not isinstance(it["value"], list):
                _fail(doc.source, "coproduct value must be a list of terms")
            for t in it["value"]:
                _entry(doc, t, ("left", "right", "coeff"))
                a, b = _label(doc, pos, t["left"], "left"), _label(doc, pos, t["right"], "right")
                items.append(((i, a, b), _coeff(ring, doc, t["coeff"])))
        return LeibnizCoalgebra(Tensor.from_sparse(ring, n, 3, items), basis)
    if doc.kind in ("tensor2", "bilinear-form"):
        for it in doc.payload:
            _entry(doc, it, ("left", "right", "coeff"))
            a, b = _label(doc, pos, it["left"], "left"), _label(doc, pos, it["right"], "right")
            items.append(((a, b), _coeff(ring, doc, it["coeff"])))
        t = Tensor.from_sparse(ring, n, 2, items)
        return BilinearForm(t) if doc.kind == "bilinear-form" else t
    # operator
    for it in doc.payload:
        _entry(doc, it, ("of", "value"))
        j = _label(doc, pos, it["of"], "of")
        if not isinstance(it["value"], Mapping):
            _fail(doc.source, "operator value must map labels to coefficients")
        for y, cf in it["value"].items():
            items.append(((_label(doc, pos, y, "value"), j), _coeff(ring, doc, cf)))
    return LinearOperator(Tensor.from_sparse(ring, n, 2, items))


def load(path: str | Path):
    return build(read_doc(path))


# --------------------------------------------------------------------------
# writing


def _kind_of(obj) -> str:
    if isinstance(obj, LeibnizAlgebra):
        return "leibniz-algebra"
    if isinstance(obj, LeibnizCoalgebra):
        return "leibniz-coalgebra"
    if isinstance(obj, BilinearForm):
        return "bilinear-form"
    if isinstance(obj, LinearOperator):
        return "operator"
    if isinstance(obj, Tensor) and obj.order == 2:
        return "tensor2"
    raise ShapeError(f"cannot serialize {type(obj).__name__}")


def to_doc(obj, basis=None) -> dict:
    """The JSON-ready document for a structure; entries in index order."""
    kind = _kind_of(obj)
    if basis is None:
        basis = getattr(obj, "basis", None)
    t = {"leibniz-algebra": "c", "leibniz-coalgebra": "d", "bilinear-form": "matrix", "operator": "matrix"}
    tensor = getattr(obj, t[kind]) if kind in t else obj
    n = tensor.dim
    if not basis:
        basis = ("e", "f", "g")[:n] if n <= 3 else tuple(f"e{i + 1}" for i in range(n))
    basis = list(basis)
    payload: list = []
    if kind == "leibniz-algebra":
        for i in range(n):
            for j in range(n):
                value = {basis[k]: str(tensor[i, j, k]) for k in range(n) if tensor[i, j, k]}
                if value:
                    payload.append({"left": basis[i], "right": basis[j], "value": value})
    elif kind == "leibniz-coalgebra":
        for i in range(n):
            terms = [
                {"left": basis[a], "right": basis[b], "coeff": str(tensor[i, a, b])}
                for a in range(n)
                for b in range(n)
                if tensor[i, a, b]
            ]
            if terms:
                payload.append({"of": basis[i], "value": terms})
    elif kind == "operator":
        for j in range(n):
            value = {basis[i]: str(tensor[i, j]) for i in range(n) if tensor[i, j]}
            if value:
                payload.append({"of": basis[j], "value": value})
    else:
        for a in range(n):
            for b in range(n):
                if tensor[a, b]:
                    payload.append({"left": basis[a], "right": basis[b], "coeff": str(tensor[a, b])})
    return {
        "kind": kind,
        "dimension": n,
        "basis": basis,
        "scalars": tensor.ring.to_dict(),
        "payload": payload,
    }


def dumps(doc: Mapping) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def write(obj, path: str | Path, basis=None) -> Path:
    path = Path(path)
    path.write_text(dumps(to_doc(obj, basis)), encoding="utf-8")
    return path
