"""Canonical diagram and Vogan-diagram file formats (JSON documents).

Diagram file::

    {"name": "E10", "matrix": [[2, -1, ...], ...], "labels": ["0", "1", ...]}

The matrix is authoritative; ``labels`` only affects rendering and painting
lookups and defaults to stringified indices.  A Vogan-diagram file wraps a
diagram (inline object or catalog name) with an involution and a painting::

    {"diagram": "E10", "involution": [0, 1, ...], "painted": ["9", "8"]}

``painted`` entries are vertex labels; bare integers are accepted and
matched against labels first, then against raw indices.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from .exceptions import DiagramFileError, GCMError, UnknownVertexLabel
from .gcm import GeneralizedCartanMatrix, validate


@dataclass(frozen=True)
class DiagramDoc:
    gcm: GeneralizedCartanMatrix
    labels: tuple[str, ...]

    def index_of(self, token) -> int:
        want = str(token)
        if want in self.labels:
            return self.labels.index(want)
        if isinstance(token, int) and 0 <= token < self.gcm.n:
            return token
        raise UnknownVertexLabel(
            f"no vertex labeled {token!r}; labels are {list(self.labels)}"
        )


def diagram_to_dict(g: GeneralizedCartanMatrix, labels=None) -> dict:
    doc = {
        "name": g.name or "",
        "matrix": [list(row) for row in g.a],
    }
    if labels is not None:
        doc["labels"] = [str(x) for x in labels]
    return doc


def diagram_to_json(g: GeneralizedCartanMatrix, labels=None) -> str:
    return json.dumps(diagram_to_dict(g, labels), indent=2) + "\n"


def diagram_from_dict(doc: dict) -> DiagramDoc:
    if not isinstance(doc, dict):
        raise DiagramFileError(f"expected an object, got {type(doc).__name__}")
    if "matrix" not in doc:
        raise DiagramFileError('missing required field "matrix"')
    name = doc.get("name") or None
    try:
        g = validate(doc["matrix"], name)
    except GCMError as exc:
        where = f" at {exc.position}" if exc.position else ""
        raise DiagramFileError(f'field "matrix" is not a valid GCM{where}: {exc}') from exc
    except TypeError as exc:
        raise DiagramFileError(f'field "matrix" is malformed: {exc}') from exc
    labels = doc.get("labels")
    if labels is None:
        labels = [str(i) for i in range(g.n)]
    if len(labels) != g.n:
        raise DiagramFileError(
            f'field "labels" has {len(labels)} entries for a rank-{g.n} matrix'
        )
    return DiagramDoc(g, tuple(str(x) for x in labels))


def parse_diagram(text: str) -> DiagramDoc:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DiagramFileError(f"invalid JSON (line {exc.lineno}, column {exc.colno}): {exc.msg}") from exc
    return diagram_from_dict(doc)


def load_diagram(path) -> DiagramDoc:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise DiagramFileError(f"cannot read {path}: {exc}") from exc
    return parse_diagram(text)


@dataclass(frozen=True)
class VoganDoc:
    diagram_ref: object  # DiagramDoc for inline diagrams, str for catalog names
    involution: Optional[tuple[int, ...]]
    painted: tuple

    @property
    def is_named(self) -> bool:
        return isinstance(self.diagram_ref, str)


def vogan_to_dict(diagram_ref, involution=None, painted=()) -> dict:
    """Serialize a Vogan diagram; diagram_ref is a catalog name or a
    (gcm, labels) pair to inline."""
    if isinstance(diagram_ref, str):
        ref = diagram_ref
    else:
        g, labels = diagram_ref
        ref = diagram_to_dict(g, labels)
    doc = {"diagram": ref}
    if involution is not None:
        doc["involution"] = list(involution)
    doc["painted"] = [str(x) for x in painted]
    return doc


def vogan_to_json(diagram_ref, involution=None, painted=()) -> str:
    return json.dumps(vogan_to_dict(diagram_ref, involution, painted), indent=2) + "\n"


def parse_vogan_file(text: str) -> VoganDoc:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DiagramFileError(f"invalid JSON (line {exc.lineno}, column {exc.colno}): {exc.msg}") from exc
    if not isinstance(doc, dict) or "diagram" not in doc:
        raise DiagramFileError('a Vogan-diagram file needs a "diagram" field')
    ref = doc["diagram"]
    if isinstance(ref, dict):
        ref = diagram_from_dict(ref)
    elif not isinstance(ref, str):
        raise DiagramFileError('"diagram" must be a name or an inline diagram object')
    involution = doc.get("involution")
    if involution is not None:
        if not isinstance(involution, list) or not all(isinstance(x, int) for x in involution):
            raise DiagramFileError('"involution" must be a list of integers')
        involution = tuple(involution)
    painted = doc.get("painted", [])
    if not isinstance(painted, list):
        raise DiagramFileError('"painted" must be a list of vertex labels')
    return VoganDoc(ref, involution, tuple(painted))
