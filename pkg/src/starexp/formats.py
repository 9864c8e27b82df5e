"""Instance, solution and CNF file formats.

Instance document (JSON object)::

    {"version": 1, "edges": [[1, 3], [2, 5, 9]], "names": ["a", "b"]}

``version`` defaults to 1 and ``names`` is optional (one string per edge).
Solution document: ``{"steps": [[edge, entry, exit], ...]}``. CNF input is
DIMACS: ``c`` comment lines, a ``p cnf VARS CLAUSES`` header, and clauses as
whitespace-separated literals each terminated by ``0``.
"""
from __future__ import annotations

import json
import numbers
from dataclasses import dataclass

from .core import Exploration, InvalidInstance, TemporalStar, Window, canonicalize

FORMAT_VERSION = 1


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = ""
        if line is not None:
            where = f"line {line}, column {column}: " if column is not None else f"line {line}: "
        super().__init__(where + message)
        self.line = line
        self.column = column


@dataclass(frozen=True)
class InstanceDocument:
    version: int
    edges: tuple[tuple[int, ...], ...]
    names: tuple[str, ...] | None = None

    def to_star(self) -> TemporalStar:
        return TemporalStar(self.edges)


def _load_json(text: str):
    if not text.strip():
        raise ParseError("empty document")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None


def _locate(text: str, edge: int) -> int | None:
    """Best-effort line number of the ``edge``-th inner list of ``edges``."""
    start = text.find('"edges"')
    if start < 0:
        return None
    depth, seen = 0, -1
    for pos in range(text.index("[", start), len(text)):
        ch = text[pos]
        if ch == "[":
            depth += 1
            if depth == 2:
                seen += 1
                if seen == edge:
                    return text.count("\n", 0, pos) + 1
        elif ch == "]":
            depth -= 1
            if depth == 0:
                break
    return None


def parse_document(text: str) -> InstanceDocument:
    doc = _load_json(text)
    if not isinstance(doc, dict) or "edges" not in doc:
        raise ParseError('expected an object with an "edges" list')
    version = doc.get("version", FORMAT_VERSION)
    if version != FORMAT_VERSION:
        raise ParseError(f"unsupported format version {version!r}")
    raw = doc["edges"]
    if not isinstance(raw, list) or not all(isinstance(e, list) for e in raw):
        raise ParseError('"edges" must be a list of label lists')
    for i, labels in enumerate(raw):
        for label in labels:
            if isinstance(label, bool) or not isinstance(label, numbers.Integral):
                raise ParseError(f"edge {i}: label {label!r} is not an integer", _locate(text, i))
    try:
        star = canonicalize(raw)
    except InvalidInstance as exc:
        raise ParseError(str(exc), _locate(text, exc.edge)) from None
    names = doc.get("names")
    if names is not None:
        if not isinstance(names, list) or len(names) != len(raw) or not all(isinstance(n, str) for n in names):
            raise ParseError('"names" must hold one string per edge')
        names = tuple(names)
    return InstanceDocument(version, star.edges, names)


def parse_instance(text: str) -> TemporalStar:
    return parse_document(text).to_star()


def serialize_document(doc: InstanceDocument) -> str:
    out = {"version": doc.version, "edges": [list(e) for e in doc.edges]}
    if doc.names is not None:
        out["names"] = list(doc.names)
    return json.dumps(out)


def serialize_instance(star: TemporalStar, names=None) -> str:
    return serialize_document(InstanceDocument(FORMAT_VERSION, star.edges, tuple(names) if names else None))


def exploration_to_json(expl: Exploration) -> dict:
    return {"steps": [[w.edge, w.entry, w.exit] for w in expl]}


def parse_solution(text: str) -> Exploration:
    doc = _load_json(text)
    if not isinstance(doc, dict) or not isinstance(doc.get("steps"), list):
        raise ParseError('expected an object with a "steps" list')
    steps = []
    for i, step in enumerate(doc["steps"]):
        if (
            not isinstance(step, list)
            or len(step) != 3
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in step)
        ):
            raise ParseError(f"step {i} must be [edge, entry, exit] integers")
        steps.append(Window(*step))
    return Exploration(tuple(steps))


def parse_dimacs(text: str) -> tuple[int, list[list[int]]]:
    """Return ``(var_count, clauses)``; clauses may span lines."""
    var_count = None
    declared = None
    clauses: list[list[int]] = []
    current: list[int] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ParseError(f"bad problem line {line!r}", lineno)
            try:
                var_count, declared = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(f"bad problem line {line!r}", lineno) from None
            continue
        if var_count is None:
            raise ParseError("clause before the 'p cnf' header", lineno)
        for col, token in enumerate(line.split(), start=1):
            try:
                lit = int(token)
            except ValueError:
                raise ParseError(f"malformed literal {token!r}", lineno, col) from None
            if lit == 0:
                clauses.append(current)
                current = []
            else:
                current.append(lit)
    if var_count is None:
        raise ParseError("missing 'p cnf' header")
    if current:
        clauses.append(current)
    if declared is not None and declared != len(clauses):
        raise ParseError(f"header declares {declared} clauses, found {len(clauses)}")
    return var_count, clauses
