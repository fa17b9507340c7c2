"""Line-oriented schema files.

::

    # median through C gives equal areas
    [problem]
    name = median
    context = t
    disjunct = p1
    label = median
    conclusion = r

    [interpretation]
    t = group1.triangle_line_point
    p1 = group1.median
    r = group1.equal_areas

``disjunct`` and ``label`` may repeat.  ``kind`` is optional and defaults to
``generating`` for one disjunct and ``composed`` otherwise.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional

from .logic import ATOM_RE, FormulaSyntaxError, format_formula, parse
from .schema import Kind, ProblemSchema, SchemaError

_PROBLEM_KEYS = {"name", "context", "disjunct", "label", "conclusion", "kind"}
_REPEATABLE = {"disjunct", "label"}
_SECTION_RE = re.compile(r"\[([a-z_]+)\]\Z")


class SchemaFormatError(SchemaError):
    def __init__(self, message: str, source: str = "<string>", line: int = 0):
        self.source = source
        self.line = line
        where = f"{source}:{line}: " if line else f"{source}: "
        super().__init__(where + message)


@dataclass
class SchemaFile:
    schema: ProblemSchema
    interpretation: Dict[str, str] = field(default_factory=dict)
    source: str = "<string>"


def parse_schema_text(text: str, source: str = "<string>") -> SchemaFile:
    section = None
    problem: Dict[str, List[tuple]] = {}
    interp: Dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _SECTION_RE.match(line)
        if m:
            section = m.group(1)
            if section not in ("problem", "interpretation"):
                raise SchemaFormatError(f"unknown section [{section}]", source, lineno)
            continue
        if "=" not in line:
            raise SchemaFormatError(f"expected 'key = value', got {line!r}", source, lineno)
        key, value = (part.strip() for part in line.split("=", 1))
        if section is None:
            raise SchemaFormatError("key outside of a section", source, lineno)
        if section == "problem":
            if key not in _PROBLEM_KEYS:
                raise SchemaFormatError(f"unknown key {key!r}", source, lineno)
            if key in problem and key not in _REPEATABLE:
                raise SchemaFormatError(f"duplicate key {key!r}", source, lineno)
            problem.setdefault(key, []).append((value, lineno))
        else:
            if not ATOM_RE.match(key):
                raise SchemaFormatError(f"invalid atom name {key!r}", source, lineno)
            if key in interp:
                raise SchemaFormatError(f"atom {key!r} bound twice", source, lineno)
            interp[key] = value

    for key in ("name", "context", "disjunct", "conclusion"):
        if key not in problem:
            raise SchemaFormatError(f"missing key {key!r}", source)

    def formula(value, lineno):
        try:
            return parse(value)
        except FormulaSyntaxError as exc:
            raise SchemaFormatError(str(exc), source, lineno) from None

    disjuncts = [formula(v, n) for v, n in problem["disjunct"]]
    labels = [v for v, _ in problem.get("label", [])]
    if "kind" in problem:
        value, lineno = problem["kind"][0]
        try:
            kind = Kind(value)
        except ValueError:
            raise SchemaFormatError(f"unknown kind {value!r}", source, lineno) from None
    else:
        kind = Kind.GENERATING if len(disjuncts) == 1 else Kind.COMPOSED
    try:
        schema = ProblemSchema(
            name=problem["name"][0][0],
            context=formula(*problem["context"][0]),
            disjuncts=disjuncts,
            conclusion=formula(*problem["conclusion"][0]),
            kind=kind,
            labels=labels,
        )
    except SchemaError as exc:
        raise SchemaFormatError(str(exc), source) from None
    return SchemaFile(schema, interp, source)


def load_schema(path) -> SchemaFile:
    path = Path(path)
    return parse_schema_text(path.read_text(encoding="utf-8"), str(path))


def dump_schema(schema: ProblemSchema, interpretation: Optional[Dict[str, str]] = None) -> str:
    lines = [
        "[problem]",
        f"name = {schema.name}",
        f"kind = {schema.kind.value}",
        f"context = {format_formula(schema.context)}",
    ]
    lines += [f"disjunct = {format_formula(h)}" for h in schema.disjuncts]
    lines += [f"label = {label}" for label in schema.labels]
    lines.append(f"conclusion = {format_formula(schema.conclusion)}")
    if interpretation:
        lines += ["", "[interpretation]"]
        lines += [f"{atom} = {pid}" for atom, pid in sorted(interpretation.items())]
    return "\n".join(lines) + "\n"
