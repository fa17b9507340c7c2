"""Problem schemas and the compose / refine / invert pipeline.

A schema is a context ``t``, hypothesis disjuncts ``H1..Hn`` and a conclusion
``r``.  Generating schemas (``t & H -> r``) sharing ``t`` and ``r`` are
composed into ``t & (H1 | ... | Hn) -> r``; once the disjuncts are known to
be mutually exclusive the disjunction is read as exactly-one, and the
inverse schema ``t & r -> exactly-one(H1..Hn)`` is emitted.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field, replace
from typing import Optional, Sequence, Tuple

from .logic import (
    DEFAULT_ATOM_CAP, And, Formula, Iff, Implies, Not, TruthTable, Xor,
    conjoin, disjoin, format_formula, mutually_exclusive, truth_table,
)


class Kind(str, enum.Enum):
    GENERATING = "generating"
    COMPOSED = "composed"
    COMPOSED_XOR = "composed-xor"
    INVERSE = "inverse"


class SchemaError(ValueError):
    pass


class CompositionError(AssertionError):
    """The composition law failed; impossible under classical semantics."""


@dataclass(frozen=True)
class ExclusivityEvidence:
    status: str                       # propositional | asserted | empirical
    samples: Optional[int] = None
    witness: Optional[object] = None  # a joint model, if one was found
    detail: str = ""

    STATUSES = ("propositional", "asserted", "empirical")

    def __post_init__(self):
        if self.status not in self.STATUSES:
            raise ValueError(f"unknown evidence status {self.status!r}")

    @property
    def contradicted(self) -> bool:
        return self.witness is not None


@dataclass(frozen=True)
class ProblemSchema:
    name: str
    context: Formula
    disjuncts: Tuple[Formula, ...]
    conclusion: Formula
    kind: Kind = Kind.GENERATING
    labels: Tuple[str, ...] = field(default=(), compare=False)
    evidence: Optional[ExclusivityEvidence] = field(default=None, compare=False)
    origin: Optional["ProblemSchema"] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "disjuncts", tuple(self.disjuncts))
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "kind", Kind(self.kind))
        n = len(self.disjuncts)
        if self.kind is Kind.GENERATING and n != 1:
            raise SchemaError(f"generating schema needs exactly one disjunct, got {n}")
        if self.kind is not Kind.GENERATING and n < 2:
            raise SchemaError(f"{self.kind.value} schema needs at least two disjuncts, got {n}")
        if self.labels and len(self.labels) != n:
            raise SchemaError("labels must match disjuncts one to one")

    def label(self, i: int) -> str:
        if self.labels:
            return self.labels[i]
        return format_formula(self.disjuncts[i])


def exactly_one(parts: Sequence[Formula]) -> Formula:
    """Formula true iff exactly one of ``parts`` holds.

    Two parts give the binary ``^`` node.  For more, nested ``^`` would mean
    odd parity, so the at-least-one / at-most-one expansion is used instead.
    """
    parts = list(parts)
    if len(parts) == 1:
        return parts[0]
    if len(parts) == 2:
        return Xor(parts[0], parts[1])
    at_most_one = [Not(And(a, b)) for a, b in itertools.combinations(parts, 2)]
    return And(disjoin(parts), conjoin(at_most_one))


def structural_formula(s: ProblemSchema) -> Formula:
    t, r, hs = s.context, s.conclusion, s.disjuncts
    if s.kind is Kind.GENERATING:
        return Implies(And(t, hs[0]), r)
    if s.kind is Kind.COMPOSED:
        return Implies(And(t, disjoin(hs)), r)
    if s.kind is Kind.COMPOSED_XOR:
        return Implies(And(t, exactly_one(hs)), r)
    return Implies(And(t, r), exactly_one(hs))


@dataclass(frozen=True)
class GeneratingSet:
    schemas: Tuple[ProblemSchema, ...]
    context: Formula
    conclusion: Formula

    @property
    def disjuncts(self) -> Tuple[Formula, ...]:
        return tuple(s.disjuncts[0] for s in self.schemas)


def validate_generating_set(schemas: Sequence[ProblemSchema]) -> GeneratingSet:
    schemas = tuple(schemas)
    if len(schemas) < 2:
        raise SchemaError("fewer than two generating schemas")
    for s in schemas:
        if s.kind is not Kind.GENERATING:
            raise SchemaError(f"schema {s.name!r} is {s.kind.value}, not generating")
    first = schemas[0]
    seen = set()
    for s in schemas:
        if s.context != first.context:
            raise SchemaError(f"context mismatch: {s.name!r} vs {first.name!r}")
        if s.conclusion != first.conclusion:
            raise SchemaError(f"conclusion mismatch: {s.name!r} vs {first.name!r}")
        if s.disjuncts[0] in seen:
            raise SchemaError(f"duplicate disjunct {format_formula(s.disjuncts[0])}")
        seen.add(s.disjuncts[0])
    return GeneratingSet(schemas, first.context, first.conclusion)


def composition_law(g: GeneratingSet) -> Formula:
    """The biconditional between the generating statements and the composed one."""
    lhs = conjoin([structural_formula(s) for s in g.schemas])
    rhs = Implies(And(g.context, disjoin(g.disjuncts)), g.conclusion)
    return Iff(lhs, rhs)


def check_composition_law(g: GeneratingSet, cap: int = DEFAULT_ATOM_CAP) -> TruthTable:
    return truth_table(composition_law(g), cap)


def _labels(g: GeneratingSet) -> Tuple[str, ...]:
    if all(s.labels for s in g.schemas):
        return tuple(s.labels[0] for s in g.schemas)
    return ()


def compose(g: GeneratingSet, name: Optional[str] = None,
            cap: int = DEFAULT_ATOM_CAP) -> ProblemSchema:
    table = check_composition_law(g, cap)
    if not table.all_true:
        raise CompositionError("composition law is not a tautology")
    if name is None:
        name = "composed(" + ", ".join(s.name for s in g.schemas) + ")"
    return ProblemSchema(name, g.context, g.disjuncts, g.conclusion, Kind.COMPOSED,
                         labels=_labels(g))


def propositional_evidence(context: Formula, disjuncts: Sequence[Formula],
                           cap: int = DEFAULT_ATOM_CAP) -> Optional[ExclusivityEvidence]:
    """Evidence of the propositional tier, or None if some pair can hold jointly."""
    for f, g in itertools.combinations(disjuncts, 2):
        if not mutually_exclusive(context, f, g, cap):
            return None
    return ExclusivityEvidence("propositional",
                               detail=f"{len(disjuncts)} disjuncts pairwise exclusive under the context")


def refine_to_xor(s: ProblemSchema, e: Optional[ExclusivityEvidence],
                  cap: int = DEFAULT_ATOM_CAP) -> ProblemSchema:
    if s.kind is not Kind.COMPOSED:
        raise SchemaError(f"refinement needs a composed schema, got {s.kind.value}")
    if e is None:
        raise SchemaError("no exclusivity evidence")
    if e.contradicted:
        raise SchemaError(f"exclusivity contradicted by a joint model: {e.witness!r}")
    if e.status == "propositional" and propositional_evidence(s.context, s.disjuncts, cap) is None:
        raise SchemaError("disjuncts are not propositionally exclusive")
    return replace(s, kind=Kind.COMPOSED_XOR, evidence=e)


def invert(s: ProblemSchema, name: Optional[str] = None) -> ProblemSchema:
    if s.kind not in (Kind.COMPOSED, Kind.COMPOSED_XOR):
        raise SchemaError(f"only composed schemas can be inverted, got {s.kind.value}")
    return replace(s, name=name or f"inverse({s.name})", kind=Kind.INVERSE, origin=s)


def restore(inverse: ProblemSchema) -> ProblemSchema:
    """The composed schema an inverse schema was produced from."""
    if inverse.kind is not Kind.INVERSE or inverse.origin is None:
        raise SchemaError("schema carries no composed origin")
    return inverse.origin
