"""Semantic checking of schemas against sampled geometric configurations.

Atoms of a schema are bound to built-in predicates (an *interpretation*);
a sampler produces configurations meant to satisfy the hypothesis side,
and every sample is judged exactly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Union

from . import geometry as geo
from .logic import Formula, atoms, evaluate
from .sampling import SAMPLERS, get_sampler, sample_rng
from .schema import ExclusivityEvidence, Kind, ProblemSchema, structural_formula

# id: (group, predicate)
PREDICATES: Dict[str, tuple] = {
    "group1.triangle_line_point": (1, geo.t_triangle_line_point),
    "group1.median": (1, geo.p1_median),
    "group1.parallel": (1, geo.p2_parallel),
    "group1.equal_areas": (1, geo.r_equal_areas),
    "group2.quadrilateral_diagonals": (2, geo.t_quadrilateral_diagonals),
    "group2.parallel_sides": (2, geo.p1_parallel_sides),
    "group2.equal_sides": (2, geo.p2_equal_sides),
    "group2.equal_ratios": (2, lambda c: geo.r_equal_ratios(c) is not None),
}

GROUP_SAMPLERS = {
    1: ("group1.forward.median", "group1.forward.parallel", "group1.inverse", "group1.random"),
    2: ("group2.forward.trapezium", "group2.forward.parallelogram", "group2.inverse", "group2.random"),
}


class InterpretationError(ValueError):
    pass


def config_group(config) -> int:
    if isinstance(config, geo.GroupIConfig):
        return 1
    if isinstance(config, geo.GroupIIConfig):
        return 2
    raise TypeError(f"not a configuration: {config!r}")


def interpretation_group(interp: Mapping[str, str]) -> int:
    groups = set()
    for atom, pid in interp.items():
        if pid not in PREDICATES:
            raise InterpretationError(f"unknown predicate {pid!r} for atom {atom!r}")
        groups.add(PREDICATES[pid][0])
    if len(groups) != 1:
        raise InterpretationError("interpretation must bind atoms within a single group")
    return groups.pop()


def valuation(interp: Mapping[str, str], config) -> Dict[str, bool]:
    return {atom: bool(PREDICATES[pid][1](config)) for atom, pid in interp.items()}


def config_to_dict(config) -> Dict[str, List[str]]:
    """Exact coordinates as ``"num/den"`` strings."""
    out = {name: [_rat_str(p.x), _rat_str(p.y)] for name, p in config.points().items()}
    if isinstance(config, geo.GroupIConfig):
        out["s"] = _rat_str(config.s)
    return out


def config_from_dict(data: Mapping) -> object:
    def point(xy):
        return geo.Point(geo.Fraction(xy[0]), geo.Fraction(xy[1]))
    if "s" in data:
        return geo.GroupIConfig(point(data["A"]), point(data["B"]), point(data["C"]),
                                point(data["d"]), geo.Fraction(data["s"]))
    return geo.GroupIIConfig(point(data["A"]), point(data["B"]), point(data["C"]), point(data["D"]))


def _rat_str(q) -> str:
    return f"{q.numerator}/{q.denominator}"


@dataclass
class Counterexample:
    index: int
    reason: str               # conclusion | precondition | both | neither
    valuation: Dict[str, bool]
    config: Dict[str, object]


@dataclass
class VerificationReport:
    schema: str
    sampler: str
    samples: int
    seed: int
    passes: int = 0
    failures: int = 0
    precondition_failures: int = 0
    branches: Dict[str, int] = field(default_factory=dict)
    both: int = 0
    neither: int = 0
    counterexamples: List[Counterexample] = field(default_factory=list)

    @property
    def all_pass(self) -> bool:
        return self.failures == 0


def _check_bindings(schema: ProblemSchema, interp: Mapping[str, str]) -> int:
    needed = atoms(structural_formula(schema))
    missing = [a for a in needed if a not in interp]
    if missing:
        raise InterpretationError(f"unbound atom(s): {', '.join(missing)}")
    return interpretation_group({a: interp[a] for a in needed})


def check_implication(schema: ProblemSchema, interp: Mapping[str, str], sampler_id: str,
                      n: int, seed: int = 0, max_counterexamples: int = 10) -> VerificationReport:
    """Judge ``schema`` on ``n`` seeded samples from ``sampler_id``.

    A sample whose hypothesis side is false is a precondition failure; one
    whose conclusion side is false is a counterexample.  Both count towards
    ``failures``.  Branch tallies record which disjunct held; for inverse
    schemas "both" and "neither" are tallied separately.
    """
    if n < 1:
        raise ValueError("sample count must be at least 1")
    group = _check_bindings(schema, interp)
    sampler_group, sampler = get_sampler(sampler_id)
    if sampler_group != group:
        raise InterpretationError(f"sampler {sampler_id!r} does not produce group {group} configurations")

    labels = [schema.label(i) for i in range(len(schema.disjuncts))]
    report = VerificationReport(schema.name, sampler_id, n, seed,
                                branches={label: 0 for label in labels})
    used = {a: interp[a] for a in atoms(structural_formula(schema))}

    for i in range(n):
        config = sampler(sample_rng(seed, i))
        v = valuation(used, config)
        t = evaluate(schema.context, v)
        r = evaluate(schema.conclusion, v)
        held = [evaluate(h, v) for h in schema.disjuncts]
        count = sum(held)

        if schema.kind is Kind.INVERSE:
            hypothesis, conclusion = t and r, count == 1
        elif schema.kind is Kind.COMPOSED_XOR:
            hypothesis, conclusion = t and count == 1, r
        else:
            hypothesis, conclusion = t and count >= 1, r

        if hypothesis:
            if count == 1:
                report.branches[labels[held.index(True)]] += 1
            elif count == 0:
                report.neither += 1
            else:
                report.both += 1

        if not hypothesis:
            reason = "precondition"
            report.precondition_failures += 1
        elif conclusion:
            report.passes += 1
            continue
        elif schema.kind is Kind.INVERSE:
            reason = "both" if count > 1 else "neither"
        else:
            reason = "conclusion"
        report.failures += 1
        if len(report.counterexamples) < max_counterexamples:
            report.counterexamples.append(Counterexample(i, reason, v, config_to_dict(config)))
    return report


Predicate = Union[str, Formula, Callable[[object], bool]]


def _as_callable(p: Predicate, interp: Optional[Mapping[str, str]]):
    if callable(p):
        return p
    if isinstance(p, str):
        if p not in PREDICATES:
            raise InterpretationError(f"unknown predicate {p!r}")
        return PREDICATES[p][1]
    if interp is None:
        raise InterpretationError("formula predicates need an interpretation")
    bound = {a: interp[a] for a in atoms(p)}
    return lambda config: evaluate(p, valuation(bound, config))


def _context_predicate(group: int):
    return PREDICATES["group1.triangle_line_point" if group == 1 else "group2.quadrilateral_diagonals"][1]


def search_joint_model(p: Predicate, q: Predicate, group: int, n: int, seed: int = 0,
                       interp: Optional[Mapping[str, str]] = None):
    """First sampled configuration satisfying the context, ``p`` and ``q``.

    Samples cycle over the group's branch samplers and its uniform sampler.
    Returns None when no joint model turns up in ``n`` samples.
    """
    if group not in GROUP_SAMPLERS:
        raise ValueError(f"unknown group {group!r}")
    fp, fq = _as_callable(p, interp), _as_callable(q, interp)
    t = _context_predicate(group)
    sampler_ids = itertools.cycle(GROUP_SAMPLERS[group])
    for i in range(n):
        _, sampler = SAMPLERS[next(sampler_ids)]
        config = sampler(sample_rng(seed, i))
        if t(config) and fp(config) and fq(config):
            return config
    return None


def empirical_evidence(disjuncts: Sequence[Formula], interp: Mapping[str, str],
                       n: int, seed: int = 0) -> ExclusivityEvidence:
    """Search every pair of disjuncts for a joint model; record what was found."""
    group = interpretation_group({a: interp[a] for a in atoms(*disjuncts)})
    for f, g in itertools.combinations(disjuncts, 2):
        witness = search_joint_model(f, g, group, n, seed, interp)
        if witness is not None:
            return ExclusivityEvidence("empirical", samples=n, witness=witness,
                                       detail="joint model found")
    return ExclusivityEvidence("empirical", samples=n,
                               detail=f"no joint model in {n} samples per pair")
