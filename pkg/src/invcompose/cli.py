"""Command-line front end.

Exit codes: 0 when every check passes, 1 when a check is falsified or a
counterexample is found, 2 on usage, parse or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional

from . import logic
from .report import emit_report
from .schema import (
    Kind, SchemaError, check_composition_law, compose, invert,
    propositional_evidence, refine_to_xor, structural_formula, validate_generating_set,
)
from .schemafile import dump_schema, load_schema
from .verify import InterpretationError, check_implication, empirical_evidence
from .sampling import SAMPLERS, SamplerExhausted

EXIT_OK, EXIT_FALSIFIED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _seed(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("seed must be non-negative")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--samples", type=_positive, default=1000)
    common.add_argument("--seed", type=_seed, default=0)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", metavar="PATH")
    common.add_argument("--atom-cap", type=_positive, default=logic.DEFAULT_ATOM_CAP)
    common.add_argument("--max-counterexamples", type=int, default=10)

    parser = argparse.ArgumentParser(
        prog="invcompose",
        description="Compose, invert and verify problem schemas.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", parents=[common], help="print the truth table of a formula")
    p.add_argument("formula")

    p = sub.add_parser("equiv", parents=[common], help="decide equivalence of two formulas")
    p.add_argument("left")
    p.add_argument("right")

    p = sub.add_parser("compose", parents=[common], help="compose generating schemas")
    p.add_argument("inputs", nargs="+", help="schema files or directories of *.schema files")
    p.add_argument("--xor", action="store_true", help="refine the disjunction to exactly-one")
    p.add_argument("--name")

    p = sub.add_parser("invert", parents=[common], help="emit the inverse of a composed schema")
    p.add_argument("input")
    p.add_argument("--name")

    p = sub.add_parser("verify", parents=[common], help="check a schema on sampled configurations")
    p.add_argument("input")
    p.add_argument("--sampler", required=True, choices=sorted(SAMPLERS))
    return parser


def _write(args, data) -> None:
    if isinstance(data, str):
        data = data.encode("utf-8")
    if args.out:
        Path(args.out).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()


def _parse_formula(text: str) -> logic.Formula:
    try:
        return logic.parse(text)
    except logic.FormulaSyntaxError as exc:
        raise UsageError(f"formula error: {exc}") from None


def _bits(v) -> str:
    return " ".join(f"{k}={int(b)}" for k, b in v.items())


def cmd_table(args) -> int:
    f = _parse_formula(args.formula)
    table = logic.truth_table(f, args.atom_cap)
    if args.format == "json":
        payload = {
            "formula": logic.format_formula(f),
            "atoms": list(table.atoms),
            "rows": [[[int(v[a]) for a in table.atoms], int(value)] for v, value in table.rows],
            "tautology": table.all_true,
        }
        _write(args, json.dumps(payload, indent=2) + "\n")
        return EXIT_OK
    lines = [" ".join(table.atoms) + " | " + logic.format_formula(f)]
    for v, value in table.rows:
        lines.append(" ".join(str(int(v[a])).rjust(len(a)) for a in table.atoms) + " | " + str(int(value)))
    lines.append(f"{table.count_true()}/{len(table)} rows true"
                 + (" (tautology)" if table.all_true else ""))
    _write(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_equiv(args) -> int:
    f, g = _parse_formula(args.left), _parse_formula(args.right)
    witness = logic.find_model(logic.Not(logic.Iff(f, g)), args.atom_cap)
    rows = 2 ** len(logic.atoms(f, g))
    if args.format == "json":
        payload = {"equivalent": witness is None, "rows": rows,
                   "witness": None if witness is None else {k: int(b) for k, b in witness.items()}}
        _write(args, json.dumps(payload, indent=2) + "\n")
    elif witness is None:
        _write(args, f"EQUIVALENT ({rows} rows checked)\n")
    else:
        _write(args, f"NOT EQUIVALENT: differ at {_bits(witness)}\n")
    return EXIT_OK if witness is None else EXIT_FALSIFIED


def _expand_inputs(inputs: List[str]) -> List[Path]:
    paths = []
    for item in inputs:
        p = Path(item)
        if p.is_dir():
            found = sorted(p.glob("*.schema"))
            if not found:
                raise UsageError(f"{p}: no *.schema files")
            paths.extend(found)
        else:
            paths.append(p)
    return paths


def _merge_interpretations(files) -> dict:
    merged = {}
    for sf in files:
        for atom, pid in sf.interpretation.items():
            if merged.setdefault(atom, pid) != pid:
                raise UsageError(f"{sf.source}: atom {atom!r} bound inconsistently")
    return merged


def cmd_compose(args) -> int:
    files = [load_schema(p) for p in _expand_inputs(args.inputs)]
    gset = validate_generating_set([sf.schema for sf in files])
    table = check_composition_law(gset, args.atom_cap)
    composed = compose(gset, name=args.name, cap=args.atom_cap)
    interp = _merge_interpretations(files)

    notes = [f"composition law: {table.count_true()}/{len(table)} rows true"]
    status = EXIT_OK
    evidence = None
    if args.xor:
        evidence = propositional_evidence(composed.context, composed.disjuncts, args.atom_cap)
        if evidence is None and interp:
            evidence = empirical_evidence(composed.disjuncts, interp, args.samples, args.seed)
        if evidence is None:
            notes.append("exclusivity: not propositional and no interpretation to sample")
            status = EXIT_FALSIFIED
        elif evidence.contradicted:
            notes.append(f"exclusivity: contradicted ({evidence.detail})")
            status = EXIT_FALSIFIED
        else:
            composed = refine_to_xor(composed, evidence, args.atom_cap)
            notes.append(f"exclusivity: {evidence.status} ({evidence.detail})")
    notes.append(f"structure: {logic.format_formula(structural_formula(composed))}")

    if args.format == "json":
        payload = {
            "schema": dump_schema(composed, interp),
            "kind": composed.kind.value,
            "structure": logic.format_formula(structural_formula(composed)),
            "law_rows": len(table),
            "law_all_true": table.all_true,
            "evidence": None if evidence is None else {
                "status": evidence.status, "samples": evidence.samples,
                "contradicted": evidence.contradicted, "detail": evidence.detail,
            },
        }
        _write(args, json.dumps(payload, indent=2) + "\n")
    else:
        _write(args, "".join(f"# {n}\n" for n in notes) + dump_schema(composed, interp))
    return status


def cmd_invert(args) -> int:
    sf = load_schema(args.input)
    inverse = invert(sf.schema, name=args.name)
    structure = logic.format_formula(structural_formula(inverse))
    if args.format == "json":
        payload = {"schema": dump_schema(inverse, sf.interpretation), "kind": inverse.kind.value,
                   "structure": structure}
        _write(args, json.dumps(payload, indent=2) + "\n")
    else:
        _write(args, f"# structure: {structure}\n" + dump_schema(inverse, sf.interpretation))
    return EXIT_OK


def cmd_verify(args) -> int:
    sf = load_schema(args.input)
    report = check_implication(sf.schema, sf.interpretation, args.sampler, args.samples,
                               args.seed, args.max_counterexamples)
    _write(args, emit_report(report, args.format))
    return EXIT_OK if report.all_pass else EXIT_FALSIFIED


COMMANDS = {"table": cmd_table, "equiv": cmd_equiv, "compose": cmd_compose,
            "invert": cmd_invert, "verify": cmd_verify}


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except (UsageError, SchemaError, InterpretationError, logic.AtomCapExceeded,
            SamplerExhausted, OSError, KeyError) as exc:
        message = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"invcompose {args.command}: error: {message}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
