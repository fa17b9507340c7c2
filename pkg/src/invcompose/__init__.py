"""Compose and invert problem schemas; check them on exact geometric models."""

from .logic import (
    And, Atom, Iff, Implies, Not, Or, Xor, are_equivalent, atoms, evaluate,
    find_model, format_formula, is_tautology, mutually_exclusive, parse, truth_table,
)
from .schema import (
    ExclusivityEvidence, GeneratingSet, Kind, ProblemSchema, check_composition_law,
    compose, invert, refine_to_xor, structural_formula, validate_generating_set,
)
from .verify import VerificationReport, check_implication, search_joint_model

__version__ = "0.1.0"
