"""Propositional formulas: parsing, printing and exhaustive-valuation decisions.

Formulas are immutable trees over named atoms with the connectives
``!  &  |  ^  ->  <->``.  Every decision procedure here (tautology,
equivalence, satisfiability, mutual exclusivity) walks the full truth
table, so results are deterministic and easy to audit.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterator, Mapping, Optional, Sequence, Tuple, Union

__all__ = [
    "Atom", "Not", "And", "Or", "Xor", "Implies", "Iff", "Formula",
    "FormulaSyntaxError", "AtomCapExceeded", "DEFAULT_ATOM_CAP",
    "TruthTable", "parse", "format_formula", "evaluate", "atoms",
    "truth_table", "is_tautology", "are_equivalent", "find_model",
    "mutually_exclusive", "conjoin", "disjoin",
]

DEFAULT_ATOM_CAP = 24

ATOM_RE = re.compile(r"[a-z][a-z0-9_]*\Z")


class FormulaSyntaxError(ValueError):
    """Raised when formula text does not conform to the grammar."""

    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


class AtomCapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class Atom:
    name: str

    def __post_init__(self):
        if not isinstance(self.name, str) or not ATOM_RE.match(self.name):
            raise ValueError(f"invalid atom name {self.name!r}")


@dataclass(frozen=True)
class Not:
    child: "Formula"


@dataclass(frozen=True)
class _Binary:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class And(_Binary):
    pass


@dataclass(frozen=True)
class Or(_Binary):
    pass


@dataclass(frozen=True)
class Xor(_Binary):
    pass


@dataclass(frozen=True)
class Implies(_Binary):
    pass


@dataclass(frozen=True)
class Iff(_Binary):
    pass


Formula = Union[Atom, Not, And, Or, Xor, Implies, Iff]
Valuation = Mapping[str, bool]


def conjoin(parts: Sequence[Formula]) -> Formula:
    """Left-nested conjunction of one or more formulas."""
    if not parts:
        raise ValueError("cannot conjoin an empty sequence")
    result = parts[0]
    for part in parts[1:]:
        result = And(result, part)
    return result


def disjoin(parts: Sequence[Formula]) -> Formula:
    """Left-nested disjunction, so ``a | b | c`` prints without parentheses."""
    if not parts:
        raise ValueError("cannot disjoin an empty sequence")
    result = parts[0]
    for part in parts[1:]:
        result = Or(result, part)
    return result


# ---------------------------------------------------------------- parsing

_TOKEN_RE = re.compile(r"\s*(?:(<->)|(->)|([!&|^()])|([a-z][a-z0-9_]*))")


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise FormulaSyntaxError(f"unknown token {text[pos]!r}", pos, text)
        start = m.start(m.lastindex)
        tokens.append((m.group(m.lastindex), start))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> Optional[str]:
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def pos(self) -> int:
        if self.i < len(self.tokens):
            return self.tokens[self.i][1]
        return len(self.text)

    def take(self) -> str:
        tok = self.tokens[self.i][0]
        self.i += 1
        return tok

    def error(self, message: str) -> FormulaSyntaxError:
        return FormulaSyntaxError(message, self.pos(), self.text)

    def parse(self) -> Formula:
        if not self.tokens:
            raise FormulaSyntaxError("empty input", 0, self.text)
        f = self.iff()
        if self.peek() is not None:
            raise self.error(f"unexpected {self.peek()!r}")
        return f

    def iff(self) -> Formula:
        f = self.implication()
        while self.peek() == "<->":
            self.take()
            f = Iff(f, self.implication())
        return f

    def implication(self) -> Formula:
        f = self.disjunction()
        if self.peek() == "->":
            self.take()
            return Implies(f, self.implication())
        return f

    def disjunction(self) -> Formula:
        f = self.conjunction()
        op = None
        while self.peek() in ("|", "^"):
            if op is not None and self.peek() != op:
                raise self.error("mixing '|' and '^' requires parentheses")
            op = self.take()
            right = self.conjunction()
            f = Or(f, right) if op == "|" else Xor(f, right)
        return f

    def conjunction(self) -> Formula:
        f = self.unary()
        while self.peek() == "&":
            self.take()
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        tok = self.peek()
        if tok is None:
            raise self.error("unexpected end of input")
        if tok == "!":
            self.take()
            return Not(self.unary())
        if tok == "(":
            self.take()
            f = self.iff()
            if self.peek() != ")":
                raise self.error("expected ')'")
            self.take()
            return f
        if ATOM_RE.match(tok):
            self.take()
            return Atom(tok)
        raise self.error(f"unexpected {tok!r}")


def parse(text: str) -> Formula:
    """Parse formula text.

    Precedence, tightest first: ``!``, ``&``, ``|``/``^`` (left-assoc, not
    mixable without parentheses), ``->`` (right-assoc), ``<->`` (left-assoc).

    >>> parse("t & p1 | p2 -> r")
    Implies(left=Or(left=And(left=Atom(name='t'), right=Atom(name='p1')), right=Atom(name='p2')), right=Atom(name='r'))
    """
    return _Parser(text).parse()


# --------------------------------------------------------------- printing

_SYMBOL = {And: "&", Or: "|", Xor: "^", Implies: "->", Iff: "<->"}
_LEVEL = {Iff: 1, Implies: 2, Or: 3, Xor: 3, And: 4}


def _level(f: Formula) -> int:
    return _LEVEL.get(type(f), 5)


def format_formula(f: Formula) -> str:
    """Render ``f`` with the minimal parentheses the grammar needs.

    Conjunctions directly under ``|`` or ``^`` are also bracketed, which
    keeps disjuncts such as ``(p1 & !p2) ^ (p1 & p2)`` readable.
    """
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Not):
        inner = format_formula(f.child)
        if isinstance(f.child, (Atom, Not)):
            return "!" + inner
        return f"!({inner})"

    op = type(f)
    level = _LEVEL[op]

    def side(child: Formula, is_left: bool) -> str:
        text = format_formula(child)
        clevel = _level(child)
        if clevel < level:
            wrap = True
        elif clevel > level:
            wrap = op in (Or, Xor) and isinstance(child, And)
        elif op is Implies:
            wrap = is_left
        elif op in (Or, Xor):
            wrap = not is_left or type(child) is not op
        else:
            wrap = not is_left
        return f"({text})" if wrap else text

    return f"{side(f.left, True)} {_SYMBOL[op]} {side(f.right, False)}"


# -------------------------------------------------------------- semantics

def evaluate(f: Formula, v: Valuation) -> bool:
    if isinstance(f, Atom):
        try:
            return bool(v[f.name])
        except KeyError:
            raise KeyError(f"valuation has no value for atom {f.name!r}") from None
    if isinstance(f, Not):
        return not evaluate(f.child, v)
    a = evaluate(f.left, v)
    b = evaluate(f.right, v)
    if isinstance(f, And):
        return a and b
    if isinstance(f, Or):
        return a or b
    if isinstance(f, Xor):
        return a != b
    if isinstance(f, Implies):
        return (not a) or b
    if isinstance(f, Iff):
        return a == b
    raise TypeError(f"not a formula: {f!r}")


def _collect(f: Formula, out: set) -> None:
    stack = [f]
    while stack:
        node = stack.pop()
        if isinstance(node, Atom):
            out.add(node.name)
        elif isinstance(node, Not):
            stack.append(node.child)
        else:
            stack.append(node.left)
            stack.append(node.right)


def atoms(*formulas: Formula) -> Tuple[str, ...]:
    """Sorted, duplicate-free atom names occurring in any of ``formulas``."""
    names: set = set()
    for f in formulas:
        _collect(f, names)
    return tuple(sorted(names))


@dataclass(frozen=True)
class TruthTable:
    atoms: Tuple[str, ...]
    rows: Tuple[Tuple[Mapping[str, bool], bool], ...]

    @property
    def all_true(self) -> bool:
        return all(value for _, value in self.rows)

    def count_true(self) -> int:
        return sum(1 for _, value in self.rows if value)

    def __len__(self):
        return len(self.rows)


def _valuations(names: Sequence[str], cap: int) -> Iterator[dict]:
    if len(names) > cap:
        raise AtomCapExceeded(f"{len(names)} atoms exceed the cap of {cap}")
    for bits in itertools.product((False, True), repeat=len(names)):
        yield dict(zip(names, bits))


def truth_table(f: Formula, cap: int = DEFAULT_ATOM_CAP) -> TruthTable:
    names = atoms(f)
    rows = tuple((v, evaluate(f, v)) for v in _valuations(names, cap))
    return TruthTable(names, rows)


def find_model(f: Formula, cap: int = DEFAULT_ATOM_CAP) -> Optional[dict]:
    """First satisfying valuation in table order, or None."""
    for v in _valuations(atoms(f), cap):
        if evaluate(f, v):
            return v
    return None


def is_tautology(f: Formula, cap: int = DEFAULT_ATOM_CAP) -> bool:
    return all(evaluate(f, v) for v in _valuations(atoms(f), cap))


def are_equivalent(f: Formula, g: Formula, cap: int = DEFAULT_ATOM_CAP) -> bool:
    return is_tautology(Iff(f, g), cap)


def mutually_exclusive(context: Formula, f: Formula, g: Formula,
                       cap: int = DEFAULT_ATOM_CAP) -> bool:
    """True when no valuation satisfies ``context``, ``f`` and ``g`` together."""
    return find_model(And(And(context, f), g), cap) is None
