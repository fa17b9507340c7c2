import random

from hypothesis import strategies as st

from invcompose.logic import And, Atom, Iff, Implies, Not, Or, Xor

BINARY = (And, Or, Xor, Implies, Iff)


def random_formula(rng: random.Random, depth: int = 8, names=("a", "b", "c", "d", "e", "f")):
    """Random formula of depth at most ``depth`` over at most six atoms."""
    if depth == 0 or rng.random() < 0.2:
        return Atom(rng.choice(names))
    if rng.random() < 0.2:
        return Not(random_formula(rng, depth - 1, names))
    op = rng.choice(BINARY)
    return op(random_formula(rng, depth - 1, names), random_formula(rng, depth - 1, names))


def formulas(names=("p", "q", "r"), max_leaves=12):
    atoms = st.sampled_from(names).map(Atom)
    return st.recursive(
        atoms,
        lambda kids: st.one_of(
            kids.map(Not),
            st.tuples(st.sampled_from(BINARY), kids, kids).map(lambda t: t[0](t[1], t[2])),
        ),
        max_leaves=max_leaves,
    )
