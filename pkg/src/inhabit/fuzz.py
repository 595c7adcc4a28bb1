"""Seeded random sequents for property tests and the acceptance corpus."""

from __future__ import annotations

import random

from .syntax import Arrow, Atom, Context, Sequent, SimpleType

ATOMS = ("p", "q")
MAX_TYPE_SIZE = 7
MAX_CONTEXT = 3
CORPUS_SEED = 20171
CORPUS_SIZE = 320


def random_type(rng: random.Random, size: int, atoms=ATOMS) -> SimpleType:
    """Uniformly shaped random type with ``size`` atom occurrences."""
    if size <= 1:
        return Atom(rng.choice(atoms))
    left = rng.randint(1, size - 1)
    return Arrow(random_type(rng, left, atoms), random_type(rng, size - left, atoms))


def random_sequent(
    rng: random.Random,
    *,
    atoms=ATOMS,
    max_size: int = MAX_TYPE_SIZE,
    max_context: int = MAX_CONTEXT,
) -> Sequent:
    n = rng.randint(0, max_context)
    decls = [(f"h{i}", random_type(rng, rng.randint(1, max_size), atoms)) for i in range(n)]
    goal = random_type(rng, rng.randint(1, max_size), atoms)
    return Sequent(Context(tuple(decls)), goal)


def corpus(n: int = CORPUS_SIZE, seed: int = CORPUS_SEED) -> list[Sequent]:
    """``n`` distinct random sequents, reproducible from ``seed``."""
    rng = random.Random(seed)
    seen: dict[str, Sequent] = {}
    while len(seen) < n:
        s = random_sequent(rng)
        seen.setdefault(s.text, s)
    return list(seen.values())


def random_context_pair(rng: random.Random, atoms=ATOMS, max_size: int = 5) -> tuple[Context, Context, Atom]:
    """A pair ``g <= g2`` (extra declarations only repeat types of ``g``) and a goal atom."""
    n = rng.randint(1, MAX_CONTEXT)
    decls = [(f"h{i}", random_type(rng, rng.randint(1, max_size), atoms)) for i in range(n)]
    g = Context(tuple(decls))
    extra = [(f"w{i}", rng.choice(decls)[1]) for i in range(rng.randint(0, 2))]
    return g, Context(tuple(decls + extra)), Atom(rng.choice(atoms))
