"""Finitary representation of the whole proof-search space of a sequent."""

from __future__ import annotations

import itertools
import logging

from .syntax import (
    Alt,
    FinTerm,
    FixStack,
    FixVar,
    Gfp,
    Lam,
    Sequent,
    fresh_name,
    split_type,
    types_of,
)

log = logging.getLogger(__name__)

DEFAULT_MAX_DEPTH = 10_000


class SpaceGenError(RuntimeError):
    """Recursion-depth guard fired while building a finitary space."""


class _Builder:
    def __init__(self, taken_fixvars: set[str], max_depth: int):
        self.max_depth = max_depth
        self.taken = set(taken_fixvars)
        self.counter = itertools.count(1)
        self.multi_matches = 0

    def fresh_fixvar(self) -> str:
        while True:
            name = f"X{next(self.counter)}"
            if name not in self.taken:
                self.taken.add(name)
                return name

    def build(self, seq: Sequent, xi: FixStack, depth: int) -> FinTerm:
        if depth > self.max_depth:
            raise SpaceGenError(f"recursion depth exceeded {self.max_depth} at {seq}")
        gamma = seq.context
        args, p = split_type(seq.goal)

        delta = gamma
        binders = []
        for a in args:
            z = fresh_name("z", delta)
            delta = delta.extend(z, a)
            binders.append((z, a))
        sigma = Sequent(delta, p)

        wanted = types_of(gamma) | set(args)
        matches = [
            name
            for name, theta in reversed(xi.entries)
            if theta.goal == p
            and theta.context.issubset(gamma)
            and types_of(theta.context) == wanted
        ]
        if len(matches) > 1:
            self.multi_matches += 1
            log.debug("%d stack entries match %s; taking %s", len(matches), seq, matches[0])

        if matches:
            body: FinTerm = FixVar(matches[0], sigma)
        else:
            y = self.fresh_fixvar()
            pushed = xi.push(y, sigma)
            alts = []
            for h, ty in delta.items():
                bs, q = split_type(ty)
                if q == p:
                    alts.append(Alt(h, tuple(self.build(Sequent(delta, b), pushed, depth + 1) for b in bs)))
            body = Gfp(y, sigma, tuple(alts))

        for z, a in reversed(binders):
            body = Lam(z, a, body)
        return body


def finrep(seq: Sequent, xi: FixStack = FixStack(), *, max_depth: int = DEFAULT_MAX_DEPTH) -> FinTerm:
    """Finitary solution space of ``seq`` relative to the fixpoint stack ``xi``.

    When an entry ``X : Θ |- p`` of ``xi`` has ``Θ`` contained in the current
    context and the same types as the context extended by the argument types
    of the goal, the most recently pushed such entry is reused as a fixpoint
    variable; otherwise a new ``gfp`` is opened with one alternative per
    hypothesis targeting the goal atom.
    """
    builder = _Builder(xi.names(), max_depth)
    try:
        return builder.build(seq, xi, 0)
    except RecursionError as exc:
        raise SpaceGenError(f"interpreter recursion limit hit while building {seq}") from exc


def build_space(seq: Sequent, *, max_depth: int = DEFAULT_MAX_DEPTH) -> FinTerm:
    """The closed finitary term representing all inhabitants of ``seq``."""
    return finrep(seq, FixStack(), max_depth=max_depth)


def count_multi_matches(seq: Sequent) -> int:
    """How often more than one stack entry matched while building ``seq``."""
    builder = _Builder(set(), DEFAULT_MAX_DEPTH)
    builder.build(seq, FixStack(), 0)
    return builder.multi_matches
