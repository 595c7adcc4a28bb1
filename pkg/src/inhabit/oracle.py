"""Brute-force ground truth, independent of the finitary representation.

``enumerate_inhabitants`` applies the two typing rules bottom-up up to a
depth bound.  ``saturate_inhab`` is a textbook provability check: a least
fixpoint over pairs (set of available types, atomic goal).
"""

from __future__ import annotations

import itertools

from .syntax import (
    App,
    Atom,
    Context,
    Lam,
    NormalTerm,
    Sequent,
    SimpleType,
    alpha_normalize,
    fresh_name,
    split_type,
)

DEFAULT_CAP = 200_000


class OracleExplosion(RuntimeError):
    """The enumeration exceeded its result-count cap."""


def enumerate_inhabitants(seq: Sequent, depth: int, *, cap: int = DEFAULT_CAP) -> list[NormalTerm]:
    """All inhabitants of ``seq`` with at most ``depth`` nested applications.

    Returned alpha-normalized (binders v1, v2, ...) and sorted by rendering.
    """
    memo: dict[tuple[Context, SimpleType, int], list[NormalTerm]] = {}

    def inh(ctx: Context, goal: SimpleType, d: int) -> list[NormalTerm]:
        key = (ctx, goal, d)
        if key in memo:
            return memo[key]
        out: list[NormalTerm] = []
        if d > 0:
            args, p = split_type(goal)
            delta = ctx
            binders = []
            for a in args:
                x = fresh_name("z", delta)
                delta = delta.extend(x, a)
                binders.append((x, a))
            bodies: list[NormalTerm] = []
            for y, ty in delta.items():
                bs, q = split_type(ty)
                if q != p:
                    continue
                choices = []
                for b in bs:
                    c = inh(delta, b, d - 1)
                    if not c:
                        break
                    choices.append(c)
                else:
                    n = 1
                    for c in choices:
                        n *= len(c)
                    if len(bodies) + n > cap:
                        raise OracleExplosion(f"more than {cap} terms for {Sequent(ctx, goal)} at depth {d}")
                    bodies.extend(App(y, combo) for combo in itertools.product(*choices))
            for body in bodies:
                for x, a in reversed(binders):
                    body = Lam(x, a, body)
                out.append(body)
        memo[key] = out
        return out

    found = {}
    for t in inh(seq.context, seq.goal, depth):
        u = alpha_normalize(t)
        found.setdefault(u.text, u)
    return [found[k] for k in sorted(found)]


def count_inhabitants(seq: Sequent, depth: int) -> int:
    """``len(enumerate_inhabitants(seq, depth))`` without building the terms."""
    memo: dict[tuple[Context, SimpleType, int], int] = {}

    def cnt(ctx: Context, goal: SimpleType, d: int) -> int:
        if d <= 0:
            return 0
        key = (ctx, goal, d)
        if key in memo:
            return memo[key]
        args, p = split_type(goal)
        delta = ctx
        for a in args:
            delta = delta.extend(fresh_name("z", delta), a)
        total = 0
        for y, ty in delta.items():
            bs, q = split_type(ty)
            if q != p:
                continue
            prod = 1
            for b in bs:
                prod *= cnt(delta, b, d - 1)
                if not prod:
                    break
            total += prod
        memo[key] = total
        return total

    return cnt(seq.context, seq.goal, depth)


def first_inhabitant_depth(seq: Sequent, max_depth: int, *, cap: int = DEFAULT_CAP) -> int | None:
    """Smallest depth <= max_depth at which the oracle finds an inhabitant."""
    for d in range(1, max_depth + 1):
        if enumerate_inhabitants(seq, d, cap=cap):
            return d
    return None


def saturate_inhab(seq: Sequent) -> bool:
    """Provability of ``seq`` by saturation over subformula type sets."""
    args, p = split_type(seq.goal)
    start = (frozenset(t for _, t in seq.context.items()) | frozenset(args), p)

    # every (types, atom) pair reachable by backward proof search
    pairs: set[tuple[frozenset, Atom]] = set()
    todo = [start]
    while todo:
        pair = todo.pop()
        if pair in pairs:
            continue
        pairs.add(pair)
        types, goal = pair
        for ty in types:
            bs, q = split_type(ty)
            if q != goal:
                continue
            for b in bs:
                cs, r = split_type(b)
                todo.append((types | frozenset(cs), r))

    proved: set[tuple[frozenset, Atom]] = set()
    changed = True
    while changed:
        changed = False
        for pair in pairs - proved:
            types, goal = pair
            for ty in types:
                bs, q = split_type(ty)
                if q == goal and all(
                    (types | frozenset(split_type(b)[0]), split_type(b)[1]) in proved for b in bs
                ):
                    proved.add(pair)
                    changed = True
                    break
    return start in proved
