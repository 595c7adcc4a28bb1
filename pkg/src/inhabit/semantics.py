"""Depth-truncated solution spaces and the simplified interpretation.

The depth budget counts elimination alternatives only: each argument of an
alternative is produced with one unit less, and a budget of zero yields
``CUT``.  Everything a forest shows outside its cuts is exact.
"""

from __future__ import annotations

from functools import lru_cache

from .syntax import (
    CUT,
    Alt,
    App,
    Arrow,
    Atom,
    Context,
    Cut,
    FinTerm,
    FixVar,
    Gfp,
    Lam,
    NormalTerm,
    Sequent,
    SimpleType,
    Sum,
    TruncForest,
    all_names,
    alpha_eq,
    context_leq,
    fresh_name,
    split_type,
    subterms,
)
from .tri import Tri, all_of, any_of


@lru_cache(maxsize=1 << 16)
def expand_solution(seq: Sequent, depth: int) -> TruncForest:
    """The solution space of ``seq`` cut off after ``depth`` eliminations."""
    if depth <= 0:
        return CUT
    args, p = split_type(seq.goal)
    delta = seq.context
    binders = []
    for a in args:
        z = fresh_name("z", delta)
        delta = delta.extend(z, a)
        binders.append((z, a))
    alts = []
    for y, ty in delta.items():
        bs, q = split_type(ty)
        if q == p:
            alts.append(Alt(y, tuple(expand_solution(Sequent(delta, b), depth - 1) for b in bs)))
    body: TruncForest = Sum(tuple(alts))
    for z, a in reversed(binders):
        body = Lam(z, a, body)
    return body


def interp_simplified(t: FinTerm, depth: int) -> TruncForest:
    """Simplified interpretation of a finitary term, truncated at ``depth``.

    A fixpoint variable stands for the solution space of its annotation and
    a ``gfp`` is read as the plain sum of its alternatives.
    """
    if depth <= 0:
        return CUT
    if isinstance(t, Lam):
        return Lam(t.var, t.ann, interp_simplified(t.body, depth))
    if isinstance(t, FixVar):
        return expand_solution(t.seq, depth)
    if isinstance(t, Gfp):
        return Sum(tuple(
            Alt(a.head, tuple(interp_simplified(n, depth - 1) for n in a.args)) for a in t.alts
        ))
    raise TypeError(f"not a finitary term: {type(t).__name__}")


def check_proper_bounded(t: FinTerm, depth: int) -> bool:
    """Every gfp subterm interprets to the solution space of its annotation, up to ``depth``."""
    return all(
        alpha_eq(interp_simplified(s, depth), expand_solution(s.seq, depth))
        for s in subterms(t)
        if isinstance(s, Gfp)
    )


def cocontract(g: Context, g2: Context, f: TruncForest) -> TruncForest:
    """Co-contraction: let the new declarations of ``g2`` join every choice made from ``g``.

    An alternative headed by ``z`` declared in ``g`` with type A becomes the
    sum over ``z`` and every ``w : A`` in ``g2`` minus ``g``.  Bound variables
    clashing with ``g2`` are renamed first.
    """
    if not context_leq(g, g2):
        raise ValueError(f"co-contraction needs {g} <= {g2}")
    extra = g2.minus(g)
    by_type: dict[SimpleType, list[str]] = {}
    for w, ty in extra.items():
        by_type.setdefault(ty, []).append(w)
    outer = set(g2.names())

    def go(f, ren: dict[str, str], bound: frozenset[str]):
        if isinstance(f, Cut):
            return f
        if isinstance(f, Lam):
            name = f.var
            if name in outer or name in ren.values():
                name = fresh_name(f.var, outer | set(ren.values()) | all_names(f.body) | bound)
            inner = {**ren, f.var: name}
            return Lam(name, f.ann, go(f.body, inner, bound | {name}))
        if isinstance(f, Sum):
            alts = []
            for a in f.alts:
                args = tuple(go(n, ren, bound) for n in a.args)
                if a.head in ren:
                    alts.append(Alt(ren[a.head], args))
                elif a.head in g:
                    alts.append(Alt(a.head, args))
                    alts.extend(Alt(w, args) for w in by_type.get(g[a.head], ()))
                else:
                    alts.append(Alt(a.head, args))
            return Sum(tuple(alts))
        raise TypeError(f"not a forest: {type(f).__name__}")

    return go(f, {}, frozenset())


def member(t: NormalTerm, f: TruncForest) -> Tri:
    """Membership of a normal term in a truncated forest, three-valued."""
    return _member(t, f, {}, {}, 0)


def _member(t, f, tenv, fenv, level) -> Tri:
    if isinstance(f, Cut):
        return Tri.UNKNOWN
    if isinstance(t, Lam):
        if not isinstance(f, Lam) or f.ann != t.ann:
            return Tri.NO
        return _member(t.body, f.body, {**tenv, t.var: level}, {**fenv, f.var: level}, level + 1)
    if not isinstance(t, App):
        raise TypeError(f"not a normal term: {type(t).__name__}")
    if not isinstance(f, Sum):
        return Tri.NO
    head = tenv.get(t.head, t.head)
    return any_of(
        all_of(_member(m, n, tenv, fenv, level) for m, n in zip(t.args, alt.args))
        for alt in f.alts
        if fenv.get(alt.head, alt.head) == head and len(alt.args) == len(t.args)
    )


def typecheck_normal(g: Context, t: NormalTerm, a: SimpleType) -> bool:
    """``g |- t : a`` for an eta-long beta-normal term."""
    if isinstance(t, Lam):
        return isinstance(a, Arrow) and a.dom == t.ann and typecheck_normal(
            g.override(t.var, t.ann), t.body, a.cod
        )
    if isinstance(t, App):
        return _check_elim(g, t, a, typecheck_normal)
    raise TypeError(f"not a normal term: {type(t).__name__}")


def _check_elim(g: Context, e, a: SimpleType, check) -> bool:
    if not isinstance(a, Atom) or e.head not in g:
        return False
    bs, q = split_type(g[e.head])
    return q == a and len(bs) == len(e.args) and all(check(g, n, b) for n, b in zip(e.args, bs))


def typecheck_forest(g: Context, f: TruncForest, a: SimpleType) -> bool:
    """Typing of a truncated forest; a cut is accepted at any type."""
    if isinstance(f, Cut):
        return True
    if isinstance(f, Lam):
        return isinstance(a, Arrow) and a.dom == f.ann and typecheck_forest(
            g.override(f.var, f.ann), f.body, a.cod
        )
    if isinstance(f, Sum):
        return isinstance(a, Atom) and all(_check_elim(g, e, a, typecheck_forest) for e in f.alts)
    raise TypeError(f"not a forest: {type(f).__name__}")


def is_truncation_of(small: TruncForest, big: TruncForest) -> bool:
    """``big`` agrees with ``small`` everywhere outside the cuts of ``small``."""
    if isinstance(small, Cut):
        return True
    if isinstance(small, Lam):
        return (
            isinstance(big, Lam)
            and small.var == big.var
            and small.ann == big.ann
            and is_truncation_of(small.body, big.body)
        )
    if isinstance(small, Sum):
        if not isinstance(big, Sum) or len(small.alts) != len(big.alts):
            return False
        return _match_alts(list(small.alts), list(big.alts))
    raise TypeError(f"not a forest: {type(small).__name__}")


def _match_alts(small: list[Alt], big: list[Alt]) -> bool:
    # cuts can reorder summands, so pair them up by search
    if not small:
        return not big
    first, rest = small[0], small[1:]
    for i, cand in enumerate(big):
        if (
            cand.head == first.head
            and len(cand.args) == len(first.args)
            and all(is_truncation_of(m, n) for m, n in zip(first.args, cand.args))
            and _match_alts(rest, big[:i] + big[i + 1:])
        ):
            return True
    return False
