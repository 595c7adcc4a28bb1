"""Counting and listing the finite inhabitants read off a finitary term."""

from __future__ import annotations

import itertools

from .syntax import (
    Alt,
    App,
    Cut,
    FinTerm,
    FixVar,
    Gfp,
    Lam,
    NormalTerm,
    Sum,
    TruncForest,
    alpha_normalize,
    head_controlled,
)

DEFAULT_MAX_TERMS = 1_000_000


class NotHeadControlledError(ValueError):
    pass


class EnumerationBudgetError(RuntimeError):
    """Enumeration produced more terms than allowed."""


def _require_head_controlled(t) -> None:
    if not head_controlled(t):
        raise NotHeadControlledError("some sum has two summands with the same head variable")


def count_fin(t: FinTerm) -> int:
    """Number of finite members of ``t`` that avoid its fixpoint variables.

    This is the number of inhabitants when ``t`` is the space of a sequent
    with finitely many of them.
    """
    _require_head_controlled(t)
    return _count(t)


def _count(t) -> int:
    if isinstance(t, FixVar):
        return 0
    if isinstance(t, Lam):
        return _count(t.body)
    if isinstance(t, Gfp):
        return sum(_count_alt(e) for e in t.alts)
    raise TypeError(f"not a finitary term: {type(t).__name__}")


def _count_alt(e: Alt) -> int:
    result = 1
    for n in e.args:
        result *= _count(n)
        if not result:
            break
    return result


def count_complete_members(f: TruncForest) -> int:
    """Number of members of a truncated forest that do not cross a cut."""
    _require_head_controlled(f)
    return _count_forest(f)


def _count_forest(f) -> int:
    if isinstance(f, Cut):
        return 0
    if isinstance(f, Lam):
        return _count_forest(f.body)
    if isinstance(f, Sum):
        total = 0
        for e in f.alts:
            prod = 1
            for n in e.args:
                prod *= _count_forest(n)
                if not prod:
                    break
            total += prod
        return total
    raise TypeError(f"not a forest: {type(f).__name__}")


def enumerate_fin(t: FinTerm, *, max_terms: int = DEFAULT_MAX_TERMS) -> list[NormalTerm]:
    """The finite members of ``t``, alpha-normalized and sorted by rendering.

    Intended for terms with finitely many members; ``max_terms`` bounds the
    size of every intermediate set.
    """
    _require_head_controlled(t)
    terms = _collect(t, max_terms)
    normal = {}
    for u in terms:
        v = alpha_normalize(u)
        normal.setdefault(v.text, v)
    return [normal[k] for k in sorted(normal)]


def _collect(t, budget: int) -> list[NormalTerm]:
    if isinstance(t, FixVar):
        return []
    if isinstance(t, Lam):
        return [Lam(t.var, t.ann, u) for u in _collect(t.body, budget)]
    if isinstance(t, Gfp):
        out: list[NormalTerm] = []
        for e in t.alts:
            parts = []
            for n in e.args:
                part = _collect(n, budget)
                if not part:
                    break
                parts.append(part)
            else:
                size = 1
                for part in parts:
                    size *= len(part)
                if len(out) + size > budget:
                    raise EnumerationBudgetError(f"more than {budget} terms")
                out.extend(App(e.head, combo) for combo in itertools.product(*parts))
        return out
    raise TypeError(f"not a finitary term: {type(t).__name__}")
