"""Syntax-directed decision procedures on finitary terms.

``nex``/``ex`` decide whether a finitary term has some finite member, and
``ff``/``nff`` whether it has finitely many.  Each pair is defined by two
independent rule sets; that they are complementary is checked by the tests,
not assumed here.  Every predicate is parameterized by a predicate on
sequents that decides what a free fixpoint variable contributes.
"""

from __future__ import annotations

import enum
import threading
from typing import Callable

from .spacegen import build_space
from .syntax import (
    Alt,
    Context,
    Cut,
    FinTerm,
    FixVar,
    Gfp,
    Lam,
    Sequent,
    Sum,
    TruncForest,
)
from .tri import Tri, all_of, any_of

__all__ = [
    "SequentPredicate",
    "EmptyPred",
    "InhabitedPred",
    "FinitePred",
    "Tri",
    "nex",
    "ex",
    "ff",
    "nff",
    "decide_inhab",
    "decide_finhab",
    "semantic_status",
    "normalize_sequent",
    "clear_caches",
]


class SequentPredicate(enum.Enum):
    """Predicate on atomic sequents consulted at fixpoint variables."""

    EMPTY = "empty"
    INHABITED = "inhabited"
    FINITE = "finite"

    def __call__(self, seq: Sequent) -> bool:
        if self is SequentPredicate.EMPTY:
            return False
        if self is SequentPredicate.INHABITED:
            return decide_inhab(seq)
        return decide_finhab(seq)


EmptyPred = SequentPredicate.EMPTY
InhabitedPred = SequentPredicate.INHABITED
FinitePred = SequentPredicate.FINITE


def nex(p: SequentPredicate, t: FinTerm) -> bool:
    """``t`` has a finite member (fixpoint variables: as ``p`` says)."""
    if isinstance(t, FixVar):
        return p(t.seq)
    if isinstance(t, Lam):
        return nex(p, t.body)
    if isinstance(t, Gfp):
        return any(all(nex(p, n) for n in e.args) for e in t.alts)
    raise TypeError(f"not a finitary term: {type(t).__name__}")


def ex(p: SequentPredicate, t: FinTerm) -> bool:
    """``t`` has no finite member; fixpoint variables count as empty unless ``p`` holds."""
    if isinstance(t, FixVar):
        return not p(t.seq)
    if isinstance(t, Lam):
        return ex(p, t.body)
    if isinstance(t, Gfp):
        return all(_ex_alt(p, e) for e in t.alts)
    raise TypeError(f"not a finitary term: {type(t).__name__}")


def _ex_alt(p: SequentPredicate, e: Alt) -> bool:
    return any(ex(p, n) for n in e.args)


def ff(p: SequentPredicate, t: FinTerm) -> bool:
    """``t`` has finitely many finite members (possibly none)."""
    if isinstance(t, FixVar):
        return p(t.seq)
    if isinstance(t, Lam):
        return ff(p, t.body)
    if isinstance(t, Gfp):
        return all(_ff_alt(p, e) for e in t.alts)
    raise TypeError(f"not a finitary term: {type(t).__name__}")


def _ff_alt(p: SequentPredicate, e: Alt) -> bool:
    if all(ff(p, n) for n in e.args):
        return True
    # an empty argument kills every member of this alternative
    return any(ex(InhabitedPred, n) for n in e.args)


def nff(p: SequentPredicate, t: FinTerm) -> bool:
    """``t`` has infinitely many finite members."""
    if isinstance(t, FixVar):
        return not p(t.seq)
    if isinstance(t, Lam):
        return nff(p, t.body)
    if isinstance(t, Gfp):
        return any(
            any(nff(p, n) for n in e.args) and all(nex(InhabitedPred, n) for n in e.args)
            for e in t.alts
        )
    raise TypeError(f"not a finitary term: {type(t).__name__}")


# --------------------------------------------------------------------------
# deciders


def normalize_sequent(seq: Sequent) -> Sequent:
    """Rename the context to c1, c2, ... ordered by (type, old name)."""
    decls = sorted(seq.context.items(), key=lambda d: (d[1].text, d[0]))
    return Sequent(Context(tuple((f"c{i}", t) for i, (_, t) in enumerate(decls, 1))), seq.goal)


class _Memo:
    def __init__(self, compute: Callable[[Sequent], bool]):
        self.compute = compute
        self.table: dict[Sequent, bool] = {}
        self.lock = threading.Lock()

    def __call__(self, seq: Sequent) -> bool:
        key = normalize_sequent(seq)
        with self.lock:
            if key in self.table:
                return self.table[key]
        value = self.compute(key)
        with self.lock:
            self.table[key] = value
        return value

    def clear(self):
        with self.lock:
            self.table.clear()


_inhab_memo = _Memo(lambda s: nex(EmptyPred, build_space(s)))
_finhab_memo = _Memo(lambda s: ff(EmptyPred, build_space(s)))


def decide_inhab(seq: Sequent) -> bool:
    """Is there an inhabitant of ``seq``?"""
    return _inhab_memo(seq)


def decide_finhab(seq: Sequent) -> bool:
    """Are there only finitely many inhabitants (possibly zero)?"""
    return _finhab_memo(seq)


def clear_caches() -> None:
    _inhab_memo.clear()
    _finhab_memo.clear()


# --------------------------------------------------------------------------
# bounded semantic predicates on forests


def exfin(f: TruncForest) -> Tri:
    """Existence of a finite member; ``NO`` certifies emptiness of the full forest."""
    if isinstance(f, Cut):
        return Tri.UNKNOWN
    if isinstance(f, Lam):
        return exfin(f.body)
    if isinstance(f, Sum):
        return any_of(all_of(exfin(n) for n in e.args) for e in f.alts)
    raise TypeError(f"not a forest: {type(f).__name__}")


def finfin(f: TruncForest) -> Tri:
    """Finiteness of the set of finite members, three-valued.

    A truncation is finite, so an infinite extension is never certified here
    and the result is ``YES`` or ``UNKNOWN``.
    """
    if isinstance(f, Cut):
        return Tri.UNKNOWN
    if isinstance(f, Lam):
        return ~exfin(f.body) | finfin(f.body)
    if isinstance(f, Sum):
        return all_of(_finfin_alt(e) for e in f.alts)
    raise TypeError(f"not a forest: {type(f).__name__}")


def _finfin_alt(e: Alt) -> Tri:
    return any_of(~exfin(n) for n in e.args) | all_of(finfin(n) for n in e.args)


def semantic_status(f: TruncForest) -> tuple[Tri, Tri]:
    """``(exfin, finfin)`` of a truncated forest."""
    return exfin(f), finfin(f)
