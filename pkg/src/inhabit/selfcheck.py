"""Cross-checks of every layer against the others on a single sequent."""

from __future__ import annotations

from dataclasses import dataclass

from .count import count_complete_members, count_fin, enumerate_fin
from .decide import (
    EmptyPred,
    FinitePred,
    InhabitedPred,
    decide_finhab,
    decide_inhab,
    ex,
    ff,
    nex,
    nff,
    semantic_status,
)
from .oracle import OracleExplosion, enumerate_inhabitants, first_inhabitant_depth, saturate_inhab
from .semantics import (
    check_proper_bounded,
    expand_solution,
    interp_simplified,
    member,
    typecheck_forest,
    typecheck_normal,
)
from .spacegen import build_space
from .syntax import (
    FixVar,
    Gfp,
    Lam,
    Sequent,
    alpha_eq,
    check_well_bound,
    elim_depth,
    free_fixvars,
    head_controlled,
    subterms,
)
from .tri import Tri

WITNESS_DEPTH = 8
PREDICATES = (EmptyPred, InhabitedPred, FinitePred)


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""


def selfcheck(seq: Sequent, depth: int = 4) -> list[Check]:
    checks: list[Check] = []

    def add(name: str, ok: bool, detail: str = "") -> None:
        checks.append(Check(name, bool(ok), detail))

    space = build_space(seq)
    add("space is closed", not free_fixvars(space))
    add("space is well-bound", check_well_bound(space))
    add("space is head-variable controlled", head_controlled(space))

    bad = [d for d in range(1, depth + 1) if not alpha_eq(interp_simplified(space, d), expand_solution(seq, d))]
    add("interpretation of space equals solution space", not bad, f"failing depths {bad}" if bad else "")
    add("space is proper", check_proper_bounded(space, depth))
    add("solution space is well typed", typecheck_forest(seq.context, expand_solution(seq, depth), seq.goal))

    inhabited = decide_inhab(seq)
    add("decide_inhab agrees with saturation", inhabited == saturate_inhab(seq))
    if inhabited:
        w = first_inhabitant_depth(seq, WITNESS_DEPTH)
        add("oracle witnesses inhabitant", w is not None, f"first at depth {w}")
    else:
        found = []
        for d in range(1, WITNESS_DEPTH + 1):
            try:
                found = enumerate_inhabitants(seq, d)
            except OracleExplosion:
                break
            if found:
                break
        add("oracle finds no inhabitant", not found)

    terms = [t for t in subterms(space) if isinstance(t, (Lam, Gfp, FixVar))]
    for p in PREDICATES:
        add(f"nex/ex complementary ({p.value})", all(nex(p, t) != ex(p, t) for t in terms))
        add(f"ff/nff complementary ({p.value})", all(ff(p, t) != nff(p, t) for t in terms))

    ex_d, fin_d = semantic_status(interp_simplified(space, depth))
    add(
        "nex agrees with bounded exfin",
        not ex_d.determined or (ex_d is Tri.YES) == nex(InhabitedPred, space),
        f"exfin={ex_d}",
    )
    add(
        "ff agrees with bounded finfin",
        not fin_d.determined or (fin_d is Tri.YES) == ff(FinitePred, space),
        f"finfin={fin_d}",
    )

    if decide_finhab(seq):
        count = count_fin(space)
        listed = enumerate_fin(space)
        dstar = max((elim_depth(t) for t in listed), default=0)
        oracle = enumerate_inhabitants(seq, dstar + 2)
        add("count equals enumeration size", count == len(listed), f"count={count}")
        add(
            "enumeration equals oracle",
            len(listed) == len(oracle) and all(alpha_eq(a, b) for a, b in zip(listed, oracle)),
            f"oracle={len(oracle)} at depth {dstar + 2}",
        )
        c1 = count_complete_members(expand_solution(seq, dstar + 1))
        c2 = count_complete_members(expand_solution(seq, dstar + 2))
        add("count equals complete members of truncation", count == c1 == c2, f"{c1}, {c2}")
        forest = expand_solution(seq, dstar + 1)
        add(
            "enumerated terms typecheck and are members",
            all(typecheck_normal(seq.context, t, seq.goal) and member(t, forest) is Tri.YES for t in listed),
        )
    else:
        small = len(enumerate_inhabitants(seq, 4))
        add("infinite: oracle keeps finding deeper terms", _grows(seq, small, 4), f"{small} at depth 4")
    add("count_fin is zero on empty space", not ex(InhabitedPred, space) or count_fin(space) == 0)
    return checks


def _grows(seq: Sequent, base: int, depth: int) -> bool:
    for d in range(depth + 1, WITNESS_DEPTH + 1):
        try:
            if len(enumerate_inhabitants(seq, d)) > base:
                return True
        except OracleExplosion:
            return True
    return False
