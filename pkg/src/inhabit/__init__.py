"""Inhabitation in the simply-typed lambda-calculus via finitary search spaces."""

from .count import count_complete_members, count_fin, enumerate_fin
from .decide import (
    EmptyPred,
    FinitePred,
    InhabitedPred,
    SequentPredicate,
    decide_finhab,
    decide_inhab,
    ex,
    ff,
    nex,
    nff,
    semantic_status,
)
from .oracle import enumerate_inhabitants, saturate_inhab
from .semantics import (
    check_proper_bounded,
    cocontract,
    expand_solution,
    interp_simplified,
    member,
    typecheck_forest,
    typecheck_normal,
)
from .spacegen import build_space, finrep
from .syntax import (
    CUT,
    Alt,
    App,
    Arrow,
    Atom,
    Context,
    Cut,
    FixStack,
    FixVar,
    Gfp,
    Lam,
    Sequent,
    Sum,
    alpha_eq,
    check_well_bound,
    parse_fin,
    parse_forest,
    parse_normal,
    parse_sequent,
    parse_type,
    render,
    seq_leq,
    types_of,
)
from .tri import Tri

__version__ = "0.1.0"
