import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from inhabit.decide import semantic_status
from inhabit.fuzz import corpus, random_context_pair
from inhabit.semantics import (
    check_proper_bounded,
    cocontract,
    expand_solution,
    interp_simplified,
    is_truncation_of,
    member,
    typecheck_forest,
    typecheck_normal,
)
from inhabit.spacegen import build_space
from inhabit.syntax import (
    CUT,
    Alt,
    App,
    Atom,
    Context,
    Cut,
    FixVar,
    Gfp,
    Lam,
    Sequent,
    Sum,
    alpha_eq,
    elim_depth,
    parse_forest,
    parse_normal,
    parse_type,
)
from inhabit.tri import Tri

from .conftest import seq
from .helpers import mutate, oracle_terms

p, q = Atom("p"), Atom("q")


def ctx(**decls):
    return Context.of({k: parse_type(v) for k, v in decls.items()})


def cut_depth(f):
    """Longest chain of alternatives above a cut (0 when there is no cut)."""
    if isinstance(f, Cut):
        return 0
    if isinstance(f, Lam):
        return cut_depth(f.body)
    return max((1 + max((cut_depth(n) for n in a.args), default=-1) for a in f.alts if a.args), default=-1)


class TestExpand:
    def test_empty_context(self):
        assert expand_solution(seq("|- p"), 3) == Sum(())

    def test_identity(self):
        assert alpha_eq(expand_solution(seq("|- p->p"), 2), parse_forest("\\z1:p. z1"))

    def test_cut_at_depth(self):
        got = expand_solution(seq("|- (p->p)->p"), 2)
        assert alpha_eq(got, parse_forest("\\F:p -> p. F(F(...))"))

    def test_zero_depth_is_cut(self):
        assert expand_solution(seq("|- p->p"), 0) is CUT

    def test_no_chain_longer_than_depth(self, fuzz_corpus):
        for s in fuzz_corpus[:80]:
            for d in range(1, 5):
                assert cut_depth(expand_solution(s, d)) <= d

    def test_monotone_in_depth(self, fuzz_corpus):
        for s in fuzz_corpus[:120]:
            for d in range(0, 5):
                assert is_truncation_of(expand_solution(s, d), expand_solution(s, d + 1)), (s, d)

    def test_well_typed(self, fuzz_corpus):
        for s in fuzz_corpus:
            for d in (1, 3, 5):
                assert typecheck_forest(s.context, expand_solution(s, d), s.goal)


class TestInterp:
    def test_empty_gfp(self):
        for d in (1, 2, 5):
            assert interp_simplified(Gfp("X", seq("|- p"), ()), d) == Sum(())

    def test_fixvar_is_solution_space(self):
        got = interp_simplified(FixVar("X", seq("x:p |- p")), 2)
        assert got == Sum((Alt("x"),))
        assert got == expand_solution(seq("x:p |- p"), 2)

    def test_space_of_identity(self):
        got = interp_simplified(build_space(seq("|- p->p")), 2)
        assert alpha_eq(got, parse_forest("\\z1:p. z1"))

    def test_bounded_equivalence(self, fuzz_corpus):
        for s in fuzz_corpus:
            space = build_space(s)
            for d in range(1, 6):
                assert alpha_eq(interp_simplified(space, d), expand_solution(s, d)), (s, d)


class TestProper:
    def test_examples(self):
        assert check_proper_bounded(build_space(seq("|- p->p")), 3)
        assert check_proper_bounded(build_space(seq("|- ((p->p)->p)->p")), 3)
        assert not check_proper_bounded(Gfp("X", seq("x:p |- p"), ()), 3)

    def test_wrong_alternatives_detected(self):
        # the body names only one of the two hypotheses of its annotation
        assert not check_proper_bounded(Gfp("X", seq("a:p, b:p |- p"), (Alt("a"),)), 1)


class TestCocontract:
    def test_adds_alternative(self):
        g, g2 = ctx(z="p"), ctx(z="p", w="p")
        assert cocontract(g, g2, Sum((Alt("z"),))) == Sum((Alt("z"), Alt("w")))

    def test_identity_when_equal(self):
        g = ctx(z="p", f="p -> p")
        f = expand_solution(Sequent(g, p), 3)
        assert cocontract(g, g, f) == f

    def test_under_binder(self):
        g, g2 = ctx(z="p"), ctx(z="p", w="p")
        got = cocontract(g, g2, parse_forest("\\a:q. z(...)"))
        assert alpha_eq(got, parse_forest("\\a:q. z(...) + w(...)"))

    def test_only_matching_types_join(self):
        g, g2 = ctx(z="p", f="q"), ctx(z="p", f="q", w="p")
        assert cocontract(g, g2, parse_forest("z + f")) == parse_forest("f + w + z")

    def test_bound_names_do_not_capture(self):
        g, g2 = ctx(f="(p -> p) -> p"), ctx(f="(p -> p) -> p", z1="(p -> p) -> p")
        f = expand_solution(Sequent(g, p), 2)
        # the binder z1 inside f clashes with the new declaration
        assert "z1" in f.text
        got = cocontract(g, g2, f)
        assert alpha_eq(got, expand_solution(Sequent(g2, p), 2))

    def test_precondition(self):
        with pytest.raises(ValueError):
            cocontract(ctx(z="p"), ctx(z="p", w="q"), Sum(()))

    def test_solution_spaces_extend(self):
        rng = random.Random(7)
        for _ in range(100):
            g, g2, goal = random_context_pair(rng)
            for d in range(1, 6):
                small = expand_solution(Sequent(g, goal), d)
                assert alpha_eq(cocontract(g, g2, small), expand_solution(Sequent(g2, goal), d))


class TestMember:
    def test_identity(self):
        assert member(parse_normal("\\x:p. x"), expand_solution(seq("|- p->p"), 2)) is Tri.YES

    def test_empty_sum(self):
        assert member(parse_normal("x"), Sum(())) is Tri.NO
        assert member(parse_normal("\\x:p. x"), Sum(())) is Tri.NO

    def test_deeper_than_truncation(self):
        t = parse_normal("\\F:(p -> p) -> p. F(\\x:p. F(\\y:p. y))")
        assert member(t, expand_solution(seq("|- ((p->p)->p)->p"), 2)) is Tri.UNKNOWN
        assert member(t, expand_solution(seq("|- ((p->p)->p)->p"), 3)) is Tri.YES

    def test_annotation_mismatch(self):
        assert member(parse_normal("\\x:q. x"), parse_forest("\\x:p. x")) is Tri.NO

    def test_bound_vs_free_head(self):
        # x bound in the term, free in the forest
        assert member(parse_normal("\\y:p. x"), parse_forest("\\x:p. x")) is Tri.NO
        assert member(parse_normal("\\y:p. x"), parse_forest("\\z:p. x")) is Tri.YES

    def test_no_beats_unknown_in_tuple(self):
        f = parse_forest("f(..., O)")
        assert member(parse_normal("f(a, b)"), f) is Tri.NO


class TestTypecheck:
    def test_normal(self):
        assert typecheck_normal(ctx(x="p"), App("x"), p)
        assert typecheck_normal(Context(), parse_normal("\\x:p. x"), parse_type("p -> p"))
        assert not typecheck_normal(Context(), parse_normal("\\x:p. x"), parse_type("p -> q"))

    def test_eta_long_required(self):
        assert not typecheck_normal(ctx(f="p -> p"), App("f"), parse_type("p -> p"))
        assert not typecheck_normal(ctx(f="p -> p", x="p"), App("f"), p)
        assert not typecheck_normal(ctx(f="p -> p", x="p"), App("f", (App("x"), App("x"))), p)

    def test_forest(self):
        assert typecheck_forest(Context(), expand_solution(seq("|- p->p"), 3), parse_type("p -> p"))
        assert typecheck_forest(Context(), Sum(()), p)
        assert not typecheck_forest(Context(), parse_forest("\\z:p. z"), parse_type("q -> q"))
        assert typecheck_forest(Context(), CUT, parse_type("(p -> q) -> q"))


def test_membership_agrees_with_typing():
    rng = random.Random(11)
    mutants = 0
    for s in corpus()[:200]:
        d, terms = oracle_terms(s)
        forest = expand_solution(s, d + 1)
        for t in terms:
            assert typecheck_normal(s.context, t, s.goal)
            assert member(t, forest) is Tri.YES
            for _ in range(2):
                m = mutate(t, rng, set(s.context.names()))
                if not typecheck_normal(s.context, m, s.goal):
                    mutants += 1
                    assert member(m, forest) is not Tri.YES, (s, m)
                elif elim_depth(m) <= d + 1:
                    assert member(m, forest) is Tri.YES
    assert mutants >= 200


@settings(max_examples=40, deadline=None)
@given(st.integers(0, len(corpus()) - 1), st.integers(1, 5))
def test_status_invariant_under_cocontraction(i, d):
    s = corpus()[i]
    if not s.atomic:
        return
    g = s.context
    extra = Context(tuple((f"w{k}", t) for k, (_, t) in enumerate(g.items())))
    g2 = Context(g.items() + extra.items())
    f = expand_solution(s, d)
    before, after = semantic_status(f), semantic_status(cocontract(g, g2, f))
    for x, y in zip(before, after):
        if x.determined and y.determined:
            assert x == y
