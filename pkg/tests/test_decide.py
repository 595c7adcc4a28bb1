import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from inhabit.decide import (
    EmptyPred,
    FinitePred,
    InhabitedPred,
    SequentPredicate,
    decide_finhab,
    decide_inhab,
    ex,
    exfin,
    ff,
    finfin,
    nex,
    nff,
    normalize_sequent,
    semantic_status,
)
from inhabit.oracle import count_inhabitants, saturate_inhab
from inhabit.semantics import expand_solution, interp_simplified
from inhabit.spacegen import build_space
from inhabit.syntax import Alt, FixVar, Gfp, Lam, parse_sequent, subterms
from inhabit.tri import Tri, all_of, any_of

from .conftest import seq

PREDICATES = list(SequentPredicate)
Y, N, U = Tri.YES, Tri.NO, Tri.UNKNOWN


class TestTri:
    @given(st.lists(st.sampled_from(list(Tri)), max_size=4))
    def test_de_morgan(self, vs):
        assert ~all_of(vs) == any_of(~v for v in vs)
        assert ~any_of(vs) == all_of(~v for v in vs)

    def test_tables(self):
        assert Y & U is U and N & U is N and Y & Y is Y
        assert Y | U is Y and N | U is U and N | N is N
        assert ~U is U and ~Y is N

    @given(st.lists(st.sampled_from([Y, N]), max_size=4))
    def test_agrees_with_booleans(self, vs):
        assert all_of(vs) == Tri.of(all(v is Y for v in vs))
        assert any_of(vs) == Tri.of(any(v is Y for v in vs))


class TestNex:
    def test_fixvar_under_empty_predicate(self):
        assert not nex(EmptyPred, FixVar("X", seq("x:p |- p")))

    def test_axiom(self):
        assert nex(EmptyPred, Gfp("X", seq("x:p |- p"), (Alt("x"),)))

    def test_cycle_only(self):
        assert not nex(EmptyPred, build_space(seq("|- (p->p)->p")))

    def test_sharp_predicate_counts_fixvars(self):
        # X stands for an inhabited sequent, so the sharp version accepts it
        assert nex(InhabitedPred, FixVar("X", seq("x:p |- p")))


class TestEx:
    def test_fixvar(self):
        assert ex(EmptyPred, FixVar("X", seq("|- p")))

    def test_axiom(self):
        assert not ex(EmptyPred, Gfp("X", seq("x:p |- p"), (Alt("x"),)))

    def test_peirce(self):
        assert ex(EmptyPred, build_space(seq("|- ((p->q)->p)->p")))


class TestFF:
    def test_empty_gfp(self):
        assert ff(EmptyPred, Gfp("X", seq("|- p"), ()))

    def test_single_axiom(self):
        assert ff(EmptyPred, build_space(seq("|- p->q->p")))

    def test_church_numerals(self):
        assert not ff(EmptyPred, build_space(seq("|- (p->p)->p->p")))

    def test_empty_argument_escape(self):
        # f's argument is uninhabited, so the cycle through it does not matter
        assert ff(EmptyPred, build_space(seq("f:q -> p, g:p -> p, x:p |- q")))


class TestNFF:
    def test_fixvar(self):
        assert nff(EmptyPred, FixVar("X", seq("x:p |- p")))

    def test_church_numerals(self):
        assert nff(EmptyPred, build_space(seq("|- (p->p)->p->p")))

    def test_identity(self):
        assert not nff(EmptyPred, build_space(seq("|- p->p")))


class TestDeciders:
    @pytest.mark.parametrize(
        "text, inhabited, finite",
        [
            ("|- p->p", True, True),
            ("|- ((p->q)->p)->p", False, True),
            ("|- p", False, True),
            ("|- p->q->p", True, True),
            ("|- ((p->p)->p)->p", True, False),
        ],
    )
    def test_examples(self, text, inhabited, finite):
        s = seq(text)
        assert decide_inhab(s) is inhabited
        assert decide_finhab(s) is finite

    def test_memo_key_ignores_names(self):
        a = normalize_sequent(parse_sequent("x:p, f:p->q |- q"))
        b = normalize_sequent(parse_sequent("g:p->q, y:p |- q"))
        assert a == b

    def test_agrees_with_saturation(self, fuzz_corpus):
        for s in fuzz_corpus:
            assert decide_inhab(s) == saturate_inhab(s), s

    def test_finite_verdict_against_oracle(self, fuzz_corpus):
        # finite: counts stop growing; infinite: they keep growing
        for s in fuzz_corpus[:150]:
            counts = [count_inhabitants(s, d) for d in range(1, 9)]
            if decide_finhab(s):
                assert counts[-1] == counts[-2] == counts[-3], s
            else:
                assert counts[-1] > counts[-4], s


class TestSemanticStatus:
    def test_empty(self):
        assert semantic_status(expand_solution(seq("|- p"), 3)) == (N, Y)

    def test_unique_member(self):
        assert semantic_status(expand_solution(seq("|- p->p"), 3)) == (Y, Y)

    def test_all_paths_cut(self):
        assert semantic_status(expand_solution(seq("|- (p->p)->p"), 4)) == (U, U)

    def test_nofin_implies_finfin(self, fuzz_corpus):
        for s in fuzz_corpus:
            for d in (2, 4):
                e, f = semantic_status(expand_solution(s, d))
                if e is N:
                    assert f is Y


def _finitary_subterms(t):
    return [s for s in subterms(t) if isinstance(s, (Lam, Gfp, FixVar))]


def test_complementarity(fuzz_corpus):
    for s in fuzz_corpus:
        for t in _finitary_subterms(build_space(s)):
            for p in PREDICATES:
                assert nex(p, t) != ex(p, t), (s, t, p)
                assert ff(p, t) != nff(p, t), (s, t, p)


def test_sharp_characterization(fuzz_corpus):
    for s in fuzz_corpus:
        for t in itertools.islice(_finitary_subterms(build_space(s)), 20):
            forest = interp_simplified(t, 4)
            e, f = exfin(forest), finfin(forest)
            if e.determined:
                assert (e is Y) == nex(InhabitedPred, t), (s, t)
            if f.determined:
                assert (f is Y) == ff(FinitePred, t), (s, t)


def test_decisions_sound_against_bounded_semantics(fuzz_corpus):
    for s in fuzz_corpus:
        verdicts = [exfin(expand_solution(s, d)) for d in range(1, 9)]
        if decide_inhab(s):
            assert Y in verdicts, s
        else:
            assert Y not in verdicts, s
