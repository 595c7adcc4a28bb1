"""Types, contexts, sequents and the three term languages.

Three kinds of terms share some node classes:

* normal terms: ``Lam`` and ``App``;
* finitary terms: ``Lam``, ``Gfp`` (with ``Alt`` summands) and ``FixVar``;
* truncated forests: ``Lam``, ``Sum`` (with ``Alt`` summands) and ``Cut``.

All nodes are immutable.  Sums and gfp bodies are kept in canonical form
(sorted by head, then rendered text; structural duplicates dropped), so sums
behave as sets of alternatives and equality is a structural check.

Text syntax::

    type    := ident | type "->" type | "(" type ")"        (-> is right assoc)
    sequent := [ident ":" type ("," ident ":" type)*] "|-" type
    normal  := "\\" ident ":" type "." normal | ident ["(" normal, ... ")"]
    fin     := "\\" ident ":" type "." fin
             | "gfp" Ident "{" sequent "}" "." alts
             | Ident "{" sequent "}"
    forest  := "\\" ident ":" type "." forest | alts | "..."
    alts    := "O" | alt ("+" alt)*
    alt     := ident ["(" term, ... ")"]

``λ`` is accepted in place of the backslash.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Union


class ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class DuplicateVariableError(ValueError):
    def __init__(self, name: str):
        super().__init__(f"variable {name!r} declared twice")
        self.name = name


class _Node:
    """Mixin giving every syntax node a cached canonical rendering."""

    @cached_property
    def text(self) -> str:
        return _render(self)

    def __str__(self) -> str:
        return self.text


# --------------------------------------------------------------------------
# types


@dataclass(frozen=True)
class Atom(_Node):
    name: str


@dataclass(frozen=True)
class Arrow(_Node):
    dom: "SimpleType"
    cod: "SimpleType"


SimpleType = Union[Atom, Arrow]


def arrows(args: Iterable[SimpleType], target: SimpleType) -> SimpleType:
    """Build ``A1 -> ... -> Ak -> target``."""
    result = target
    for a in reversed(tuple(args)):
        result = Arrow(a, result)
    return result


def split_type(t: SimpleType) -> tuple[tuple[SimpleType, ...], Atom]:
    """Vector view of a type: its argument types and its target atom."""
    args = []
    while isinstance(t, Arrow):
        args.append(t.dom)
        t = t.cod
    return tuple(args), t


def type_size(t: SimpleType) -> int:
    """Number of atom occurrences."""
    if isinstance(t, Atom):
        return 1
    return type_size(t.dom) + type_size(t.cod)


def atoms_of(t: SimpleType) -> set[str]:
    if isinstance(t, Atom):
        return {t.name}
    return atoms_of(t.dom) | atoms_of(t.cod)


# --------------------------------------------------------------------------
# contexts and sequents


@dataclass(frozen=True)
class Context(_Node):
    """Finite map from variable names to types, stored sorted by name."""

    decls: tuple[tuple[str, SimpleType], ...] = ()

    def __post_init__(self):
        decls = tuple(sorted(self.decls, key=lambda d: d[0]))
        for (a, _), (b, _) in zip(decls, decls[1:]):
            if a == b:
                raise DuplicateVariableError(a)
        object.__setattr__(self, "decls", decls)

    @classmethod
    def of(cls, decls: Mapping[str, SimpleType] | Iterable[tuple[str, SimpleType]] = ()) -> "Context":
        if isinstance(decls, Mapping):
            decls = decls.items()
        return cls(tuple(decls))

    @cached_property
    def _map(self) -> dict[str, SimpleType]:
        return dict(self.decls)

    def __contains__(self, name: object) -> bool:
        return name in self._map

    def __getitem__(self, name: str) -> SimpleType:
        return self._map[name]

    def __iter__(self) -> Iterator[str]:
        return (n for n, _ in self.decls)

    def __len__(self) -> int:
        return len(self.decls)

    def get(self, name: str, default=None):
        return self._map.get(name, default)

    def items(self) -> tuple[tuple[str, SimpleType], ...]:
        return self.decls

    def names(self) -> frozenset[str]:
        return frozenset(self._map)

    def extend(self, name: str, ty: SimpleType) -> "Context":
        if name in self._map:
            raise DuplicateVariableError(name)
        return Context(self.decls + ((name, ty),))

    def override(self, name: str, ty: SimpleType) -> "Context":
        """Like ``extend`` but a previous declaration of ``name`` is dropped."""
        return Context(tuple(d for d in self.decls if d[0] != name) + ((name, ty),))

    def issubset(self, other: "Context") -> bool:
        return all(other.get(n) == t for n, t in self.decls)

    def minus(self, other: "Context") -> "Context":
        return Context(tuple(d for d in self.decls if other.get(d[0]) != d[1]))

    def rename(self, mapping: Mapping[str, str]) -> "Context":
        return Context(tuple((mapping.get(n, n), t) for n, t in self.decls))


def types_of(g: Context) -> frozenset[SimpleType]:
    """The set of types declared in ``g``."""
    return frozenset(t for _, t in g.decls)


def context_leq(g: Context, g2: Context) -> bool:
    """``g`` is contained in ``g2`` and ``g2`` adds no new types."""
    return g.issubset(g2) and types_of(g) == types_of(g2)


@dataclass(frozen=True)
class Sequent(_Node):
    context: Context
    goal: SimpleType

    @property
    def atomic(self) -> bool:
        return isinstance(self.goal, Atom)


def seq_leq(s: Sequent, s2: Sequent) -> bool:
    """The order on atomic sequents: same goal, bigger context, same types."""
    if not (s.atomic and s2.atomic):
        raise ValueError("seq_leq is defined on atomic sequents only")
    return s.goal == s2.goal and context_leq(s.context, s2.context)


def fresh_name(prefix: str, taken) -> str:
    """Smallest ``prefix<i>`` (i >= 1) not in ``taken``."""
    i = 1
    while f"{prefix}{i}" in taken:
        i += 1
    return f"{prefix}{i}"


# --------------------------------------------------------------------------
# terms


@dataclass(frozen=True)
class Lam(_Node):
    var: str
    ann: SimpleType
    body: object


@dataclass(frozen=True)
class App(_Node):
    head: str
    args: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))


@dataclass(frozen=True)
class Alt(_Node):
    """An elimination alternative ``head(args)`` inside a sum or gfp body."""

    head: str
    args: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))


def normalize_alts(alts: Iterable[Alt]) -> tuple[Alt, ...]:
    seen = {}
    for a in alts:
        if not isinstance(a, Alt):
            raise TypeError(f"summand must be an Alt, got {type(a).__name__}")
        seen.setdefault(a.text, a)
    return tuple(sorted(seen.values(), key=lambda a: (a.head, a.text)))


@dataclass(frozen=True)
class Gfp(_Node):
    fixvar: str
    seq: Sequent
    alts: tuple[Alt, ...] = ()

    def __post_init__(self):
        if not self.seq.atomic:
            raise ValueError("gfp annotation must be an atomic sequent")
        object.__setattr__(self, "alts", normalize_alts(self.alts))


@dataclass(frozen=True)
class FixVar(_Node):
    fixvar: str
    seq: Sequent

    def __post_init__(self):
        if not self.seq.atomic:
            raise ValueError("fixpoint variable annotation must be an atomic sequent")


@dataclass(frozen=True)
class Sum(_Node):
    alts: tuple[Alt, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "alts", normalize_alts(self.alts))


@dataclass(frozen=True)
class Cut(_Node):
    """Marker for a subforest removed by depth truncation."""


CUT = Cut()

NormalTerm = Union[Lam, App]
FinTerm = Union[Lam, Gfp, FixVar]
TruncForest = Union[Lam, Sum, Cut]


@dataclass(frozen=True)
class FixStack:
    """Ordered fixpoint-variable declarations ``X : Θ |- q``."""

    entries: tuple[tuple[str, Sequent], ...] = field(default=())

    def __post_init__(self):
        names = [n for n, _ in self.entries]
        seqs = [s for _, s in self.entries]
        if len(set(names)) != len(names):
            raise ValueError("fixpoint variable declared twice in stack")
        if len(set(seqs)) != len(seqs):
            raise ValueError("sequent occurs twice in stack")
        if not all(s.atomic for s in seqs):
            raise ValueError("stack sequents must be atomic")

    def push(self, name: str, seq: Sequent) -> "FixStack":
        return FixStack(self.entries + ((name, seq),))

    def names(self) -> set[str]:
        return {n for n, _ in self.entries}

    def __len__(self) -> int:
        return len(self.entries)


# --------------------------------------------------------------------------
# rendering


def _render_type(t: SimpleType) -> str:
    if isinstance(t, Atom):
        return t.name
    dom = t.dom.text
    if isinstance(t.dom, Arrow):
        dom = f"({dom})"
    return f"{dom} -> {t.cod.text}"


def _render_alts(alts) -> str:
    if not alts:
        return "O"
    return " + ".join(a.text for a in alts)


def _render(v) -> str:
    if isinstance(v, (Atom, Arrow)):
        return _render_type(v)
    if isinstance(v, Context):
        return ", ".join(f"{n}:{t.text}" for n, t in v.decls)
    if isinstance(v, Sequent):
        ctx = v.context.text
        return f"{ctx} |- {v.goal.text}" if ctx else f"|- {v.goal.text}"
    if isinstance(v, Lam):
        return f"\\{v.var}:{v.ann.text}. {v.body.text}"
    if isinstance(v, (App, Alt)):
        if not v.args:
            return v.head
        return f"{v.head}({', '.join(a.text for a in v.args)})"
    if isinstance(v, Sum):
        return _render_alts(v.alts)
    if isinstance(v, Gfp):
        return f"gfp {v.fixvar}{{{v.seq.text}}}. {_render_alts(v.alts)}"
    if isinstance(v, FixVar):
        return f"{v.fixvar}{{{v.seq.text}}}"
    if isinstance(v, Cut):
        return "..."
    raise TypeError(f"cannot render {type(v).__name__}")


def render(v) -> str:
    """Deterministic canonical text of a type, sequent or term."""
    return v.text


# --------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(
    r"\s*(?:(?P<arrow>->)|(?P<turn>\|-)|(?P<dots>\.\.\.)|(?P<lam>\\|λ)"
    r"|(?P<ident>[A-Za-z_][A-Za-z0-9_']*)|(?P<punct>[:,(){}.+]))"
)
_KEYWORDS = {"gfp", "O"}


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks: list[tuple[str, str, int]] = []
        pos = 0
        while True:
            while pos < len(text) and text[pos].isspace():
                pos += 1
            if pos >= len(text):
                break
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ParseError(f"unexpected character {text[pos]!r}", self._byte(pos))
            kind = m.lastgroup
            val = m.group(kind)
            self.toks.append((kind if kind != "punct" else val, val, m.start(kind)))
            pos = m.end()
        self.i = 0

    def _byte(self, pos: int) -> int:
        return len(self.text[:pos].encode("utf-8"))

    def peek(self, k: int = 0) -> str | None:
        j = self.i + k
        return self.toks[j][0] if j < len(self.toks) else None

    def peek_val(self) -> str | None:
        return self.toks[self.i][1] if self.i < len(self.toks) else None

    def offset(self) -> int:
        if self.i < len(self.toks):
            return self._byte(self.toks[self.i][2])
        return len(self.text.encode("utf-8"))

    def error(self, what: str) -> ParseError:
        got = self.peek_val()
        found = "end of input" if got is None else repr(got)
        return ParseError(f"expected {what}, found {found}", self.offset())

    def expect(self, kind: str) -> str:
        if self.peek() != kind:
            raise self.error(repr(kind) if kind not in ("ident",) else "identifier")
        val = self.toks[self.i][1]
        self.i += 1
        return val

    def accept(self, kind: str) -> bool:
        if self.peek() == kind:
            self.i += 1
            return True
        return False

    def done(self):
        if self.i != len(self.toks):
            raise self.error("end of input")

    # types
    def type_(self) -> SimpleType:
        left = self.type_atom()
        if self.accept("arrow"):
            return Arrow(left, self.type_())
        return left

    def type_atom(self) -> SimpleType:
        if self.accept("("):
            t = self.type_()
            self.expect(")")
            return t
        return Atom(self.expect("ident"))

    # sequents
    def sequent(self) -> Sequent:
        decls = []
        seen = set()
        if self.peek() != "turn":
            while True:
                name = self.expect("ident")
                self.expect(":")
                decls.append((name, self.type_()))
                if name in seen:
                    raise DuplicateVariableError(name)
                seen.add(name)
                if not self.accept(","):
                    break
        self.expect("turn")
        return Sequent(Context(tuple(decls)), self.type_())

    def var(self) -> str:
        if self.peek_val() in _KEYWORDS:
            raise self.error("variable")
        return self.expect("ident")

    def binder(self):
        name = self.var()
        self.expect(":")
        ann = self.type_()
        self.expect(".")
        return name, ann

    # terms
    def normal(self):
        if self.accept("lam"):
            name, ann = self.binder()
            return Lam(name, ann, self.normal())
        head = self.var()
        return App(head, self.args(self.normal))

    def args(self, item) -> tuple:
        if not self.accept("("):
            return ()
        out = [item()]
        while self.accept(","):
            out.append(item())
        self.expect(")")
        return tuple(out)

    def alts(self, item) -> tuple[Alt, ...]:
        if self.peek_val() == "O" and self.peek() == "ident":
            self.i += 1
            return ()
        out = [Alt(self.var(), self.args(item))]
        while self.accept("+"):
            out.append(Alt(self.var(), self.args(item)))
        return tuple(out)

    def annotated(self) -> tuple[str, Sequent]:
        name = self.expect("ident")
        self.expect("{")
        seq = self.sequent()
        self.expect("}")
        return name, seq

    def fin(self):
        if self.accept("lam"):
            name, ann = self.binder()
            return Lam(name, ann, self.fin())
        if self.peek_val() == "gfp" and self.peek(1) == "ident":
            self.i += 1
            off = self.offset()
            name, seq = self.annotated()
            self.expect(".")
            if not seq.atomic:
                raise ParseError("gfp annotation must be atomic", off)
            return Gfp(name, seq, self.alts(self.fin))
        if self.peek() == "ident" and self.peek(1) == "{":
            off = self.offset()
            name, seq = self.annotated()
            if not seq.atomic:
                raise ParseError("fixpoint annotation must be atomic", off)
            return FixVar(name, seq)
        raise self.error("finitary term")

    def forest(self):
        if self.accept("lam"):
            name, ann = self.binder()
            return Lam(name, ann, self.forest())
        if self.accept("dots"):
            return CUT
        return Sum(self.alts(self.forest))


def _parse(text: str, rule: str):
    p = _Parser(text)
    result = getattr(p, rule)()
    p.done()
    return result


def parse_type(text: str) -> SimpleType:
    return _parse(text, "type_")


def parse_sequent(text: str) -> Sequent:
    """Parse ``x:A, y:B |- C``; raises ParseError or DuplicateVariableError."""
    return _parse(text, "sequent")


def parse_normal(text: str) -> NormalTerm:
    return _parse(text, "normal")


def parse_fin(text: str) -> FinTerm:
    return _parse(text, "fin")


def parse_forest(text: str) -> TruncForest:
    return _parse(text, "forest")


# --------------------------------------------------------------------------
# alpha-equivalence


def _canon_seq(seq: Sequent, env: dict[str, str]) -> Sequent:
    return Sequent(seq.context.rename(env), seq.goal)


def canonical(v, env=None, fenv=None, level=0, flevel=0):
    """Representative of the alpha-class of ``v``.

    Bound term variables are renamed after their binding depth, bound
    fixpoint variables likewise, so the result does not depend on the order
    of summands; sums are then re-normalized.  Canonical names contain ``#``
    and so never clash with free names.
    """
    env = env or {}
    fenv = fenv or {}
    if isinstance(v, Lam):
        new = f"#{level}"
        return Lam(new, v.ann, canonical(v.body, {**env, v.var: new}, fenv, level + 1, flevel))
    if isinstance(v, (App, Alt)):
        args = tuple(canonical(a, env, fenv, level, flevel) for a in v.args)
        return type(v)(env.get(v.head, v.head), args)
    if isinstance(v, Sum):
        return Sum(tuple(canonical(a, env, fenv, level, flevel) for a in v.alts))
    if isinstance(v, Gfp):
        new = f"#X{flevel}"
        inner = {**fenv, v.fixvar: new}
        alts = tuple(canonical(a, env, inner, level, flevel + 1) for a in v.alts)
        return Gfp(new, _canon_seq(v.seq, env), alts)
    if isinstance(v, FixVar):
        return FixVar(fenv.get(v.fixvar, v.fixvar), _canon_seq(v.seq, env))
    if isinstance(v, Cut):
        return v
    raise TypeError(f"not a term: {type(v).__name__}")


def alpha_eq(a, b) -> bool:
    """Equality up to renaming of bound variables, sums compared as sets."""
    if a == b:
        return True
    return canonical(a) == canonical(b)


def alpha_normalize(t: NormalTerm, avoid: Iterable[str] = ()) -> NormalTerm:
    """Rename binders of a normal term to v1, v2, ... in preorder.

    Names in ``avoid`` and free variables of ``t`` are skipped.
    """
    taken = set(avoid) | free_vars(t)
    counter = [0]

    def next_name() -> str:
        while True:
            counter[0] += 1
            name = f"v{counter[0]}"
            if name not in taken:
                return name

    def go(t, env):
        if isinstance(t, Lam):
            new = next_name()
            return Lam(new, t.ann, go(t.body, {**env, t.var: new}))
        return App(env.get(t.head, t.head), tuple(go(a, env) for a in t.args))

    return go(t, {})


def free_vars(t) -> set[str]:
    """Free term variables of a term, heads and sequent annotations included."""
    if isinstance(t, Lam):
        return free_vars(t.body) - {t.var}
    if isinstance(t, (App, Alt)):
        out = {t.head}
        for a in t.args:
            out |= free_vars(a)
        return out
    if isinstance(t, Sum):
        out = set()
        for a in t.alts:
            out |= free_vars(a)
        return out
    if isinstance(t, Gfp):
        out = set(t.seq.context.names())
        for a in t.alts:
            out |= free_vars(a)
        return out
    if isinstance(t, FixVar):
        return set(t.seq.context.names())
    return set()


def all_names(t) -> set[str]:
    """Every term-variable name occurring in ``t``, bound or free."""
    if isinstance(t, Lam):
        return all_names(t.body) | {t.var}
    if isinstance(t, (App, Alt)):
        out = {t.head}
        for a in t.args:
            out |= all_names(a)
        return out
    if isinstance(t, Sum):
        out = set()
        for a in t.alts:
            out |= all_names(a)
        return out
    return free_vars(t) if isinstance(t, (Gfp, FixVar)) else set()


# --------------------------------------------------------------------------
# structural checks on finitary terms


def check_well_bound(t, env=None) -> bool:
    """Every occurrence X^s' bound by ``gfp X^s`` satisfies s <= s'."""
    env = env or {}
    if isinstance(t, Lam):
        return check_well_bound(t.body, env)
    if isinstance(t, Alt):
        return all(check_well_bound(a, env) for a in t.args)
    if isinstance(t, Gfp):
        inner = {**env, t.fixvar: t.seq}
        return all(check_well_bound(a, inner) for a in t.alts)
    if isinstance(t, FixVar):
        binder = env.get(t.fixvar)
        return binder is None or seq_leq(binder, t.seq)
    raise TypeError(f"not a finitary term: {type(t).__name__}")


def free_fixvars(t, bound=frozenset()) -> set[FixVar]:
    if isinstance(t, Lam):
        return free_fixvars(t.body, bound)
    if isinstance(t, Alt):
        out = set()
        for a in t.args:
            out |= free_fixvars(a, bound)
        return out
    if isinstance(t, Gfp):
        out = set()
        for a in t.alts:
            out |= free_fixvars(a, bound | {t.fixvar})
        return out
    if isinstance(t, FixVar):
        return set() if t.fixvar in bound else {t}
    raise TypeError(f"not a finitary term: {type(t).__name__}")


def head_controlled(t) -> bool:
    """No sum (or gfp body) anywhere in ``t`` has two summands with one head."""
    if isinstance(t, Lam):
        return head_controlled(t.body)
    if isinstance(t, (Sum, Gfp)):
        heads = [a.head for a in t.alts]
        return len(set(heads)) == len(heads) and all(head_controlled(a) for a in t.alts)
    if isinstance(t, (Alt, App)):
        return all(head_controlled(a) for a in t.args)
    return True


def subterms(t) -> Iterator:
    """All term-position subterms of a finitary term or forest, preorder."""
    yield t
    if isinstance(t, Lam):
        yield from subterms(t.body)
    elif isinstance(t, (Gfp, Sum)):
        for a in t.alts:
            for arg in a.args:
                yield from subterms(arg)
    elif isinstance(t, App):
        for arg in t.args:
            yield from subterms(arg)


def elim_depth(t) -> int:
    """Maximal nesting of applications / alternatives along a path."""
    if isinstance(t, Lam):
        return elim_depth(t.body)
    if isinstance(t, (App, Alt)):
        return 1 + max((elim_depth(a) for a in t.args), default=0)
    if isinstance(t, (Sum, Gfp)):
        return max((elim_depth(a) for a in t.alts), default=0)
    return 0
