"""Equation systems: AST, parser, desugaring and rendering.

Grammar::

    system   := block+ matrix
    block    := ("forall" | "exists") ident+ "."
    matrix   := disjunct ("|" disjunct)*
    disjunct := atom ("&" atom)*
    atom     := word "=" word | word "in" "V" "(" word ")" | word "in" "E"
              | word "in" "G" | word ("R"|"L"|"H"|"D"|"J") word
    word     := factor ("*" factor)*
    factor   := (ident | "(" word ")") ("^" posint)?

Parenthesised factors are flattened, the product being associative.  Files hold
one system per stanza, stanzas separated by a line ``---``; ``#`` starts a comment.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .errors import DuplicateBinder, EquationSyntaxError, UnboundSymbol

Word = tuple[str, ...]

KEYWORDS = frozenset({"forall", "exists", "in", "V", "E", "G", "R", "L", "H", "D", "J"})
GREEN_RELATIONS = ("R", "L", "H", "D", "J")


@dataclass(frozen=True)
class WordEq:
    lhs: Word
    rhs: Word


@dataclass(frozen=True)
class InV:
    x: Word
    a: Word


@dataclass(frozen=True)
class InE:
    w: Word


@dataclass(frozen=True)
class InG:
    w: Word


@dataclass(frozen=True)
class Green:
    rel: str
    u: Word
    v: Word


Atom = Union[WordEq, InV, InE, InG, Green]


@dataclass(frozen=True)
class Block:
    quantifier: str          # "forall" | "exists"
    symbols: tuple[str, ...]


@dataclass(frozen=True)
class EquationSystem:
    prefix: tuple[Block, ...]
    matrix: tuple[tuple[Atom, ...], ...]   # disjunction of conjunctions

    def __post_init__(self):
        check_system(self)

    @property
    def symbols(self) -> tuple[str, ...]:
        return tuple(s for b in self.prefix for s in b.symbols)

    def quantifier_of(self, symbol: str) -> str:
        for b in self.prefix:
            if symbol in b.symbols:
                return b.quantifier
        raise KeyError(symbol)

    @property
    def universals(self) -> tuple[str, ...]:
        return tuple(s for b in self.prefix if b.quantifier == "forall" for s in b.symbols)

    @property
    def existentials(self) -> tuple[str, ...]:
        return tuple(s for b in self.prefix if b.quantifier == "exists" for s in b.symbols)

    def __str__(self) -> str:
        return render(self)


def atom_words(atom: Atom) -> tuple[Word, ...]:
    if isinstance(atom, WordEq):
        return (atom.lhs, atom.rhs)
    if isinstance(atom, InV):
        return (atom.x, atom.a)
    if isinstance(atom, (InE, InG)):
        return (atom.w,)
    return (atom.u, atom.v)


def atom_symbols(atom: Atom) -> set[str]:
    return {s for w in atom_words(atom) for s in w}


def map_words(atom: Atom, f) -> Atom:
    """Apply ``f`` to every word of an atom."""
    if isinstance(atom, WordEq):
        return WordEq(f(atom.lhs), f(atom.rhs))
    if isinstance(atom, InV):
        return InV(f(atom.x), f(atom.a))
    if isinstance(atom, InE):
        return InE(f(atom.w))
    if isinstance(atom, InG):
        return InG(f(atom.w))
    return Green(atom.rel, f(atom.u), f(atom.v))


def check_system(sys: EquationSystem) -> None:
    if not sys.prefix:
        raise ValueError("an equation system needs at least one quantifier block")
    seen: set[str] = set()
    for i, b in enumerate(sys.prefix):
        if b.quantifier not in ("forall", "exists"):
            raise ValueError(f"bad quantifier {b.quantifier!r}")
        if not b.symbols:
            raise ValueError("empty quantifier block")
        if i and sys.prefix[i - 1].quantifier == b.quantifier:
            raise ValueError("adjacent blocks must alternate quantifiers")
        for s in b.symbols:
            if s in seen:
                raise DuplicateBinder(f"symbol {s!r} bound twice")
            seen.add(s)
    if not sys.matrix or any(not d for d in sys.matrix):
        raise ValueError("matrix needs at least one nonempty disjunct")
    for d in sys.matrix:
        for atom in d:
            for w in atom_words(atom):
                if not w:
                    raise ValueError("words must be nonempty")
            for s in atom_symbols(atom):
                if s not in seen:
                    raise UnboundSymbol(f"symbol {s!r} is not bound by the prefix")


def make_system(blocks, matrix) -> EquationSystem:
    """Build a system, merging adjacent blocks that share a quantifier."""
    merged: list[Block] = []
    for q, syms in blocks:
        syms = tuple(syms)
        if merged and merged[-1].quantifier == q:
            merged[-1] = Block(q, merged[-1].symbols + syms)
        else:
            merged.append(Block(q, syms))
    return EquationSystem(tuple(merged), tuple(tuple(d) for d in matrix))


# ---------------------------------------------------------------------------
# tokenizer / parser

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<comment>\#[^\n]*)
  | (?P<ident>[A-Za-z][A-Za-z0-9]*)
  | (?P<int>[0-9]+)
  | (?P<op>[.=*^&|()])
""", re.VERBOSE)


@dataclass
class _Tok:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise EquationSyntaxError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind not in ("ws", "comment"):
            toks.append(_Tok(kind, m.group(), line, pos - line_start + 1))
        chunk = m.group()
        if "\n" in chunk:
            line += chunk.count("\n")
            line_start = pos + chunk.rindex("\n") + 1
        pos = m.end()
    toks.append(_Tok("eof", "", line, pos - line_start + 1))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def error(self, msg: str, tok: _Tok | None = None):
        tok = tok or self.tok
        raise EquationSyntaxError(msg, tok.line, tok.col)

    def accept(self, text: str) -> bool:
        if self.tok.text == text and self.tok.kind in ("op", "ident"):
            self.i += 1
            return True
        return False

    def expect(self, text: str) -> None:
        if not self.accept(text):
            self.error(f"expected {text!r}, found {self.tok.text or 'end of input'!r}")

    def ident(self) -> str:
        tok = self.tok
        if tok.kind != "ident" or tok.text in KEYWORDS:
            self.error(f"expected a symbol, found {tok.text or 'end of input'!r}")
        self.i += 1
        return tok.text

    def system(self) -> EquationSystem:
        blocks = []
        while self.tok.text in ("forall", "exists"):
            q = self.tok.text
            self.i += 1
            syms = [self.ident()]
            while self.tok.kind == "ident" and self.tok.text not in KEYWORDS:
                syms.append(self.ident())
            self.expect(".")
            blocks.append((q, syms))
        if not blocks:
            self.error("expected 'forall' or 'exists'")
        seen: set[str] = set()
        for _, syms in blocks:
            for s in syms:
                if s in seen:
                    raise DuplicateBinder(f"symbol {s!r} bound twice")
                seen.add(s)
        start = self.tok
        matrix = [self.disjunct()]
        while self.accept("|"):
            matrix.append(self.disjunct())
        if self.tok.kind != "eof":
            self.error(f"unexpected {self.tok.text!r}")
        for d in matrix:
            for atom in d:
                for s in sorted(atom_symbols(atom)):
                    if s not in seen:
                        raise UnboundSymbol(
                            f"symbol {s!r} is not bound by the prefix (line {start.line})")
        return make_system(blocks, matrix)

    def disjunct(self) -> list[Atom]:
        atoms = [self.atom()]
        while self.accept("&"):
            atoms.append(self.atom())
        return atoms

    def atom(self) -> Atom:
        u = self.word()
        if self.accept("="):
            return WordEq(u, self.word())
        if self.accept("in"):
            if self.accept("V"):
                self.expect("(")
                a = self.word()
                self.expect(")")
                return InV(u, a)
            if self.accept("E"):
                return InE(u)
            if self.accept("G"):
                return InG(u)
            self.error("expected V(...), E or G after 'in'")
        for rel in GREEN_RELATIONS:
            if self.accept(rel):
                return Green(rel, u, self.word())
        self.error(f"expected '=', 'in' or a Green relation, found {self.tok.text or 'end of input'!r}")

    def word(self) -> Word:
        w = self.factor()
        while self.accept("*"):
            w += self.factor()
        return w

    def factor(self) -> Word:
        if self.accept("("):
            w = self.word()
            self.expect(")")
        else:
            w = (self.ident(),)
        if self.accept("^"):
            tok = self.tok
            if tok.kind != "int" or int(tok.text) < 1:
                self.error("exponent must be a positive integer")
            self.i += 1
            w = w * int(tok.text)
        return w


def parse(text: str) -> EquationSystem:
    """Parse one equation system."""
    return _Parser(text).system()


def parse_word(text: str) -> Word:
    p = _Parser(text)
    w = p.word()
    if p.tok.kind != "eof":
        p.error(f"unexpected {p.tok.text!r}")
    return w


def parse_file(text: str) -> list[EquationSystem]:
    """Parse ``---``-separated stanzas, skipping stanzas that hold only comments."""
    stanzas, current = [], []
    for line in text.splitlines():
        if line.strip() == "---":
            stanzas.append("\n".join(current))
            current = []
        else:
            current.append(line)
    stanzas.append("\n".join(current))
    out = []
    for st in stanzas:
        if any(t.kind != "eof" for t in _tokenize(st)):
            out.append(parse(st))
    return out


# ---------------------------------------------------------------------------
# desugar / render

def desugar(sys: EquationSystem) -> EquationSystem:
    """Expand x in V(a) and w in E into word equalities; InG and Green atoms stay."""
    def expand(atom: Atom):
        if isinstance(atom, InV):
            x, a = atom.x, atom.a
            return [WordEq(a, a + x + a), WordEq(x, x + a + x)]
        if isinstance(atom, InE):
            return [WordEq(atom.w, atom.w + atom.w)]
        return [atom]

    matrix = tuple(tuple(b for a in d for b in expand(a)) for d in sys.matrix)
    if matrix == sys.matrix:
        return sys
    return EquationSystem(sys.prefix, matrix)


def render_word(w: Word) -> str:
    parts = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        parts.append(w[i] if j - i == 1 else f"{w[i]}^{j - i}")
        i = j
    return "*".join(parts)


def render_atom(atom: Atom) -> str:
    if isinstance(atom, WordEq):
        return f"{render_word(atom.lhs)} = {render_word(atom.rhs)}"
    if isinstance(atom, InV):
        return f"{render_word(atom.x)} in V({render_word(atom.a)})"
    if isinstance(atom, InE):
        return f"{render_word(atom.w)} in E"
    if isinstance(atom, InG):
        return f"{render_word(atom.w)} in G"
    return f"{render_word(atom.u)} {atom.rel} {render_word(atom.v)}"


def render(sys: EquationSystem) -> str:
    prefix = " ".join(f"{b.quantifier} {' '.join(b.symbols)}." for b in sys.prefix)
    matrix = " | ".join(" & ".join(render_atom(a) for a in d) for d in sys.matrix)
    return f"{prefix} {matrix}"
