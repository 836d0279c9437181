"""Combinator terms, their concrete syntax, and element literals.

Term grammar::

    term    := atom ("." term)?            composition, right associative
    atom    := "I" | "L" | "R" | "T" | "F" | ident
             | "pi(" term "," term ")"
             | "sigma(" term "," term "," term ")"
             | "iter(" term "," term ")"
             | "(" term ")"

``a.b`` denotes ``a`` applied after ``b``.  Parenthesised grouping is only
needed to print left-nested compositions faithfully.

Element literals: ``o``, ``#n``, ``(e1,e2)`` and backtick-quoted base points.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .errors import TermSyntaxError
from .mosch_core import O, BasePoint, MoschElem, Pair, nat_to_code

__all__ = [
    "Term", "Prim", "Sym", "Comp", "Pi", "Sigma", "Iter",
    "I", "L", "R", "T", "F", "comp",
    "parse_term", "format_term", "parse_elem", "format_elem", "term_depth",
]

PRIMS = ("I", "L", "R", "T", "F")
KEYWORDS = {"pi": 2, "sigma": 3, "iter": 2}


@dataclass(frozen=True)
class Prim:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Sym:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Comp:
    outer: "Term"
    inner: "Term"

    def __str__(self):
        return format_term(self)


@dataclass(frozen=True)
class Pi:
    left: "Term"
    right: "Term"

    def __str__(self):
        return format_term(self)


@dataclass(frozen=True)
class Sigma:
    test: "Term"
    then: "Term"
    orelse: "Term"

    def __str__(self):
        return format_term(self)


@dataclass(frozen=True)
class Iter:
    step: "Term"
    test: "Term"

    def __str__(self):
        return format_term(self)


Term = Union[Prim, Sym, Comp, Pi, Sigma, Iter]

I, L, R, T, F = (Prim(n) for n in PRIMS)


def comp(*terms: Term) -> Term:
    """Right-nested composition ``t1 . t2 . ... . tn``."""
    if not terms:
        return I
    out = terms[-1]
    for t in reversed(terms[:-1]):
        out = Comp(t, out)
    return out


def term_depth(t: Term) -> int:
    if isinstance(t, (Prim, Sym)):
        return 0
    if isinstance(t, Comp):
        return 1 + max(term_depth(t.outer), term_depth(t.inner))
    if isinstance(t, Pi):
        return 1 + max(term_depth(t.left), term_depth(t.right))
    if isinstance(t, Sigma):
        return 1 + max(term_depth(t.test), term_depth(t.then), term_depth(t.orelse))
    return 1 + max(term_depth(t.step), term_depth(t.test))


def format_term(t: Term) -> str:
    if isinstance(t, (Prim, Sym)):
        return t.name
    if isinstance(t, Comp):
        outer = format_term(t.outer)
        if isinstance(t.outer, Comp):
            outer = f"({outer})"
        return f"{outer}.{format_term(t.inner)}"
    if isinstance(t, Pi):
        return f"pi({format_term(t.left)}, {format_term(t.right)})"
    if isinstance(t, Sigma):
        return (f"sigma({format_term(t.test)}, {format_term(t.then)}, "
                f"{format_term(t.orelse)})")
    if isinstance(t, Iter):
        return f"iter({format_term(t.step)}, {format_term(t.test)})"
    raise TypeError(f"not a term: {t!r}")


_TOKEN = re.compile(r"\s*(?:(?P<ident>[A-Za-z_][A-Za-z0-9_']*)|(?P<punct>[(),.]))")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        m = _TOKEN.match(self.text, self.pos)
        if not m:
            return None, self.pos
        start = m.start("ident") if m.group("ident") else m.start("punct")
        return m.group("ident") or m.group("punct"), start

    def take(self):
        tok, start = self.peek()
        if tok is None:
            self._skip()
            return None, self.pos
        self.pos = _TOKEN.match(self.text, self.pos).end()
        return tok, start

    def expect(self, want: str):
        tok, start = self.take()
        if tok != want:
            self._fail(start, repr(want))

    def _fail(self, pos, expected):
        self._skip()
        raise TermSyntaxError(self.text, min(pos, len(self.text)), expected)

    def term(self) -> Term:
        head = self.atom()
        tok, _ = self.peek()
        if tok == ".":
            self.take()
            return Comp(head, self.term())
        return head

    def atom(self) -> Term:
        tok, start = self.take()
        if tok is None:
            self._fail(start, "a term")
        if tok == "(":
            inner = self.term()
            self.expect(")")
            return inner
        if tok in PRIMS:
            return Prim(tok)
        if tok in KEYWORDS:
            nxt, _ = self.peek()
            if nxt == "(":
                self.take()
                args = [self.term()]
                for _ in range(KEYWORDS[tok] - 1):
                    self.expect(",")
                    args.append(self.term())
                self.expect(")")
                return {"pi": Pi, "sigma": Sigma, "iter": Iter}[tok](*args)
            return Sym(tok)
        if tok[0].isalpha() or tok[0] == "_":
            return Sym(tok)
        self._fail(start, "a term")


def parse_term(text: str) -> Term:
    p = _Parser(text)
    t = p.term()
    tok, start = p.peek()
    if tok is not None:
        p._fail(start, "end of input")
    p._skip()
    if p.pos != len(text):
        p._fail(p.pos, "end of input")
    return t


def format_elem(z: MoschElem) -> str:
    return str(z)


def parse_elem(text: str) -> MoschElem:
    pos = 0
    n = len(text)

    def skip():
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def fail(expected):
        raise TermSyntaxError(text, min(pos, n), expected)

    def elem() -> MoschElem:
        nonlocal pos
        skip()
        if pos >= n:
            fail("an element")
        ch = text[pos]
        if ch == "o" and (pos + 1 == n or not (text[pos + 1].isalnum() or text[pos + 1] == "_")):
            pos += 1
            return O
        if ch == "#":
            m = re.compile(r"#(\d+)").match(text, pos)
            if not m:
                fail("digits after '#'")
            pos = m.end()
            return nat_to_code(int(m.group(1)))
        if ch == "`":
            end = text.find("`", pos + 1)
            if end < 0 or end == pos + 1:
                fail("closing backtick")
            ident = text[pos + 1:end]
            pos = end + 1
            return BasePoint(ident)
        if ch == "(":
            pos += 1
            u = elem()
            skip()
            if pos >= n or text[pos] != ",":
                fail("','")
            pos += 1
            v = elem()
            skip()
            if pos >= n or text[pos] != ")":
                fail("')'")
            pos += 1
            return Pair(u, v)
        fail("an element")

    z = elem()
    skip()
    if pos != n:
        fail("end of input")
    return z
