"""Formula ASTs over {~, &, |}, their grammar, and Boolean valuations.

Grammar (whitespace insignificant)::

    formula := iff
    iff     := or ( "<->" or )*
    or      := and ( "|" and )*
    and     := unary ( "&" unary )*
    unary   := "~" unary | atom | "(" formula ")"
    atom    := [a-z][a-z0-9_]*

``<->`` is parser sugar only: ``a <-> b`` desugars to
``(~a | b) & (~b | a)``, so the AST carries exactly the three
connectives ~, &, |.  Binary operators associate to the left.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Mapping, Union

from .errors import ParseError

ATOM_RE = re.compile(r"[a-z][a-z0-9_]*")


@dataclass(frozen=True)
class Atom:
    name: str

    def __post_init__(self):
        if ATOM_RE.fullmatch(self.name) is None:
            raise ValueError(f"invalid atom name {self.name!r}")


@dataclass(frozen=True)
class Not:
    child: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


Formula = Union[Atom, Not, And, Or]


@dataclass(frozen=True, eq=True)
class Valuation:
    """Total atom assignment: an explicit map plus a default bit.

    Atoms absent from ``assign`` take ``default``, which makes every
    valuation total over the whole alphabet.
    """

    assign: Mapping[str, int]
    default: int = 0

    def bit(self, atom: str) -> int:
        return self.assign.get(atom, self.default)


def evaluate(f: Formula, v: Valuation) -> int:
    """Evaluate ``f`` under ``v`` with the standard Boolean semantics."""
    if isinstance(f, Atom):
        return v.bit(f.name)
    if isinstance(f, Not):
        return 1 - evaluate(f.child, v)
    if isinstance(f, And):
        return evaluate(f.left, v) & evaluate(f.right, v)
    if isinstance(f, Or):
        return evaluate(f.left, v) | evaluate(f.right, v)
    raise TypeError(f"not a formula: {f!r}")


def level(f: Formula) -> int:
    """Connective nesting depth: atoms sit at level 0."""
    if isinstance(f, Atom):
        return 0
    if isinstance(f, Not):
        return level(f.child) + 1
    return max(level(f.left), level(f.right)) + 1


def atoms_of(f: Formula) -> set[str]:
    """All atom names occurring in ``f``."""
    if isinstance(f, Atom):
        return {f.name}
    if isinstance(f, Not):
        return atoms_of(f.child)
    return atoms_of(f.left) | atoms_of(f.right)


# --- parsing -----------------------------------------------------------

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<atom>[a-z][a-z0-9_]*)|(?P<iff><->)|(?P<not>~)|(?P<and>&)"
    r"|(?P<or>\|)|(?P<lpar>\()|(?P<rpar>\)))"
)


def _tokenize(text: str) -> Iterator[tuple[str, str, int]]:
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            bad_at = len(text) - len(stripped)
            raise ParseError(f"unexpected character {text[bad_at]!r}", bad_at)
        yield m.lastgroup, m.group(m.lastgroup), m.start(m.lastgroup)
        pos = m.end()
    yield "eof", "", len(text)


class _Parser:
    def __init__(self, text: str):
        self.tokens = list(_tokenize(text))
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def take(self, kind: str) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        if tok[0] != kind:
            raise ParseError(f"expected {kind}, found {tok[1] or 'end of input'!r}", tok[2])
        self.i += 1
        return tok

    def formula(self) -> Formula:
        node = self.disjunction()
        while self.peek()[0] == "iff":
            self.take("iff")
            rhs = self.disjunction()
            node = And(Or(Not(node), rhs), Or(Not(rhs), node))
        return node

    def disjunction(self) -> Formula:
        node = self.conjunction()
        while self.peek()[0] == "or":
            self.take("or")
            node = Or(node, self.conjunction())
        return node

    def conjunction(self) -> Formula:
        node = self.unary()
        while self.peek()[0] == "and":
            self.take("and")
            node = And(node, self.unary())
        return node

    def unary(self) -> Formula:
        kind, text, pos = self.peek()
        if kind == "not":
            self.take("not")
            return Not(self.unary())
        if kind == "atom":
            self.take("atom")
            return Atom(text)
        if kind == "lpar":
            self.take("lpar")
            node = self.formula()
            self.take("rpar")
            return node
        raise ParseError(f"expected a formula, found {text or 'end of input'!r}", pos)


def parse(text: str) -> Formula:
    """Parse ``text`` into the unique AST fixed by the precedence rules.

    Raises :class:`ParseError` with the offending position on malformed
    input.
    """
    p = _Parser(text)
    node = p.formula()
    p.take("eof")
    return node


# --- printing ----------------------------------------------------------

_PREC = {Or: 0, And: 1, Not: 2, Atom: 3}


def _wrap(child: Formula, parent_prec: int, right_operand: bool) -> str:
    text = render(child)
    prec = _PREC[type(child)]
    # Left-associative printing: a same-precedence right operand keeps
    # its parentheses so the round trip reproduces the tree.
    if prec < parent_prec or (prec == parent_prec and right_operand):
        return f"({text})"
    return text


def render(f: Formula) -> str:
    """Minimal-parentheses text form; ``parse(render(f))`` equals ``f``."""
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Not):
        return "~" + _wrap(f.child, _PREC[Not], False)
    if isinstance(f, And):
        return f"{_wrap(f.left, 1, False)} & {_wrap(f.right, 1, True)}"
    if isinstance(f, Or):
        return f"{_wrap(f.left, 0, False)} | {_wrap(f.right, 0, True)}"
    raise TypeError(f"not a formula: {f!r}")
