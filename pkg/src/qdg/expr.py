"""Surface syntax for algebra expressions.

Grammar (whitespace insignificant, juxtaposition is never multiplication):

    expr    := ['-'] term (('+' | '-') term)*
    term    := factor ('*' factor)*
    factor  := atom ['^' ['-'] INT]
    atom    := INT | 'q' | 'a' | 'b' | generator | 'qint' '(' ['-'] INT ')'
             | '(' expr ')' | monomial
    monomial:= '[' wordslot '|' wordslot '|' centralslot ']'

Generators are x0..x3 and c0..c3 in box mode, x and y in free mode.  The
bracketed monomial atom mirrors the canonical normal-form rendering
(`x0.x2 | x1 | c0^2`, with '-' for an empty slot) so that printed output
parses back; it is only valid in box mode.  Negative powers are allowed
only on invertible atoms (q, a, b, the c_i and their monomials).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import List, Tuple, Union

from . import boxtilde as bt
from .boxtilde import BoxElem, NormalMono
from .freealg import FreeElem, word_elem
from .qcoeff import DEFAULT_RING, LaurentRing, NotInvertibleError

RING = DEFAULT_RING


class ParseError(ValueError):
    """Syntax or mode error, carrying the byte offset of the offender."""

    def __init__(self, message: str, position: int):
        super().__init__("%s (at offset %d)" % (message, position))
        self.position = position


# -- AST --------------------------------------------------------------------


@dataclass
class Lit:
    value: int


@dataclass
class Sym:
    name: str


@dataclass
class Gen:
    name: str


@dataclass
class QIntNode:
    n: int


@dataclass
class Neg:
    arg: "Expr"


@dataclass
class Add:
    left: "Expr"
    right: "Expr"


@dataclass
class Sub:
    left: "Expr"
    right: "Expr"


@dataclass
class Mul:
    left: "Expr"
    right: "Expr"


@dataclass
class Pow:
    base: "Expr"
    exponent: int


@dataclass
class Mono:
    even: tuple
    odd: tuple
    central: tuple


Expr = Union[Lit, Sym, Gen, QIntNode, Neg, Add, Sub, Mul, Pow, Mono]


# -- tokenizer ---------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^()\[\]|.]))"
)


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            bad = len(text) - len(stripped)
            raise ParseError("unexpected character %r" % text[bad], bad)
        if m.group("int") is not None:
            tokens.append(("int", m.group("int"), m.start("int")))
        elif m.group("name") is not None:
            tokens.append(("name", m.group("name"), m.start("name")))
        else:
            tokens.append(("op", m.group("op"), m.start("op")))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


_BOX_GENERATORS = {"x0", "x1", "x2", "x3", "c0", "c1", "c2", "c3"}
_FREE_GENERATORS = {"x", "y"}
_SYMBOLS = {"q", "a", "b"}


class _Parser:
    def __init__(self, text: str, mode: str):
        if mode not in ("box", "free"):
            raise ValueError("mode must be 'box' or 'free'")
        self.mode = mode
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> Tuple[str, str, int]:
        return self.tokens[self.i]

    def advance(self) -> Tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op: str) -> None:
        kind, value, pos = self.peek()
        if kind != "op" or value != op:
            raise ParseError("expected %r" % op, pos)
        self.advance()

    def parse(self) -> Expr:
        node = self.expr()
        kind, value, pos = self.peek()
        if kind != "end":
            raise ParseError("trailing input %r" % value, pos)
        return node

    def expr(self) -> Expr:
        kind, value, _ = self.peek()
        negate = False
        if kind == "op" and value == "-":
            self.advance()
            negate = True
        node: Expr = self.term()
        if negate:
            node = Neg(node)
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value in "+-":
                self.advance()
                rhs = self.term()
                node = Add(node, rhs) if value == "+" else Sub(node, rhs)
            else:
                return node

    def term(self) -> Expr:
        node = self.factor()
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value == "*":
                self.advance()
                node = Mul(node, self.factor())
            else:
                return node

    def signed_int(self) -> int:
        sign = 1
        kind, value, pos = self.peek()
        if kind == "op" and value == "-":
            self.advance()
            sign = -1
            kind, value, pos = self.peek()
        if kind != "int":
            raise ParseError("expected an integer", pos)
        self.advance()
        return sign * int(value)

    def factor(self) -> Expr:
        node = self.atom()
        kind, value, _ = self.peek()
        if kind == "op" and value == "^":
            self.advance()
            node = Pow(node, self.signed_int())
        return node

    def atom(self) -> Expr:
        kind, value, pos = self.advance()
        if kind == "int":
            return Lit(int(value))
        if kind == "name":
            if value == "qint":
                self.expect_op("(")
                n = self.signed_int()
                self.expect_op(")")
                return QIntNode(n)
            if value in _SYMBOLS:
                return Sym(value)
            if value in _BOX_GENERATORS:
                if self.mode != "box":
                    raise ParseError("generator %r is not valid in free mode" % value, pos)
                return Gen(value)
            if value in _FREE_GENERATORS:
                if self.mode != "free":
                    raise ParseError("generator %r is not valid in box mode" % value, pos)
                return Gen(value)
            raise ParseError("unknown name %r" % value, pos)
        if kind == "op" and value == "(":
            node = self.expr()
            self.expect_op(")")
            return node
        if kind == "op" and value == "[":
            if self.mode != "box":
                raise ParseError("normal-form monomials are not valid in free mode", pos)
            return self.monomial()
        raise ParseError("unexpected token %r" % (value or "end of input"), pos)

    def monomial(self) -> Mono:
        even = self.word_slot((0, 2))
        self.expect_op("|")
        odd = self.word_slot((1, 3))
        self.expect_op("|")
        central = self.central_slot()
        self.expect_op("]")
        return Mono(even, odd, central)

    def word_slot(self, allowed: tuple) -> tuple:
        kind, value, pos = self.peek()
        if kind == "op" and value == "-":
            self.advance()
            return ()
        letters = []
        while True:
            kind, value, pos = self.advance()
            if kind != "name" or value not in _BOX_GENERATORS or value[0] != "x":
                raise ParseError("expected a word letter", pos)
            i = int(value[1])
            if i not in allowed:
                raise ParseError("letter %r is in the wrong slot" % value, pos)
            letters.append(i)
            kind, value, _ = self.peek()
            if kind == "op" and value == ".":
                self.advance()
                continue
            return tuple(letters)

    def central_slot(self) -> tuple:
        kind, value, pos = self.peek()
        exps = [0, 0, 0, 0]
        if kind == "op" and value == "-":
            self.advance()
            return tuple(exps)
        while True:
            kind, value, pos = self.advance()
            if kind != "name" or value not in _BOX_GENERATORS or value[0] != "c":
                raise ParseError("expected a central generator", pos)
            i = int(value[1])
            power = 1
            kind, value, _ = self.peek()
            if kind == "op" and value == "^":
                self.advance()
                power = self.signed_int()
            exps[i] += power
            kind, value, _ = self.peek()
            if kind == "op" and value == ".":
                self.advance()
                continue
            return tuple(exps)


def parse(text: str, mode: str = "box") -> Expr:
    return _Parser(text, mode).parse()


# -- evaluation ---------------------------------------------------------------


def _box_pow(e: BoxElem, n: int) -> BoxElem:
    if n >= 0:
        return e ** n
    if len(e.terms) != 1:
        raise NotInvertibleError("not invertible")
    ((mono, coeff),) = e.terms.items()
    if mono.even or mono.odd or not coeff.is_unit():
        raise NotInvertibleError("not invertible")
    inverted = NormalMono((), (), bt.scale_central(mono.central, n))
    return BoxElem(e.ring, {inverted: coeff ** n})


def _free_pow(e: FreeElem, n: int) -> FreeElem:
    if n < 0:
        if len(e.terms) != 1:
            raise NotInvertibleError("not invertible")
        ((word, coeff),) = e.terms.items()
        if word or not coeff.is_unit():
            raise NotInvertibleError("not invertible")
        return FreeElem(e.ring, {"": coeff ** n})
    out = FreeElem(e.ring, {"": e.ring.one()})
    for _ in range(n):
        out = out * e
    return out


def evaluate(node: Expr, mode: str = "box", ring: LaurentRing = RING):
    """Exact evaluation; in box mode the result is in normal form."""

    def scalar(c):
        if mode == "box":
            return BoxElem(ring, {bt.IDENTITY_MONO: c})
        return FreeElem(ring, {"": c})

    def walk(n):
        if isinstance(n, Lit):
            return scalar(ring.from_int(n.value))
        if isinstance(n, Sym):
            return scalar(ring.gen(n.name))
        if isinstance(n, QIntNode):
            return scalar(ring.qint(n.n))
        if isinstance(n, Gen):
            if mode == "box":
                if n.name[0] == "x":
                    return bt.generator(int(n.name[1]), ring)
                return bt.central_gen(int(n.name[1]), 1, ring)
            return word_elem(n.name, ring)
        if isinstance(n, Mono):
            return BoxElem(ring, {NormalMono(n.even, n.odd, n.central): ring.one()})
        if isinstance(n, Neg):
            return -walk(n.arg)
        if isinstance(n, Add):
            return walk(n.left) + walk(n.right)
        if isinstance(n, Sub):
            return walk(n.left) - walk(n.right)
        if isinstance(n, Mul):
            return walk(n.left) * walk(n.right)
        if isinstance(n, Pow):
            base = walk(n.base)
            if mode == "box":
                return _box_pow(base, n.exponent)
            return _free_pow(base, n.exponent)
        raise TypeError("unknown AST node %r" % (n,))

    return walk(node)


def eval_text(text: str, mode: str = "box", ring: LaurentRing = RING):
    return evaluate(parse(text, mode), mode, ring)


def render(e) -> str:
    """Canonical text for an element; parses back to an equal element."""
    if isinstance(e, BoxElem):
        return e.render()
    if isinstance(e, FreeElem):
        return str(e)
    raise TypeError("cannot render %r" % (e,))
