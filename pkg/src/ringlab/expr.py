"""The ring-construction expression language.

Grammar (whitespace is insignificant)::

    expr := term { "x" term }                      left-associative product
    term := "Z(" int ")" | "GF(" int ")"
          | "M(" int "," expr [ "," "s=" int ] ")"
          | "T(" int "," expr ")" | "D(" int "," expr ")"
          | "Triv(" expr ")" | "FT(" expr "," expr ")"
          | "K(" expr "," "s=" int ")"
          | "PolyQuot(" expr "," poly ")" | "JQuot(" expr ")"
          | "(" expr ")"
    poly := pterm { "+" pterm }
    pterm := int | [int ["*"]] "x" ["^" int]

``Ms(...)`` is accepted as a spelling of ``M(..., s=...)``.  Multipliers
``s=`` are element indices of the base ring; polynomial coefficients are the
integer multiples c*1 of the base ring's identity.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace

INT_LIMIT = 2**31 - 1

KEYWORDS = ("PolyQuot", "JQuot", "Triv", "GF", "FT", "Ms", "Z", "M", "T", "D", "K", "x", "s")


class ParseError(ValueError):
    """Syntax error; ``offset`` is the 1-based byte position of the culprit."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset
        self.reason = message


# --------------------------------------------------------------------------
# AST


@dataclass(frozen=True)
class Node:
    pass


def _span():
    return field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class ZMod(Node):
    n: int
    span: tuple = _span()


@dataclass(frozen=True)
class GF(Node):
    q: int
    span: tuple = _span()


@dataclass(frozen=True)
class Prod(Node):
    left: Node
    right: Node
    span: tuple = _span()


@dataclass(frozen=True)
class Mat(Node):
    n: int
    base: Node
    span: tuple = _span()


@dataclass(frozen=True)
class MatS(Node):
    n: int
    base: Node
    s: int
    span: tuple = _span()


@dataclass(frozen=True)
class Tri(Node):
    n: int
    base: Node
    span: tuple = _span()


@dataclass(frozen=True)
class DiagConst(Node):
    n: int
    base: Node
    span: tuple = _span()


@dataclass(frozen=True)
class Triv(Node):
    base: Node
    span: tuple = _span()


@dataclass(frozen=True)
class FTri(Node):
    left: Node
    right: Node
    span: tuple = _span()


@dataclass(frozen=True)
class K(Node):
    base: Node
    s: int
    span: tuple = _span()


@dataclass(frozen=True)
class PolyQ(Node):
    base: Node
    coeffs: tuple[int, ...]  # ascending degree, leading term last
    span: tuple = _span()


@dataclass(frozen=True)
class JQuot(Node):
    base: Node
    span: tuple = _span()


# --------------------------------------------------------------------------
# printing


def format_poly(coeffs) -> str:
    parts = []
    for deg in range(len(coeffs) - 1, -1, -1):
        c = coeffs[deg]
        if c == 0:
            continue
        if deg == 0:
            parts.append(str(c))
            continue
        mono = "x" if deg == 1 else f"x^{deg}"
        parts.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(parts) or "0"


def to_text(node: Node) -> str:
    """Canonical printed form; also used as the built ring's name."""
    match node:
        case ZMod(n):
            return f"Z({n})"
        case GF(q):
            return f"GF({q})"
        case Prod(left, right):
            r = to_text(right)
            return f"{to_text(left)}x{f'({r})' if isinstance(right, Prod) else r}"
        case Mat(n, base):
            return f"M({n},{to_text(base)})"
        case MatS(n, base, s):
            return f"M({n},{to_text(base)},s={s})"
        case Tri(n, base):
            return f"T({n},{to_text(base)})"
        case DiagConst(n, base):
            return f"D({n},{to_text(base)})"
        case Triv(base):
            return f"Triv({to_text(base)})"
        case FTri(left, right):
            return f"FT({to_text(left)},{to_text(right)})"
        case K(base, s):
            return f"K({to_text(base)},s={s})"
        case PolyQ(base, coeffs):
            return f"PolyQuot({to_text(base)},{format_poly(coeffs)})"
        case JQuot(base):
            return f"JQuot({to_text(base)})"
    raise TypeError(f"not a ring expression: {node!r}")


def to_tree(node: Node) -> str:
    """Constructor-style AST dump, e.g. ``Mat(2, ZMod(2))``."""
    match node:
        case ZMod(n):
            return f"ZMod({n})"
        case GF(q):
            return f"GF({q})"
        case Prod(left, right):
            return f"Prod({to_tree(left)}, {to_tree(right)})"
        case Mat(n, base):
            return f"Mat({n}, {to_tree(base)})"
        case MatS(n, base, s):
            return f"MatS({n}, {to_tree(base)}, {s})"
        case Tri(n, base):
            return f"Tri({n}, {to_tree(base)})"
        case DiagConst(n, base):
            return f"DiagConst({n}, {to_tree(base)})"
        case Triv(base):
            return f"Triv({to_tree(base)})"
        case FTri(left, right):
            return f"FTri({to_tree(left)}, {to_tree(right)})"
        case K(base, s):
            return f"K({to_tree(base)}, {s})"
        case PolyQ(base, coeffs):
            return f"PolyQ({to_tree(base)}, {format_poly(coeffs)})"
        case JQuot(base):
            return f"JQuot({to_tree(base)})"
    raise TypeError(f"not a ring expression: {node!r}")


# --------------------------------------------------------------------------
# lexer

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<word>[A-Za-z]+)|(?P<punct>[(),=+^*]))")


@dataclass(frozen=True)
class Token:
    kind: str  # "int", a keyword, a punctuation character, or "end"
    text: str
    pos: int  # 0-based


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    n = len(text)
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos + 1)
        start = m.start(m.lastgroup)
        if m.group("int") is not None:
            tokens.append(Token("int", m.group("int"), start))
            pos = m.end()
        elif m.group("punct") is not None:
            tokens.append(Token(m.group("punct"), m.group("punct"), start))
            pos = m.end()
        else:
            word = m.group("word")
            if word in KEYWORDS:
                tokens.append(Token(word, word, start))
                pos = m.end()
            elif word.startswith("x"):
                # product operator glued to the next constructor, e.g. Z(2)xZ(2)
                tokens.append(Token("x", "x", start))
                pos = start + 1
            else:
                raise ParseError(f"unknown constructor {word!r}", start + 1)
    tokens.append(Token("end", "", n))
    return tokens


# --------------------------------------------------------------------------
# recursive descent parser


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def error(self, message, tok=None):
        tok = tok or self.tok
        what = "end of input" if tok.kind == "end" else repr(tok.text)
        raise ParseError(f"{message}, found {what}", tok.pos + 1)

    def eat(self, kind: str) -> Token:
        tok = self.tok
        if tok.kind != kind:
            self.error(f"expected {kind!r}")
        self.i += 1
        return tok

    def integer(self) -> int:
        tok = self.eat("int")
        value = int(tok.text)
        if value > INT_LIMIT:
            raise ParseError("integer literal too large", tok.pos + 1)
        return value

    def parse(self) -> Node:
        node = self.expr()
        if self.tok.kind != "end":
            self.error("expected 'x' or end of input")
        return node

    def expr(self) -> Node:
        start = self.tok.pos
        node = self.term()
        while self.tok.kind == "x":
            self.i += 1
            right = self.term()
            node = Prod(node, right, span=(start, self.tokens[self.i - 1].pos + 1))
        return node

    def term(self) -> Node:
        tok = self.tok
        kind = tok.kind
        start = tok.pos
        if kind == "(":
            self.i += 1
            node = self.expr()
            self.eat(")")
            return node
        if kind not in {"Z", "GF", "M", "Ms", "T", "D", "Triv", "FT", "K", "PolyQuot", "JQuot"}:
            self.error("expected a ring constructor")
        self.i += 1
        self.eat("(")
        if kind == "Z":
            node = ZMod(self.integer(), span=(start, 0))
        elif kind == "GF":
            node = GF(self.integer(), span=(start, 0))
        elif kind in ("M", "Ms"):
            n = self.integer()
            self.eat(",")
            base = self.expr()
            if self.tok.kind == "," or kind == "Ms":
                self.eat(",")
                node = MatS(n, base, self.multiplier(), span=(start, 0))
            else:
                node = Mat(n, base, span=(start, 0))
        elif kind in ("T", "D"):
            n = self.integer()
            self.eat(",")
            base = self.expr()
            node = (Tri if kind == "T" else DiagConst)(n, base, span=(start, 0))
        elif kind == "Triv":
            node = Triv(self.expr(), span=(start, 0))
        elif kind == "JQuot":
            node = JQuot(self.expr(), span=(start, 0))
        elif kind == "FT":
            left = self.expr()
            self.eat(",")
            node = FTri(left, self.expr(), span=(start, 0))
        elif kind == "K":
            base = self.expr()
            self.eat(",")
            node = K(base, self.multiplier(), span=(start, 0))
        else:
            base = self.expr()
            self.eat(",")
            node = PolyQ(base, self.poly(), span=(start, 0))
        end = self.eat(")").pos + 1
        return replace(node, span=(start, end))

    def multiplier(self) -> int:
        self.eat("s")
        self.eat("=")
        return self.integer()

    def poly(self) -> tuple[int, ...]:
        start = self.tok
        terms: dict[int, int] = {}
        while True:
            coeff, deg = self.poly_term()
            terms[deg] = terms.get(deg, 0) + coeff
            if self.tok.kind != "+":
                break
            self.i += 1
        degree = max((d for d, c in terms.items() if c), default=0)
        if degree < 1:
            raise ParseError("modulus polynomial must have degree >= 1", start.pos + 1)
        return tuple(terms.get(d, 0) for d in range(degree + 1))

    def poly_term(self) -> tuple[int, int]:
        coeff = 1
        if self.tok.kind == "int":
            coeff = self.integer()
            if self.tok.kind == "*":
                self.i += 1
            elif self.tok.kind != "x":
                return coeff, 0
        if self.tok.kind != "x":
            self.error("expected 'x' in polynomial")
        self.i += 1
        deg = 1
        if self.tok.kind == "^":
            self.i += 1
            deg = self.integer()
        return coeff, deg


def parse(text: str) -> Node:
    """Parse an expression into its AST; raises ``ParseError``."""
    return _Parser(text).parse()


def evaluate(node: Node, *, max_order: int | None = None, cache: dict | None = None):
    """Build the ring denoted by ``node`` (see ``constructions.build``)."""
    from .constructions import build

    return build(node, max_order=max_order, cache=cache)
