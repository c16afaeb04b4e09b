"""
Parser for species expressions.

    expr    := term (('+' | '-') term)*
    term    := factor ('*' factor)*
    factor  := primary "'"*
    primary := atom "'"* ['(' expr ')'] | '(' expr ')' ['(' expr ')']
    atom    := '0' | '1' | 'X' | 'Y' | 'E' | 'E_' INT | 'Eplus'

Whitespace is insignificant. X(G) is G itself; Y cannot be applied.
"""
import re
from typing import List, NamedTuple, Optional

from src.species.expr import (
    SORT_X,
    SORT_Y,
    Compose,
    Derivative,
    Difference,
    NonemptySet,
    One,
    Product,
    SetOfSize,
    SetSpecies,
    Singleton,
    SpeciesExpr,
    Sum,
    Zero,
)
from src.utils.logging import get_logger

logger = get_logger("parser")


class SpeciesSyntaxError(ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


class Token(NamedTuple):
    kind: str
    value: str
    position: int


_TOKEN = re.compile(
    r"""
    (?P<space>\s+)
  | (?P<atom>Eplus|E_\d+|E_|E|X|Y|\d+|[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*()'])
    """,
    re.VERBOSE,
)


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise SpeciesSyntaxError(f"unexpected character {text[pos]!r}", pos, text)
        kind = m.lastgroup
        if kind != "space":
            tokens.append(Token(kind, m.group(), pos))
        pos = m.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        tok = self.tokens[self.index]
        self.index += 1
        return tok

    def accept(self, value: str) -> Optional[Token]:
        if self.current.kind == "op" and self.current.value == value:
            return self.advance()
        return None

    def expect(self, value: str) -> Token:
        tok = self.accept(value)
        if tok is None:
            found = self.current.value or "end of input"
            raise SpeciesSyntaxError(f"expected {value!r}, found {found!r}", self.current.position, self.text)
        return tok

    def fail(self, message: str, tok: Optional[Token] = None):
        tok = tok or self.current
        raise SpeciesSyntaxError(message, tok.position, self.text)

    # expr := term (('+' | '-') term)*
    def expr(self) -> SpeciesExpr:
        start = self.current.position
        node = self.term()
        while True:
            if self.accept("+"):
                right = self.term()
                node = Sum(node, right, span=(start, self.current.position))
            elif self.accept("-"):
                right = self.term()
                node = Difference(node, right, span=(start, self.current.position))
            else:
                return node

    def term(self) -> SpeciesExpr:
        start = self.current.position
        node = self.factor()
        while self.accept("*"):
            right = self.factor()
            node = Product(node, right, span=(start, self.current.position))
        return node

    def primes(self) -> int:
        count = 0
        while self.accept("'"):
            count += 1
        return count

    def factor(self) -> SpeciesExpr:
        start = self.current.position
        node = self.primary()
        order = self.primes()
        if order:
            node = Derivative(node, order, span=(start, self.current.position))
        return node

    def primary(self) -> SpeciesExpr:
        tok = self.current
        if tok.kind == "atom":
            self.advance()
            node = self.atom(tok)
            order = self.primes()
            if order:
                node = Derivative(node, order, span=(tok.position, self.current.position))
            if self.current.kind == "op" and self.current.value == "(":
                if isinstance(node, Singleton) and node.sort == SORT_Y:
                    self.fail("Y cannot be applied to an argument", tok)
                return self.application(node, tok.position)
            return node
        if self.accept("("):
            node = self.expr()
            self.expect(")")
            if self.current.kind == "op" and self.current.value == "(":
                return self.application(node, tok.position)
            return node
        found = tok.value or "end of input"
        self.fail(f"expected a species, found {found!r}", tok)

    def application(self, outer: SpeciesExpr, start: int) -> SpeciesExpr:
        self.expect("(")
        inner = self.expr()
        self.expect(")")
        if isinstance(outer, Singleton) and outer.sort == SORT_X:
            return inner
        return Compose(outer, inner, span=(start, self.current.position))

    def atom(self, tok: Token) -> SpeciesExpr:
        span = (tok.position, tok.position + len(tok.value))
        value = tok.value
        if value == "0":
            return Zero(span=span)
        if value == "1":
            return One(span=span)
        if value == SORT_X:
            return Singleton(SORT_X, span=span)
        if value == SORT_Y:
            return Singleton(SORT_Y, span=span)
        if value == "E":
            return SetSpecies(span=span)
        if value == "Eplus":
            return NonemptySet(span=span)
        if value == "E_":
            self.fail("E_ must be followed by an integer size", tok)
        if value.startswith("E_"):
            return SetOfSize(int(value[2:]), span=span)
        self.fail(f"unknown atom {value!r}", tok)


def parse_species(text: str) -> SpeciesExpr:
    """Parse a species expression; raises SpeciesSyntaxError with the offending position."""
    if text is None or not text.strip():
        raise SpeciesSyntaxError("empty species expression", 0, text or "")
    parser = _Parser(text)
    node = parser.expr()
    if parser.current.kind != "end":
        parser.fail(f"unexpected {parser.current.value!r}")
    logger.debug(f"parsed {text!r} as {node.pretty()}")
    return node
