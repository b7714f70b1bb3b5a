"""Text syntax for relations and group-algebra vectors.

Grammar (whitespace-insensitive)::

    relation  := '0' | ['-'] term (('+'|'-') term)*
    term      := [rational '*'] monomial
    monomial  := '(' var '*' var ')' '*' var
               | var '*' '(' var '*' var ')'
               | 'A(' var ',' var ',' var ')'
               | 'm1' | 'm2' | 'm3'              (comb syntax only)
    rational  := integer ['/' positive-integer]

Variables are x,y,z or x1,x2,x3, mapped to the leaf labels 1,2,3.  The
associator shorthand A(a,b,c) expands to (a*b)*c - a*(b*c).  Group vectors
use the permutation names Id, t12, t13, t23, c1, c2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .group_module import PERM_BY_NAME, PERM_NAMES, PERMS, GroupVector
from .weight_spaces import (
    COMB_NAMES,
    LEFT,
    MONOMIALS,
    REGULAR,
    RIGHT,
    SymmetryClass,
    Weight3Element,
    comb_in,
)


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


VAR_LABELS = {"x": 1, "y": 2, "z": 3, "x1": 1, "x2": 2, "x3": 3}


@dataclass
class _Token:
    kind: str  # 'num', 'name', 'punct', 'end'
    text: str
    line: int
    column: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    line, col = 1, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            col += 1
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(_Token("num", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(_Token("name", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch in "+-*/(),":
            tokens.append(_Token("punct", ch, line, col))
            col += 1
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(_Token("end", "", line, col))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def next(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def error(self, message: str):
        tok = self.peek()
        raise ParseError(message, tok.line, tok.column)

    def expect(self, text: str) -> _Token:
        tok = self.peek()
        if tok.text != text:
            self.error(f"expected {text!r}, found {tok.text!r}")
        return self.next()

    def at_end(self) -> bool:
        return self.peek().kind == "end"

    # -- shared pieces ------------------------------------------------------

    def rational(self) -> Fraction:
        tok = self.peek()
        if tok.kind != "num":
            self.error(f"expected a number, found {tok.text!r}")
        self.next()
        num = int(tok.text)
        if self.peek().text == "/":
            self.next()
            den_tok = self.peek()
            if den_tok.kind != "num" or int(den_tok.text) == 0:
                self.error("expected a positive integer denominator")
            self.next()
            return Fraction(num, int(den_tok.text))
        return Fraction(num)

    def signed_terms(self, term_fn):
        """Parse sign/coefficient structure, yielding (coeff, payload)."""
        out = []
        # a lone literal 0 denotes the zero element
        if self.peek().text == "0" and self.tokens[self.pos + 1].kind == "end":
            self.next()
            return out
        sign = Fraction(1)
        if self.peek().text == "-":
            self.next()
            sign = Fraction(-1)
        elif self.peek().text == "+":
            self.next()
        while True:
            coeff = sign
            if self.peek().kind == "num":
                coeff = sign * self.rational()
                if self.peek().text == "*":
                    self.next()
                else:
                    # a bare rational is only legal as coefficient
                    self.error("expected '*' after a coefficient")
            out.append((coeff, term_fn()))
            tok = self.peek()
            if tok.text == "+":
                sign = Fraction(1)
                self.next()
            elif tok.text == "-":
                sign = Fraction(-1)
                self.next()
            else:
                break
        if not self.at_end():
            self.error(f"unexpected trailing input {self.peek().text!r}")
        return out

    # -- relation monomials -------------------------------------------------

    def var(self) -> int:
        tok = self.peek()
        if tok.kind != "name" or tok.text not in VAR_LABELS:
            self.error(f"unknown variable {tok.text!r}")
        self.next()
        return VAR_LABELS[tok.text]

    def monomial(self, allow_comb: bool):
        tok = self.peek()
        if tok.text == "(":
            self.next()
            a = self.var()
            self.expect("*")
            b = self.var()
            self.expect(")")
            self.expect("*")
            c = self.var()
            self._distinct(a, b, c, tok)
            return [(Fraction(1), Weight3Element.monomial(LEFT, (a, b, c)))]
        if tok.kind == "name" and tok.text == "A":
            self.next()
            self.expect("(")
            a = self.var()
            self.expect(",")
            b = self.var()
            self.expect(",")
            c = self.var()
            self.expect(")")
            self._distinct(a, b, c, tok)
            return [
                (Fraction(1), Weight3Element.monomial(LEFT, (a, b, c))),
                (Fraction(-1), Weight3Element.monomial(RIGHT, (a, b, c))),
            ]
        if allow_comb and tok.kind == "name" and tok.text in COMB_NAMES:
            self.next()
            return [("comb", COMB_NAMES.index(tok.text) + 1)]
        if tok.kind == "name" and tok.text in VAR_LABELS:
            a = self.var()
            self.expect("*")
            self.expect("(")
            b = self.var()
            self.expect("*")
            c = self.var()
            self.expect(")")
            self._distinct(a, b, c, tok)
            return [(Fraction(1), Weight3Element.monomial(RIGHT, (a, b, c)))]
        self.error(f"expected a monomial, found {tok.text!r}")

    def _distinct(self, a, b, c, tok):
        if len({a, b, c}) != 3:
            raise ParseError(
                "repeated variable in a monomial", tok.line, tok.column
            )


def parse_relation(text: str) -> Weight3Element:
    """Parse a relation in the regular (no-symmetry) 12-monomial basis."""
    parser = _Parser(text)
    terms = parser.signed_terms(lambda: parser.monomial(allow_comb=False))
    out = Weight3Element.zero(REGULAR)
    for coeff, parts in terms:
        for c, mono in parts:
            out = out + mono.scaled(coeff * c)
    return out


def parse_comb_relation(text: str, symmetry: SymmetryClass) -> Weight3Element:
    """Parse a relation over the comb monomials m1, m2, m3."""
    if symmetry is REGULAR:
        raise ValueError("comb relations live in the symmetric classes")
    parser = _Parser(text)
    terms = parser.signed_terms(lambda: parser.monomial(allow_comb=True))
    out = Weight3Element.zero(symmetry)
    for coeff, parts in terms:
        for tag, payload in parts:
            if tag != "comb":
                raise ValueError(
                    "comb relations may only use the monomials m1, m2, m3"
                )
            out = out + comb_in(symmetry, payload, coeff)
    return out


def parse_group_vector(text: str) -> GroupVector:
    """Parse a group-algebra vector over Id, t12, t13, t23, c1, c2."""
    parser = _Parser(text)

    def perm():
        tok = parser.peek()
        if tok.kind != "name" or tok.text not in PERM_BY_NAME:
            parser.error(f"unknown permutation symbol {tok.text!r}")
        parser.next()
        return PERM_BY_NAME[tok.text]

    terms = parser.signed_terms(perm)
    out = GroupVector.zero()
    for coeff, p in terms:
        out = out + GroupVector.basis(p).scaled(coeff)
    return out


# ---------------------------------------------------------------------------
# Canonical printing.


def _format_terms(pairs) -> str:
    parts = []
    for coeff, label in pairs:
        if coeff == 0:
            continue
        sign = "-" if coeff < 0 else "+"
        mag = abs(coeff)
        body = label if mag == 1 else f"{mag}*{label}"
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first_body = parts[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def format_weight3(x: Weight3Element) -> str:
    if x.symmetry is REGULAR:
        return _format_terms(
            (x.coords[m.index], str(m)) for m in MONOMIALS
        )
    return _format_terms(zip(x.coords, COMB_NAMES))


def format_group_vector(v: GroupVector) -> str:
    return _format_terms((v[p], PERM_NAMES[p]) for p in PERMS)
