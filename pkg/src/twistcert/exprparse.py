"""Recursive-descent parser for the element expression grammar.

Expressions combine integer literals, ``alg``/``algc`` algebraic-number
literals, and tower generator names with ``+ - * / ^`` and parentheses.
Precedence: ``^`` binds tightest (integer exponents only), then unary
minus, then ``* /``, then ``+ -``; binary operators associate left.
Parsing the printed form of a value reproduces the value exactly.
"""

from __future__ import annotations

from fractions import Fraction

from .algnum import AlgebraicNumber
from .errors import ExprSyntaxError, UnknownGenerator
from .intpoly import IntPoly

_SYMBOLS = set("+-*/^(),=")


class _Token:
    __slots__ = ("kind", "text", "pos")

    def __init__(self, kind, text, pos):
        self.kind = kind  # "int" | "name" | one-char symbol | "end"
        self.text = text
        self.pos = pos


def _tokenize(text):
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("int", text[i:j], i))
            i = j
            continue
        if c.isalpha():
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(_Token("name", text[i:j], i))
            i = j
            continue
        if c in _SYMBOLS:
            tokens.append(_Token(c, c, i))
            i += 1
            continue
        raise ExprSyntaxError("unexpected character %r" % c, i)
    tokens.append(_Token("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text, tower):
        self.text = text
        self.tower = tower
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind):
        tok = self.next()
        if tok.kind != kind:
            raise ExprSyntaxError("expected %r" % kind, tok.pos)
        return tok

    # --- grammar -------------------------------------------------------

    def parse(self):
        value = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ExprSyntaxError("trailing input", tok.pos)
        return value

    def expr(self):
        value = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.next().kind
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.peek().kind in ("*", "/"):
            op = self.next().kind
            rhs = self.unary()
            value = value * rhs if op == "*" else value / rhs
        return value

    def unary(self):
        if self.peek().kind == "-":
            self.next()
            return -self.unary()
        return self.power()

    def power(self):
        value = self.atom()
        if self.peek().kind == "^":
            self.next()
            neg = False
            if self.peek().kind == "-":
                self.next()
                neg = True
            tok = self.expect("int")
            e = int(tok.text)
            value = value ** (-e if neg else e)
        return value

    def atom(self):
        tok = self.next()
        if tok.kind == "int":
            return self.tower.const(int(tok.text))
        if tok.kind == "(":
            value = self.expr()
            self.expect(")")
            return value
        if tok.kind == "name":
            if tok.text == "alg":
                return self.tower.const(self.alg_literal())
            if tok.text == "algc":
                return self.tower.const(self.algc_literal())
            if not self.tower.has_generator(tok.text):
                raise UnknownGenerator(
                    "unknown generator %r" % tok.text)
            return self.tower.gen(tok.text)
        raise ExprSyntaxError("expected a value", tok.pos)

    # --- algebraic literals -------------------------------------------

    def alg_literal(self):
        self.expect("(")
        poly = self.int_poly()
        self.expect(",")
        lo = self.fraction()
        self.expect(",")
        hi = self.fraction()
        self.expect(")")
        return AlgebraicNumber.from_real_root(poly, lo, hi)

    def algc_literal(self):
        self.expect("(")
        self.int_poly()  # redundant with re/im; kept for readability
        self.expect(",")
        tok = self.expect("name")
        if tok.text != "re":
            raise ExprSyntaxError("expected 're'", tok.pos)
        self.expect("=")
        re = self.real_literal()
        self.expect(",")
        tok = self.expect("name")
        if tok.text != "im":
            raise ExprSyntaxError("expected 'im'", tok.pos)
        self.expect("=")
        im = self.real_literal()
        self.expect(")")
        return AlgebraicNumber.from_pair(re, im)

    def real_literal(self):
        """A rational, or a nested alg(...) literal."""
        tok = self.peek()
        if tok.kind == "name" and tok.text == "alg":
            self.next()
            return self.alg_literal()
        return AlgebraicNumber.from_rational(self.fraction())

    def fraction(self):
        sign = 1
        while self.peek().kind == "-":
            self.next()
            sign = -sign
        num = int(self.expect("int").text)
        if self.peek().kind == "/":
            self.next()
            den = int(self.expect("int").text)
            return Fraction(sign * num, den)
        return Fraction(sign * num)

    def int_poly(self):
        """Integer polynomial in x, descending or mixed powers."""
        coeffs = {}
        first = True
        while True:
            tok = self.peek()
            if first:
                sign = 1
                if tok.kind == "-":
                    self.next()
                    sign = -1
            elif tok.kind in ("+", "-"):
                self.next()
                sign = 1 if tok.kind == "+" else -1
            else:
                break
            first = False
            c, e = self.int_term()
            coeffs[e] = coeffs.get(e, 0) + sign * c
        if not coeffs:
            raise ExprSyntaxError("expected a polynomial",
                                  self.peek().pos)
        deg = max(coeffs)
        return IntPoly([coeffs.get(i, 0) for i in range(deg + 1)])

    def int_term(self):
        """coefficient * x^e piece of an integer polynomial."""
        tok = self.next()
        if tok.kind == "int":
            c = int(tok.text)
            if self.peek().kind == "*":
                self.next()
                tok = self.expect("name")
            else:
                return c, 0
        elif tok.kind == "name":
            c = 1
        else:
            raise ExprSyntaxError("expected a polynomial term", tok.pos)
        if tok.text != "x":
            raise ExprSyntaxError("polynomial variable must be x", tok.pos)
        if self.peek().kind == "^":
            self.next()
            e = int(self.expect("int").text)
        else:
            e = 1
        return c, e


def parse_element(text, tower):
    """Parse an expression into a canonical element of the tower."""
    return _Parser(text, tower).parse()
