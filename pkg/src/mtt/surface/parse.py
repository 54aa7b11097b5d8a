"""Lexer and recursive-descent parser for the surface language.

Grammar notes: application is juxtaposition of atoms; keyword eliminators
(fst, J, natrec, ...) are prefix forms with a fixed number of atom-shaped
arguments, so applying their result requires parentheses.  ``(x : A) -> B``
and ``(x : A) * B`` bind dependently; a bare ``A -> B`` or ``A * B`` does not
bind.  Comments run from ``--`` to end of line.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from . import ast
from .ast import ParseError, Span

KEYWORDS = {
    "def", "let", "in", "if", "then", "else", "case", "of", "inl", "inr",
    "fst", "snd", "succ", "zero", "true", "false", "tt", "natrec", "sup",
    "wrec", "refl", "J", "funext", "happly", "seg", "absurd",
    "Bool", "Nat", "Empty", "Unit", "Line", "U", "W", "Id", "El",
}

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t]+)
  | (?P<comment>--[^\n]*)
  | (?P<newline>\n)
  | (?P<hash>\#(?:bool|pi|eq))
  | (?P<ident>[A-Za-z_][A-Za-z0-9_']*)
  | (?P<int>[0-9]+)
  | (?P<arrow>->)
  | (?P<sym>[()\[\]{},:;=*+./\\|])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str  # ident | int | keyword | hash | sym | eof
    text: str
    span: Span


def tokenize(source: str) -> list[Token]:
    tokens: list[Token] = []
    line, col, pos = 1, 1, 0
    n = len(source)
    while pos < n:
        m = _TOKEN_RE.match(source, pos)
        if m is None:
            raise ParseError(f"unexpected character {source[pos]!r}", Span(line, col))
        kind = m.lastgroup
        text = m.group()
        span = Span(line, col)
        if kind == "newline":
            line += 1
            col = 1
        else:
            col += len(text)
        pos = m.end()
        if kind in ("ws", "comment", "newline"):
            continue
        if kind == "ident":
            tokens.append(Token("keyword" if text in KEYWORDS else "ident", text, span))
        elif kind == "arrow":
            tokens.append(Token("sym", "->", span))
        else:
            tokens.append(Token(kind, text, span))
    tokens.append(Token("eof", "", Span(line, col)))
    return tokens


class Parser:
    def __init__(self, source: str):
        self.tokens = tokenize(source)
        self.pos = 0

    # -- token plumbing ------------------------------------------------------

    def peek(self, offset: int = 0) -> Token:
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def at(self, kind: str, text: Optional[str] = None, offset: int = 0) -> bool:
        tok = self.peek(offset)
        return tok.kind == kind and (text is None or tok.text == text)

    def expect(self, kind: str, text: Optional[str] = None) -> Token:
        tok = self.peek()
        if not self.at(kind, text):
            want = text if text is not None else kind
            raise ParseError(f"expected {want!r}, found {tok.text or 'end of input'!r}", tok.span)
        return self.advance()

    def expect_ident(self) -> Token:
        tok = self.peek()
        if tok.kind != "ident":
            raise ParseError(f"expected a name, found {tok.text or 'end of input'!r}", tok.span)
        return self.advance()

    # -- modules ---------------------------------------------------------------

    def parse_module(self) -> ast.Module:
        defs = []
        while not self.at("eof"):
            defs.append(self.parse_definition())
        return ast.Module(tuple(defs))

    def parse_definition(self) -> ast.Definition:
        start = self.expect("keyword", "def").span
        name = self.expect_ident().text
        self.expect("sym", ":")
        ty = self.parse_type()
        self.expect("sym", "=")
        body = self.parse_term()
        if self.at("sym", ";"):
            self.advance()
        return ast.Definition(name, ty, body, start)

    # -- types -----------------------------------------------------------------

    def parse_type(self) -> ast.TypeExpr:
        # A leading "(x : " is always a dependent binder in type position.
        if self.at("sym", "(") and self.peek(1).kind == "ident" and self.at("sym", ":", 2):
            start = self.advance().span
            name = self.expect_ident().text
            self.expect("sym", ":")
            dom = self.parse_type()
            self.expect("sym", ")")
            if self.at("sym", "*"):
                self.advance()
                return ast.TSigma(name, dom, self.parse_type(), start)
            self.expect("sym", "->")
            return ast.TPi(name, dom, self.parse_type(), start)
        left = self.parse_sum_type()
        if self.at("sym", "->"):
            self.advance()
            return ast.TPi("_", left, self.parse_type(), left.span)
        if self.at("sym", "*"):
            self.advance()
            return ast.TSigma("_", left, self.parse_type(), left.span)
        return left

    def parse_sum_type(self) -> ast.TypeExpr:
        left = self.parse_atom_type()
        while self.at("sym", "+"):
            self.advance()
            right = self.parse_atom_type()
            left = ast.TSum(left, right, left.span)
        return left

    def parse_atom_type(self) -> ast.TypeExpr:
        tok = self.peek()
        if tok.kind == "keyword":
            simple = {
                "Bool": ast.TBool, "Nat": ast.TNat, "Empty": ast.TEmpty,
                "Unit": ast.TUnit, "Line": ast.TLine, "U": ast.TU,
            }
            if tok.text in simple:
                self.advance()
                return simple[tok.text](tok.span)
            if tok.text == "W":
                self.advance()
                self.expect("sym", "(")
                name = self.expect_ident().text
                self.expect("sym", ":")
                labels = self.parse_type()
                self.expect("sym", ")")
                branches = self.parse_atom_type()
                return ast.TW(name, labels, branches, tok.span)
            if tok.text == "Id":
                self.advance()
                carrier = self.parse_atom_type()
                lhs = self.parse_atom_term()
                rhs = self.parse_atom_term()
                return ast.TId(carrier, lhs, rhs, tok.span)
            if tok.text == "El":
                self.advance()
                return ast.TEl(self.parse_atom_term(), tok.span)
        if self.at("sym", "("):
            self.advance()
            inner = self.parse_type()
            self.expect("sym", ")")
            return inner
        raise ParseError(f"expected a type, found {tok.text or 'end of input'!r}", tok.span)

    # -- terms -------------------------------------------------------------------

    def parse_term(self) -> ast.Term:
        tok = self.peek()
        if self.at("sym", "\\"):
            start = self.advance().span
            names = [self.expect_ident().text]
            while self.peek().kind == "ident":
                names.append(self.advance().text)
            self.expect("sym", ".")
            body = self.parse_term()
            for name in reversed(names):
                body = ast.Lam(name, body, start)
            return body
        if self.at("keyword", "let"):
            start = self.advance().span
            name = self.expect_ident().text
            ty = None
            if self.at("sym", ":"):
                self.advance()
                ty = self.parse_type()
            self.expect("sym", "=")
            bound = self.parse_term()
            self.expect("keyword", "in")
            body = self.parse_term()
            return ast.Let(name, ty, bound, body, start)
        if self.at("keyword", "if"):
            start = self.advance().span
            cond = self.parse_term()
            self.expect("keyword", "then")
            then = self.parse_term()
            self.expect("keyword", "else")
            els = self.parse_term()
            return ast.If(cond, then, els, start)
        if self.at("keyword", "case"):
            start = self.advance().span
            scrut = self.parse_term()
            if self.at("keyword", "of"):
                self.advance()
            self.expect("sym", "{")
            self.expect("keyword", "inl")
            lname = self.expect_ident().text
            self.expect("sym", "->")
            lbody = self.parse_term()
            self.expect("sym", "|")
            self.expect("keyword", "inr")
            rname = self.expect_ident().text
            self.expect("sym", "->")
            rbody = self.parse_term()
            self.expect("sym", "}")
            return ast.Case(scrut, lname, lbody, rname, rbody, start)
        return self.parse_add()

    def parse_add(self) -> ast.Term:
        left = self.parse_app()
        while self.at("sym", "+"):
            self.advance()
            right = self.parse_app()
            left = ast.Add(left, right, left.span)
        return left

    _UNARY = {
        "fst": ast.Fst, "snd": ast.Snd, "inl": ast.InlT, "inr": ast.InrT,
        "succ": ast.Succ, "refl": ast.Refl, "seg": ast.Seg,
        "absurd": ast.Absurd, "funext": ast.FunextT,
    }

    def parse_app(self) -> ast.Term:
        head = self.parse_special()
        while self.starts_atom():
            arg = self.parse_atom_term()
            head = ast.App(head, arg, head.span)
        return head

    def parse_special(self) -> ast.Term:
        tok = self.peek()
        if tok.kind == "keyword" and tok.text in self._UNARY:
            self.advance()
            return self._UNARY[tok.text](self.parse_atom_term(), tok.span)
        if self.at("keyword", "happly"):
            self.advance()
            return ast.HapplyT(self.parse_atom_term(), self.parse_atom_term(), tok.span)
        if self.at("keyword", "sup"):
            self.advance()
            return ast.SupT(self.parse_atom_term(), self.parse_atom_term(), tok.span)
        if self.at("keyword", "natrec"):
            self.advance()
            scrut = self.parse_atom_term()
            base = self.parse_atom_term()
            k, ih, body = self.parse_binder_group(2)
            return ast.NatRec(scrut, base, k, ih, body, tok.span)
        if self.at("keyword", "wrec"):
            self.advance()
            scrut = self.parse_atom_term()
            a, f, ih, body = self.parse_binder_group(3)
            return ast.WRec(scrut, a, f, ih, body, tok.span)
        if self.at("keyword", "J"):
            self.advance()
            self.expect("sym", "(")
            x = self.expect_ident().text
            y = self.expect_ident().text
            q = self.expect_ident().text
            self.expect("sym", ".")
            motive = self.parse_type()
            self.expect("sym", ")")
            bn, base = self.parse_binder_group(1)
            target = self.parse_atom_term()
            return ast.JElim(x, y, q, motive, bn, base, target, tok.span)
        if self.at("hash", "#pi"):
            self.advance()
            dom = self.parse_atom_term()
            name, body = self.parse_binder_group(1)
            return ast.CodePiT(dom, name, body, tok.span)
        if self.at("hash", "#eq"):
            self.advance()
            code = self.parse_atom_term()
            lhs = self.parse_atom_term()
            rhs = self.parse_atom_term()
            return ast.CodeEqT(code, lhs, rhs, tok.span)
        return self.parse_atom_term()

    def parse_binder_group(self, arity: int):
        """Parse ``(x1 .. xn. term)`` and return the names followed by the body."""
        self.expect("sym", "(")
        names = [self.expect_ident().text for _ in range(arity)]
        self.expect("sym", ".")
        body = self.parse_term()
        self.expect("sym", ")")
        return (*names, body)

    def starts_atom(self) -> bool:
        tok = self.peek()
        if tok.kind in ("ident", "int"):
            return True
        if tok.kind == "hash" and tok.text == "#bool":
            return True
        if tok.kind == "keyword" and tok.text in ("true", "false", "zero", "tt"):
            return True
        return tok.kind == "sym" and tok.text == "("

    def parse_atom_term(self) -> ast.Term:
        tok = self.peek()
        if tok.kind == "ident":
            self.advance()
            return ast.Var(tok.text, tok.span)
        if tok.kind == "int":
            self.advance()
            if self.at("sym", "/"):
                self.advance()
                den = self.expect("int")
                return ast.FracLit(int(tok.text), int(den.text), tok.span)
            return ast.NatLit(int(tok.text), tok.span)
        if tok.kind == "keyword":
            if tok.text == "true":
                self.advance()
                return ast.BoolLit(True, tok.span)
            if tok.text == "false":
                self.advance()
                return ast.BoolLit(False, tok.span)
            if tok.text == "zero":
                self.advance()
                return ast.NatLit(0, tok.span)
            if tok.text == "tt":
                self.advance()
                return ast.UnitLit(tok.span)
        if tok.kind == "hash" and tok.text == "#bool":
            self.advance()
            return ast.CodeBoolT(tok.span)
        if self.at("sym", "("):
            start = self.advance().span
            term = self.parse_term()
            if self.at("sym", ","):
                self.advance()
                second = self.parse_term()
                self.expect("sym", ")")
                return ast.Pair(term, second, start)
            if self.at("sym", ":"):
                self.advance()
                ty = self.parse_type()
                self.expect("sym", ")")
                return ast.Annot(term, ty, start)
            self.expect("sym", ")")
            return term
        raise ParseError(f"expected a term, found {tok.text or 'end of input'!r}", tok.span)


def parse_module(source: str) -> ast.Module:
    parser = Parser(source)
    return parser.parse_module()


def parse_term_text(source: str) -> ast.Term:
    parser = Parser(source)
    term = parser.parse_term()
    tok = parser.peek()
    if tok.kind != "eof":
        raise ParseError(f"unexpected trailing input {tok.text!r}", tok.span)
    return term
