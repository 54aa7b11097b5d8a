"""Syntax trees for the surface language, with source spans on every node.

Spans are excluded from equality so trees can be compared structurally.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional


@dataclass(frozen=True)
class Span:
    line: int
    col: int


NO_SPAN = Span(0, 0)


def _span_field() -> Span:
    return field(default=NO_SPAN, compare=False)  # type: ignore[return-value]


class ParseError(Exception):
    def __init__(self, message: str, span: Span):
        self.message = message
        self.span = span
        super().__init__(message)


class Term:
    span: Span


class TypeExpr:
    span: Span


# --- terms -----------------------------------------------------------------


@dataclass(frozen=True)
class Var(Term):
    name: str
    span: Span = _span_field()


@dataclass(frozen=True)
class Lam(Term):
    param: str
    body: Term
    span: Span = _span_field()


@dataclass(frozen=True)
class App(Term):
    fn: Term
    arg: Term
    span: Span = _span_field()


@dataclass(frozen=True)
class Pair(Term):
    first: Term
    second: Term
    span: Span = _span_field()


@dataclass(frozen=True)
class Fst(Term):
    pair: Term
    span: Span = _span_field()


@dataclass(frozen=True)
class Snd(Term):
    pair: Term
    span: Span = _span_field()


@dataclass(frozen=True)
class InlT(Term):
    value: Term
    span: Span = _span_field()


@dataclass(frozen=True)
class InrT(Term):
    value: Term
    span: Span = _span_field()


@dataclass(frozen=True)
class Case(Term):
    scrutinee: Term
    left_name: str
    left_body: Term
    right_name: str
    right_body: Term
    span: Span = _span_field()


@dataclass(frozen=True)
class BoolLit(Term):
    value: bool
    span: Span = _span_field()


@dataclass(frozen=True)
class If(Term):
    cond: Term
    then: Term
    els: Term
    span: Span = _span_field()


@dataclass(frozen=True)
class NatLit(Term):
    value: int
    span: Span = _span_field()


@dataclass(frozen=True)
class FracLit(Term):
    num: int
    den: int
    span: Span = _span_field()


@dataclass(frozen=True)
class Succ(Term):
    arg: Term
    span: Span = _span_field()


@dataclass(frozen=True)
class Add(Term):
    lhs: Term
    rhs: Term
    span: Span = _span_field()


@dataclass(frozen=True)
class NatRec(Term):
    scrutinee: Term
    base: Term
    step_k: str
    step_ih: str
    step: Term
    span: Span = _span_field()


@dataclass(frozen=True)
class SupT(Term):
    label: Term
    children: Term
    span: Span = _span_field()


@dataclass(frozen=True)
class WRec(Term):
    scrutinee: Term
    label_name: str
    children_name: str
    ih_name: str
    step: Term
    span: Span = _span_field()


@dataclass(frozen=True)
class Refl(Term):
    arg: Term
    span: Span = _span_field()


@dataclass(frozen=True)
class JElim(Term):
    x_name: str
    y_name: str
    q_name: str
    motive: TypeExpr
    base_name: str
    base: Term
    target: Term
    span: Span = _span_field()


@dataclass(frozen=True)
class FunextT(Term):
    homotopy: Term
    span: Span = _span_field()


@dataclass(frozen=True)
class HapplyT(Term):
    path: Term
    point: Term
    span: Span = _span_field()


@dataclass(frozen=True)
class Seg(Term):
    bound: Term
    span: Span = _span_field()


@dataclass(frozen=True)
class UnitLit(Term):
    span: Span = _span_field()


@dataclass(frozen=True)
class Absurd(Term):
    arg: Term
    span: Span = _span_field()


@dataclass(frozen=True)
class CodeBoolT(Term):
    span: Span = _span_field()


@dataclass(frozen=True)
class CodePiT(Term):
    domain: Term
    param: str
    body: Term
    span: Span = _span_field()


@dataclass(frozen=True)
class CodeEqT(Term):
    code: Term
    lhs: Term
    rhs: Term
    span: Span = _span_field()


@dataclass(frozen=True)
class Annot(Term):
    term: Term
    type: TypeExpr
    span: Span = _span_field()


@dataclass(frozen=True)
class Let(Term):
    name: str
    type: Optional[TypeExpr]
    bound: Term
    body: Term
    span: Span = _span_field()


# --- type expressions -------------------------------------------------------


@dataclass(frozen=True)
class TBool(TypeExpr):
    span: Span = _span_field()


@dataclass(frozen=True)
class TNat(TypeExpr):
    span: Span = _span_field()


@dataclass(frozen=True)
class TEmpty(TypeExpr):
    span: Span = _span_field()


@dataclass(frozen=True)
class TUnit(TypeExpr):
    span: Span = _span_field()


@dataclass(frozen=True)
class TLine(TypeExpr):
    span: Span = _span_field()


@dataclass(frozen=True)
class TU(TypeExpr):
    span: Span = _span_field()


@dataclass(frozen=True)
class TPi(TypeExpr):
    param: str
    domain: TypeExpr
    codomain: TypeExpr
    span: Span = _span_field()


@dataclass(frozen=True)
class TSigma(TypeExpr):
    param: str
    first: TypeExpr
    second: TypeExpr
    span: Span = _span_field()


@dataclass(frozen=True)
class TSum(TypeExpr):
    left: TypeExpr
    right: TypeExpr
    span: Span = _span_field()


@dataclass(frozen=True)
class TW(TypeExpr):
    param: str
    labels: TypeExpr
    branches: TypeExpr
    span: Span = _span_field()


@dataclass(frozen=True)
class TId(TypeExpr):
    carrier: TypeExpr
    lhs: Term
    rhs: Term
    span: Span = _span_field()


@dataclass(frozen=True)
class TEl(TypeExpr):
    code: Term
    span: Span = _span_field()


@dataclass(frozen=True)
class Definition:
    name: str
    type: TypeExpr
    body: Term
    span: Span = _span_field()


@dataclass(frozen=True)
class Module:
    definitions: tuple[Definition, ...]
