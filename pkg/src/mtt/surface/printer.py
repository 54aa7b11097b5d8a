"""Pretty printer; parse(print(t)) reproduces t up to whitespace."""

from __future__ import annotations

from . import ast


def _atom(t: ast.Term) -> str:
    text = print_term(t)
    if isinstance(
        t,
        (ast.Var, ast.BoolLit, ast.NatLit, ast.FracLit, ast.UnitLit, ast.CodeBoolT, ast.Pair, ast.Annot),
    ):
        return text
    return f"({text})"


def print_term(t: ast.Term) -> str:
    if isinstance(t, ast.Var):
        return t.name
    if isinstance(t, ast.Lam):
        return f"\\{t.param}. {print_term(t.body)}"
    if isinstance(t, ast.App):
        fn = print_term(t.fn) if isinstance(t.fn, (ast.App, ast.Var)) else _atom(t.fn)
        return f"{fn} {_atom(t.arg)}"
    if isinstance(t, ast.Pair):
        return f"({print_term(t.first)}, {print_term(t.second)})"
    if isinstance(t, ast.Fst):
        return f"fst {_atom(t.pair)}"
    if isinstance(t, ast.Snd):
        return f"snd {_atom(t.pair)}"
    if isinstance(t, ast.InlT):
        return f"inl {_atom(t.value)}"
    if isinstance(t, ast.InrT):
        return f"inr {_atom(t.value)}"
    if isinstance(t, ast.Case):
        return (
            f"case {print_term(t.scrutinee)} {{ inl {t.left_name} -> {print_term(t.left_body)}"
            f" | inr {t.right_name} -> {print_term(t.right_body)} }}"
        )
    if isinstance(t, ast.BoolLit):
        return "true" if t.value else "false"
    if isinstance(t, ast.If):
        return f"if {print_term(t.cond)} then {print_term(t.then)} else {print_term(t.els)}"
    if isinstance(t, ast.NatLit):
        return str(t.value)
    if isinstance(t, ast.FracLit):
        return f"{t.num}/{t.den}"
    if isinstance(t, ast.Succ):
        return f"succ {_atom(t.arg)}"
    if isinstance(t, ast.Add):
        return f"{print_term(t.lhs)} + {print_term(t.rhs)}"
    if isinstance(t, ast.NatRec):
        return (
            f"natrec {_atom(t.scrutinee)} {_atom(t.base)} ({t.step_k} {t.step_ih}. {print_term(t.step)})"
        )
    if isinstance(t, ast.SupT):
        return f"sup {_atom(t.label)} {_atom(t.children)}"
    if isinstance(t, ast.WRec):
        return (
            f"wrec {_atom(t.scrutinee)} ({t.label_name} {t.children_name} {t.ih_name}. {print_term(t.step)})"
        )
    if isinstance(t, ast.Refl):
        return f"refl {_atom(t.arg)}"
    if isinstance(t, ast.JElim):
        return (
            f"J ({t.x_name} {t.y_name} {t.q_name}. {print_type(t.motive)})"
            f" ({t.base_name}. {print_term(t.base)}) {_atom(t.target)}"
        )
    if isinstance(t, ast.FunextT):
        return f"funext {_atom(t.homotopy)}"
    if isinstance(t, ast.HapplyT):
        return f"happly {_atom(t.path)} {_atom(t.point)}"
    if isinstance(t, ast.Seg):
        return f"seg {_atom(t.bound)}"
    if isinstance(t, ast.UnitLit):
        return "tt"
    if isinstance(t, ast.Absurd):
        return f"absurd {_atom(t.arg)}"
    if isinstance(t, ast.CodeBoolT):
        return "#bool"
    if isinstance(t, ast.CodePiT):
        return f"#pi {_atom(t.domain)} ({t.param}. {print_term(t.body)})"
    if isinstance(t, ast.CodeEqT):
        return f"#eq {_atom(t.code)} {_atom(t.lhs)} {_atom(t.rhs)}"
    if isinstance(t, ast.Annot):
        return f"({print_term(t.term)} : {print_type(t.type)})"
    if isinstance(t, ast.Let):
        if t.type is not None:
            return f"let {t.name} : {print_type(t.type)} = {print_term(t.bound)} in {print_term(t.body)}"
        return f"let {t.name} = {print_term(t.bound)} in {print_term(t.body)}"
    raise TypeError(f"unprintable term: {t!r}")


def _type_atom(t: ast.TypeExpr) -> str:
    text = print_type(t)
    if isinstance(t, (ast.TBool, ast.TNat, ast.TEmpty, ast.TUnit, ast.TLine, ast.TU)):
        return text
    return f"({text})"


def print_type(t: ast.TypeExpr) -> str:
    if isinstance(t, ast.TBool):
        return "Bool"
    if isinstance(t, ast.TNat):
        return "Nat"
    if isinstance(t, ast.TEmpty):
        return "Empty"
    if isinstance(t, ast.TUnit):
        return "Unit"
    if isinstance(t, ast.TLine):
        return "Line"
    if isinstance(t, ast.TU):
        return "U"
    if isinstance(t, ast.TPi):
        if t.param == "_":
            return f"{_type_atom(t.domain)} -> {print_type(t.codomain)}"
        return f"({t.param} : {print_type(t.domain)}) -> {print_type(t.codomain)}"
    if isinstance(t, ast.TSigma):
        if t.param == "_":
            return f"{_type_atom(t.first)} * {print_type(t.second)}"
        return f"({t.param} : {print_type(t.first)}) * {print_type(t.second)}"
    if isinstance(t, ast.TSum):
        return f"{_type_atom(t.left)} + {_type_atom(t.right)}"
    if isinstance(t, ast.TW):
        return f"W ({t.param} : {print_type(t.labels)}) {_type_atom(t.branches)}"
    if isinstance(t, ast.TId):
        return f"Id {_type_atom(t.carrier)} {_atom(t.lhs)} {_atom(t.rhs)}"
    if isinstance(t, ast.TEl):
        return f"El {_atom(t.code)}"
    raise TypeError(f"unprintable type: {t!r}")


def print_module(m: ast.Module) -> str:
    out = []
    for d in m.definitions:
        out.append(f"def {d.name} : {print_type(d.type)} = {print_term(d.body)}")
    return "\n".join(out) + "\n"
