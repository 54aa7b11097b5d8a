"""Bidirectional checking that evaluates straight into the semantic model.

``check`` and ``infer`` return semantic values; there is no separate
normalizer.  Introductions are checked, eliminations and annotations are
inferred.  Checking under a binder evaluates the body at deterministic probe
values of the domain (exhaustively when it is finite); the returned closures
re-check on every application, so anything the probes miss is still caught at
use sites.  Conversion compares values structurally at their type, probing
function and path types the same way; it refutes soundly and affirms
heuristically, and failures carry a witness when one exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Optional

from .. import fib
from ..fib import (
    BOOL,
    EMPTY,
    LINE,
    NAT,
    UNIT,
    UNIV,
    Fibration,
    Inl,
    Inr,
    PathType,
    PiType,
    SemType,
    SigmaType,
    SumType,
    Sup,
    UnivType,
    Value,
    WType,
    const_fib,
    enumerate_values,
    id_fib,
    j_elim,
    pi_fib,
    reindex,
    sample_values,
    sigma_fib,
    sum_fib,
    w_fib,
)
from ..funext import PointwiseHomotopy, funext, happly
from ..path import MoorePath, SampleSpec, babs, idp, probe_points
from ..ring import format_scalar
from ..universe import CodeBool, CodeEq, CodePi, UCode, decode, universe_fibration
from . import ast
from .ast import Span

CONVERT_SPEC = SampleSpec(count=16)
MAX_FOLD_DEPTH = 512

UNREACHABLE = object()


class TypeCheckError(Exception):
    def __init__(self, message: str, span: Span):
        self.message = message
        self.span = span
        super().__init__(message)


class Env:
    """Immutable name -> (semantic type, value) bindings; later binds shadow."""

    __slots__ = ("entries",)

    def __init__(self, entries: Optional[dict] = None):
        self.entries = entries or {}

    def bind(self, name: str, ty: SemType, value: Value) -> "Env":
        d = dict(self.entries)
        d[name] = (ty, value)
        return Env(d)

    def lookup(self, name: str):
        return self.entries.get(name)


# ---------------------------------------------------------------------------
# Conversion (definitional equality on values, directed by the type).


def convert_report(v1: Value, v2: Value, ty: SemType, depth: int = 0) -> Optional[str]:
    """None when the values agree at the type; otherwise a witness message."""
    if depth > 24:
        return None
    if v1 is UNREACHABLE or v2 is UNREACHABLE:
        return None
    if isinstance(ty, (fib.BoolType, fib.NatType, fib.UnitType, fib.LineType)):
        if v1 == v2 and type(v1) is type(v2):
            return None
        return f"{format_value(v1, ty)} != {format_value(v2, ty)}"
    if isinstance(ty, fib.EmptyType):
        return None
    if isinstance(ty, UnivType):
        return _code_report(v1, v2, depth)
    if isinstance(ty, SigmaType):
        first = convert_report(v1[0], v2[0], ty.first, depth + 1)
        if first is not None:
            return f"first components: {first}"
        return convert_report(v1[1], v2[1], ty.second(v1[0]), depth + 1)
    if isinstance(ty, SumType):
        if isinstance(v1, Inl) and isinstance(v2, Inl):
            return convert_report(v1.value, v2.value, ty.left, depth + 1)
        if isinstance(v1, Inr) and isinstance(v2, Inr):
            return convert_report(v1.value, v2.value, ty.right, depth + 1)
        return f"{format_value(v1, ty)} != {format_value(v2, ty)}"
    if isinstance(ty, PiType):
        for arg in sample_values(ty.domain, limit=8):
            out = convert_report(v1(arg), v2(arg), ty.codomain(arg), depth + 1)
            if out is not None:
                return f"at argument {format_value(arg, ty.domain)}: {out}"
        return None
    if isinstance(ty, PathType):
        if not isinstance(v1, MoorePath) or not isinstance(v2, MoorePath):
            return "not a path value"
        if v1.shape != v2.shape:
            return f"shapes differ: {v1.shape} != {v2.shape}"
        extra = list(getattr(v1, "knots", ())) + list(getattr(v2, "knots", ()))
        for pt in probe_points(v1.shape, CONVERT_SPEC, extra):
            out = convert_report(v1.at(pt), v2.at(pt), ty.carrier, depth + 1)
            if out is not None:
                return f"at parameter {pt}: {out}"
        return None
    if isinstance(ty, WType):
        if not isinstance(v1, Sup) or not isinstance(v2, Sup):
            return "not a tree value"
        lab = convert_report(v1.label, v2.label, ty.labels, depth + 1)
        if lab is not None:
            return f"labels: {lab}"
        for b in sample_values(ty.branches(v1.label), limit=4):
            out = convert_report(v1.children(b), v2.children(b), ty, depth + 1)
            if out is not None:
                return f"child at {format_value(b, ty.branches(v1.label))}: {out}"
        return None
    return None


def _code_report(c1: Value, c2: Value, depth: int) -> Optional[str]:
    if type(c1) is not type(c2):
        return f"{format_value(c1, UNIV)} != {format_value(c2, UNIV)}"
    if isinstance(c1, CodeBool):
        return None
    if isinstance(c1, CodePi):
        dom = _code_report(c1.domain, c2.domain, depth + 1)
        if dom is not None:
            return f"domains: {dom}"
        for v in sample_values(decode(c1.domain), limit=4):
            out = _code_report(c1.family(v), c2.family(v), depth + 1)
            if out is not None:
                return f"families at {v!r}: {out}"
        return None
    if isinstance(c1, CodeEq):
        inner = _code_report(c1.code, c2.code, depth + 1)
        if inner is not None:
            return inner
        carrier = decode(c1.code)
        for a, b in ((c1.lhs, c2.lhs), (c1.rhs, c2.rhs)):
            out = convert_report(a, b, carrier, depth + 1)
            if out is not None:
                return out
        return None
    return f"unrecognized codes {c1!r}, {c2!r}"


def convert(v1: Value, v2: Value, ty: SemType) -> bool:
    return convert_report(v1, v2, ty) is None


def semtype_agree(s: SemType, t: SemType, depth: int = 0) -> bool:
    """Structural agreement of semantic types, probed under binders."""
    if depth > 16 or s is t:
        return True
    if type(s) is not type(t):
        return False
    if isinstance(s, (fib.BoolType, fib.NatType, fib.EmptyType, fib.UnitType, fib.LineType, UnivType)):
        return True
    if isinstance(s, PiType):
        return semtype_agree(s.domain, t.domain, depth + 1) and all(
            semtype_agree(s.codomain(v), t.codomain(v), depth + 1)
            for v in sample_values(s.domain, limit=3)
        )
    if isinstance(s, SigmaType):
        return semtype_agree(s.first, t.first, depth + 1) and all(
            semtype_agree(s.second(v), t.second(v), depth + 1)
            for v in sample_values(s.first, limit=3)
        )
    if isinstance(s, SumType):
        return semtype_agree(s.left, t.left, depth + 1) and semtype_agree(s.right, t.right, depth + 1)
    if isinstance(s, WType):
        return semtype_agree(s.labels, t.labels, depth + 1) and all(
            semtype_agree(s.branches(v), t.branches(v), depth + 1)
            for v in sample_values(s.labels, limit=3)
        )
    if isinstance(s, PathType):
        return (
            semtype_agree(s.carrier, t.carrier, depth + 1)
            and convert(s.lhs, t.lhs, s.carrier)
            and convert(s.rhs, t.rhs, s.carrier)
        )
    return False


# ---------------------------------------------------------------------------
# Types as semantic values and as fibrations.


def eval_type(env: Env, ty: ast.TypeExpr) -> SemType:
    if isinstance(ty, ast.TBool):
        return BOOL
    if isinstance(ty, ast.TNat):
        return NAT
    if isinstance(ty, ast.TEmpty):
        return EMPTY
    if isinstance(ty, ast.TUnit):
        return UNIT
    if isinstance(ty, ast.TLine):
        return LINE
    if isinstance(ty, ast.TU):
        return UNIV
    if isinstance(ty, ast.TPi):
        dom = eval_type(env, ty.domain)
        return PiType(dom, lambda v: eval_type(env.bind(ty.param, dom, v), ty.codomain))
    if isinstance(ty, ast.TSigma):
        first = eval_type(env, ty.first)
        return SigmaType(first, lambda v: eval_type(env.bind(ty.param, first, v), ty.second))
    if isinstance(ty, ast.TSum):
        return SumType(eval_type(env, ty.left), eval_type(env, ty.right))
    if isinstance(ty, ast.TW):
        labels = eval_type(env, ty.labels)
        return WType(labels, lambda v: eval_type(env.bind(ty.param, labels, v), ty.branches))
    if isinstance(ty, ast.TId):
        carrier = eval_type(env, ty.carrier)
        lhs = check(env, ty.lhs, carrier)
        rhs = check(env, ty.rhs, carrier)
        return PathType(carrier, lhs, rhs)
    if isinstance(ty, ast.TEl):
        code = check(env, ty.code, UNIV)
        return decode(code)
    raise TypeCheckError(f"unrecognized type expression {ty!r}", getattr(ty, "span", ast.NO_SPAN))


def fibration_of(ty: ast.TypeExpr, embed: Callable[[Value], Env]) -> Fibration:
    """Interpret a type expression as a fibration over an abstract point space.

    ``embed`` renders a point of the space as the environment in which the
    expression's free variables are evaluated; each former contributes its own
    transport structure, so transport along context paths is derived purely
    from the type's shape.
    """
    if isinstance(ty, (ast.TBool, ast.TNat, ast.TEmpty, ast.TUnit, ast.TLine, ast.TU)):
        return const_fib(eval_type(Env(), ty))
    if isinstance(ty, ast.TPi):
        dom = fibration_of(ty.domain, embed)
        cod = fibration_of(
            ty.codomain,
            lambda pt: embed(pt[0]).bind(ty.param, dom.fam(pt[0]), pt[1]),
        )
        return pi_fib(dom, cod)
    if isinstance(ty, ast.TSigma):
        first = fibration_of(ty.first, embed)
        second = fibration_of(
            ty.second,
            lambda pt: embed(pt[0]).bind(ty.param, first.fam(pt[0]), pt[1]),
        )
        return sigma_fib(first, second)
    if isinstance(ty, ast.TSum):
        return sum_fib(fibration_of(ty.left, embed), fibration_of(ty.right, embed))
    if isinstance(ty, ast.TW):
        labels = fibration_of(ty.labels, embed)
        branches = fibration_of(
            ty.branches,
            lambda pt: embed(pt[0]).bind(ty.param, labels.fam(pt[0]), pt[1]),
        )
        return w_fib(labels, branches)
    if isinstance(ty, ast.TId):
        carrier = fibration_of(ty.carrier, embed)

        def diag(pt: Value) -> tuple:
            env = embed(pt)
            car = carrier.fam(pt)
            return ((pt, check(env, ty.lhs, car)), check(env, ty.rhs, car))

        return reindex(id_fib(carrier), diag)
    if isinstance(ty, ast.TEl):
        return reindex(universe_fibration, lambda pt: check(embed(pt), ty.code, UNIV))
    raise TypeCheckError(f"unrecognized type expression {ty!r}", getattr(ty, "span", ast.NO_SPAN))


# ---------------------------------------------------------------------------
# Bidirectional checking.


def _describe(ty: SemType) -> str:
    return ty.describe()


def _probe_binder(env: Env, name: str, dom: SemType, run: Callable[[Env], Value], limit: int = 3) -> None:
    for v in sample_values(dom, limit=limit):
        run(env.bind(name, dom, v))


def _checked_closure(env: Env, name: str, dom: SemType, body: ast.Term, cod: Callable[[Value], SemType]):
    def fn(v: Value) -> Value:
        return check(env.bind(name, dom, v), body, cod(v))

    return fn


def check(env: Env, t: ast.Term, expected: SemType) -> Value:
    if isinstance(t, ast.Lam):
        if not isinstance(expected, PiType):
            raise TypeCheckError(f"a function cannot have type {_describe(expected)}", t.span)
        _probe_binder(
            env, t.param, expected.domain,
            lambda e: check(e, t.body, expected.codomain(e.lookup(t.param)[1])),
        )
        return _checked_closure(env, t.param, expected.domain, t.body, expected.codomain)
    if isinstance(t, ast.Pair) and isinstance(expected, SigmaType):
        first = check(env, t.first, expected.first)
        second = check(env, t.second, expected.second(first))
        return (first, second)
    if isinstance(t, ast.InlT):
        if not isinstance(expected, SumType):
            raise TypeCheckError(f"inl needs a sum type, not {_describe(expected)}", t.span)
        return Inl(check(env, t.value, expected.left))
    if isinstance(t, ast.InrT):
        if not isinstance(expected, SumType):
            raise TypeCheckError(f"inr needs a sum type, not {_describe(expected)}", t.span)
        return Inr(check(env, t.value, expected.right))
    if isinstance(t, ast.Case):
        sty, sval = infer(env, t.scrutinee)
        if not isinstance(sty, SumType):
            raise TypeCheckError(f"case needs a sum, got {_describe(sty)}", t.scrutinee.span)
        _probe_binder(env, t.left_name, sty.left, lambda e: check(e, t.left_body, expected))
        _probe_binder(env, t.right_name, sty.right, lambda e: check(e, t.right_body, expected))
        if isinstance(sval, Inl):
            return check(env.bind(t.left_name, sty.left, sval.value), t.left_body, expected)
        if isinstance(sval, Inr):
            return check(env.bind(t.right_name, sty.right, sval.value), t.right_body, expected)
        raise TypeCheckError("case scrutinee did not evaluate to an injection", t.span)
    if isinstance(t, ast.If):
        cond = check(env, t.cond, BOOL)
        then = check(env, t.then, expected)
        els = check(env, t.els, expected)
        return then if cond else els
    if isinstance(t, ast.NatLit) and isinstance(expected, fib.LineType):
        return Fraction(t.value)
    if isinstance(t, ast.NatRec):
        n = check(env, t.scrutinee, NAT)
        base = check(env, t.base, expected)
        for kv in sample_values(NAT, limit=2):
            for ihv in sample_values(expected, limit=2):
                check(env.bind(t.step_k, NAT, kv).bind(t.step_ih, expected, ihv), t.step, expected)
        acc = base
        for k in range(n):
            acc = check(env.bind(t.step_k, NAT, k).bind(t.step_ih, expected, acc), t.step, expected)
        return acc
    if isinstance(t, ast.SupT):
        if not isinstance(expected, WType):
            raise TypeCheckError(f"sup needs a tree type, not {_describe(expected)}", t.span)
        label = check(env, t.label, expected.labels)
        branch = expected.branches(label)
        children = check(env, t.children, PiType(branch, lambda _b: expected))
        return Sup(label, children)
    if isinstance(t, ast.WRec):
        wty, wval = infer(env, t.scrutinee)
        if not isinstance(wty, WType):
            raise TypeCheckError(f"wrec needs a tree, got {_describe(wty)}", t.scrutinee.span)

        def fold(tree: Value, depth: int) -> Value:
            if depth > MAX_FOLD_DEPTH:
                raise TypeCheckError(f"tree recursion exceeded depth {MAX_FOLD_DEPTH}", t.span)
            if not isinstance(tree, Sup):
                raise TypeCheckError("wrec scrutinee did not evaluate to a tree", t.span)
            branch = wty.branches(tree.label)
            env2 = (
                env.bind(t.label_name, wty.labels, tree.label)
                .bind(t.children_name, PiType(branch, lambda _b: wty), tree.children)
                .bind(t.ih_name, PiType(branch, lambda _b: expected),
                      lambda b: fold(tree.children(b), depth + 1))
            )
            return check(env2, t.step, expected)

        return fold(wval, 0)
    if isinstance(t, ast.Refl) and isinstance(expected, PathType):
        v = check(env, t.arg, expected.carrier)
        for side, name in ((expected.lhs, "left"), (expected.rhs, "right")):
            witness = convert_report(v, side, expected.carrier)
            if witness is not None:
                raise TypeCheckError(
                    f"refl argument does not match the {name} endpoint: {witness}", t.span
                )
        return idp(v)
    if isinstance(t, ast.FunextT):
        if not isinstance(expected, PathType) or not isinstance(expected.carrier, PiType):
            raise TypeCheckError(
                f"funext produces an identification of functions, not {_describe(expected)}", t.span
            )
        pi = expected.carrier
        f, g = expected.lhs, expected.rhs
        hom_ty = PiType(pi.domain, lambda x: PathType(pi.codomain(x), f(x), g(x)))
        e = check(env, t.homotopy, hom_ty)
        return funext(PointwiseHomotopy(pi.domain, e))
    if isinstance(t, ast.Absurd):
        check(env, t.arg, EMPTY)
        return UNREACHABLE
    if isinstance(t, ast.Let):
        if t.type is not None:
            ty = eval_type(env, t.type)
            bound = check(env, t.bound, ty)
        else:
            ty, bound = infer(env, t.bound)
        return check(env.bind(t.name, ty, bound), t.body, expected)

    ty, value = infer(env, t)
    if not semtype_agree(ty, expected):
        raise TypeCheckError(
            f"expected {_describe(expected)}, found {_describe(ty)}", t.span
        )
    return value


def infer(env: Env, t: ast.Term) -> tuple[SemType, Value]:
    if isinstance(t, ast.Var):
        hit = env.lookup(t.name)
        if hit is None:
            raise TypeCheckError(f"unbound name {t.name!r}", t.span)
        return hit
    if isinstance(t, ast.BoolLit):
        return BOOL, t.value
    if isinstance(t, ast.NatLit):
        return NAT, t.value
    if isinstance(t, ast.FracLit):
        if t.den == 0:
            raise TypeCheckError("zero denominator in scalar literal", t.span)
        return LINE, Fraction(t.num, t.den)
    if isinstance(t, ast.UnitLit):
        return UNIT, ()
    if isinstance(t, ast.Succ):
        return NAT, check(env, t.arg, NAT) + 1
    if isinstance(t, ast.Add):
        return LINE, check(env, t.lhs, LINE) + check(env, t.rhs, LINE)
    if isinstance(t, ast.App):
        fty, fval = infer(env, t.fn)
        if not isinstance(fty, PiType):
            raise TypeCheckError(f"cannot apply a value of type {_describe(fty)}", t.span)
        arg = check(env, t.arg, fty.domain)
        return fty.codomain(arg), fval(arg)
    if isinstance(t, ast.Pair):
        fty, fval = infer(env, t.first)
        sty, sval = infer(env, t.second)
        return SigmaType(fty, lambda _v: sty), (fval, sval)
    if isinstance(t, ast.Fst):
        pty, pval = infer(env, t.pair)
        if not isinstance(pty, SigmaType):
            raise TypeCheckError(f"fst needs a pair, got {_describe(pty)}", t.span)
        return pty.first, pval[0]
    if isinstance(t, ast.Snd):
        pty, pval = infer(env, t.pair)
        if not isinstance(pty, SigmaType):
            raise TypeCheckError(f"snd needs a pair, got {_describe(pty)}", t.span)
        return pty.second(pval[0]), pval[1]
    if isinstance(t, ast.If):
        cond = check(env, t.cond, BOOL)
        tty, tval = infer(env, t.then)
        ety, eval_ = infer(env, t.els)
        if not semtype_agree(tty, ety):
            raise TypeCheckError(
                f"branches disagree: {_describe(tty)} vs {_describe(ety)}", t.span
            )
        return tty, (tval if cond else eval_)
    if isinstance(t, ast.Refl):
        ty, v = infer(env, t.arg)
        return PathType(ty, v, v), idp(v)
    if isinstance(t, ast.Seg):
        v = check(env, t.bound, LINE)
        return PathType(LINE, Fraction(0), v), babs(v, lambda i: i)
    if isinstance(t, ast.HapplyT):
        pty, pval = infer(env, t.path)
        if not isinstance(pty, PathType) or not isinstance(pty.carrier, PiType):
            raise TypeCheckError("happly needs an identification of functions", t.span)
        pi = pty.carrier
        x = check(env, t.point, pi.domain)
        return (
            PathType(pi.codomain(x), pty.lhs(x), pty.rhs(x)),
            happly(pval, x),
        )
    if isinstance(t, ast.JElim):
        tty, target = infer(env, t.target)
        if not isinstance(tty, PathType):
            raise TypeCheckError(
                f"J eliminates an identification, got {_describe(tty)}", t.target.span
            )
        carrier, a1, a2 = tty.carrier, tty.lhs, tty.rhs

        def embed(pt: Value) -> Env:
            x_val = pt[0][0][1]
            y_val = pt[0][1]
            return (
                env.bind(t.x_name, carrier, x_val)
                .bind(t.y_name, carrier, y_val)
                .bind(t.q_name, PathType(carrier, x_val, y_val), pt[1])
            )

        motive = fibration_of(t.motive, embed)

        def beta(_pt: Value, a: Value) -> Value:
            base_ty = eval_type(
                env.bind(t.x_name, carrier, a)
                .bind(t.y_name, carrier, a)
                .bind(t.q_name, PathType(carrier, a, a), idp(a)),
                t.motive,
            )
            return check(env.bind(t.base_name, carrier, a), t.base, base_ty)

        result_ty = eval_type(
            env.bind(t.x_name, carrier, a1)
            .bind(t.y_name, carrier, a2)
            .bind(t.q_name, PathType(carrier, a1, a2), target),
            t.motive,
        )
        return result_ty, j_elim(motive, beta, None, a1, a2, target)
    if isinstance(t, ast.CodeBoolT):
        return UNIV, CodeBool()
    if isinstance(t, ast.CodePiT):
        dom = check(env, t.domain, UNIV)
        dom_sem = decode(dom)
        _probe_binder(env, t.param, dom_sem, lambda e: check(e, t.body, UNIV))
        return UNIV, CodePi(dom, _checked_closure(env, t.param, dom_sem, t.body, lambda _v: UNIV))
    if isinstance(t, ast.CodeEqT):
        code = check(env, t.code, UNIV)
        carrier = decode(code)
        lhs = check(env, t.lhs, carrier)
        rhs = check(env, t.rhs, carrier)
        return UNIV, CodeEq(code, lhs, rhs)
    if isinstance(t, ast.Annot):
        ty = eval_type(env, t.type)
        return ty, check(env, t.term, ty)
    if isinstance(t, ast.Let):
        if t.type is not None:
            ty = eval_type(env, t.type)
            bound = check(env, t.bound, ty)
        else:
            ty, bound = infer(env, t.bound)
        return infer(env.bind(t.name, ty, bound), t.body)
    if isinstance(t, (ast.Lam, ast.InlT, ast.InrT, ast.Case, ast.SupT, ast.FunextT, ast.Absurd, ast.NatRec, ast.WRec)):
        raise TypeCheckError(
            "cannot infer a type here; add an annotation (t : A)", t.span
        )
    raise TypeCheckError(f"unrecognized term {t!r}", getattr(t, "span", ast.NO_SPAN))


# ---------------------------------------------------------------------------
# Modules and value formatting.


@dataclass(frozen=True)
class CheckedDefinition:
    name: str
    type: SemType
    value: Value
    span: Span


@dataclass(frozen=True)
class CheckedModule:
    definitions: tuple[CheckedDefinition, ...]

    def final_env(self) -> Env:
        env = Env()
        for d in self.definitions:
            env = env.bind(d.name, d.type, d.value)
        return env


def check_module(source: str) -> CheckedModule:
    from .parse import parse_module

    module = parse_module(source)
    env = Env()
    out = []
    for d in module.definitions:
        if env.lookup(d.name) is not None:
            raise TypeCheckError(f"duplicate definition of {d.name!r}", d.span)
        ty = eval_type(env, d.type)
        value = check(env, d.body, ty)
        env = env.bind(d.name, ty, value)
        out.append(CheckedDefinition(d.name, ty, value, d.span))
    return CheckedModule(tuple(out))


def format_value(v: Value, ty: Optional[SemType] = None) -> str:
    if v is UNREACHABLE:
        return "<unreachable>"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, Fraction):
        return format_scalar(v)
    if isinstance(v, int):
        return str(v)
    if v == ():
        return "tt"
    if isinstance(v, MoorePath):
        carrier = ty.carrier if isinstance(ty, PathType) else None
        pts = [v.shape * Fraction(k, 4) for k in range(5)]
        samples = ", ".join(format_value(v.at(p), carrier) for p in pts)
        return f"{{shape = {format_scalar(v.shape)}; samples = [{samples}]}}"
    if isinstance(v, tuple) and len(v) == 2:
        f = ty.first if isinstance(ty, SigmaType) else None
        s = ty.second(v[0]) if isinstance(ty, SigmaType) else None
        return f"({format_value(v[0], f)}, {format_value(v[1], s)})"
    if isinstance(v, Inl):
        inner = ty.left if isinstance(ty, SumType) else None
        return f"inl {format_value(v.value, inner)}"
    if isinstance(v, Inr):
        inner = ty.right if isinstance(ty, SumType) else None
        return f"inr {format_value(v.value, inner)}"
    if isinstance(v, Sup):
        labels = ty.labels if isinstance(ty, WType) else None
        return f"sup {format_value(v.label, labels)} <children>"
    if isinstance(v, CodeBool):
        return "#bool"
    if isinstance(v, CodePi):
        return f"#pi {format_value(v.domain)} <family>"
    if isinstance(v, CodeEq):
        carrier = decode(v.code)
        return f"#eq {format_value(v.code)} {format_value(v.lhs, carrier)} {format_value(v.rhs, carrier)}"
    if callable(v):
        return "<function>"
    return repr(v)
