"""Transport-along-path structures and the type formers built over them.

A fibration is a context-indexed family of semantic types together with a
transport action along Moore paths in the context; the one law a transport
action must satisfy is that degenerate paths transport as the identity.
Everything else (stability under reindexing, coherence with composition up to
homotopy) is a tested property, not a representation invariant.

Comprehension points are plain pairs ``(x, a)``; the formers below only ever
consume points they themselves produced, so no richer context encoding is
needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Optional

from .path import (
    ClosurePath,
    MoorePath,
    babs,
    compose,
    from_,
    idp,
    map_path,
    reverse,
    step_path,
    upto,
    values_agree,
)

Value = Any


class DepthLimitError(RuntimeError):
    """Structural recursion exceeded its bound; the offending value is cyclic or too deep."""


# ---------------------------------------------------------------------------
# Semantic types.


class SemType:
    def describe(self) -> str:
        return type(self).__name__.removesuffix("Type").lower()


@dataclass(frozen=True)
class BoolType(SemType):
    pass


@dataclass(frozen=True)
class NatType(SemType):
    pass


@dataclass(frozen=True)
class EmptyType(SemType):
    pass


@dataclass(frozen=True)
class UnitType(SemType):
    pass


@dataclass(frozen=True)
class LineType(SemType):
    """Nonnegative exact scalars: the transport parameter space as a first-class type."""


@dataclass(frozen=True)
class UnivType(SemType):
    """The type of universe codes."""


@dataclass(frozen=True, eq=False)
class PiType(SemType):
    domain: SemType
    codomain: Callable[[Value], SemType]

    def describe(self) -> str:
        return f"(_ : {self.domain.describe()}) -> ..."


@dataclass(frozen=True, eq=False)
class SigmaType(SemType):
    first: SemType
    second: Callable[[Value], SemType]

    def describe(self) -> str:
        return f"(_ : {self.first.describe()}) * ..."


@dataclass(frozen=True, eq=False)
class SumType(SemType):
    left: SemType
    right: SemType

    def describe(self) -> str:
        return f"{self.left.describe()} + {self.right.describe()}"


@dataclass(frozen=True, eq=False)
class WType(SemType):
    labels: SemType
    branches: Callable[[Value], SemType]

    def describe(self) -> str:
        return f"W (_ : {self.labels.describe()}) ..."


@dataclass(frozen=True, eq=False)
class PathType(SemType):
    carrier: SemType
    lhs: Value
    rhs: Value

    def describe(self) -> str:
        return f"Id {self.carrier.describe()} {self.lhs!r} {self.rhs!r}"


BOOL = BoolType()
NAT = NatType()
EMPTY = EmptyType()
UNIT = UnitType()
LINE = LineType()
UNIV = UnivType()


# ---------------------------------------------------------------------------
# Values.


@dataclass(frozen=True)
class Inl:
    value: Value

    def agree_parts(self) -> tuple:
        return (self.value,)


@dataclass(frozen=True)
class Inr:
    value: Value

    def agree_parts(self) -> tuple:
        return (self.value,)


@dataclass(frozen=True, eq=False)
class Sup:
    """A well-founded tree node: label plus a child for every branch value."""

    label: Value
    children: Callable[[Value], "Sup"]

    def agree_parts(self) -> tuple:
        # Children need the branch fiber to compare; label-only here keeps
        # generic agreement refutation-sound.
        return (self.label,)


# ---------------------------------------------------------------------------
# Enumeration and sampling of fibers.

_SAMPLE_HOOKS: dict[type, Callable[[SemType], list]] = {}


def register_samples(semtype_class: type, hook: Callable[[SemType], list]) -> None:
    """Let另 modules supply probe values for their own semantic types."""
    _SAMPLE_HOOKS[semtype_class] = hook


def _function_table(pairs: list[tuple[Value, Value]]) -> Callable[[Value], Value]:
    def lookup(v: Value) -> Value:
        for arg, out in pairs:
            if values_agree(arg, v):
                return out
        raise ValueError(f"argument {v!r} outside the tabulated domain")

    return lookup


def enumerate_values(t: SemType, limit: int = 64) -> Optional[list]:
    """All inhabitants of a finite type, or None when not finitely enumerable."""
    if isinstance(t, BoolType):
        return [False, True]
    if isinstance(t, UnitType):
        return [()]
    if isinstance(t, EmptyType):
        return []
    if isinstance(t, SumType):
        ls, rs = enumerate_values(t.left, limit), enumerate_values(t.right, limit)
        if ls is None or rs is None:
            return None
        out = [Inl(v) for v in ls] + [Inr(v) for v in rs]
        return out if len(out) <= limit else None
    if isinstance(t, SigmaType):
        fs = enumerate_values(t.first, limit)
        if fs is None:
            return None
        out = []
        for a in fs:
            ss = enumerate_values(t.second(a), limit)
            if ss is None:
                return None
            out.extend((a, b) for b in ss)
        return out if len(out) <= limit else None
    if isinstance(t, PiType):
        dom = enumerate_values(t.domain, limit)
        if dom is None:
            return None
        tables: list[list[tuple[Value, Value]]] = [[]]
        for arg in dom:
            cod = enumerate_values(t.codomain(arg), limit)
            if cod is None:
                return None
            tables = [rows + [(arg, out)] for rows in tables for out in cod]
            if len(tables) > limit:
                return None
        return [_function_table(rows) for rows in tables]
    return None


def sample_values(t: SemType, limit: int = 6) -> list:
    """Deterministic probe inhabitants; exhaustive when the type is finite."""
    enum = enumerate_values(t, limit=16)
    if enum is not None:
        return enum[:limit]
    if isinstance(t, NatType):
        return [0, 1, 2]
    if isinstance(t, LineType):
        return [Fraction(0), Fraction(1), Fraction(1, 2)]
    if isinstance(t, PathType):
        out: list = []
        if values_agree(t.lhs, t.rhs):
            out.append(idp(t.lhs))
        if isinstance(t.carrier, LineType):
            a, b = t.lhs, t.rhs
            out.append(babs(1, lambda i, a=a, b=b: a + i * (b - a)))
        out.append(step_path(t.lhs, t.rhs))
        return out[:limit]
    if isinstance(t, PiType):
        # Choice functions pick the k-th inhabitant of the codomain pointwise,
        # so they stay well-typed even when the codomain varies with the input.
        def chooser(k: int) -> Callable[[Value], Value]:
            def fn(v: Value) -> Value:
                options = sample_values(t.codomain(v), limit=4)
                if not options:
                    raise ValueError("no known inhabitant of the codomain to choose")
                return options[k % len(options)]

            return fn

        if not sample_values(t.domain, limit=1):
            return []
        return [chooser(k) for k in range(min(limit, 2))]
    if isinstance(t, SigmaType):
        out = []
        for a in sample_values(t.first, limit=2):
            out.extend((a, b) for b in sample_values(t.second(a), limit=2))
        return out[:limit]
    if isinstance(t, SumType):
        return (
            [Inl(v) for v in sample_values(t.left, limit=2)]
            + [Inr(v) for v in sample_values(t.right, limit=2)]
        )[:limit]
    hook = _SAMPLE_HOOKS.get(type(t))
    if hook is not None:
        return hook(t)[:limit]
    return []


# ---------------------------------------------------------------------------
# Fibrations.


@dataclass(frozen=True, eq=False)
class Fibration:
    """A family of semantic types with a transport action along context paths."""

    fam: Callable[[Value], SemType]
    transport: Callable[[MoorePath, Value], Value]


def const_fib(t: SemType) -> Fibration:
    """The constant family: transport is the identity on the fiber."""
    return Fibration(fam=lambda _x: t, transport=lambda _p, a: a)


def reindex(A: Fibration, gamma: Callable[[Value], Value]) -> Fibration:
    """Pull a fibration back along a map of contexts."""
    return Fibration(
        fam=lambda x: A.fam(gamma(x)),
        transport=lambda p, a: A.transport(map_path(gamma, p), a),
    )


def lift(A: Fibration, p: MoorePath, a: Value) -> MoorePath:
    """The path in the total space over p from (x, a) to (y, transport a)."""
    return babs(p.shape, lambda i: (p.at(i), A.transport(upto(i, p), a)))


def snd_path(A: Fibration, p: MoorePath) -> MoorePath:
    """Project a total-space path to a fiber path over the target.

    Sends p : (x, a) ~ (y, b) to a path (transport a along the base of p) ~ b
    in the fiber at y, by sliding each fiber component to the endpoint.
    """
    base = map_path(lambda pt: pt[0], p)
    return babs(p.shape, lambda i: A.transport(from_(i, base), p.at(i)[1]))


def sigma_fib(A: Fibration, B: Fibration) -> Fibration:
    """Dependent pairs: componentwise transport, the second along the lift."""

    def transport(p: MoorePath, ab: Value) -> Value:
        a, b = ab
        return (A.transport(p, a), B.transport(lift(A, p, a), b))

    return Fibration(
        fam=lambda x: SigmaType(A.fam(x), lambda a: B.fam((x, a))),
        transport=transport,
    )


def pi_fib(A: Fibration, B: Fibration) -> Fibration:
    """Dependent functions: transport by pulling the argument back along the
    reversed path and pushing the result forward over the reversed lift."""

    def transport(p: MoorePath, f: Value) -> Value:
        def moved(a: Value) -> Value:
            rp = reverse(p)
            a0 = A.transport(rp, a)
            return B.transport(reverse(lift(A, rp, a)), f(a0))

        return moved

    return Fibration(
        fam=lambda x: PiType(A.fam(x), lambda a: B.fam((x, a))),
        transport=transport,
    )


def sum_fib(A: Fibration, B: Fibration) -> Fibration:
    """Disjoint unions: transport by case analysis on the constructor."""

    def transport(p: MoorePath, v: Value) -> Value:
        if isinstance(v, Inl):
            return Inl(A.transport(p, v.value))
        if isinstance(v, Inr):
            return Inr(B.transport(p, v.value))
        raise TypeError(f"not a sum value: {v!r}")

    return Fibration(
        fam=lambda x: SumType(A.fam(x), B.fam(x)),
        transport=transport,
    )


def w_fib(A: Fibration, B: Fibration, max_depth: int = 512) -> Fibration:
    """Well-founded trees: transport labels forward and arguments backward.

    Recursion depth is guarded; a well-founded tree reaches leaves before the
    bound, anything else is reported instead of looping.
    """

    def tr(p: MoorePath, tree: Value, depth: int) -> Value:
        if depth > max_depth:
            raise DepthLimitError(f"tree transport exceeded depth {max_depth}")
        if not isinstance(tree, Sup):
            raise TypeError(f"not a tree value: {tree!r}")
        back = reverse(lift(A, p, tree.label))
        return Sup(
            A.transport(p, tree.label),
            lambda b: tr(p, tree.children(B.transport(back, b)), depth + 1),
        )

    return Fibration(
        fam=lambda x: WType(A.fam(x), lambda a: B.fam((x, a))),
        transport=lambda p, t: tr(p, t, 0),
    )


def id_transport(A: Fibration, p: MoorePath, q: MoorePath) -> MoorePath:
    """Transport a fiber path q : a1 ~ a2 along a path p of doubly-extended points.

    p runs over points ((x, a1), a2); the result composes the slid endpoint
    paths around the image of q under the base transport.
    """
    first = map_path(lambda pt: pt[0], p)
    second = map_path(lambda pt: (pt[0][0], pt[1]), p)
    base = map_path(lambda pt: pt[0][0], p)
    p1 = snd_path(A, first)
    p2 = snd_path(A, second)
    mid = map_path(lambda v: A.transport(base, v), q)
    return compose(p2, compose(mid, reverse(p1)))


def id_fib(A: Fibration) -> Fibration:
    """The identity-type family: fibers are Moore path objects between fiber
    elements, transported by conjugating with the slid endpoint paths."""
    return Fibration(
        fam=lambda pt: PathType(A.fam(pt[0][0]), pt[0][1], pt[1]),
        transport=lambda p, q: id_transport(A, p, q),
    )


def refl_value(a: Value) -> MoorePath:
    """The canonical inhabitant of a self-identity fiber."""
    return idp(a)


def refl_point(x: Value, a: Value) -> tuple:
    """The image of (x, a) under the reflexivity section: diagonal plus degenerate path."""
    return (((x, a), a), idp(a))


def singleton_contraction(x: Value, p: MoorePath) -> MoorePath:
    """The path contracting (x, idp x) onto (target p, p) in the singleton space."""
    return babs(p.shape, lambda i: (p.at(i), upto(i, p)))


def j_elim(
    B: Fibration,
    beta: Callable[[Value, Value], Value],
    x: Value,
    a1: Value,
    a2: Value,
    p: MoorePath,
) -> Value:
    """Path induction: transport the base case along the singleton contraction.

    B is a fibration over points (((x, a1), a2), q); beta gives its value on
    the reflexivity section.  On a degenerate p this computes to beta(x, a1)
    exactly, because the contraction path is then itself degenerate.
    """
    track = babs(p.shape, lambda i: (((x, a1), p.at(i)), upto(i, p)))
    return B.transport(track, beta(x, a1))


def compose_transport_path(
    F: Fibration, carrier: SemType, p: MoorePath, q: MoorePath, a: Value
) -> MoorePath:
    """A path from transport along q∘p to the two-step transport, by path induction.

    Transport actions need not respect composition on the nose; this builds
    the connecting path whose endpoints are the two candidate results.  F is
    a fibration over a context whose semantic type is ``carrier``; p and q are
    composable context paths and a lives in the fiber over p's source.
    """
    z = q.target

    # Motive over points P = (((_, x'), y'), p'):
    #   Pi (b : F x'). Pi (r : y' ~ z). Id (F z) (trpt (r∘p') b) (trpt r (trpt p' b))
    def proj_x(P: Value) -> Value:
        return P[0][0][1]

    def proj_y(P: Value) -> Value:
        return P[0][1]

    def proj_p(P: Value) -> MoorePath:
        return P[1]

    A1 = reindex(F, proj_x)
    A2 = reindex(id_fib(const_fib(carrier)), lambda Pb: ((None, proj_y(Pb[0])), z))

    def endpoints(Pbr: Value) -> tuple:
        (P, b), r = Pbr[0], Pbr[1]
        lhs = F.transport(compose(r, proj_p(P)), b)
        rhs = F.transport(r, F.transport(proj_p(P), b))
        return ((z, lhs), rhs)

    ID = reindex(id_fib(F), endpoints)
    motive = pi_fib(A1, pi_fib(A2, ID))

    def beta(_x: Value, _w: Value) -> Value:
        return lambda b: lambda r: idp(F.transport(r, b))

    fn = j_elim(motive, beta, None, p.source, p.target, p)
    return fn(a)(q)
