"""An inductive-recursive universe: codes, decoding, and transport on fibers.

Codes are generated by a Boolean code, dependent-function codes and
identity-type codes; decoding is structural recursion.  Transport of a fiber
element along a path of codes proceeds by case analysis on the outermost
constructor at the source.  That case analysis is only well-defined when the
whole path stays inside one constructor form; scalars here are decidable
rather than connected, so stability is checked dynamically at a probe set and
violations raise :class:`ConstructorChange` carrying the offending probe.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Optional

from . import fib
from .fib import (
    BOOL,
    DepthLimitError,
    Fibration,
    PathType,
    PiType,
    SemType,
    UnivType,
    Value,
    id_transport,
    register_samples,
    sample_values,
)
from .path import MoorePath, PathAgreement, SampleSpec, babs, probe_points
from .ring import Scalar, truncated_sub

DEFAULT_STABILITY_SPEC = SampleSpec(count=16)
MAX_CODE_DEPTH = 512


class UCode:
    """A universe code; constructors are disjoint and injective."""


@dataclass(frozen=True)
class CodeBool(UCode):
    def agree_parts(self) -> tuple:
        return ()


@dataclass(frozen=True, eq=False)
class CodePi(UCode):
    domain: UCode
    family: Callable[[Value], UCode]

    def agree_parts(self) -> tuple:
        probes = sample_values(decode(self.domain), limit=2)
        return (self.domain, tuple(self.family(v) for v in probes))


@dataclass(frozen=True, eq=False)
class CodeEq(UCode):
    code: UCode
    lhs: Value
    rhs: Value

    def agree_parts(self) -> tuple:
        return (self.code, self.lhs, self.rhs)


def decode(u: UCode) -> SemType:
    """The semantic type a code stands for, by structural recursion."""
    if isinstance(u, CodeBool):
        return BOOL
    if isinstance(u, CodePi):
        return PiType(decode(u.domain), lambda x: decode(u.family(x)))
    if isinstance(u, CodeEq):
        return PathType(decode(u.code), u.lhs, u.rhs)
    raise TypeError(f"not a universe code: {u!r}")


class ConstructorChange(RuntimeError):
    """A code path left the constructor form of its source.

    Carries the offending probe point for deterministic reproduction.
    """

    def __init__(self, probe: Scalar, found: UCode, expected: str):
        self.probe = probe
        self.found = found
        self.expected = expected
        super().__init__(
            f"code path leaves constructor form {expected!r} at parameter {probe}: found {found!r}"
        )


def _constructor_name(u: UCode) -> str:
    return {CodeBool: "bool", CodePi: "pi", CodeEq: "eq"}[type(u)]


def constructor_stable(
    p: MoorePath, spec: SampleSpec = DEFAULT_STABILITY_SPEC
) -> PathAgreement:
    """Probe whether a code path keeps the outermost constructor of its source.

    This is the executable surrogate for the connectedness property the
    construction rests on; it refutes soundly and affirms heuristically.
    """
    head = type(p.at(0))
    for pt in probe_points(p.shape, spec):
        found = p.at(pt)
        if type(found) is not head:
            return PathAgreement(False, pt, head.__name__, found, "constructor changes")
    return PathAgreement(True)


def _expect_pi(u: UCode, probe: Scalar) -> CodePi:
    if not isinstance(u, CodePi):
        raise ConstructorChange(probe, u, "pi")
    return u


def _expect_eq(u: UCode, probe: Scalar) -> CodeEq:
    if not isinstance(u, CodeEq):
        raise ConstructorChange(probe, u, "eq")
    return u


def u_transport(
    p: MoorePath,
    a: Value,
    spec: SampleSpec = DEFAULT_STABILITY_SPEC,
    _depth: int = 0,
) -> Value:
    """Transport an element of the fiber over the source code to the target.

    Case analysis on the source constructor: Boolean fibers move unchanged,
    dependent-function fibers move by the usual pull-back/push-forward recipe
    with recursive transports over the component code paths, and identity
    fibers move by conjugation with the slid endpoint paths.
    """
    if _depth > MAX_CODE_DEPTH:
        raise DepthLimitError(f"universe transport exceeded depth {MAX_CODE_DEPTH}")
    head = p.at(0)
    stable = constructor_stable(p, spec)
    if not stable:
        raise ConstructorChange(stable.witness, stable.right, _constructor_name(head))

    if isinstance(head, CodeBool):
        return a

    if isinstance(head, CodePi):
        shape = p.shape

        def dom_at(j: Scalar) -> UCode:
            return _expect_pi(p.at(j), j).domain

        def fam_at(j: Scalar) -> Callable[[Value], UCode]:
            return _expect_pi(p.at(j), j).family

        def moved(x: Value) -> Value:
            def back(k: Scalar) -> Value:
                # Walk x from the target fiber back to the fiber at k.
                route = babs(
                    truncated_sub(shape, k), lambda j: dom_at(truncated_sub(shape, j))
                )
                return u_transport(route, x, spec, _depth + 1)

            ghat = babs(shape, lambda k: fam_at(k)(back(k)))
            a0 = a(back(Fraction(0)))
            return u_transport(ghat, a0, spec, _depth + 1)

        return moved

    if isinstance(head, CodeEq):
        track = babs(
            p.shape,
            lambda j: (
                (_expect_eq(p.at(j), j).code, _expect_eq(p.at(j), j).lhs),
                _expect_eq(p.at(j), j).rhs,
            ),
        )
        deeper = Fibration(
            fam=decode,
            transport=lambda q, b: u_transport(q, b, spec, _depth + 1),
        )
        return id_transport(deeper, track, a)

    raise TypeError(f"not a universe code: {head!r}")


universe_fibration = Fibration(fam=decode, transport=lambda p, a: u_transport(p, a))


register_samples(
    UnivType,
    lambda _t: [
        CodeBool(),
        CodeEq(CodeBool(), True, True),
        CodePi(CodeBool(), lambda _b: CodeBool()),
    ],
)
