"""Moore paths and their combinator algebra.

A path is a shape (a nonnegative scalar) together with an evaluation map from
the positive cone.  Evaluation always clamps its argument to ``min(i, shape)``,
so the "constant at and beyond the shape" side condition holds for arbitrary
user closures by construction rather than as a proof obligation.

Two backends share one interface:

* ``ClosurePath`` wraps any evaluation function; equality on these is decided
  at a deterministic probe set and is sound for refutation only.
* ``PiecewisePath`` represents scalar-valued paths as exact piecewise
  polynomials; equality on these is an exact coefficient comparison, which is
  what makes the groupoid laws checkable as identities rather than samples.
"""

from __future__ import annotations

import json
import random
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Iterable, Optional, Sequence

from .ring import (
    NegativeScalarError,
    Scalar,
    as_nonneg,
    as_scalar,
    format_scalar,
    minimum,
    parse_scalar,
    truncated_sub,
)

# Big-endian ASCII bytes "M00RE"; the probe RNG default.
DEFAULT_SEED = 0x4D30305245
DEFAULT_PROBES = 64


@dataclass(frozen=True)
class SampleSpec:
    """Seed and count for the deterministic probe-point generator."""

    seed: int = DEFAULT_SEED
    count: int = DEFAULT_PROBES

    def unit_points(self) -> tuple[Fraction, ...]:
        rng = random.Random(self.seed)
        den = 1 << 16
        return tuple(Fraction(rng.randint(0, den), den) for _ in range(self.count))


DEFAULT_SPEC = SampleSpec()


def probe_points(
    shape: Scalar, spec: SampleSpec = DEFAULT_SPEC, extra: Iterable[Scalar] = ()
) -> tuple[Fraction, ...]:
    """Deterministic probes in [0, shape]: endpoints, extras, seeded rationals."""
    pts = {Fraction(0), shape}
    pts.update(extra)
    if shape > 0:
        pts.update(u * shape for u in spec.unit_points())
    return tuple(sorted(pts))


class EndpointMismatchError(ValueError):
    """Composition precondition failure: target of one path is not the source of the next."""


# ---------------------------------------------------------------------------
# Exact polynomials in one variable, coefficients ascending by degree.


def poly_eval(coeffs: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def poly_trim(coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    cs = list(coeffs)
    while len(cs) > 1 and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def poly_affine_arg(coeffs: Sequence[Fraction], a: Fraction, b: Fraction) -> tuple[Fraction, ...]:
    """Coefficients of x -> p(a + b*x), computed by Horner over (a + b*x)."""
    acc: list[Fraction] = [Fraction(0)]
    for c in reversed(coeffs):
        # acc := acc * (a + b*x) + c
        shifted = [Fraction(0)] + [b * v for v in acc]
        for k, v in enumerate(acc):
            shifted[k] += a * v
        shifted[0] += c
        acc = shifted
    return poly_trim(acc)


# ---------------------------------------------------------------------------
# Path representations.


class MoorePath:
    """Shape plus clamped evaluation; subclasses provide ``_sample``."""

    shape: Scalar

    def at(self, i: int | Fraction) -> Any:
        return self._sample(minimum(as_nonneg(as_scalar(i)), self.shape))

    def _sample(self, i: Scalar) -> Any:
        raise NotImplementedError

    @property
    def source(self) -> Any:
        return self._sample(Fraction(0))

    @property
    def target(self) -> Any:
        return self._sample(self.shape)


class ClosurePath(MoorePath):
    """A path backed by an arbitrary evaluation function.

    Evaluation functions must be pure (the concurrency contract already
    requires it), so results are memoized per parameter; deeply composed
    transport paths are probed at overlapping point sets and the cache turns
    that from exponential into linear work.
    """

    def __init__(self, shape: int | Fraction, fn: Callable[[Scalar], Any]):
        self.shape = as_nonneg(as_scalar(shape))
        self._fn = fn
        self._memo: dict[Scalar, Any] = {}

    def _sample(self, i: Scalar) -> Any:
        memo = self._memo
        if i in memo:
            return memo[i]
        value = self._fn(i)
        memo[i] = value
        return value

    def __repr__(self) -> str:
        return f"ClosurePath(shape={self.shape})"


class PiecewisePath(MoorePath):
    """Exact scalar-valued path: polynomial pieces between breakpoints.

    ``knots`` starts at 0, is strictly increasing and ends at the shape; piece
    ``m`` covers ``[knots[m], knots[m+1]]`` in the local coordinate
    ``i - knots[m]``.  A shape-0 path is a single constant piece at knot 0.
    Adjacent pieces must agree at shared knots.
    """

    def __init__(self, knots: Sequence[int | Fraction], pieces: Sequence[Sequence[int | Fraction]]):
        ks = tuple(as_scalar(k) for k in knots)
        ps = tuple(poly_trim(tuple(as_scalar(c) for c in piece)) for piece in pieces)
        if not ks or ks[0] != 0:
            raise ValueError("breakpoints must start at 0")
        if any(a >= b for a, b in zip(ks, ks[1:])):
            raise ValueError("breakpoints must be strictly increasing")
        if len(ps) != max(1, len(ks) - 1):
            raise ValueError("need one piece per breakpoint interval")
        for m in range(len(ps) - 1):
            left = poly_eval(ps[m], ks[m + 1] - ks[m])
            right = poly_eval(ps[m + 1], Fraction(0))
            if left != right:
                raise ValueError(f"pieces disagree at breakpoint {ks[m + 1]}: {left} != {right}")
        self.knots = ks
        self.pieces = ps
        self.shape = ks[-1]

    def _sample(self, i: Scalar) -> Scalar:
        m = min(bisect_right(self.knots, i) - 1, len(self.pieces) - 1)
        return poly_eval(self.pieces[m], i - self.knots[m])

    def piece_at(self, lo: Scalar) -> tuple[Fraction, ...]:
        """The covering polynomial re-based to local origin ``lo``."""
        m = min(bisect_right(self.knots, lo) - 1, len(self.pieces) - 1)
        return poly_affine_arg(self.pieces[m], lo - self.knots[m], Fraction(1))

    def to_json_dict(self) -> dict:
        return {
            "shape": format_scalar(self.shape),
            "breakpoints": [format_scalar(k) for k in self.knots],
            "pieces": [[format_scalar(c) for c in piece] for piece in self.pieces],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, d: dict) -> "PiecewisePath":
        return cls(
            [parse_scalar(k) for k in d["breakpoints"]],
            [[parse_scalar(c) for c in piece] for piece in d["pieces"]],
        )

    @classmethod
    def from_json(cls, text: str) -> "PiecewisePath":
        return cls.from_json_dict(json.loads(text))

    def __repr__(self) -> str:
        return f"PiecewisePath({self.to_json()})"


def pw_poly(shape: int | Fraction, coeffs: Sequence[int | Fraction]) -> PiecewisePath:
    """Exact path of the given shape following one polynomial."""
    s = as_nonneg(as_scalar(shape))
    if s == 0:
        return PiecewisePath((0,), ((poly_eval(poly_trim([as_scalar(c) for c in coeffs]), Fraction(0)),),))
    return PiecewisePath((0, s), (coeffs,))


def pw_const(shape: int | Fraction, value: int | Fraction) -> PiecewisePath:
    return pw_poly(shape, (value,))


def pw_idp(value: int | Fraction) -> PiecewisePath:
    return PiecewisePath((0,), ((value,),))


# ---------------------------------------------------------------------------
# Value agreement (used by composition preconditions and probe equality).


def values_agree(a: Any, b: Any, spec: SampleSpec = DEFAULT_SPEC) -> bool:
    """Best-effort equality on path carriers.

    Exact for scalars, booleans, tuples and anything exposing ``agree_parts``;
    recursive probe comparison for paths.  Bare callables are treated as
    indeterminately equal (their domain is unknown here); callers with type
    information compare functions themselves.
    """
    if isinstance(a, MoorePath) and isinstance(b, MoorePath):
        return bool(path_eq(a, b, spec))
    if isinstance(a, tuple) and isinstance(b, tuple):
        return len(a) == len(b) and all(values_agree(x, y, spec) for x, y in zip(a, b))
    parts_a = getattr(a, "agree_parts", None)
    parts_b = getattr(b, "agree_parts", None)
    if parts_a is not None and parts_b is not None:
        if type(a) is not type(b):
            return False
        return values_agree(parts_a(), parts_b(), spec)
    if callable(a) and callable(b):
        return True
    return type(a) is type(b) and a == b


@dataclass(frozen=True)
class PathAgreement:
    """Boolean-like verdict carrying the first witness point of disagreement."""

    ok: bool
    witness: Optional[Fraction] = None
    left: Any = None
    right: Any = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _pw_disagreement_point(
    p: PiecewisePath, q: PiecewisePath, lo: Scalar, hi: Scalar
) -> Fraction:
    """A point in [lo, hi] where two distinct polynomials take distinct values."""
    mid = (lo + hi) / 2
    k = 2
    while p.at(mid) == q.at(mid):
        mid = lo + (hi - lo) / (1 << k)
        k += 1
    return mid


def _pw_exact_eq(p: PiecewisePath, q: PiecewisePath) -> PathAgreement:
    if p.shape != q.shape:
        return PathAgreement(False, None, p.shape, q.shape, "shapes differ")
    grid = sorted(set(p.knots) | set(q.knots))
    if p.shape == 0:
        v, w = p.at(0), q.at(0)
        if v != w:
            return PathAgreement(False, Fraction(0), v, w, "values differ at 0")
        return PathAgreement(True)
    for lo, hi in zip(grid, grid[1:]):
        if p.piece_at(lo) != q.piece_at(lo):
            pt = _pw_disagreement_point(p, q, lo, hi)
            return PathAgreement(False, pt, p.at(pt), q.at(pt), "pieces differ")
    return PathAgreement(True)


def path_eq(
    p: MoorePath,
    q: MoorePath,
    spec: SampleSpec = DEFAULT_SPEC,
    carrier_eq: Optional[Callable[[Any, Any], bool]] = None,
) -> PathAgreement:
    """Extensional path equality: shapes exactly, values everywhere.

    Exact (not sampled) when both operands are piecewise; otherwise decided at
    the deterministic probe set, which refutes soundly but affirms
    heuristically.
    """
    if isinstance(p, PiecewisePath) and isinstance(q, PiecewisePath) and carrier_eq is None:
        return _pw_exact_eq(p, q)
    if p.shape != q.shape:
        return PathAgreement(False, None, p.shape, q.shape, "shapes differ")
    eq = carrier_eq or (lambda a, b: values_agree(a, b, spec))
    extra = list(getattr(p, "knots", ())) + list(getattr(q, "knots", ()))
    for pt in probe_points(p.shape, spec, extra):
        a, b = p.at(pt), q.at(pt)
        if not eq(a, b):
            return PathAgreement(False, pt, a, b, "values differ at probe")
    return PathAgreement(True)


# ---------------------------------------------------------------------------
# The combinator algebra.


def idp(x: Any) -> MoorePath:
    """The degenerate path at a point: shape 0, constant evaluation.

    Scalar points get the exact backend; everything else (including ints,
    which are counting numbers rather than scalars) stays a closure.
    """
    if isinstance(x, Fraction):
        return pw_idp(x)
    return ClosurePath(0, lambda _i: x)


def babs(j: int | Fraction, phi: Callable[[Scalar], Any]) -> ClosurePath:
    """Bounded abstraction: the shape-j path evaluating ``phi`` at min(i, j)."""
    return ClosurePath(j, phi)


def compose(q: MoorePath, p: MoorePath, spec: SampleSpec = DEFAULT_SPEC) -> MoorePath:
    """The path running p first, then q; shapes add.

    Raises :class:`EndpointMismatchError` when target(p) and source(q) can be
    told apart (exactly for scalar paths, at probes otherwise).
    """
    if not values_agree(p.target, q.source, spec):
        raise EndpointMismatchError(
            f"cannot compose: target {p.target!r} differs from source {q.source!r}"
        )
    if isinstance(p, PiecewisePath) and isinstance(q, PiecewisePath):
        if p.shape == 0:
            return q
        if q.shape == 0:
            return p
        knots = p.knots + tuple(k + p.shape for k in q.knots[1:])
        return PiecewisePath(knots, p.pieces + q.pieces)
    ps = p.shape

    def run(i: Scalar) -> Any:
        return p.at(i) if i <= ps else q.at(i - ps)

    return ClosurePath(ps + q.shape, run)


def reverse(p: MoorePath) -> MoorePath:
    """Same shape, evaluated at ``shape - i`` truncated at zero."""
    if isinstance(p, PiecewisePath):
        if p.shape == 0:
            return p
        knots = tuple(p.shape - k for k in reversed(p.knots))
        pieces = []
        for m in reversed(range(len(p.pieces))):
            width = p.knots[m + 1] - p.knots[m]
            pieces.append(poly_affine_arg(p.pieces[m], width, Fraction(-1)))
        return PiecewisePath(knots, pieces)
    return ClosurePath(p.shape, lambda i: p.at(truncated_sub(p.shape, i)))


def map_path(g: Callable[[Any], Any], p: MoorePath) -> MoorePath:
    """Apply a function along a path.

    Always produces a closure path: an arbitrary ``g`` need not be polynomial,
    so piecewise operands demote to the sampled representation.
    """
    return ClosurePath(p.shape, lambda i: g(p.at(i)))


def upto(i: int | Fraction, p: MoorePath) -> MoorePath:
    """Path contraction: the initial segment of p as a path to ``p at i``."""
    bound = minimum(as_nonneg(as_scalar(i)), p.shape)
    if isinstance(p, PiecewisePath):
        if bound == 0:
            return pw_idp(p.at(0))
        if bound == p.shape:
            return p
        keep = [k for k in p.knots if k < bound]
        pieces = p.pieces[: len(keep)]
        return PiecewisePath(tuple(keep) + (bound,), pieces)
    return ClosurePath(bound, lambda j: p.at(j))


def from_(i: int | Fraction, q: MoorePath) -> MoorePath:
    """Reversed contraction: the path from ``q at i`` to the target of q."""
    return reverse(upto(truncated_sub(q.shape, as_nonneg(as_scalar(i))), reverse(q)))


def step_path(before: Any, after: Any, shape: int | Fraction = 1) -> ClosurePath:
    """The path that jumps off its source immediately after 0.

    Definable because scalar equality is decidable here; witnesses that a
    decidable scalar object makes the Boolean object path-connected.
    """
    return ClosurePath(shape, lambda i: before if i == 0 else after)
