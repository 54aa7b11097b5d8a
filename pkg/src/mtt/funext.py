"""Function extensionality: pointwise homotopies give paths between functions.

The key move is ring multiplication: a family of fiber paths of varying
shapes is squeezed into a single shape-1 path by rescaling each fiber path's
parameter by its own shape.  The quasi-inverse witnesses interpolate between
shape 1 and the native shapes, and their well-typedness rests on an exact
polynomial identity in the ordered ring (squares are nonnegative).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

from .fib import SemType
from .path import ClosurePath, MoorePath, babs, map_path
from .ring import Scalar


@dataclass(frozen=True, eq=False)
class PointwiseHomotopy:
    """A family of fiber paths, one from f(x) to g(x) for each domain point."""

    domain: SemType
    paths: Callable[[Any], MoorePath]

    def source_at(self, x: Any) -> Any:
        return self.paths(x).source

    def target_at(self, x: Any) -> Any:
        return self.paths(x).target


def happly(p: MoorePath, x: Any) -> MoorePath:
    """Apply a path between functions at a point: congruence along (f -> f x)."""
    return map_path(lambda f: f(x), p)


def funext(e: PointwiseHomotopy) -> ClosurePath:
    """The shape-1 path between functions induced by a pointwise homotopy.

    At parameter i it returns the function sending x to the fiber path at x
    evaluated at i rescaled by that path's own shape, so at 0 it is f and at
    1 it is g, whatever the individual shapes are.
    """
    return babs(1, lambda i: (lambda x: e.paths(x).at(i * e.paths(x).shape)))


def u_interp(j: Scalar, s: Scalar) -> Scalar:
    """Shape interpolant: 1 at j=0, s at j=1."""
    return (1 - j) + j * s


def v_interp(j: Scalar, s: Scalar) -> Scalar:
    """Argument-rescaling interpolant: s at j=0, 1 at j=1."""
    return (1 - j) * s + j


def interp_product_excess(j: Scalar, s: Scalar) -> Scalar:
    """The exact amount by which u*v exceeds s: j(1-j)(s-1)^2."""
    return j * (1 - j) * (s - 1) ** 2


def epsilon(e: PointwiseHomotopy) -> ClosurePath:
    """A shape-1 path from happly(funext e) to e, as pointwise homotopies.

    Both interpolants stay large enough that every intermediate fiber path
    still ends at g(x): u*v = shape + j(1-j)(shape-1)^2 >= shape for j in
    [0, 1] because squares are nonnegative in an ordered ring.
    """

    def at(j: Scalar) -> PointwiseHomotopy:
        def fiber(x: Any) -> MoorePath:
            s = e.paths(x).shape
            return babs(u_interp(j, s), lambda i: e.paths(x).at(i * v_interp(j, s)))

        return PointwiseHomotopy(e.domain, fiber)

    return babs(1, at)


def eta(p: MoorePath) -> ClosurePath:
    """A shape-1 path from a function path p to funext(happly p).

    The inner shapes interpolate from the shape of p down to 1 while the
    argument rescaling interpolates from 1 up to the shape of p.
    """
    s = p.shape
    return babs(
        1,
        lambda j: babs((1 - j) * s + j, lambda i: p.at(i * (1 - j + j * s))),
    )
