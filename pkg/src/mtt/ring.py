"""Exact ordered-commutative-ring arithmetic.

Scalars are arbitrary-precision rationals in lowest terms (stdlib
``fractions.Fraction``), never floats: every algebraic law the kernel checks
is an exact identity and is tested as such.  The positive cone carries the
``minimum`` and ``truncated_sub`` operations every path construction uses.

Three ring instances sit behind one interface: the rationals (the working
scalar type), the integers (a decidable subring, kept to demonstrate that
decidable scalars collapse the model's logic), and the trivial ring where
0 = 1 and everything is equal.
"""

from __future__ import annotations

import random
from fractions import Fraction

Scalar = Fraction


class NegativeScalarError(ValueError):
    """A value required to lie in the positive cone was negative.

    Raised instead of clamping: a negative shape or probe point is always a
    programming error upstream, and clamping would mask it.
    """


def as_scalar(value: int | Fraction) -> Scalar:
    return value if isinstance(value, Fraction) else Fraction(value)


def as_nonneg(value: int | Fraction) -> Scalar:
    """Check membership in the positive cone, returning the canonical scalar."""
    x = as_scalar(value)
    if x < 0:
        raise NegativeScalarError(f"expected a nonnegative scalar, got {x}")
    return x


def leq(a: Scalar, b: Scalar) -> bool:
    """Decidable total order on scalars."""
    return a <= b


def minimum(i: Scalar, j: Scalar) -> Scalar:
    """Minimum on the positive cone: i when i <= j, else j."""
    as_nonneg(i)
    as_nonneg(j)
    return i if i <= j else j


def truncated_sub(i: Scalar, j: Scalar) -> Scalar:
    """Subtraction on the positive cone, clamped at zero."""
    as_nonneg(i)
    as_nonneg(j)
    return Fraction(0) if i <= j else i - j


def parse_scalar(text: str) -> Scalar:
    """Parse ``p/q`` or integer literal syntax into a canonical scalar."""
    return Fraction(text.strip())


def format_scalar(x: Scalar) -> str:
    """Canonical printing in lowest terms: ``5/6``, ``-2``, ``0``."""
    return str(x)


class Ring:
    """The rationals instance; subclasses restrict or collapse the carrier.

    Elements of every instance are canonical ``Fraction`` values, so Python
    equality is ring equality.  The trivial instance arranges 0 = 1 by
    collapsing every element to 0 at construction.
    """

    name = "rationals"

    def elem(self, numerator: int | Fraction, denominator: int = 1) -> Scalar:
        return Fraction(numerator, denominator) if denominator != 1 else as_scalar(numerator)

    def zero(self) -> Scalar:
        return self.elem(0)

    def one(self) -> Scalar:
        return self.elem(1)

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        return self.elem(a + b)

    def neg(self, a: Scalar) -> Scalar:
        return self.elem(-a)

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        return self.elem(a * b)

    def leq(self, a: Scalar, b: Scalar) -> bool:
        return a <= b

    def minimum(self, i: Scalar, j: Scalar) -> Scalar:
        return minimum(i, j)

    def truncated_sub(self, i: Scalar, j: Scalar) -> Scalar:
        return truncated_sub(i, j)

    def is_trivial(self) -> bool:
        return self.zero() == self.one()

    def random_elem(self, rng: random.Random, span: int = 6, max_den: int = 8) -> Scalar:
        return self.elem(Fraction(rng.randint(-span * max_den, span * max_den), rng.randint(1, max_den)))

    def random_nonneg(self, rng: random.Random, span: int = 4, max_den: int = 8) -> Scalar:
        return self.elem(Fraction(rng.randint(0, span * max_den), rng.randint(1, max_den)))

    def __repr__(self) -> str:
        return f"Ring({self.name})"


class IntegerRing(Ring):
    name = "integers"

    def elem(self, numerator: int | Fraction, denominator: int = 1) -> Scalar:
        x = Fraction(numerator, denominator)
        if x.denominator != 1:
            raise ValueError(f"{x} is not an integer")
        return x

    def random_elem(self, rng: random.Random, span: int = 6, max_den: int = 8) -> Scalar:
        return self.elem(rng.randint(-span, span))

    def random_nonneg(self, rng: random.Random, span: int = 4, max_den: int = 8) -> Scalar:
        return self.elem(rng.randint(0, span))


class TrivialRing(Ring):
    name = "trivial"

    def elem(self, numerator: int | Fraction, denominator: int = 1) -> Scalar:
        return Fraction(0)

    def random_elem(self, rng: random.Random, span: int = 6, max_den: int = 8) -> Scalar:
        return Fraction(0)

    def random_nonneg(self, rng: random.Random, span: int = 4, max_den: int = 8) -> Scalar:
        return Fraction(0)


RATIONALS = Ring()
INTEGERS = IntegerRing()
TRIVIAL = TrivialRing()

RINGS: dict[str, Ring] = {r.name: r for r in (RATIONALS, INTEGERS, TRIVIAL)}
