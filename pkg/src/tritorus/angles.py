"""Exact angle arithmetic and the taxonomy of labeled, oriented triangles.

Angles are rational multiples of pi, stored as exact fractions, so every
classification decision (equality, sign, comparison with pi/2) is exact.
A triangle similarity class lives on one of two sheets: angle sums +pi
(counterclockwise labeling) or -pi (clockwise labeling).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Union


class DomainError(ValueError):
    """Base class for geometric-domain violations."""


class SumNotPi(DomainError):
    """Angle sum is neither +pi nor -pi."""


class OutOfRange(DomainError):
    """An angle leaves the admissible interval of its sheet."""


class NotDegenerate(DomainError):
    """A degenerate-only operation received a nondegenerate triangle."""


_RationalLike = Union[int, Fraction]


class PiRational:
    """An exact angle (numerator/denominator) * pi.

    Immutable.  Addition, negation, integer scaling, halving and comparison
    never round: the coefficient of pi is a ``fractions.Fraction``.
    """

    __slots__ = ("_coeff",)

    def __init__(self, numerator: _RationalLike = 0, denominator: int = 1):
        object.__setattr__(self, "_coeff", Fraction(numerator, denominator))

    @classmethod
    def from_fraction(cls, coeff: Fraction) -> "PiRational":
        out = cls.__new__(cls)
        object.__setattr__(out, "_coeff", Fraction(coeff))
        return out

    @property
    def coeff(self) -> Fraction:
        """Coefficient of pi."""
        return self._coeff

    @property
    def numerator(self) -> int:
        return self._coeff.numerator

    @property
    def denominator(self) -> int:
        return self._coeff.denominator

    @property
    def radians(self) -> float:
        return float(self._coeff) * math.pi

    def is_zero(self) -> bool:
        return self._coeff == 0

    def mod_two_pi(self) -> "PiRational":
        """Canonical residue in [0, 2*pi)."""
        return PiRational.from_fraction(self._coeff % 2)

    def __add__(self, other: "PiRational") -> "PiRational":
        return PiRational.from_fraction(self._coeff + other._coeff)

    def __sub__(self, other: "PiRational") -> "PiRational":
        return PiRational.from_fraction(self._coeff - other._coeff)

    def __neg__(self) -> "PiRational":
        return PiRational.from_fraction(-self._coeff)

    def __abs__(self) -> "PiRational":
        return PiRational.from_fraction(abs(self._coeff))

    def __mul__(self, k: _RationalLike) -> "PiRational":
        return PiRational.from_fraction(self._coeff * k)

    __rmul__ = __mul__

    def __truediv__(self, k: _RationalLike) -> "PiRational":
        return PiRational.from_fraction(self._coeff / k)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PiRational) and self._coeff == other._coeff

    def __lt__(self, other: "PiRational") -> bool:
        return self._coeff < other._coeff

    def __le__(self, other: "PiRational") -> bool:
        return self._coeff <= other._coeff

    def __gt__(self, other: "PiRational") -> bool:
        return self._coeff > other._coeff

    def __ge__(self, other: "PiRational") -> bool:
        return self._coeff >= other._coeff

    def __hash__(self) -> int:
        return hash(("PiRational", self._coeff))

    def __repr__(self) -> str:
        return f"PiRational({self.numerator}, {self.denominator})"

    def __str__(self) -> str:
        if self._coeff == 0:
            return "0"
        if self._coeff.denominator == 1:
            if self._coeff.numerator == 1:
                return "π"
            if self._coeff.numerator == -1:
                return "-π"
            return f"{self._coeff.numerator}·π"
        return f"{self._coeff.numerator}/{self._coeff.denominator}·π"


ZERO = PiRational(0)
PI = PiRational(1)
HALF_PI = PiRational(1, 2)
TWO_PI = PiRational(2)


class Sheet(Enum):
    PLUS = "plus"
    MINUS = "minus"


VERTICES = ("A", "B", "C")


@dataclass(frozen=True)
class AngleTriple:
    """Interior angles of a labeled, oriented triangle similarity class.

    On the plus sheet angles lie in [0, pi] and sum to pi; on the minus
    sheet they lie in [-pi, 0] and sum to -pi.  Build with ``make_triple``,
    which validates.
    """

    alpha: PiRational
    beta: PiRational
    gamma: PiRational
    sheet: Sheet

    @property
    def angles(self) -> tuple[PiRational, PiRational, PiRational]:
        return (self.alpha, self.beta, self.gamma)

    def is_degenerate(self) -> bool:
        return any(a.is_zero() for a in self.angles)

    def negated(self) -> "AngleTriple":
        other = Sheet.MINUS if self.sheet is Sheet.PLUS else Sheet.PLUS
        return AngleTriple(-self.alpha, -self.beta, -self.gamma, other)

    def __str__(self) -> str:
        return f"△[{self.alpha}, {self.beta}, {self.gamma}]"


@dataclass(frozen=True)
class TypeFlags:
    """Type report for one triangle similarity class.

    ``isosceles_vertices`` holds apex vertices: the apex is the vertex at
    which the two equal sides meet, i.e. the vertex opposite the pair of
    equal angles.  ``right_vertices`` holds vertices whose own angle is
    +-pi/2.
    """

    equilateral: bool
    isosceles_vertices: frozenset[str]
    right_vertices: frozenset[str]
    scalene: bool
    degenerate: bool
    obtuse: bool
    acute: bool

    @property
    def isosceles(self) -> bool:
        return bool(self.isosceles_vertices)

    @property
    def right(self) -> bool:
        return bool(self.right_vertices)


def make_triple(alpha: PiRational, beta: PiRational, gamma: PiRational) -> AngleTriple:
    """Validate three angles and infer the sheet from the sign of the sum."""
    total = alpha + beta + gamma
    if total == PI:
        sheet = Sheet.PLUS
        lo, hi = ZERO, PI
    elif total == -PI:
        sheet = Sheet.MINUS
        lo, hi = -PI, ZERO
    else:
        raise SumNotPi(f"angle sum {total} is neither π nor -π")
    for name, a in zip(VERTICES, (alpha, beta, gamma)):
        if not (lo <= a <= hi):
            raise OutOfRange(f"angle {a} at {name} outside [{lo}, {hi}]")
    return AngleTriple(alpha, beta, gamma, sheet)


def _apex_vertices(a: PiRational, b: PiRational, c: PiRational) -> frozenset[str]:
    # Equal angles at two vertices put the apex at the third.
    apexes = set()
    if a == b:
        apexes.add("C")
    if a == c:
        apexes.add("B")
    if b == c:
        apexes.add("A")
    if len(apexes) > 1:  # all three equal
        apexes = {"A", "B", "C"}
    return frozenset(apexes)


def taxonomy(t: AngleTriple) -> TypeFlags:
    """Classify a triple into the six main types (extended to degenerates)."""
    absang = tuple(abs(a) for a in t.angles)
    if t.is_degenerate():
        return _degenerate_taxonomy(t, absang)

    equilateral = absang[0] == absang[1] == absang[2]
    iso = _apex_vertices(*absang)
    right = frozenset(v for v, a in zip(VERTICES, absang) if a == HALF_PI)
    biggest = max(absang)
    return TypeFlags(
        equilateral=equilateral,
        isosceles_vertices=iso,
        right_vertices=right,
        scalene=not iso,
        degenerate=False,
        obtuse=biggest > HALF_PI,
        acute=biggest < HALF_PI,
    )


def _degenerate_taxonomy(t: AngleTriple, absang) -> TypeFlags:
    zeros = sum(1 for a in absang if a.is_zero())
    equilateral = zeros >= 2  # a permutation of (+-pi, 0, 0)
    halves = frozenset(v for v, a in zip(VERTICES, absang) if a == HALF_PI)
    if equilateral:
        iso = frozenset(VERTICES)
        # The degenerate equilateral class is not counted as right: its
        # square-angle set is empty and it is excluded from the right locus.
        right = frozenset()
        scalene = False
    elif len(halves) == 2:
        iso = _apex_vertices(*absang)
        right = halves
        scalene = False
    else:
        iso = frozenset()
        right = frozenset()
        scalene = all(a != HALF_PI and a != PI for a in absang if not a.is_zero())
    return TypeFlags(
        equilateral=equilateral,
        isosceles_vertices=iso,
        right_vertices=right,
        scalene=scalene,
        degenerate=True,
        obtuse=False,
        acute=False,
    )


def degenerate_similar(a: AngleTriple, b: AngleTriple) -> bool:
    """Similarity of degenerate triangles.

    True iff both have two zero interior angles, or they share the position
    of their single zero angle and the remaining pairs are equal or
    anti-transposed: [0,b,c] ~ [0,-c,-b], [a,0,c] ~ [-c,0,-a],
    [a,b,0] ~ [-b,-a,0].
    """
    for t in (a, b):
        if not t.is_degenerate():
            raise NotDegenerate(f"{t} is not degenerate")
    za = [ang.is_zero() for ang in a.angles]
    zb = [ang.is_zero() for ang in b.angles]
    if sum(za) >= 2 or sum(zb) >= 2:
        return sum(za) >= 2 and sum(zb) >= 2
    if za != zb:
        return False
    rest_a = [ang for ang in a.angles if not ang.is_zero()]
    rest_b = [ang for ang in b.angles if not ang.is_zero()]
    same = rest_a == rest_b
    anti = rest_a == [-rest_b[1], -rest_b[0]]
    return same or anti
