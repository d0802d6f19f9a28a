"""The torus of relative arguments: group law, the angle map, and loci.

A point is a pair of relative arguments (xi1, xi2), each a rational multiple
of pi normalized to [0, 2*pi).  The map ``rho`` sends a triangle with interior
angles (alpha, beta, gamma) to (2*beta, -2*alpha) mod 2*pi; it is a bijection
from the two open sheets onto the nondegenerate points and glues the two
degenerate borders together.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import lcm

from .angles import (
    PI,
    ZERO,
    AngleTriple,
    PiRational,
    Sheet,
    TypeFlags,
    make_triple,
    taxonomy,
)


class OrientationSign(Enum):
    POSITIVE = "positive"
    ZERO = "zero"
    NEGATIVE = "negative"


class LocusId(Enum):
    D_A = "D_A"
    D_B = "D_B"
    D_C = "D_C"
    I_A = "I_A"
    I_B = "I_B"
    I_C = "I_C"
    R_A = "R_A"
    R_B = "R_B"
    R_C = "R_C"
    IPERP_A = "IPerp_A"
    IPERP_B = "IPerp_B"
    ANTI_RIGHT = "AntiRight"
    EQUILATERAL3 = "Equilateral3"


#: One-dimensional loci (everything except the order-3 equilateral subgroup).
CURVE_LOCI = tuple(l for l in LocusId if l is not LocusId.EQUILATERAL3)

#: Loci that are subgroups (closed under the group law).
SUBGROUP_LOCI = (
    LocusId.D_A,
    LocusId.D_B,
    LocusId.D_C,
    LocusId.I_A,
    LocusId.I_B,
    LocusId.I_C,
    LocusId.IPERP_A,
    LocusId.IPERP_B,
    LocusId.EQUILATERAL3,
)


@dataclass(frozen=True)
class TorusPoint:
    """A point of the torus, coordinates canonically reduced mod 2*pi."""

    xi1: PiRational
    xi2: PiRational

    def __post_init__(self):
        object.__setattr__(self, "xi1", self.xi1.mod_two_pi())
        object.__setattr__(self, "xi2", self.xi2.mod_two_pi())

    def is_degenerate(self) -> bool:
        return self.xi1.is_zero() or self.xi2.is_zero() or self.xi1 == self.xi2

    def key(self) -> tuple:
        """Deterministic sort key (lexicographic on canonical residues)."""
        return (self.xi1.coeff, self.xi2.coeff)

    def __str__(self) -> str:
        return f"({self.xi1}, {self.xi2})"


def identity() -> TorusPoint:
    return TorusPoint(ZERO, ZERO)


def mul(p: TorusPoint, q: TorusPoint) -> TorusPoint:
    return TorusPoint(p.xi1 + q.xi1, p.xi2 + q.xi2)


def inverse(p: TorusPoint) -> TorusPoint:
    return TorusPoint(-p.xi1, -p.xi2)


def power(p: TorusPoint, n: int) -> TorusPoint:
    return TorusPoint(p.xi1 * n, p.xi2 * n)


def element_order(p: TorusPoint) -> int:
    """Least n >= 1 with n*p = identity.

    Always defined for rational coordinates: n*xi = 0 mod 2*pi iff
    n * coeff(xi)/2 is an integer.
    """
    orders = []
    for xi in (p.xi1, p.xi2):
        half = xi.coeff / 2
        orders.append(half.denominator)
    return lcm(*orders)


def project_relative(theta1: PiRational, theta2: PiRational, theta3: PiRational) -> TorusPoint:
    """Quotient a triple of circle arguments by common rotation."""
    return TorusPoint(theta1 - theta3, theta2 - theta3)


def rho(t: AngleTriple) -> TorusPoint:
    """Map a triangle to the torus: (2*beta, -2*alpha) mod 2*pi."""
    return TorusPoint(t.beta * 2, t.alpha * -2)


def orientation(p: TorusPoint) -> OrientationSign:
    if p.is_degenerate():
        return OrientationSign.ZERO
    if p.xi2 > p.xi1:
        return OrientationSign.POSITIVE
    return OrientationSign.NEGATIVE


_VERTEX_COEFFS = ((1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, 0, 0), (0, -1, 0), (0, 0, -1))


def rho_preimages(p: TorusPoint) -> tuple[AngleTriple, ...]:
    """All triangles mapping to ``p``, plus-sheet first.

    The identity has the six vertex triples; every other degenerate point
    has one preimage on each degenerate border; a nondegenerate point has
    exactly one preimage, on the sheet matching its orientation.
    """
    xi1, xi2 = p.xi1, p.xi2
    if xi1.is_zero() and xi2.is_zero():
        return tuple(
            make_triple(PI * a, PI * b, PI * c) for a, b, c in _VERTEX_COEFFS
        )
    if xi2.is_zero():  # (e^{i*2b}, 1, 1): zero angle at A
        b = xi1 / 2
        return (
            make_triple(ZERO, b, PI - b),
            make_triple(ZERO, -PI + b, -b),
        )
    if xi1.is_zero():  # (1, e^{-i*2a}, 1): zero angle at B
        a = PI - xi2 / 2
        return (
            make_triple(a, ZERO, PI - a),
            make_triple(-PI + a, ZERO, -a),
        )
    if xi1 == xi2:  # (e^{i*2b}, e^{i*2b}, 1): zero angle at C
        b = xi1 / 2
        return (
            make_triple(PI - b, b, ZERO),
            make_triple(-b, -PI + b, ZERO),
        )
    if xi2 > xi1:
        return (make_triple(PI - xi2 / 2, xi1 / 2, (xi2 - xi1) / 2),)
    return (make_triple(-(xi2 / 2), xi1 / 2 - PI, (xi2 - xi1) / 2),)


def _eq_mod(a: PiRational, b: PiRational) -> bool:
    return (a - b).coeff % 2 == 0


_EQUILATERAL_POINTS = frozenset(
    (
        TorusPoint(ZERO, ZERO),
        TorusPoint(PiRational(2, 3), PiRational(4, 3)),
        TorusPoint(PiRational(4, 3), PiRational(2, 3)),
    )
)


def in_locus(p: TorusPoint, locus: LocusId) -> bool:
    """Exact membership in a distinguished subgroup or coset."""
    x, y = p.xi1, p.xi2
    if locus is LocusId.D_A:
        return y.is_zero()
    if locus is LocusId.D_B:
        return x.is_zero()
    if locus is LocusId.D_C:
        return x == y
    if locus is LocusId.I_A:
        return _eq_mod(y, x * 2)
    if locus is LocusId.I_B:
        return _eq_mod(x, y * 2)
    if locus is LocusId.I_C:
        return _eq_mod(x + y, ZERO)
    if locus is LocusId.R_A:
        return y == PI
    if locus is LocusId.R_B:
        return x == PI
    if locus is LocusId.R_C:
        return _eq_mod(y, x + PI)
    if locus is LocusId.IPERP_A:
        return _eq_mod(x, y * -2)
    if locus is LocusId.IPERP_B:
        return _eq_mod(y, x * -2)
    if locus is LocusId.ANTI_RIGHT:
        return _eq_mod(y, PI - x)
    if locus is LocusId.EQUILATERAL3:
        return p in _EQUILATERAL_POINTS
    raise ValueError(f"unknown locus {locus}")


@dataclass(frozen=True)
class Classification:
    """Everything knowable about one torus point."""

    point: TorusPoint
    orientation: OrientationSign
    degenerate: bool
    flags: TypeFlags
    loci: tuple[LocusId, ...]
    multiplicity: int
    preimages: tuple[AngleTriple, ...]
    canonical_rep: TorusPoint


def classify(p: TorusPoint) -> Classification:
    """Full type report; the flags are those of the (shared) preimage class."""
    from . import symmetry  # local import: symmetry acts on TorusPoint

    preims = rho_preimages(p)
    return Classification(
        point=p,
        orientation=orientation(p),
        degenerate=p.is_degenerate(),
        flags=taxonomy(preims[0]),
        loci=tuple(l for l in LocusId if in_locus(p, l)),
        multiplicity=symmetry.multiplicity(p),
        preimages=preims,
        canonical_rep=symmetry.canonical_rep(p),
    )
