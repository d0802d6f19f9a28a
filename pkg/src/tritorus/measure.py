"""Analytic relative measures of triangle-type families, and Monte Carlo.

Areas are computed in the metric pulled back from the Euclidean plane of
angle triples (the sheets alpha+beta+gamma = +-pi); in relative-argument
coordinates this metric has quadratic form
ds^2 = (dxi1^2 + dxi2^2 - dxi1*dxi2) / 2.  Uniform sampling of (xi1, xi2)
on [0, 2*pi)^2 realizes the uniform law because the chart is affine with
constant Jacobian.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .torus import CURVE_LOCI, LocusId
from .angles import DomainError

TWO_PI = 2.0 * math.pi

#: Identity of the deterministic generator backing ``sample_uniform``.
RNG_ALGORITHM = "numpy-pcg64"

#: A sampled point counts as lying on a measure-zero boundary (and is
#: excluded from open-region counts) only within this residue tolerance.
BOUNDARY_TOL = 1e-12


class UnsupportedLocus(DomainError):
    """Arc length requested for a zero-dimensional locus."""


class Region(Enum):
    OBTUSE = "obtuse"
    ACUTE = "acute"
    POSITIVE_ORIENTATION = "positive_orientation"
    NEGATIVE_ORIENTATION = "negative_orientation"


@dataclass(frozen=True)
class MeasureReport:
    """Closed-form relative measures.

    Area entries (total, obtuse, acute) are in radians^2; curve entries
    are arc lengths in radians.  Each equals multiplicity of a generic
    member times geometric size.
    """

    total: float
    obtuse: float
    acute: float
    isosceles: float
    right: float
    degenerate: float
    obtuse_isosceles: float
    acute_isosceles: float
    ratios: dict[str, float]


@dataclass(frozen=True)
class McEstimate:
    probability: float
    standard_error: float
    samples: int
    seed: int


# Geometric sizes (before the multiplicity weight).  The two sheets are
# equilateral triangles of side sqrt(2)*pi in the angle plane; the border
# pairs are identified on the torus, so the degenerate curves count once.
_SIZE_TOTAL = math.sqrt(3.0) * math.pi**2
_SIZE_OBTUSE = 3.0 * math.sqrt(3.0) / 4.0 * math.pi**2
_SIZE_ACUTE = math.sqrt(3.0) / 4.0 * math.pi**2
_SIZE_ISOSCELES = 3.0 * math.sqrt(6.0) * math.pi
_SIZE_RIGHT = 3.0 * math.sqrt(2.0) * math.pi
_SIZE_DEGENERATE = 3.0 * math.sqrt(2.0) * math.pi
_SIZE_OBTUSE_ISOSCELES = 3.0 * math.sqrt(6.0) / 2.0 * math.pi
_SIZE_ACUTE_ISOSCELES = 3.0 * math.sqrt(6.0) / 2.0 * math.pi

# Generic-member multiplicities of each family (stabilizer orders).
MULT_AREA = 1  # generic nondegenerate scalene
MULT_ISOSCELES = 2
MULT_RIGHT = 1  # generic right triangle is scalene
MULT_DEGENERATE = 2  # generic degenerate triangle is scalene


def analytic_measures() -> MeasureReport:
    """Relative measures mu = multiplicity * size for the named families."""
    isosceles = MULT_ISOSCELES * _SIZE_ISOSCELES
    right = MULT_RIGHT * _SIZE_RIGHT
    degenerate = MULT_DEGENERATE * _SIZE_DEGENERATE
    obtuse_iso = MULT_ISOSCELES * _SIZE_OBTUSE_ISOSCELES
    acute_iso = MULT_ISOSCELES * _SIZE_ACUTE_ISOSCELES
    obtuse = MULT_AREA * _SIZE_OBTUSE
    acute = MULT_AREA * _SIZE_ACUTE
    return MeasureReport(
        total=MULT_AREA * _SIZE_TOTAL,
        obtuse=obtuse,
        acute=acute,
        isosceles=isosceles,
        right=right,
        degenerate=degenerate,
        obtuse_isosceles=obtuse_iso,
        acute_isosceles=acute_iso,
        ratios={
            "O:A": obtuse / acute,
            "I:AI": isosceles / acute_iso,
            "I:OI": isosceles / obtuse_iso,
            "I:R": isosceles / right,
            "D:R": degenerate / right,
        },
    )


# Primitive direction vectors of the one-dimensional loci in the
# relative-argument plane; each closes up after parameter length 2*pi.
_LOCUS_DIRECTIONS: dict[LocusId, tuple[int, int]] = {
    LocusId.D_A: (1, 0),
    LocusId.D_B: (0, 1),
    LocusId.D_C: (1, 1),
    LocusId.I_A: (1, 2),
    LocusId.I_B: (2, 1),
    LocusId.I_C: (1, -1),
    LocusId.R_A: (1, 0),
    LocusId.R_B: (0, 1),
    LocusId.R_C: (1, 1),
    LocusId.IPERP_A: (2, -1),
    LocusId.IPERP_B: (1, -2),
    LocusId.ANTI_RIGHT: (1, -1),
}


def locus_length(locus: LocusId) -> float:
    """Arc length of a one-dimensional locus in the angle-plane metric."""
    if locus not in _LOCUS_DIRECTIONS:
        raise UnsupportedLocus(f"{locus} is not one-dimensional")
    a, b = _LOCUS_DIRECTIONS[locus]
    return TWO_PI * math.sqrt((a * a + b * b - a * b) / 2.0)


def sample_uniform(seed: int, n: int) -> np.ndarray:
    """n i.i.d. uniform points on [0, 2*pi)^2, deterministic given seed."""
    if n < 1:
        raise ValueError("n must be positive")
    rng = np.random.default_rng(seed)
    return rng.uniform(0.0, TWO_PI, size=(n, 2))


def _abs_angles(xi: np.ndarray) -> np.ndarray:
    """|interior angles| of the preimage triangle of each float sample."""
    xi1, xi2 = xi[:, 0], xi[:, 1]
    pos = xi2 > xi1
    a = np.where(pos, math.pi - xi2 / 2.0, xi2 / 2.0)
    b = np.where(pos, xi1 / 2.0, math.pi - xi1 / 2.0)
    g = np.abs(xi2 - xi1) / 2.0
    return np.stack([a, b, g], axis=1)


def region_mask(xi: np.ndarray, region: Region) -> np.ndarray:
    """Boolean membership of float samples; boundary hits count as neither."""
    xi1, xi2 = xi[:, 0], xi[:, 1]
    diff = xi2 - xi1
    if region is Region.POSITIVE_ORIENTATION:
        return diff > BOUNDARY_TOL
    if region is Region.NEGATIVE_ORIENTATION:
        return diff < -BOUNDARY_TOL
    degenerate = (
        (np.abs(diff) <= BOUNDARY_TOL)
        | (np.minimum(xi1, TWO_PI - xi1) <= BOUNDARY_TOL)
        | (np.minimum(xi2, TWO_PI - xi2) <= BOUNDARY_TOL)
    )
    biggest = _abs_angles(xi).max(axis=1)
    if region is Region.OBTUSE:
        return ~degenerate & (biggest > math.pi / 2.0 + BOUNDARY_TOL)
    if region is Region.ACUTE:
        return ~degenerate & (biggest < math.pi / 2.0 - BOUNDARY_TOL)
    raise ValueError(f"unknown region {region}")


def estimate_probability(region: Region, n: int, seed: int) -> McEstimate:
    """Monte Carlo estimate of the uniform-measure fraction of a region."""
    xi = sample_uniform(seed, n)
    p_hat = float(region_mask(xi, region).mean())
    stderr = math.sqrt(p_hat * (1.0 - p_hat) / n)
    return McEstimate(probability=p_hat, standard_error=stderr, samples=n, seed=seed)
