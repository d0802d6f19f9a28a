"""tritorus: exact arithmetic on the torus of triangle similarity classes."""

from .angles import (
    AngleTriple,
    DomainError,
    NotDegenerate,
    OutOfRange,
    PiRational,
    Sheet,
    SumNotPi,
    TypeFlags,
    degenerate_similar,
    make_triple,
    taxonomy,
)
from .torus import (
    Classification,
    LocusId,
    OrientationSign,
    TorusPoint,
    classify,
    element_order,
    identity,
    in_locus,
    inverse,
    mul,
    orientation,
    power,
    project_relative,
    rho,
    rho_preimages,
)
from .symmetry import (
    D6Word,
    GroupElement,
    act,
    all_elements,
    canonical_rep,
    multiplicity,
    orbit,
    orientation_preserving_subgroup,
    similar,
    stabilizer,
    word_of,
)
from .measure import (
    McEstimate,
    MeasureReport,
    Region,
    UnsupportedLocus,
    analytic_measures,
    estimate_probability,
    locus_length,
    sample_uniform,
)
from .pathtrace import EventKind, PathEvent, ZeroVelocity, trace_path

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
