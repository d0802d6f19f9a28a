"""Command-line surface: classify | map | invert | orbit | measure | path | plot.

Output is line-oriented ``key: value`` text by default, or JSON with --json.
Exact rational angles are printed as ``p/q·π``; float values use 12
significant digits.  Exit codes: 0 success, 1 usage/parse error, 2 domain
error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from typing import Optional, Sequence, Union

from . import measure as measure_mod
from . import pathtrace, svgplot, symmetry, torus
from .angles import DomainError, PiRational, make_triple, taxonomy
from .pathtrace import EventKind, trace_path
from .torus import LocusId, TorusPoint

TWO_PI = 2.0 * math.pi

#: A degrees/radians input is snapped to an exact rational multiple of pi
#: with denominator up to this bound, when within FLOAT_TOL radians.
MAX_SNAP_DENOMINATOR = 360
FLOAT_TOL = 1e-9

Angle = Union[PiRational, float]


class ParseError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        raise SystemExit(1)


def _fmt_float(x: float) -> str:
    return format(x, ".12g")


def _fmt_angle(a: Angle) -> str:
    return str(a) if isinstance(a, PiRational) else _fmt_float(a)


def _fmt_point(p: TorusPoint) -> str:
    return f"({p.xi1}, {p.xi2})"


def _json_angle(a: Angle):
    if isinstance(a, PiRational):
        return {"pi_multiple": f"{a.numerator}/{a.denominator}"}
    return {"radians": a}


def parse_angle(text: str, mode: str) -> Angle:
    try:
        if mode == "pi-rational":
            return PiRational.from_fraction(Fraction(text))
        value = float(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"cannot parse angle {text!r}: {exc}") from None
    radians = math.radians(value) if mode == "degrees" else value
    snapped = Fraction(radians / math.pi).limit_denominator(MAX_SNAP_DENOMINATOR)
    if abs(float(snapped) * math.pi - radians) <= FLOAT_TOL:
        return PiRational.from_fraction(snapped)
    return radians


def parse_pi_rational(text: str) -> PiRational:
    try:
        return PiRational.from_fraction(Fraction(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"cannot parse coordinate {text!r}: {exc}") from None


class Report:
    """Ordered key/value report, printable as text or JSON."""

    def __init__(self):
        self.items: list[tuple[str, object]] = []

    def add(self, key: str, value) -> None:
        self.items.append((key, value))

    def emit(self, as_json: bool) -> None:
        if as_json:
            print(json.dumps(dict(self.items), indent=2))
        else:
            for key, value in self.items:
                print(f"{key}: {value}")


# ---------------------------------------------------------------------------
# float-path classification (non-rational degrees/radians inputs)

_VERTEX_NAMES = ("A", "B", "C")


def _wrap(x: float) -> float:
    return x % TWO_PI


def _wrap_pm_pi(x: float) -> float:
    return (x + math.pi) % TWO_PI - math.pi


def _circle_eq(a: float, b: float, tol: float = FLOAT_TOL) -> bool:
    return abs(_wrap_pm_pi(a - b)) <= tol


def classify_float(alpha: float, beta: float, gamma: float) -> Report:
    """Tolerance-based classification for angles that are not exact p/q*pi."""
    total = alpha + beta + gamma
    if abs(total - math.pi) <= FLOAT_TOL:
        sheet, lo, hi = "plus", 0.0, math.pi
    elif abs(total + math.pi) <= FLOAT_TOL:
        sheet, lo, hi = "minus", -math.pi, 0.0
    else:
        raise DomainError(f"angle sum {total!r} is neither π nor -π")
    for name, a in zip(_VERTEX_NAMES, (alpha, beta, gamma)):
        if not (lo - FLOAT_TOL <= a <= hi + FLOAT_TOL):
            raise DomainError(f"angle at {name} outside [{lo}, {hi}]")

    xi = (_wrap(2.0 * beta), _wrap(-2.0 * alpha))
    degenerate = min(abs(alpha), abs(beta), abs(gamma)) <= FLOAT_TOL
    absang = (abs(alpha), abs(beta), abs(gamma))

    if degenerate:
        orient = "zero"
    else:
        orient = "positive" if sheet == "plus" else "negative"

    eq = _circle_eq
    iso = set()
    if eq(absang[0], absang[1]):
        iso.add("C")
    if eq(absang[0], absang[2]):
        iso.add("B")
    if eq(absang[1], absang[2]):
        iso.add("A")
    if len(iso) > 1:
        iso = {"A", "B", "C"}
    right = {v for v, a in zip(_VERTEX_NAMES, absang) if abs(a - math.pi / 2) <= FLOAT_TOL}
    equilateral = iso == {"A", "B", "C"}
    biggest = max(absang)

    loci = [
        locus.value
        for locus, (a, b, c) in pathtrace.LOCUS_FORMS.items()
        if abs(_wrap_pm_pi(a * xi[0] + b * xi[1] - c)) <= FLOAT_TOL
    ]
    if any(_circle_eq(xi[0], ex) and _circle_eq(xi[1], ey) for ex, ey in
           ((0.0, 0.0), (TWO_PI / 3, 2 * TWO_PI / 3), (2 * TWO_PI / 3, TWO_PI / 3))):
        loci.append(LocusId.EQUILATERAL3.value)

    images = []
    for g in symmetry.all_elements():
        (m00, m01), (m10, m11) = g.matrix()
        q = (_wrap(m00 * xi[0] + m01 * xi[1]), _wrap(m10 * xi[0] + m11 * xi[1]))
        if not any(_circle_eq(q[0], r[0]) and _circle_eq(q[1], r[1]) for r in images):
            images.append(q)
    mult = 12 // len(images)
    rep = min(images)

    report = Report()
    report.add("mode", "float")
    report.add("sheet", sheet)
    for name, a in zip(("alpha", "beta", "gamma"), (alpha, beta, gamma)):
        report.add(name, _fmt_float(a))
    report.add("torus.xi1", _fmt_float(xi[0]))
    report.add("torus.xi2", _fmt_float(xi[1]))
    report.add("orientation", orient)
    report.add("degenerate", str(degenerate).lower())
    report.add("equilateral", str(equilateral).lower())
    report.add("isosceles_vertices", ",".join(sorted(iso)) or "-")
    report.add("right_vertices", ",".join(sorted(right)) or "-")
    report.add("scalene", str(not iso and not degenerate).lower())
    report.add("obtuse", str(not degenerate and biggest > math.pi / 2 + FLOAT_TOL).lower())
    report.add("acute", str(not degenerate and biggest < math.pi / 2 - FLOAT_TOL).lower())
    report.add("loci", ",".join(loci) or "-")
    report.add("multiplicity", mult)
    report.add("canonical_rep", f"({_fmt_float(rep[0])}, {_fmt_float(rep[1])})")
    return report


# ---------------------------------------------------------------------------
# subcommands


def _parse_three_angles(texts: Sequence[str], mode: str) -> list[Angle]:
    if len(texts) != 3:
        raise ParseError("expected three angles")
    return [parse_angle(t, mode) for t in texts]


def cmd_classify(args) -> int:
    angles = _parse_three_angles(args.angles, args.format)
    if not all(isinstance(a, PiRational) for a in angles):
        report = classify_float(*(a.radians if isinstance(a, PiRational) else a for a in angles))
        report.emit(args.json)
        return 0

    triple = make_triple(*angles)
    info = torus.classify(torus.rho(triple))
    flags = info.flags
    report = Report()
    report.add("mode", "exact")
    report.add("sheet", triple.sheet.value)
    for name, a in zip(("alpha", "beta", "gamma"), triple.angles):
        report.add(name, _fmt_angle(a))
    report.add("torus.xi1", _fmt_angle(info.point.xi1))
    report.add("torus.xi2", _fmt_angle(info.point.xi2))
    report.add("orientation", info.orientation.value)
    report.add("degenerate", str(info.degenerate).lower())
    report.add("equilateral", str(flags.equilateral).lower())
    report.add("isosceles_vertices", ",".join(sorted(flags.isosceles_vertices)) or "-")
    report.add("right_vertices", ",".join(sorted(flags.right_vertices)) or "-")
    report.add("scalene", str(flags.scalene).lower())
    report.add("obtuse", str(flags.obtuse).lower())
    report.add("acute", str(flags.acute).lower())
    report.add("loci", ",".join(l.value for l in info.loci) or "-")
    report.add("multiplicity", info.multiplicity)
    report.add("canonical_rep", _fmt_point(info.canonical_rep))
    report.emit(args.json)
    return 0


def cmd_map(args) -> int:
    angles = _parse_three_angles(args.angles, args.format)
    if not all(isinstance(a, PiRational) for a in angles):
        raise ParseError("map requires exact rational angles; use classify for floats")
    triple = make_triple(*angles)
    p = torus.rho(triple)
    report = Report()
    report.add("sheet", triple.sheet.value)
    report.add("torus.xi1", _fmt_angle(p.xi1))
    report.add("torus.xi2", _fmt_angle(p.xi2))
    report.add("orientation", torus.orientation(p).value)
    report.emit(args.json)
    return 0


def cmd_invert(args) -> int:
    p = TorusPoint(parse_pi_rational(args.xi1), parse_pi_rational(args.xi2))
    preimages = torus.rho_preimages(p)
    report = Report()
    report.add("point", _fmt_point(p))
    report.add("count", len(preimages))
    for i, t in enumerate(preimages, start=1):
        report.add(f"preimage.{i}", f"{t} sheet={t.sheet.value}")
    report.emit(args.json)
    return 0


def cmd_orbit(args) -> int:
    p = TorusPoint(parse_pi_rational(args.xi1), parse_pi_rational(args.xi2))
    orb = sorted(symmetry.orbit(p), key=TorusPoint.key)
    report = Report()
    report.add("point", _fmt_point(p))
    report.add("orbit_size", len(orb))
    report.add("multiplicity", symmetry.multiplicity(p))
    report.add("canonical_rep", _fmt_point(symmetry.canonical_rep(p)))
    for i, q in enumerate(orb, start=1):
        report.add(f"element.{i}", _fmt_point(q))
    report.emit(args.json)
    return 0


def cmd_measure(args) -> int:
    rep = measure_mod.analytic_measures()
    report = Report()
    for key in (
        "total",
        "obtuse",
        "acute",
        "isosceles",
        "right",
        "degenerate",
        "obtuse_isosceles",
        "acute_isosceles",
    ):
        report.add(f"analytic.{key}", _fmt_float(getattr(rep, key)))
    for name, value in rep.ratios.items():
        report.add(f"ratio.{name}", _fmt_float(value))
    if args.samples > 0:
        report.add("mc.algorithm", measure_mod.RNG_ALGORITHM)
        report.add("mc.seed", args.seed)
        report.add("mc.samples", args.samples)
        for region in (
            measure_mod.Region.OBTUSE,
            measure_mod.Region.ACUTE,
            measure_mod.Region.POSITIVE_ORIENTATION,
            measure_mod.Region.NEGATIVE_ORIENTATION,
        ):
            est = measure_mod.estimate_probability(region, args.samples, args.seed)
            report.add(f"mc.{region.value}.probability", _fmt_float(est.probability))
            report.add(f"mc.{region.value}.stderr", _fmt_float(est.standard_error))
    report.emit(args.json)
    return 0


def _orientation_name(sign: int) -> str:
    return {1: "positive", -1: "negative", 0: "zero"}[sign]


def cmd_path(args) -> int:
    if len(args.start) == 2:
        start = (
            parse_pi_rational(args.start[0]).radians,
            parse_pi_rational(args.start[1]).radians,
        )
    elif len(args.start) == 3:
        angles = _parse_three_angles(args.start, args.format)
        rad = [a.radians if isinstance(a, PiRational) else a for a in angles]
        start = (_wrap(2.0 * rad[1]), _wrap(-2.0 * rad[0]))
    else:
        raise ParseError("start must be two torus coordinates or three angles")

    velocity = (args.velocity[0], args.velocity[1])
    events = trace_path(start, velocity, args.steps, args.step_size)

    report = Report()
    report.add("start", f"({_fmt_float(start[0])}, {_fmt_float(start[1])})")
    report.add("velocity", f"({_fmt_float(velocity[0])}, {_fmt_float(velocity[1])})")
    report.add("orientation.start", _orientation_name(pathtrace.orientation_sign(start)))
    vnorm = math.hypot(*velocity)
    eps = 1e-6 / vnorm
    for i, ev in enumerate(events, start=1):
        fields = [f"kind={ev.kind.value}", f"step={ev.step_index}"]
        fields.append(
            f"position=({_fmt_float(ev.refined_position[0])}, {_fmt_float(ev.refined_position[1])})"
        )
        if ev.locus is not None:
            fields.append(f"locus={ev.locus.value}")
            a, b, c = pathtrace.LOCUS_FORMS[ev.locus]
            res = _wrap_pm_pi(a * ev.refined_position[0] + b * ev.refined_position[1] - c)
            fields.append(f"residue={_fmt_float(abs(res))}")
        if ev.kind is EventKind.ORIENTATION_FLIP:
            before = (
                ev.refined_position[0] - eps * velocity[0],
                ev.refined_position[1] - eps * velocity[1],
            )
            after = (
                ev.refined_position[0] + eps * velocity[0],
                ev.refined_position[1] + eps * velocity[1],
            )
            fields.append(f"orientation_before={_orientation_name(pathtrace.orientation_sign(before))}")
            fields.append(f"orientation_after={_orientation_name(pathtrace.orientation_sign(after))}")
        report.add(f"event.{i}", " ".join(fields))
    report.emit(args.json)
    return 0


def cmd_plot(args) -> int:
    samples = None
    if args.samples > 0:
        samples = measure_mod.sample_uniform(args.seed, args.samples)
    svg = svgplot.render_fundamental_domain(samples=samples, include_anti=args.anti)
    try:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(svg)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return 2
    print(f"wrote: {args.out}")
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tritorus", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, angles=False):
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")
        if angles:
            p.add_argument(
                "--format",
                choices=("pi-rational", "degrees", "radians"),
                default="pi-rational",
                help="angle input format (pi-rational 'p/q' means (p/q)*pi)",
            )

    p = sub.add_parser("classify", help="full type report for three interior angles")
    p.add_argument("angles", nargs=3)
    add_common(p, angles=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("map", help="torus image of three interior angles")
    p.add_argument("angles", nargs=3)
    add_common(p, angles=True)
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("invert", help="triangle preimages of a torus point")
    p.add_argument("xi1")
    p.add_argument("xi2")
    add_common(p)
    p.set_defaults(func=cmd_invert)

    p = sub.add_parser("orbit", help="symmetry orbit of a torus point")
    p.add_argument("xi1")
    p.add_argument("xi2")
    add_common(p)
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("measure", help="analytic measures and optional Monte Carlo")
    p.add_argument("--samples", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    add_common(p)
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("path", help="trace a straight path and report locus crossings")
    p.add_argument("start", nargs="+", help="two torus coordinates (p/q of pi) or three angles")
    p.add_argument("--velocity", type=float, nargs=2, required=True)
    p.add_argument("--steps", type=int, default=200)
    p.add_argument("--step-size", type=float, default=0.05)
    add_common(p, angles=True)
    p.set_defaults(func=cmd_path)

    p = sub.add_parser("plot", help="SVG of the fundamental domain")
    p.add_argument("--out", required=True)
    p.add_argument("--samples", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--anti", action="store_true", help="include anti-isosceles/anti-right loci")
    add_common(p)
    p.set_defaults(func=cmd_plot)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
