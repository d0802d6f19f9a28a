import math

import pytest

from tritorus.pathtrace import (
    LOCUS_FORMS,
    EventKind,
    ZeroVelocity,
    orientation_sign,
    trace_path,
)
from tritorus.torus import LocusId

TWO_PI = 2 * math.pi


def residue_at(locus, position):
    a, b, c = LOCUS_FORMS[locus]
    r = (a * position[0] + b * position[1] - c + math.pi) % TWO_PI - math.pi
    return abs(r)


class TestTracePath:
    def test_zero_velocity_rejected(self):
        with pytest.raises(ZeroVelocity):
            trace_path((0.1, 0.2), (0.0, 0.0), 10, 0.1)

    def test_start_and_end_events(self):
        events = trace_path((0.5, 1.5), (1.0, 0.0), 10, 0.1)
        assert events[0].kind is EventKind.START
        assert events[-1].kind is EventKind.END
        assert events[-1].step_index == 10

    def test_diagonal_velocity_never_flips(self):
        # moving along (1,1) keeps xi2-xi1 constant: no D_C crossing, and a
        # start inside the positive region stays clear of D_A/D_B crossings
        # only at the wrap lines, which do flip nothing about orientation
        start = (2 * math.pi / 3, 2 * math.pi / 3 + 0.1)
        events = trace_path(start, (1.0, 1.0), 100, 0.05)
        flips = [e for e in events if e.kind is EventKind.ORIENTATION_FLIP]
        for e in flips:
            assert e.locus is not LocusId.D_C

    def test_orientation_flip_at_diagonal(self):
        start = (2 * math.pi / 3, 4 * math.pi / 3)
        events = trace_path(start, (1.0, 0.0), 80, 0.05)
        flips = [e for e in events if e.kind is EventKind.ORIENTATION_FLIP]
        assert flips and flips[0].locus is LocusId.D_C
        refined = flips[0].refined_position
        assert residue_at(LocusId.D_C, refined) <= 1e-9
        assert refined[1] == pytest.approx(4 * math.pi / 3, abs=1e-9)

    def test_events_in_step_order(self):
        events = trace_path((0.3, 2.1), (1.3, -0.7), 200, 0.05)
        steps = [e.step_index for e in events]
        assert steps == sorted(steps)

    def test_all_crossings_satisfy_residue_tolerance(self):
        events = trace_path((0.3, 2.1), (1.3, -0.7), 200, 0.05)
        crossings = [e for e in events if e.kind is EventKind.LOCUS_CROSSING]
        assert crossings
        for e in crossings:
            assert residue_at(e.locus, e.refined_position) <= 1e-9

    def test_orientation_changes_across_degenerate_crossing(self):
        velocity = (1.0, 0.0)
        events = trace_path((2 * math.pi / 3, 4 * math.pi / 3), velocity, 80, 0.05)
        flip = next(e for e in events if e.kind is EventKind.ORIENTATION_FLIP)
        eps = 1e-6
        before = (flip.refined_position[0] - eps, flip.refined_position[1])
        after = (flip.refined_position[0] + eps, flip.refined_position[1])
        assert orientation_sign(before) == 1
        assert orientation_sign(after) == -1


class TestLocusForms:
    def test_forms_agree_with_exact_membership(self):
        from fractions import Fraction

        from tritorus.angles import PiRational
        from tritorus.torus import TorusPoint, in_locus

        import random

        rng = random.Random(3)
        for _ in range(200):
            x = Fraction(rng.randint(0, 239), 120)
            y = Fraction(rng.randint(0, 239), 120)
            p = TorusPoint(PiRational.from_fraction(x), PiRational.from_fraction(y))
            pos = (p.xi1.radians, p.xi2.radians)
            for locus, (a, b, c) in LOCUS_FORMS.items():
                near = residue_at(locus, pos) <= 1e-9
                assert near == in_locus(p, locus)
