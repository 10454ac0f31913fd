"""Shared hypothesis strategies for exact rational geometry."""

from fractions import Fraction

from hypothesis import strategies as st

from exactplane import Direction, Line, Point

rationals = st.fractions(
    min_value=Fraction(-30), max_value=Fraction(30), max_denominator=12
)
nonzero_rationals = rationals.filter(lambda v: v != 0)

points = st.builds(Point, rationals, rationals)


def _direction_ok(pair):
    dx, dy = pair
    return dx != 0 or dy != 0


directions = st.tuples(rationals, rationals).filter(_direction_ok).map(
    lambda pair: Direction(pair[0], pair[1])
)


def _line_ok(triple):
    a, b, _ = triple
    return a != 0 or b != 0


lines = st.tuples(rationals, rationals, rationals).filter(_line_ok).map(
    lambda triple: Line(triple[0], triple[1], triple[2])
)

sloped_lines = st.tuples(nonzero_rationals, rationals).map(
    lambda mb: Line(-mb[0], 1, mb[1])
)
