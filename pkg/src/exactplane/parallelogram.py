"""A sample-independent intercept built from two parallel lines.

Take parallel lines ``g`` and ``p`` with ``g`` missing the origin, a sample
point on ``g`` off the x-axis, and a spread ``epsilon``.  Shift the sample
horizontally by -epsilon and +epsilon to get the source points S and T,
project both through the origin onto ``p`` (giving s_bar and t_bar), and
reflect the projections through the origin.  The four points s_bar, t_bar,
-s_bar, -t_bar form a parallelogram centred at the origin, and the line
through t_bar and -s_bar crosses the x-axis at a value ``nu`` that does not
depend on which sample generated it:

    nu = (y-intercept of p) * epsilon / (y-intercept of g)

for non-vertical lines, and the same with x-intercepts when ``g`` and ``p``
are vertical.  The mirror line through s_bar and -t_bar crosses at ``-nu``,
and swapping the two coordinate axes (vertical spread, y-axis intercept)
produces the analogous invariant ``mu``.

``nu``/``build_witness`` always run the full geometric pipeline; the closed
forms live in separate functions so tests can play them against each other.
epsilon is normalized to its absolute value on scene construction: a negative
spread merely swaps S and T.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .errors import (
    CaseUnavailableError,
    InconsistentError,
    OriginSampleError,
    ParallelProjectionError,
    PreconditionError,
)
from .kernel import (
    ORIGIN,
    X_AXIS,
    Line,
    Point,
    contains,
    intersect,
    is_parallel,
    line_from_points,
    reflect_through,
    scalar,
)


@dataclass(frozen=True)
class StripScene:
    g: Line
    p: Line
    epsilon: Fraction
    sample: Point

    def __post_init__(self):
        object.__setattr__(self, "epsilon", abs(scalar(self.epsilon)))
        if not is_parallel(self.g, self.p):
            raise PreconditionError("the two lines must be parallel")
        if contains(self.g, ORIGIN):
            raise PreconditionError("source line passes through the origin")
        if not contains(self.g, self.sample):
            raise PreconditionError("sample point does not lie on the source line")

    def shifted_sources(self) -> Tuple[Point, Point]:
        """S and T: the sample moved left and right by the spread."""
        return (
            Point(self.sample.x - self.epsilon, self.sample.y),
            Point(self.sample.x + self.epsilon, self.sample.y),
        )


@dataclass(frozen=True)
class ParallelogramWitness:
    """The full construction record; ``nu`` is the invariant intercept."""

    s: Point
    t: Point
    s_bar: Point
    t_bar: Point
    neg_s_bar: Point
    neg_t_bar: Point
    nu: Fraction
    connecting_line: Line


def project_through_origin(q: Point, target: Line) -> Point:
    """Central projection: where the ray through the origin and ``q`` meets
    ``target``.  A point already on the target is its own image."""
    if q == ORIGIN:
        raise OriginSampleError("cannot project the origin through itself")
    ray = line_from_points(ORIGIN, q)
    if is_parallel(ray, target):
        raise ParallelProjectionError(
            "ray through the origin is parallel to the projection line"
        )
    return intersect(ray, target)


def _require_off_x_axis(scene: StripScene) -> None:
    if scene.sample.y == 0:
        raise PreconditionError("sample point lies on the x-axis")


def _require_sloped(scene: StripScene) -> Tuple[Fraction, Fraction, Fraction]:
    """(slope, g intercept, p intercept) for the non-vertical closed forms."""
    if scene.g.is_vertical:
        raise CaseUnavailableError("closed form needs non-vertical lines")
    return scene.g.slope(), scene.g.y_intercept(), scene.p.y_intercept()


def build_witness(scene: StripScene) -> ParallelogramWitness:
    """Run the geometric pipeline: shift, project, reflect, connect, intersect."""
    _require_off_x_axis(scene)
    s, t = scene.shifted_sources()
    s_bar = project_through_origin(s, scene.p)
    t_bar = project_through_origin(t, scene.p)
    neg_s_bar = reflect_through(s_bar, ORIGIN)
    neg_t_bar = reflect_through(t_bar, ORIGIN)
    if t_bar == neg_s_bar:
        # all four corners collapsed onto the origin (p runs through it)
        connecting = _collapsed_line(scene)
        nu_value = Fraction(0)
    else:
        connecting = line_from_points(t_bar, neg_s_bar)
        if is_parallel(connecting, X_AXIS):
            raise InconsistentError(
                "connecting line is horizontal, which valid input cannot produce"
            )
        nu_value = intersect(connecting, X_AXIS).x
    return ParallelogramWitness(
        s=s, t=t, s_bar=s_bar, t_bar=t_bar,
        neg_s_bar=neg_s_bar, neg_t_bar=neg_t_bar,
        nu=nu_value, connecting_line=connecting,
    )


def _collapsed_line(scene: StripScene) -> Line:
    # Any line through the origin (other than the x-axis itself) carries the
    # collapsed corners and the zero intercept; reuse the closed form where
    # it exists, the y-axis otherwise.
    if scene.g.is_vertical:
        return Line(1, 0, 0)
    return connecting_line(scene)


def connecting_line(scene: StripScene) -> Line:
    """Closed-form implicit equation of the line through t_bar and -s_bar.

    Only for non-vertical scenes.  The x-coefficient is sample.y times the
    g-intercept, never zero, so the formula stays valid when the connecting
    line happens to be vertical and when the corners collapse.
    """
    m, b_g, b_p = _require_sloped(scene)
    _require_off_x_axis(scene)
    _require_transversal_rays(b_g, m, scene.epsilon)
    x, y = scene.sample.x, scene.sample.y
    return Line(
        y * b_g,
        -(x * b_g + m * scene.epsilon ** 2),
        y * b_p * scene.epsilon,
    )


def _require_transversal_rays(b_g: Fraction, m: Fraction, eps: Fraction) -> None:
    # b_g +- m*eps = 0 exactly when the ray through one shifted source is
    # parallel to the line pair, which the construction forbids.
    if b_g + m * eps == 0 or b_g - m * eps == 0:
        raise ParallelProjectionError(
            "ray through a shifted source is parallel to the line pair"
        )


def s_bar_t_bar_closed_form(scene: StripScene) -> Tuple[Point, Point]:
    """Direct coordinates of the two projections, non-vertical scenes only."""
    m, b_g, b_p = _require_sloped(scene)
    _require_off_x_axis(scene)
    _require_transversal_rays(b_g, m, scene.epsilon)
    x, y = scene.sample.x, scene.sample.y
    f_s = b_p / (b_g + m * scene.epsilon)
    f_t = b_p / (b_g - m * scene.epsilon)
    return (
        Point(f_s * (x - scene.epsilon), f_s * y),
        Point(f_t * (x + scene.epsilon), f_t * y),
    )


def nu(scene: StripScene) -> Fraction:
    """The invariant x-axis intercept, via the full pipeline."""
    return build_witness(scene).nu


def nu_closed_form(scene: StripScene) -> Fraction:
    """intercept(p) * epsilon / intercept(g); never consults the sample."""
    _require_off_x_axis(scene)
    if scene.g.is_vertical:
        r = scene.g.x_intercept()
        if scene.sample.x - scene.epsilon == 0 or scene.sample.x + scene.epsilon == 0:
            raise ParallelProjectionError(
                "ray through a shifted source is parallel to the line pair"
            )
        return scene.p.x_intercept() * scene.epsilon / r
    m, b_g, b_p = _require_sloped(scene)
    _require_transversal_rays(b_g, m, scene.epsilon)
    return b_p * scene.epsilon / b_g


def minus_nu_check(scene: StripScene) -> Fraction:
    """x-axis intercept of the mirror line through s_bar and -t_bar.

    Always equals -nu: the mirror line is the origin-reflection of the
    connecting line.  Computed from points, not from that argument, so the
    equality is worth testing.
    """
    w = build_witness(scene)
    if w.s_bar == w.neg_t_bar:
        return Fraction(0)
    mirror = line_from_points(w.s_bar, w.neg_t_bar)
    if is_parallel(mirror, X_AXIS):
        raise InconsistentError(
            "mirror line is horizontal, which valid input cannot produce"
        )
    return intersect(mirror, X_AXIS).x


def swap_line(l: Line) -> Line:
    """Image of a line under swapping the two coordinates."""
    return Line(l.b, l.a, l.c)


def swap_scene(scene: StripScene) -> StripScene:
    return StripScene(
        g=swap_line(scene.g),
        p=swap_line(scene.p),
        epsilon=scene.epsilon,
        sample=Point(scene.sample.y, scene.sample.x),
    )


def mu(scene: StripScene) -> Fraction:
    """The coordinate-swapped invariant: vertical spread, y-axis intercept.

    Requires sample.x != 0.  Everything reduces to nu of the swapped scene.
    """
    if scene.sample.x == 0:
        raise PreconditionError("sample point lies on the y-axis")
    return nu(swap_scene(scene))


def mu_closed_form(scene: StripScene) -> Fraction:
    if scene.sample.x == 0:
        raise PreconditionError("sample point lies on the y-axis")
    return nu_closed_form(swap_scene(scene))


def mu_witness(scene: StripScene) -> ParallelogramWitness:
    """The mu construction record, expressed in the original coordinates.

    ``nu`` holds the mu value; corners are the projections of the vertically
    shifted sources; the connecting line crosses the y-axis at mu.
    """
    if scene.sample.x == 0:
        raise PreconditionError("sample point lies on the y-axis")
    w = build_witness(swap_scene(scene))

    def back(q: Point) -> Point:
        return Point(q.y, q.x)

    return ParallelogramWitness(
        s=back(w.s), t=back(w.t),
        s_bar=back(w.s_bar), t_bar=back(w.t_bar),
        neg_s_bar=back(w.neg_s_bar), neg_t_bar=back(w.neg_t_bar),
        nu=w.nu, connecting_line=swap_line(w.connecting_line),
    )
