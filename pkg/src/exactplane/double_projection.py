"""The two distinguished points on a transversal of a parallel line pair.

Setup: two parallel lines ``g_s`` and ``g_t``, crossed by a transversal ``l``
that misses the origin.  Write S and T for the crossings of ``l`` with the
pair, and Z_S, Z_T for the rays joining the origin to S and T.  There is then
exactly one point on ``l`` whose copy shifted left by the x-intercept of
``g_s`` lands on Z_T while the copy shifted by the x-intercept of ``g_t``
lands on Z_S (the horizontal case), and one point with the analogous property
for downward shifts by the y-intercepts (the vertical case).

Each point is computed three independent ways:

* ``p_hor`` / ``p_ver``: the quotient formulas for the ray parameter ``rho``,
  obtained by eliminating the collinearity factors from the defining
  equations.  Both eliminations must give the same value; the pair is exposed
  through ``rho_pair`` / ``rho_tilde_pair`` so that identity can be tested.
* ``p_hor_closed_form`` / ``p_ver_closed_form``: explicit coordinates in the
  intercept/slope parameters, dispatched over every axis-parallel special
  case.
* ``oracle_point``: a definitional solve.  Parametrize the candidate along
  ``l`` and impose each shifted-membership condition as a tiny linear system;
  the two systems must agree on the parameter.

Agreement of all three is the module's central correctness property.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Tuple

from .errors import (
    CaseUnavailableError,
    InconsistentError,
    OriginOnLineError,
    ParallelLinesError,
    PreconditionError,
    SingularSystemError,
)
from .kernel import (
    ORIGIN,
    Direction,
    Line,
    Point,
    contains,
    intersect,
    is_parallel,
    translate,
)
from .linsolve import solve_unique


class ProjectionCase(Enum):
    HORIZONTAL_A = "HORIZONTAL_A"
    VERTICAL_B = "VERTICAL_B"


@dataclass(frozen=True)
class TransversalScene:
    """A parallel pair plus a transversal; validated on construction."""

    g_s: Line
    g_t: Line
    l: Line

    def __post_init__(self):
        if not is_parallel(self.g_s, self.g_t):
            raise PreconditionError("the two base lines must be parallel")
        if is_parallel(self.l, self.g_s):
            raise ParallelLinesError("transversal is parallel to the base lines")
        if contains(self.l, ORIGIN):
            raise OriginOnLineError("transversal passes through the origin")

    def crossings(self) -> Tuple[Point, Point]:
        """S and T: where the transversal meets g_s and g_t."""
        return intersect(self.l, self.g_s), intersect(self.l, self.g_t)


def axis_intercept(g: Line, which: str) -> Fraction:
    """Intercept of ``g`` with the x-axis ("x") or y-axis ("y")."""
    if which == "x":
        return g.x_intercept()
    if which == "y":
        return g.y_intercept()
    raise ValueError(f"axis must be 'x' or 'y', not {which!r}")


@dataclass(frozen=True)
class ProjectionWitness:
    """A constructed point plus everything needed to re-check its defining
    equations: the ray parameter rho and the collinearity factors alpha
    (for the T-ray) and beta (for the S-ray)."""

    point: Point
    rho: Fraction
    alpha: Fraction
    beta: Fraction
    s: Point
    t: Point
    a_or_b_s: Fraction
    a_or_b_t: Fraction
    case_tag: ProjectionCase


def _require_horizontal_case(scene: TransversalScene) -> Tuple[Fraction, Fraction]:
    if scene.g_s.is_horizontal:
        raise CaseUnavailableError(
            "horizontal-shift point does not exist when the base lines are horizontal"
        )
    return scene.g_s.x_intercept(), scene.g_t.x_intercept()


def _require_vertical_case(scene: TransversalScene) -> Tuple[Fraction, Fraction]:
    if scene.g_s.is_vertical:
        raise CaseUnavailableError(
            "vertical-shift point does not exist when the base lines are vertical"
        )
    return scene.g_s.y_intercept(), scene.g_t.y_intercept()


def _ray_denominator(w: Direction, p: Point) -> Fraction:
    # w.dx*p.y - w.dy*p.x = 0 iff p sits on the origin line with direction w,
    # i.e. iff the transversal passes through the origin.
    value = w.dx * p.y - w.dy * p.x
    if value == 0:
        raise OriginOnLineError("transversal passes through the origin")
    return value


def rho_pair(scene: TransversalScene) -> Tuple[Fraction, Fraction]:
    """The two independent eliminations of the horizontal-case parameter.

    Both components are always equal on valid input; returning the raw pair
    lets callers assert that instead of trusting it.
    """
    a_s, a_t = _require_horizontal_case(scene)
    s, t = scene.crossings()
    w = scene.l.direction()
    rho_1 = (s.y * t.x - s.x * t.y + a_s * t.y) / _ray_denominator(w, t)
    rho_2 = (s.y * a_t) / _ray_denominator(w, s)
    return rho_1, rho_2


def rho_tilde_pair(scene: TransversalScene) -> Tuple[Fraction, Fraction]:
    """Vertical-case counterpart of :func:`rho_pair`."""
    b_s, b_t = _require_vertical_case(scene)
    s, t = scene.crossings()
    w = scene.l.direction()
    rho_1 = (s.x * t.y - s.y * t.x + b_s * t.x) / -_ray_denominator(w, t)
    rho_2 = (s.x * b_t) / -_ray_denominator(w, s)
    return rho_1, rho_2


def p_hor(scene: TransversalScene) -> ProjectionWitness:
    """The horizontal-case point, with full witness data.

    The witness satisfies: point on ``l``; (point.x - a_s, point.y) equals
    alpha * T (hence lies on Z_T); (point.x - a_t, point.y) equals beta * S.
    """
    a_s, a_t = _require_horizontal_case(scene)
    rho_1, rho_2 = rho_pair(scene)
    if rho_1 != rho_2:
        raise InconsistentError(
            f"horizontal-case eliminations disagree: {rho_1} vs {rho_2}"
        )
    s, t = scene.crossings()
    w = scene.l.direction()
    point = translate(s, w, rho_1)
    alpha = point.y / t.y if t.y != 0 else (point.x - a_s) / t.x
    beta = point.y / s.y if s.y != 0 else (point.x - a_t) / s.x
    return ProjectionWitness(
        point=point,
        rho=rho_1,
        alpha=alpha,
        beta=beta,
        s=s,
        t=t,
        a_or_b_s=a_s,
        a_or_b_t=a_t,
        case_tag=ProjectionCase.HORIZONTAL_A,
    )


def p_ver(scene: TransversalScene) -> ProjectionWitness:
    """The vertical-case point: shifts go down by the y-intercepts."""
    b_s, b_t = _require_vertical_case(scene)
    rho_1, rho_2 = rho_tilde_pair(scene)
    if rho_1 != rho_2:
        raise InconsistentError(
            f"vertical-case eliminations disagree: {rho_1} vs {rho_2}"
        )
    s, t = scene.crossings()
    w = scene.l.direction()
    point = translate(s, w, rho_1)
    alpha = point.x / t.x if t.x != 0 else (point.y - b_s) / t.y
    beta = point.x / s.x if s.x != 0 else (point.y - b_t) / s.y
    return ProjectionWitness(
        point=point,
        rho=rho_1,
        alpha=alpha,
        beta=beta,
        s=s,
        t=t,
        a_or_b_s=b_s,
        a_or_b_t=b_t,
        case_tag=ProjectionCase.VERTICAL_B,
    )


def _nonzero(value: Fraction, what: str) -> Fraction:
    if value == 0:
        raise SingularSystemError(f"zero denominator in closed form ({what})")
    return value


def p_hor_closed_form(scene: TransversalScene) -> Point:
    """Explicit coordinates of the horizontal-case point.

    Dispatch: base-line orientation first, then transversal orientation.
    Every branch is a distinct published formula; all agree with
    :func:`p_hor` and :func:`oracle_point`.
    """
    g_s, g_t, l = scene.g_s, scene.g_t, scene.l
    if g_s.is_horizontal:
        raise CaseUnavailableError(
            "horizontal-shift point does not exist when the base lines are horizontal"
        )
    if g_s.is_vertical:
        a_s, a_t = g_s.x_intercept(), g_t.x_intercept()
        if l.is_horizontal:
            return Point(a_s + a_t, l.y_intercept())
        # l is not vertical here: it cannot be parallel to the base lines
        m_l, b_l = l.slope(), l.y_intercept()
        x = (b_l * (a_s + a_t) + m_l * a_s * a_t) / _nonzero(b_l, "transversal offset")
        return Point(x, m_l * x + b_l)
    m = g_s.slope()
    b_s, b_t = g_s.y_intercept(), g_t.y_intercept()
    if l.is_horizontal:
        b_l = l.y_intercept()
        return Point((b_l - b_s - b_t) / m, b_l)
    if l.is_vertical:
        a_l = _nonzero(l.x_intercept(), "transversal x-intercept")
        return Point(a_l, m * a_l + b_s + b_t + b_s * b_t / (a_l * m))
    m_l, b_l = l.slope(), l.y_intercept()
    den = _nonzero(b_l * m * (m - m_l), "general-position denominator")
    x = (b_l * b_l * m + b_s * b_t * m_l - m * b_l * (b_s + b_t)) / den
    y = (b_l * b_l * m * m + b_s * b_t * m_l * m_l - m * m_l * b_l * (b_s + b_t)) / den
    return Point(x, y)


def p_ver_closed_form(scene: TransversalScene) -> Point:
    """Explicit coordinates of the vertical-case point."""
    g_s, g_t, l = scene.g_s, scene.g_t, scene.l
    if g_s.is_vertical:
        raise CaseUnavailableError(
            "vertical-shift point does not exist when the base lines are vertical"
        )
    if g_s.is_horizontal:
        b_s, b_t = g_s.y_intercept(), g_t.y_intercept()
        if l.is_vertical:
            return Point(l.x_intercept(), b_s + b_t)
        m_l, b_l = l.slope(), l.y_intercept()
        x = (b_t - b_l) * (b_l - b_s) / _nonzero(b_l * m_l, "sloped-transversal denominator")
        return Point(x, (b_l * b_s + b_l * b_t - b_s * b_t) / b_l)
    m = g_s.slope()
    b_s, b_t = g_s.y_intercept(), g_t.y_intercept()
    if l.is_horizontal:
        b_l = _nonzero(l.y_intercept(), "transversal y-intercept")
        return Point((b_l - b_s) * (b_l - b_t) / (b_l * m), b_l)
    if l.is_vertical:
        a_l = l.x_intercept()
        return Point(a_l, m * a_l + b_t + b_s)
    m_l, b_l = l.slope(), l.y_intercept()
    den = _nonzero(b_l * (m - m_l), "general-position denominator")
    x = (b_l - b_t) * (b_l - b_s) / den
    y = (m_l * (b_s * b_t - b_l * b_s - b_l * b_t) + b_l * b_l * m) / den
    return Point(x, y)


def oracle_point(scene: TransversalScene, case: ProjectionCase) -> Point:
    """Definitional solve, independent of the elimination formulas.

    The candidate is S + t*w for the transversal direction w.  Each of the
    two shifted-membership conditions becomes a 2x2 linear system, one in
    (t, alpha), one in (t, beta); both are solved exactly and must agree
    on t.  Disagreement would falsify the uniqueness claim, so it surfaces
    as an inconsistency rather than an answer.
    """
    if case is ProjectionCase.HORIZONTAL_A:
        shift_s, shift_t = _require_horizontal_case(scene)
    else:
        shift_s, shift_t = _require_vertical_case(scene)
    s, t_pt = scene.crossings()
    w = scene.l.direction()
    if case is ProjectionCase.HORIZONTAL_A:
        # point.x - shift_s = alpha*t.x, point.y = alpha*t.y; unknowns (t, alpha)
        first = solve_unique(
            [[w.dx, -t_pt.x], [w.dy, -t_pt.y]], [shift_s - s.x, -s.y]
        )
        second = solve_unique(
            [[w.dx, -s.x], [w.dy, -s.y]], [shift_t - s.x, -s.y]
        )
    else:
        # point.x = alpha*t.x, point.y - shift_s = alpha*t.y
        first = solve_unique(
            [[w.dx, -t_pt.x], [w.dy, -t_pt.y]], [-s.x, shift_s - s.y]
        )
        second = solve_unique(
            [[w.dx, -s.x], [w.dy, -s.y]], [-s.x, shift_t - s.y]
        )
    if first[0] != second[0]:
        raise InconsistentError(
            f"membership systems disagree on the ray parameter: {first[0]} vs {second[0]}"
        )
    return translate(s, w, first[0])
