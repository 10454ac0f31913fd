"""The transversal-point construction relative to an arbitrary axis and center.

This generalizes :mod:`.double_projection`: instead of the x-axis and the
coordinate origin, any line ``axis`` and any point ``origin`` on it act as the
reference pair.  Writing S, T for the crossings of the transversal with the
parallel pair, s_axis/t_axis for the crossings of the pair with the axis, and
z_s/z_t for the rays joining the center to S and T, there is a unique point P
on the transversal such that, on the parallel to the axis through P, the
crossing with z_t sits at the same (squared) distance from P as s_axis does
from the center, and likewise with z_s and t_axis swapped in.

Two degenerate dispatches exist: when S itself lies on the axis the point is
S (``t_p`` collapses onto the center), and symmetrically for T.  In the main
case the point is computed by mapping the scene into the standard frame
(center at the coordinate origin, axis onto the x-axis, the parallel pair
vertical), running the horizontal-case construction there, and mapping back.
The affine map preserves every incidence, parallelism, same-sidedness and
parallel-segment length equality involved, which is exactly what the result
contract asserts.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Optional

from .double_projection import TransversalScene, p_hor
from .errors import (
    InconsistentError,
    OriginOffAxisError,
    OriginOnLineError,
    ParallelLinesError,
    PreconditionError,
)
from .kernel import (
    Direction,
    Line,
    Point,
    contains,
    dist_sq,
    frame_to_standard,
    intersect,
    is_parallel,
    line_from_points,
    parallel_through,
    side_of,
)


class AxisCase(Enum):
    MAIN = "MAIN"
    S_COINCIDES = "S_COINCIDES"
    T_COINCIDES = "T_COINCIDES"


@dataclass(frozen=True)
class AxisScene:
    """Parallel pair, transversal, axis, and center; validated on construction."""

    g_s: Line
    g_t: Line
    l: Line
    axis: Line
    origin: Point

    def __post_init__(self):
        if not is_parallel(self.g_s, self.g_t):
            raise PreconditionError("the two base lines must be parallel")
        if is_parallel(self.l, self.g_s):
            raise ParallelLinesError("transversal is parallel to the base lines")
        if is_parallel(self.axis, self.g_s):
            raise PreconditionError("axis is parallel to the base lines")
        if self.axis == self.l:
            raise PreconditionError("axis coincides with the transversal")
        if not contains(self.axis, self.origin):
            raise OriginOffAxisError("center does not lie on the axis")
        if contains(self.l, self.origin):
            raise OriginOnLineError("center lies on the transversal")
        # Without this the main case degenerates: the center would sit on one
        # of the two rays, collapsing the same-side claims to sign zero.
        if contains(self.g_s, self.origin) or contains(self.g_t, self.origin):
            raise PreconditionError("center lies on one of the base lines")


@dataclass(frozen=True)
class AxisProjectionResult:
    p: Point
    axis_p: Line
    s_p: Optional[Point]
    t_p: Optional[Point]
    case_tag: AxisCase
    s_axis: Point
    t_axis: Point
    # context carried along for verification and rendering
    scene: AxisScene
    s: Point
    t: Point
    z_s: Line
    z_t: Line


def construct_p(scene: AxisScene, transversal: Optional[Direction] = None) -> AxisProjectionResult:
    """Build the distinguished point and all witness geometry.

    ``transversal`` is the direction sent to (0,1) by the reduction frame.
    It defaults to the direction of the parallel pair, which guarantees the
    mapped pair is vertical; any direction not parallel to the axis yields
    the same point (the construction is incidence-defined), a fact the check
    suite exercises.

    Raises InconsistentError if any contract check fails after construction;
    that signals a bug, not bad input.
    """
    s = intersect(scene.l, scene.g_s)
    t = intersect(scene.l, scene.g_t)
    s_axis = intersect(scene.g_s, scene.axis)
    t_axis = intersect(scene.g_t, scene.axis)
    z_s = line_from_points(scene.origin, s)
    z_t = line_from_points(scene.origin, t)

    if s_axis == s:
        result = AxisProjectionResult(
            p=s, axis_p=scene.axis, s_p=None, t_p=scene.origin,
            case_tag=AxisCase.S_COINCIDES, s_axis=s_axis, t_axis=t_axis,
            scene=scene, s=s, t=t, z_s=z_s, z_t=z_t,
        )
    elif t_axis == t:
        result = AxisProjectionResult(
            p=t, axis_p=scene.axis, s_p=scene.origin, t_p=None,
            case_tag=AxisCase.T_COINCIDES, s_axis=s_axis, t_axis=t_axis,
            scene=scene, s=s, t=t, z_s=z_s, z_t=z_t,
        )
    else:
        frame = frame_to_standard(
            scene.origin, scene.axis,
            transversal if transversal is not None else scene.g_s.direction(),
        )
        image = TransversalScene(
            g_s=frame.apply_line(scene.g_s),
            g_t=frame.apply_line(scene.g_t),
            l=frame.apply_line(scene.l),
        )
        p = frame.inverse().apply(p_hor(image).point)
        axis_p = parallel_through(scene.axis, p)
        result = AxisProjectionResult(
            p=p, axis_p=axis_p,
            s_p=intersect(z_s, axis_p), t_p=intersect(z_t, axis_p),
            case_tag=AxisCase.MAIN, s_axis=s_axis, t_axis=t_axis,
            scene=scene, s=s, t=t, z_s=z_s, z_t=z_t,
        )

    checks = verify_p2(result)
    bad = [name for name, ok in checks.items() if not ok]
    if bad:
        raise InconsistentError(f"construction violated its own contract: {', '.join(bad)}")
    return result


def verify_p2(result: AxisProjectionResult) -> Dict[str, bool]:
    """Evaluate every contract condition of a result as named booleans.

    Pure re-checking: nothing here feeds back into the construction, so a
    all-true report genuinely certifies the geometry.
    """
    scene = result.scene
    checks = {
        "point_on_transversal": contains(scene.l, result.p),
        "own_axis_parallel": is_parallel(result.axis_p, scene.axis),
        "point_on_own_axis": contains(result.axis_p, result.p),
    }
    if result.case_tag is AxisCase.MAIN:
        side_s_axis = side_of(result.z_t, result.s_axis)
        side_t_axis = side_of(result.z_s, result.t_axis)
        checks.update(
            {
                "distance_s": dist_sq(result.s_axis, scene.origin)
                == dist_sq(result.p, result.t_p),
                "distance_t": dist_sq(result.t_axis, scene.origin)
                == dist_sq(result.p, result.s_p),
                "same_side_s": side_s_axis == side_of(result.z_t, result.p)
                and side_s_axis != 0,
                "same_side_t": side_t_axis == side_of(result.z_s, result.p)
                and side_t_axis != 0,
            }
        )
    elif result.case_tag is AxisCase.S_COINCIDES:
        checks.update(
            {
                "point_is_s": result.p == result.s and result.p == result.s_axis,
                "own_axis_is_axis": result.axis_p == scene.axis,
                "s_ray_is_axis": result.z_s == scene.axis,
                "companion_is_center": result.t_p == scene.origin,
                "distance_s": dist_sq(result.s_axis, scene.origin)
                == dist_sq(result.p, result.t_p),
            }
        )
    else:
        checks.update(
            {
                "point_is_t": result.p == result.t and result.p == result.t_axis,
                "own_axis_is_axis": result.axis_p == scene.axis,
                "t_ray_is_axis": result.z_t == scene.axis,
                "companion_is_center": result.s_p == scene.origin,
                "distance_t": dist_sq(result.t_axis, scene.origin)
                == dist_sq(result.p, result.s_p),
            }
        )
    return checks
