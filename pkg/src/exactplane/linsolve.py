"""Exact Gaussian elimination over the rationals.

Small helper used by oracle-style computations: instead of plugging in a
closed form, state the defining linear system and solve it directly.  The
solver works on any m x n system, reports inconsistency, and insists on a
unique solution so silent underdetermination can't slip through.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence

from .errors import InconsistentError, SingularSystemError
from .kernel import ScalarLike, scalar


def solve_unique(
    rows: Sequence[Sequence[ScalarLike]], rhs: Sequence[ScalarLike]
) -> List[Fraction]:
    """Solve ``rows @ x = rhs`` exactly, requiring one and only one solution.

    Raises InconsistentError when no solution exists and SingularSystemError
    when the solution is not unique.  Overdetermined systems are fine as long
    as they pin down a single point; the constructions lean on that to check
    four equations against three unknowns.
    """
    if len(rows) != len(rhs):
        raise ValueError("matrix and right-hand side have mismatched heights")
    if not rows:
        raise ValueError("empty system")
    width = len(rows[0])
    aug = []
    for row, b in zip(rows, rhs):
        if len(row) != width:
            raise ValueError("ragged matrix")
        aug.append([scalar(v) for v in row] + [scalar(b)])

    pivot_cols = []
    r = 0
    for col in range(width):
        pivot = next((i for i in range(r, len(aug)) if aug[i][col] != 0), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = aug[r][col]
        aug[r] = [v / inv for v in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][col] != 0:
                factor = aug[i][col]
                aug[i] = [v - factor * w for v, w in zip(aug[i], aug[r])]
        pivot_cols.append(col)
        r += 1
        if r == len(aug):
            break

    for i in range(r, len(aug)):
        if aug[i][width] != 0:
            raise InconsistentError("linear system has no solution")
    if len(pivot_cols) < width:
        raise SingularSystemError("linear system is underdetermined")

    solution = [Fraction(0)] * width
    for i, col in enumerate(pivot_cols):
        solution[col] = aug[i][width]
    return solution
