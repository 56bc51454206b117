"""Exact monotone lifts of orientation-preserving linear maps on phases.

A 2x2 rational matrix with positive determinant acts on rays of the plane,
hence on phases modulo full turns.  Together with one pinned value (the
image of phase 1/2, the "anchor") it determines a unique strictly
increasing lift on the real phase line.  The lift is evaluated by walking
the sector arc from the base direction (0, 1) to the target direction,
splitting at vector mediants until every image step spans less than a
quarter turn, and accumulating exact sub-half-turn phase differences.
Pure integer/rational arithmetic throughout.
"""

from __future__ import annotations

from fractions import Fraction

from .charges import DomainError, Phase, cross, dot, normalize_direction

Mat = tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]

_BASE_DIR = (0, 1)  # direction of phase 1/2


def mat(rows) -> Mat:
    (a, b), (c, d) = rows
    return ((Fraction(a), Fraction(b)), (Fraction(c), Fraction(d)))


def mat_apply(m: Mat, v):
    (a, b), (c, d) = m
    x, y = v
    return (a * x + b * y, c * x + d * y)


def mat_mul(m: Mat, n: Mat) -> Mat:
    (a, b), (c, d) = m
    (e, f), (g, h) = n
    return ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))


def mat_det(m: Mat) -> Fraction:
    (a, b), (c, d) = m
    return a * d - b * c


def mat_inv(m: Mat) -> Mat:
    (a, b), (c, d) = m
    det = a * d - b * c
    if det == 0:
        raise DomainError("matrix is singular")
    return ((d / det, -b / det), (-c / det, a / det))


def identity_mat() -> Mat:
    return mat([[1, 0], [0, 1]])


def _arc_path(m: Mat, u, v, depth: int = 0) -> list:
    """Subdivide the arc [u, v] until consecutive images span < pi/2."""
    if cross(u, v) == 0:
        return []
    if depth > 4000:
        raise DomainError("mediant bisection failed to terminate")
    a = mat_apply(m, u)
    b = mat_apply(m, v)
    if dot(a, b) > 0:
        return [v]
    w = (u[0] + v[0], u[1] + v[1])
    return _arc_path(m, u, w, depth + 1) + _arc_path(m, w, v, depth + 1)


def _step(current: Phase, new_dir: tuple[int, int]) -> Phase:
    """Advance a running phase by a sub-half-turn step to a new direction.

    The true angular difference lies in (-1/2, 1/2), so the new strip shift
    is pinned by the sign of dot/cross with the previous direction.
    """
    d = dot(current.dir, new_dir)
    if d > 0:
        m = 0
    else:
        m = -1 if cross(current.dir, new_dir) > 0 else 1
    return Phase(new_dir, current.shift + m)


def lift_on_direction(m: Mat, anchor: Phase, target: tuple[int, int]) -> Phase:
    """Value of the lift pinned by anchor at the sector direction `target`."""
    if mat_det(m) <= 0:
        raise DomainError("lift requires positive determinant")
    current = anchor
    for node in _arc_path(m, _BASE_DIR, target):
        d, _ = normalize_direction(mat_apply(m, node))
        current = _step(current, d)
    return current


def lift_phase(m: Mat, anchor: Phase, p: Phase) -> Phase:
    """Unique strictly increasing lift of the ray action of m sending 1/2 to anchor."""
    q = lift_on_direction(m, anchor, p.dir)
    return q + p.shift


def principal_anchor(m: Mat, winding: int = 0) -> Phase:
    """Anchor with value in (0, 2], plus an even extra winding.

    Lifts of the same ray action differ by full turns, so the free data is
    one even integer.
    """
    d, flipped = normalize_direction(mat_apply(m, _BASE_DIR))
    return Phase(d, (1 if flipped else 0) + 2 * winding)


def compose_anchor(m_outer: Mat, anchor_outer: Phase, anchor_inner: Phase) -> Phase:
    """Anchor of the composite lift f_outer o f_inner."""
    return lift_phase(m_outer, anchor_outer, anchor_inner)


def invert_anchor(m: Mat, anchor: Phase) -> Phase:
    """Anchor of the inverse lift: the unique p with f(p) = 1/2."""
    minv = mat_inv(m)
    d, _ = normalize_direction(mat_apply(minv, _BASE_DIR))
    probe = Phase(d, 0)
    image = lift_phase(m, anchor, probe)
    if image.dir != _BASE_DIR:
        raise DomainError("inconsistent lift data")
    return Phase(d, -image.shift)
