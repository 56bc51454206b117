"""Stability conditions as orbit translates of the standard one.

A stability condition is recorded as the group element (rational plane
matrix with positive determinant, plus the pinned image of phase 1/2)
that carries the standard condition to it.  The charge side acts by the
inverse matrix on central charges; the slicing side acts by the exact
monotone lift.  Canonical forms modulo integer base change use Gauss
reduction of the period ratio, all in rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import autoeq, lifts
from .charges import Charge, DomainError, Phase, normalize_direction

# Rational complex numbers as (re, im) pairs.
CC = tuple[Fraction, Fraction]


def cc(re, im=0) -> CC:
    return (Fraction(re), Fraction(im))


def c_add(a: CC, b: CC) -> CC:
    return (a[0] + b[0], a[1] + b[1])


def c_sub(a: CC, b: CC) -> CC:
    return (a[0] - b[0], a[1] - b[1])


def c_neg(a: CC) -> CC:
    return (-a[0], -a[1])


def c_mul(a: CC, b: CC) -> CC:
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def c_scale(n, a: CC) -> CC:
    return (n * a[0], n * a[1])


def c_div(a: CC, b: CC) -> CC:
    n = b[0] * b[0] + b[1] * b[1]
    if n == 0:
        raise DomainError("division by zero complex number")
    return ((a[0] * b[0] + a[1] * b[1]) / n, (a[1] * b[0] - a[0] * b[1]) / n)


def c_norm2(a: CC) -> Fraction:
    return a[0] * a[0] + a[1] * a[1]


@dataclass(frozen=True)
class GLPlusTilde:
    """Orientation-preserving rational plane map plus its pinned lift."""

    matrix: lifts.Mat
    anchor: Phase

    def __post_init__(self):
        if lifts.mat_det(self.matrix) <= 0:
            raise DomainError("matrix must have positive determinant")
        d, _ = normalize_direction(lifts.mat_apply(self.matrix, (0, 1)))
        if d != self.anchor.dir:
            raise DomainError("anchor direction does not match the matrix")

    @staticmethod
    def identity() -> "GLPlusTilde":
        return GLPlusTilde(lifts.identity_mat(), Phase((0, 1), 0))

    @staticmethod
    def from_matrix(rows, winding: int = 0) -> "GLPlusTilde":
        m = lifts.mat(rows)
        return GLPlusTilde(m, lifts.principal_anchor(m, winding))


def gl_compose(g: GLPlusTilde, h: GLPlusTilde) -> GLPlusTilde:
    anchor = lifts.compose_anchor(g.matrix, g.anchor, h.anchor)
    return GLPlusTilde(lifts.mat_mul(g.matrix, h.matrix), anchor)


def gl_invert(g: GLPlusTilde) -> GLPlusTilde:
    return GLPlusTilde(lifts.mat_inv(g.matrix), lifts.invert_anchor(g.matrix, g.anchor))


def gl_of_autoeq(g: autoeq.AutoEq) -> GLPlusTilde:
    return GLPlusTilde(g.plane(), g.anchor)


@dataclass(frozen=True)
class StabilityCondition:
    translate: GLPlusTilde

    @staticmethod
    def standard() -> "StabilityCondition":
        return StabilityCondition(GLPlusTilde.identity())


def central_charge_of(cond: StabilityCondition, c: Charge) -> CC:
    """Central charge: the inverse translate matrix applied to (-deg, rk)."""
    inv = lifts.mat_inv(cond.translate.matrix)
    x, y = lifts.mat_apply(inv, (-c.deg, c.rk))
    return (Fraction(x), Fraction(y))


def slicing_phase(cond: StabilityCondition, t) -> Phase:
    """The slicing reparametrization evaluated at an exactly representable t."""
    p = t if isinstance(t, Phase) else Phase.from_value(Fraction(t))
    return lifts.lift_phase(cond.translate.matrix, cond.translate.anchor, p)


def act(g: GLPlusTilde, cond: StabilityCondition) -> StabilityCondition:
    return StabilityCondition(gl_compose(g, cond.translate))


def solve_transitivity(
    c1: StabilityCondition, c2: StabilityCondition
) -> GLPlusTilde:
    """The unique group element carrying c1 to c2."""
    return gl_compose(c2.translate, gl_invert(c1.translate))


def act_autoeq(g: autoeq.AutoEq, cond: StabilityCondition) -> StabilityCondition:
    """Auto-equivalence action: precompose the central charge with the charge
    action of g (convention: the integer matrix joins on the K-group side)."""
    return StabilityCondition(gl_compose(gl_invert(gl_of_autoeq(g)), cond.translate))


_T = ((1, 1), (0, 1))
_T_INV = ((1, -1), (0, 1))
_S = ((0, -1), (1, 0))


def _imul(m, n):
    (a, b), (c, d) = m
    (e, f), (g, h) = n
    return ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))


def _moebius(m, tau: CC) -> CC:
    (p, q), (r, s) = m
    num = c_add(c_scale(p, tau), cc(q))
    den = c_add(c_scale(r, tau), cc(s))
    return c_div(num, den)


def _gauss_reduce(tau: CC):
    """Reduce an upper-half-plane point into the standard fundamental domain.

    Returns (reduced tau, integer matrix B) with reduced = B acting on tau.
    Ties: |tau| = 1 resolved to Re >= 0, Re = -1/2 resolved to +1/2.
    """
    if tau[1] <= 0:
        raise DomainError("period ratio must lie in the upper half-plane")
    b = ((1, 0), (0, 1))
    while True:
        n = (tau[0] + Fraction(1, 2)).__floor__()
        if n:
            tau = c_sub(tau, cc(n))
            b = _imul(((1, -n), (0, 1)), b)
        if c_norm2(tau) < 1:
            tau = c_div(cc(-1), tau)
            b = _imul(_S, b)
        else:
            break
    if c_norm2(tau) == 1 and tau[0] < 0:
        tau = c_div(cc(-1), tau)
        b = _imul(_S, b)
    if tau[0] == Fraction(-1, 2):
        tau = c_add(tau, cc(1))
        b = _imul(_T, b)
    return tau, b


def canonical_form(cond: StabilityCondition):
    """Complete coset invariant: (reduced period ratio, scale, reducer).

    The periods are the central charges of the torsion generator and of the
    rank-one degree-zero generator; their ratio is Gauss-reduced and the
    second reduced period is reported relative to i, sign-normalized.
    """
    w1 = central_charge_of(cond, Charge(0, 1))
    w2 = central_charge_of(cond, Charge(1, 0))
    tau = c_div(w1, w2)
    tau_red, b = _gauss_reduce(tau)
    (p, q), (r, s) = b
    w2_red = c_add(c_scale(r, w1), c_scale(s, w2))
    scale = c_div(w2_red, cc(0, 1))
    if scale[0] < 0 or (scale[0] == 0 and scale[1] < 0):
        b = tuple(tuple(-e for e in row) for row in b)
        scale = c_neg(scale)
    return tau_red, scale, b
