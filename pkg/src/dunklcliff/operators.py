"""The differential-difference operator tower.

Everything here acts exactly on MVPoly (and, where meaningful, on
radial-scaled functions): the Dunkl derivatives, the Dunkl Laplacian, the
Dirac-type first-order operator built from them, the Euler degree operator
and the angular (Gamma) operator.
"""
from __future__ import annotations

from fractions import Fraction

from .clifford import CliffordElement
from .polys import MVPoly, RadialScaledFunction
from .roots import RootSystem, reflection_matrix


class OperatorContext:
    """A root system together with cached reflection matrices."""

    __slots__ = ("root_system", "reflections")

    def __init__(self, root_system: RootSystem):
        self.root_system = root_system
        self.reflections = tuple(
            reflection_matrix(alpha) for alpha in root_system.positive_roots
        )

    @property
    def m(self) -> int:
        return self.root_system.m

    @property
    def mu(self) -> Fraction:
        return self.root_system.mu

    @property
    def gamma(self) -> Fraction:
        return self.root_system.gamma


def dunkl_derivative(ctx: OperatorContext, i: int, f: MVPoly) -> MVPoly:
    """Dunkl derivative along axis i: the partial derivative plus one
    weighted difference quotient per positive root."""
    if not 1 <= i <= ctx.m:
        raise ValueError(f"axis {i} outside 1..{ctx.m}")
    out = f.partial(i)
    R = ctx.root_system
    for alpha, k, refl in zip(R.positive_roots, R.multiplicities, ctx.reflections):
        if not k or not alpha[i - 1]:
            continue
        diff = f - f.substitute_linear(refl)
        if diff.is_zero():
            continue
        out = out + diff.exact_div_linear(alpha).scale(k * alpha[i - 1])
    return out


def dunkl_laplacian(ctx: OperatorContext, f: MVPoly) -> MVPoly:
    out = MVPoly.zero(f.m)
    for i in range(1, ctx.m + 1):
        out = out + dunkl_derivative(ctx, i, dunkl_derivative(ctx, i, f))
    return out


def dunkl_dirac(ctx: OperatorContext, f: MVPoly, side: str = "left") -> MVPoly:
    """First-order operator: sum of e_i times the i-th Dunkl derivative.

    side="left" multiplies the generators from the left, side="right" applies
    the derivative first and multiplies the generator from the right.
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    out = MVPoly.zero(f.m)
    for i in range(1, ctx.m + 1):
        e_i = CliffordElement.generator(i, f.m)
        d = dunkl_derivative(ctx, i, f)
        out = out + (e_i * d if side == "left" else d * e_i)
    return out


def euler(f: MVPoly) -> MVPoly:
    """Degree operator: sum of x_i d/dx_i, scaling each monomial by its
    total degree."""
    return MVPoly(
        f.m, {exps: c.scale(sum(exps)) for exps, c in f.terms.items() if sum(exps)}
    )


def angular_dirac(ctx: OperatorContext, f: MVPoly) -> MVPoly:
    """Angular part of the Dirac operator, via its defining formula."""
    x = MVPoly.vector(f.m)
    return dunkl_dirac(ctx, x * f) + f.scale(ctx.mu) + euler(f)


def angular_dirac_alt(ctx: OperatorContext, f: MVPoly) -> MVPoly:
    """Same operator through the rearranged identity; kept as a standing
    cross-check against sign errors in the Clifford composition."""
    x = MVPoly.vector(f.m)
    return -(x * dunkl_dirac(ctx, f)) - euler(f)


def dirac_power_coefficient(s: int, k: int, mu: Fraction) -> Fraction:
    """Coefficient c with D[x^s M] = c * x^(s-1) M for M monogenic of
    degree k: -s for even s, -(s-1+2k+mu) for odd s."""
    if s % 2 == 0:
        return Fraction(-s)
    return -(Fraction(s - 1) + 2 * k + mu)


# -- radial-scaled actions --------------------------------------------

def radial_derivative(ctx: OperatorContext, i: int, g: RadialScaledFunction) -> RadialScaledFunction:
    """Dunkl derivative of sum r^(2q) P: the radial factor is invariant under
    every reflection, so the product rule splits the action exactly."""
    x_i = MVPoly.variable(i, g.m)
    out = RadialScaledFunction(g.m)
    for q, p in g.parts.items():
        out = out + RadialScaledFunction(g.m, {q: dunkl_derivative(ctx, i, p)})
        if q:
            out = out + RadialScaledFunction(g.m, {q - 1: (x_i * p).scale(2 * q)})
    return out


def radial_dirac(ctx: OperatorContext, g: RadialScaledFunction) -> RadialScaledFunction:
    x = MVPoly.vector(g.m)
    out = RadialScaledFunction(g.m)
    for q, p in g.parts.items():
        out = out + RadialScaledFunction(g.m, {q: dunkl_dirac(ctx, p)})
        if q:
            out = out + RadialScaledFunction(g.m, {q - 1: (x * p).scale(2 * q)})
    return out


def radial_euler(g: RadialScaledFunction) -> RadialScaledFunction:
    out = RadialScaledFunction(g.m)
    for q, p in g.parts.items():
        out = out + RadialScaledFunction(g.m, {q: euler(p) + p.scale(2 * q)})
    return out


def apply_to_radial_scaled(ctx: OperatorContext, op: str, g: RadialScaledFunction) -> RadialScaledFunction:
    """Dispatch by name: "T1".."Tm", "dirac", or "euler"."""
    if op == "dirac":
        return radial_dirac(ctx, g)
    if op == "euler":
        return radial_euler(g)
    if op.startswith("T"):
        return radial_derivative(ctx, int(op[1:]), g)
    raise ValueError(f"unknown radial operator {op!r}")
