"""Kernel bases of the Dirac and Laplace operators, Fischer projectors and
the inversion that swaps inner and outer monogenics.

Bases are computed as exact rational nullspaces of the operator matrix on
homogeneous polynomials.  They are not normalized: norms involve square
roots, so normalization is tracked downstream as an exact norm-square value
instead of being folded into the vectors.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement

from . import linalg
from .clifford import CliffordElement
from .polys import MVPoly, RadialScaledFunction, monomial_key
from .operators import (
    OperatorContext,
    dunkl_dirac,
    dunkl_laplacian,
    angular_dirac,
)


def scalar_monomials(m: int, degree: int) -> list[tuple[int, ...]]:
    """All exponent tuples of the given total degree, graded-lex order."""
    if degree < 0:
        return []
    out = set()
    for combo in combinations_with_replacement(range(m), degree):
        exps = [0] * m
        for i in combo:
            exps[i] += 1
        out.add(tuple(exps))
    return sorted(out, key=monomial_key)


def scalar_dimension(m: int, degree: int) -> int:
    """dim of homogeneous scalar polynomials of the given degree."""
    return len(scalar_monomials(m, degree))


@dataclass
class MonogenicBasis:
    degree: int
    elements: list[MVPoly]


@dataclass
class HarmonicBasis:
    degree: int
    elements: list[MVPoly]


def _kernel_basis(inputs: list[MVPoly], image_coords, apply) -> list[MVPoly]:
    """Exact nullspace of a linear map given by `apply` on the span of
    `inputs`; image coordinates are (monomial, blade) pairs."""
    index = {coord: r for r, coord in enumerate(image_coords)}
    columns = []
    for f in inputs:
        col = [Fraction(0)] * len(index)
        g = apply(f)
        for exps, c in g.terms.items():
            for mask, value in c.coeffs.items():
                col[index[(exps, mask)]] = value
        columns.append(col)
    rows = [
        [columns[c][r] for c in range(len(columns))] for r in range(len(index))
    ]
    kernel = linalg.nullspace(rows, len(columns))
    basis = []
    for v in kernel:
        combo = MVPoly.zero(inputs[0].m)
        for coeff, f in zip(v, inputs):
            if coeff:
                combo = combo + f.scale(coeff)
        basis.append(combo)
    return basis


def monogenic_basis(ctx: OperatorContext, k: int) -> MonogenicBasis:
    """Basis of homogeneous degree-k Clifford-valued polynomials annihilated
    by the Dirac operator.  The dimension is checked against the count
    2^m (dim P_k - dim P_(k-1)) implied by the Fischer decomposition."""
    if k < 0:
        raise ValueError("degree must be nonnegative")
    m = ctx.m
    blades = range(1 << m)
    if k == 0:
        elements = [MVPoly.clifford(CliffordElement.blade(mask, m)) for mask in blades]
        return MonogenicBasis(0, elements)
    inputs = [
        MVPoly.monomial(exps, CliffordElement.blade(mask, m), m)
        for exps in scalar_monomials(m, k)
        for mask in blades
    ]
    image_coords = [
        (exps, mask) for exps in scalar_monomials(m, k - 1) for mask in blades
    ]
    basis = _kernel_basis(inputs, image_coords, lambda f: dunkl_dirac(ctx, f))
    expected = (1 << m) * (scalar_dimension(m, k) - scalar_dimension(m, k - 1))
    if len(basis) != expected:
        raise ArithmeticError(
            f"kernel dimension {len(basis)} != expected {expected} at degree {k}"
        )
    return MonogenicBasis(k, basis)


def harmonic_basis(ctx: OperatorContext, k: int) -> HarmonicBasis:
    """Scalar polynomials of degree k annihilated by the Dunkl Laplacian."""
    if k < 0:
        raise ValueError("degree must be nonnegative")
    m = ctx.m
    if k <= 1:
        if k == 0:
            return HarmonicBasis(0, [MVPoly.scalar(1, m)])
        return HarmonicBasis(1, [MVPoly.variable(i, m) for i in range(1, m + 1)])
    inputs = [MVPoly.monomial(exps, 1, m) for exps in scalar_monomials(m, k)]
    image_coords = [(exps, 0) for exps in scalar_monomials(m, k - 2)]
    basis = _kernel_basis(inputs, image_coords, lambda f: dunkl_laplacian(ctx, f))
    return HarmonicBasis(k, basis)


def gamma_eigenvalue(j: int, k: int, mu: Fraction) -> Fraction:
    """Eigenvalue of the angular operator on x^j M_(k-j) inside degree-k
    polynomials: -(k-j) for even j, (k-j)+mu-1 for odd j."""
    if j % 2 == 0:
        return Fraction(-(k - j))
    return Fraction(k - j) + mu - 1


def fischer_project(ctx: OperatorContext, i: int, p: MVPoly) -> MVPoly:
    """Projection of a homogeneous polynomial onto its x^i * M(k-i) summand.

    Built as the Lagrange product over the distinct angular-operator
    eigenvalues, applied factor by factor.
    """
    if not p.is_homogeneous():
        raise ValueError("projection requires a homogeneous input")
    k = p.degree()
    if p.is_zero():
        return p
    if not 0 <= i <= k:
        raise ValueError(f"summand index {i} outside 0..{k}")
    mu = ctx.mu
    lam_i = gamma_eigenvalue(i, k, mu)
    out = p
    for j in range(k + 1):
        if j == i:
            continue
        lam_j = gamma_eigenvalue(j, k, mu)
        out = (angular_dirac(ctx, out) - out.scale(lam_j)).scale(
            Fraction(1) / (lam_i - lam_j)
        )
    return out


def kelvin_invert(ctx: OperatorContext, M: MVPoly) -> RadialScaledFunction:
    """Inner-to-outer inversion: M of degree k maps to x r^-(mu+2k) M, a
    Dirac-annihilated function homogeneous of degree -(k + mu - 1)."""
    if not M.is_homogeneous() or M.is_zero():
        raise ValueError("input must be homogeneous and nonzero")
    if not dunkl_dirac(ctx, M).is_zero():
        raise ValueError("input is not Dirac-annihilated")
    k = M.degree()
    x = MVPoly.vector(M.m)
    q = -(ctx.mu + 2 * k) / 2
    return RadialScaledFunction(M.m, {q: x * M})


def kelvin_invert_back(ctx: OperatorContext, Q: RadialScaledFunction, k: int) -> MVPoly:
    """Outer-to-inner direction: x r^(2k+mu-2) Q must come out polynomial."""
    x = MVPoly.vector(Q.m)
    shifted = Q.shift_exponent((2 * k + ctx.mu - 2) / 2).lmul_poly(x)
    result = shifted.as_poly()
    if not dunkl_dirac(ctx, result).is_zero():
        raise ArithmeticError("inversion output failed the Dirac check")
    return result
