"""Both families of Clifford-Gegenbauer polynomials.

The ball family lives on the unit ball with weight (1-|x|^2)^alpha, the
Euclidean family on all of R^m with weight (1+|x|^2)^alpha.  Each polynomial
is produced by iterating a first-order weighted Dirac operator on a
monogenic, and each is a rational-coefficient combination of Clifford powers
x^j times that monogenic.  The coefficients depend only on the monogenic's
degree, so they are stored separately from any particular monogenic.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .jacobi import jacobi_shifted_coefficients, pochhammer
from .polys import MVPoly
from .operators import OperatorContext, dunkl_dirac, dunkl_laplacian, euler

FAMILIES = ("ball", "euclid")


def _check_family(family: str) -> None:
    if family not in FAMILIES:
        raise ValueError(f"family must be one of {FAMILIES}, got {family!r}")


@dataclass
class GegenbauerPoly:
    """Coefficient form: sum over j of a_j x^j M, with j = t mod 2 only."""

    family: str
    t: int
    alpha: Fraction
    k: int
    mu: Fraction
    coefficients: dict[int, Fraction]

    def __post_init__(self):
        _check_family(self.family)
        self.alpha = Fraction(self.alpha)
        self.mu = Fraction(self.mu)
        clean = {}
        for j, a in self.coefficients.items():
            if j % 2 != self.t % 2 or j > self.t or j < 0:
                raise ValueError(f"coefficient index {j} breaks the parity rule")
            a = Fraction(a)
            if a:
                clean[j] = a
        self.coefficients = clean

    def expand(self, M: MVPoly) -> MVPoly:
        """The actual polynomial sum a_j x^j M for a concrete monogenic."""
        x = MVPoly.vector(M.m)
        out = MVPoly.zero(M.m)
        power = M
        for j in range(self.t + 1):
            a = self.coefficients.get(j)
            if a:
                out = out + power.scale(a)
            power = x * power
        return out

    def coefficient_list(self) -> list[tuple[int, Fraction]]:
        return sorted(self.coefficients.items())


# -- first-order operators and the operator route ----------------------

def d_alpha(ctx: OperatorContext, family: str, alpha, f: MVPoly) -> MVPoly:
    """The weighted first-order operator generating the family:
    ball (1-|x|^2) D - 2(alpha+1) x, Euclidean (1+|x|^2) D + 2(alpha+1) x."""
    _check_family(family)
    alpha = Fraction(alpha)
    if family == "ball" and alpha <= -1:
        raise ValueError("ball family requires alpha > -1")
    m = f.m
    x = MVPoly.vector(m)
    r2 = MVPoly.radius_squared(m)
    one = MVPoly.scalar(1, m)
    weight = (one - r2) if family == "ball" else (one + r2)
    sign = -1 if family == "ball" else 1
    return weight * dunkl_dirac(ctx, f) + (x * f).scale(sign * 2 * (alpha + 1))


def _require_monogenic(ctx: OperatorContext, M: MVPoly) -> int:
    if M.is_zero() or not M.is_homogeneous():
        raise ValueError("monogenic argument must be homogeneous and nonzero")
    if not dunkl_dirac(ctx, M).is_zero():
        raise ValueError("argument is not annihilated by the Dirac operator")
    return M.degree()


def gegenbauer_expanded(ctx: OperatorContext, family: str, t: int, alpha, M: MVPoly) -> MVPoly:
    """Operator construction: apply the alpha+t-1, ..., alpha+1, alpha
    operators in that order to M (rightmost factor acts first)."""
    _check_family(family)
    if t < 0:
        raise ValueError("degree must be nonnegative")
    alpha = Fraction(alpha)
    p = M
    for j in range(t - 1, -1, -1):
        p = d_alpha(ctx, family, alpha + j, p)
    return p


def extract_power_coefficients(p: MVPoly, M: MVPoly, k: int) -> dict[int, Fraction]:
    """Write p as sum a_j x^j M and return the a_j.

    Each homogeneous component of p of degree k+j must be an exact rational
    multiple of x^j M; anything else raises.
    """
    if p.is_zero():
        return {}
    x = MVPoly.vector(p.m)
    degrees = sorted({d for d in p.homogeneous_parts()})
    j_max = max(d - k for d in degrees)
    if j_max < 0 or any(d < k for d in degrees):
        raise ValueError("polynomial has components below the monogenic degree")
    out: dict[int, Fraction] = {}
    power = M
    for j in range(j_max + 1):
        comp = p.homogeneous_component(k + j)
        if not comp.is_zero():
            exps, c = next(iter(power.terms.items()))
            mask = next(iter(c.coeffs))
            ref = c.coeffs[mask]
            target = comp.coefficient(exps).coeffs.get(mask)
            if target is None:
                raise ValueError(f"component of degree {k + j} is not a multiple of x^{j} M")
            a = target / ref
            if comp != power.scale(a):
                raise ValueError(f"component of degree {k + j} is not a multiple of x^{j} M")
            out[j] = a
        power = x * power
    return out


def gegenbauer(ctx: OperatorContext, family: str, t: int, alpha, M: MVPoly) -> GegenbauerPoly:
    """Operator-route construction with coefficient extraction."""
    k = _require_monogenic(ctx, M)
    expanded = gegenbauer_expanded(ctx, family, t, alpha, M)
    coeffs = extract_power_coefficients(expanded, M, k)
    return GegenbauerPoly(family, t, Fraction(alpha), k, ctx.mu, coeffs)


# -- closed form --------------------------------------------------------

def closed_form(family: str, t: int, alpha, k: int, mu) -> GegenbauerPoly:
    """Coefficients through the real-line Jacobi polynomials.

    Even degree 2s uses parameters (mu/2+k-1, alpha) at argument 1+-2x^2,
    odd degree 2s+1 uses (mu/2+k, alpha) with one extra factor of x.
    """
    _check_family(family)
    if t < 0:
        raise ValueError("degree must be nonnegative")
    alpha, mu = Fraction(alpha), Fraction(mu)
    s, odd = divmod(t, 2)
    a_param = mu / 2 + k - 1 + odd
    q = jacobi_shifted_coefficients(s, a_param, alpha)
    fact = Fraction(factorial(s))
    coeffs: dict[int, Fraction] = {}
    if not odd:
        pref = Fraction(2) ** (2 * s) * pochhammer(alpha + s + 1, s) * fact
        for i, qi in enumerate(q):
            value = pref * qi
            if family == "euclid":
                value *= (-1) ** (s + i)
            coeffs[2 * i] = value
    else:
        pref = Fraction(2) ** (2 * s + 1) * pochhammer(alpha + s + 1, s + 1) * fact
        for i, qi in enumerate(q):
            if family == "ball":
                value = -pref * qi
            else:
                value = pref * qi * (-1) ** (s + i)
            coeffs[2 * i + 1] = value
    return GegenbauerPoly(family, t, alpha, k, mu, coeffs)


# -- the constants of the theory ----------------------------------------

def annihilation_constant(alpha, t: int, mu, k: int) -> Fraction:
    """Factor in front of the degree-lowering identity; the Euclidean family
    uses the same value with a flipped sign."""
    alpha, mu = Fraction(alpha), Fraction(mu)
    if t % 2 == 0:
        return t * (2 * alpha + t + mu + 2 * k)
    return (2 * alpha + t + 1) * (t + mu + 2 * k - 1)


def three_term_constants(alpha, t: int, mu, k: int) -> tuple[Fraction, Fraction]:
    alpha, mu = Fraction(alpha), Fraction(mu)
    if t % 2 == 0:
        d = alpha + Fraction(t, 2)
        e = mu + 2 * k - 2 + t
    else:
        d = alpha + mu / 2 + k + Fraction(t, 2) - Fraction(1, 2)
        e = Fraction(t - 1)
    return d, e


# -- identity residuals (zero when the identity holds) -------------------

def verify_annihilation(ctx: OperatorContext, family: str, t: int, alpha, M: MVPoly) -> MVPoly:
    """D[C_t^alpha] - C(alpha,t) C_(t-1)^(alpha+1), sign-flipped for the
    Euclidean family."""
    k = _require_monogenic(ctx, M)
    alpha = Fraction(alpha)
    lhs = dunkl_dirac(ctx, gegenbauer_expanded(ctx, family, t, alpha, M))
    if t == 0:
        return lhs
    c = annihilation_constant(alpha, t, ctx.mu, k)
    if family == "euclid":
        c = -c
    return lhs - gegenbauer_expanded(ctx, family, t - 1, alpha + 1, M).scale(c)


def verify_differential_equation(ctx: OperatorContext, family: str, t: int, alpha, M: MVPoly) -> MVPoly:
    k = _require_monogenic(ctx, M)
    alpha = Fraction(alpha)
    m = M.m
    x = MVPoly.vector(m)
    r2 = MVPoly.radius_squared(m)
    one = MVPoly.scalar(1, m)
    poly = gegenbauer_expanded(ctx, family, t, alpha, M)
    c = annihilation_constant(alpha, t, ctx.mu, k)
    if family == "ball":
        return (
            (one - r2) * dunkl_laplacian(ctx, poly)
            + (x * dunkl_dirac(ctx, poly)).scale(2 * (alpha + 1))
            + poly.scale(c)
        )
    return (
        (one + r2) * dunkl_laplacian(ctx, poly)
        - (x * dunkl_dirac(ctx, poly)).scale(2 * (alpha + 1))
        - poly.scale(c)
    )


def verify_recurrence(ctx: OperatorContext, family: str, t: int, alpha, M: MVPoly) -> MVPoly:
    """Step-up relation tying degrees t+1, t, t-1 at shifted parameters."""
    k = _require_monogenic(ctx, M)
    alpha = Fraction(alpha)
    m = M.m
    x = MVPoly.vector(m)
    r2 = MVPoly.radius_squared(m)
    one = MVPoly.scalar(1, m)
    up = gegenbauer_expanded(ctx, family, t + 1, alpha, M)
    mid = x * gegenbauer_expanded(ctx, family, t, alpha + 1, M)
    sign = -1 if family == "ball" else 1
    residual = up - mid.scale(sign * 2 * (alpha + 1))
    if t >= 1:
        c = annihilation_constant(alpha + 1, t, ctx.mu, k)
        weight = (one - r2) if family == "ball" else (one + r2)
        down = weight * gegenbauer_expanded(ctx, family, t - 1, alpha + 2, M)
        residual = residual + down.scale(sign * c)
    return residual


def verify_three_term(ctx: OperatorContext, family: str, t: int, alpha, M: MVPoly) -> MVPoly:
    """Three-term relation at a single parameter; needs alpha + t nonzero."""
    k = _require_monogenic(ctx, M)
    alpha = Fraction(alpha)
    if alpha + t == 0:
        raise ValueError("three-term normalization divides by alpha + t = 0")
    if t < 1:
        raise ValueError("three-term relation needs degree >= 1")
    mu = ctx.mu
    d, e = three_term_constants(alpha, t, mu, k)
    x = MVPoly.vector(M.m)
    lhs = gegenbauer_expanded(ctx, family, t, alpha, M).scale(d / (2 * (alpha + t)))
    mid = (x * gegenbauer_expanded(ctx, family, t - 1, alpha, M)).scale(
        alpha + mu / 2 + k + t - 1
    )
    sign = -1 if family == "ball" else 1
    rhs = mid.scale(sign)
    if t >= 2:
        low = gegenbauer_expanded(ctx, family, t - 2, alpha, M).scale((alpha + t - 1) * e)
        rhs = rhs - low.scale(sign)
    return lhs - rhs


def verify_corollary_shift(ctx: OperatorContext, t: int, alpha, M_k: MVPoly, M_k1: MVPoly) -> dict[int, Fraction]:
    """Ball family: coefficients of degree 2t+1 at monogenic degree k against
    -2(alpha+2t+1) times the degree-2t coefficients at monogenic degree k+1.
    Returns per-power residuals."""
    alpha = Fraction(alpha)
    k = _require_monogenic(ctx, M_k)
    k1 = _require_monogenic(ctx, M_k1)
    if k1 != k + 1:
        raise ValueError("second argument must be monogenic of degree one higher")
    odd = gegenbauer(ctx, "ball", 2 * t + 1, alpha, M_k).coefficients
    even = gegenbauer(ctx, "ball", 2 * t, alpha, M_k1).coefficients
    factor = -2 * (alpha + 2 * t + 1)
    out = {}
    for i in range(t + 1):
        res = odd.get(2 * i + 1, Fraction(0)) - factor * even.get(2 * i, Fraction(0))
        if res:
            out[2 * i + 1] = res
    return out


def coefficient_recursions(t: int, alpha, mu, k: int) -> list[dict[int, Fraction]]:
    """Full ball-family coefficient tower for degrees 0..t.

    Level s holds the coefficients of the degree-s member at parameter
    alpha + (t - s); the top level is the (t, alpha) target.  Built from the
    single seed a_0 = 1 by the two interleaved step-up recursions.
    """
    alpha, mu = Fraction(alpha), Fraction(mu)
    levels = [{0: Fraction(1)}]
    for s in range(1, t + 1):
        a_s = alpha + (t - s)
        prev = levels[-1]
        new: dict[int, Fraction] = {}
        if s % 2 == 1:
            for i in range(0, s + 1, 2):
                value = -2 * (a_s + 1 + i // 2) * prev.get(i, Fraction(0)) - (
                    i + 2
                ) * prev.get(i + 2, Fraction(0))
                if value:
                    new[i + 1] = value
        else:
            for i in range(0, s + 1, 2):
                value = -(i + 2 * k + mu) * prev.get(i + 1, Fraction(0)) - (
                    i + 2 * k + 2 * a_s + mu
                ) * prev.get(i - 1, Fraction(0))
                if value:
                    new[i] = value
        levels.append(new)
    return levels


# -- scalar variant on harmonics ----------------------------------------

def scalar_pair_operator(ctx: OperatorContext, alpha, f: MVPoly) -> MVPoly:
    """Composition of two consecutive ball operators, expanded to the purely
    scalar second-order form (no Clifford generators survive)."""
    alpha = Fraction(alpha)
    m = f.m
    r2 = MVPoly.radius_squared(m)
    one = MVPoly.scalar(1, m)
    mu = ctx.mu
    w = one - r2
    return (
        -(w * w * dunkl_laplacian(ctx, f))
        - (r2 * f).scale(2 * (alpha + 2) * (2 * alpha + 2 + mu))
        + (w * euler(f)).scale(4 * (alpha + 2))
        + f.scale(2 * (alpha + 2) * mu)
    )


def scalar_gegenbauer(ctx: OperatorContext, t: int, alpha, H: MVPoly) -> MVPoly:
    """Even-degree scalar family on a Laplacian-annihilated polynomial:
    the pair operators at alpha, alpha+2, ..., alpha+2t-2, rightmost first."""
    if t < 0:
        raise ValueError("degree must be nonnegative")
    if H.is_zero() or not H.is_homogeneous():
        raise ValueError("harmonic argument must be homogeneous and nonzero")
    if not dunkl_laplacian(ctx, H).is_zero():
        raise ValueError("argument is not annihilated by the Laplacian")
    alpha = Fraction(alpha)
    p = H
    for j in range(t - 1, -1, -1):
        p = scalar_pair_operator(ctx, alpha + 2 * j, p)
    return p
