"""Exact inner products as rational multiples of symbolic base constants.

Every integral in the theory (sphere integrals against the reflection
weight, weighted ball inner products, the Euclidean bilinear form) reduces
to Gamma-function expressions whose ratios at integer offsets are rational.
A ClassValue stores that ratio together with a tag naming the one
transcendental base constant it multiplies; orthogonality statements then
become exact zero tests on rationals, and no Gamma value is ever evaluated.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .clifford import CliffordElement
from .jacobi import gamma_shift_ratio
from .polys import MVPoly
from .roots import RootSystem
from .operators import OperatorContext
from .gegenbauer import closed_form

Tag = tuple


def sphere_tag(R: RootSystem) -> Tag:
    return ("sphere", R.m, R.axis_multiplicities())


def ball_tag(R: RootSystem, alpha: Fraction) -> Tag:
    return ("ball", R.m, R.axis_multiplicities(), alpha)


def bilinear_tag(mu: Fraction, k: int, alpha: Fraction) -> Tag:
    return ("bilinear", mu, k, alpha)


@dataclass
class ClassValue:
    """Clifford-valued rational multiple of one base constant.

    The zero value is context-free (tag None); adding values from different
    contexts is an error by construction.
    """

    coeff: CliffordElement
    tag: Tag | None

    def __post_init__(self):
        if self.coeff.is_zero():
            self.tag = None

    @classmethod
    def zero(cls, m: int) -> "ClassValue":
        return cls(CliffordElement.zero(m), None)

    @classmethod
    def of_ratio(cls, ratio, tag: Tag, m: int) -> "ClassValue":
        return cls(CliffordElement.scalar(Fraction(ratio), m), tag)

    def is_zero(self) -> bool:
        return self.coeff.is_zero()

    @property
    def ratio(self) -> Fraction:
        """Scalar ratio; only meaningful for grade-0 values."""
        if not self.coeff.is_scalar():
            raise ValueError("value is not scalar")
        return self.coeff.scalar_part()

    def __add__(self, other: "ClassValue") -> "ClassValue":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.tag != other.tag:
            raise ValueError(f"cannot add values over {self.tag} and {other.tag}")
        return ClassValue(self.coeff + other.coeff, self.tag)

    def __sub__(self, other: "ClassValue") -> "ClassValue":
        return self + other.scale(-1)

    def scale(self, q) -> "ClassValue":
        return ClassValue(self.coeff.scale(q), self.tag)

    def clifford_scale(self, c: CliffordElement, side: str = "left") -> "ClassValue":
        prod = c * self.coeff if side == "left" else self.coeff * c
        return ClassValue(prod, self.tag)

    def conjugate(self) -> "ClassValue":
        return ClassValue(self.coeff.conjugate(), self.tag)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClassValue):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        return self.tag == other.tag and self.coeff == other.coeff

    def __repr__(self) -> str:
        if self.is_zero():
            return "0"
        return f"({self.coeff!r}) * BASE{list(self.tag)}"


# -- sphere integrals for product weights --------------------------------

def sphere_monomial_ratio(exps, ks) -> Fraction:
    """Sphere average of a monomial against the product weight, normalized
    by the weight's own integral.

    Odd exponents integrate to zero by reflection symmetry; for even
    exponents the Gamma-quotient formula telescopes into the Pochhammer
    ratio  prod_i (k_i + 1/2)_(a_i/2)  /  (gamma + m/2)_(|a|/2).
    This formula is standard product-weight theory, validated against
    adaptive numerical quadrature in the test suite before anything
    relies on it.
    """
    if any(e % 2 for e in exps):
        return Fraction(0)
    gamma = sum(ks, Fraction(0))
    m = len(exps)
    num = Fraction(1)
    for e, k in zip(exps, ks):
        num *= gamma_shift_ratio(k + Fraction(1, 2), e // 2)
    return num / gamma_shift_ratio(gamma + Fraction(m, 2), sum(exps) // 2)


def sphere_integral(R: RootSystem, p: MVPoly) -> ClassValue:
    """Componentwise sphere integral of a polynomial against the product
    weight, as a multiple of the weight's own sphere integral."""
    if not R.is_axis_aligned():
        raise ValueError("sphere integrals support only product-type root systems")
    ks = R.axis_multiplicities()
    out = CliffordElement.zero(p.m)
    for exps, c in p.terms.items():
        ratio = sphere_monomial_ratio(exps, ks)
        if ratio:
            out = out + c.scale(ratio)
    return ClassValue(out, sphere_tag(R))


# -- ball inner products --------------------------------------------------

def ball_inner(R: RootSystem, f: MVPoly, g: MVPoly, alpha) -> ClassValue:
    """Weighted ball inner product conj(f) g against (1-|x|^2)^alpha times
    the reflection weight, normalized by the f = g = 1 value.

    Per homogeneity degree p the radial factor contributes the Beta ratio
    (mu/2)_(p/2) / (mu/2 + alpha + 1)_(p/2); odd p dies on the sphere.
    """
    alpha = Fraction(alpha)
    if alpha <= -1:
        raise ValueError("ball inner product requires alpha > -1")
    if not R.is_axis_aligned():
        raise ValueError("ball inner products support only product-type root systems")
    ks = R.axis_multiplicities()
    mu = R.mu
    h = f.conjugate() * g
    tag = ball_tag(R, alpha)
    total = CliffordElement.zero(f.m)
    for degree, part in h.homogeneous_parts().items():
        if degree % 2:
            continue
        radial = gamma_shift_ratio(mu / 2, degree // 2) / gamma_shift_ratio(
            mu / 2 + alpha + 1, degree // 2
        )
        for exps, c in part.terms.items():
            ratio = sphere_monomial_ratio(exps, ks)
            if ratio:
                total = total + c.scale(ratio * radial)
    return ClassValue(total, tag)


def ball_rebase(value: ClassValue, mu, from_alpha, to_alpha) -> ClassValue:
    """Re-express a ball value over the base constant of another alpha
    differing by an integer; the Beta-ratio of the two bases is rational."""
    mu, from_alpha, to_alpha = Fraction(mu), Fraction(from_alpha), Fraction(to_alpha)
    steps = to_alpha - from_alpha
    if steps.denominator != 1:
        raise ValueError("alpha difference must be an integer")
    if value.is_zero():
        return value
    n = int(steps)
    # the new ratio is the old one times base(from)/base(to), and
    # base(a)/base(a+1) = (mu/2 + a + 1)/(a + 1)
    factor = Fraction(1)
    a = from_alpha
    for _ in range(abs(n)):
        if n > 0:
            factor *= (mu / 2 + a + 1) / (a + 1)
            a += 1
        else:
            factor *= a / (mu / 2 + a)
            a -= 1
    kind, m, ks, _ = value.tag
    return ClassValue(value.coeff.scale(factor), (kind, m, ks, to_alpha))


# -- the Euclidean bilinear form ------------------------------------------

def check_bilinear_wellposed(mu, alpha) -> None:
    mu, alpha = Fraction(mu), Fraction(alpha)
    if alpha.denominator == 1 and alpha >= 0:
        raise ValueError("ill-posed form: alpha is a natural number")
    if (mu / 2 + alpha).denominator == 1:
        raise ValueError("ill-posed form: mu/2 + alpha is an integer")


def bilinear_form(mu, k: int, alpha, i: int, j: int) -> ClassValue:
    """Pairing of x^i M and x^j M over the Euclidean space, as a multiple of
    the base Beta constant of (mu, k, alpha).

    Mixed parity pairs vanish; equal parity gives (-1)^(s+t) times a Beta
    value whose offset from the base is a pure Pochhammer ratio.
    """
    mu, alpha = Fraction(mu), Fraction(alpha)
    check_bilinear_wellposed(mu, alpha)
    if i < 0 or j < 0:
        raise ValueError("powers must be nonnegative")
    tag = bilinear_tag(mu, k, alpha)
    if (i + j) % 2:
        return ClassValue.zero(1)
    q = k + mu / 2
    s, t = i // 2, j // 2
    n = s + t + (1 if i % 2 else 0)
    # B(q+n, -(q+n)-alpha) / B(q, -q-alpha) with integer n
    ratio = gamma_shift_ratio(q, n) * gamma_shift_ratio(-q - alpha, -n)
    return ClassValue.of_ratio(Fraction((-1) ** (s + t)) * ratio, tag, 1)


def bilinear_rebase(value: ClassValue, mu, k: int, from_alpha, to_alpha) -> ClassValue:
    """Integer-step change of the alpha in the base Beta constant:
    base(alpha)/base(alpha+1) = (q + alpha + 1)/(alpha + 1)."""
    mu, from_alpha, to_alpha = Fraction(mu), Fraction(from_alpha), Fraction(to_alpha)
    steps = to_alpha - from_alpha
    if steps.denominator != 1:
        raise ValueError("alpha difference must be an integer")
    if value.is_zero():
        return value
    q = k + mu / 2
    n = int(steps)
    # base(a)/base(a+1) = (q + a + 1)/(a + 1)
    factor = Fraction(1)
    a = from_alpha
    for _ in range(abs(n)):
        if n > 0:
            factor *= (q + a + 1) / (a + 1)
            a += 1
        else:
            factor *= a / (q + a)
            a -= 1
    return ClassValue(value.coeff.scale(factor), bilinear_tag(mu, k, to_alpha))


# -- Gram matrices ---------------------------------------------------------

@dataclass
class GramMatrix:
    labels: list
    entries: list[list[ClassValue]]

    def validate_symmetry(self, conjugate: bool) -> None:
        n = len(self.labels)
        for i in range(n):
            for j in range(n):
                expected = self.entries[i][j].conjugate() if conjugate else self.entries[i][j]
                if self.entries[j][i] != expected:
                    raise ArithmeticError(
                        f"Gram symmetry violated at ({self.labels[i]}, {self.labels[j]})"
                    )


def gram(ctx: OperatorContext, family: str, alpha, t_max: int, monogenics) -> GramMatrix:
    """Gram matrix of the degree-0..t_max family members.

    ball:   monogenics is a list of (degree, polynomial); entries are exact
            ball inner products of the expanded polynomials, so the root
            system must be of product type.
    euclid: monogenics is a list of degrees sharing one fixed monogenic of
            each degree; the bilinear form only sees the degree, so any root
            system works and no polynomial expansion is needed.
    """
    alpha = Fraction(alpha)
    if family == "ball":
        R = ctx.root_system
        items = []
        for t in range(t_max + 1):
            for idx, (k, M) in enumerate(monogenics):
                poly = closed_form("ball", t, alpha, k, ctx.mu).expand(M)
                items.append(((t, k, idx), poly))
        labels = [lab for lab, _ in items]
        entries = [
            [ball_inner(R, f, g, alpha) for _, g in items] for _, f in items
        ]
        out = GramMatrix(labels, entries)
        out.validate_symmetry(conjugate=True)
        return out
    if family == "euclid":
        ks = set(monogenics)
        if len(ks) != 1:
            raise ValueError("Euclidean Gram matrices pair members over one monogenic degree")
        (k,) = ks
        mu = ctx.mu
        check_bilinear_wellposed(mu, alpha)
        tables = [closed_form("euclid", t, alpha, k, mu).coefficients for t in range(t_max + 1)]
        labels = [(t, k) for t in range(t_max + 1)]
        entries = []
        for ta in tables:
            row = []
            for tb in tables:
                acc = ClassValue.zero(1)
                for i, ai in ta.items():
                    for j, bj in tb.items():
                        acc = acc + bilinear_form(mu, k, alpha, i, j).scale(ai * bj)
                row.append(acc)
            entries.append(row)
        out = GramMatrix(labels, entries)
        out.validate_symmetry(conjugate=False)
        return out
    raise ValueError(f"family must be 'ball' or 'euclid', got {family!r}")


# -- monogenic orthogonality report ---------------------------------------

@dataclass
class OrthogonalityReport:
    inner_inner_failures: list
    inner_outer_failures: list
    outer_outer_failures: list
    norms: list

    def all_zero(self) -> bool:
        return not (
            self.inner_inner_failures
            or self.inner_outer_failures
            or self.outer_outer_failures
        )


def verify_monogenic_orthogonality(ctx: OperatorContext, k_max: int) -> OrthogonalityReport:
    """Sphere-orthogonality checks among inner and outer monogenics.

    Outer monogenics enter through their sphere representatives x M(x)
    restricted to |x| = 1, which keeps every integrand polynomial.
    """
    from .monogenics import monogenic_basis

    R = ctx.root_system
    if not R.is_axis_aligned():
        raise ValueError("orthogonality report needs a product-type root system")
    x = MVPoly.vector(ctx.m)
    bases = {k: monogenic_basis(ctx, k).elements for k in range(k_max + 1)}
    inner_inner, inner_outer, outer_outer, norms = [], [], [], []
    for ka, basis_a in bases.items():
        for kb, basis_b in bases.items():
            for ia, Ma in enumerate(basis_a):
                for ib, Mb in enumerate(basis_b):
                    if ka < kb or (ka == kb and ia > ib):
                        continue
                    if ka != kb:
                        v = sphere_integral(R, Ma.conjugate() * Mb)
                        if not v.is_zero():
                            inner_inner.append(((ka, ia), (kb, ib), v))
                        w = sphere_integral(R, (x * Ma).conjugate() * (x * Mb))
                        if not w.is_zero():
                            outer_outer.append(((ka, ia), (kb, ib), w))
                    u = sphere_integral(R, (x * Ma).conjugate() * Mb)
                    if not u.is_zero():
                        inner_outer.append(((ka, ia), (kb, ib), u))
                    if ka == kb and ia == ib:
                        norm = sphere_integral(R, Ma.conjugate() * Ma)
                        norms.append(((ka, ia), norm))
    return OrthogonalityReport(inner_inner, inner_outer, outer_outer, norms)
