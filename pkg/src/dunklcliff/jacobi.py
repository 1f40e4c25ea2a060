"""Classical Jacobi polynomials with exact rational parameters.

Every Gamma-function ratio with an integer offset is evaluated as a
Pochhammer product, so no Gamma value is ever computed and parameter poles
are never touched.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb


def pochhammer(a, n: int) -> Fraction:
    """Rising factorial a (a+1) ... (a+n-1); empty product for n = 0."""
    if n < 0:
        raise ValueError("pochhammer needs a nonnegative count")
    a = Fraction(a)
    out = Fraction(1)
    for i in range(n):
        out *= a + i
    return out


def gamma_shift_ratio(z, n: int) -> Fraction:
    """Gamma(z+n) / Gamma(z) for integer n of either sign."""
    z = Fraction(z)
    if n >= 0:
        return pochhammer(z, n)
    denom = pochhammer(z + n, -n)
    if not denom:
        raise ZeroDivisionError(f"Gamma ratio hits a pole at {z}+{n}")
    return 1 / denom


class UniPoly:
    """Dense univariate polynomial, rational coefficients, ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = cs

    @classmethod
    def zero(cls) -> "UniPoly":
        return cls([])

    @classmethod
    def constant(cls, c) -> "UniPoly":
        return cls([c])

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(
            [
                (self.coeffs[i] if i < len(self.coeffs) else 0)
                + (other.coeffs[i] if i < len(other.coeffs) else 0)
                for i in range(n)
            ]
        )

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + other.scale(-1)

    def scale(self, q) -> "UniPoly":
        q = Fraction(q)
        return UniPoly([c * q for c in self.coeffs])

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        if not isinstance(other, UniPoly):
            return NotImplemented
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    def __pow__(self, n: int) -> "UniPoly":
        out = UniPoly([1])
        for _ in range(n):
            out = out * self
        return out

    def derivative(self) -> "UniPoly":
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def compose_affine(self, c0, c1) -> "UniPoly":
        """p(c0 + c1 * s) as a polynomial in s."""
        shift = UniPoly([c0, c1])
        out = UniPoly.zero()
        power = UniPoly([1])
        for c in self.coeffs:
            out = out + power.scale(c)
            power = power * shift
        return out

    def __call__(self, x) -> Fraction:
        x = Fraction(x)
        out = Fraction(0)
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(
            f"{c}*y^{i}" if i else str(c) for i, c in enumerate(self.coeffs) if c
        )


def jacobi_shifted_coefficients(t: int, a, b) -> list[Fraction]:
    """Coefficients q_i of the degree-t Jacobi polynomial written in the
    shifted variable s = (y-1)/2:  P(y) = sum q_i s^i."""
    a, b = Fraction(a), Fraction(b)
    fact = 1
    for i in range(2, t + 1):
        fact *= i
    return [
        Fraction(comb(t, i)) * pochhammer(a + i + 1, t - i) * pochhammer(a + b + t + 1, i) / fact
        for i in range(t + 1)
    ]


def jacobi_polynomial(t: int, a, b) -> UniPoly:
    """The degree-t Jacobi polynomial with parameters (a, b), in y."""
    shifted = jacobi_shifted_coefficients(t, a, b)
    s = UniPoly([Fraction(-1, 2), Fraction(1, 2)])  # (y-1)/2
    out = UniPoly.zero()
    power = UniPoly([1])
    for q in shifted:
        out = out + power.scale(q)
        power = power * s
    return out
