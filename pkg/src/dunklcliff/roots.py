"""Rational root systems with multiplicity functions.

Roots are stored unnormalized: every reflection-difference term in a Dunkl
operator is invariant under scaling a root, so rational coordinates give the
same operators as unit-length roots while keeping the arithmetic exact.
Irrational-coordinate systems are rejected by construction.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm


def _as_vector(v, m: int) -> tuple[Fraction, ...]:
    vec = tuple(Fraction(c) for c in v)
    if len(vec) != m:
        raise ValueError(f"root {v} has length != {m}")
    return vec


def dot(a, b) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def canonical_direction(v) -> tuple[Fraction, ...]:
    """Scale a nonzero rational vector to a canonical representative of its
    line: first nonzero coordinate positive, entries coprime integers."""
    lead = next((c for c in v if c), None)
    if lead is None:
        raise ValueError("zero vector has no direction")
    scaled = [c / lead for c in v]
    denom = lcm(*(c.denominator for c in scaled))
    ints = [int(c * denom) for c in scaled]
    g = 0
    for c in ints:
        g = gcd(g, abs(c))
    return tuple(Fraction(c, g) for c in ints)


def reflection_matrix(alpha) -> list[list[Fraction]]:
    """Orthogonal reflection in the hyperplane normal to alpha."""
    alpha = [Fraction(a) for a in alpha]
    norm2 = dot(alpha, alpha)
    if not norm2:
        raise ValueError("cannot reflect in the zero vector")
    m = len(alpha)
    return [
        [
            (Fraction(1) if i == j else Fraction(0)) - 2 * alpha[i] * alpha[j] / norm2
            for j in range(m)
        ]
        for i in range(m)
    ]


def reflect_vector(alpha, v) -> tuple[Fraction, ...]:
    factor = 2 * dot(alpha, v) / dot(alpha, alpha)
    return tuple(Fraction(c) - factor * a for c, a in zip(v, alpha))


@dataclass(frozen=True)
class MultiplicityReport:
    gamma: Fraction
    mu: Fraction


class RootSystem:
    """Positive roots with one rational multiplicity k >= 0 per root.

    Construction checks: the system is reduced (no root a rational multiple
    of another), the reflections permute the root lines, and the multiplicity
    is constant on each orbit.  The derived dimension mu = m + 2*gamma must
    exceed 1.
    """

    __slots__ = ("m", "positive_roots", "multiplicities", "_lines")

    def __init__(self, m: int, positive_roots, multiplicities):
        if m < 1:
            raise ValueError("dimension must be positive")
        roots = [_as_vector(r, m) for r in positive_roots]
        mults = [Fraction(k) for k in multiplicities]
        if len(roots) != len(mults):
            raise ValueError("one multiplicity per positive root required")
        for k in mults:
            if k < 0:
                raise ValueError(f"negative multiplicity {k}")
        lines = {}
        for idx, r in enumerate(roots):
            line = canonical_direction(r)
            if line in lines:
                raise ValueError(f"roots {r} and {roots[lines[line]]} are parallel")
            lines[line] = idx
        # closure: each reflection must permute the root lines, preserving k
        for beta in roots:
            for idx, alpha in enumerate(roots):
                image = canonical_direction(reflect_vector(beta, alpha))
                if image not in lines:
                    raise ValueError(
                        f"reflection of {alpha} in {beta} leaves the root set"
                    )
                if mults[lines[image]] != mults[idx]:
                    raise ValueError(
                        "multiplicities not constant on reflection orbits"
                    )
        self.m = m
        self.positive_roots = tuple(roots)
        self.multiplicities = tuple(mults)
        self._lines = lines
        if self.mu <= 1:
            raise ValueError(f"mu = {self.mu} <= 1 is outside the supported range")

    @property
    def gamma(self) -> Fraction:
        return sum(self.multiplicities, Fraction(0))

    @property
    def mu(self) -> Fraction:
        return Fraction(self.m) + 2 * self.gamma

    def multiplicity_report(self) -> MultiplicityReport:
        return MultiplicityReport(gamma=self.gamma, mu=self.mu)

    def weight_function(self) -> list[tuple[tuple[Fraction, ...], Fraction]]:
        """Factored weight: list of (linear form <x, alpha>, exponent 2k)."""
        return [
            (root, 2 * k)
            for root, k in zip(self.positive_roots, self.multiplicities)
        ]

    def weight_homogeneity(self) -> Fraction:
        return 2 * self.gamma

    def is_axis_aligned(self) -> bool:
        """True when every positive root lies on a coordinate axis (the
        product-weight case the sphere integrals support)."""
        return all(
            sum(1 for c in root if c) == 1 for root in self.positive_roots
        )

    def axis_multiplicities(self) -> tuple[Fraction, ...]:
        if not self.is_axis_aligned():
            raise ValueError("root system is not of product type")
        ks = [Fraction(0)] * self.m
        for root, k in zip(self.positive_roots, self.multiplicities):
            axis = next(i for i, c in enumerate(root) if c)
            ks[axis] = k
        return tuple(ks)

    def __repr__(self) -> str:
        root_strs = ",".join(
            "(" + ",".join(str(c) for c in r) + ")" for r in self.positive_roots
        )
        return f"RootSystem(m={self.m}, roots=[{root_strs}], k={list(self.multiplicities)})"


def _axis_vector(i: int, m: int) -> list[int]:
    return [1 if j == i else 0 for j in range(m)]


def preset(name: str, m: int, multiplicities) -> RootSystem:
    """Standard rational families.

    - "Z2^m": roots e_i, one independent multiplicity per axis
    - "A":    roots e_i - e_j (i<j) in R^m, a single multiplicity
    - "B":    roots e_i and e_i +- e_j, multiplicities (short, long)
    - "D":    roots e_i +- e_j, a single multiplicity
    """
    if isinstance(multiplicities, (int, str, Fraction)):
        multiplicities = [multiplicities]
    mults = [Fraction(k) for k in multiplicities]
    key = name.lower().replace("_", "").replace("^", "").replace("{", "").replace("}", "")
    if key in ("z2m", "z2", f"z2{m}"):
        if len(mults) != m:
            raise ValueError(f"Z2^{m} needs {m} multiplicities")
        roots = [_axis_vector(i, m) for i in range(m)]
        return RootSystem(m, roots, mults)
    if key in ("a", f"a{m - 1}"):
        if len(mults) != 1:
            raise ValueError("A-type takes a single multiplicity")
        roots = []
        for i in range(m):
            for j in range(i + 1, m):
                v = [0] * m
                v[i], v[j] = 1, -1
                roots.append(v)
        return RootSystem(m, roots, mults * len(roots))
    if key in ("b", f"b{m}"):
        if len(mults) != 2:
            raise ValueError("B-type takes (short, long) multiplicities")
        short, long_ = mults
        roots, ks = [], []
        for i in range(m):
            roots.append(_axis_vector(i, m))
            ks.append(short)
        for i in range(m):
            for j in range(i + 1, m):
                for sign in (1, -1):
                    v = [0] * m
                    v[i], v[j] = 1, sign
                    roots.append(v)
                    ks.append(long_)
        return RootSystem(m, roots, ks)
    if key in ("d", f"d{m}"):
        if len(mults) != 1:
            raise ValueError("D-type takes a single multiplicity")
        roots = []
        for i in range(m):
            for j in range(i + 1, m):
                for sign in (1, -1):
                    v = [0] * m
                    v[i], v[j] = 1, sign
                    roots.append(v)
        return RootSystem(m, roots, mults * len(roots))
    raise ValueError(f"unknown preset {name!r}")
