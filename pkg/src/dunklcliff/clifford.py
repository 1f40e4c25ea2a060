"""Exact arithmetic in the real Clifford algebra with negative-definite signature.

Generators e_1..e_m satisfy e_i e_j + e_j e_i = -2 delta_ij, so every e_i
squares to -1.  Basis blades e_A are indexed by bitmasks: bit (i-1) set means
e_i is a factor, factors in ascending index order.  Mask 0 is the scalar unit.
All coefficients are `fractions.Fraction`, never floats.
"""
from __future__ import annotations

from fractions import Fraction

# 2^8 = 256 blades; desk-scale computations use m <= 4.
_MAX_DIMENSION = 8


def max_dimension() -> int:
    return _MAX_DIMENSION


def set_max_dimension(m: int) -> None:
    """Raise the blade-count cap (the default of 8 suits desk-scale work)."""
    global _MAX_DIMENSION
    if m < 1:
        raise ValueError("dimension cap must be positive")
    _MAX_DIMENSION = m


def blade_grade(mask: int) -> int:
    return bin(mask).count("1")


def blade_product(a: int, b: int) -> tuple[int, int]:
    """Multiply basis blades: returns (result mask, sign).

    The sign counts the transpositions needed to interleave the two factor
    lists into ascending order, plus one factor of -1 for every common
    generator (each squares to -1).
    """
    swaps = 0
    t = a >> 1
    while t:
        swaps += bin(t & b).count("1")
        t >>= 1
    sign = -1 if (swaps + bin(a & b).count("1")) % 2 else 1
    return a ^ b, sign


def blade_name(mask: int) -> str:
    if mask == 0:
        return "1"
    return "e" + "".join(str(i + 1) for i in range(mask.bit_length()) if mask >> i & 1)


class CliffordElement:
    """Multivector with exact rational blade coefficients.

    Zero coefficients are never stored.  Instances are treated as immutable:
    every operation returns a fresh element.
    """

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs: dict[int, Fraction] | None = None):
        if m < 1 or m > _MAX_DIMENSION:
            raise ValueError(f"dimension {m} outside 1..{_MAX_DIMENSION}")
        self.m = m
        clean: dict[int, Fraction] = {}
        if coeffs:
            for mask, c in coeffs.items():
                if mask < 0 or mask >= (1 << m):
                    raise ValueError(f"blade mask {mask} out of range for m={m}")
                c = Fraction(c)
                if c:
                    clean[mask] = c
        self.coeffs = clean

    @classmethod
    def zero(cls, m: int) -> "CliffordElement":
        return cls(m)

    @classmethod
    def scalar(cls, value, m: int) -> "CliffordElement":
        return cls(m, {0: Fraction(value)})

    @classmethod
    def generator(cls, i: int, m: int) -> "CliffordElement":
        """The generator e_i, 1-based index."""
        if not 1 <= i <= m:
            raise ValueError(f"generator index {i} outside 1..{m}")
        return cls(m, {1 << (i - 1): Fraction(1)})

    @classmethod
    def blade(cls, mask: int, m: int, coeff=1) -> "CliffordElement":
        return cls(m, {mask: Fraction(coeff)})

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_scalar(self) -> bool:
        return all(mask == 0 for mask in self.coeffs)

    def scalar_part(self) -> Fraction:
        return self.coeffs.get(0, Fraction(0))

    def grade_part(self, g: int) -> "CliffordElement":
        return CliffordElement(
            self.m, {mask: c for mask, c in self.coeffs.items() if blade_grade(mask) == g}
        )

    def _require_same_m(self, other: "CliffordElement") -> None:
        if self.m != other.m:
            raise ValueError(f"dimension mismatch: {self.m} != {other.m}")

    def __add__(self, other: "CliffordElement") -> "CliffordElement":
        self._require_same_m(other)
        out = dict(self.coeffs)
        for mask, c in other.coeffs.items():
            out[mask] = out.get(mask, Fraction(0)) + c
        return CliffordElement(self.m, out)

    def __sub__(self, other: "CliffordElement") -> "CliffordElement":
        return self + (-other)

    def __neg__(self) -> "CliffordElement":
        return CliffordElement(self.m, {mask: -c for mask, c in self.coeffs.items()})

    def scale(self, q) -> "CliffordElement":
        q = Fraction(q)
        return CliffordElement(self.m, {mask: c * q for mask, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, CliffordElement):
            self._require_same_m(other)
            out: dict[int, Fraction] = {}
            for a, ca in self.coeffs.items():
                for b, cb in other.coeffs.items():
                    mask, sign = blade_product(a, b)
                    out[mask] = out.get(mask, Fraction(0)) + sign * ca * cb
            return CliffordElement(self.m, out)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def conjugate(self) -> "CliffordElement":
        """Clifford conjugation: the anti-involution with e_i -> -e_i.

        On a grade-g blade this is the sign (-1)^(g(g+1)/2).
        """
        out = {}
        for mask, c in self.coeffs.items():
            g = blade_grade(mask)
            out[mask] = -c if (g * (g + 1) // 2) % 2 else c
        return CliffordElement(self.m, out)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CliffordElement.scalar(other, self.m)
        if not isinstance(other, CliffordElement):
            return NotImplemented
        return self.m == other.m and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.m, frozenset(self.coeffs.items())))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for mask in sorted(self.coeffs):
            c = self.coeffs[mask]
            name = blade_name(mask)
            if mask == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(name)
            elif c == -1:
                parts.append(f"-{name}")
            else:
                parts.append(f"{c}*{name}")
        return " + ".join(parts).replace("+ -", "- ")
