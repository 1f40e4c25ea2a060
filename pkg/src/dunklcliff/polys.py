"""Multivariate polynomials in x_1..x_m with Clifford-element coefficients.

The variables are real scalars, so they commute with everything; only the
coefficients carry the noncommutative structure.  A radial-scaled function is
a finite sum of terms r^(2q) * P(x) with rational q, which keeps non-integer
radial powers exact.
"""
from __future__ import annotations

from fractions import Fraction

from .clifford import CliffordElement

Monomial = tuple  # exponent tuple of length m


def monomial_key(exps: Monomial) -> tuple:
    """Graded-lex ordering key, used for all deterministic output."""
    return (sum(exps), exps)


class MVPoly:
    """Sparse polynomial: monomial exponent tuple -> CliffordElement."""

    __slots__ = ("m", "terms")

    def __init__(self, m: int, terms: dict[Monomial, CliffordElement] | None = None):
        self.m = m
        clean: dict[Monomial, CliffordElement] = {}
        if terms:
            for exps, c in terms.items():
                if len(exps) != m:
                    raise ValueError(f"exponent tuple {exps} has length != {m}")
                if any(e < 0 for e in exps):
                    raise ValueError(f"negative exponent in {exps}")
                if c.m != m:
                    raise ValueError("coefficient dimension mismatch")
                if not c.is_zero():
                    clean[tuple(exps)] = c
        self.terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, m: int) -> "MVPoly":
        return cls(m)

    @classmethod
    def scalar(cls, value, m: int) -> "MVPoly":
        return cls(m, {(0,) * m: CliffordElement.scalar(value, m)})

    @classmethod
    def clifford(cls, c: CliffordElement) -> "MVPoly":
        return cls(c.m, {(0,) * c.m: c})

    @classmethod
    def variable(cls, i: int, m: int) -> "MVPoly":
        """The scalar variable x_i, 1-based index."""
        exps = tuple(1 if j == i - 1 else 0 for j in range(m))
        return cls(m, {exps: CliffordElement.scalar(1, m)})

    @classmethod
    def vector(cls, m: int) -> "MVPoly":
        """The vector variable: sum of e_i x_i."""
        out = {}
        for i in range(1, m + 1):
            exps = tuple(1 if j == i - 1 else 0 for j in range(m))
            out[exps] = CliffordElement.generator(i, m)
        return cls(m, out)

    @classmethod
    def radius_squared(cls, m: int) -> "MVPoly":
        """The scalar polynomial |x|^2 = sum of x_i^2."""
        out = {}
        for i in range(m):
            exps = tuple(2 if j == i else 0 for j in range(m))
            out[exps] = CliffordElement.scalar(1, m)
        return cls(m, out)

    @classmethod
    def monomial(cls, exps: Monomial, coeff, m: int) -> "MVPoly":
        if isinstance(coeff, CliffordElement):
            return cls(m, {tuple(exps): coeff})
        return cls(m, {tuple(exps): CliffordElement.scalar(coeff, m)})

    # -- ring operations ----------------------------------------------

    def _require_same_m(self, other: "MVPoly") -> None:
        if self.m != other.m:
            raise ValueError(f"dimension mismatch: {self.m} != {other.m}")

    def __add__(self, other: "MVPoly") -> "MVPoly":
        self._require_same_m(other)
        out = dict(self.terms)
        for exps, c in other.terms.items():
            if exps in out:
                out[exps] = out[exps] + c
            else:
                out[exps] = c
        return MVPoly(self.m, out)

    def __sub__(self, other: "MVPoly") -> "MVPoly":
        return self + (-other)

    def __neg__(self) -> "MVPoly":
        return MVPoly(self.m, {exps: -c for exps, c in self.terms.items()})

    def scale(self, q) -> "MVPoly":
        q = Fraction(q)
        if not q:
            return MVPoly.zero(self.m)
        return MVPoly(self.m, {exps: c.scale(q) for exps, c in self.terms.items()})

    def __mul__(self, other):
        """Product; Clifford coefficients multiply in the written order.

        poly * CliffordElement multiplies every coefficient on the right;
        CliffordElement * poly (via __rmul__) multiplies on the left.
        """
        if isinstance(other, MVPoly):
            self._require_same_m(other)
            out: dict[Monomial, CliffordElement] = {}
            for ea, ca in self.terms.items():
                for eb, cb in other.terms.items():
                    exps = tuple(a + b for a, b in zip(ea, eb))
                    prod = ca * cb
                    if exps in out:
                        out[exps] = out[exps] + prod
                    else:
                        out[exps] = prod
            return MVPoly(self.m, out)
        if isinstance(other, CliffordElement):
            return MVPoly(self.m, {exps: c * other for exps, c in self.terms.items()})
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, CliffordElement):
            return MVPoly(self.m, {exps: other * c for exps, c in self.terms.items()})
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> "MVPoly":
        if n < 0:
            raise ValueError("negative power")
        out = MVPoly.scalar(1, self.m)
        for _ in range(n):
            out = out * self
        return out

    def conjugate(self) -> "MVPoly":
        """Clifford-conjugate every coefficient (variables are real)."""
        return MVPoly(self.m, {exps: c.conjugate() for exps, c in self.terms.items()})

    # -- structure ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(exps) for exps in self.terms)

    def is_homogeneous(self) -> bool:
        degrees = {sum(exps) for exps in self.terms}
        return len(degrees) <= 1

    def homogeneous_component(self, k: int) -> "MVPoly":
        return MVPoly(self.m, {e: c for e, c in self.terms.items() if sum(e) == k})

    def homogeneous_parts(self) -> dict[int, "MVPoly"]:
        parts: dict[int, dict] = {}
        for exps, c in self.terms.items():
            parts.setdefault(sum(exps), {})[exps] = c
        return {d: MVPoly(self.m, t) for d, t in sorted(parts.items())}

    def coefficient(self, exps: Monomial) -> CliffordElement:
        return self.terms.get(tuple(exps), CliffordElement.zero(self.m))

    def partial(self, i: int) -> "MVPoly":
        """Partial derivative with respect to x_i, 1-based index."""
        out: dict[Monomial, CliffordElement] = {}
        for exps, c in self.terms.items():
            e = exps[i - 1]
            if e:
                lowered = exps[: i - 1] + (e - 1,) + exps[i:]
                scaled = c.scale(e)
                if lowered in out:
                    out[lowered] = out[lowered] + scaled
                else:
                    out[lowered] = scaled
        return MVPoly(self.m, out)

    def substitute_linear(self, matrix) -> "MVPoly":
        """Replace each x_i by the linear form sum_j matrix[i][j] x_j."""
        m = self.m
        rows = [
            MVPoly(
                m,
                {
                    tuple(1 if c == j else 0 for c in range(m)): CliffordElement.scalar(
                        matrix[i][j], m
                    )
                    for j in range(m)
                    if matrix[i][j]
                },
            )
            for i in range(m)
        ]
        power_cache: list[dict[int, MVPoly]] = [dict() for _ in range(m)]

        def var_power(i: int, e: int) -> MVPoly:
            cache = power_cache[i]
            if e not in cache:
                if e == 0:
                    cache[e] = MVPoly.scalar(1, m)
                else:
                    cache[e] = var_power(i, e - 1) * rows[i]
            return cache[e]

        out = MVPoly.zero(m)
        for exps, c in self.terms.items():
            piece = MVPoly.clifford(c)
            for i, e in enumerate(exps):
                if e:
                    piece = piece * var_power(i, e)
            out = out + piece
        return out

    def exact_div_linear(self, alpha) -> "MVPoly":
        """Exact division by the linear form <alpha, x>.

        Long division in the first variable with a nonzero alpha-coefficient,
        treating the others as parameters.  Raises if a remainder survives,
        which signals a non-divisible input.
        """
        alpha = [Fraction(a) for a in alpha]
        if len(alpha) != self.m:
            raise ValueError("root length mismatch")
        pivot = next((i for i, a in enumerate(alpha) if a), None)
        if pivot is None:
            raise ValueError("cannot divide by the zero form")
        lead = alpha[pivot]
        divisor_terms = {}
        for j, a in enumerate(alpha):
            if a:
                exps = tuple(1 if c == j else 0 for c in range(self.m))
                divisor_terms[exps] = CliffordElement.scalar(a, self.m)
        divisor = MVPoly(self.m, divisor_terms)

        quotient = MVPoly.zero(self.m)
        rem = self
        while rem.terms:
            top = max(e[pivot] for e in rem.terms)
            if top == 0:
                raise ValueError(f"nonzero remainder after division by {alpha}: {rem!r}")
            block = {
                e[:pivot] + (e[pivot] - 1,) + e[pivot + 1 :]: c.scale(Fraction(1, 1) / lead)
                for e, c in rem.terms.items()
                if e[pivot] == top
            }
            part = MVPoly(self.m, block)
            quotient = quotient + part
            rem = rem - part * divisor
        return quotient

    def try_div_radius_squared(self) -> "MVPoly | None":
        """Exact quotient by |x|^2, or None when not divisible.

        Long division in the last variable: |x|^2 is monic of degree 2 there.
        """
        if self.is_zero():
            return self
        m = self.m
        r2 = MVPoly.radius_squared(m)
        quotient = MVPoly.zero(m)
        rem = self
        while rem.terms:
            top = max(e[m - 1] for e in rem.terms)
            if top < 2:
                return None
            block = {
                e[: m - 1] + (e[m - 1] - 2,): c
                for e, c in rem.terms.items()
                if e[m - 1] == top
            }
            part = MVPoly(m, block)
            quotient = quotient + part
            rem = rem - part * r2
        return quotient

    def __eq__(self, other) -> bool:
        if not isinstance(other, MVPoly):
            return NotImplemented
        return self.m == other.m and self.terms == other.terms

    def __hash__(self):
        return hash((self.m, frozenset((e, c) for e, c in self.terms.items())))

    def sorted_terms(self) -> list[tuple[Monomial, CliffordElement]]:
        return sorted(self.terms.items(), key=lambda item: monomial_key(item[0]))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for exps, c in self.sorted_terms():
            mono = "*".join(
                f"x{i + 1}^{e}" if e > 1 else f"x{i + 1}" for i, e in enumerate(exps) if e
            )
            if mono:
                bits.append(f"({c!r})*{mono}")
            else:
                bits.append(f"({c!r})")
        return " + ".join(bits)


class RadialScaledFunction:
    """Finite sum of r^(2q) * P(x) with rational exponents q.

    Parts are keyed by q; two parts combine additively when their exponents
    agree.  Folding integer differences of q into the polynomial factor
    (r^2 = |x|^2) happens only in normalized(), so non-integer exponents stay
    symbolic.
    """

    __slots__ = ("m", "parts")

    def __init__(self, m: int, parts: dict[Fraction, MVPoly] | None = None):
        self.m = m
        clean: dict[Fraction, MVPoly] = {}
        if parts:
            for q, p in parts.items():
                if p.m != m:
                    raise ValueError("part dimension mismatch")
                if not p.is_zero():
                    clean[Fraction(q)] = p
        self.parts = clean

    @classmethod
    def from_poly(cls, p: MVPoly) -> "RadialScaledFunction":
        return cls(p.m, {Fraction(0): p})

    def is_polynomial(self) -> bool:
        return all(q == 0 for q in self.parts)

    def as_poly(self) -> MVPoly:
        folded = self.normalized()
        r2 = MVPoly.radius_squared(self.m)
        out = MVPoly.zero(self.m)
        for q, p in folded.parts.items():
            if q.denominator != 1 or q < 0:
                raise ValueError("radial exponents present, not a polynomial")
            out = out + p * r2 ** int(q)
        return out

    def __add__(self, other: "RadialScaledFunction") -> "RadialScaledFunction":
        if self.m != other.m:
            raise ValueError("dimension mismatch")
        out = dict(self.parts)
        for q, p in other.parts.items():
            if q in out:
                out[q] = out[q] + p
            else:
                out[q] = p
        return RadialScaledFunction(self.m, out)

    def __sub__(self, other: "RadialScaledFunction") -> "RadialScaledFunction":
        return self + other.scale(-1)

    def scale(self, q) -> "RadialScaledFunction":
        return RadialScaledFunction(self.m, {e: p.scale(q) for e, p in self.parts.items()})

    def lmul_poly(self, f: MVPoly) -> "RadialScaledFunction":
        """Left-multiply every polynomial part by f (Clifford order matters)."""
        return RadialScaledFunction(self.m, {q: f * p for q, p in self.parts.items()})

    def shift_exponent(self, dq) -> "RadialScaledFunction":
        """Multiply by r^(2 dq)."""
        dq = Fraction(dq)
        return RadialScaledFunction(self.m, {q + dq: p for q, p in self.parts.items()})

    def normalized(self) -> "RadialScaledFunction":
        """Canonical form: within each class of exponents differing by an
        integer, rewrite everything over one exponent using r^2 = |x|^2,
        then pull every |x|^2 factor of the polynomial back into the
        exponent.  The polynomial part of each surviving class has no
        radius-squared factor."""
        classes: dict[Fraction, list[tuple[Fraction, MVPoly]]] = {}
        for q, p in self.parts.items():
            # q mod 1 as a Fraction in [0, 1)
            frac_class = q - (q.numerator // q.denominator)
            classes.setdefault(frac_class, []).append((q, p))
        r2 = MVPoly.radius_squared(self.m)
        out: dict[Fraction, MVPoly] = {}
        for members in classes.values():
            q_min = min(q for q, _ in members)
            total = MVPoly.zero(self.m)
            for q, p in members:
                steps = int(q - q_min)
                total = total + p * r2**steps
            while not total.is_zero():
                reduced = total.try_div_radius_squared()
                if reduced is None:
                    break
                total = reduced
                q_min += 1
            if not total.is_zero():
                out[q_min] = total
        return RadialScaledFunction(self.m, out)

    def is_zero(self) -> bool:
        return not self.normalized().parts

    def __eq__(self, other) -> bool:
        if not isinstance(other, RadialScaledFunction):
            return NotImplemented
        return self.m == other.m and (self - other).is_zero()

    def __repr__(self) -> str:
        if not self.parts:
            return "0"
        return " + ".join(f"r^({2 * q})*[{p!r}]" for q, p in sorted(self.parts.items()))
