"""Dense univariate polynomials with exact integer coefficients.

Coefficients are stored constant-term first.  All arithmetic is exact; the
only rational operations (evaluation at a Fraction, root bounds) go through
fractions.Fraction.  Everything downstream (matching polynomials, Sturm
chains, characteristic polynomials) is built on this type.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as _int_gcd


def _normalize(coeffs: tuple[int, ...]) -> tuple[int, ...]:
    end = len(coeffs)
    while end > 0 and coeffs[end - 1] == 0:
        end -= 1
    return coeffs[:end]


@dataclass(frozen=True)
class IntPolynomial:
    """Immutable integer polynomial; ``coeffs[k]`` is the coefficient of x^k."""

    coeffs: tuple[int, ...] = ()

    @staticmethod
    def from_coeffs(coeffs) -> IntPolynomial:
        return IntPolynomial(_normalize(tuple(int(c) for c in coeffs)))

    @staticmethod
    def zero() -> IntPolynomial:
        return IntPolynomial(())

    @staticmethod
    def one() -> IntPolynomial:
        return IntPolynomial((1,))

    @staticmethod
    def x() -> IntPolynomial:
        return IntPolynomial((0, 1))

    @staticmethod
    def monomial(coeff: int, power: int) -> IntPolynomial:
        if coeff == 0:
            return IntPolynomial(())
        return IntPolynomial((0,) * power + (coeff,))

    # ------------------------------------------------------------------ basics

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        if not self.coeffs:
            return 0
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(_normalize(tuple(out)))

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        out = list(self.coeffs) + [0] * max(0, len(other.coeffs) - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            out[i] -= c
        return IntPolynomial(_normalize(tuple(out)))

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __mul__(self, other) -> IntPolynomial:
        if isinstance(other, int):
            if other == 0:
                return IntPolynomial(())
            return IntPolynomial(tuple(c * other for c in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial(())
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def shifted(self, k: int) -> IntPolynomial:
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def derivative(self) -> IntPolynomial:
        return IntPolynomial(
            _normalize(tuple(i * c for i, c in enumerate(self.coeffs) if i > 0))
        )

    # -------------------------------------------------------------- evaluation

    def evaluate(self, value):
        """Exact Horner evaluation at an int or Fraction."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def sign_at(self, value: Fraction | int) -> int:
        """Sign of the polynomial at a rational point, via integer arithmetic."""
        if isinstance(value, int):
            a, b = value, 1
        else:
            a, b = value.numerator, value.denominator
        acc = 0
        pw = 1
        for c in reversed(self.coeffs):
            acc = acc * a + c * pw
            pw *= b
        return (acc > 0) - (acc < 0)

    def sign_at_infinity(self, positive: bool = True) -> int:
        if not self.coeffs:
            return 0
        lead = self.leading
        sign = (lead > 0) - (lead < 0)
        if not positive and self.degree % 2 == 1:
            sign = -sign
        return sign

    def cauchy_root_bound(self) -> Fraction:
        """A rational B with every real root strictly inside (-B, B)."""
        if self.degree < 1:
            return Fraction(1)
        lead = abs(self.leading)
        top = max(abs(c) for c in self.coeffs[:-1])
        return 2 + Fraction(top, lead)

    # ------------------------------------------------------- integer GCD tools

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = _int_gcd(g, abs(c))
            if g == 1:
                break
        return g

    def primitive_part(self) -> IntPolynomial:
        """Divide out the (positive) content; the zero polynomial maps to itself."""
        g = self.content()
        if g <= 1:
            return self
        return IntPolynomial(tuple(c // g for c in self.coeffs))

    def pseudo_rem(self, other: IntPolynomial) -> tuple[IntPolynomial, int]:
        """Pseudo-remainder of self by other.

        Returns (r, k) with lc(other)^k * self = q * other + r for some q,
        deg r < deg other.  k is the number of multiplier applications, so the
        true rational remainder is r / lc(other)^k.
        """
        if other.is_zero():
            raise ZeroDivisionError("pseudo-remainder by zero polynomial")
        r = list(self.coeffs)
        d = len(other.coeffs) - 1
        lc = other.coeffs[-1]
        oc = other.coeffs
        k = 0
        while len(r) - 1 >= d and any(r):
            while r and r[-1] == 0:
                r.pop()
            if len(r) - 1 < d:
                break
            k += 1
            top = r[-1]
            shift = len(r) - 1 - d
            for i in range(len(r)):
                r[i] *= lc
            for i, c in enumerate(oc):
                r[shift + i] -= top * c
            r.pop()
        return IntPolynomial(_normalize(tuple(r))), k

    def exact_div(self, other: IntPolynomial) -> IntPolynomial:
        """Exact polynomial division; raises ValueError if not exact over Q."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return self
        rem = [Fraction(c) for c in self.coeffs]
        d = other.degree
        lc = other.coeffs[-1]
        quot: list[Fraction] = [Fraction(0)] * (len(rem) - d)
        for top in range(len(rem) - 1, d - 1, -1):
            q = rem[top] / lc
            quot[top - d] = q
            if q:
                for i, c in enumerate(other.coeffs):
                    rem[top - d + i] -= q * c
        if any(rem[:d]):
            raise ValueError("polynomial division is not exact")
        out = []
        for q in quot:
            if q.denominator != 1:
                raise ValueError("exact quotient has non-integer coefficients")
            out.append(q.numerator)
        return IntPolynomial(_normalize(tuple(out)))

    def gcd(self, other: IntPolynomial) -> IntPolynomial:
        """Primitive GCD with positive leading coefficient (primitive PRS)."""
        a, b = self.primitive_part(), other.primitive_part()
        if a.degree < b.degree:
            a, b = b, a
        while not b.is_zero():
            r, _ = a.pseudo_rem(b)
            a, b = b, r.primitive_part()
        if a.is_zero():
            return a
        if a.leading < 0:
            a = -a
        return a

    def squarefree_part(self) -> IntPolynomial:
        """Product of the distinct irreducible factors, positive leading coeff."""
        if self.degree < 1:
            return IntPolynomial.one() if self.coeffs else self
        g = self.gcd(self.derivative())
        sf = self.primitive_part().exact_div(g) if g.degree > 0 else self.primitive_part()
        if sf.leading < 0:
            sf = -sf
        return sf

    def squarefree_decomposition(self) -> list[tuple[IntPolynomial, int]]:
        """Yun decomposition: [(f_i, i)] with self = c * prod f_i^i, f_i squarefree.

        Only factors with positive degree are returned; leading signs are
        normalized positive (the constant c is dropped).
        """
        p = self.primitive_part()
        if p.degree < 1:
            return []
        if p.leading < 0:
            p = -p
        dp = p.derivative()
        g = p.gcd(dp)
        if g.degree == 0:
            return [(p, 1)]
        c = p.exact_div(g)
        d = dp.exact_div(g) - c.derivative()
        out: list[tuple[IntPolynomial, int]] = []
        i = 1
        while c.degree > 0:
            a = c.gcd(d) if not d.is_zero() else c
            if a.degree > 0:
                f = a if a.leading > 0 else -a
                out.append((f.primitive_part(), i))
                c = c.exact_div(a)
            d = d.exact_div(a) if a.degree > 0 else d
            d = d - c.derivative()
            i += 1
        return out

    # -------------------------------------------------------------- formatting

    def to_text(self) -> str:
        """Space-separated coefficients, constant term first ('0' for zero)."""
        if not self.coeffs:
            return "0"
        return " ".join(str(c) for c in self.coeffs)

    @staticmethod
    def from_text(text: str) -> IntPolynomial:
        parts = text.split()
        if not parts:
            raise ValueError("empty polynomial text")
        try:
            return IntPolynomial.from_coeffs(int(p) for p in parts)
        except ValueError as exc:
            raise ValueError(f"bad polynomial text {text!r}") from exc

    def coeff_strings(self) -> list[str]:
        """Coefficients as decimal strings, constant term first (JSON form)."""
        return [str(c) for c in self.coeffs] if self.coeffs else ["0"]

    def pretty(self, var: str = "x") -> str:
        """Human form, highest power first, e.g. 'x^5 - 6x^3 + 5x'."""
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                xpow = var if k == 1 else f"{var}^{k}"
                body = xpow if mag == 1 else f"{mag}{xpow}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self) -> str:
        return self.pretty()
