"""Exact real-root isolation and comparison via fraction-free Sturm chains.

Roots are represented as (squarefree defining polynomial, rational isolating
interval) pairs; every comparison refines intervals with Sturm counts and
settles ties through polynomial GCDs, so no verdict ever rests on floating
point.  The chains use pseudo-remainders with sign tracking to stay in
integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .graphs import Graph
from .matching import matching_polynomial
from .polynomials import IntPolynomial

EPS_DEFAULT = Fraction(1, 2**40)

LT, EQ, GT = -1, 0, 1


class NoRealRootError(ValueError):
    """Raised when a polynomial has no real root to isolate."""


@lru_cache(maxsize=4096)
def _sturm_chain(coeffs: tuple[int, ...]) -> tuple[IntPolynomial, ...]:
    f = IntPolynomial(coeffs).primitive_part()
    g = f.derivative().primitive_part()
    chain = [f]
    while not g.is_zero():
        chain.append(g)
        r, k = f.pseudo_rem(g)
        # true remainder is r / lc(g)^k; flip so the chain member is a
        # positive multiple of the negated remainder
        if g.leading < 0 and k % 2 == 1:
            nxt = r
        else:
            nxt = -r
        f, g = g, nxt.primitive_part()
    return tuple(chain)


def _variations_at(chain, point) -> int:
    count = 0
    prev = 0
    for p in chain:
        s = p.sign_at(point)
        if s == 0:
            continue
        if prev and s != prev:
            count += 1
        prev = s
    return count


def _variations_at_infinity(chain, positive: bool) -> int:
    count = 0
    prev = 0
    for p in chain:
        s = p.sign_at_infinity(positive)
        if s == 0:
            continue
        if prev and s != prev:
            count += 1
        prev = s
    return count


def _count_roots(chain, lo, hi) -> int:
    """Distinct real roots in (lo, hi]; hi=None means +infinity."""
    v_lo = _variations_at(chain, lo)
    v_hi = _variations_at_infinity(chain, True) if hi is None else _variations_at(chain, hi)
    return v_lo - v_hi


def sturm_root_count(p: IntPolynomial, lo: Fraction | int, hi: Fraction | int) -> int:
    """Number of distinct real roots of p in (lo, hi).

    Requires p nonzero and nonvanishing at both endpoints (perturb the
    endpoints before calling otherwise).
    """
    if p.is_zero():
        raise ValueError("zero polynomial")
    lo = Fraction(lo)
    hi = Fraction(hi)
    if lo >= hi:
        raise ValueError("empty interval")
    if p.sign_at(lo) == 0 or p.sign_at(hi) == 0:
        raise ValueError("interval endpoint is a root; perturb it")
    return _count_roots(_sturm_chain(p.coeffs), lo, hi)


def _nearest_int(f: Fraction) -> int:
    """Round to the nearest integer, ties toward positive infinity."""
    q, rem = divmod(f.numerator, f.denominator)
    return q + (1 if 2 * rem >= f.denominator else 0)


def _nonroot_point(p: IntPolynomial, mid: Fraction, hi: Fraction) -> Fraction:
    """First point of mid, mid+(hi-mid)/2, mid+(hi-mid)/4, ... avoiding roots."""
    c = mid
    delta = hi - mid
    while p.sign_at(c) == 0:
        delta /= 2
        c = mid + delta
    return c


@dataclass(frozen=True)
class AlgebraicRoot:
    """A real algebraic number: unique root of ``poly`` inside (lo, hi).

    ``poly`` is squarefree and primitive with positive leading coefficient;
    both endpoints are rational non-roots and the Sturm count over the
    interval is exactly one.
    """

    poly: IntPolynomial
    lo: Fraction
    hi: Fraction

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def refined(self, eps: Fraction | float) -> AlgebraicRoot:
        """Shrink the isolating interval to width <= eps (new object)."""
        eps = Fraction(eps)
        chain = _sturm_chain(self.poly.coeffs)
        lo, hi = self.lo, self.hi
        while hi - lo > eps:
            mid = _nonroot_point(self.poly, (lo + hi) / 2, hi)
            if _count_roots(chain, lo, mid) >= 1:
                hi = mid
            else:
                lo = mid
        return AlgebraicRoot(self.poly, lo, hi)

    def halved(self) -> AlgebraicRoot:
        return self.refined(self.width / 2)

    def sign_of(self, q: IntPolynomial) -> int:
        """Exact sign of q evaluated at this algebraic number."""
        if q.is_zero():
            return 0
        g = self.poly.gcd(q)
        if g.degree >= 1 and _count_roots(_sturm_chain(g.coeffs), self.lo, self.hi) >= 1:
            return 0
        qchain = _sturm_chain(q.coeffs)
        r = self
        while True:
            slo, shi = q.sign_at(r.lo), q.sign_at(r.hi)
            if slo != 0 and slo == shi and _count_roots(qchain, r.lo, r.hi) == 0:
                return slo
            r = r.halved()

    def compare_to_rational(self, value: Fraction | int) -> int:
        """-1, 0 or +1 as the root is below, equal to, or above value."""
        value = Fraction(value)
        r = self
        while True:
            if value <= r.lo:
                return GT
            if value >= r.hi:
                return LT
            if r.poly.sign_at(value) == 0:
                return EQ
            r = r.halved()

    def to_float(self) -> float:
        r = self.refined(Fraction(1, 2**60))
        return float((r.lo + r.hi) / 2)

    def decimal_str(self, digits: int = 12) -> str:
        """Decimal expansion of the root, correctly rounded to ``digits`` places.

        The isolating interval is refined until both endpoints round to the
        same value, so the last digit is exact; a root sitting exactly on a
        rounding boundary is rounded away from zero.
        """
        if digits < 0:
            raise ValueError("negative digit count")
        scale = 10**digits
        r = self.refined(Fraction(1, 10 ** (digits + 2)))
        while True:
            qlo = _nearest_int(r.lo * scale)
            qhi = _nearest_int(r.hi * scale)
            if qlo == qhi:
                q = qlo
                break
            if qhi - qlo == 1:
                boundary = Fraction(2 * qlo + 1, 2 * scale)
                if r.poly.sign_at(boundary) == 0:
                    q = qhi if boundary > 0 else qlo
                    break
            r = r.halved()
        s = str(abs(q)).rjust(digits + 1, "0")
        head, tail = (s[:-digits], s[-digits:]) if digits else (s, "")
        return ("-" if q < 0 else "") + head + ("." + tail if tail else "")


def max_real_root(p: IntPolynomial, eps: Fraction | float = EPS_DEFAULT) -> AlgebraicRoot:
    """Isolate the largest real root of p down to interval width <= eps."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    sf = p.squarefree_part()
    if sf.degree < 1:
        raise NoRealRootError("constant polynomial has no roots")
    eps = Fraction(eps)
    chain = _sturm_chain(sf.coeffs)
    bound = sf.cauchy_root_bound()
    lo, hi = -bound, bound
    inside = _count_roots(chain, lo, hi)
    if inside == 0:
        raise NoRealRootError("no real roots")
    while inside > 1 or hi - lo > eps:
        mid = _nonroot_point(sf, (lo + hi) / 2, hi)
        upper = _count_roots(chain, mid, hi)
        if upper >= 1:
            lo = mid
            inside = upper
        else:
            hi = mid
    return AlgebraicRoot(sf, lo, hi)


def max_matching_root(g: Graph, eps: Fraction | float = EPS_DEFAULT) -> AlgebraicRoot:
    """Largest root of the matching polynomial (0 for edgeless graphs)."""
    return max_real_root(matching_polynomial(g), eps)


def count_roots_above(p: IntPolynomial, root: AlgebraicRoot) -> int:
    """Number of distinct real roots of p strictly greater than ``root``.

    Refines the isolating interval until p has no roots inside it other than
    (possibly) the algebraic number itself, then counts past the upper end.
    """
    if p.degree < 1:
        return 0
    chain = _sturm_chain(p.coeffs)
    g = root.poly.gcd(p)
    alpha_is_root = g.degree >= 1 and _count_roots(_sturm_chain(g.coeffs), root.lo, root.hi) >= 1
    want = 1 if alpha_is_root else 0
    r = root
    while True:
        if (
            p.sign_at(r.lo) != 0
            and p.sign_at(r.hi) != 0
            and _count_roots(chain, r.lo, r.hi) == want
        ):
            break
        r = r.halved()
    bound = max(p.cauchy_root_bound(), r.hi + 1)
    return _count_roots(chain, r.hi, bound)


def compare_roots(a: AlgebraicRoot, b: AlgebraicRoot) -> int:
    """Exact order of two algebraic roots: LT (-1), EQ (0) or GT (+1)."""
    g = a.poly.gcd(b.poly)
    gchain = _sturm_chain(g.coeffs) if g.degree >= 1 else None
    while True:
        if a.hi <= b.lo:
            return LT
        if b.hi <= a.lo:
            return GT
        if gchain is not None:
            in_a = _count_roots(gchain, a.lo, a.hi)
            in_b = _count_roots(gchain, b.lo, b.hi)
            if in_a >= 1 and in_b >= 1:
                hull_lo = min(a.lo, b.lo)
                hull_hi = max(a.hi, b.hi)
                if _count_roots(gchain, hull_lo, hull_hi) == 1:
                    return EQ
        a = a.halved()
        b = b.halved()
