"""Skew-adjacency characteristic polynomials over edge orientations.

An orientation assigns a direction to every edge; the skew-adjacency matrix
S has S[u][v] = +1 for an arc u -> v, -1 the other way, 0 otherwise.  The
characteristic polynomial det(xI - S) is computed exactly by evaluating a
fraction-free integer determinant at n+1 integer points and interpolating.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graphs import Graph, GraphTooLargeError
from .matching import matching_profile, polynomial_from_profile
from .polynomials import IntPolynomial
from .roots import EPS_DEFAULT, GT, AlgebraicRoot, compare_roots, max_real_root

CHAR_POLY_MAX_N = 24
ORIENTATION_SWEEP_MAX_M = 24
RADIUS_SWEEP_MAX_M = 20


@dataclass(frozen=True)
class Orientation:
    """A graph plus an edge-direction bitmask.

    Edges are numbered in lexicographic order; bit k set means the edge is
    directed from its lower-index endpoint to its higher-index endpoint.
    """

    graph: Graph
    mask: int

    def __post_init__(self):
        if not 0 <= self.mask < (1 << self.graph.m):
            raise ValueError(f"orientation mask {self.mask:#x} out of range")

    def arcs(self) -> tuple[tuple[int, int], ...]:
        out = []
        for k, (u, v) in enumerate(self.graph.edge_list()):
            out.append((u, v) if (self.mask >> k) & 1 else (v, u))
        return tuple(out)

    def mask_hex(self) -> str:
        return format(self.mask, "#x")

    def skew_matrix(self) -> list[list[int]]:
        n = self.graph.n
        s = [[0] * n for _ in range(n)]
        for tail, head in self.arcs():
            s[tail][head] = 1
            s[head][tail] = -1
        return s


def all_orientations(g: Graph):
    """Yield every orientation of g exactly once (ascending bitmask)."""
    m = g.m
    if m > ORIENTATION_SWEEP_MAX_M:
        raise GraphTooLargeError(f"orientation sweep limited to m <= {ORIENTATION_SWEEP_MAX_M}")
    for mask in range(1 << m):
        yield Orientation(g, mask)


def _det_bareiss(mat: list[list[int]]) -> int:
    """Fraction-free determinant; consumes the matrix."""
    n = len(mat)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if mat[k][k] == 0:
            for i in range(k + 1, n):
                if mat[i][k]:
                    mat[k], mat[i] = mat[i], mat[k]
                    sign = -sign
                    break
            else:
                return 0
        pkk = mat[k][k]
        row_k = mat[k]
        for i in range(k + 1, n):
            row_i = mat[i]
            mik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pkk - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pkk
    return sign * mat[n - 1][n - 1]


def char_poly_values(o: Orientation) -> tuple[int, ...]:
    """det(tI - S) at the integer points t = 0..n.

    Two polynomials of degree at most n that agree on n + 1 points are equal,
    so this tuple is a complete fingerprint of the characteristic polynomial
    and a cheap way to test candidate identities without interpolating.
    """
    n = o.graph.n
    if n > CHAR_POLY_MAX_N:
        raise GraphTooLargeError(f"skew characteristic polynomial limited to n <= {CHAR_POLY_MAX_N}")
    s = o.skew_matrix()
    values = []
    for t in range(n + 1):
        mat = [row[:] for row in s]
        for i in range(n):
            for j in range(n):
                mat[i][j] = -mat[i][j]
            mat[i][i] += t
        values.append(_det_bareiss(mat))
    return tuple(values)


def skew_char_poly(o: Orientation) -> IntPolynomial:
    """Exact characteristic polynomial det(xI - S) of the skew matrix."""
    n = o.graph.n
    values = char_poly_values(o)
    # Newton forward differences at nodes 0..n; the divided differences of an
    # integer polynomial at consecutive integers are integers
    diffs = list(values)
    coeffs_binom = []
    for k in range(n + 1):
        coeffs_binom.append(diffs[0])
        diffs = [diffs[i + 1] - diffs[i] for i in range(len(diffs) - 1)]
    acc = [Fraction(0)] * (n + 1)
    basis = [Fraction(1)]
    for k in range(n + 1):
        for i, b in enumerate(basis):
            acc[i] += coeffs_binom[k] * b
        nxt = [Fraction(0)] * (len(basis) + 1)
        for i, b in enumerate(basis):
            nxt[i + 1] += b
            nxt[i] -= k * b
        basis = [c / (k + 1) for c in nxt]
    out = []
    for c in acc:
        if c.denominator != 1:
            raise ArithmeticError("interpolation produced a non-integer coefficient")
        out.append(c.numerator)
    return IntPolynomial.from_coeffs(out)


def verify_identity(o: Orientation) -> bool:
    """Check det(xI - S) against the unsigned matching-count polynomial.

    The target is sum_k m_k(G) x^(n-2k).  This is the coefficientwise real
    form of (-i)^n m(G, ix): the x^(n-2k) term of m(G, ix) carries the factor
    (-1)^k i^(n-2k), and (-i)^n * (-1)^k * i^(n-2k) = (i^2)^n * (i^2)^(-k) *
    (-1)^k = (-1)^(2n) = 1, so every coefficient lands on +m_k.
    """
    g = o.graph
    target = polynomial_from_profile(matching_profile(g).counts, g.n, signed=False)
    return skew_char_poly(o) == target


def _alternating_form(phi: IntPolynomial, n: int) -> IntPolynomial:
    """Rewrite sum_k a_2k x^(n-2k) as sum_k (-1)^k a_2k x^(n-2k).

    The roots of the result are the signed eigenvalue magnitudes: phi's roots
    come in purely imaginary pairs x = +/- i*lambda, and substituting x = i*y
    turns phi into this alternating polynomial (up to a unit), whose largest
    real root is the spectral radius.
    """
    coeffs = list(phi.coeffs) + [0] * (n + 1 - len(phi.coeffs))
    out = [0] * (n + 1)
    for j in range(n + 1):
        if (n - j) % 2 == 1:
            if coeffs[j]:
                raise ArithmeticError(f"skew characteristic polynomial has odd term x^{j}")
            continue
        k = (n - j) // 2
        out[j] = -coeffs[j] if k % 2 else coeffs[j]
    return IntPolynomial.from_coeffs(out)


def skew_spectral_radius(o: Orientation, eps: Fraction | float = EPS_DEFAULT) -> AlgebraicRoot:
    """Spectral radius of the skew matrix as an exact algebraic number."""
    phi = skew_char_poly(o)
    return max_real_root(_alternating_form(phi, o.graph.n), eps)


def max_skew_spectral_radius(g: Graph, eps: Fraction | float = EPS_DEFAULT) -> AlgebraicRoot:
    """Maximum of skew_spectral_radius over all orientations of g."""
    if g.m > RADIUS_SWEEP_MAX_M:
        raise GraphTooLargeError(f"radius sweep limited to m <= {RADIUS_SWEEP_MAX_M}")
    best: AlgebraicRoot | None = None
    seen: set[tuple[int, ...]] = set()
    for o in all_orientations(g):
        phi = skew_char_poly(o)
        if phi.coeffs in seen:
            continue
        seen.add(phi.coeffs)
        rho = max_real_root(_alternating_form(phi, g.n), eps)
        if best is None or compare_roots(rho, best) == GT:
            best = rho
    assert best is not None
    return best
