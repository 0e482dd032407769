"""Exact matching profiles and matching polynomials.

The profile (m_0, m_1, ..., m_{n//2}) counts k-edge matchings.  The engine
applies the edge-deletion recurrence at a maximum-degree pivot vertex: the
deletions of all edges at the pivot telescope into subproblems on induced
subgraphs only (G minus the pivot, and G minus the pivot and one neighbor),
so memoization works on plain vertex bitmasks.  Disconnected masks factor
through the component product rule.

A profile is carried internally as one big integer with fixed-width fields,
one per matching size; the field width is chosen from the m_k(K_n) upper
bound so that field sums and convolutions never carry.  Addition of packed
profiles is integer addition and the component product rule is integer
multiplication, which keeps the exhaustive sweeps fast while staying exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .graphs import Graph, disjoint_union, iter_bits
from .polynomials import IntPolynomial


@dataclass(frozen=True)
class MatchingProfile:
    """Matching counts m_0..m_{n//2} of a graph of order n."""

    counts: tuple[int, ...]

    @property
    def max_size(self) -> int:
        return len(self.counts) - 1


def _field_width(n: int) -> int:
    bound = 1
    for k in range(n // 2 + 1):
        mk = comb(n, 2 * k)
        for j in range(2 * k - 1, 0, -2):
            mk *= j
        bound = max(bound, mk)
    return bound.bit_length() + 1


def matching_profile(g: Graph) -> MatchingProfile:
    """Exact matching counts via the memoized deletion recurrence."""
    n = g.n
    adj = g.adj
    width = _field_width(n)
    memo: dict[int, int] = {}

    def packed(mask: int) -> int:
        # strip isolated vertices; they do not change any m_k
        mm = mask
        while mm:
            b = mm & -mm
            mm ^= b
            if not adj[b.bit_length() - 1] & mask:
                mask ^= b
        if mask == 0:
            return 1
        hit = memo.get(mask)
        if hit is not None:
            return hit
        # split off the component of the lowest vertex (product rule)
        comp = mask & -mask
        frontier = comp
        while frontier:
            grow = 0
            for v in iter_bits(frontier):
                grow |= adj[v]
            grow &= mask & ~comp
            comp |= grow
            frontier = grow
        if comp != mask:
            result = packed(comp) * packed(mask ^ comp)
        else:
            # pivot: smallest-index maximum-degree vertex; deleting its edges
            # one by one telescopes into the two induced-subgraph terms
            best, best_deg = -1, -1
            mm = mask
            while mm:
                b = mm & -mm
                mm ^= b
                v = b.bit_length() - 1
                d = (adj[v] & mask).bit_count()
                if d > best_deg:
                    best, best_deg = v, d
            rest = mask ^ (1 << best)
            result = packed(rest)
            for v in iter_bits(adj[best] & mask):
                result += packed(rest ^ (1 << v)) << width
        memo[mask] = result
        return result

    value = packed((1 << n) - 1)
    fmask = (1 << width) - 1
    counts = tuple((value >> (k * width)) & fmask for k in range(n // 2 + 1))
    return MatchingProfile(counts)


def polynomial_from_profile(counts, n: int, signed: bool = True) -> IntPolynomial:
    """Build sum_k (+/-1)^k m_k x^(n-2k) from matching counts."""
    coeffs = [0] * (n + 1)
    for k, mk in enumerate(counts):
        if n - 2 * k < 0:
            if mk:
                raise ValueError(f"count m_{k} nonzero but 2k > n")
            continue
        coeffs[n - 2 * k] = -mk if (signed and k % 2) else mk
    return IntPolynomial.from_coeffs(coeffs)


def matching_polynomial(g: Graph) -> IntPolynomial:
    """Signed matching polynomial sum_k (-1)^k m_k x^(n-2k), monic, degree n."""
    return polynomial_from_profile(matching_profile(g).counts, g.n, signed=True)


def matching_profile_bruteforce(g: Graph) -> MatchingProfile:
    """Independent oracle: try every edge subset, keep the pairwise-disjoint ones.

    Subsets larger than n//2 edges cannot be pairwise disjoint (each disjoint
    edge covers two fresh vertices), so sizes are capped there.
    """
    emasks = [(1 << u) | (1 << v) for u, v in g.edge_list()]
    counts = [1] + [0] * (g.n // 2)
    for k in range(1, g.n // 2 + 1):
        total = 0
        for combo in combinations(emasks, k):
            acc = 0
            for em in combo:
                if acc & em:
                    break
                acc |= em
            else:
                total += 1
        counts[k] = total
    return MatchingProfile(tuple(counts))


def check_deletion_identity(g: Graph, edge: tuple[int, int]) -> bool:
    """Verify m(G,x) = m(G-e,x) - m(G-u-v,x) for the given edge."""
    u, v = edge
    if not g.has_edge(u, v):
        raise ValueError(f"({u},{v}) is not an edge")
    whole = matching_polynomial(g)
    deleted = matching_polynomial(g.without_edge(u, v))
    rest = [w for w in range(g.n) if w not in (u, v)]
    if rest:
        sub, _ = g.induced(rest)
        shrunk = matching_polynomial(sub)
    else:
        shrunk = IntPolynomial.one()
    return whole == deleted - shrunk


def check_union_identity(parts) -> bool:
    """Verify the matching polynomial of a disjoint union is the product."""
    parts = list(parts)
    product = IntPolynomial.one()
    for p in parts:
        product = product * matching_polynomial(p)
    return matching_polynomial(disjoint_union(parts)) == product
