"""Small simple graphs as bitmask adjacency rows, with graph6 I/O.

Vertices are 0..n-1 with n <= 64, so every adjacency row fits in a single
machine word and induced subgraphs are plain vertex masks.  Includes
connectivity, biconnected blocks, the all-cycles-odd test, long-odd-cycle
extraction and a refinement-plus-backtracking isomorphism test for small n.
"""

from __future__ import annotations

from dataclasses import dataclass

MAX_VERTICES = 64
ISO_DEFAULT_MAX_N = 10


class Graph6Error(ValueError):
    """Raised for malformed graph6 input."""


class GraphTooLargeError(ValueError):
    """Raised when an operation is asked to exceed its supported order."""


def iter_bits(mask: int):
    """Yield set bit positions of mask in increasing order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph; ``adj[v]`` is the neighbor bitmask of v."""

    n: int
    adj: tuple[int, ...]

    @staticmethod
    def from_edges(n: int, edges) -> Graph:
        if not 1 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count {n} outside 1..{MAX_VERTICES}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(n, tuple(rows))

    @staticmethod
    def empty(n: int) -> Graph:
        if not 1 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count {n} outside 1..{MAX_VERTICES}")
        return Graph(n, (0,) * n)

    # ------------------------------------------------------------------ basics

    @property
    def m(self) -> int:
        """Number of edges."""
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def max_degree(self) -> int:
        return max(row.bit_count() for row in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def edge_list(self) -> tuple[tuple[int, int], ...]:
        """All edges (u, v) with u < v, in lexicographic order."""
        out = []
        for u in range(self.n):
            row = self.adj[u] >> (u + 1)
            v = u + 1
            while row:
                if row & 1:
                    out.append((u, v))
                row >>= 1
                v += 1
        return tuple(out)

    def with_edge(self, u: int, v: int) -> Graph:
        if u == v or not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"bad edge ({u},{v})")
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def without_edge(self, u: int, v: int) -> Graph:
        if not self.has_edge(u, v):
            raise ValueError(f"edge ({u},{v}) not present")
        rows = list(self.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def relabeled(self, perm) -> Graph:
        """Relabel by perm (perm[old] = new); perm must be a permutation of 0..n-1."""
        perm = tuple(perm)
        if sorted(perm) != list(range(self.n)):
            raise ValueError("not a permutation")
        rows = [0] * self.n
        for old in range(self.n):
            row = 0
            for w in iter_bits(self.adj[old]):
                row |= 1 << perm[w]
            rows[perm[old]] = row
        return Graph(self.n, tuple(rows))

    def induced(self, vertices) -> tuple[Graph, tuple[int, ...]]:
        """Induced subgraph on the given vertices; returns (graph, old labels)."""
        keep = sorted(set(vertices))
        if not keep:
            raise ValueError("induced subgraph needs at least one vertex")
        index = {v: i for i, v in enumerate(keep)}
        edges = []
        for u in keep:
            for w in iter_bits(self.adj[u]):
                if w > u and w in index:
                    edges.append((index[u], index[w]))
        return Graph.from_edges(len(keep), edges), tuple(keep)


# ---------------------------------------------------------------- constructors


def path_graph(k: int) -> Graph:
    """Path on k vertices (k-1 edges)."""
    return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def star_graph(s: int) -> Graph:
    """Star K_{1,s} on s+1 vertices, center 0."""
    if s < 0:
        raise ValueError("negative star size")
    return Graph.from_edges(s + 1, [(0, i) for i in range(1, s + 1)])


def complete_graph(k: int) -> Graph:
    return Graph.from_edges(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def disjoint_union(parts) -> Graph:
    parts = list(parts)
    if not parts:
        raise ValueError("empty union")
    n = sum(p.n for p in parts)
    rows: list[int] = []
    off = 0
    for p in parts:
        rows.extend(row << off for row in p.adj)
        off += p.n
    return Graph(n, tuple(rows))


# -------------------------------------------------------------------- graph6


def write_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = chr(63 + n)
    else:
        head = "~" + chr(63 + ((n >> 12) & 63)) + chr(63 + ((n >> 6) & 63)) + chr(63 + (n & 63))
    chars = []
    group = 0
    filled = 0
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            group = (group << 1) | ((col >> i) & 1)
            filled += 1
            if filled == 6:
                chars.append(chr(63 + group))
                group = 0
                filled = 0
    if filled:
        chars.append(chr(63 + (group << (6 - filled))))
    return head + "".join(chars)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string; raises Graph6Error on malformed input."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 string")
    data = [ord(c) for c in s]
    for c in data:
        if not 63 <= c <= 126:
            raise Graph6Error(f"malformed header or payload byte {c}")
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise Graph6Error("graph6 orders beyond 18 bits are not supported")
        if len(data) < 4:
            raise Graph6Error("malformed header: truncated extended order")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    if n < 1 or n > MAX_VERTICES:
        raise Graph6Error(f"vertex count {n} outside supported range 1..{MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) < need:
        raise Graph6Error(f"truncated bit payload: need {need} bytes, got {len(body)}")
    if len(body) > need:
        raise Graph6Error(f"unexpected trailing data: {len(body) - need} extra bytes")
    bits = 0
    for c in body:
        bits = (bits << 6) | (c - 63)
    pad = 6 * need - nbits
    if pad and bits & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    bits >>= pad
    rows = [0] * n
    pos = nbits
    for j in range(1, n):
        for i in range(j):
            pos -= 1
            if (bits >> pos) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, tuple(rows))


# ---------------------------------------------------------------- edge lists


def write_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edge_list())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse the 'n <count>' header plus one 'u v' edge per line."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty edge-list text")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "n":
        raise ValueError(f"bad header line {lines[0]!r}, expected 'n <count>'")
    try:
        n = int(head[1])
    except ValueError as exc:
        raise ValueError(f"bad vertex count {head[1]!r}") from exc
    edges = []
    seen = set()
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise ValueError(f"bad edge line {ln!r}") from exc
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ValueError(f"duplicate edge {ln!r}")
        seen.add(key)
        edges.append((u, v))
    return Graph.from_edges(n, edges)


# ------------------------------------------------------------- connectivity


def _component_mask(adj, start: int, within: int) -> int:
    comp = 1 << start
    frontier = comp
    while frontier:
        grow = 0
        for v in iter_bits(frontier):
            grow |= adj[v]
        grow &= within & ~comp
        comp |= grow
        frontier = grow
    return comp


def connected_components(g: Graph) -> list[tuple[Graph, tuple[int, ...]]]:
    """Components as (subgraph, original-labels) pairs, by smallest vertex."""
    out = []
    left = (1 << g.n) - 1
    while left:
        start = (left & -left).bit_length() - 1
        comp = _component_mask(g.adj, start, left)
        left ^= comp
        out.append(g.induced(iter_bits(comp)))
    return out


def is_connected(g: Graph) -> bool:
    return _component_mask(g.adj, 0, (1 << g.n) - 1) == (1 << g.n) - 1


# ------------------------------------------------------------------- blocks


@dataclass(frozen=True)
class BlockDecomposition:
    """Biconnected blocks (as edge frozensets partitioning E) and cut vertices."""

    blocks: tuple[frozenset[tuple[int, int]], ...]
    cut_vertices: frozenset[int]


def _bcc_edges(n: int, adj) -> tuple[list[list[tuple[int, int]]], set[int]]:
    disc = [0] * n
    low = [0] * n
    timer = 1
    blocks: list[list[tuple[int, int]]] = []
    cuts: set[int] = set()
    estack: list[tuple[int, int]] = []
    for root in range(n):
        if disc[root]:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack = [(root, adj[root])]
        while stack:
            v, rem = stack[-1]
            if rem:
                b = rem & -rem
                stack[-1] = (v, rem ^ b)
                w = b.bit_length() - 1
                if not disc[w]:
                    estack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, adj[w] & ~(1 << v)))
                elif disc[w] < disc[v]:
                    estack.append((v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            else:
                stack.pop()
                if not stack:
                    continue
                u = stack[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
                if low[v] >= disc[u]:
                    if u != root or root_children >= 2:
                        cuts.add(u)
                    block = []
                    while True:
                        e = estack.pop()
                        block.append(e)
                        if e == (u, v):
                            break
                    blocks.append(block)
    return blocks, cuts


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Biconnected components; isolated vertices belong to no block."""
    blocks, cuts = _bcc_edges(g.n, g.adj)
    norm = tuple(
        frozenset((min(u, v), max(u, v)) for u, v in blk) for blk in blocks
    )
    return BlockDecomposition(norm, frozenset(cuts))


def is_odd_cycle_graph(g: Graph) -> bool:
    """True iff every cycle of g is odd.

    Equivalent block form (used here): every biconnected block is a single
    edge or an odd cycle, i.e. a block with e >= 2 edges has exactly e
    vertices and e is odd.  Early-exits on the first bad block.
    """
    return odd_cycle_rows(g.n, g.adj)


def odd_cycle_rows(n: int, adj) -> bool:
    """is_odd_cycle_graph on a raw adjacency row sequence; hot-loop entry."""
    disc = [0] * n
    low = [0] * n
    timer = 1
    estack: list[tuple[int, int]] = []
    for root in range(n):
        if disc[root]:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, adj[root])]
        while stack:
            v, rem = stack[-1]
            if rem:
                b = rem & -rem
                stack[-1] = (v, rem ^ b)
                w = b.bit_length() - 1
                if not disc[w]:
                    estack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, adj[w] & ~(1 << v)))
                elif disc[w] < disc[v]:
                    estack.append((v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            else:
                stack.pop()
                if not stack:
                    continue
                u = stack[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
                if low[v] >= disc[u]:
                    ecount = 0
                    vmask = 0
                    while True:
                        e = estack.pop()
                        ecount += 1
                        vmask |= (1 << e[0]) | (1 << e[1])
                        if e == (u, v):
                            break
                    if ecount >= 2 and (vmask.bit_count() != ecount or ecount % 2 == 0):
                        return False
    return True


@dataclass(frozen=True)
class LongOddCycleSet:
    """Cycle blocks of odd length >= 5, each in canonical cyclic vertex order."""

    cycles: tuple[tuple[int, ...], ...]

    def edge_count(self) -> int:
        return sum(len(c) for c in self.cycles)


def _cycle_order(block: frozenset[tuple[int, int]]) -> tuple[int, ...]:
    neigh: dict[int, list[int]] = {}
    for u, v in block:
        neigh.setdefault(u, []).append(v)
        neigh.setdefault(v, []).append(u)
    start = min(neigh)
    second = min(neigh[start])
    order = [start, second]
    prev, cur = start, second
    while cur != start:
        a, b = neigh[cur]
        nxt = b if a == prev else a
        order.append(nxt)
        prev, cur = cur, nxt
    order.pop()
    return tuple(order)


def long_odd_cycles(g: Graph) -> LongOddCycleSet:
    """Odd cycle blocks with at least 5 edges, sorted lexicographically."""
    cycles = []
    for blk in block_decomposition(g).blocks:
        if len(blk) < 5 or len(blk) % 2 == 0:
            continue
        verts = set()
        for u, v in blk:
            verts.add(u)
            verts.add(v)
        if len(verts) == len(blk):
            cycles.append(_cycle_order(blk))
    return LongOddCycleSet(tuple(sorted(cycles)))


# ------------------------------------------------------------- isomorphism


def _refine(n: int, adj, colors: list[int]) -> tuple[int, ...]:
    while True:
        sigs = []
        for v in range(n):
            neigh = sorted(colors[w] for w in iter_bits(adj[v]))
            sigs.append((colors[v], tuple(neigh)))
        table = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [table[s] for s in sigs]
        if new == colors:
            return tuple(new)
        colors = new


def _color_classes(colors) -> dict[int, list[int]]:
    out: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        out.setdefault(c, []).append(v)
    return out


def _search_mappings(g1: Graph, g2: Graph, c1, c2, count_all: bool) -> int:
    classes2 = _color_classes(c2)
    order = sorted(range(g1.n), key=lambda v: (len(classes2.get(c1[v], ())), c1[v], v))
    adj1, adj2 = g1.adj, g2.adj
    image = [0] * g1.n
    found = 0

    def extend(i: int, used: int) -> bool:
        nonlocal found
        if i == len(order):
            found += 1
            return not count_all
        v = order[i]
        for w in classes2.get(c1[v], ()):
            if (used >> w) & 1:
                continue
            ok = True
            for j in range(i):
                u = order[j]
                if ((adj1[v] >> u) & 1) != ((adj2[w] >> image[u]) & 1):
                    ok = False
                    break
            if ok:
                image[v] = w
                if extend(i + 1, used | (1 << w)):
                    return True
        return False

    extend(0, 0)
    return found


def is_isomorphic(g1: Graph, g2: Graph, max_n: int = ISO_DEFAULT_MAX_N) -> bool:
    """Exact isomorphism test by color refinement plus backtracking.

    Raises GraphTooLargeError above max_n (the exhaustive search is only
    intended for small graphs).
    """
    if g1.n > max_n or g2.n > max_n:
        raise GraphTooLargeError(f"isomorphism test limited to n <= {max_n}")
    if g1.n != g2.n or g1.m != g2.m:
        return False
    c1 = _refine(g1.n, g1.adj, [0] * g1.n)
    c2 = _refine(g2.n, g2.adj, [0] * g2.n)
    if sorted(c1) != sorted(c2):
        return False
    return _search_mappings(g1, g2, c1, c2, count_all=False) > 0


def automorphism_count(g: Graph, max_n: int = ISO_DEFAULT_MAX_N + 1) -> int:
    """Order of the automorphism group (same search as is_isomorphic)."""
    if g.n > max_n:
        raise GraphTooLargeError(f"automorphism count limited to n <= {max_n}")
    c = _refine(g.n, g.adj, [0] * g.n)
    return _search_mappings(g, g, c, c, count_all=True)
