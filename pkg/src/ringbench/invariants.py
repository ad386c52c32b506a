"""Exact graph invariants: metrics, coloring, shape detection, S-vertices.

Everything here is exact — the theorem checks are equivalences, so a
heuristic bound would manufacture false violations.  Clique number uses a
Tomita-style branch and bound with a greedy coloring bound over bitsets;
chromatic number is iterative deepening on k with backtracking over vertices
in descending degree order.  Metric routines lean on boolean matrix products
so that zero-divisor graphs with a few hundred vertices stay cheap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import ResourceLimitError
from .graphs import SimpleGraph

INFINITE = math.inf

DEFAULT_MAX_SEARCH_VERTICES = 600

# shape tags, in detection priority order
SHAPE_EMPTY = "EMPTY"
SHAPE_K1 = "K1"
SHAPE_COMPLETE = "K_N"
SHAPE_COMPLETE_BIPARTITE = "K_MN"
SHAPE_STAR = "STAR"
SHAPE_PATH = "PATH"
SHAPE_CYCLE = "CYCLE"
SHAPE_MULTIPARTITE = "COMPLETE_MULTIPARTITE"
SHAPE_FIGURE1 = "FIGURE1"
SHAPE_OTHER = "OTHER"


# --------------------------------------------------------------------------
# distances


def all_pairs_distances(g: SimpleGraph) -> np.ndarray:
    """Shortest-path distance matrix; -1 marks unreachable pairs.

    Layered expansion with one boolean matrix product per distance level;
    path counts stay below 2^24 so float32 products are exact.
    """
    n = g.n
    dist = np.full((n, n), -1, dtype=np.int32)
    if n == 0:
        return dist
    np.fill_diagonal(dist, 0)
    adj_f = g.adj.astype(np.float32)
    reached = np.eye(n, dtype=bool)
    current = g.adj & ~reached
    level = 1
    while current.any():
        dist[current] = level
        reached |= current
        nxt = (current.astype(np.float32) @ adj_f) > 0
        current = nxt & ~reached
        level += 1
    return dist


def is_connected(g: SimpleGraph) -> bool:
    """Empty and single-vertex graphs count as connected."""
    if g.n <= 1:
        return True
    return (all_pairs_distances(g)[0] >= 0).all()


def diameter(g: SimpleGraph):
    """Longest shortest-path distance; None for |V| = 0, inf if disconnected."""
    if g.n == 0:
        return None
    dist = all_pairs_distances(g)
    if (dist < 0).any():
        return INFINITE
    return int(dist.max())


def diameter_witness(g: SimpleGraph) -> Optional[tuple[int, int]]:
    """First vertex pair (lexicographic) attaining the finite diameter."""
    if g.n == 0:
        return None
    dist = all_pairs_distances(g)
    if (dist < 0).any():
        where = np.argwhere(dist < 0)
        return (int(where[0][0]), int(where[0][1]))
    d = dist.max()
    where = np.argwhere(dist == d)
    return (int(where[0][0]), int(where[0][1]))


def girth(g: SimpleGraph):
    """Length of a shortest cycle, or inf for forests.

    Triangles and 4-cycles are detected with matrix products; anything
    sparser falls back to per-root BFS, which is exact for unweighted graphs.
    """
    n = g.n
    if n < 3 or g.n_edges < 3:
        return INFINITE
    adj_f = g.adj.astype(np.float32)
    paths2 = adj_f @ adj_f
    if ((paths2 > 0) & g.adj).any():
        return 3
    off = paths2.copy()
    np.fill_diagonal(off, 0)
    if (off >= 2).any():
        return 4
    best = INFINITE
    for root in range(n):
        dist = np.full(n, -1, dtype=np.int64)
        parent = np.full(n, -1, dtype=np.int64)
        dist[root] = 0
        queue = [root]
        while queue and 2 * dist[queue[0]] + 1 < best:
            nxt = []
            for u in queue:
                for v in g.neighbors(u):
                    v = int(v)
                    if dist[v] < 0:
                        dist[v] = dist[u] + 1
                        parent[v] = u
                        nxt.append(v)
                    elif v != parent[u]:
                        cycle = dist[u] + dist[v] + 1
                        if cycle < best:
                            best = cycle
            queue = nxt
    return best


# --------------------------------------------------------------------------
# bipartition


def is_bipartite(g: SimpleGraph) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    """BFS 2-coloring; parts are sorted, ordered by (size, first vertex)."""
    n = g.n
    color = np.full(n, -1, dtype=np.int64)
    for start in range(n):
        if color[start] >= 0:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            u = queue.pop()
            for v in g.neighbors(u):
                v = int(v)
                if color[v] < 0:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return None
    a = tuple(int(i) for i in np.flatnonzero(color == 0))
    b = tuple(int(i) for i in np.flatnonzero(color == 1))
    return tuple(sorted((a, b), key=lambda part: (len(part), part)))


# --------------------------------------------------------------------------
# cliques


def _check_cap(g: SimpleGraph, cap: int, what: str):
    if g.n > cap:
        raise ResourceLimitError(f"{what} search cap exceeded: {g.n} vertices > {cap}")


def max_clique(g: SimpleGraph, cap: int = DEFAULT_MAX_SEARCH_VERTICES) -> tuple[int, tuple[int, ...]]:
    """Exact maximum clique (size, vertex tuple) via branch and bound.

    Tomita-style: candidates are greedily colored and processed in reverse
    color order, pruning branches whose color bound cannot beat the incumbent.
    """
    _check_cap(g, cap, "clique")
    n = g.n
    if n == 0:
        return 0, ()
    nb = g.neighbor_masks
    best: list[int] = []

    def expand(clique: list[int], candidates: int):
        nonlocal best
        order: list[int] = []
        bounds: list[int] = []
        color = 0
        rest = candidates
        while rest:
            color += 1
            avail = rest
            while avail:
                v = (avail & -avail).bit_length() - 1
                order.append(v)
                bounds.append(color)
                rest &= ~(1 << v)
                avail &= ~(1 << v)
                avail &= ~nb[v]
        pool = candidates
        for i in range(len(order) - 1, -1, -1):
            if len(clique) + bounds[i] <= len(best):
                return
            v = order[i]
            clique.append(v)
            sub = pool & nb[v]
            if sub:
                expand(clique, sub)
            elif len(clique) > len(best):
                best = clique.copy()
            clique.pop()
            pool &= ~(1 << v)

    expand([], (1 << n) - 1)
    return len(best), tuple(sorted(best))


def clique_number(g: SimpleGraph, cap: int = DEFAULT_MAX_SEARCH_VERTICES) -> int:
    return max_clique(g, cap)[0]


def maximal_cliques(g: SimpleGraph) -> list[tuple[int, ...]]:
    """All maximal cliques (Bron-Kerbosch with pivot), sorted for determinism."""
    nb = g.neighbor_masks
    out: list[tuple[int, ...]] = []

    def bits(mask: int):
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    def bk(clique: list[int], p: int, x: int):
        if not p and not x:
            out.append(tuple(sorted(clique)))
            return
        pivot, hits = -1, -1
        for u in bits(p | x):
            h = (p & nb[u]).bit_count()
            if h > hits:
                pivot, hits = u, h
        for v in bits(p & ~nb[pivot]):
            clique.append(v)
            bk(clique, p & nb[v], x & nb[v])
            clique.pop()
            p &= ~(1 << v)
            x |= 1 << v

    if g.n:
        bk([], (1 << g.n) - 1, 0)
    return sorted(out)


# --------------------------------------------------------------------------
# coloring


def greedy_coloring(g: SimpleGraph) -> tuple[int, list[int]]:
    """DSATUR greedy upper bound."""
    n = g.n
    if n == 0:
        return 0, []
    colors = [-1] * n
    neighbor_colors = [set() for _ in range(n)]
    degrees = g.degrees
    uncolored = set(range(n))
    while uncolored:
        u = max(uncolored, key=lambda v: (len(neighbor_colors[v]), degrees[v], -v))
        c = 0
        while c in neighbor_colors[u]:
            c += 1
        colors[u] = c
        uncolored.discard(u)
        for v in g.neighbors(u):
            neighbor_colors[int(v)].add(c)
    return max(colors) + 1, colors


def _k_colorable(g: SimpleGraph, order: list[int], k: int) -> bool:
    n = g.n
    colors = [-1] * n
    neigh = [tuple(int(j) for j in g.neighbors(v)) for v in range(n)]

    def backtrack(pos: int, used: int) -> bool:
        if pos == n:
            return True
        v = order[pos]
        forbidden = 0
        for w in neigh[v]:
            if colors[w] >= 0:
                forbidden |= 1 << colors[w]
        limit = min(k, used + 1)
        for c in range(limit):
            if forbidden >> c & 1:
                continue
            colors[v] = c
            if backtrack(pos + 1, max(used, c + 1)):
                return True
            colors[v] = -1
        return False

    return backtrack(0, 0)


def chromatic_number(g: SimpleGraph, cap: int = DEFAULT_MAX_SEARCH_VERTICES) -> int:
    """Exact chromatic number: iterative deepening on k between clique and DSATUR bounds."""
    _check_cap(g, cap, "coloring")
    n = g.n
    if n == 0:
        return 0
    if g.n_edges == 0:
        return 1
    lower = clique_number(g, cap)
    upper, _ = greedy_coloring(g)
    if upper == lower:
        return lower
    order = sorted(range(n), key=lambda v: (-int(g.degrees[v]), v))
    for k in range(lower, upper):
        if _k_colorable(g, order, k):
            return k
    return upper


# --------------------------------------------------------------------------
# structural predicates and shape classification


def is_complete(g: SimpleGraph) -> bool:
    """Every pair of distinct vertices adjacent (vacuously true for n <= 1)."""
    n = g.n
    return g.n_edges == n * (n - 1) // 2


def complete_bipartite_parts(g: SimpleGraph) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Parts of a complete bipartite graph (n >= 2, both parts nonempty), else None."""
    if g.n < 2:
        return None
    parts = is_bipartite(g)
    if parts is None:
        return None
    a, b = parts
    if not a or not b:
        return None
    if g.n_edges == len(a) * len(b):
        return parts
    return None


def has_universal_vertex(g: SimpleGraph) -> bool:
    """Some vertex adjacent to every other vertex (true for K1)."""
    return g.n > 0 and bool((g.degrees == g.n - 1).any())


def is_star(g: SimpleGraph) -> bool:
    """K_{1,n} with n >= 1: a center adjacent to all others, no other edges."""
    return g.n >= 2 and has_universal_vertex(g) and g.n_edges == g.n - 1


def star_center(g: SimpleGraph) -> int:
    """Deterministic star center: the first vertex of maximal degree."""
    return int(np.argmax(g.degrees))


@dataclass(frozen=True)
class Shape:
    """classify_shape result: a tag plus family parameters."""

    tag: str
    n: int | None = None
    parts: tuple[int, ...] | None = None
    center: int | None = None
    hubs: tuple[int, int] | None = None
    pendant: int | None = None

    def describe(self) -> str:
        if self.tag == SHAPE_COMPLETE:
            return f"K{self.n}"
        if self.tag == SHAPE_COMPLETE_BIPARTITE:
            return "K_{%d,%d}" % self.parts
        if self.tag == SHAPE_STAR:
            return "K_{1,%d} star" % self.n
        if self.tag == SHAPE_PATH:
            return f"P{self.n}"
        if self.tag == SHAPE_CYCLE:
            return f"C{self.n}"
        if self.tag == SHAPE_MULTIPARTITE:
            return "K_{" + ",".join(str(p) for p in self.parts) + "}"
        if self.tag == SHAPE_FIGURE1:
            return f"FIGURE1({self.n} dual-hub vertices)"
        return self.tag


def _multipartite_parts(g: SimpleGraph) -> Optional[tuple[int, ...]]:
    """Part sizes if G is complete multipartite (complement = disjoint cliques)."""
    n = g.n
    comp = ~g.adj
    np.fill_diagonal(comp, False)
    seen = np.zeros(n, dtype=bool)
    parts = []
    for start in range(n):
        if seen[start]:
            continue
        stack, members = [start], []
        seen[start] = True
        while stack:
            u = stack.pop()
            members.append(u)
            for v in np.flatnonzero(comp[u]):
                if not seen[v]:
                    seen[v] = True
                    stack.append(int(v))
        members_arr = np.array(sorted(members))
        block = comp[np.ix_(members_arr, members_arr)]
        expected = ~np.eye(len(members_arr), dtype=bool)
        if not np.array_equal(block, expected):
            return None
        parts.append(len(members))
    return tuple(sorted(parts))


def _figure1_match(g: SimpleGraph) -> Optional[tuple[tuple[int, int], int, int]]:
    """Match the two-hub-plus-pendant pattern of the girth-4 theorem's figure.

    One pendant p attached to hub h1; k >= 1 dual vertices adjacent to exactly
    h1 and the second hub h2; the hubs themselves are not adjacent.  Returns
    ((h1, h2), pendant, k).
    """
    n = g.n
    if n < 4:
        return None
    for p in (int(v) for v in np.flatnonzero(g.degrees == 1)):
        h1 = int(g.neighbors(p)[0])
        duals = [int(v) for v in g.neighbors(h1) if v != p]
        if not duals:
            continue
        first_nb = [int(v) for v in g.neighbors(duals[0]) if v != h1]
        if len(first_nb) != 1:
            continue
        h2 = first_nb[0]
        if h2 in (h1, p) or g.adj[h1, h2]:
            continue
        if any(sorted(int(v) for v in g.neighbors(d)) != sorted((h1, h2)) for d in duals):
            continue
        if sorted(int(v) for v in g.neighbors(h2)) != sorted(duals):
            continue
        if set(range(n)) != {p, h1, h2, *duals}:
            continue
        return (h1, h2), p, len(duals)
    return None


def classify_shape(g: SimpleGraph) -> Shape:
    """First matching tag in the fixed priority order.

    The complete-bipartite detector claims K_{1,1} and K_{m,n} with both parts
    >= 2; proper stars K_{1,n>=2} fall through to STAR.  Consequently K2 is
    reported as K_{1,1}, P3 as a star, C3 as K3, and C4 as K_{2,2}.
    """
    n = g.n
    if n == 0:
        return Shape(SHAPE_EMPTY, n=0)
    if n == 1:
        return Shape(SHAPE_K1, n=1)
    if n >= 3 and is_complete(g):
        return Shape(SHAPE_COMPLETE, n=n)
    cb = complete_bipartite_parts(g)
    if cb is not None:
        sizes = tuple(sorted((len(cb[0]), len(cb[1]))))
        if sizes == (1, 1) or sizes[0] >= 2:
            return Shape(SHAPE_COMPLETE_BIPARTITE, n=n, parts=sizes)
    if is_star(g):
        return Shape(SHAPE_STAR, n=n - 1, center=star_center(g))
    degs = sorted(int(d) for d in g.degrees)
    if (is_connected(g) and g.n_edges == n - 1
            and degs == [1, 1] + [2] * (n - 2)):
        return Shape(SHAPE_PATH, n=n)
    if is_connected(g) and g.n_edges == n and degs == [2] * n:
        return Shape(SHAPE_CYCLE, n=n)
    mp = _multipartite_parts(g)
    if mp is not None:
        return Shape(SHAPE_MULTIPARTITE, n=n, parts=mp)
    fig = _figure1_match(g)
    if fig is not None:
        hubs, pendant, k = fig
        return Shape(SHAPE_FIGURE1, n=k, hubs=hubs, pendant=pendant)
    return Shape(SHAPE_OTHER, n=n)


# --------------------------------------------------------------------------
# Smarandache vertices


def _canonical_witness(g: SimpleGraph, a: int) -> tuple[int, int, int]:
    """Witness (x, b, y) in the fixed search order: b over N(a), then x over
    N(a), then y over N(b), first hit wins."""
    idx = np.arange(g.n)
    for b in (int(v) for v in g.neighbors(a)):
        for x in (int(v) for v in g.neighbors(a)):
            if x == b:
                continue
            ys = np.flatnonzero(g.adj[b] & ~g.adj[x] & (idx != a) & (idx != x))
            if ys.size:
                return (x, b, int(ys[0]))
    raise AssertionError("witness recovery called on a non-S-vertex")


def smarandache_vertices(g: SimpleGraph) -> dict[int, tuple[int, int, int]]:
    """S-vertices with their (x, b, y) witnesses.

    a is an S-vertex iff there are pairwise distinct x, y, b (all != a) with
    edges a-x, a-b, b-y and no edge x-y.  Existence test per a: some x in N(a)
    and y not in {a, x} with no x-y edge such that y has a neighbor inside
    N(a); any such neighbor b automatically differs from x and y.
    """
    out: dict[int, tuple[int, int, int]] = {}
    n = g.n
    if n < 4:
        return out
    idx = np.arange(n)
    for a in range(n):
        nbrs = g.neighbors(a)
        if nbrs.size < 2:
            continue
        cover = g.adj[nbrs].sum(axis=0)
        good_y = (cover > 0) & (idx != a)
        ys = np.flatnonzero(good_y)
        if not ys.size:
            continue
        non_edge = ~g.adj[np.ix_(nbrs, ys)]
        non_edge &= nbrs[:, None] != ys[None, :]
        if non_edge.any():
            out[a] = _canonical_witness(g, a)
    return out


# --------------------------------------------------------------------------
# the combined report


@dataclass(frozen=True)
class InvariantReport:
    connected: bool
    diameter: object            # int, inf, or None for the empty graph
    diameter_pair: tuple[int, int] | None
    girth: object               # int or inf
    clique_number: int
    chromatic_number: int
    bipartition: tuple[tuple[int, ...], tuple[int, ...]] | None
    shape: Shape
    s_vertices: tuple[int, ...]
    s_witnesses: tuple[tuple[int, tuple[int, int, int]], ...]


def compute_report(g: SimpleGraph, cap: int = DEFAULT_MAX_SEARCH_VERTICES) -> InvariantReport:
    sv = smarandache_vertices(g)
    return InvariantReport(
        connected=is_connected(g),
        diameter=diameter(g),
        diameter_pair=diameter_witness(g),
        girth=girth(g),
        clique_number=clique_number(g, cap),
        chromatic_number=chromatic_number(g, cap),
        bipartition=is_bipartite(g),
        shape=classify_shape(g),
        s_vertices=tuple(sorted(sv)),
        s_witnesses=tuple(sorted(sv.items())),
    )
