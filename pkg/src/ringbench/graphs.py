"""Simple-graph construction: AG(R), the zero-divisor graph, and synthetic families.

Graphs are loop-free symmetric boolean adjacency matrices with labeled
vertices.  AG(R) vertices follow the lattice enumeration order and zero-divisor
vertices follow element index order, which pins DOT/JSON output byte-stably.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .errors import InvalidSpecError
from .ideals import IdealLattice
from .rings import FiniteRing

KIND_AG = "ag"
KIND_ZD = "zd"
KIND_SYNTHETIC = "synthetic"


@dataclass(eq=False)
class SimpleGraph:
    """Undirected loop-free graph over labeled vertices.

    ``payload`` carries the originating objects per vertex (Ideals for AG,
    element indices for zero-divisor graphs); ``square_zero`` flags AG
    vertices whose ideal squares to (0).
    """

    kind: str
    labels: tuple[str, ...]
    adj: np.ndarray
    payload: tuple = None
    square_zero: tuple[bool, ...] = None

    def __post_init__(self):
        n = len(self.labels)
        self.adj = np.asarray(self.adj, dtype=bool)
        if self.adj.shape != (n, n):
            raise ValueError(f"adjacency must be {n}x{n}")
        if n and self.adj.diagonal().any():
            raise ValueError("self-loops are not allowed")
        if not np.array_equal(self.adj, self.adj.T):
            raise ValueError("adjacency must be symmetric")
        if len(set(self.labels)) != n:
            raise ValueError("vertex labels must be unique")
        self.adj.setflags(write=False)

    @property
    def n(self) -> int:
        return len(self.labels)

    @cached_property
    def degrees(self) -> np.ndarray:
        return self.adj.sum(axis=1).astype(np.int64) if self.n else np.zeros(0, dtype=np.int64)

    @property
    def n_edges(self) -> int:
        return int(self.degrees.sum()) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Unordered edges as (i, j) with i < j, in lexicographic order."""
        out = []
        for i in range(self.n):
            for j in np.flatnonzero(self.adj[i]):
                if i < j:
                    out.append((i, int(j)))
        return out

    def neighbors(self, i: int) -> np.ndarray:
        return np.flatnonzero(self.adj[i])

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        """Per-vertex adjacency bitsets (for clique/coloring search)."""
        masks = []
        for i in range(self.n):
            m = 0
            for j in np.flatnonzero(self.adj[i]):
                m |= 1 << int(j)
            masks.append(m)
        return tuple(masks)

    def __repr__(self) -> str:
        return f"SimpleGraph({self.kind}, n={self.n}, m={self.n_edges})"


def graph_from_edges(n: int, edges, labels=None, kind: str = KIND_SYNTHETIC) -> SimpleGraph:
    if labels is None:
        labels = tuple(f"v{i}" for i in range(n))
    adj = np.zeros((n, n), dtype=bool)
    for i, j in edges:
        if i == j:
            raise ValueError("self-loops are not allowed")
        adj[i, j] = adj[j, i] = True
    return SimpleGraph(kind, tuple(labels), adj)


def build_ag(ring: FiniteRing, lattice: IdealLattice) -> SimpleGraph:
    """The annihilating-ideal graph: vertices A(R)*, edge iff IJ = (0).

    IJ = (0) is equivalent to J being contained in Ann(I), so adjacency is a
    bitset containment test.  An ideal with I^2 = (0) is a vertex but carries
    no self-loop; the flag is exposed separately.
    """
    verts = lattice.annihilating_indices()
    n = len(verts)
    adj = np.zeros((n, n), dtype=bool)
    sq = []
    for a, ka in enumerate(verts):
        ia = lattice.ideals[ka]
        ann_mask = lattice.ideals[lattice.annihilator_index[ka]].mask
        sq.append(ia.mask & ~ann_mask == 0)
        for b, kb in enumerate(verts):
            if a != b and lattice.ideals[kb].mask & ~ann_mask == 0:
                adj[a, b] = adj[b, a] = True
    labels = tuple(lattice.ideals[k].label for k in verts)
    payload = tuple(lattice.ideals[k] for k in verts)
    return SimpleGraph(KIND_AG, labels, adj, payload=payload, square_zero=tuple(sq))


def build_zd(ring: FiniteRing) -> SimpleGraph:
    """The zero-divisor graph: vertices Z(R)*, edge iff xy = 0."""
    nonzero = np.arange(ring.order) != ring.zero
    hits = ((ring.mul == ring.zero) & nonzero[None, :]).any(axis=1)
    hits[ring.zero] = False
    verts = np.flatnonzero(hits)
    sub = ring.mul[np.ix_(verts, verts)] == ring.zero
    np.fill_diagonal(sub, False)
    labels = tuple(ring.labels[int(v)] for v in verts)
    return SimpleGraph(KIND_ZD, labels, sub, payload=tuple(int(v) for v in verts))


# --------------------------------------------------------------------------
# synthetic families


def _int_param(params, kind):
    if isinstance(params, int) and params > 0:
        return params
    raise InvalidSpecError(f"{kind} family requires a positive integer parameter, got {params!r}")


def _pair_param(params, kind):
    try:
        m, n = params
    except (TypeError, ValueError):
        raise InvalidSpecError(f"{kind} family requires a pair of positive integers, got {params!r}")
    if not (isinstance(m, int) and isinstance(n, int) and m > 0 and n > 0):
        raise InvalidSpecError(f"{kind} family requires a pair of positive integers, got {params!r}")
    return m, n


def make_family(kind: str, params) -> SimpleGraph:
    """Named synthetic family: complete/path/cycle/star/complete_bipartite/
    complete_multipartite/bistar."""
    if kind == "complete":
        n = _int_param(params, kind)
        edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
        return graph_from_edges(n, edges)
    if kind == "path":
        n = _int_param(params, kind)
        return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "cycle":
        n = _int_param(params, kind)
        if n < 3:
            raise InvalidSpecError("cycle requires at least 3 vertices")
        return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if kind == "star":
        leaves = _int_param(params, kind)
        return graph_from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])
    if kind == "complete_bipartite":
        m, n = _pair_param(params, kind)
        return make_family("complete_multipartite", [m, n])
    if kind == "complete_multipartite":
        parts = list(params) if not isinstance(params, int) else [params]
        if not parts or not all(isinstance(p, int) and p >= 1 for p in parts):
            raise InvalidSpecError(f"complete_multipartite requires positive part sizes, got {params!r}")
        n = sum(parts)
        owner = []
        for k, p in enumerate(parts):
            owner.extend([k] * p)
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if owner[i] != owner[j]]
        return graph_from_edges(n, edges)
    if kind == "bistar":
        m, n = _pair_param(params, kind)
        # centers 0 and 1, joined; m leaves on 0, n leaves on 1
        edges = [(0, 1)]
        edges += [(0, 2 + i) for i in range(m)]
        edges += [(1, 2 + m + i) for i in range(n)]
        return graph_from_edges(2 + m + n, edges)
    raise InvalidSpecError(f"unknown graph family {kind!r}")


# --------------------------------------------------------------------------
# exports


def _dot_quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(g: SimpleGraph) -> str:
    """DOT text with vertices in list order and edges in lexicographic pair order."""
    lines = [f"graph {_dot_quote(g.kind)} {{"]
    for label in g.labels:
        lines.append(f"  {_dot_quote(label)};")
    for i, j in g.edges():
        lines.append(f"  {_dot_quote(g.labels[i])} -- {_dot_quote(g.labels[j])};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_json(g: SimpleGraph) -> str:
    doc = {"vertices": list(g.labels), "edges": [[i, j] for i, j in g.edges()]}
    return json.dumps(doc, indent=2) + "\n"


def parse_graph_json(text: str, kind: str = KIND_SYNTHETIC) -> SimpleGraph:
    doc = json.loads(text)
    if not isinstance(doc, dict) or set(doc) != {"vertices", "edges"}:
        raise InvalidSpecError("graph JSON must contain exactly {vertices, edges}")
    labels = tuple(doc["vertices"])
    return graph_from_edges(len(labels), [tuple(e) for e in doc["edges"]], labels=labels, kind=kind)
