"""Finite directed graphs with loops, their free preorders, meets and joins.

Vertices are bit strings over "01" of one common length, the dimension;
the empty string is the single vertex of the zero-dimensional cube.
Vertices are canonically ordered by their value as big-endian binary
numerals (which for fixed length is plain string order), and every
enumeration and export uses that order so output is deterministic.

Loops are stored explicitly as edges.  A graph morphism may therefore
collapse an edge to a loop without any special casing.
"""

from __future__ import annotations

import json
from functools import cached_property, lru_cache
from typing import Callable, Iterable, Optional

import numpy as np

Vertex = str


class CapacityError(Exception):
    """A requested computation exceeds the configured brute-force bounds."""


def int_to_bits(value: int, n: int) -> Vertex:
    """Big-endian bit string of length n for value (index 0 is leftmost)."""
    if not 0 <= value < (1 << n):
        raise ValueError(f"value {value} out of range for {n} bits")
    return format(value, f"0{n}b") if n else ""


def bits_to_int(bits: Vertex) -> int:
    return int(bits, 2) if bits else 0


class Graph:
    """Finite directed graph with at most one edge per ordered vertex pair.

    Vertices must be bit strings of one shared length; edges are a set of
    ordered pairs and may include loops.
    """

    def __init__(self, vertices: Iterable[Vertex], edges: Iterable[tuple[Vertex, Vertex]]):
        self.vertices: tuple[Vertex, ...] = tuple(sorted(set(vertices)))
        self.edges: frozenset[tuple[Vertex, Vertex]] = frozenset((u, v) for u, v in edges)
        lengths = {len(v) for v in self.vertices}
        if len(lengths) > 1:
            raise ValueError(f"vertices must share one length, got lengths {sorted(lengths)}")
        if any(set(v) - {"0", "1"} for v in self.vertices):
            raise ValueError("vertices must be strings over '0' and '1'")
        vs = set(self.vertices)
        for u, v in self.edges:
            if u not in vs or v not in vs:
                raise ValueError(f"edge ({u!r}, {v!r}) has an endpoint that is not a vertex")

    @property
    def dimension(self) -> int:
        return len(self.vertices[0]) if self.vertices else 0

    @cached_property
    def index(self) -> dict[Vertex, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def adjacency(self) -> np.ndarray:
        """Boolean matrix: adjacency[i, j] iff there is an edge vertices[i] -> vertices[j]."""
        n = len(self.vertices)
        adj = np.zeros((n, n), dtype=bool)
        idx = self.index
        for u, v in self.edges:
            adj[idx[u], idx[v]] = True
        return adj

    @cached_property
    def edge_list(self) -> tuple[tuple[Vertex, Vertex], ...]:
        """Edges in canonical (source, target) order, loops included."""
        return tuple(sorted(self.edges))

    def has_edge(self, u: Vertex, v: Vertex) -> bool:
        return (u, v) in self.edges

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.vertices == other.vertices
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges))

    def __repr__(self) -> str:
        return f"Graph({len(self.vertices)} vertices, {len(self.edges)} edges)"


class Preorder:
    """A vertex set with a reflexive, transitive relation."""

    def __init__(self, vertices: tuple[Vertex, ...], matrix: np.ndarray):
        # matrix[i, j] iff vertices[i] <= vertices[j]
        self.vertices = tuple(vertices)
        self.matrix = matrix
        if not matrix.diagonal().all():
            raise ValueError("preorder relation must be reflexive")
        self._index = {v: i for i, v in enumerate(self.vertices)}

    def leq(self, u: Vertex, v: Vertex) -> bool:
        return bool(self.matrix[self._index[u], self._index[v]])

    def __repr__(self) -> str:
        return f"Preorder({len(self.vertices)} vertices)"


@lru_cache(maxsize=None)
def free_preorder(g: Graph) -> Preorder:
    """Reflexive-transitive closure of g's edge relation.

    v <= u iff a chain of edges starts in v and ends in u.
    """
    n = len(g.vertices)
    reach = np.eye(n, dtype=bool) | g.adjacency
    # Warshall closure, one vectorized sweep per pivot; graphs stay tiny.
    for k in range(n):
        reach |= np.outer(reach[:, k], reach[k, :])
    reach.setflags(write=False)
    return Preorder(g.vertices, reach)


def is_total_order(p: Preorder) -> bool:
    """True iff the relation is antisymmetric and any two elements compare."""
    m = p.matrix
    antisymmetric = not (m & m.T & ~np.eye(len(p.vertices), dtype=bool)).any()
    total = (m | m.T).all()
    return bool(antisymmetric and total)


@lru_cache(maxsize=None)
def _bound_tables(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    """Index tables of binary meets and joins, -1 where none exists uniquely.

    meet[i, j] is the index of the greatest lower bound of vertices i and j
    in the free preorder, when exactly one greatest lower bound exists.
    """
    leq = free_preorder(g).matrix
    n = len(g.vertices)
    meet = np.full((n, n), -1, dtype=np.int16)
    join = np.full((n, n), -1, dtype=np.int16)
    for i in range(n):
        for j in range(i, n):
            lower = leq[:, i] & leq[:, j]
            if lower.any():
                # greatest elements of the lower-bound set
                great = lower & leq[lower].all(axis=0)
                (idx,) = np.nonzero(great)
                if len(idx) == 1:
                    meet[i, j] = meet[j, i] = idx[0]
            upper = leq[i, :] & leq[j, :]
            if upper.any():
                least = upper & leq[:, upper].all(axis=1)
                (idx,) = np.nonzero(least)
                if len(idx) == 1:
                    join[i, j] = join[j, i] = idx[0]
    meet.setflags(write=False)
    join.setflags(write=False)
    return meet, join


def meet(g: Graph, u: Vertex, v: Vertex) -> Optional[Vertex]:
    """Greatest lower bound of u and v in free_preorder(g), if unique."""
    table = _bound_tables(g)[0]
    k = table[g.index[u], g.index[v]]
    return g.vertices[k] if k >= 0 else None


def join(g: Graph, u: Vertex, v: Vertex) -> Optional[Vertex]:
    """Least upper bound of u and v in free_preorder(g), if unique."""
    table = _bound_tables(g)[1]
    k = table[g.index[u], g.index[v]]
    return g.vertices[k] if k >= 0 else None


def full_subgraph(g: Graph, keep: Callable[[Vertex], bool]) -> Graph:
    """Subgraph on the vertices satisfying keep, with all edges between them."""
    kept = {v for v in g.vertices if keep(v)}
    return Graph(kept, ((u, v) for u, v in g.edges if u in kept and v in kept))


def _to_networkx(g: Graph):
    import networkx as nx

    h = nx.DiGraph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edge_list)
    return h


def graph_isomorphic(g1: Graph, g2: Graph) -> Optional[dict[Vertex, Vertex]]:
    """A bijection preserving edges in both directions, or None.

    Intended for small graphs only (at most 32 vertices each).
    """
    from networkx.algorithms import isomorphism

    if len(g1.vertices) > 32 or len(g2.vertices) > 32:
        raise CapacityError("graph_isomorphic is limited to 32 vertices")
    if len(g1.vertices) != len(g2.vertices) or len(g1.edges) != len(g2.edges):
        return None
    matcher = isomorphism.DiGraphMatcher(_to_networkx(g1), _to_networkx(g2))
    if matcher.is_isomorphic():
        return dict(sorted(matcher.mapping.items()))
    return None


def graph_to_json(g: Graph) -> str:
    """Canonical JSON encoding of a graph, loops included."""
    payload = {
        "dimension": g.dimension,
        "vertices": list(g.vertices),
        "edges": [list(e) for e in g.edge_list],
    }
    return json.dumps(payload, indent=2) + "\n"


def graph_from_json(text: str) -> Graph:
    payload = json.loads(text)
    g = Graph(payload["vertices"], [tuple(e) for e in payload["edges"]])
    if g.dimension != payload["dimension"]:
        raise ValueError(
            f"declared dimension {payload['dimension']} does not match vertices of length {g.dimension}"
        )
    return g
