"""Morphisms of standard cubes and the substitution-category equivalence.

Three kinds of arrows live here:

* ``BchMorphism``: a function from m input slots to n output slots plus
  two constants, injective on the slot part.  These compose like
  substitutions and form a category with objects the natural numbers.
* ``GraphMorphism``: a vertex map between graphs that preserves edges.
  Refined classes of cube-graph morphisms (preserving meets and joins,
  or preserving edge dimensions) form subcategories.
* ``PartialInjection``: slot map with a single "undefined" constant;
  transposition swaps its two directions.

The executable equivalence between opposite substitution arrows and
meet-and-join-preserving cube morphisms goes through a six-step chain:
split an arrow into a constant vector z and a partial injection e,
transpose e, read the result as a morphism from the base subgraph, and
extend it join-preservingly to the whole cube.  Each step is invertible
and the round trips are checked exhaustively by the test suite.
"""

from __future__ import annotations

import json
from functools import lru_cache
from itertools import product
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from . import kernels
from .graphs import (
    CapacityError,
    Graph,
    Vertex,
    _bound_tables,
    bits_to_int,
    int_to_bits,
)
from .cubes import base_subgraph, standard_cube


class BchMorphism:
    """Arrow m -> n: each of m input slots is sent to one of n output
    slots (each output slot used at most once) or to a constant bit.

    entries[i] in 0..n-1 picks output slot entries[i]; n and n+1 are the
    constants 0 and 1.
    """

    __slots__ = ("m", "n", "entries", "_hash")

    def __init__(self, m: int, n: int, entries: Iterable[int]):
        entries = tuple(int(e) for e in entries)
        if len(entries) != m:
            raise ValueError(f"expected {m} entries, got {len(entries)}")
        seen: set[int] = set()
        for i, e in enumerate(entries):
            if not 0 <= e < n + 2:
                raise ValueError(f"entry {e} at slot {i} out of range for n={n}")
            if e < n:
                if e in seen:
                    raise ValueError(f"output slot {e} used twice: not injective on slots")
                seen.add(e)
        self.m = m
        self.n = n
        self.entries = entries
        self._hash = hash((m, n, entries))

    def __call__(self, i: int) -> int:
        return self.entries[i]

    def is_slot(self, i: int) -> bool:
        return self.entries[i] < self.n

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BchMorphism)
            and self.m == other.m
            and self.n == other.n
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return self._hash

    def map_strings(self) -> list[str]:
        return [f"j{e}" if e < self.n else f"b{e - self.n}" for e in self.entries]

    def to_json(self) -> str:
        return json.dumps(
            {"m": self.m, "n": self.n, "map": self.map_strings()}, separators=(", ", ": ")
        )

    def __repr__(self) -> str:
        return f"BchMorphism({self.m}->{self.n}, [{', '.join(self.map_strings())}])"


def bch_from_json(text: str) -> BchMorphism:
    payload = json.loads(text)
    m, n = int(payload["m"]), int(payload["n"])
    entries = []
    for pos, item in enumerate(payload["map"]):
        kind, value = item[0], int(item[1:])
        if kind == "j":
            entries.append(value)
        elif kind == "b":
            if value not in (0, 1):
                raise ValueError(f"map entry {pos}: constant must be b0 or b1, got {item!r}")
            entries.append(n + value)
        else:
            raise ValueError(f"map entry {pos}: expected j<k> or b<k>, got {item!r}")
    return BchMorphism(m, n, entries)


def bch_identity(n: int) -> BchMorphism:
    return BchMorphism(n, n, range(n))


def bch_compose(outer: BchMorphism, inner: BchMorphism) -> BchMorphism:
    """Composite outer ∘ inner: apply inner first, constants absorb."""
    if inner.n != outer.m:
        raise ValueError(f"cannot compose {outer.m}->{outer.n} after {inner.m}->{inner.n}")
    entries = []
    for e in inner.entries:
        if e < inner.n:
            entries.append(outer.entries[e])
        else:
            entries.append(e - inner.n + outer.n)
    return BchMorphism(inner.m, outer.n, entries)


@lru_cache(maxsize=None)
def enumerate_bch(m: int, n: int) -> tuple[BchMorphism, ...]:
    """All arrows m -> n in lexicographic entry order."""
    if m > 6 or n > 6:
        raise CapacityError("enumerate_bch is limited to m, n <= 6")
    out = []
    for entries in product(range(n + 2), repeat=m):
        slots = [e for e in entries if e < n]
        if len(slots) == len(set(slots)):
            out.append(BchMorphism(m, n, entries))
    return tuple(out)


class PartialInjection:
    """Slot map m -> n with one undefined value, injective where defined.

    entries[i] in 0..n-1 is a defined image; n means undefined.
    """

    __slots__ = ("m", "n", "entries")

    def __init__(self, m: int, n: int, entries: Iterable[int]):
        entries = tuple(int(e) for e in entries)
        if len(entries) != m:
            raise ValueError(f"expected {m} entries, got {len(entries)}")
        defined = [e for e in entries if e < n]
        if any(not 0 <= e <= n for e in entries):
            raise ValueError("entries out of range")
        if len(defined) != len(set(defined)):
            raise ValueError("not injective on defined slots")
        self.m = m
        self.n = n
        self.entries = entries

    def defined(self, i: int) -> bool:
        return self.entries[i] < self.n

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, PartialInjection)
            and (self.m, self.n, self.entries) == (other.m, other.n, other.entries)
        )

    def __hash__(self) -> int:
        return hash((self.m, self.n, self.entries))

    def __repr__(self) -> str:
        body = ", ".join(str(e) if e < self.n else "-" for e in self.entries)
        return f"PartialInjection({self.m}->{self.n}, [{body}])"


def transpose_partial_injection(p: PartialInjection) -> PartialInjection:
    """Swap directions: q(j) = i exactly when p(i) = j; involutive."""
    entries = [p.m] * p.n
    for i, e in enumerate(p.entries):
        if e < p.n:
            entries[e] = i
    return PartialInjection(p.n, p.m, entries)


@lru_cache(maxsize=None)
def enumerate_partial_injections(m: int, n: int) -> tuple[PartialInjection, ...]:
    out = []
    for entries in product(range(n + 1), repeat=m):
        defined = [e for e in entries if e < n]
        if len(defined) == len(set(defined)):
            out.append(PartialInjection(m, n, entries))
    return tuple(out)


class GraphMorphism:
    """Vertex map between graphs sending every edge to an edge."""

    __slots__ = ("source", "target", "vmap", "_hash")

    def __init__(
        self,
        source: Graph,
        target: Graph,
        mapping: Union[dict[Vertex, Vertex], Sequence[Vertex]],
        _trusted: bool = False,
    ):
        if isinstance(mapping, dict):
            images = tuple(mapping[v] for v in source.vertices)
        else:
            images = tuple(mapping)
            if len(images) != len(source.vertices):
                raise ValueError("mapping length does not match the source vertex count")
        tgt_index = target.index
        self.source = source
        self.target = target
        self.vmap = tuple(tgt_index[v] for v in images)
        if not _trusted:
            src_index = source.index
            for u, v in source.edges:
                if not target.adjacency[self.vmap[src_index[u]], self.vmap[src_index[v]]]:
                    raise ValueError(
                        f"edge ({u}, {v}) maps to ({images[src_index[u]]}, "
                        f"{images[src_index[v]]}), not an edge of the target"
                    )
        self._hash = hash((source, target, self.vmap))

    @classmethod
    def from_indices(cls, source: Graph, target: Graph, vmap: Sequence[int]) -> "GraphMorphism":
        """Trusted constructor from target vertex indices (no edge check)."""
        self = object.__new__(cls)
        self.source = source
        self.target = target
        self.vmap = tuple(int(i) for i in vmap)
        self._hash = hash((source, target, self.vmap))
        return self

    def __call__(self, v: Vertex) -> Vertex:
        return self.target.vertices[self.vmap[self.source.index[v]]]

    def as_dict(self) -> dict[Vertex, Vertex]:
        return {v: self.target.vertices[self.vmap[i]] for i, v in enumerate(self.source.vertices)}

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), separators=(", ", ": "))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, GraphMorphism)
            and self.source == other.source
            and self.target == other.target
            and self.vmap == other.vmap
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join(f"{v}>{self(v)}" for v in self.source.vertices)
        return f"GraphMorphism({body})"


def identity_graph_morphism(g: Graph) -> GraphMorphism:
    return GraphMorphism.from_indices(g, g, range(len(g.vertices)))


def compose_graph_morphisms(outer: GraphMorphism, inner: GraphMorphism) -> GraphMorphism:
    if inner.target != outer.source:
        raise ValueError("inner target and outer source differ")
    return GraphMorphism.from_indices(
        inner.source, outer.target, tuple(outer.vmap[i] for i in inner.vmap)
    )


@lru_cache(maxsize=None)
def hom_matrix(src: Graph, tgt: Graph) -> np.ndarray:
    """All edge-preserving vertex maps as rows of target indices.

    Naive filter over every candidate map; limited to 8 vertices a side.
    """
    ns, nt = len(src.vertices), len(tgt.vertices)
    if ns > 8 or nt > 8:
        raise CapacityError(
            f"naive enumeration needs at most 8 vertices a side, got {ns} and {nt}"
        )
    idx = src.index
    edges = np.array([(idx[u], idx[v]) for u, v in src.edge_list], dtype=np.int64).reshape(-1, 2)
    mat = kernels.edge_preserving_maps(ns, nt, edges, tgt.adjacency)
    mat.setflags(write=False)
    return mat

def enumerate_graph_homs(src: Graph, tgt: Graph) -> list[GraphMorphism]:
    """All edge-preserving vertex maps, lexicographic in the vertex order."""
    return [GraphMorphism.from_indices(src, tgt, row) for row in hom_matrix(src, tgt)]


def preserves_meets(f: GraphMorphism) -> bool:
    """f(u ⊓ v) = f(u) ⊓ f(v) for every pair with a source meet."""
    return _preserves_bounds(f, 0)


def preserves_joins(f: GraphMorphism) -> bool:
    """f(u ⊔ v) = f(u) ⊔ f(v) for every pair with a source join."""
    return _preserves_bounds(f, 1)


def _preserves_bounds(f: GraphMorphism, which: int) -> bool:
    src_table = _bound_tables(f.source)[which]
    tgt_table = _bound_tables(f.target)[which]
    vmap = f.vmap
    nv = len(f.source.vertices)
    for i in range(nv):
        for j in range(i, nv):
            s = src_table[i, j]
            if s < 0:
                continue
            if tgt_table[vmap[i], vmap[j]] != vmap[s]:
                return False
    return True


def edge_dim(u: Vertex, w: Vertex) -> Optional[int]:
    """Dimension of a cube edge: the unique differing position, None for loops."""
    if u == w:
        return None
    diffs = [i for i, (a, b) in enumerate(zip(u, w)) if a != b]
    if len(diffs) != 1:
        raise ValueError(f"({u}, {w}) differs in {len(diffs)} positions, not a cube edge")
    return diffs[0]


def is_dimension_preserving(f: GraphMorphism) -> bool:
    """Edges of one source dimension all map to edges of one target dimension.

    Loops count as the trivial dimension; they always map to loops, so
    only the non-trivial classes need checking.
    """
    image_dims: dict[int, set[Optional[int]]] = {}
    for u, w in f.source.edge_list:
        d = edge_dim(u, w)
        if d is None:
            continue
        image_dims.setdefault(d, set()).add(edge_dim(f(u), f(w)))
    return all(len(dims) == 1 for dims in image_dims.values())


def _one_hot(n: int, i: int) -> Vertex:
    return int_to_bits(1 << (n - 1 - i), n)


def extend_base_morphism(h: GraphMorphism) -> GraphMorphism:
    """Unique join-preserving extension of a base-subgraph morphism.

    h goes from the origin-plus-one-hot subgraph of the m-cube into a
    cube; every cube vertex is the join of the base vectors it contains,
    so the extension sends it to the join of their images.
    """
    target = h.target
    m = h.source.dimension
    if h.source != base_subgraph(m):
        raise ValueError("source must be the base subgraph of a standard cube")
    n = target.dimension
    z = bits_to_int(h(int_to_bits(0, m)))
    basis = [bits_to_int(h(_one_hot(m, i))) for i in range(m)]
    source = standard_cube(m)
    images = []
    for v in source.vertices:
        val = z
        for i, bit in enumerate(v):
            if bit == "1":
                val |= basis[i]
        images.append(int_to_bits(val, n))
    return GraphMorphism(source, target, images)


def restrict_to_base(f: GraphMorphism) -> GraphMorphism:
    """Restriction of a cube morphism to the base subgraph of its source."""
    m = f.source.dimension
    base = base_subgraph(m)
    return GraphMorphism(base, f.target, {v: f(v) for v in base.vertices})


def bchop_to_graphmeet(a: BchMorphism) -> GraphMorphism:
    """Cube morphism matching an opposite-category arrow.

    a maps a.m input slots to a.n output slots; read backwards it is an
    arrow a.n -> a.m, and the returned morphism goes from the
    a.n-dimensional cube to the a.m-dimensional cube.  Chain: split a
    into the constant bits z and a partial injection e, transpose e to
    d, read (z, d) as a base-subgraph morphism, extend join-preservingly.
    """
    src_dim, tgt_dim = a.n, a.m
    z = "".join("0" if a.is_slot(j) else str(a.entries[j] - a.n) for j in range(a.m))
    e = PartialInjection(
        tgt_dim, src_dim, [a.entries[j] if a.is_slot(j) else src_dim for j in range(a.m)]
    )
    d = transpose_partial_injection(e)
    z_int = bits_to_int(z)
    base = base_subgraph(src_dim)
    mapping = {int_to_bits(0, src_dim): z}
    for i in range(src_dim):
        val = z_int if not d.defined(i) else z_int | (1 << (tgt_dim - 1 - d.entries[i]))
        mapping[_one_hot(src_dim, i)] = int_to_bits(val, tgt_dim)
    h = GraphMorphism(base, standard_cube(tgt_dim), mapping)
    return extend_base_morphism(h)


def graphmeet_to_bchop(g: GraphMorphism) -> BchMorphism:
    """Inverse chain: read (z, d) off the origin and one-hot images."""
    m, n = g.source.dimension, g.target.dimension
    z = g(int_to_bits(0, m))
    d_entries = []
    for i in range(m):
        w = g(_one_hot(m, i))
        diffs = [j for j in range(n) if w[j] != z[j]]
        if not diffs:
            d_entries.append(n)
        elif len(diffs) == 1 and z[diffs[0]] == "0":
            d_entries.append(diffs[0])
        else:
            raise ValueError("morphism is not in the meet-and-join-preserving class")
    e = transpose_partial_injection(PartialInjection(m, n, d_entries))
    entries = [e.entries[j] if e.defined(j) else m + int(z[j]) for j in range(n)]
    return BchMorphism(n, m, entries)


@lru_cache(maxsize=None)
def enumerate_graphmeet(m: int, n: int) -> tuple[GraphMorphism, ...]:
    """Meet-and-join-preserving cube morphisms, built structurally.

    Enumerates the (z, d) data (one opposite-category arrow each) rather
    than filtering all vertex maps; the naive filter stays available as
    an oracle in enumerate_graphmeet_naive.
    """
    out = [bchop_to_graphmeet(a) for a in enumerate_bch(n, m)]
    out.sort(key=lambda f: f.vmap)
    if any(f.vmap == g.vmap for f, g in zip(out, out[1:])):
        raise AssertionError("structural enumeration produced duplicates")
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_graphmeet_naive(m: int, n: int) -> tuple[GraphMorphism, ...]:
    """Oracle path: filter every vertex map for meet and join preservation."""
    src, tgt = standard_cube(m), standard_cube(n)
    mat = hom_matrix(src, tgt)
    mask = kernels.bound_preserving_mask(
        mat, _bound_tables(src)[0], _bound_tables(tgt)[0]
    ) & kernels.bound_preserving_mask(mat, _bound_tables(src)[1], _bound_tables(tgt)[1])
    return tuple(GraphMorphism.from_indices(src, tgt, row) for row in mat[mask])


def _dim_classes(g: Graph) -> list[np.ndarray]:
    """Non-loop edges grouped by dimension, as index-pair arrays."""
    idx = g.index
    classes: dict[int, list[tuple[int, int]]] = {}
    for u, w in g.edge_list:
        d = edge_dim(u, w)
        if d is not None:
            classes.setdefault(d, []).append((idx[u], idx[w]))
    return [np.array(classes[d], dtype=np.int64) for d in sorted(classes)]


def _dim_table(g: Graph) -> np.ndarray:
    """Edge dimension lookup: table[i, j] = dimension, n for loops, -2 otherwise."""
    nv = len(g.vertices)
    table = np.full((nv, nv), -2, dtype=np.int8)
    idx = g.index
    for u, w in g.edge_list:
        d = edge_dim(u, w)
        table[idx[u], idx[w]] = g.dimension if d is None else d
    return table


@lru_cache(maxsize=None)
def enumerate_graphdim(m: int, n: int, twisted: bool = False) -> tuple[GraphMorphism, ...]:
    """Dimension-preserving cube morphisms via the naive filter."""
    from .cubes import twisted_cube

    build = twisted_cube if twisted else standard_cube
    src, tgt = build(m), build(n)
    mat = hom_matrix(src, tgt)
    mask = kernels.dimension_preserving_mask(mat, _dim_classes(src), _dim_table(tgt))
    return tuple(GraphMorphism.from_indices(src, tgt, row) for row in mat[mask])
