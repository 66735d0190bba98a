"""Operations specific to twisted cubes.

The twisted cube of dimension n is totally ordered by its free preorder
and carries a unique Hamiltonian path; the mutually inverse bijections
hamiltonian_f / order_g realize that order.  Dimension-preserving
morphisms between twisted cubes factor uniquely through an image face,
which yields the ternary-notation presentation: arrows are strings over
{0, 1, ⋆} composed by substitution with a parity twist.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Optional

from .graphs import Vertex, bits_to_int, int_to_bits
from .cubes import twisted_cube
from .standard import (
    GraphMorphism,
    compose_graph_morphisms,
    enumerate_graphdim,
)

STAR = "*"


def rev(x: str) -> str:
    """Flip every bit; as a number this sends i to 2^n - 1 - i."""
    return "".join("1" if c == "0" else "0" for c in x)


def _f_bits(x: str) -> str:
    if not x:
        return ""
    if x[0] == "0":
        return "0" + _f_bits(rev(x[1:]))
    return "1" + _f_bits(x[1:])


def _g_bits(x: str) -> str:
    if not x:
        return ""
    if x[0] == "0":
        return "0" + rev(_g_bits(x[1:]))
    return "1" + _g_bits(x[1:])


def hamiltonian_f(n: int, k: int) -> Vertex:
    """Vertex at position k in the total order of the twisted n-cube."""
    return _f_bits(int_to_bits(k, n))


def order_g(n: int, v: Vertex) -> int:
    """Position of vertex v in the total order; inverse of hamiltonian_f."""
    if len(v) != n:
        raise ValueError(f"expected a vertex of length {n}")
    return bits_to_int(_g_bits(v))


def hamiltonian_path(n: int) -> list[tuple[Vertex, Vertex]]:
    """The consecutive edges hamiltonian_f(k) -> hamiltonian_f(k+1).

    Every step is checked to be an actual edge of the twisted cube.
    """
    if n < 1:
        raise ValueError("hamiltonian_path needs n >= 1")
    cube = twisted_cube(n)
    steps = [(hamiltonian_f(n, k), hamiltonian_f(n, k + 1)) for k in range(2**n - 1)]
    for s, t in steps:
        if not cube.has_edge(s, t):
            raise AssertionError(f"({s}, {t}) is not an edge of the twisted {n}-cube")
    return steps


def unique_surjection(m: int, n: int) -> GraphMorphism:
    """The one surjective dimension-preserving map: drop trailing coordinates."""
    if m < n:
        raise ValueError(f"no surjective morphism from dimension {m} to {n}")
    src, tgt = twisted_cube(m), twisted_cube(n)
    return GraphMorphism(src, tgt, {v: v[:n] for v in src.vertices})


@dataclass(frozen=True)
class Face:
    """A sub-cube selector: fixed bits plus ⋆ at the varying positions."""

    n: int
    seq: str

    def __post_init__(self) -> None:
        if len(self.seq) != self.n or set(self.seq) - {"0", "1", STAR}:
            raise ValueError(f"face of dimension {self.n} needs a {self.n}-char string over 01{STAR}")

    @property
    def dimension(self) -> int:
        return self.seq.count(STAR)


def face_count(n: int, k: int) -> int:
    """C(n, k) * 2^(n-k)."""
    from math import comb

    return comb(n, k) * 2 ** (n - k)


def faces(n: int, k: int) -> list[Face]:
    """All k-dimensional faces of the n-cube, in canonical string order."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    return [
        Face(n, "".join(chars))
        for chars in product("01" + STAR, repeat=n)
        if chars.count(STAR) == k
    ]


def _face_flips(seq: str) -> list[int]:
    """Orientation flips per star: parity of fixed zeros since the last star.

    Derived, not given: it is the unique choice making the inclusion an
    edge-preserving morphism, because the source bit at star j lands in
    a prefix that already contains the earlier stars' flipped bits (their
    flips cancel in pairs) plus the fixed bits between stars.
    """
    flips = []
    zeros_since_star = 0
    for ch in seq:
        if ch == STAR:
            flips.append(zeros_since_star & 1)
            zeros_since_star = 0
        elif ch == "0":
            zeros_since_star += 1
    return flips


def face_to_injection(face: Face) -> GraphMorphism:
    """The dimension-preserving injective morphism whose image is the face.

    Edge preservation is validated at construction, so a wrong flip rule
    cannot survive silently.
    """
    m = face.dimension
    src, tgt = twisted_cube(m), twisted_cube(face.n)
    flips = _face_flips(face.seq)
    mapping = {}
    for u in src.vertices:
        out = []
        j = 0
        for ch in face.seq:
            if ch == STAR:
                out.append(str(int(u[j]) ^ flips[j]))
                j += 1
            else:
                out.append(ch)
        mapping[u] = "".join(out)
    return GraphMorphism(src, tgt, mapping)


def image_face(f: GraphMorphism) -> Face:
    """Ternary sequence with ⋆ where the image varies, the constant bit elsewhere."""
    images = [f(v) for v in f.source.vertices]
    seq = []
    for j in range(f.target.dimension):
        values = {img[j] for img in images}
        seq.append(STAR if len(values) > 1 else values.pop())
    return Face(f.target.dimension, "".join(seq))


def factorize(f: GraphMorphism) -> tuple[int, GraphMorphism, GraphMorphism]:
    """Unique surjection-then-injection factorization through the image face."""
    face = image_face(f)
    k = face.dimension
    surj = unique_surjection(f.source.dimension, k)
    inj = face_to_injection(face)
    if compose_graph_morphisms(inj, surj) != f:
        raise ValueError("morphism does not factor through its image face "
                         "(is it dimension-preserving?)")
    return k, surj, inj


class TernaryMorphism:
    """Arrow m -> n in ternary notation: a length-n string over {0, 1, ⋆}
    with at most m stars.  Stars consume source coordinates in order;
    fixed characters are constants."""

    __slots__ = ("m", "n", "seq")

    def __init__(self, m: int, n: int, seq: str):
        seq = str(seq)
        if len(seq) != n:
            raise ValueError(f"expected a string of length {n}, got {seq!r}")
        bad = [i for i, c in enumerate(seq) if c not in "01" + STAR]
        if bad:
            raise ValueError(f"position {bad[0]}: invalid character {seq[bad[0]]!r}")
        if seq.count(STAR) > m:
            raise ValueError(f"{seq!r} has {seq.count(STAR)} stars, more than m={m}")
        self.m = m
        self.n = n
        self.seq = seq

    @property
    def stars(self) -> int:
        return self.seq.count(STAR)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, TernaryMorphism)
            and (self.m, self.n, self.seq) == (other.m, other.n, other.seq)
        )

    def __hash__(self) -> int:
        return hash((self.m, self.n, self.seq))

    def to_json(self) -> str:
        return json.dumps({"m": self.m, "n": self.n, "seq": self.seq}, separators=(", ", ": "))

    def __repr__(self) -> str:
        return f"TernaryMorphism({self.m}->{self.n}, {self.seq!r})"


def ternary_identity(n: int) -> TernaryMorphism:
    return TernaryMorphism(n, n, STAR * n)


def ternary_compose(g: TernaryMorphism, f: TernaryMorphism) -> TernaryMorphism:
    """Composite g ∘ f: copy g's constants, substitute f along g's stars.

    A binary value substituted at a star is xored with the parity of
    zeros among g's own constants since g's previous star.  (Counting
    zeros of the composite output instead breaks the identity laws; the
    graph side fixes this rule, and the tests cross-check it there.)
    """
    if f.n != g.m:
        raise ValueError(f"cannot compose {g.m}->{g.n} after {f.m}->{f.n}")
    out = []
    j = 0
    zeros_since_star = 0
    for ch in g.seq:
        if ch == STAR:
            value = f.seq[j]
            j += 1
            if value == STAR:
                out.append(STAR)
            else:
                out.append(str(int(value) ^ (zeros_since_star & 1)))
            zeros_since_star = 0
        else:
            out.append(ch)
            if ch == "0":
                zeros_since_star += 1
    return TernaryMorphism(f.m, g.n, "".join(out))


def untwisted_ternary_compose(g: TernaryMorphism, f: TernaryMorphism) -> TernaryMorphism:
    """Substitution without the parity twist (standard-cube variant)."""
    if f.n != g.m:
        raise ValueError(f"cannot compose {g.m}->{g.n} after {f.m}->{f.n}")
    out = []
    j = 0
    for ch in g.seq:
        if ch == STAR:
            out.append(f.seq[j])
            j += 1
        else:
            out.append(ch)
    return TernaryMorphism(f.m, g.n, "".join(out))


def ternary_to_graphdim(t: TernaryMorphism) -> GraphMorphism:
    """Face injection after the unique surjection onto the star count."""
    inj = face_to_injection(Face(t.n, t.seq))
    surj = unique_surjection(t.m, t.stars)
    return compose_graph_morphisms(inj, surj)


def graphdim_to_ternary(f: GraphMorphism) -> TernaryMorphism:
    """Inverse direction: read the ternary sequence off the image face."""
    t = TernaryMorphism(f.source.dimension, f.target.dimension, image_face(f).seq)
    if ternary_to_graphdim(t) != f:
        raise ValueError("morphism is not dimension-preserving")
    return t


@lru_cache(maxsize=None)
def enumerate_ternary(m: int, n: int) -> tuple[TernaryMorphism, ...]:
    """All ternary arrows m -> n in canonical string order (0 < 1 < ⋆)."""
    return tuple(
        TernaryMorphism(m, n, "".join(chars))
        for chars in product("01" + STAR, repeat=n)
        if chars.count(STAR) <= m
    )


def semi_ternary_check(t: TernaryMorphism) -> bool:
    """Membership in the semi variant: star count exactly m."""
    return t.stars == t.m


def enumerate_semi(m: int, n: int) -> tuple[TernaryMorphism, ...]:
    return tuple(t for t in enumerate_ternary(m, n) if semi_ternary_check(t))


def enumerate_twgraphdim(m: int, n: int) -> tuple[GraphMorphism, ...]:
    """Dimension-preserving twisted-cube morphisms via the naive filter."""
    return enumerate_graphdim(m, n, twisted=True)


def monoidal_tensor(x: Vertex, y: Vertex) -> Vertex:
    """Concatenate, flipping y when x has an odd number of zeros."""
    return x + (rev(y) if x.count("0") % 2 else y)
