"""Brute-force vertex-map filters, with a numba fast path.

The hot loop of the whole package is the naive graph-homomorphism
filter: enumerate every function from the source vertex set to the
target vertex set (nt ** ns candidates, 8^8 = 16.7M at the largest
supported size) and keep the ones that send every edge to an edge.

Two interchangeable backends implement it:

* ``numba`` - an @njit odometer loop (default when numba imports).
* ``numpy`` - batched mixed-radix decoding with fancy-indexed masks.

Selection: the ``CUBECATS_KERNEL`` environment variable ("numba" or
"numpy"), else numba when available.  ``benchmarks/bench_kernels.py``
times one against the other.
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAS_NUMBA = False

_ENV_VAR = "CUBECATS_KERNEL"


def active_backend() -> str:
    """Backend that edge_preserving_maps will use right now."""
    choice = os.environ.get(_ENV_VAR, "").strip().lower()
    if not choice:
        return "numba" if HAS_NUMBA else "numpy"
    if choice not in ("numba", "numpy"):
        raise ValueError(f"{_ENV_VAR} must be 'numba' or 'numpy', got {choice!r}")
    if choice == "numba" and not HAS_NUMBA:
        raise RuntimeError(f"{_ENV_VAR}=numba but numba is not importable")
    return choice


if HAS_NUMBA:

    @njit(cache=True)
    def _count_numba(ns, nt, edges, adj):  # pragma: no cover - compiled
        total = nt**ns
        f = np.zeros(ns, dtype=np.uint8)
        count = 0
        for _ in range(total):
            ok = True
            for e in range(edges.shape[0]):
                if not adj[f[edges[e, 0]], f[edges[e, 1]]]:
                    ok = False
                    break
            if ok:
                count += 1
            # odometer increment, last digit least significant
            i = ns - 1
            while i >= 0:
                f[i] += 1
                if f[i] == nt:
                    f[i] = 0
                    i -= 1
                else:
                    break
        return count

    @njit(cache=True)
    def _fill_numba(ns, nt, edges, adj, out):  # pragma: no cover - compiled
        total = nt**ns
        f = np.zeros(ns, dtype=np.uint8)
        k = 0
        for _ in range(total):
            ok = True
            for e in range(edges.shape[0]):
                if not adj[f[edges[e, 0]], f[edges[e, 1]]]:
                    ok = False
                    break
            if ok:
                for i in range(ns):
                    out[k, i] = f[i]
                k += 1
            i = ns - 1
            while i >= 0:
                f[i] += 1
                if f[i] == nt:
                    f[i] = 0
                    i -= 1
                else:
                    break
        return k


def _filter_numba(ns: int, nt: int, edges: np.ndarray, adj: np.ndarray) -> np.ndarray:
    count = _count_numba(ns, nt, edges, adj)
    out = np.empty((count, ns), dtype=np.uint8)
    filled = _fill_numba(ns, nt, edges, adj, out)
    assert filled == count
    return out


def _filter_numpy(
    ns: int, nt: int, edges: np.ndarray, adj: np.ndarray, batch: int = 1 << 20
) -> np.ndarray:
    total = nt**ns
    # digit i (source vertex i) is more significant for smaller i, so
    # ascending candidate index is ascending lexicographic vertex map
    divisors = nt ** np.arange(ns - 1, -1, -1, dtype=np.int64)
    chunks: list[np.ndarray] = []
    for start in range(0, total, batch):
        stop = min(start + batch, total)
        codes = np.arange(start, stop, dtype=np.int64)
        maps = ((codes[:, None] // divisors) % nt).astype(np.uint8)
        mask = np.ones(stop - start, dtype=bool)
        for s, t in edges:
            mask &= adj[maps[:, s], maps[:, t]]
        chunks.append(maps[mask])
    return np.concatenate(chunks) if chunks else np.empty((0, ns), dtype=np.uint8)


def edge_preserving_maps(
    ns: int, nt: int, edges: np.ndarray, adj: np.ndarray, backend: str | None = None
) -> np.ndarray:
    """All vertex maps sending every listed edge to an edge.

    ns, nt: source and target vertex counts.  edges: (E, 2) int array of
    source edge index pairs, loops included.  adj: (nt, nt) boolean
    adjacency of the target.  Returns a (N, ns) uint8 array whose rows
    are the surviving maps in lexicographic order.
    """
    if ns == 0:
        return np.zeros((1, 0), dtype=np.uint8)
    edges = np.ascontiguousarray(edges, dtype=np.int64).reshape(-1, 2)
    adj = np.ascontiguousarray(adj, dtype=np.bool_)
    chosen = backend or active_backend()
    if chosen == "numba":
        return _filter_numba(ns, nt, edges, adj)
    if chosen == "numpy":
        return _filter_numpy(ns, nt, edges, adj)
    raise ValueError(f"unknown backend {chosen!r}")


def bound_preserving_mask(
    maps: np.ndarray, src_table: np.ndarray, tgt_table: np.ndarray, chunk: int = 1 << 17
) -> np.ndarray:
    """Rows whose map preserves a binary-bound table (meets or joins).

    The tables hold, per ordered vertex pair, the index of the bound or
    -1 where none exists; a row survives when for every pair with a
    source bound the images have a target bound and it is the image of
    the source bound.
    """
    n_rows = maps.shape[0]
    has_src = src_table >= 0
    src_safe = np.where(has_src, src_table, 0)
    mask = np.ones(n_rows, dtype=bool)
    for start in range(0, n_rows, chunk):
        rows = maps[start : start + chunk].astype(np.int16)
        img_bound = tgt_table[rows[:, :, None], rows[:, None, :]]
        required = rows[:, src_safe]
        ok = np.where(has_src[None, :, :], img_bound == required, True)
        mask[start : start + rows.shape[0]] = ok.all(axis=(1, 2))
    return mask


def dimension_preserving_mask(
    maps: np.ndarray, src_classes: list[np.ndarray], tgt_dim_table: np.ndarray
) -> np.ndarray:
    """Rows sending all edges of one source dimension to one target dimension.

    src_classes lists non-loop edges per source dimension as index
    pairs; tgt_dim_table gives the target dimension per edge (with the
    loop marker on the diagonal).  Maps are assumed edge-preserving.
    """
    mask = np.ones(maps.shape[0], dtype=bool)
    for edges in src_classes:
        dims = tgt_dim_table[maps[:, edges[:, 0]], maps[:, edges[:, 1]]]
        mask &= (dims == dims[:, :1]).all(axis=1)
    return mask


def fibre_counts(maps: np.ndarray, nt: int) -> np.ndarray:
    """Per row, how many source vertices hit each target vertex."""
    n_rows = maps.shape[0]
    counts = np.zeros((n_rows, nt), dtype=np.int32)
    np.add.at(counts, (np.arange(n_rows)[:, None], maps.astype(np.intp)), 1)
    return counts
