"""Join and corona graph products with explicit vertex-provenance layouts.

Both constructors fix a concrete index layout so that sets and
certificates computed on a product can be traced back to the factors:
the left factor always occupies the leading indices, and corona copies
occupy contiguous intervals, one per center.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, VertexSet


@dataclass(frozen=True)
class JoinLayout:
    """Index intervals (half-open) of the two factors inside a join."""

    g_range: tuple[int, int]
    h_range: tuple[int, int]

    @property
    def g_mask(self) -> VertexSet:
        return _interval_mask(*self.g_range)

    @property
    def h_mask(self) -> VertexSet:
        return _interval_mask(*self.h_range)


@dataclass(frozen=True)
class CoronaLayout:
    """Who is who inside a corona product.

    ``centers[a]`` is the product index of the a-th left-factor vertex;
    ``copies[a]`` is the half-open index interval of its attached copy.
    Centers and copy intervals partition the product's vertices.
    """

    centers: tuple[int, ...]
    copies: tuple[tuple[int, int], ...]

    def copy_mask(self, a: int) -> VertexSet:
        return _interval_mask(*self.copies[a])

    def unit_mask(self, a: int) -> VertexSet:
        """The center a together with its copy (the a + H^a slice)."""
        return self.copy_mask(a) | 1 << self.centers[a]


@dataclass(frozen=True)
class IndexTranslation:
    """Bijection between a contiguous product interval and 0..size-1."""

    offset: int
    size: int

    def to_copy(self, product_vertex: int) -> int:
        i = product_vertex - self.offset
        if not 0 <= i < self.size:
            raise ValueError(f"product vertex {product_vertex} is outside the copy")
        return i

    def to_product(self, copy_vertex: int) -> int:
        if not 0 <= copy_vertex < self.size:
            raise ValueError(f"copy vertex {copy_vertex} is out of range")
        return copy_vertex + self.offset

    def mask_to_copy(self, product_mask: VertexSet) -> VertexSet:
        if product_mask & ~(_interval_mask(self.offset, self.offset + self.size)):
            raise ValueError("mask has members outside the copy interval")
        return product_mask >> self.offset

    def mask_to_product(self, copy_mask: VertexSet) -> VertexSet:
        if copy_mask < 0 or copy_mask >> self.size:
            raise ValueError("mask has members outside the copy")
        return copy_mask << self.offset


def _interval_mask(start: int, stop: int) -> VertexSet:
    return ((1 << (stop - start)) - 1) << start


def join(g: Graph, h: Graph) -> tuple[Graph, JoinLayout]:
    """G + H: both factors plus every edge between them.

    The left factor keeps indices 0..|V(G)|-1, the right factor follows.
    """
    pg, ph = g.n, h.n
    h_mask = _interval_mask(pg, pg + ph)
    g_mask = _interval_mask(0, pg)
    adj = [g.adj[v] | h_mask for v in range(pg)]
    adj += [(h.adj[w] << pg) | g_mask for w in range(ph)]
    return Graph(pg + ph, tuple(adj)), JoinLayout((0, pg), (pg, pg + ph))


def corona(g: Graph, h: Graph) -> tuple[Graph, CoronaLayout]:
    """G o H: one copy of H per vertex of G, each joined to its owner.

    Centers keep G's indices 0..|V(G)|-1; the copy for center a occupies
    the interval [pg + a*ph, pg + (a+1)*ph).  A center is adjacent to its
    whole copy and to nothing in any other copy.
    """
    pg, ph = g.n, h.n
    n = pg * (1 + ph)
    adj = [0] * n
    copies = []
    for a in range(pg):
        start = pg + a * ph
        copies.append((start, start + ph))
        adj[a] = g.adj[a] | _interval_mask(start, start + ph)
        for j in range(ph):
            adj[start + j] = (h.adj[j] << start) | 1 << a
    layout = CoronaLayout(tuple(range(pg)), tuple(copies))
    return Graph(n, tuple(adj)), layout


def slice_copy(layout: CoronaLayout, a: int, product: Graph) -> tuple[Graph, IndexTranslation]:
    """The copy attached to center a as a standalone graph.

    Returns the induced subgraph on the copy interval, re-indexed to
    0..|V(H)|-1, plus the translation used, so sets can be mapped in
    both directions.
    """
    if not 0 <= a < len(layout.centers):
        raise ValueError(f"center index {a} out of range")
    start, stop = layout.copies[a]
    size = stop - start
    window = _interval_mask(start, stop)
    adj = tuple((product.adj[v] & window) >> start for v in range(start, stop))
    return Graph(size, adj), IndexTranslation(start, size)


def layout_partition_ok(layout: JoinLayout | CoronaLayout, n: int) -> bool:
    """True iff the layout's pieces exactly cover 0..n-1 without overlap."""
    if isinstance(layout, JoinLayout):
        pieces = [layout.g_mask, layout.h_mask]
    else:
        pieces = [1 << c for c in layout.centers]
        pieces += [layout.copy_mask(a) for a in range(len(layout.centers))]
    union = 0
    for piece in pieces:
        if union & piece:
            return False
        union |= piece
    return union == (1 << n) - 1


__all__ = [
    "JoinLayout",
    "CoronaLayout",
    "IndexTranslation",
    "join",
    "corona",
    "slice_copy",
    "layout_partition_ok",
]
