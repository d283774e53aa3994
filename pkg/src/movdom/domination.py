"""The dominating-set predicate, the exact minimum solver, and samplers.

The exact solver enumerates candidate sets by ascending cardinality and,
within a cardinality, by ascending bitmask, so the reported witness is
always the numerically least optimal set.  A greedy cover gives the
upper bound that caps the search.
"""

from __future__ import annotations

from dataclasses import dataclass
from random import Random
from typing import TYPE_CHECKING, Iterator

from .graph import Graph, VertexSet, check_vertex_set, closed_neighborhood

if TYPE_CHECKING:  # pragma: no cover
    from .movable import MovabilityCertificate

SOLVER_MAX_ORDER = 24


@dataclass(frozen=True)
class SolverResult:
    """An invariant value with its optimal witness, or an explicit absence.

    ``value is None`` means no qualifying set exists at any cardinality.
    When a value is present the witness attains it, and for the movable
    invariants the certificate proves the witness qualifies.
    """

    value: int | None
    witness: VertexSet | None
    certificate: "MovabilityCertificate | None" = None

    @property
    def exists(self) -> bool:
        return self.value is not None


def check_solver_order(g: Graph) -> None:
    if g.n > SOLVER_MAX_ORDER:
        raise ValueError(
            f"graph has {g.n} vertices; the exact solvers are capped at "
            f"{SOLVER_MAX_ORDER} to keep runtimes bounded"
        )


def is_dominating(g: Graph, s: VertexSet) -> bool:
    """True iff N[s] covers every vertex (the empty set never does for n >= 1)."""
    check_vertex_set(g, s)
    return closed_neighborhood(g, s) == g.full_mask


def ascending_k_subsets(n: int, k: int) -> Iterator[VertexSet]:
    """All k-element masks over n bits in ascending numeric order."""
    if k == 0:
        yield 0
        return
    if k > n:
        return
    mask = (1 << k) - 1
    limit = 1 << n
    while mask < limit:
        yield mask
        low = mask & -mask
        ripple = mask + low
        mask = (((ripple ^ mask) >> 2) // low) | ripple


def greedy_dominating_set(g: Graph) -> VertexSet:
    """Greedy cover: repeatedly take the vertex covering most uncovered vertices.

    Ties break toward the lowest index.  Used as a search upper bound; the
    result always dominates but need not be minimum.
    """
    chosen = 0
    covered = 0
    full = g.full_mask
    while covered != full:
        best_v = -1
        best_gain = 0
        for v in range(g.n):
            if chosen >> v & 1:
                continue
            gain = ((g.adj[v] | 1 << v) & ~covered).bit_count()
            if gain > best_gain:
                best_gain, best_v = gain, v
        chosen |= 1 << best_v
        covered |= g.adj[best_v] | 1 << best_v
    return chosen


def domination_lower_bound(g: Graph) -> int:
    """ceil(n / (1 + max degree)): every chosen vertex covers at most 1+maxdeg."""
    maxdeg = max(m.bit_count() for m in g.adj)
    return -(-g.n // (1 + maxdeg))


def gamma(g: Graph) -> SolverResult:
    """Exact domination number with the lex-least optimal witness."""
    check_solver_order(g)
    upper = greedy_dominating_set(g).bit_count()
    for k in range(domination_lower_bound(g), upper + 1):
        for mask in ascending_k_subsets(g.n, k):
            if is_dominating(g, mask):
                return SolverResult(k, mask)
    raise AssertionError("greedy cover guarantees a dominating set exists")


def greedy_repair(g: Graph, seed_set: VertexSet) -> VertexSet:
    """Grow a set until it dominates, adding best-coverage vertices first."""
    check_vertex_set(g, seed_set)
    chosen = seed_set
    covered = closed_neighborhood(g, seed_set)
    full = g.full_mask
    while covered != full:
        best_v = -1
        best_gain = 0
        for v in range(g.n):
            if chosen >> v & 1:
                continue
            gain = ((g.adj[v] | 1 << v) & ~covered).bit_count()
            if gain > best_gain:
                best_gain, best_v = gain, v
        chosen |= 1 << best_v
        covered |= g.adj[best_v] | 1 << best_v
    return chosen


def sample_dominating_sets(g: Graph, count: int, seed: int) -> list[VertexSet]:
    """``count`` dominating sets, deterministically sampled.

    Each draw seeds a uniformly sized random subset and repairs it
    greedily, so densities vary from near-minimal to near-total.  The
    same (graph, count, seed) always yields the same list, and a longer
    list extends a shorter one drawn with the same seed.
    """
    if count < 0:
        raise ValueError("count must be nonnegative")
    rng = Random(seed)
    out = []
    for _ in range(count):
        size = rng.randrange(g.n + 1)
        seed_set = 0
        for v in rng.sample(range(g.n), size):
            seed_set |= 1 << v
        out.append(greedy_repair(g, seed_set))
    return out
