"""Predicates, certificates, and exact solvers for movable domination.

A dominating set is 1-movable when each single member can be dropped, or
swapped for an outside neighbor, without losing domination.  It is
2-movable when every unordered pair of distinct members can be dropped
together, or simultaneously swapped for outside neighbors of the two
(one neighbor each), again preserving domination.

Two readings of the pair-swap clause are supported: LITERAL lets the two
replacement vertices coincide, DISTINCT requires them to differ.  A set
with fewer than two members is never 2-movable, so the 2-movable
invariant is always at least 2 when it exists.

Checks return a certificate listing one verified move per member (or per
pair), or a falsy failure object naming the first stuck member or pair.
Certificates are canonical: members and pairs in ascending order, drops
preferred over swaps, swap replacements scanned in ascending (u, v)
order, first success recorded.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from .domination import SolverResult, ascending_k_subsets, check_solver_order, gamma, is_dominating
from .graph import Graph, VertexSet, bits, check_vertex_set, vertex_list


class ReplacementMode(Enum):
    """Whether a pair swap may reuse one vertex for both replacements."""

    LITERAL = "literal"
    DISTINCT = "distinct"


class MalformedCertificateError(ValueError):
    """A certificate whose move list does not even cover the right pairs."""


@dataclass(frozen=True)
class VertexMove:
    """How one member leaves the set: dropped, or swapped for a neighbor."""

    vertex: int
    replacement: int | None = None

    @property
    def is_drop(self) -> bool:
        return self.replacement is None


@dataclass(frozen=True)
class PairMove:
    """How one pair leaves the set.

    ``pair`` is (x, y) with x < y.  A swap replacement (u, v) means u is
    an outside neighbor of x and v an outside neighbor of y; ``None``
    means the pair is simply dropped.
    """

    pair: tuple[int, int]
    replacement: tuple[int, int] | None = None

    @property
    def is_drop(self) -> bool:
        return self.replacement is None


@dataclass(frozen=True)
class MovabilityCertificate:
    """One verified move per member (level 1) or per distinct pair (level 2)."""

    level: int
    moves: tuple[VertexMove | PairMove, ...]

    def __bool__(self) -> bool:
        return True

    def to_json_dict(self) -> dict:
        moves = []
        for m in self.moves:
            entry: dict = (
                {"vertex": m.vertex} if isinstance(m, VertexMove) else {"pair": list(m.pair)}
            )
            if m.is_drop:
                entry["action"] = "drop"
            else:
                entry["action"] = "swap"
                entry["replacement"] = (
                    m.replacement if isinstance(m, VertexMove) else list(m.replacement)
                )
            moves.append(entry)
        return {"level": self.level, "moves": moves}


@dataclass(frozen=True)
class MovabilityFailure:
    """Falsy outcome of a movability check, naming what blocked it."""

    reason: str
    detail: int | tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return False


def is_1movable_dominating(g: Graph, s: VertexSet) -> MovabilityCertificate | MovabilityFailure:
    """Certificate iff s dominates and every single member is movable.

    A member v is movable if s minus v still dominates, or some outside
    neighbor u of v restores domination when substituted.
    """
    check_vertex_set(g, s)
    if s == 0:
        raise ValueError("the empty set cannot be checked for movability")
    if not is_dominating(g, s):
        return MovabilityFailure("not-dominating")
    moves = []
    for v in bits(s):
        rest = s & ~(1 << v)
        if is_dominating(g, rest):
            moves.append(VertexMove(v))
            continue
        for u in bits(g.adj[v] & ~s):
            if is_dominating(g, rest | 1 << u):
                moves.append(VertexMove(v, u))
                break
        else:
            return MovabilityFailure("immovable-vertex", v)
    return MovabilityCertificate(1, tuple(moves))


def _pair_move(
    g: Graph, s: VertexSet, x: int, y: int, mode: ReplacementMode
) -> PairMove | None:
    rest = s & ~(1 << x | 1 << y)
    if is_dominating(g, rest):
        return PairMove((x, y))
    outside_x = g.adj[x] & ~s
    outside_y = g.adj[y] & ~s
    for u in bits(outside_x):
        for v in bits(outside_y):
            if mode is ReplacementMode.DISTINCT and u == v:
                continue
            if is_dominating(g, rest | 1 << u | 1 << v):
                return PairMove((x, y), (u, v))
    return None


def is_2movable_dominating(
    g: Graph, s: VertexSet, mode: ReplacementMode = ReplacementMode.LITERAL
) -> MovabilityCertificate | MovabilityFailure:
    """Certificate iff s dominates, has >= 2 members, and every pair is movable.

    Both ways of orienting a swap onto an unordered pair are covered by
    the scan: a replacement serving the higher member appears as the
    transposed candidate.  Singletons are rejected outright, which pins
    the 2-movable invariant's floor at 2.
    """
    check_vertex_set(g, s)
    if s == 0:
        raise ValueError("the empty set cannot be checked for movability")
    if not is_dominating(g, s):
        return MovabilityFailure("not-dominating")
    if s.bit_count() < 2:
        return MovabilityFailure("singleton")
    moves = []
    for x, y in combinations(vertex_list(s), 2):
        move = _pair_move(g, s, x, y, mode)
        if move is None:
            return MovabilityFailure("immovable-pair", (x, y))
        moves.append(move)
    return MovabilityCertificate(2, tuple(moves))


def gamma_m1(g: Graph) -> SolverResult:
    """Exact 1-movable domination number, or absence when no set qualifies."""
    check_solver_order(g)
    base = gamma(g).value
    assert base is not None
    for k in range(base, g.n + 1):
        for mask in ascending_k_subsets(g.n, k):
            cert = is_1movable_dominating(g, mask)
            if cert:
                return SolverResult(k, mask, cert)
    return SolverResult(None, None)


def gamma_m2(g: Graph, mode: ReplacementMode = ReplacementMode.LITERAL) -> SolverResult:
    """Exact 2-movable domination number under the given replacement mode.

    Searches every cardinality from max(2, domination number) up to n:
    2-movability is not closed under supersets, so no cardinality can be
    skipped once one fails.  Returns absence when none qualifies.
    """
    check_solver_order(g)
    base = gamma(g).value
    assert base is not None
    for k in range(max(2, base), g.n + 1):
        for mask in ascending_k_subsets(g.n, k):
            cert = is_2movable_dominating(g, mask, mode)
            if cert:
                return SolverResult(k, mask, cert)
    return SolverResult(None, None)


def verify_certificate(
    g: Graph,
    s: VertexSet,
    cert: MovabilityCertificate,
    mode: ReplacementMode = ReplacementMode.LITERAL,
) -> bool:
    """Independently re-check a certificate against the definition.

    Raises MalformedCertificateError when the move list does not cover
    exactly the required members (level 1) or distinct pairs (level 2).
    Returns False when coverage is right but some move does not hold:
    a drop that breaks domination, a replacement inside s, a replacement
    not adjacent to its member, or coinciding replacements in DISTINCT
    mode.
    """
    check_vertex_set(g, s)
    members = vertex_list(s)
    if cert.level == 1:
        wanted = [(v,) for v in members]
        got = [(m.vertex,) for m in cert.moves if isinstance(m, VertexMove)]
    elif cert.level == 2:
        wanted = list(combinations(members, 2))
        got = [m.pair for m in cert.moves if isinstance(m, PairMove)]
    else:
        raise MalformedCertificateError(f"unknown certificate level {cert.level}")
    if len(got) != len(cert.moves):
        raise MalformedCertificateError("move shape does not match the certificate level")
    if sorted(got) != wanted:
        raise MalformedCertificateError(
            "moves must cover every required member or pair exactly once"
        )

    for move in cert.moves:
        if isinstance(move, VertexMove):
            removed = 1 << move.vertex
            if move.is_drop:
                if not is_dominating(g, s & ~removed):
                    return False
                continue
            u = move.replacement
            if s >> u & 1 or not g.adj[move.vertex] >> u & 1:
                return False
            if not is_dominating(g, (s & ~removed) | 1 << u):
                return False
        else:
            x, y = move.pair
            removed = 1 << x | 1 << y
            if move.is_drop:
                if not is_dominating(g, s & ~removed):
                    return False
                continue
            u, v = move.replacement
            if mode is ReplacementMode.DISTINCT and u == v:
                return False
            if s >> u & 1 or s >> v & 1:
                return False
            if not (g.adj[x] >> u & 1 and g.adj[y] >> v & 1):
                return False
            if not is_dominating(g, (s & ~removed) | 1 << u | 1 << v):
                return False
    return True
