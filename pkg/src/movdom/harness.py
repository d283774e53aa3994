"""Mechanical validation of the package's numbered claims on instance pools.

Each verify_* function filters its pool down to the claim's hypotheses
(connectivity, order thresholds), evaluates the claim instance by
instance through the public solver API, and returns a ClaimReport whose
counterexample, if any, contains everything needed to replay the
discrepancy: the graphs as edge lists, the sets, and the mode.

Claims whose ideal value is a product formula are validated on pools
where that formula is at least 2 by default, since the 2-movable
invariant can never be smaller; callers may pass any pool they like.
"""

from __future__ import annotations

from dataclasses import dataclass

from .domination import SOLVER_MAX_ORDER, gamma, is_dominating, sample_dominating_sets
from .graph import (
    Graph,
    VertexSet,
    bits,
    complete,
    cycle,
    enumerate_connected_graphs,
    is_connected,
    path,
    vertex_list,
)
from .movable import ReplacementMode, gamma_m1, gamma_m2, is_2movable_dominating
from .products import CoronaLayout, corona, join, slice_copy

CLAIM_IDS = (
    "remark-3.1",
    "theorem-3.2",
    "theorem-3.3",
    "theorem-3.6",
    "corollary-3.1",
    "lemma-3.4",
    "lemma-3.5",
)

_MODES = (ReplacementMode.LITERAL, ReplacementMode.DISTINCT)

CORONA_ORDER_CAP = 16


@dataclass(frozen=True)
class ClaimReport:
    """Outcome of checking one claim over one pool."""

    claim: str
    pool: str
    instances: int
    status: str
    counterexample: dict | None = None
    clause_tally: dict | None = None
    seed: int | None = None

    def __post_init__(self) -> None:
        if (self.status == "fail") != (self.counterexample is not None):
            raise ValueError("status must be 'fail' exactly when a counterexample is present")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json_dict(self) -> dict:
        out: dict = {
            "claim": self.claim,
            "pool": self.pool,
            "instances": self.instances,
            "status": self.status,
        }
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.clause_tally is not None:
            out["clause_tally"] = self.clause_tally
        if self.seed is not None:
            out["seed"] = self.seed
        return out


def _graph_payload(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges()]}


def _value_payload(value: int | None) -> int | str:
    return "none" if value is None else value


def verify_remark_3_1(pool) -> ClaimReport:
    """The 2-movable invariant is at least 2 whenever it exists.

    Checked under both replacement modes on connected graphs of order
    at least 4.
    """
    supplied = list(pool)
    admissible = [g for g in supplied if g.n >= 4 and is_connected(g)]
    tally = {"literal_exists": 0, "literal_missing": 0, "distinct_exists": 0, "distinct_missing": 0}
    counterexample = None
    for g in admissible:
        for mode in _MODES:
            result = gamma_m2(g, mode)
            if result.exists:
                tally[f"{mode.value}_exists"] += 1
                if result.value < 2 and counterexample is None:
                    counterexample = {
                        "graph": _graph_payload(g),
                        "mode": mode.value,
                        "expected": ">= 2",
                        "got": result.value,
                    }
            else:
                tally[f"{mode.value}_missing"] += 1
    return ClaimReport(
        claim="remark-3.1",
        pool=f"{len(admissible)} connected graphs of order >= 4 (of {len(supplied)} supplied)",
        instances=len(admissible),
        status="fail" if counterexample else "pass",
        counterexample=counterexample,
        clause_tally=tally,
    )


def verify_theorem_3_2(pool) -> ClaimReport:
    """Domination number never exceeds either movable variant.

    The 2-movable comparison is made only where that invariant exists;
    existence counts are tallied per mode.
    """
    supplied = list(pool)
    admissible = [g for g in supplied if g.n >= 4 and is_connected(g)]
    tally = {
        "gamma_m2_literal_exists": 0,
        "gamma_m2_literal_missing": 0,
        "gamma_m2_distinct_exists": 0,
        "gamma_m2_distinct_missing": 0,
    }
    counterexample = None
    for g in admissible:
        base = gamma(g).value
        m1 = gamma_m1(g)
        if (not m1.exists or base > m1.value) and counterexample is None:
            counterexample = {
                "graph": _graph_payload(g),
                "inequality": "gamma <= gamma-m1",
                "gamma": base,
                "got": _value_payload(m1.value),
            }
        for mode in _MODES:
            m2 = gamma_m2(g, mode)
            if m2.exists:
                tally[f"gamma_m2_{mode.value}_exists"] += 1
                if base > m2.value and counterexample is None:
                    counterexample = {
                        "graph": _graph_payload(g),
                        "inequality": "gamma <= gamma-m2",
                        "mode": mode.value,
                        "gamma": base,
                        "got": m2.value,
                    }
            else:
                tally[f"gamma_m2_{mode.value}_missing"] += 1
    return ClaimReport(
        claim="theorem-3.2",
        pool=f"{len(admissible)} connected graphs of order >= 4 (of {len(supplied)} supplied)",
        instances=len(admissible),
        status="fail" if counterexample else "pass",
        counterexample=counterexample,
        clause_tally=tally,
    )


def verify_theorem_3_3(g_pool, h_pool) -> ClaimReport:
    """Every join of connected graphs of order >= 2 has 2-movable number 2."""
    gs = [g for g in g_pool if g.n >= 2 and is_connected(g)]
    hs = [h for h in h_pool if h.n >= 2 and is_connected(h)]
    pairs = [(g, h) for g in gs for h in hs]
    counterexample = None
    for g, h in pairs:
        product, _ = join(g, h)
        for mode in _MODES:
            result = gamma_m2(product, mode)
            if result.value != 2 and counterexample is None:
                counterexample = {
                    "g": _graph_payload(g),
                    "h": _graph_payload(h),
                    "mode": mode.value,
                    "expected": 2,
                    "got": _value_payload(result.value),
                }
    return ClaimReport(
        claim="theorem-3.3",
        pool=f"{len(pairs)} ordered pairs, connected factors of order >= 2",
        instances=len(pairs),
        status="fail" if counterexample else "pass",
        counterexample=counterexample,
    )


def _admissible_corona_pairs(g_pool, h_pool, order_cap: int):
    gs = [g for g in g_pool if is_connected(g)]
    hs = [h for h in h_pool if is_connected(h)]
    return [
        (g, h)
        for g in gs
        for h in hs
        if 4 <= g.n * (1 + h.n) <= order_cap
    ]


def verify_theorem_3_6(g_pool, h_pool) -> ClaimReport:
    """Corona products: the 2-movable number equals |V(G)| times gamma(H).

    Pairs are filtered to connected factors with corona order between 4
    and the documented solver budget.
    """
    pairs = _admissible_corona_pairs(g_pool, h_pool, CORONA_ORDER_CAP)
    counterexample = None
    for g, h in pairs:
        product, _ = corona(g, h)
        expected = g.n * gamma(h).value
        for mode in _MODES:
            result = gamma_m2(product, mode)
            if result.value != expected and counterexample is None:
                counterexample = {
                    "g": _graph_payload(g),
                    "h": _graph_payload(h),
                    "mode": mode.value,
                    "expected": expected,
                    "got": _value_payload(result.value),
                }
    return ClaimReport(
        claim="theorem-3.6",
        pool=(
            f"{len(pairs)} ordered pairs, connected factors, "
            f"4 <= corona order <= {CORONA_ORDER_CAP}"
        ),
        instances=len(pairs),
        status="fail" if counterexample else "pass",
        counterexample=counterexample,
    )


def verify_corollary_3_1(h_pool) -> ClaimReport:
    """Joining one apex vertex: the 2-movable number equals gamma(H)."""
    hs = [h for h in h_pool if h.n >= 4 and is_connected(h)]
    apex = complete(1)
    counterexample = None
    for h in hs:
        product, _ = join(apex, h)
        expected = gamma(h).value
        for mode in _MODES:
            result = gamma_m2(product, mode)
            if result.value != expected and counterexample is None:
                counterexample = {
                    "h": _graph_payload(h),
                    "mode": mode.value,
                    "expected": expected,
                    "got": _value_payload(result.value),
                }
    return ClaimReport(
        claim="corollary-3.1",
        pool=f"{len(hs)} connected graphs of order >= 4",
        instances=len(hs),
        status="fail" if counterexample else "pass",
        counterexample=counterexample,
    )


def verify_lemma_3_4(g_pool, h_pool, samples_per_corona: int = 100, seed: int = 0) -> ClaimReport:
    """Dominating sets of a corona restrict to dominating sets of untouched copies.

    For each sampled dominating set T and each center a outside T, the
    part of T inside a's copy must dominate that copy (as a standalone
    graph via slice_copy).  Centers inside T are skipped, per the claim's
    precondition, and tallied.
    """
    pairs = _admissible_corona_pairs(g_pool, h_pool, order_cap=10**9)
    tally = {"centers_checked": 0, "centers_skipped_in_T": 0}
    counterexample = None
    instances = 0
    for g, h in pairs:
        product, layout = corona(g, h)
        slices = [slice_copy(layout, a, product) for a in range(len(layout.centers))]
        for t in sample_dominating_sets(product, samples_per_corona, seed):
            instances += 1
            for a, (copy_graph, translation) in enumerate(slices):
                if t >> layout.centers[a] & 1:
                    tally["centers_skipped_in_T"] += 1
                    continue
                tally["centers_checked"] += 1
                s_a = translation.mask_to_copy(t & layout.copy_mask(a))
                if not is_dominating(copy_graph, s_a) and counterexample is None:
                    counterexample = {
                        "g": _graph_payload(g),
                        "h": _graph_payload(h),
                        "T": vertex_list(t),
                        "center": a,
                        "copy_set": vertex_list(s_a),
                        "expected": "dominating",
                        "got": "not-dominating",
                    }
    return ClaimReport(
        claim="lemma-3.4",
        pool=f"{len(pairs)} coronas of connected factors, {samples_per_corona} samples each",
        instances=instances,
        status="fail" if counterexample else "pass",
        counterexample=counterexample,
        clause_tally=tally,
        seed=seed,
    )


def _covers_copy(product: Graph, unit: VertexSet, copy_mask: VertexSet, members: VertexSet) -> bool:
    cover = 0
    for w in bits(members):
        cover |= (product.adj[w] & unit) | 1 << w
    return copy_mask & ~cover == 0


def _lemma_3_5_clause(
    product: Graph, layout: CoronaLayout, a: int, t_a: VertexSet, u: int
) -> str | None:
    """Which of the three per-member clauses holds, or None.

    All sets live in the center-plus-copy slice; domination means the
    copy's vertices are covered within that slice.
    """
    center = layout.centers[a]
    copy_mask = layout.copy_mask(a)
    unit = layout.unit_mask(a)
    base = t_a & ~(1 << center | 1 << u)
    if _covers_copy(product, unit, copy_mask, base):
        return "i"
    center_swaps = product.adj[center] & copy_mask & ~t_a
    member_swaps = product.adj[u] & unit & ~t_a
    for x_a in bits(center_swaps):
        for x_u in bits(member_swaps):
            if _covers_copy(product, unit, copy_mask, base | 1 << x_a | 1 << x_u):
                return "ii"
    for x_u in bits(member_swaps):
        if _covers_copy(product, unit, copy_mask, base | 1 << x_u):
            return "iii"
    return None


def verify_lemma_3_5(
    g_pool,
    h_pool,
    samples_per_corona: int = 50,
    seed: int = 0,
    mode: ReplacementMode | None = None,
) -> ClaimReport:
    """2-movable sets of a corona satisfy the per-copy move disjunction.

    The sets checked are the solver's witness plus sampled dominating
    sets that certify as 2-movable, per replacement mode (both modes
    when ``mode`` is None).  For every center a and every member u of
    the set's part inside a's copy, one of the three clauses must hold:
    the slice minus {a, u} dominates the copy, or it does after adding
    outside-slice-set neighbors of both a and u, or of u alone.  The
    tally records which clause fired first, vacuous centers, and the
    smallest certified-sample count any corona achieved.
    """
    modes = _MODES if mode is None else (mode,)
    pairs = _admissible_corona_pairs(g_pool, h_pool, SOLVER_MAX_ORDER)
    tally = {
        "clause_i": 0,
        "clause_ii": 0,
        "clause_iii": 0,
        "vacuous_centers": 0,
        "witnesses": 0,
        "certified_samples": 0,
    }
    min_certified = None
    counterexample = None
    instances = 0
    draw_cap = max(64, 50 * samples_per_corona)
    for g, h in pairs:
        product, layout = corona(g, h)
        stream = sample_dominating_sets(product, draw_cap, seed)
        for m in modes:
            to_check: list[VertexSet] = []
            witness = gamma_m2(product, m).witness
            if witness is not None:
                to_check.append(witness)
                tally["witnesses"] += 1
            certified = 0
            seen = set(to_check)
            for t in stream:
                if certified >= samples_per_corona:
                    break
                if is_2movable_dominating(product, t, m):
                    certified += 1
                    if t not in seen:
                        seen.add(t)
                        to_check.append(t)
            tally["certified_samples"] += certified
            if samples_per_corona > 0:
                min_certified = certified if min_certified is None else min(min_certified, certified)
            for t in to_check:
                instances += 1
                for a in range(len(layout.centers)):
                    s_a = t & layout.copy_mask(a)
                    if s_a == 0:
                        tally["vacuous_centers"] += 1
                        continue
                    t_a = t & layout.unit_mask(a)
                    for u in bits(s_a):
                        clause = _lemma_3_5_clause(product, layout, a, t_a, u)
                        if clause is None:
                            if counterexample is None:
                                counterexample = {
                                    "g": _graph_payload(g),
                                    "h": _graph_payload(h),
                                    "T": vertex_list(t),
                                    "mode": m.value,
                                    "center": a,
                                    "member": u,
                                    "expected": "one of clauses i/ii/iii",
                                    "got": "none hold",
                                }
                        else:
                            tally[f"clause_{clause}"] += 1
    if min_certified is not None:
        tally["min_certified_per_corona"] = min_certified
    return ClaimReport(
        claim="lemma-3.5",
        pool=(
            f"{len(pairs)} coronas of connected factors, solver witness plus up to "
            f"{samples_per_corona} certified samples each, "
            f"modes={'both' if mode is None else mode.value}"
        ),
        instances=instances,
        status="fail" if counterexample else "pass",
        counterexample=counterexample,
        clause_tally=tally,
        seed=seed,
    )


@dataclass(frozen=True)
class BudgetConfig:
    """Pool and sampling budgets for a full validation run."""

    max_order: int = 5
    samples: int = 100
    movable_samples: int = 50
    seed: int = 0


def _default_enumerated_pool(budget: BudgetConfig) -> list[Graph]:
    top = min(budget.max_order, 6)
    return [g for n in range(4, top + 1) for g in enumerate_connected_graphs(n)]


def _capped(pool: list[Graph], budget: BudgetConfig) -> list[Graph]:
    return [g for g in pool if g.n <= budget.max_order]


def default_pools(budget: BudgetConfig) -> dict:
    """The curated default instance pools for run_all, order-capped by budget."""
    return {
        "enumerated": _default_enumerated_pool(budget),
        "join": _capped([complete(2), path(3), cycle(3), path(4), cycle(4)], budget),
        "corona_g": _capped([complete(2), path(3), cycle(3)], budget),
        "corona_h": _capped([complete(1), complete(2), path(3), complete(3)], budget),
        "corollary_h": _capped([path(4), cycle(4), path(5), cycle(5)], budget),
    }


def run_all(budget: BudgetConfig | None = None, claims=None) -> list[ClaimReport]:
    """Validate claims on their default pools, one report per claim.

    ``claims`` selects a subset by id; None runs all seven, always in
    canonical order.
    """
    budget = budget or BudgetConfig()
    if claims is not None:
        unknown = sorted(set(claims) - set(CLAIM_IDS))
        if unknown:
            raise ValueError(f"unknown claim ids: {', '.join(unknown)}")
    selected = CLAIM_IDS if claims is None else tuple(c for c in CLAIM_IDS if c in set(claims))
    pools = default_pools(budget)
    runners = {
        "remark-3.1": lambda: verify_remark_3_1(pools["enumerated"]),
        "theorem-3.2": lambda: verify_theorem_3_2(pools["enumerated"]),
        "theorem-3.3": lambda: verify_theorem_3_3(pools["join"], pools["join"]),
        "theorem-3.6": lambda: verify_theorem_3_6(pools["corona_g"], pools["corona_h"]),
        "corollary-3.1": lambda: verify_corollary_3_1(pools["corollary_h"]),
        "lemma-3.4": lambda: verify_lemma_3_4(
            pools["corona_g"], pools["corona_h"], budget.samples, budget.seed
        ),
        "lemma-3.5": lambda: verify_lemma_3_5(
            pools["corona_g"], pools["corona_h"], budget.movable_samples, budget.seed
        ),
    }
    return [runners[c]() for c in selected]
