"""Top-level decision procedures and the per-graph classification report.

The expensive fan-dependent answers (minimum and maximum reduced-basis
size and the four flags built on them) run under explicit budgets and are
skipped with a marker instead of failing the whole report.  The witness
search for "some reduced basis is minimal" tries cheap candidate orders
first (including orders read off clique-sum decompositions of bipartite
graphs, which are provably sufficient for uniform-cycle-length and ring
graphs) and only then walks the fan.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

from .binomials import GroebnerBasis, binomial_canonical, buchberger
from .errors import BudgetExceededError, NotBipartiteError
from .fan import FanResult, enumerate_reduced_gbs, universal_gb
from .formats import encode_graph6
from .graphs import (
    Graph,
    biconnected_blocks,
    enumerate_chordless_cycles,
    is_bipartite,
)
from .ideals import GraphIdeal, toric_ideal
from .lattice import MinimalGenerators, is_minimal_binomial, minimal_generators
from .orders import MonomialOrder, degrevlex, lex, stacked_order, weight_order


@dataclass(frozen=True)
class Budget:
    """Caps for the enumerative stages; defaults handle desk-scale graphs."""

    max_cycles: int = 10**6
    max_fiber: int = 10**5
    max_cones: int = 10**5
    mg_samples: int = 200
    seed: int = 0


DEFAULT_BUDGET = Budget()


# --- clique-sum decomposition trees ----------------------------------------

@dataclass(frozen=True)
class ThetaLeaf:
    """A theta subgraph: ``r`` internally disjoint paths of length ``k``
    between the two base points (``r = 2`` is a plain cycle of length 2k)."""

    base_points: tuple[int, int]
    r: int
    k: int
    vertices: tuple[int, ...]
    edges: tuple[int, ...]


@dataclass(frozen=True)
class CycleLeaf:
    length: int
    vertices: tuple[int, ...]
    edges: tuple[int, ...]


@dataclass(frozen=True)
class EdgeLeaf:
    """A trivial block: one bridge edge."""

    edges: tuple[int, ...]


@dataclass(frozen=True)
class SeamNode:
    """A 2-clique sum along ``seam_edge``; the seam belongs to every child."""

    seam: tuple[int, int]
    seam_edge: int
    children: tuple["BlockNode", ...]


BlockNode = Union[ThetaLeaf, CycleLeaf, EdgeLeaf, SeamNode]


@dataclass(frozen=True)
class DecompositionTree:
    """Per-block 2-clique-sum trees, joined at cut vertices (1-clique sums)."""

    blocks: tuple[BlockNode, ...]
    cut_vertices: tuple[int, ...]

    def leaves(self) -> tuple[BlockNode, ...]:
        out: list[BlockNode] = []

        def walk(node: BlockNode) -> None:
            if isinstance(node, SeamNode):
                for child in node.children:
                    walk(child)
            else:
                out.append(node)

        for b in self.blocks:
            walk(b)
        return tuple(out)

    def leaf_edge_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(leaf.edges) for leaf in self.leaves())


def _block_vertices(g: Graph, edges: Sequence[int]) -> tuple[int, ...]:
    vs: set[int] = set()
    for e in edges:
        vs.update(g.edges[e])
    return tuple(sorted(vs))


def _theta_leaf(g: Graph, edges: frozenset[int]) -> Optional[ThetaLeaf]:
    """Recognize a theta shape on an edge subset of ``g`` (in original labels)."""
    verts = _block_vertices(g, sorted(edges))
    deg: dict[int, int] = {v: 0 for v in verts}
    nbrs: dict[int, list[int]] = {v: [] for v in verts}
    for e in edges:
        u, v = g.edges[e]
        deg[u] += 1
        deg[v] += 1
        nbrs[u].append(v)
        nbrs[v].append(u)
    if all(d == 2 for d in deg.values()):
        # a single cycle: theta with r = 2 when the length is even
        length = len(edges)
        if length % 2 != 0:
            return None
        # walk the cycle to find the vertex opposite the minimal one
        start = verts[0]
        seq = [start]
        prev = None
        while len(seq) < length:
            nxt = [w for w in nbrs[seq[-1]] if w != prev]
            prev = seq[-1]
            seq.append(nxt[0])
        if len(set(seq)) != length:
            return None
        k = length // 2
        return ThetaLeaf(
            (start, seq[k]), 2, k, tuple(sorted(seq)), tuple(sorted(edges))
        )
    bases = sorted(v for v, d in deg.items() if d > 2)
    if len(bases) != 2 or deg[bases[0]] != deg[bases[1]]:
        return None
    u0, u1 = bases
    if any(deg[v] != 2 for v in verts if v not in (u0, u1)):
        return None
    r = deg[u0]
    lengths = []
    seen_inner: set[int] = set()
    used_edges = 0
    for w in nbrs[u0]:
        length = 1
        prev, cur = u0, w
        inner = []
        while cur not in (u0, u1):
            inner.append(cur)
            nxt = [x for x in nbrs[cur] if x != prev]
            if len(nxt) != 1:
                return None
            prev, cur = cur, nxt[0]
            length += 1
        if cur != u1:
            return None
        if any(v in seen_inner for v in inner):
            return None
        seen_inner.update(inner)
        lengths.append(length)
        used_edges += length
    if len(set(lengths)) != 1 or used_edges != len(edges):
        return None
    k = lengths[0]
    if k < 2:
        return None
    return ThetaLeaf((u0, u1), r, k, tuple(verts), tuple(sorted(edges)))


def _cycle_leaf(g: Graph, edges: frozenset[int]) -> Optional[CycleLeaf]:
    verts = _block_vertices(g, sorted(edges))
    if len(verts) != len(edges):
        return None
    deg: dict[int, int] = {v: 0 for v in verts}
    for e in edges:
        u, v = g.edges[e]
        deg[u] += 1
        deg[v] += 1
    if any(d != 2 for d in deg.values()):
        return None
    # connected 2-regular with |V| = |E| is a single cycle
    return CycleLeaf(len(edges), tuple(verts), tuple(sorted(edges)))


def _split_components(
    g: Graph, edges: frozenset[int], u: int, v: int
) -> Optional[list[frozenset[int]]]:
    """Components of the block minus {u, v}, as edge sets including the seam
    candidates' side edges; ``None`` when removing {u, v} does not split."""
    verts = [x for x in _block_vertices(g, sorted(edges)) if x not in (u, v)]
    if not verts:
        return None
    comp: dict[int, int] = {}
    nbrs: dict[int, list[int]] = {x: [] for x in verts}
    for e in edges:
        a, b = g.edges[e]
        if a in nbrs and b in nbrs:
            nbrs[a].append(b)
            nbrs[b].append(a)
    cid = 0
    for s in verts:
        if s in comp:
            continue
        stack = [s]
        comp[s] = cid
        while stack:
            x = stack.pop()
            for y in nbrs[x]:
                if y not in comp:
                    comp[y] = cid
                    stack.append(y)
        cid += 1
    if cid < 2:
        return None
    buckets: list[set[int]] = [set() for _ in range(cid)]
    for e in edges:
        a, b = g.edges[e]
        owner = comp.get(a, comp.get(b))
        if owner is None:
            continue  # the seam edge itself
        buckets[owner].add(e)
    seam_edge = g.edge_between(u, v)
    assert seam_edge is not None and seam_edge in edges
    return [frozenset(b | {seam_edge}) for b in buckets]


def _decompose_block(
    g: Graph, edges: frozenset[int], leaf
) -> Optional[BlockNode]:
    """Recursive 2-clique-sum decomposition with backtracking over seams."""
    hit = leaf(g, edges)
    if hit is not None:
        return hit
    for e in sorted(edges):
        u, v = g.edges[e]
        parts = _split_components(g, edges, u, v)
        if parts is None:
            continue
        children = []
        for part in parts:
            child = _decompose_block(g, part, leaf)
            if child is None:
                break
            children.append(child)
        else:
            return SeamNode((u, v), e, tuple(children))
    return None


def _decompose(
    g: Graph, leaf, max_cycles: int
) -> Optional[DecompositionTree]:
    blocks, cuts = biconnected_blocks(g)
    out: list[BlockNode] = []
    for block in blocks:
        if len(block) == 1:
            out.append(EdgeLeaf(tuple(block)))
            continue
        node = _decompose_block(g, frozenset(block), leaf)
        if node is None:
            return None
        out.append(node)
    return DecompositionTree(tuple(out), cuts)


def theta_decompose(
    g: Graph, max_cycles: int = 10**6
) -> Optional[tuple[int, DecompositionTree]]:
    """Decompose into theta leaves when all chordless cycles share one
    length ``2k`` with ``k >= 3``; ``None`` otherwise (including the
    chordal-bipartite case ``k = 2``, which has no theta structure)."""
    chordless = enumerate_chordless_cycles(g, max_cycles=max_cycles)
    lengths = {c.length for c in chordless}
    if len(lengths) != 1:
        return None
    (length,) = lengths
    if length % 2 != 0 or length < 6:
        return None
    k = length // 2

    def leaf(gg: Graph, edges: frozenset[int]) -> Optional[ThetaLeaf]:
        t = _theta_leaf(gg, edges)
        return t if t is not None and t.k == k else None

    tree = _decompose(g, leaf, max_cycles)
    return None if tree is None else (k, tree)


def odd_cycle_decompose(
    g: Graph, max_cycles: int = 10**6
) -> Optional[tuple[int, DecompositionTree]]:
    """Decompose into odd-cycle leaves when all chordless cycles share one
    odd length ``2k - 1`` with ``k >= 3``."""
    chordless = enumerate_chordless_cycles(g, max_cycles=max_cycles)
    lengths = {c.length for c in chordless}
    if len(lengths) != 1:
        return None
    (length,) = lengths
    if length % 2 != 1 or length < 5:
        return None
    k = (length + 1) // 2

    def leaf(gg: Graph, edges: frozenset[int]) -> Optional[CycleLeaf]:
        c = _cycle_leaf(gg, edges)
        return c if c is not None and c.length == length else None

    tree = _decompose(g, leaf, max_cycles)
    return None if tree is None else (k, tree)


def is_ring_graph(
    g: Graph, max_cycles: int = 10**6
) -> tuple[bool, Optional[DecompositionTree]]:
    """True when every block is an iterated 2-clique sum of cycles."""
    tree = _decompose(g, _cycle_leaf, max_cycles)
    return (tree is not None), tree


def is_complete_intersection_bipartite(g: Graph, max_cycles: int = 10**6) -> bool:
    """For bipartite graphs, complete intersection equals ring graph."""
    if is_bipartite(g) is None:
        raise NotBipartiteError("complete-intersection test is bipartite-only")
    flag, _ = is_ring_graph(g, max_cycles)
    return flag


# --- witness orders from decompositions -------------------------------------

def _peel_variable_blocks(tree: DecompositionTree, m: int) -> Optional[list[list[int]]]:
    """Leaf-by-leaf variable blocks realizing iterated clique-sum product
    orders.

    Each peeled leaf must share exactly one seam edge with the not yet
    peeled leaves, so it is split off by a single 2-clique sum; the leaf
    incidence structure of the decomposition is a hypertree, hence such a
    leaf always exists.  The seam stays with the remainder.
    """
    leaves = tree.leaves()
    if not leaves:
        return None
    edge_sets = [set(leaf.edges) for leaf in leaves]
    unpeeled = set(range(len(leaves)))
    blocks: list[list[int]] = []
    while unpeeled:
        pick = -1
        pick_shared: set[int] = set()
        for i in sorted(unpeeled):
            shared: set[int] = set()
            for j in unpeeled:
                if j != i:
                    shared |= edge_sets[i] & edge_sets[j]
            if len(shared) <= 1:
                pick, pick_shared = i, shared
                break
        if pick < 0:
            return None  # not peelable; defensive, cannot happen for our trees
        own = sorted(edge_sets[pick] - pick_shared)
        if own:
            blocks.append(own)
        unpeeled.remove(pick)
    covered = {e for b in blocks for e in b}
    if covered != set(range(m)):
        return None
    return blocks


def decomposition_witness_order(
    tree: DecompositionTree, m: int
) -> Optional[MonomialOrder]:
    """Product order that makes clique-sum decompositions of bipartite
    graphs certify minimality of a reduced basis."""
    blocks = _peel_variable_blocks(tree, m)
    if blocks is None:
        return None
    return stacked_order(m, [(b, degrevlex(len(b))) for b in blocks])


# --- flag procedures --------------------------------------------------------

@dataclass
class MGResult:
    is_mg: bool
    mu: int
    witness_order: Optional[MonomialOrder] = None
    witness_basis: Optional[GroebnerBasis] = None
    fan_min_size: Optional[int] = None


def _candidate_orders(
    g: Graph, m: int, budget: Budget, extra: Sequence[MonomialOrder]
) -> list[MonomialOrder]:
    out: list[MonomialOrder] = [degrevlex(m)]
    out.extend(extra)
    if is_bipartite(g) is not None:
        got = theta_decompose(g, budget.max_cycles)
        if got is not None:
            order = decomposition_witness_order(got[1], m)
            if order is not None:
                out.append(order)
        ring, tree = is_ring_graph(g, budget.max_cycles)
        if ring and tree is not None:
            order = decomposition_witness_order(tree, m)
            if order is not None:
                out.append(order)
    rng = random.Random(budget.seed)
    for _ in range(budget.mg_samples):
        if rng.random() < 0.5:
            perm = list(range(m))
            rng.shuffle(perm)
            out.append(lex(m, perm))
        else:
            out.append(weight_order(tuple(rng.randint(1, 8 * m) for _ in range(m))))
    return out


def is_mg(
    g: Graph,
    budget: Budget = DEFAULT_BUDGET,
    extra_orders: Sequence[MonomialOrder] = (),
    ideal: Optional[GraphIdeal] = None,
    mingens: Optional[MinimalGenerators] = None,
) -> MGResult:
    """Does some reduced Groebner basis have exactly ``mu`` elements?

    Tries candidate witness orders first (any basis of size ``mu`` is a
    minimal generating set by graded Nakayama), then falls back to a fan
    walk that stops early on success and is exhaustive on failure.
    """
    gi = ideal if ideal is not None else toric_ideal(g)
    mg = (
        mingens
        if mingens is not None
        else minimal_generators(
            gi.generators, gi.A, max_fiber=budget.max_fiber, groebner=gi.groebner()
        )
    )
    mu = mg.mu
    if mu == 0:
        return MGResult(True, 0, degrevlex(max(g.m, 1)), GroebnerBasis((), None))
    for order in _candidate_orders(g, gi.m, budget, extra_orders):
        gb = buchberger(gi.generators, order)
        if len(gb) == mu:
            return MGResult(True, mu, order, gb)
    result = enumerate_reduced_gbs(
        gi.generators, max_cones=budget.max_cones, early_stop_size=mu
    )
    if not result.complete:
        gb = min(result.bases, key=len)
        return MGResult(True, mu, gb.order, gb)
    lo, _ = result.size_range()
    return MGResult(False, mu, fan_min_size=lo)


def is_umg(
    g: Graph,
    budget: Budget = DEFAULT_BUDGET,
    ideal: Optional[GraphIdeal] = None,
) -> bool:
    """Every reduced basis has exactly ``mu`` elements (full fan check)."""
    gi = ideal if ideal is not None else toric_ideal(g)
    mg = minimal_generators(
        gi.generators, gi.A, max_fiber=budget.max_fiber, groebner=gi.groebner()
    )
    if mg.mu == 0:
        return True
    lo, hi = enumerate_reduced_gbs(gi.generators, max_cones=budget.max_cones).size_range()
    return lo == hi == mg.mu


def is_generalized_robust(
    g: Graph,
    budget: Budget = DEFAULT_BUDGET,
    ideal: Optional[GraphIdeal] = None,
) -> bool:
    """Universal Groebner basis consists of minimal binomials only."""
    gi = ideal if ideal is not None else toric_ideal(g)
    if not gi.generators:
        return True
    uni = universal_gb(gi.generators, max_cones=budget.max_cones)
    gb = gi.groebner()
    return all(
        is_minimal_binomial(b, gi.generators, gi.A, budget.max_fiber, groebner=gb)
        for b in uni
    )


def is_robust(
    g: Graph,
    budget: Budget = DEFAULT_BUDGET,
    ideal: Optional[GraphIdeal] = None,
) -> bool:
    """The universal Groebner basis is itself a minimal generating set."""
    gi = ideal if ideal is not None else toric_ideal(g)
    if not gi.generators:
        return True
    uni = universal_gb(gi.generators, max_cones=budget.max_cones)
    mg = minimal_generators(
        gi.generators, gi.A, max_fiber=budget.max_fiber, groebner=gi.groebner()
    )
    return len(uni) == mg.mu


# --- the aggregated report ---------------------------------------------------

@dataclass
class ClassificationReport:
    graph_id: str
    n: int
    m: int
    bipartite: bool
    chordless_cycle_lengths: tuple[int, ...] = ()
    mu: Optional[int] = None
    gb_size_min: Optional[int] = None
    gb_size_max: Optional[int] = None
    is_mg: Optional[bool] = None
    is_umg: Optional[bool] = None
    is_robust: Optional[bool] = None
    is_gen_robust: Optional[bool] = None
    theta_k: Optional[int] = None
    theta_leaf_count: Optional[int] = None
    ring_graph: bool = False
    complete_intersection: Optional[bool] = None
    budget_exceeded: tuple[str, ...] = ()
    timings: dict[str, float] = field(default_factory=dict)

    def flags_key(self) -> str:
        def mark(v: Optional[bool]) -> str:
            return "?" if v is None else ("1" if v else "0")

        return (
            f"mg={mark(self.is_mg)} umg={mark(self.is_umg)} "
            f"robust={mark(self.is_robust)} genrobust={mark(self.is_gen_robust)}"
        )


def classify(g: Graph, budget: Budget = DEFAULT_BUDGET) -> ClassificationReport:
    """Fill every report field, skipping fan-dependent answers with a
    budget marker instead of raising."""
    report = ClassificationReport(
        graph_id=encode_graph6(g),
        n=g.n,
        m=g.m,
        bipartite=is_bipartite(g) is not None,
    )
    exceeded: list[str] = []

    t0 = time.perf_counter()
    try:
        chordless = enumerate_chordless_cycles(g, max_cycles=budget.max_cycles)
        report.chordless_cycle_lengths = tuple(sorted(c.length for c in chordless))
    except BudgetExceededError:
        exceeded.append("cycles")
    report.timings["cycles"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    gi = toric_ideal(g)
    mg = None
    try:
        mg = minimal_generators(
            gi.generators, gi.A, max_fiber=budget.max_fiber, groebner=gi.groebner()
        )
        report.mu = mg.mu
    except BudgetExceededError:
        exceeded.append("mu")
    report.timings["mu"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    fan: Optional[FanResult] = None
    if mg is not None:
        try:
            fan = enumerate_reduced_gbs(gi.generators, max_cones=budget.max_cones)
            lo, hi = fan.size_range()
            report.gb_size_min = lo
            report.gb_size_max = hi
            report.is_mg = lo == mg.mu
            report.is_umg = lo == hi == mg.mu
        except BudgetExceededError:
            exceeded.append("fan")
    report.timings["fan"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    if mg is not None and fan is not None:
        try:
            uni = set()
            for basis in fan.bases:
                uni.update(binomial_canonical(b) for b in basis.elements)
            report.is_robust = len(uni) == mg.mu
            gb = gi.groebner()
            report.is_gen_robust = all(
                is_minimal_binomial(b, gi.generators, gi.A, budget.max_fiber, groebner=gb)
                for b in uni
            )
        except BudgetExceededError:
            exceeded.append("universal")
    report.timings["universal"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    try:
        theta = theta_decompose(g, budget.max_cycles)
        if theta is not None:
            report.theta_k = theta[0]
            report.theta_leaf_count = len(theta[1].leaves())
        ring, _ = is_ring_graph(g, budget.max_cycles)
        report.ring_graph = ring
        if report.bipartite:
            report.complete_intersection = ring
    except BudgetExceededError:
        exceeded.append("decompose")
    report.timings["decompose"] = time.perf_counter() - t0

    report.budget_exceeded = tuple(exceeded)

    # internal consistency: robustness implications must hold when computed
    if report.is_robust and report.is_gen_robust is not None:
        assert report.is_gen_robust, "robust ideal must be generalized robust"
    if report.is_umg is not None and report.is_gen_robust is not None:
        assert report.is_umg == report.is_gen_robust, (
            "graph UMG flag must match generalized robustness"
        )
    if report.is_umg:
        assert report.is_mg, "UMG implies MG"
    return report
