"""Labeled simple graphs, walk/cycle enumeration, chords and clique sums.

Vertices are ``0..n-1``.  Edges keep the index they were created with for
the lifetime of the graph; edge ``i`` corresponds to the polynomial
variable ``x_{i+1}`` everywhere else in the package, so edge order is part
of a graph's identity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .errors import (
    BadParametersError,
    CycleBudgetExceededError,
    DuplicateEdgeError,
    GlueElementMissingError,
    LoopEdgeError,
    NotAWalkError,
    VertexOutOfRangeError,
    WalkBudgetExceededError,
)

DEFAULT_CYCLE_CAP = 10**6
DEFAULT_WALK_CAP = 10**6


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with stable edge indexing.

    ``edges[i]`` is the normalized pair ``(u, v)`` with ``u < v``.  The
    instance is immutable; derived structures are cached on first use.
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    def edge_between(self, u: int, v: int) -> Optional[int]:
        return self.edge_index.get((u, v) if u < v else (v, u))

    def has_edge(self, u: int, v: int) -> bool:
        return self.edge_between(u, v) is not None

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Validate and build a :class:`Graph`.

    Pairs may be given as any 2-element iterables; they are normalized to
    ``(min, max)`` but keep their input order as the edge index.
    """
    normalized: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for pair in edges:
        u, v = tuple(pair)
        if u == v:
            raise LoopEdgeError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRangeError(f"edge {{{u},{v}}} outside 0..{n - 1}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise DuplicateEdgeError(f"edge {{{e[0]},{e[1]}}} repeated")
        seen.add(e)
        normalized.append(e)
    return Graph(n, tuple(normalized))


@dataclass(frozen=True)
class Walk:
    """A walk given by its vertex sequence; edges are derived.

    For closed walks ``vertices[0] == vertices[-1]`` and the length is the
    number of edges traversed (with multiplicity).
    """

    vertices: tuple[int, ...]
    edge_indices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.edge_indices)

    @property
    def is_closed(self) -> bool:
        return len(self.vertices) >= 2 and self.vertices[0] == self.vertices[-1]

    @property
    def is_even(self) -> bool:
        return self.length % 2 == 0


def walk_from_vertices(g: Graph, vertices: Sequence[int]) -> Walk:
    """Build a walk, checking every consecutive pair is an edge of ``g``."""
    vs = tuple(vertices)
    if len(vs) < 2:
        raise NotAWalkError("a walk needs at least one edge")
    idxs = []
    for a, b in zip(vs, vs[1:]):
        e = g.edge_between(a, b)
        if e is None:
            raise NotAWalkError(f"{{{a},{b}}} is not an edge")
        idxs.append(e)
    return Walk(vs, tuple(idxs))


def canonical_cycle_form(vertices: Sequence[int]) -> tuple[int, ...]:
    """Rotation/reflection-minimal open vertex sequence of a cycle.

    ``vertices`` may be given open ``(v0..vk-1)`` or closed; the result is
    the lexicographically smallest open sequence over all rotations of both
    orientations, so it starts at the minimal vertex.
    """
    seq = list(vertices)
    if len(seq) > 1 and seq[0] == seq[-1]:
        seq = seq[:-1]
    k = len(seq)
    best = None
    for start in range(k):
        for step in (1, -1):
            cand = tuple(seq[(start + step * i) % k] for i in range(k))
            if best is None or cand < best:
                best = cand
    assert best is not None
    return best


@dataclass(frozen=True)
class Cycle:
    """A cycle stored as a closed walk with distinct interior vertices."""

    vertices: tuple[int, ...]  # closed: v0..vk-1, v0
    edge_indices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.edge_indices)

    @cached_property
    def canonical(self) -> tuple[int, ...]:
        return canonical_cycle_form(self.vertices)

    def as_walk(self) -> Walk:
        return Walk(self.vertices, self.edge_indices)


def _cycle_from_open(g: Graph, open_seq: Sequence[int]) -> Cycle:
    closed = tuple(open_seq) + (open_seq[0],)
    idxs = tuple(g.edge_between(a, b) for a, b in zip(closed, closed[1:]))
    assert all(i is not None for i in idxs)
    return Cycle(closed, idxs)  # type: ignore[arg-type]


def enumerate_cycles(
    g: Graph, even_only: bool = False, max_cycles: int = DEFAULT_CYCLE_CAP
) -> tuple[Cycle, ...]:
    """All cycles of ``g``, each exactly once, sorted by (length, canonical).

    Cycles are anchored at their minimal vertex during the search and the
    two orientations are separated by requiring the second vertex to be
    smaller than the last, so no dedup pass is needed.
    """
    found: list[Cycle] = []
    adj = g.adjacency

    def extend(start: int, path: list[int], on_path: set[int]) -> None:
        v = path[-1]
        for w in adj[v]:
            if w == start and len(path) >= 3 and path[1] < path[-1]:
                if not even_only or len(path) % 2 == 0:
                    found.append(_cycle_from_open(g, path))
                    if len(found) > max_cycles:
                        raise CycleBudgetExceededError(
                            f"more than {max_cycles} cycles", partial=len(found)
                        )
            if w > start and w not in on_path:
                path.append(w)
                on_path.add(w)
                extend(start, path, on_path)
                on_path.remove(w)
                path.pop()

    for s in range(g.n):
        extend(s, [s], {s})
    found.sort(key=lambda c: (c.length, c.canonical))
    return tuple(found)


def cycle_chords(g: Graph, cycle: Cycle) -> tuple[int, ...]:
    """Edge indices of ``g`` joining two non-consecutive cycle vertices."""
    verts = set(cycle.vertices)
    own = set(cycle.edge_indices)
    out = []
    for i, (u, v) in enumerate(g.edges):
        if i not in own and u in verts and v in verts:
            out.append(i)
    return tuple(out)


def enumerate_chordless_cycles(
    g: Graph, max_cycles: int = DEFAULT_CYCLE_CAP
) -> tuple[Cycle, ...]:
    """Exactly the cycles of ``g`` that have no chord in ``g``."""
    return tuple(
        c for c in enumerate_cycles(g, max_cycles=max_cycles) if not cycle_chords(g, c)
    )


def is_chordless_graph(g: Graph, max_cycles: int = DEFAULT_CYCLE_CAP) -> bool:
    """True iff every cycle of ``g`` is chordless."""
    cycles = enumerate_cycles(g, max_cycles=max_cycles)
    return all(not cycle_chords(g, c) for c in cycles)


def is_bipartite(g: Graph) -> Optional[tuple[frozenset[int], frozenset[int]]]:
    """Two-coloring of ``g`` if one exists.

    Deterministic: the lowest-index vertex of each connected component goes
    to side A.
    """
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for w in g.adjacency[v]:
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return None
    side_a = frozenset(v for v in range(g.n) if color[v] == 0)
    side_b = frozenset(v for v in range(g.n) if color[v] == 1)
    return side_a, side_b


def connected_components(g: Graph) -> tuple[frozenset[int], ...]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            v = stack.pop()
            for w in g.adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comps.append(frozenset(comp))
    return tuple(comps)


def biconnected_blocks(g: Graph) -> tuple[tuple[frozenset[int], ...], tuple[int, ...]]:
    """Blocks (as edge-index sets) and cut vertices of ``g``.

    Iterative Hopcroft-Tarjan.  Every edge lands in exactly one block;
    blocks are sorted by their smallest contained edge index.
    """
    disc = [-1] * g.n
    low = [0] * g.n
    blocks: list[frozenset[int]] = []
    cuts: set[int] = set()
    edge_stack: list[int] = []
    timer = 0

    for root in range(g.n):
        if disc[root] != -1:
            continue
        # frames: (vertex, parent edge index, iterator position)
        stack: list[list[int]] = [[root, -1, 0]]
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        while stack:
            frame = stack[-1]
            v, parent_edge, it = frame
            nbrs = g.adjacency[v]
            if it < len(nbrs):
                frame[2] += 1
                w = nbrs[it]
                e = g.edge_between(v, w)
                assert e is not None
                if e == parent_edge:
                    continue
                if disc[w] == -1:
                    edge_stack.append(e)
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append([w, e, 0])
                elif disc[w] < disc[v]:
                    edge_stack.append(e)
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if not stack:
                    continue
                u = stack[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    # u separates v's subtree: pop one block
                    parent_e = frame[1]
                    block = []
                    while edge_stack:
                        top = edge_stack.pop()
                        block.append(top)
                        if top == parent_e:
                            break
                    blocks.append(frozenset(block))
                    if len(stack) == 1:
                        root_children += 1
                    else:
                        cuts.add(u)
        if root_children > 1:
            cuts.add(root)
    blocks.sort(key=min)
    return tuple(blocks), tuple(sorted(cuts))


# --- chord classification on even closed walks ----------------------------

EVEN = "even"
ODD = "odd"


@dataclass(frozen=True)
class ChordReport:
    """Classification of one chord of an even closed walk.

    ``positions`` lists every walk-position pair ``(i, j)``, ``i < j``, at
    which the chord's endpoints occur (a walk may repeat vertices).
    ``parity`` follows the convention that a chord at positions ``(i, j)``
    is odd when ``j - i`` is even; it is only meaningful when the chord's
    endpoints lie in a common block of the walk subgraph
    (``same_block``), and is reported as "even" whenever any position pair
    is even.
    """

    chord: int
    endpoints: tuple[int, int]
    positions: tuple[tuple[int, int], ...]
    parity: str
    same_block: bool
    crosses_with: tuple[int, ...] = field(default=())
    f4_partners: tuple[int, ...] = field(default=())


def _walk_blocks_vertex_sets(g: Graph, w: Walk) -> tuple[frozenset[int], ...]:
    # blocks of the walk subgraph (V(w), E(w)), as vertex sets
    verts = sorted(set(w.vertices))
    vmap = {v: i for i, v in enumerate(verts)}
    sub_edges = sorted(set(w.edge_indices))
    sub = Graph(
        len(verts),
        tuple((vmap[g.edges[e][0]], vmap[g.edges[e][1]]) for e in sub_edges),
    )
    blocks, _ = biconnected_blocks(sub)
    out = []
    for block in blocks:
        vs: set[int] = set()
        for e in block:
            a, b = sub.edges[e]
            vs.add(verts[a])
            vs.add(verts[b])
        out.append(frozenset(vs))
    return tuple(out)


def _odd_position_pairs(report: ChordReport) -> tuple[tuple[int, int], ...]:
    return tuple(p for p in report.positions if (p[1] - p[0]) % 2 == 0)


def _cross_effectively(p: tuple[int, int], q: tuple[int, int]) -> bool:
    i, j = p
    i2, j2 = q
    if (i2 - i) % 2 == 0:
        return False
    return (i < i2 < j < j2) or (i2 < i < j2 < j)


def _forms_f4(g: Graph, w: Walk, e1: int, e2: int) -> bool:
    # a 4-cycle made of chords e1, e2 plus two walk edges f_i, f_j whose
    # 1-based traversal indices have the same parity
    ell = w.length
    for i in range(ell):
        for j in range(i + 1, ell):
            if (i - j) % 2 != 0:
                continue
            quad = {w.edge_indices[i], w.edge_indices[j], e1, e2}
            if len(quad) != 4:
                continue
            verts: dict[int, int] = {}
            for e in quad:
                for v in g.edges[e]:
                    verts[v] = verts.get(v, 0) + 1
            if len(verts) == 4 and all(c == 2 for c in verts.values()):
                # 4 edges, 4 vertices, all degree 2: a 4-cycle
                return True
    return False


def classify_chords(w: Walk, g: Graph) -> tuple[ChordReport, ...]:
    """One report per chord of the even closed walk ``w`` in ``g``.

    A chord is an edge of ``g`` joining two walk vertices that is not an
    edge of the walk.  Parity, effective crossings and 4-cycle partners
    follow the conventions documented on :class:`ChordReport`.
    """
    if not w.is_closed or not w.is_even:
        raise NotAWalkError("chord classification needs an even closed walk")
    for a, b in zip(w.vertices, w.vertices[1:]):
        if not g.has_edge(a, b):
            raise NotAWalkError(f"{{{a},{b}}} is not an edge of the graph")

    walk_verts = set(w.vertices)
    walk_edges = set(w.edge_indices)
    open_seq = w.vertices[:-1]
    occ: dict[int, list[int]] = {}
    for pos, v in enumerate(open_seq):
        occ.setdefault(v, []).append(pos)
    blocks = _walk_blocks_vertex_sets(g, w)

    reports: list[ChordReport] = []
    for e, (u, v) in enumerate(g.edges):
        if e in walk_edges or u not in walk_verts or v not in walk_verts:
            continue
        pairs = []
        for i in occ[u]:
            for j in occ[v]:
                pairs.append((i, j) if i < j else (j, i))
        pairs.sort()
        same_block = any(u in b and v in b for b in blocks)
        parity = (
            EVEN if any((j - i) % 2 == 1 for i, j in pairs) else ODD
        )
        reports.append(
            ChordReport(
                chord=e,
                endpoints=pairs[0],
                positions=tuple(pairs),
                parity=parity,
                same_block=same_block,
            )
        )

    # effective crossings among odd chords
    odd_reports = [r for r in reports if r.parity == ODD and r.same_block]
    crosses: dict[int, list[int]] = {r.chord: [] for r in odd_reports}
    f4s: dict[int, list[int]] = {r.chord: [] for r in odd_reports}
    for a in range(len(odd_reports)):
        for b in range(a + 1, len(odd_reports)):
            ra, rb = odd_reports[a], odd_reports[b]
            if any(
                _cross_effectively(p, q) or _cross_effectively(q, p)
                for p in _odd_position_pairs(ra)
                for q in _odd_position_pairs(rb)
            ):
                crosses[ra.chord].append(rb.chord)
                crosses[rb.chord].append(ra.chord)
                if _forms_f4(g, w, ra.chord, rb.chord):
                    f4s[ra.chord].append(rb.chord)
                    f4s[rb.chord].append(ra.chord)

    out = []
    for r in reports:
        if r.chord in crosses:
            r = ChordReport(
                chord=r.chord,
                endpoints=r.endpoints,
                positions=r.positions,
                parity=r.parity,
                same_block=r.same_block,
                crosses_with=tuple(sorted(crosses[r.chord])),
                f4_partners=tuple(sorted(f4s[r.chord])),
            )
        out.append(r)
    return tuple(out)


# --- constructors ---------------------------------------------------------

def theta_graph(r: int, k: int) -> Graph:
    """Two base vertices joined by ``r`` internally disjoint paths of length ``k``.

    Vertices: 0 and 1 are the base points, then the interior vertices path
    by path.  ``2 + r*(k-1)`` vertices and ``r*k`` edges; every cycle has
    length ``2k``.
    """
    if r < 2 or k < 2:
        raise BadParametersError("theta graph needs r >= 2 and k >= 2")
    n = 2 + r * (k - 1)
    edges = []
    for i in range(r):
        inner = [2 + i * (k - 1) + j for j in range(k - 1)]
        chain = [0] + inner + [1]
        edges.extend((a, b) for a, b in zip(chain, chain[1:]))
    return build_graph(n, edges)


@dataclass(frozen=True)
class VertexGlue:
    v1: int
    v2: int


@dataclass(frozen=True)
class EdgeGlue:
    """Identify edge ``e1`` of the first graph with ``e2`` of the second.

    With ``reverse=False`` the normalized endpoints are identified in
    stored order (min with min); ``reverse=True`` swaps the orientation.
    """

    e1: int
    e2: int
    reverse: bool = False


@dataclass(frozen=True)
class CliqueSum:
    graph: Graph
    vertex_map2: tuple[int, ...]  # g2 vertex -> new vertex
    edge_map2: tuple[int, ...]  # g2 edge -> new edge index


def clique_sum(g1: Graph, g2: Graph, glue: VertexGlue | EdgeGlue) -> CliqueSum:
    """1- or 2-clique sum of two graphs; ``g1`` keeps its labels.

    Unglued ``g2`` vertices are appended after ``g1``'s, unglued ``g2``
    edges after ``g1``'s, both in their original order; the returned maps
    record where each ``g2`` element went.
    """
    if isinstance(glue, VertexGlue):
        if not (0 <= glue.v1 < g1.n and 0 <= glue.v2 < g2.n):
            raise GlueElementMissingError("glue vertex out of range")
        ident = {glue.v2: glue.v1}
        skip_edges: set[int] = set()
    else:
        if not (0 <= glue.e1 < g1.m and 0 <= glue.e2 < g2.m):
            raise GlueElementMissingError("glue edge out of range")
        a1, b1 = g1.edges[glue.e1]
        a2, b2 = g2.edges[glue.e2]
        ident = {a2: b1, b2: a1} if glue.reverse else {a2: a1, b2: b1}
        skip_edges = {glue.e2}

    vmap = [-1] * g2.n
    nxt = g1.n
    for v in range(g2.n):
        if v in ident:
            vmap[v] = ident[v]
        else:
            vmap[v] = nxt
            nxt += 1
    new_edges = list(g1.edges)
    emap = [-1] * g2.m
    for e, (u, v) in enumerate(g2.edges):
        if e in skip_edges:
            emap[e] = glue.e1  # type: ignore[union-attr]
            continue
        emap[e] = len(new_edges)
        new_edges.append((vmap[u], vmap[v]))
    graph = build_graph(nxt, new_edges)
    return CliqueSum(graph, tuple(vmap), tuple(emap))


@dataclass(frozen=True)
class InducedSubgraph:
    graph: Graph
    vertex_map: dict[int, int]  # old -> new
    edge_map: dict[int, int]  # old -> new


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> InducedSubgraph:
    """Subgraph on ``vertices`` with exactly the edges inside that set.

    New vertices are numbered by increasing old label; edges keep their
    relative order.
    """
    vs = sorted(set(vertices))
    for v in vs:
        if not (0 <= v < g.n):
            raise VertexOutOfRangeError(f"vertex {v} outside 0..{g.n - 1}")
    vmap = {v: i for i, v in enumerate(vs)}
    inside = set(vs)
    emap = {}
    new_edges = []
    for e, (u, v) in enumerate(g.edges):
        if u in inside and v in inside:
            emap[e] = len(new_edges)
            new_edges.append((vmap[u], vmap[v]))
    return InducedSubgraph(build_graph(len(vs), new_edges), vmap, emap)


def enumerate_even_closed_walks(
    g: Graph, max_len: int, max_walks: int = DEFAULT_WALK_CAP
) -> tuple[Walk, ...]:
    """Even closed walks of length 4..max_len, one per equivalence class.

    Two walks are equivalent when one is a rotation, reflection or
    starting-point shift of the other.  Walks never traverse the same edge
    twice in a row (a spur only rescales a shorter walk's binomial), which
    in particular keeps doubled cycles but drops degenerate bounces.
    Walks are anchored at their minimal vertex during the search;
    canonical forms handle the rest.
    """
    if max_len % 2 != 0 or max_len < 4:
        raise BadParametersError("max_len must be even and >= 4")
    seen: set[tuple[int, ...]] = set()
    out: list[Walk] = []
    adj = g.adjacency

    def canon(open_seq: tuple[int, ...]) -> tuple[int, ...]:
        k = len(open_seq)
        best = None
        for s in range(k):
            for step in (1, -1):
                cand = tuple(open_seq[(s + step * i) % k] for i in range(k))
                if best is None or cand < best:
                    best = cand
        assert best is not None
        return best

    def extend(anchor: int, path: list[int]) -> None:
        v = path[-1]
        prev = path[-2] if len(path) >= 2 else None
        for w in adj[v]:
            if w < anchor or w == prev:
                continue
            if (
                w == anchor
                and len(path) >= 4
                and len(path) % 2 == 0
                and path[1] != path[-1]  # no reversal across the wrap point
            ):
                key = canon(tuple(path))
                if key not in seen:
                    seen.add(key)
                    if len(out) >= max_walks:
                        raise WalkBudgetExceededError(
                            f"more than {max_walks} walks", partial=len(out)
                        )
                    out.append(walk_from_vertices(g, path + [anchor]))
            if len(path) < max_len:
                path.append(w)
                extend(anchor, path)
                path.pop()

    for s in range(g.n):
        extend(s, [s])
    out.sort(key=lambda w: (w.length, w.vertices))
    return tuple(out)
