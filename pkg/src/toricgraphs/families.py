"""Named graph constructors and small-graph enumeration.

The fixed fixtures here are the workhorses of the test suite and the
demo scripts; the enumeration and random constructors drive census jobs
and property tests.
"""

from __future__ import annotations

import random
from typing import Iterator

from .graphs import (
    EdgeGlue,
    Graph,
    VertexGlue,
    Walk,
    build_graph,
    clique_sum,
    theta_graph,
    walk_from_vertices,
)


def cycle_graph(k: int) -> Graph:
    """The cycle on ``k`` vertices with edges (0,1), (1,2), ..., (k-1,0)."""
    return build_graph(k, [(i, (i + 1) % k) for i in range(k)])


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with left vertices 0..a-1 and row-major edge order."""
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def eight_cycle_with_chord() -> Graph:
    """8-cycle 0..7 plus the chord {2,5}; has exactly three cycles.

    The three cycles have lengths 6, 4 and 8; the chord (edge index 8,
    variable x9) splits the 8-cycle so only the two short cycles are
    chordless.
    """
    edges = [(i, (i + 1) % 8) for i in range(8)]
    edges.append((2, 5))
    return build_graph(8, edges)


def six_cycle_with_chord() -> Graph:
    """6-cycle 0..5 plus the chord {0,3}: two 4-cycles glued on an edge."""
    edges = [(i, (i + 1) % 6) for i in range(6)]
    edges.append((0, 3))
    return build_graph(6, edges)


def cube_graph() -> Graph:
    """The 1-skeleton of the 3-cube.

    Vertices 0..3 are the top 4-cycle, 4..7 the bottom 4-cycle.  Edge
    order: top cycle x1..x4, verticals x5..x8, bottom cycle x9..x12,
    with vertical i joining top vertex i to bottom vertex 4+i.
    """
    edges = [(i, (i + 1) % 4) for i in range(4)]
    edges += [((i + 1) % 4, 4 + (i + 1) % 4) for i in range(4)]
    edges += [(4 + i, 4 + (i + 1) % 4) for i in range(4)]
    return build_graph(8, edges)


def cube_plus_edge() -> Graph:
    """The cube with one extra diagonal edge {0,6} (variable x13)."""
    g = cube_graph()
    return build_graph(8, list(g.edges) + [(0, 6)])


def chordal_non_mg_with_cubic() -> Graph:
    """Chordal biconnected non-bipartite graph, 7 vertices and 12 edges:
    a K4 with one extra degree-2 vertex hung on each triangle edge.

    Its toric ideal needs nine generators (eight quadrics and a cubic)
    while every reduced Groebner basis has at least ten elements, so the
    graph is not MG.  The edge order pins the ideal to
    ``x9x11 - x8x12, x1x11 - x2x12, x7x10 - x8x12, x6x10 - x5x12,
    x3x10 - x4x11, x1x8 - x2x9, x5x7 - x6x8, x4x7 - x3x9,
    x1x3x5 - x2x4x6``.
    """
    edges = [
        (2, 5), (0, 5), (0, 4), (1, 4), (1, 6), (2, 6),
        (0, 2), (0, 1), (1, 2), (1, 3), (0, 3), (2, 3),
    ]
    return build_graph(7, edges)


def chordal_non_mg_quadrics() -> Graph:
    """Chordal biconnected non-bipartite graph, 7 vertices and 12 edges:
    a K4 with three extra degree-2 vertices sharing the hub vertex.

    Its toric ideal is minimally generated by eight quadrics while every
    reduced Groebner basis has at least nine elements, so the graph is
    not MG.  The edge order pins the ideal to
    ``x9x10 - x2x11, x6x10 - x1x11, x1x9 - x3x12, x2x8 - x7x12,
    x6x7 - x3x8, x2x6 - x3x12, x3x5 - x4x9, x1x5 - x4x12``.
    """
    edges = [
        (0, 2), (0, 3), (0, 1), (0, 6), (3, 6), (1, 2),
        (0, 5), (2, 5), (1, 3), (0, 4), (1, 4), (2, 3),
    ]
    return build_graph(7, edges)


def walk_fixture_even_chord() -> tuple[Graph, Walk]:
    """A 10-step closed walk through a cut vertex whose one chord is even.

    The graph is a triangle hanging at vertex 0 of a 5-cycle-with-a-path;
    the walk doubles the bridge {0,3}, and the chord {4,7} sits at an odd
    position difference, making it an even chord.
    """
    edges = [
        (0, 1),  # x1
        (1, 2),  # x2
        (2, 0),  # x3
        (0, 3),  # x4
        (3, 4),  # x5
        (4, 5),  # x6
        (5, 6),  # x7
        (6, 7),  # x8
        (7, 3),  # x9
        (4, 7),  # x10 chord
    ]
    g = build_graph(8, edges)
    w = walk_from_vertices(g, [0, 1, 2, 0, 3, 4, 5, 6, 7, 3, 0])
    return g, w


def walk_fixture_crossing_no_f4() -> tuple[Graph, Walk]:
    """An 8-cycle with two odd chords that cross effectively but form no 4-cycle."""
    edges = [(i, (i + 1) % 8) for i in range(8)]  # x1..x8
    edges.append((0, 6))  # x9
    edges.append((3, 7))  # x10
    g = build_graph(8, edges)
    w = walk_from_vertices(g, list(range(8)) + [0])
    return g, w


def walk_fixture_f4() -> tuple[Graph, Walk]:
    """A 10-cycle with four odd chords; the single effectively crossing pair
    forms a 4-cycle with two same-parity walk edges."""
    edges = [(i, (i + 1) % 10) for i in range(10)]  # x1..x10
    edges.append((1, 7))  # x11
    edges.append((3, 9))  # x12
    edges.append((3, 5))  # x13
    edges.append((4, 6))  # x14
    g = build_graph(10, edges)
    w = walk_from_vertices(g, list(range(10)) + [0])
    return g, w


# --- random families ------------------------------------------------------

def random_connected_bipartite(rng: random.Random, max_edges: int = 12) -> Graph:
    """A random connected bipartite graph with at most ``max_edges`` edges."""
    while True:
        a = rng.randint(1, 4)
        b = rng.randint(1, 4)
        slots = [(i, a + j) for i in range(a) for j in range(b)]
        lo = a + b - 1
        if lo > max_edges or lo > len(slots):
            continue
        m = rng.randint(lo, min(max_edges, len(slots)))
        edges = rng.sample(slots, m)
        g = build_graph(a + b, edges)
        if _is_connected(g):
            return g


def _is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in g.adjacency[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def random_theta_sum(
    rng: random.Random, k: int, leaves: int, max_r: int = 4
) -> Graph:
    """Iterated 2-clique sum of theta graphs with a common path length ``k``.

    Every summand is glued along a uniformly chosen edge of the partial
    sum, so the result is a biconnected graph whose chordless cycles all
    have length ``2k``.
    """
    g = theta_graph(rng.randint(2, max_r), k)
    for _ in range(leaves - 1):
        h = theta_graph(rng.randint(2, max_r), k)
        e1 = rng.randrange(g.m)
        e2 = rng.randrange(h.m)
        g = clique_sum(g, h, EdgeGlue(e1, e2, reverse=rng.random() < 0.5)).graph
    return g


def random_ring_graph(
    rng: random.Random, pieces: int, even_only: bool = True
) -> Graph:
    """Iterated 1-/2-clique sums of cycles (even cycles by default)."""
    def rand_cycle() -> Graph:
        if even_only:
            return cycle_graph(2 * rng.randint(2, 4))
        return cycle_graph(rng.randint(3, 8))

    g = rand_cycle()
    for _ in range(pieces - 1):
        h = rand_cycle()
        if rng.random() < 0.5:
            g = clique_sum(
                g, h, EdgeGlue(rng.randrange(g.m), rng.randrange(h.m),
                               reverse=rng.random() < 0.5)
            ).graph
        else:
            g = clique_sum(
                g, h, VertexGlue(rng.randrange(g.n), rng.randrange(h.n))
            ).graph
    return g


# --- exhaustive enumeration (small censuses) --------------------------------

def _refine_colors(n: int, adj: list[set[int]]) -> list[int]:
    # iterated neighbor-color refinement; stable coloring bounds the
    # permutations the canonical form has to try
    colors = [len(adj[v]) for v in range(n)]
    while True:
        keys = [
            (colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(n)
        ]
        order = {k: i for i, k in enumerate(sorted(set(keys)))}
        new = [order[k] for k in keys]
        if new == colors:
            return colors
        colors = new


def _canonical_signature(n: int, edge_set: frozenset[tuple[int, int]]) -> tuple:
    """Isomorphism-invariant signature: minimal edge list over relabelings
    that respect the stable vertex coloring."""
    import itertools

    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edge_set:
        adj[u].add(v)
        adj[v].add(u)
    colors = _refine_colors(n, adj)
    classes: dict[int, list[int]] = {}
    for v in range(n):
        classes.setdefault(colors[v], []).append(v)
    ordered = [classes[c] for c in sorted(classes)]

    best = None
    for parts in itertools.product(*(itertools.permutations(cls) for cls in ordered)):
        flat = [v for part in parts for v in part]
        perm = [0] * n
        for label, v in enumerate(flat):
            perm[v] = label
        relabeled = sorted(
            (perm[u], perm[v]) if perm[u] < perm[v] else (perm[v], perm[u])
            for u, v in edge_set
        )
        key = tuple(relabeled)
        if best is None or key < best:
            best = key
    return (n, best)


def connected_bipartite_graphs(max_n: int) -> Iterator[Graph]:
    """All connected bipartite graphs with at most ``max_n`` vertices,
    one per isomorphism class, in deterministic order.

    Enumerates edge subsets of complete bipartite shells and dedups with a
    brute-force canonical form, which is fine for ``max_n <= 8``.
    """
    for n in range(1, max_n + 1):
        if n == 1:
            yield build_graph(1, [])
            continue
        seen: set[tuple] = set()
        batch: list[tuple[tuple, Graph]] = []
        for a in range(1, n // 2 + 1):
            b = n - a
            slots = [(i, a + j) for i in range(a) for j in range(b)]
            for mask in range(1 << len(slots)):
                if bin(mask).count("1") < n - 1:
                    continue
                edges = [slots[i] for i in range(len(slots)) if mask >> i & 1]
                g = build_graph(n, edges)
                if not _is_connected(g):
                    continue
                sig = _canonical_signature(n, frozenset(g.edges))
                if sig not in seen:
                    seen.add(sig)
                    batch.append((sig, g))
        batch.sort(key=lambda t: t[0])
        for _, g in batch:
            yield g
