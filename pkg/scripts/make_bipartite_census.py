#!/usr/bin/env python3
"""Write the graph6 stream of all connected bipartite graphs up to a
vertex count, one isomorphism class per line.

Usage: python scripts/make_bipartite_census.py [MAX_N] [OUT]
Defaults: MAX_N=7, OUT=tests/data/connected_bipartite_le{MAX_N}.g6
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from toricgraphs.families import connected_bipartite_graphs
from toricgraphs.formats import encode_graph6


def main() -> None:
    max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 7
    out = (
        Path(sys.argv[2])
        if len(sys.argv) > 2
        else Path(__file__).resolve().parent.parent
        / "tests"
        / "data"
        / f"connected_bipartite_le{max_n}.g6"
    )
    out.parent.mkdir(parents=True, exist_ok=True)
    lines = []
    per_n: dict[int, int] = {}
    for g in connected_bipartite_graphs(max_n):
        lines.append(encode_graph6(g))
        per_n[g.n] = per_n.get(g.n, 0) + 1
    out.write_text("\n".join(lines) + "\n")
    print(f"{len(lines)} graphs -> {out}")
    for n in sorted(per_n):
        print(f"  n={n}: {per_n[n]}")


if __name__ == "__main__":
    main()
