#!/usr/bin/env python3
"""Write every graph on at most N vertices, up to isomorphism, as graph6 lines.

Generation is orderly-by-extension: every graph on n vertices is obtained from
some graph on n-1 vertices by adding a vertex, and duplicates are removed with
nauty canonical certificates (pynauty). Encoding uses networkx, so the corpus
is independent of this project's own graph6 code.

Usage: make_small_graphs.py MAX_N OUTPUT
"""
import sys
from itertools import combinations

import networkx as nx
import pynauty

EXPECTED = [1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668]


def certificate(n, edges):
    adj = {v: [] for v in range(n)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return pynauty.certificate(pynauty.Graph(n, adjacency_dict=adj)) if n else b""


def main():
    max_n, out = int(sys.argv[1]), sys.argv[2]
    levels = [[()]]
    for n in range(1, max_n + 1):
        seen = {}
        for edges in levels[-1]:
            for k in range(n):
                for nbrs in combinations(range(n - 1), k):
                    e = tuple(sorted(edges + tuple((u, n - 1) for u in nbrs)))
                    cert = certificate(n, e)
                    seen.setdefault(cert, e)
        levels.append(list(seen.values()))
        assert len(levels[-1]) == EXPECTED[n], (n, len(levels[-1]))

    atlas = sum(1 for _ in nx.graph_atlas_g())
    assert atlas == sum(len(levels[n]) for n in range(min(max_n, 7) + 1)) or max_n < 7

    lines = []
    for n, graphs in enumerate(levels):
        encoded = []
        for edges in graphs:
            g = nx.Graph()
            g.add_nodes_from(range(n))
            g.add_edges_from(edges)
            encoded.append((len(edges), nx.to_graph6_bytes(g, header=False).decode().strip()))
        lines.extend(s for _, s in sorted(encoded))
    with open(out, "w") as f:
        f.write("\n".join(lines) + "\n")
    print(f"wrote {len(lines)} graphs to {out}")


if __name__ == "__main__":
    main()
