#!/usr/bin/env python3
"""Write every connected graph on 1..N vertices (one per isomorphism class) as graph6.

Graphs on n vertices are obtained by adding a vertex with every possible
neighborhood to each graph on n-1 vertices; duplicates are removed with
nauty's canonical certificate (pynauty).
"""
import argparse
import sys

import networkx as nx
import pynauty


def certificate(n, edges):
    adj = {v: [] for v in range(n)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return pynauty.certificate(pynauty.Graph(n, adjacency_dict=adj))


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--out", default="-")
    args = ap.parse_args()

    level = [(1, ())]
    out = open(args.out, "w") if args.out != "-" else sys.stdout
    for n in range(1, args.max_n + 1):
        if n > 1:
            seen = {}
            for _, edges in level:
                for mask in range(1 << (n - 1)):
                    new_edges = edges + tuple((u, n - 1) for u in range(n - 1) if mask >> u & 1)
                    cert = certificate(n, new_edges)
                    if cert not in seen:
                        seen[cert] = new_edges
            level = [(n, e) for e in sorted(seen.values())]
        lines = []
        for _, edges in level:
            g = nx.Graph()
            g.add_nodes_from(range(n))
            g.add_edges_from(edges)
            if nx.is_connected(g):
                lines.append(nx.to_graph6_bytes(g, header=False).decode().strip())
        print(f"n={n}: {len(level)} graphs, {len(lines)} connected", file=sys.stderr)
        for line in sorted(lines):
            out.write(line + "\n")


if __name__ == "__main__":
    main()
