"""Generate all connected simple cubic graphs on up to N vertices as graph6.

Loopless cubic multigraphs on n+2 vertices are produced from those on n
vertices by edge insertion: subdivide two edges (possibly the same edge
twice) and join the two new vertices. Starting from the theta graph this
also reaches simple graphs whose every edge insertion preimage has a
parallel pair. Insertion never creates a bridge, so graphs with bridges come
from joining two smaller multigraphs, each with one edge subdivided, by a
new edge. Results are deduplicated up to isomorphism, the simple ones
kept, and per-order counts checked against the known enumeration
(1, 2, 5, 19, 85, 509, ...).

usage: python3 scripts/gen_cubic_corpus.py 14 > corpus.g6
"""
import sys
from collections import defaultdict
from itertools import combinations_with_replacement

import networkx as nx

KNOWN = {4: 1, 6: 2, 8: 5, 10: 19, 12: 85, 14: 509, 16: 4060}


def insert_edge(g, e1, e2):
    h = nx.MultiGraph(g)
    n = h.number_of_nodes()
    a, b = n, n + 1
    if e1 == e2:
        x, y, _ = e1
        h.remove_edge(*e1)
        h.add_edges_from([(x, a), (a, b), (b, y), (a, b)])
        return h
    h.remove_edge(*e1)
    h.remove_edge(*e2)
    h.add_edges_from([(e1[0], a), (a, e1[1]), (e2[0], b), (b, e2[1]), (a, b)])
    return h


def bridge_join(g1, e1, g2, e2):
    h = nx.disjoint_union(g1, g2)
    off = g1.number_of_nodes()
    x, y, k = e1
    p, q, l = e2
    a, b = h.number_of_nodes(), h.number_of_nodes() + 1
    h.remove_edge(x, y, k)
    h.remove_edge(p + off, q + off, l)
    h.add_edges_from([(x, a), (a, y), (p + off, b), (b, q + off), (a, b)])
    return h


def invariant(g):
    # WL refinement cannot split a regular graph, so hash distance profiles,
    # neighbor multiplicities and triangle counts at every vertex instead
    rows = []
    for v in g:
        dist = nx.single_source_shortest_path_length(g, v)
        profile = [0] * (max(dist.values()) + 1)
        for d in dist.values():
            profile[d] += 1
        nb = sorted(set(g[v]))
        mult = tuple(sorted(g.number_of_edges(v, w) for w in nb))
        tri = sum(1 for i, a in enumerate(nb) for b in nb[i + 1:] if g.has_edge(a, b))
        rows.append((tuple(profile), mult, tri))
    return tuple(sorted(rows))


def is_simple(g):
    return all(g.number_of_edges(u, v) == 1 for u, v in g.edges())


def main():
    top = int(sys.argv[1]) if len(sys.argv) > 1 else 14
    theta = nx.MultiGraph([(0, 1), (0, 1), (0, 1)])
    levels = {2: [theta]}
    simple = {}
    n = 2
    while n + 2 <= top:
        buckets = defaultdict(list)

        def keep(h):
            key = invariant(h)
            if not any(nx.is_isomorphic(h, o) for o in buckets[key]):
                buckets[key].append(h)

        for g in levels[n]:
            for e1, e2 in combinations_with_replacement(list(g.edges(keys=True)), 2):
                keep(insert_edge(g, e1, e2))
        for n1 in range(2, n // 2 + 1, 2):
            for g1 in levels[n1]:
                for g2 in levels[n - n1]:
                    for e1 in g1.edges(keys=True):
                        for e2 in g2.edges(keys=True):
                            keep(bridge_join(g1, e1, g2, e2))
        n += 2
        level = [h for bucket in buckets.values() for h in bucket]
        levels[n] = level
        simple[n] = [nx.Graph(h) for h in level if is_simple(h)]
        print(f"n={n}: {len(level)} multigraphs, {len(simple[n])} simple", file=sys.stderr)
    for order in sorted(simple):
        graphs = simple[order]
        if order in KNOWN and len(graphs) != KNOWN[order]:
            raise SystemExit(f"n={order}: got {len(graphs)} expected {KNOWN[order]}")
        lines = sorted(
            nx.to_graph6_bytes(nx.convert_node_labels_to_integers(g), header=False)
            .decode()
            .strip()
            for g in graphs
        )
        for line in lines:
            print(line)


if __name__ == "__main__":
    main()
