"""Brute-force reference implementations, deliberately independent of graphdot internals.

They use the literal matrix formula tr(A_G P A_H P^T), networkx for
graph6 and isomorphism, and plain subset enumeration.
"""

from __future__ import annotations

import itertools

import networkx as nx
import numpy as np

from graphdot import Graph


def signed(g: Graph) -> np.ndarray:
    a = -np.ones((g.n, g.n), dtype=np.int64)
    for i, j in g.edges:
        a[i, j] = a[j, i] = 1
    np.fill_diagonal(a, 0)
    return a


def perm_matrix(p) -> np.ndarray:
    n = len(p)
    m = np.zeros((n, n), dtype=np.int64)
    for i, t in enumerate(p):
        m[i, t] = 1
    return m


def traces(g: Graph, h: Graph) -> list[int]:
    """tr(A_G P A_H P^T) for every permutation, h zero-padded when smaller."""
    n = max(g.n, h.n)
    ag = np.zeros((n, n), dtype=np.int64)
    ah = np.zeros((n, n), dtype=np.int64)
    ag[: g.n, : g.n] = signed(g)
    ah[: h.n, : h.n] = signed(h)
    out = []
    for p in itertools.permutations(range(n)):
        P = perm_matrix(p)
        out.append(int(np.trace(ag @ P @ ah @ P.T)))
    return out


def dot_and_phase(g: Graph, h: Graph) -> tuple[int, int]:
    tr = traces(g, h)
    best = max(tr)
    return best, tr.count(best)


def to_nx(g: Graph) -> nx.Graph:
    x = nx.Graph()
    x.add_nodes_from(range(g.n))
    x.add_edges_from(g.edges)
    return x


def nx_graph6(g: Graph) -> str:
    return nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()


def nx_isomorphic(g: Graph, h: Graph) -> bool:
    return nx.is_isomorphic(to_nx(g), to_nx(h))


def aut_count(g: Graph) -> int:
    edges = set(g.edges)
    count = 0
    for p in itertools.permutations(range(g.n)):
        if {tuple(sorted((p[i], p[j]))) for i, j in edges} == edges:
            count += 1
    return count


def induced_copies(g: Graph, h: Graph) -> int:
    """Vertex subsets of g whose induced subgraph is isomorphic to h."""
    big = to_nx(g)
    small = to_nx(h)
    return sum(
        nx.is_isomorphic(big.subgraph(s), small) for s in itertools.combinations(range(g.n), h.n)
    )


def cross_dot_and_phase(g: Graph, h: Graph) -> tuple[int, int]:
    """Max over injective maps f: V(h) -> V(g) of sum_{i != j} A_h[i,j] A_g[f i, f j], and its count."""
    ag, ah = signed(g), signed(h)
    vals = []
    for f in itertools.permutations(range(g.n), h.n):
        vals.append(sum(int(ah[i, j]) * int(ag[f[i], f[j]]) for i in range(h.n) for j in range(h.n) if i != j))
    best = max(vals)
    return best, vals.count(best)


def all_labeled(n: int):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [pairs[b] for b in range(len(pairs)) if mask >> b & 1])
