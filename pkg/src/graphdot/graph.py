"""Simple undirected graphs stored as adjacency bitsets, and their signed matrices."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``adj[v]`` is an int whose bit ``u`` is set iff ``{u, v}`` is an edge.
    Instances compare and hash structurally (same labels, same edges).
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"graph order must be positive, got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in _bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"edge {{{u}, {v}}} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for i, j in edges:
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge ({i}, {j}) out of range for n={n}")
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return cls(n, tuple(adj))

    @classmethod
    def from_matrix(cls, matrix) -> Graph:
        """Build from a 0/1 adjacency matrix or a signed (+1/-1) matrix."""
        m = np.asarray(matrix)
        n = m.shape[0]
        return cls.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n) if m[i, j] > 0))

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in _bits(self.adj[i] >> (i + 1) << (i + 1))]

    @property
    def size(self) -> int:
        return sum(bin(row).count("1") for row in self.adj) // 2

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def degrees(self) -> list[int]:
        return [bin(row).count("1") for row in self.adj]

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int8)
        for i, j in self.edges:
            a[i, j] = a[j, i] = 1
        return a

    def signed(self) -> np.ndarray:
        """The +1/-1 matrix with zero diagonal, as int8."""
        a = 2 * self.adjacency_matrix() - 1
        np.fill_diagonal(a, 0)
        return a.astype(np.int8)

    def relabel(self, mapping: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``mapping[v]``."""
        if sorted(mapping) != list(range(self.n)):
            raise ValueError("mapping is not a permutation of the vertices")
        return Graph.from_edges(self.n, ((mapping[i], mapping[j]) for i, j in self.edges))

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Induced subgraph, vertex ``vertices[t]`` becoming ``t``."""
        idx = list(vertices)
        return Graph.from_edges(
            len(idx),
            ((a, b) for a in range(len(idx)) for b in range(a + 1, len(idx)) if self.has_edge(idx[a], idx[b])),
        )

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges})"


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def twin_classes(g: Graph) -> list[list[int]]:
    """Partition vertices into classes of twins (same neighbourhood outside the pair).

    Every class is a clique or an independent set, and any permutation inside
    a class is an automorphism of ``g``. Classes and members are sorted.
    """
    classes: list[list[int]] = []
    for v in range(g.n):
        for cls in classes:
            u = cls[0]
            mask = ~((1 << u) | (1 << v))
            if g.adj[u] & mask == g.adj[v] & mask:
                cls.append(v)
                break
        else:
            classes.append([v])
    return classes


# Named families. Vertex 0 is the centre of a star; split graphs put the
# clique on the low labels.

def complete(n: int) -> Graph:
    return Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def empty(n: int) -> Graph:
    return Graph(n, (0,) * n)


def path(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int, k: int) -> Graph:
    """Centre 0 joined to leaves ``1..k``; vertices ``k+1..n-1`` isolated."""
    if not 0 <= k <= n - 1:
        raise ValueError(f"star with {k} leaves does not fit on {n} vertices")
    return Graph.from_edges(n, ((0, j) for j in range(1, k + 1)))


def clique_split(n: int, r: int, clique_rest: bool) -> Graph:
    """``K_r`` on ``0..r-1`` plus ``K_{n-r}`` (if ``clique_rest``) or ``n-r`` isolated vertices."""
    if not 1 <= r <= n:
        raise ValueError(f"split size r={r} out of range for n={n}")
    edges = [(i, j) for i in range(r) for j in range(i + 1, r)]
    if clique_rest:
        edges += [(i, j) for i in range(r, n) for j in range(i + 1, n)]
    return Graph.from_edges(n, edges)


def disjoint_union(*graphs: Graph) -> Graph:
    edges, offset = [], 0
    for g in graphs:
        edges += [(i + offset, j + offset) for i, j in g.edges]
        offset += g.n
    return Graph.from_edges(offset, edges)


@dataclass(frozen=True)
class Permutation:
    """Bijection on ``0..n-1``; ``mapping[i]`` is the image of ``i``."""

    mapping: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.mapping) != list(range(len(self.mapping))):
            raise ValueError(f"{self.mapping} is not a bijection")

    @property
    def n(self) -> int:
        return len(self.mapping)

    def matrix(self) -> np.ndarray:
        """Permutation matrix ``P`` with ``P[i, mapping[i]] = 1``.

        With this convention ``(P A P^T)[i, j] = A[mapping[i], mapping[j]]``.
        """
        p = np.zeros((self.n, self.n), dtype=np.int64)
        p[np.arange(self.n), list(self.mapping)] = 1
        return p

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, m in enumerate(self.mapping):
            inv[m] = i
        return Permutation(tuple(inv))


@dataclass(frozen=True)
class SignMatrix:
    """Signed representation ``r * A_G``: ``+r`` on edges, ``-r`` on non-edges, 0 on the diagonal."""

    n: int
    signs: tuple[tuple[int, ...], ...]
    r: Fraction = Fraction(1)

    @property
    def entries(self) -> list[list[Fraction]]:
        return [[self.r * s for s in row] for row in self.signs]

    def to_numpy(self) -> np.ndarray:
        return float(self.r) * np.array(self.signs, dtype=float)

    def __neg__(self) -> SignMatrix:
        return SignMatrix(self.n, self.signs, -self.r)


def sign_matrix(g: Graph, r=1) -> SignMatrix:
    r = Fraction(r)
    if r == 0:
        raise ValueError("weight r = 0 erases all structure and is rejected")
    signs = tuple(
        tuple(0 if i == j else (1 if g.has_edge(i, j) else -1) for j in range(g.n)) for i in range(g.n)
    )
    return SignMatrix(g.n, signs, r)
