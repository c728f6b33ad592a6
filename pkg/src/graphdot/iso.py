"""Exhaustive isomorphism oracles for small graphs.

These are ground truth for the rest of the package, so they favour
obvious correctness over speed: canonical forms come from a full
relabeling search, pruned only by degree classes and twin symmetry.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial

from .errors import GuardExceeded
from .formats import write_graph6
from .graph import Graph, twin_classes

CANON_GUARD = 10
CATALOG_GUARD = 7


def _check_guard(g: Graph, what: str):
    if g.n > CANON_GUARD:
        raise GuardExceeded(what, g.n, CANON_GUARD, "exhaustive relabeling is limited to small orders")


def _twin_index(g: Graph) -> list[int]:
    twin_of = [0] * g.n
    for idx, cls in enumerate(twin_classes(g)):
        for v in cls:
            twin_of[v] = idx
    return twin_of


def canonical_labeling(g: Graph) -> list[int]:
    """Vertex order whose relabeling gives the canonical form.

    Positions are filled in ascending degree order; among all such orderings
    the one with the lexicographically smallest column-wise upper-triangle
    bit string (graph6 bit order) wins. Unplaced twins are interchangeable,
    so only one per twin class is tried at each position.
    """
    _check_guard(g, "canonical_form")
    n = g.n
    deg = g.degrees()
    slot_degree = sorted(deg)
    twin_of = _twin_index(g)

    best: list[int] | None = None
    best_order: list[int] = []
    cols: list[int] = []
    order: list[int] = []
    placed = [False] * n

    def search(j: int) -> None:
        nonlocal best, best_order
        if j == n:
            if best is None or cols < best:
                best, best_order = cols.copy(), order.copy()
            return
        cands, seen = [], set()
        for v in range(n):
            if placed[v] or deg[v] != slot_degree[j] or twin_of[v] in seen:
                continue
            seen.add(twin_of[v])
            col = 0
            for u in order:
                col = col << 1 | (g.adj[u] >> v & 1)
            cands.append((col, v))
        low = min(c for c, _ in cands)
        cols.append(low)
        for c, v in cands:
            if best is not None and cols > best[: j + 1]:
                break
            if c != low:
                continue
            order.append(v)
            placed[v] = True
            search(j + 1)
            placed[v] = False
            order.pop()
        cols.pop()

    search(0)
    return best_order


def canonical_form(g: Graph) -> Graph:
    order = canonical_labeling(g)
    mapping = [0] * g.n
    for pos, v in enumerate(order):
        mapping[v] = pos
    return g.relabel(mapping)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.size != h.size or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    _check_guard(g, "is_isomorphic")
    return canonical_form(g) == canonical_form(h)


def automorphism_count(g: Graph) -> int:
    """Order of the automorphism group, by backtracking over vertex images.

    Twin classes are handled in closed form: each class of size s
    contributes s! and the search only follows maps that keep every class's
    members in increasing image order.
    """
    _check_guard(g, "automorphism_count")
    n = g.n
    deg = g.degrees()
    classes = twin_classes(g)
    prev_twin = [-1] * n
    for cls in classes:
        for a, b in zip(cls, cls[1:]):
            prev_twin[b] = a
    image = [-1] * n
    used = [False] * n

    def extend(v: int) -> int:
        if v == n:
            return 1
        total = 0
        lo = image[prev_twin[v]] + 1 if prev_twin[v] >= 0 else 0
        for t in range(lo, n):
            if used[t] or deg[t] != deg[v]:
                continue
            if any((g.adj[u] >> v & 1) != (g.adj[image[u]] >> t & 1) for u in range(v)):
                continue
            image[v], used[t] = t, True
            total += extend(v + 1)
            image[v], used[t] = -1, False
        return total

    mult = 1
    for cls in classes:
        mult *= factorial(len(cls))
    return extend(0) * mult


@dataclass(frozen=True)
class IsoClassCatalog:
    """One canonical representative per isomorphism class of ``n``-vertex graphs.

    Representatives are ordered by edge count, then by graph6 string.
    """

    n: int
    representatives: tuple[Graph, ...]

    def __len__(self):
        return len(self.representatives)

    def __iter__(self):
        return iter(self.representatives)

    def __getitem__(self, i):
        return self.representatives[i]

    def index(self, g: Graph) -> int:
        """Position of the class containing ``g``."""
        return _catalog_index(self.n)[canonical_form(g)]


def enumerate_iso_classes(n: int) -> IsoClassCatalog:
    if not 1 <= n <= CATALOG_GUARD:
        raise GuardExceeded("enumerate_iso_classes", n, CATALOG_GUARD, "catalog sizes grow super-exponentially")
    return IsoClassCatalog(n, _catalog(n))


@lru_cache(maxsize=None)
def _catalog(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, (0,)),)
    # every n-vertex graph is some (n-1)-vertex graph plus one vertex
    found = set()
    for base in _catalog(n - 1):
        for nbrs in range(1 << (n - 1)):
            adj = [row | ((nbrs >> v & 1) << (n - 1)) for v, row in enumerate(base.adj)]
            adj.append(nbrs)
            found.add(canonical_form(Graph(n, tuple(adj))))
    return tuple(sorted(found, key=lambda g: (g.size, write_graph6(g))))


@lru_cache(maxsize=None)
def _catalog_index(n: int) -> dict[Graph, int]:
    return {g: i for i, g in enumerate(_catalog(n))}
