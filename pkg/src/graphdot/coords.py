"""Coordinates of graphs against an ordered basis, basis checks, clustering, census."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import groupby
from math import comb
from typing import Callable, Iterable, Sequence

from .engine import DotResult, count_induced, dot, dot_table, norm_dot
from .errors import GuardExceeded, OrderMismatch
from .formats import write_graph6
from .graph import Graph
from .iso import CANON_GUARD, IsoClassCatalog, enumerate_iso_classes, is_isomorphic
from .special import BOUNDED_ORDER_GUARD

UNIVERSE_GUARD = 6


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("GRAPHDOT_THREADS", "1")))
    except ValueError:
        return 1


def parallel_map(fn: Callable, items: Sequence) -> list:
    """Order-preserving map, fanned out over GRAPHDOT_THREADS worker processes."""
    workers = min(_threads(), len(items))
    if workers <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))


@dataclass(frozen=True)
class Basis:
    elements: tuple[Graph, ...]

    def __init__(self, elements: Iterable[Graph]):
        elements = tuple(elements)
        if not elements:
            raise ValueError("a basis needs at least one element")
        for i, a in enumerate(elements):
            for j in range(i):
                b = elements[j]
                if a.n == b.n and _same_class(a, b):
                    raise ValueError(f"basis elements {j} and {i} are isomorphic")
        object.__setattr__(self, "elements", elements)

    @property
    def ids(self) -> list[str]:
        return [write_graph6(h) for h in self.elements]

    def __len__(self):
        return len(self.elements)


def _same_class(a: Graph, b: Graph) -> bool:
    if a.n <= CANON_GUARD:
        return is_isomorphic(a, b)
    return dot(a, b).value == a.n * (a.n - 1)


@dataclass(frozen=True)
class Coordinates:
    entries: tuple[tuple[int, int], ...]
    basis_ids: tuple[str, ...] = ()
    solvers: tuple[str, ...] = field(default=(), compare=False)

    def key(self, use_phase: bool = True) -> tuple:
        return self.entries if use_phase else tuple(v for v, _ in self.entries)

    def to_json(self) -> dict:
        return {
            "basis_ids": list(self.basis_ids),
            "entries": [{"value": v, "phase": p} for v, p in self.entries],
        }

    @classmethod
    def from_json(cls, data: dict) -> Coordinates:
        return cls(
            tuple((int(e["value"]), int(e["phase"])) for e in data["entries"]),
            tuple(data["basis_ids"]),
        )


def coordinates(g: Graph, basis: Basis, solver: str = "auto") -> Coordinates:
    """``(G.H_i, Phase)`` for every basis element, using cross-order dots where orders differ."""
    entries, solvers = [], []
    for i, h in enumerate(basis.elements):
        try:
            res: DotResult = dot(g, h, solver)
        except GuardExceeded as exc:
            raise GuardExceeded(
                f"basis element {i} ({write_graph6(h)})", exc.size, exc.bound, "no solver can handle it"
            ) from None
        entries.append((res.value, res.phase))
        solvers.append(res.solver)
    return Coordinates(tuple(entries), tuple(basis.ids), tuple(solvers))


def _coordinate_rows(graphs: Sequence[Graph], basis: Basis) -> list[Coordinates]:
    """Coordinates for many graphs; same-order elements go through the batched exhaustive table."""
    if not graphs:
        return []
    n = graphs[0].n
    ids = tuple(basis.ids)
    batched = {}
    if all(g.n == n for g in graphs) and n <= 8:
        same = [i for i, h in enumerate(basis.elements) if h.n == n]
        if same:
            values, phases = dot_table(list(graphs), [basis.elements[i] for i in same])
            for col, i in enumerate(same):
                batched[i] = (values[:, col], phases[:, col])
    rest = [i for i in range(len(basis)) if i not in batched]
    partial = parallel_map(_coords_for, [(g, tuple(basis.elements[i] for i in rest)) for g in graphs]) if rest else []
    rows = []
    for r, g in enumerate(graphs):
        entries, solvers = [None] * len(basis), [""] * len(basis)
        for i, (vals, phs) in batched.items():
            entries[i] = (int(vals[r]), int(phs[r]))
            solvers[i] = "exhaustive"
        for pos, i in enumerate(rest):
            entries[i], solvers[i] = partial[r][pos]
        rows.append(Coordinates(tuple(entries), ids, tuple(solvers)))
    return rows


def _coords_for(args):
    g, elements = args
    out = []
    for h in elements:
        res = dot(g, h)
        out.append(((res.value, res.phase), res.solver))
    return out


@dataclass(frozen=True)
class BasisReport:
    is_basis: bool
    collisions: list[tuple[int, int]]  # catalog index pairs with equal coordinates
    universe: IsoClassCatalog
    basis: Basis
    use_phase: bool = True

    def to_json(self) -> dict:
        return {
            "basis_ids": self.basis.ids,
            "collisions": [
                [write_graph6(self.universe[i]), write_graph6(self.universe[j])] for i, j in self.collisions
            ],
            "is_basis": self.is_basis,
            "order": self.universe.n,
            "universe_size": len(self.universe),
            "use_phase": self.use_phase,
        }


def verify_basis(universe: IsoClassCatalog, basis: Basis, use_phase: bool = True, allow_n7: bool = False) -> BasisReport:
    """Check that every class in ``universe`` gets distinct coordinates.

    ``use_phase=False`` compares dot values only.
    """
    guard = 7 if allow_n7 else UNIVERSE_GUARD
    if universe.n > guard:
        raise GuardExceeded("verify_basis universe", universe.n, guard, "order 7 is opt-in")
    rows = _coordinate_rows(list(universe), basis)
    return _report(universe, basis, [c.key(use_phase) for c in rows], use_phase)


def _report(universe, basis, keys, use_phase) -> BasisReport:
    order = sorted(range(len(keys)), key=lambda i: (keys[i], i))
    collisions = []
    for _, grp in groupby(order, key=keys.__getitem__):
        members = sorted(grp)
        collisions += [(a, b) for x, a in enumerate(members) for b in members[x + 1 :]]
    collisions.sort()
    return BasisReport(not collisions, collisions, universe, basis, use_phase)


def greedy_basis(
    universe: IsoClassCatalog, candidates: Sequence[Graph], use_phase: bool = True
) -> tuple[Basis, BasisReport]:
    """Forward selection: repeatedly add the candidate that splits the most classes apart.

    Stops when the coordinates are injective or no candidate helps; the
    returned report says which.
    """
    reps = list(universe)
    columns = []
    for h in candidates:
        coords = _coordinate_rows(reps, Basis([h]))
        columns.append([c.key(use_phase)[0] for c in coords])
    chosen: list[int] = []
    keys = [()] * len(reps)
    while True:
        distinct = len(set(keys))
        if distinct == len(reps):
            break
        best, best_gain = None, distinct
        for c, col in enumerate(columns):
            if c in chosen:
                continue
            gain = len({k + (col[r],) for r, k in enumerate(keys)})
            if gain > best_gain:
                best, best_gain = c, gain
        if best is None:
            break
        chosen.append(best)
        keys = [k + (columns[best][r],) for r, k in enumerate(keys)]
    if not chosen:
        chosen = [0]
    basis = Basis([candidates[c] for c in chosen])
    return basis, verify_basis(universe, basis, use_phase, allow_n7=True)


@dataclass(frozen=True)
class ClusterPartition:
    groups: list[list[int]]  # indices into the clustered list, ascending within a group
    keys: list[tuple] = field(default_factory=list)

    def to_json(self, graphs: Sequence[Graph] | None = None) -> list:
        out = []
        for grp, key in zip(self.groups, self.keys):
            item = {"members": grp, "size": len(grp)}
            if graphs is not None:
                item["graph6"] = [write_graph6(graphs[i]) for i in grp]
            out.append(item)
        return out


def cluster(graphs: Sequence[Graph], basis: Basis, use_phase: bool = True) -> ClusterPartition:
    """Group graphs with identical coordinate vectors by sorting the vectors."""
    if not graphs:
        return ClusterPartition([], [])
    if len({g.n for g in graphs}) > 1:
        raise OrderMismatch("cluster needs graphs of a single order")
    keys = [c.key(use_phase) for c in _coordinate_rows(list(graphs), basis)]
    order = sorted(range(len(graphs)), key=lambda i: (keys[i], i))
    groups, group_keys = [], []
    for key, grp in groupby(order, key=keys.__getitem__):
        groups.append(list(grp))
        group_keys.append(key)
    return ClusterPartition(groups, group_keys)


def subgraph_census_coords(g: Graph, k: int) -> list[int]:
    """Induced copies of each k-vertex class (catalog order) inside g."""
    if k > BOUNDED_ORDER_GUARD:
        raise GuardExceeded("subgraph_census_coords", k, BOUNDED_ORDER_GUARD)
    if not 1 <= k <= g.n:
        raise GuardExceeded("subgraph_census_coords", k, g.n, "k must be between 1 and order(g)")
    counts = [count_induced(g, h) for h in enumerate_iso_classes(k)]
    assert sum(counts) == comb(g.n, k)
    return counts


def census_report(universe: IsoClassCatalog, k: int) -> dict:
    """Census vectors for a whole universe and the pairs they fail to separate."""
    vectors = [tuple(subgraph_census_coords(g, k)) for g in universe]
    order = sorted(range(len(vectors)), key=lambda i: (vectors[i], i))
    collisions = []
    for _, grp in groupby(order, key=vectors.__getitem__):
        members = sorted(grp)
        collisions += [(a, b) for x, a in enumerate(members) for b in members[x + 1 :]]
    collisions.sort()
    return {
        "order": universe.n,
        "k": k,
        "vectors": [list(v) for v in vectors],
        "collisions": [[write_graph6(universe[a]), write_graph6(universe[b])] for a, b in collisions],
        "injective": not collisions,
    }


def similarity_rank(query: Graph, corpus: Sequence[Graph]) -> list[tuple[int, Fraction]]:
    """Corpus positions sorted by descending normalized dot with the query (stable)."""
    if any(g.n != query.n for g in corpus):
        raise OrderMismatch("similarity_rank needs corpus graphs of the query's order")
    scores = parallel_map(_norm_dot_with, [(query, g) for g in corpus])
    return sorted(enumerate(scores), key=lambda item: (-item[1], item[0]))


def _norm_dot_with(args) -> Fraction:
    return norm_dot(*args)
