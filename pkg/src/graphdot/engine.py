"""Graph dot product, phase, normalized dot, metric and orthogonality.

For graphs G, H on n vertices the dot product is the maximum over
permutations p of ``sum_{i != j} A_G[i, j] * A_H[p(i), p(j)]`` where A is
the signed matrix (+1 edge, -1 non-edge, 0 diagonal). Writing ``a`` for
the number of unordered pairs on which G and the relabeled H agree, the
sum equals ``4a - n(n-1)``; that identity is what keeps every quantity here
an integer.

A witness ``w`` for a same-order result maps vertex ``i`` of ``g`` to
vertex ``w[i]`` of ``h``. For a cross-order result ``w`` maps vertex ``i``
of the smaller graph to ``w[i]`` in the larger one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import search
from .errors import GuardExceeded, OrderMismatch
from .graph import Graph, SignMatrix, complement

EXHAUSTIVE_GUARD = 10
BNB_GUARD = 16
BNB_HARD_LIMIT = 24
_TABLE_CACHE_MAX = 8
_CHUNK_ROWS = 1 << 18


@dataclass(frozen=True)
class DotResult:
    value: int
    phase: int | None
    witness: tuple[int, ...]
    solver: str = field(default="", compare=False)
    work: int = field(default=0, compare=False)


# -- enumeration kernels ----------------------------------------------------

@lru_cache(maxsize=None)
def _perm_table(n: int) -> np.ndarray:
    """All permutations of range(n) in lexicographic order, one per row."""
    if n == 1:
        return np.zeros((1, 1), dtype=np.int8)
    sub = _perm_table(n - 1)
    blocks = []
    for first in range(n):
        rest = np.array([v for v in range(n) if v != first], dtype=np.int8)
        block = np.empty((len(sub), n), dtype=np.int8)
        block[:, 0] = first
        block[:, 1:] = rest[sub]
        blocks.append(block)
    return np.concatenate(blocks)


def _perm_chunks(items: np.ndarray):
    n = len(items)
    if n <= _TABLE_CACHE_MAX:
        yield items[_perm_table(n)]
        return
    for idx in range(n):
        rest = np.delete(items, idx)
        for sub in _perm_chunks(rest):
            block = np.empty((len(sub), n), dtype=np.int8)
            block[:, 0] = items[idx]
            block[:, 1:] = sub
            yield block


def _injection_chunks(n: int, k: int):
    it = itertools.permutations(range(n), k)
    while True:
        rows = list(itertools.islice(it, _CHUNK_ROWS))
        if not rows:
            return
        yield np.array(rows, dtype=np.int16).reshape(len(rows), k)


def _traces(sx: np.ndarray, sy: np.ndarray, maps: np.ndarray) -> np.ndarray:
    """Signed trace for each row of ``maps`` (X vertex i -> Y vertex maps[:, i])."""
    k = sx.shape[0]
    if k < 2:
        return np.zeros(len(maps), dtype=np.int64)
    iu, ju = np.triu_indices(k, 1)
    aligned = sy[maps[:, iu], maps[:, ju]].astype(np.float32)
    return 2 * (aligned @ sx[iu, ju].astype(np.float32)).astype(np.int64)


def _scan(x: Graph, y: Graph, chunks) -> tuple[int, int, tuple[int, ...], int]:
    sx, sy = x.signed(), y.signed()
    best, count, witness, work = None, 0, (), 0
    for maps in chunks:
        tr = _traces(sx, sy, maps)
        work += len(maps)
        top = int(tr.max())
        if best is None or top > best:
            best, count = top, int((tr == top).sum())
            witness = tuple(int(t) for t in maps[int(np.argmax(tr))])
        elif top == best:
            count += int((tr == top).sum())
    return best, count, witness, work


# -- same-order solvers -----------------------------------------------------

def _same_order(g: Graph, h: Graph, what: str):
    if g.n != h.n:
        raise OrderMismatch(f"{what} needs graphs of equal order, got {g.n} and {h.n}; use dot_cross_order")


def dot_exhaustive(g: Graph, h: Graph) -> DotResult:
    """Maximise the trace over all n! permutations."""
    _same_order(g, h, "dot_exhaustive")
    if g.n > EXHAUSTIVE_GUARD:
        raise GuardExceeded("dot_exhaustive", g.n, EXHAUSTIVE_GUARD, "use dot_bnb")
    value, count, witness, work = _scan(g, h, _perm_chunks(np.arange(g.n, dtype=np.int8)))
    return DotResult(value, count, witness, "exhaustive", work)


def dot_bnb(g: Graph, h: Graph, guard: int = BNB_GUARD) -> DotResult:
    """Branch-and-bound solver; same value and phase as ``dot_exhaustive``."""
    _same_order(g, h, "dot_bnb")
    guard = min(guard, BNB_HARD_LIMIT)
    if g.n > guard:
        raise GuardExceeded("dot_bnb", g.n, guard)
    n = g.n
    # phase(g, h) == phase(h, g) via p -> p^-1, so search from whichever side
    # has more twin symmetry to fold away
    if search.twin_multiplier(h) > search.twin_multiplier(g):
        out = search.count_optimal(h, g)
    else:
        out = search.count_optimal(g, h)
    wit = search.first_optimal(g, h, out.agreements)
    return DotResult(4 * out.agreements - n * (n - 1), out.count, wit.witness, "bnb", out.nodes + wit.nodes)


def dot(g: Graph, h: Graph, solver: str = "auto") -> DotResult:
    """Dot product with automatic solver choice.

    Same order: exhaustive up to n = 8, then branch-and-bound, then a
    polynomial special-family solver if ``h`` or ``g`` is recognised.
    Different orders: the cross-order product, with the smaller graph mapped
    into the larger one.
    """
    if g.n != h.n:
        from .special import BOUNDED_ORDER_GUARD, dot_bounded_order

        big, small = (g, h) if g.n > h.n else (h, g)
        if solver == "bnb" or (solver == "auto" and small.n > BOUNDED_ORDER_GUARD):
            return dot_cross_order(big, small)
        # enumeration of all injective maps is the exhaustive route here
        return dot_bounded_order(big, small)
    if solver == "exhaustive":
        return dot_exhaustive(g, h)
    if solver == "bnb":
        return dot_bnb(g, h)
    if solver == "special":
        from .special import special_dot

        res = special_dot(g, h)
        if res is None:
            raise GuardExceeded("special solver", g.n, 0, "neither graph is a recognised special family")
        return res
    if solver != "auto":
        raise ValueError(f"unknown solver {solver!r}")
    if g.n <= 8:
        return dot_exhaustive(g, h)
    if g.n <= BNB_GUARD:
        return dot_bnb(g, h)
    from .special import special_dot

    res = special_dot(g, h)
    if res is None:
        raise GuardExceeded("dot", g.n, BNB_GUARD, "no special structure to exploit")
    return res


def phase(g: Graph, h: Graph, solver: str = "auto") -> int:
    return dot(g, h, solver).phase


def squared_norm(g: Graph) -> int:
    """``G.G``, always ``n(n-1)``: the identity permutation lines every +-1 up with itself."""
    return g.n * (g.n - 1)


def norm(g: Graph) -> float:
    return squared_norm(g) ** 0.5


def norm_dot(g: Graph, h: Graph, solver: str = "auto") -> Fraction:
    """Exact ``G.H / (|G| |H|)``; equals 1 exactly when g and h are isomorphic."""
    _same_order(g, h, "norm_dot")
    if g.n < 2:
        raise ValueError("normalized dot product needs n >= 2 (zero norm)")
    return Fraction(dot(g, h, solver).value, squared_norm(g))


def metric(g: Graph, h: Graph, solver: str = "auto") -> int:
    """``|G|^2 + |H|^2 - 2 G.H``, equivalently the minimum of ``tr((A_G - P A_H P^T)^2)``."""
    _same_order(g, h, "metric")
    return squared_norm(g) + squared_norm(h) - 2 * dot(g, h, solver).value


def is_orthogonal(g: Graph, h: Graph, solver: str = "auto") -> bool:
    _same_order(g, h, "is_orthogonal")
    return dot(g, h, solver).value == 0 and dot(g, complement(h), solver).value == 0


# -- weighted (scaled) matrices ---------------------------------------------

def trace_range(g: Graph, h: Graph) -> tuple[int, int]:
    """(min, max) of the signed trace over all permutations, by enumeration."""
    _same_order(g, h, "trace_range")
    if g.n > EXHAUSTIVE_GUARD:
        raise GuardExceeded("trace_range", g.n, EXHAUSTIVE_GUARD)
    lo = hi = None
    for maps in _perm_chunks(np.arange(g.n, dtype=np.int8)):
        tr = _traces(g.signed(), h.signed(), maps)
        lo = int(tr.min()) if lo is None else min(lo, int(tr.min()))
        hi = int(tr.max()) if hi is None else max(hi, int(tr.max()))
    return lo, hi


def weighted_dot(a: SignMatrix, b: SignMatrix) -> Fraction:
    """``max_P tr(A P B P^T)`` for scaled signed matrices, exactly.

    The maximum of ``rs * t`` over traces ``t`` is ``rs * max t`` when
    ``rs > 0`` and ``rs * min t`` when ``rs < 0``.
    """
    if a.n != b.n:
        raise OrderMismatch(f"weighted_dot needs equal orders, got {a.n} and {b.n}")
    g = Graph.from_matrix(np.array(a.signs))
    h = Graph.from_matrix(np.array(b.signs))
    lo, hi = trace_range(g, h)
    scale = a.r * b.r
    return scale * (hi if scale > 0 else lo)


# -- batch tables -----------------------------------------------------------

def dot_table(rows: list[Graph], cols: list[Graph]) -> tuple[np.ndarray, np.ndarray]:
    """Exhaustive (value, phase) matrices for every (rows[i], cols[j]) pair.

    One matrix product per column graph: the permuted pairs of ``cols[j]``
    against the pair vectors of all row graphs at once. Orders must agree
    and be at most 8.
    """
    values, phases, _ = _trace_extremes(rows, cols)
    return values, phases


def _trace_extremes(rows: list[Graph], cols: list[Graph]):
    """(max trace, count of max, min trace) for every (rows[i], cols[j])."""
    shape = (len(rows), len(cols))
    values = np.zeros(shape, dtype=np.int64)
    phases = np.ones(shape, dtype=np.int64)
    minima = np.zeros(shape, dtype=np.int64)
    if not rows or not cols:
        return values, phases, minima
    n = rows[0].n
    if any(g.n != n for g in rows + cols):
        raise OrderMismatch("dot_table needs graphs of a single order")
    if n > 8:
        raise GuardExceeded("dot_table", n, 8)
    if n < 2:
        return values, phases, minima
    perms = _perm_table(n)
    iu, ju = np.triu_indices(n, 1)
    row_pairs = np.stack([g.signed()[iu, ju] for g in rows], axis=1).astype(np.float32)
    for j, h in enumerate(cols):
        aligned = h.signed()[perms[:, iu], perms[:, ju]].astype(np.float32)
        tr = aligned @ row_pairs
        top = tr.max(axis=0)
        values[:, j] = 2 * top.astype(np.int64)
        phases[:, j] = (tr == top).sum(axis=0)
        minima[:, j] = 2 * tr.min(axis=0).astype(np.int64)
    return values, phases, minima


@dataclass(frozen=True)
class QuasiOrthogonalityReport:
    n: int
    minimum: int  # min over class pairs of max(|G.H|, |G.Hbar|)
    minimizers: list[tuple[int, int]]  # catalog index pairs (i <= j) attaining it
    orthogonal: list[tuple[int, int]]


def quasi_orthogonality_scan(n: int, allow_n7: bool = False) -> QuasiOrthogonalityReport:
    """Scan all unordered pairs of n-vertex classes for the smallest achievable |dot|."""
    from .iso import enumerate_iso_classes

    guard = 7 if allow_n7 else 6
    if not 1 <= n <= guard:
        raise GuardExceeded("quasi_orthogonality_scan", n, guard)
    reps = list(enumerate_iso_classes(n))
    values, _, minima = _trace_extremes(reps, reps)
    # G.Hbar = max tr(A_G P (-A_H) P^T) = -min tr(A_G P A_H P^T)
    comp_values = -minima
    worst = np.maximum(np.abs(values), np.abs(comp_values))
    upper = np.triu(np.ones_like(worst, dtype=bool))
    minimum = int(worst[upper].min())
    pairs = lambda mask: [(int(i), int(j)) for i, j in zip(*np.nonzero(mask & upper))]
    return QuasiOrthogonalityReport(n, minimum, pairs(worst == minimum), pairs(worst == 0))


# -- cross-order product ----------------------------------------------------

def dot_cross_order(g: Graph, h: Graph, guard: int = BNB_GUARD) -> DotResult:
    """Dot product of g (order n) with a smaller h (order k) zero-padded to n.

    The phase counts injective maps V(h) -> V(g) attaining the maximum.
    """
    if h.n >= g.n:
        raise OrderMismatch(
            f"dot_cross_order needs order(h) < order(g), got {h.n} >= {g.n}; swap arguments or use dot"
        )
    guard = min(guard, BNB_HARD_LIMIT)
    if g.n > guard:
        raise GuardExceeded("dot_cross_order", g.n, guard)
    k = h.n
    out = search.count_optimal(h, g)
    wit = search.first_optimal(h, g, out.agreements)
    return DotResult(4 * out.agreements - k * (k - 1), out.count, wit.witness, "bnb-cross", out.nodes + wit.nodes)


def contains_induced(g: Graph, h: Graph) -> bool:
    """Whether h occurs in g as an induced subgraph (cross-order dot reaches ``|h|^2``)."""
    if h.n > g.n:
        return False
    return dot(g, h).value == squared_norm(h)


def count_induced(g: Graph, h: Graph) -> int:
    """Number of vertex subsets of g inducing a copy of h: phase / |Aut(h)|."""
    from .iso import automorphism_count

    if h.n > g.n:
        return 0
    res = dot(g, h)
    if res.value != squared_norm(h):
        return 0
    aut = automorphism_count(h)
    assert res.phase % aut == 0
    return res.phase // aut
