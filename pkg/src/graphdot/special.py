"""Polynomial-time dot products against stars, clique splits and small graphs.

Every solver decomposes the agreement count over vertex pairs by the role
each pair plays in the fixed special graph H. For a star or a split, H is
determined up to relabeling by which vertices of g land on each role, so
enumerating role assignments (a centre, or a subset of bounded size) and
scoring each one in closed form finds the optimum. The number of optimal
permutations is then the number of optimal role assignments times the
orderings inside each role, which is exact: a permutation determines its
role assignment uniquely.
"""

from __future__ import annotations

from itertools import combinations
from math import comb, factorial

from .engine import DotResult, _injection_chunks, _scan
from .errors import GuardExceeded
from .graph import Graph

SPLIT_GUARD = 4
BOUNDED_ORDER_GUARD = 5


def _result(g: Graph, agreements: int, phase: int, witness, solver: str, work: int) -> DotResult:
    return DotResult(4 * agreements - g.n * (g.n - 1), phase, tuple(witness), solver, work)


def dot_star(g: Graph, k: int) -> DotResult:
    """Dot product of g with the n-vertex star ``S_k`` (centre 0, leaves 1..k).

    Put the centre on w (degree d) and x of the k leaves on neighbours of w.
    Pairs avoiding w are non-edges of H and agree on the
    ``C(n-1, 2) - (m - d)`` non-edges of g - w. Pairs at w agree on the x
    neighbour-leaves and on the ``n-1-d-(k-x)`` non-neighbours left isolated.
    The sum is ``C(n-1, 2) - m + (n-1-k) + 2x``, maximised by
    ``x = min(k, d)``, so each centre is scored in O(1) after an O(n^2)
    degree pass.
    """
    n = g.n
    if not 0 <= k <= n - 1:
        raise GuardExceeded("dot_star leaf count", k, n - 1, "need 0 <= k <= n-1")
    work = 0
    deg = []
    for w in range(n):
        d = 0
        for u in range(n):
            work += 1
            d += g.adj[w] >> u & 1
        deg.append(d)
    m = sum(deg) // 2
    base = comb(n - 1, 2) - m + (n - 1 - k)
    scores = [base + 2 * min(k, d) for d in deg]
    best = max(scores)
    phase = 0
    for w, d in enumerate(deg):
        if scores[w] == best:
            x = min(k, d)
            phase += comb(d, x) * comb(n - 1 - d, k - x)
    phase *= factorial(k) * factorial(n - 1 - k)

    w = scores.index(best)
    x = min(k, deg[w])
    nbrs = [u for u in range(n) if g.has_edge(w, u)]
    others = [u for u in range(n) if u != w and not g.has_edge(w, u)]
    leaves = sorted(nbrs[:x] + others[: k - x])
    rest = [u for u in range(n) if u != w and u not in leaves]
    witness = [0] * n
    for label, u in enumerate([w] + leaves + rest):
        witness[u] = label
    return _result(g, best, phase, witness, "star", work)


def _part_agreement(size: int, edges_inside: int, is_clique: bool) -> int:
    return edges_inside if is_clique else comb(size, 2) - edges_inside


def dot_clique_split(g: Graph, r: int, clique_rest: bool) -> DotResult:
    """Dot product of g with ``K_r + K_{n-r}`` (``clique_rest``) or ``K_r + coclique_{n-r}``.

    H's clique sits on labels ``0..r-1``. Subsets of the smaller part are
    enumerated (at most ``SPLIT_GUARD`` vertices), so the cost is
    ``O(n^s * s^2)`` with ``s = min(r, n-r)``. For a subset T on one part and
    its complement U on the other, all T-U pairs are non-edges of H and
    agree on the cut's non-edges; the inner pairs agree on edges or
    non-edges depending on each part's type.
    """
    n = g.n
    if not 1 <= r <= n:
        raise GuardExceeded("dot_clique_split r", r, n, "need 1 <= r <= n")
    s = min(r, n - r)
    if s > SPLIT_GUARD:
        raise GuardExceeded("dot_clique_split", s, SPLIT_GUARD, "smaller part too large for subset enumeration")
    # the enumerated subset T fills the smaller part
    t_first = s == r
    t_clique, u_clique = (True, clique_rest) if t_first else (clique_rest, True)

    work = 0
    deg = []
    for w in range(n):
        d = 0
        for u in range(n):
            work += 1
            d += g.adj[w] >> u & 1
        deg.append(d)
    m = sum(deg) // 2

    best, count, best_t = -1, 0, None
    for subset in combinations(range(n), s):
        e_t = 0
        for a, b in combinations(subset, 2):
            work += 1
            e_t += g.adj[a] >> b & 1
        cut = sum(deg[v] for v in subset) - 2 * e_t
        work += s
        e_u = m - e_t - cut
        agree = (
            _part_agreement(s, e_t, t_clique)
            + _part_agreement(n - s, e_u, u_clique)
            + s * (n - s) - cut
        )
        if agree > best:
            best, count, best_t = agree, 1, subset
        elif agree == best:
            count += 1
    phase = count * factorial(s) * factorial(n - s)

    rest = [v for v in range(n) if v not in best_t]
    first, second = (list(best_t), rest) if t_first else (rest, list(best_t))
    witness = [0] * n
    for label, v in enumerate(first + second):
        witness[v] = label
    return _result(g, best, phase, witness, "split", work)


def dot_bounded_order(g: Graph, h: Graph, guard: int = BOUNDED_ORDER_GUARD) -> DotResult:
    """Cross-order dot product by trying every injective map V(h) -> V(g).

    ``n!/(n-k)!`` maps, polynomial in n for fixed k. The witness is the
    lexicographically smallest optimal map.
    """
    k = h.n
    if k > guard:
        raise GuardExceeded("dot_bounded_order", k, guard)
    if k > g.n:
        raise GuardExceeded("dot_bounded_order", k, g.n, "h must not be larger than g")
    value, phase, witness, work = _scan(h, g, _injection_chunks(g.n, k))
    return DotResult(value, phase, witness, "bounded-order", work)


# -- recognition --------------------------------------------------------------

def recognise_star(h: Graph) -> tuple[int, list[int]] | None:
    """``(k, relabel)`` if h is an n-vertex star; ``relabel`` maps ``star(n, k)`` labels onto h."""
    k = h.size
    deg = h.degrees()
    for c in range(h.n):
        if deg[c] == k:
            leaves = [u for u in range(h.n) if h.has_edge(c, u)]
            if all(deg[u] == 1 for u in leaves):
                rest = [u for u in range(h.n) if u != c and u not in leaves]
                return k, [c] + leaves + rest
    return None


def _components(h: Graph) -> list[list[int]]:
    seen, comps = set(), []
    for v in range(h.n):
        if v in seen:
            continue
        stack, comp = [v], []
        seen.add(v)
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in range(h.n):
                if h.has_edge(u, w) and w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def recognise_split(h: Graph) -> tuple[int, bool, list[int]] | None:
    """``(r, clique_rest, relabel)`` if h is ``K_r + K_{n-r}`` or ``K_r + coclique``."""
    comps = _components(h)
    is_clique = lambda c: all(h.has_edge(a, b) for a, b in combinations(c, 2))
    if not all(is_clique(c) for c in comps):
        return None
    big = [c for c in comps if len(c) > 1]
    if len(big) <= 1:
        clique = big[0] if big else comps[0]
        rest = sorted(set(range(h.n)) - set(clique))
        return len(clique), False, clique + rest
    if len(comps) == 2:
        a, b = sorted(comps, key=lambda c: (len(c), c))
        return len(a), True, a + b
    return None


def _compose(res: DotResult, relabel: list[int]) -> DotResult:
    return DotResult(res.value, res.phase, tuple(relabel[t] for t in res.witness), res.solver, res.work)


def _invert(res: DotResult) -> DotResult:
    inv = [0] * len(res.witness)
    for i, t in enumerate(res.witness):
        inv[t] = i
    return DotResult(res.value, res.phase, tuple(inv), res.solver, res.work)


def special_dot(g: Graph, h: Graph) -> DotResult | None:
    """Same-order dot via a special-family solver, or None if neither graph qualifies."""
    for x, y, flip in ((g, h, False), (h, g, True)):
        res = None
        star = recognise_star(y)
        if star is not None:
            res = _compose(dot_star(x, star[0]), star[1])
        else:
            split = recognise_split(y)
            if split is not None and min(split[0], y.n - split[0]) <= SPLIT_GUARD:
                res = _compose(dot_clique_split(x, split[0], split[1]), split[2])
        if res is not None:
            return _invert(res) if flip else res
    return None
