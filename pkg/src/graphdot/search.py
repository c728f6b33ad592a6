"""Branch-and-bound over injective vertex assignments.

Objective: map the vertices of a graph X (order k) injectively into a graph
Y (order n >= k) so as to maximise the number of X-pairs {u, v} on which
X and Y agree (both edges or both non-edges after mapping). The signed
trace is ``4 * agreements - k(k-1)``.

The search counts *every* optimal assignment. Pruning therefore uses a
strict test (bound < incumbent), and the only symmetry reduction is the
closed-form one over twin classes of X: permuting twins of X is an
automorphism, so each orbit of maps has exactly prod(|class|!) members and
we visit only the member whose twin images increase.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

import numpy as np
from scipy.optimize import linear_sum_assignment

from .graph import Graph, twin_classes


@dataclass
class SearchOutcome:
    agreements: int
    count: int  # optimal maps, twin multiplicity included
    witness: tuple[int, ...] | None
    nodes: int


def spectral_cap(x: Graph, y: Graph) -> int:
    """Upper bound on agreements from sorted eigenvalue pairing.

    For symmetric A, B the maximum of tr(A Q B Q^T) over orthogonal Q is the
    sum of products of their eigenvalues sorted in the same order, and
    permutation matrices are orthogonal. X is zero-padded to Y's order.
    """
    k, n = x.n, y.n
    ax = np.zeros((n, n))
    ax[:k, :k] = x.signed()
    ex = np.linalg.eigvalsh(ax)
    ey = np.linalg.eigvalsh(y.signed().astype(float))
    trace_cap = float(np.dot(np.sort(ex), np.sort(ey)))
    return int(np.floor((trace_cap + k * (k - 1)) / 4 + 1e-7))


def twin_multiplier(g: Graph) -> int:
    m = 1
    for cls in twin_classes(g):
        m *= factorial(len(cls))
    return m


class _Search:
    def __init__(self, x: Graph, y: Graph, order: list[int], target: int | None):
        self.k, self.n = x.n, y.n
        self.sx = x.signed().astype(np.int32)
        self.sy = y.signed().astype(np.int32)
        self.ax = x.adjacency_matrix().astype(np.int32)
        self.ay = y.adjacency_matrix().astype(np.int32)
        self.order = order
        self.prev_twin = [-1] * self.k
        pos = {v: i for i, v in enumerate(order)}
        for cls in twin_classes(x):
            members = sorted(cls, key=pos.__getitem__)
            for a, b in zip(members, members[1:]):
                self.prev_twin[b] = a
        self.cap = spectral_cap(x, y)
        self.image = [-1] * self.k
        self.used = [False] * self.n
        self.target = target
        # counting mode keeps the incumbent in best; witness mode stops at target
        self.best = -1 if target is None else target
        self.count = 0
        self.witness: tuple[int, ...] | None = None
        self.nodes = 0
        self.done = False

    def run(self) -> SearchOutcome:
        self._node(0, 0)
        return SearchOutcome(self.best, self.count, self.witness, self.nodes)

    def _leaf(self, agreements: int):
        if self.target is not None:
            if agreements == self.target:
                self.count = 1
                self.witness = tuple(self.image)
                self.done = True
            return
        if agreements > self.best:
            self.best, self.count = agreements, 1
            self.witness = tuple(self.image)
        elif agreements == self.best:
            self.count += 1

    def _node(self, depth: int, fixed: int):
        self.nodes += 1
        rest_x = self.order[depth:]
        rest_y = [t for t in range(self.n) if not self.used[t]]
        r, m = len(rest_x), len(rest_y)
        done_x = self.order[:depth]
        done_y = [self.image[u] for u in done_x]

        # cross[a, b]: agreements between rest_x[a] -> rest_y[b] and the assigned vertices
        if depth:
            prod = self.sx[np.ix_(done_x, rest_x)].T @ self.sy[np.ix_(done_y, rest_y)]
            cross = (depth + prod) // 2
        else:
            cross = np.zeros((r, m), dtype=np.int64)

        v = rest_x[0]
        lo = self.image[self.prev_twin[v]] + 1 if self.prev_twin[v] >= 0 else 0
        if r == 1:
            for b, t in enumerate(rest_y):
                if t < lo:
                    continue
                self.image[v] = t
                self._leaf(fixed + int(cross[0, b]))
                self.image[v] = -1
                if self.done:
                    return
            return

        # inner[a, b]: best case for rest_x[a]'s pairs inside the unassigned part
        dx = self.ax[np.ix_(rest_x, rest_x)].sum(axis=1)[:, None]
        dy = self.ay[np.ix_(rest_y, rest_y)].sum(axis=1)[None, :]
        inner = np.minimum(dx, dy) + np.minimum(r - 1 - dx, m - 1 - dy)
        # inner pairs are seen from both ends, hence the doubled cross term
        score = 2 * cross + inner
        greedy = fixed + int(score.max(axis=1).sum()) // 2
        if min(greedy, self.cap) < self.best:
            return
        rows, cols = linear_sum_assignment(score, maximize=True)
        bound = fixed + int(score[rows, cols].sum()) // 2
        if min(bound, self.cap) < self.best:
            return

        children = [(b, t) for b, t in enumerate(rest_y) if t >= lo]
        if self.target is None:
            children.sort(key=lambda bt: (-score[0, bt[0]], bt[1]))
        for b, t in children:
            self.image[v] = t
            self.used[t] = True
            self._node(depth + 1, fixed + int(cross[0, b]))
            self.used[t] = False
            self.image[v] = -1
            if self.done:
                return


def degree_order(g: Graph) -> list[int]:
    deg = g.degrees()
    return sorted(range(g.n), key=lambda v: (-deg[v], v))


def count_optimal(x: Graph, y: Graph) -> SearchOutcome:
    """Maximum agreement count and the number of maps attaining it."""
    out = _Search(x, y, degree_order(x), None).run()
    out.count *= twin_multiplier(x)
    return out


def first_optimal(x: Graph, y: Graph, agreements: int) -> SearchOutcome:
    """Lexicographically smallest map (as the tuple of images) reaching ``agreements``."""
    return _Search(x, y, list(range(x.n)), agreements).run()
