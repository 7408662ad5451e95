"""Adjacency multigraph of the cycles and spanning-tree counts.

Vertices are the cycles of the product register in canonical order.  The
label on an edge is the number of conjugate pairs shared by its two cycles.
Loops (pairs inside a single cycle) are kept for reporting but never enter
the Laplacian-style matrix ``M``; any cofactor of ``M`` counts spanning trees,
and therefore the de Bruijn sequences obtainable by cycle joining.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import poly2
from .cycles import CycleId, ProductStructure
from .pairs import ConjugatePair, PairFinder, provably_zero


@dataclass
class AdjacencyGraph:
    order: list[CycleId]
    edges: np.ndarray
    loops: np.ndarray
    pair_lists: dict[tuple[int, int], list[ConjugatePair]] = field(repr=False)
    stages: int = 0
    chi: int = 0

    @property
    def size(self) -> int:
        return len(self.order)

    def laplacian(self) -> np.ndarray:
        """``M``: row sums of edge labels on the diagonal, negated labels elsewhere."""
        e = self.edges.astype(object)
        M = -e
        for i in range(self.size):
            M[i, i] = int(e[i].sum())
        return M

    def edge_count(self, c1: CycleId, c2: CycleId) -> int:
        pos = {c: n for n, c in enumerate(self.order)}
        return int(self.edges[pos[c1], pos[c2]])

    def is_connected(self) -> bool:
        n = self.size
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for y in np.nonzero(self.edges[x])[0]:
                y = int(y)
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == n

    def permuted(self, perm) -> "AdjacencyGraph":
        """Same graph with vertex ``k`` of the result being vertex ``perm[k]`` here."""
        perm = list(perm)
        inv = {old: new for new, old in enumerate(perm)}
        pl = {}
        for (a, b), v in self.pair_lists.items():
            x, y = inv[a], inv[b]
            pl[(min(x, y), max(x, y))] = v
        return AdjacencyGraph([self.order[k] for k in perm],
                              self.edges[np.ix_(perm, perm)].copy(),
                              self.loops[perm].copy(), pl, self.stages, self.chi)

    def to_dict(self) -> dict:
        return {
            "order": [str(c) for c in self.order],
            "M": [[int(x) for x in row] for row in self.laplacian()],
            "loops": [int(x) for x in self.loops],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_dot(self) -> str:
        lines = ["graph adjacency {"]
        for n, c in enumerate(self.order):
            lab = f"{c}" + (f" (loops {int(self.loops[n])})" if self.loops[n] else "")
            lines.append(f'  n{n} [label="{lab}"];')
        for i in range(self.size):
            for j in range(i + 1, self.size):
                if self.edges[i, j]:
                    lines.append(f'  n{i} -- n{j} [label="{int(self.edges[i, j])}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_adjacency(ps: ProductStructure, jobs: int = 1,
                    finder: PairFinder | None = None) -> AdjacencyGraph:
    order = ps.order
    N = len(order)
    finder = finder or PairFinder(ps)
    tasks = [(a, b) for a in range(N) for b in range(a, N)
             if not provably_zero(ps, order[a], order[b])]

    def work(ab):
        a, b = ab
        return ab, finder.find(order[a], order[b])

    if jobs > 1:
        _warm(finder, ps)
        with ThreadPoolExecutor(jobs) as ex:
            results = list(ex.map(work, tasks))
    else:
        results = [work(t) for t in tasks]

    edges = np.zeros((N, N), dtype=np.int64)
    loops = np.zeros(N, dtype=np.int64)
    pair_lists = {}
    for (a, b), rep in results:
        if rep.count == 0:
            continue
        if a == b:
            loops[a] = rep.count
        else:
            edges[a, b] = edges[b, a] = rep.count
        pair_lists[(a, b)] = rep.pairs
    return AdjacencyGraph(list(order), edges, loops, pair_lists, ps.width, ps.chi)


def _warm(finder: PairFinder, ps: ProductStructure):
    # fill the subalgorithm caches serially so workers only read them
    for a in [None, *range(ps.t1)]:
        for b in [None, *range(ps.t1)]:
            finder.sub_p(a, b)
    for a in [None, *range(ps.t2)]:
        for b in [None, *range(ps.t2)]:
            finder.sub_q(a, b)


def bareiss_det(rows) -> int:
    """Exact integer determinant by fraction-free elimination."""
    A = [[int(x) for x in r] for r in rows]
    n = len(A)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for s in range(k + 1, n):
                if A[s][k]:
                    A[k], A[s] = A[s], A[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            Ai = A[i]
            Ak = A[k]
            for j in range(k + 1, n):
                Ai[j] = (Ai[j] * akk - aik * Ak[j]) // prev
        prev = akk
    return sign * A[n - 1][n - 1]


def cofactor(M, i: int = 0, j: int = 0) -> int:
    M = np.asarray(M, dtype=object)
    keep_r = [x for x in range(M.shape[0]) if x != i]
    keep_c = [x for x in range(M.shape[1]) if x != j]
    minor = M[np.ix_(keep_r, keep_c)]
    return (-1) ** (i + j) * bareiss_det(minor.tolist())


@dataclass(frozen=True)
class TreeCount:
    exact: int
    estimate: float
    log2_estimate: float
    chi: int
    connected: bool

    @property
    def log2_exact(self) -> float:
        return math.log2(self.exact) if self.exact > 0 else float("-inf")

    def to_dict(self) -> dict:
        return {"exact": str(self.exact), "log2_exact": round(self.log2_exact, 6),
                "estimate": self.estimate, "log2_estimate": round(self.log2_estimate, 6),
                "chi": self.chi, "connected": self.connected}


def estimate(stages: int, chi: int) -> tuple[float, float]:
    """``(2^stages / chi)^chi`` and its base-2 logarithm."""
    lg = chi * (stages - math.log2(chi))
    return (2.0 ** lg if lg < 1000 else math.inf), lg


def best_count(g: AdjacencyGraph) -> TreeCount:
    connected = g.is_connected()
    exact = cofactor(g.laplacian()) if connected else 0
    est, lg = estimate(g.stages, g.chi)
    return TreeCount(exact, est, lg, g.chi, connected)


def theorem6_count(n: int) -> int:
    """Trees per primitive ``p`` of degree ``n`` for the product with ``x^2+x+1``."""
    if n < 3:
        raise ValueError("n must be at least 3")
    if n % 2:
        return 3 * 2**n - 4
    num = 9 * 2 ** (2 * n + 4) - (-2) ** (3 * n // 2 + 4) - 3 * 2 ** (n + 6) + 2**6
    return 2 ** (3 * n) - num // 27


def theorem6_total(n: int) -> int:
    """Summed over all primitive ``p`` of degree ``n``."""
    return theorem6_count(n) * _totient((1 << n) - 1) // n


def _totient(x: int) -> int:
    out = x
    for p in poly2.factor_int(x):
        out = out // p * (p - 1)
    return out
