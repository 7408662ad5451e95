"""Cycle joining: spanning trees of the adjacency graph to de Bruijn sequences.

Each tree edge carries one conjugate pair ``(v, v_hat)``.  Swapping the
successors of ``v`` and ``v_hat`` merges the two cycles holding them, and doing
this for every edge of a spanning tree leaves a single cycle through all
``2^w`` states.  In feedback-function terms the linear rule of ``f`` gains one
product term ``prod_{i>=1} (x_i + v_i + 1)`` per pair, which fires exactly when
the last ``w - 1`` bits of the state match those of ``v``.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from typing import Iterator

from .cycles import CycleId, ProductStructure
from .graph import AdjacencyGraph
from .lfsr import LfsrSpec
from .pairs import ConjugatePair, canonical_pair

Monomial = frozenset  # of variable indices; the empty set is the constant 1


@dataclass(frozen=True)
class SpanningChoice:
    edges: tuple[tuple[CycleId, CycleId, ConjugatePair], ...]

    def toggles(self) -> frozenset[int]:
        return frozenset(p.suffix for _, _, p in self.edges)

    def to_json(self) -> str:
        return json.dumps([{"c1": str(a), "c2": str(b), "v": format(p.v, f"0{p.width}b")}
                           for a, b, p in self.edges])

    @classmethod
    def from_json(cls, ps: ProductStructure, text: str) -> "SpanningChoice":
        states = [int(e["v"], 2) for e in json.loads(text)]
        return choice_from_states(ps, states)


@dataclass(frozen=True)
class JoinedFsr:
    base: LfsrSpec
    toggles: frozenset[int]

    @property
    def width(self) -> int:
        return self.base.n_stages

    def step(self, state: int) -> int:
        w = self.width
        fb = (state & self.base.taps).bit_count() & 1
        low = state & ((1 << (w - 1)) - 1)
        if low in self.toggles:
            fb ^= 1
        return ((state << 1) & self.base.mask) | fb


class DisconnectedGraphError(ValueError):
    pass


def _expanded_edges(g: AdjacencyGraph):
    """Multi-edges in canonical order, one per conjugate pair."""
    out = []
    for (a, b), pairs in sorted(g.pair_lists.items()):
        if a != b:
            for p in pairs:
                out.append((a, b, p))
    return out


def _simple_trees(n: int, edges: list[tuple[int, int]]) -> Iterator[list[int]]:
    """Spanning trees of a simple graph as index lists, in lexicographic order."""
    if n == 1:
        yield []
        return

    def find(parent, x):
        while parent[x] != x:
            x = parent[x]
        return x

    def reachable(avail: list[int], chosen: list[int]) -> bool:
        parent = list(range(n))
        comps = n
        for k in itertools.chain(chosen, avail):
            a, b = edges[k]
            ra, rb = find(parent, a), find(parent, b)
            if ra != rb:
                parent[ra] = rb
                comps -= 1
        return comps == 1

    def rec(start: int, chosen: list[int], parent: list[int]):
        if len(chosen) == n - 1:
            yield list(chosen)
            return
        for k in range(start, len(edges)):
            a, b = edges[k]
            ra, rb = find(parent, a), find(parent, b)
            if ra == rb:
                continue
            if not reachable(list(range(k, len(edges))), chosen):
                return
            p2 = list(parent)
            p2[ra] = rb
            chosen.append(k)
            yield from rec(k + 1, chosen, p2)
            chosen.pop()

    yield from rec(0, [], list(range(n)))


def enumerate_trees(g: AdjacencyGraph, cap: int | None = None) -> Iterator[SpanningChoice]:
    """Distinct spanning trees, deterministic order, at most ``cap`` of them."""
    if not g.is_connected():
        raise DisconnectedGraphError("adjacency graph is disconnected")
    simple = sorted((a, b) for (a, b), v in g.pair_lists.items() if a != b and v)
    produced = 0
    for idx in _simple_trees(g.size, simple):
        groups = [[(g.order[simple[k][0]], g.order[simple[k][1]], p)
                   for p in g.pair_lists[simple[k]]] for k in idx]
        for combo in itertools.product(*groups):
            if cap is not None and produced >= cap:
                return
            produced += 1
            yield SpanningChoice(tuple(combo))


def sample_trees(g: AdjacencyGraph, count: int, seed: int = 0,
                 max_tries: int | None = None) -> list[SpanningChoice]:
    """Distinct trees from randomized Kruskal restarts (not uniform)."""
    if not g.is_connected():
        raise DisconnectedGraphError("adjacency graph is disconnected")
    rng = random.Random(seed)
    edges = _expanded_edges(g)
    seen = set()
    out = []
    tries = 0
    max_tries = max_tries if max_tries is not None else 20 * count + 100
    while len(out) < count and tries < max_tries:
        tries += 1
        rng.shuffle(edges)
        parent = list(range(g.size))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        picked = []
        for a, b, p in edges:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
                picked.append((a, b, p))
        picked.sort(key=lambda e: (e[0], e[1], e[2].v))
        key = tuple(p.v for _, _, p in picked)
        if key in seen:
            continue
        seen.add(key)
        out.append(SpanningChoice(tuple((g.order[a], g.order[b], p) for a, b, p in picked)))
    return out


def choice_from_states(ps: ProductStructure, states) -> SpanningChoice:
    """Build a choice from one state of each chosen conjugate pair."""
    w = ps.width
    edges = []
    for v in states:
        v = int(v, 2) if isinstance(v, str) else int(v)
        lo, hi = canonical_pair(v, w)
        c1, c2 = ps.classify_state(lo), ps.classify_state(hi)
        if c1 == c2:
            raise ValueError(f"{v:0{w}b} and its conjugate lie on the same cycle")
        edges.append((c1, c2, ConjugatePair(lo, hi, w)))
    return SpanningChoice(tuple(edges))


def joined_fsr(ps: ProductStructure, choice: SpanningChoice) -> JoinedFsr:
    return JoinedFsr(ps.spec, choice.toggles())


def join(ps: ProductStructure, choice: SpanningChoice) -> str:
    """The de Bruijn sequence as a bit string, starting with the run of ``w`` zeros."""
    fsr = joined_fsr(ps, choice)
    return run_fsr(fsr)


def run_fsr(fsr: JoinedFsr) -> str:
    w = fsr.width
    N = 1 << w
    top = w - 1
    bits = []
    s = 0
    for step in range(N):
        bits.append((s >> top) & 1)
        s = fsr.step(s)
        if s == 0 and step < N - 1:
            raise ArithmeticError(f"joined register has period {step + 1}, not {N}")
    if s != 0:
        raise ArithmeticError("joined register did not return to the zero state")
    return "".join(map(str, bits))


def cycle_of_join(fsr: JoinedFsr, start: int) -> str:
    """Output bits of the cycle through ``start`` (useful for partial joins)."""
    bits = []
    s = start
    top = fsr.width - 1
    while True:
        bits.append((s >> top) & 1)
        s = fsr.step(s)
        if s == start:
            return "".join(map(str, bits))


# --- algebraic normal form ---------------------------------------------------

def _xor_in(acc: set, mono: Monomial):
    if mono in acc:
        acc.remove(mono)
    else:
        acc.add(mono)


def feedback_anf(ps: ProductStructure, choice: SpanningChoice | None) -> frozenset:
    """Monomial set of the joined feedback ``h(x_0, ..., x_{w-1})``."""
    w = ps.width
    acc: set = set()
    f = ps.f
    for i in range(w):
        if (f >> i) & 1:
            _xor_in(acc, frozenset([i]))
    toggles = choice.toggles() if choice is not None else ()
    for low in toggles:
        ones = [i for i in range(1, w) if (low >> (w - 1 - i)) & 1]
        zeros = [i for i in range(1, w) if not (low >> (w - 1 - i)) & 1]
        for r in range(len(zeros) + 1):
            for extra in itertools.combinations(zeros, r):
                _xor_in(acc, frozenset(ones) | frozenset(extra))
    return frozenset(acc)


def format_anf(anf) -> str:
    def key(m):
        return (-len(m), sorted(m))

    terms = []
    for m in sorted(anf, key=key):
        terms.append("".join(f"x{i}" for i in sorted(m)) if m else "1")
    return "+".join(terms) if terms else "0"


def parse_anf(text: str) -> frozenset:
    acc: set = set()
    for term in text.replace(" ", "").split("+"):
        if term == "1":
            _xor_in(acc, frozenset())
        elif term != "0":
            idx = [int(x) for x in term.split("x")[1:]]
            _xor_in(acc, frozenset(idx))
    return frozenset(acc)


def evaluate_anf(anf, state: int, width: int) -> int:
    bits = [(state >> (width - 1 - i)) & 1 for i in range(width)]
    out = 0
    for m in anf:
        out ^= all(bits[i] for i in m)
    return int(out)


def is_nonsingular_anf(anf) -> bool:
    """``x0`` appears exactly once, as a linear term."""
    with_x0 = [m for m in anf if 0 in m]
    return with_x0 == [frozenset([0])]


# --- verification ------------------------------------------------------------

def verify_debruijn(seq, order: int) -> bool:
    """True iff every cyclic window of width ``order`` is distinct."""
    bits = [int(b) for b in (seq.replace(" ", "") if isinstance(seq, str) else seq)]
    N = 1 << order
    if len(bits) != N:
        raise ValueError(f"sequence length {len(bits)} != 2^{order}")
    mask = N - 1
    seen = bytearray(N)
    v = 0
    for b in bits[:order - 1]:
        v = (v << 1) | b
    for k in range(N):
        v = ((v << 1) | bits[(k + order - 1) % N]) & mask
        if seen[v]:
            return False
        seen[v] = 1
    return True


def canonical_rotation(seq: str) -> str:
    """Lexicographically least rotation, a cyclic-class key."""
    s = seq.replace(" ", "")
    n = len(s)
    if n == 0:
        return s
    doubled = s + s
    # Booth's algorithm
    f = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        i = f[j - k - 1]
        while i != -1 and doubled[j] != doubled[k + i + 1]:
            if doubled[j] < doubled[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if i == -1 and doubled[j] != doubled[k + i + 1]:
            if doubled[j] < doubled[k + i + 1]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return doubled[k:k + n]


def same_cycle(a: str, b: str) -> bool:
    a, b = a.replace(" ", ""), b.replace(" ", "")
    return len(a) == len(b) and b in a + a


def to_hex(seq: str) -> str:
    s = seq.replace(" ", "")
    width = (len(s) + 3) // 4
    return format(int(s, 2), f"0{width}x") if s else ""
