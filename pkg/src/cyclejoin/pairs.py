"""Conjugate pairs between cycles of the product register.

Two states are conjugate when they differ only in their first bit.  For a
state ``v = (T^i a1, T^j b1) @ P`` the conjugate is ``v + S`` where
``S = (1, 0, ..., 0) = (a3, b3) @ P``, so finding pairs splits into two
component problems, ``T^i a1 + a3 = T^-i' a2`` over ``p`` and
``T^j b1 + b3 = T^-j' b2`` over ``q``, followed by two congruences modulo
``r = gcd(e1, e2)`` that pin the phases of the mixed cycles.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from functools import cached_property

from . import poly2
from .cycles import CycleId, ProductStructure
from .field import FieldTable, cyclotomic_number, table_for
from .lfsr import LfsrSpec
from .staterep import ab_to_state


def canonical_pair(v: int, width: int) -> tuple[int, int]:
    """``(v, v_hat)`` ordered so the first state has leading bit 0."""
    top = 1 << (width - 1)
    return v & ~top, v | top


@dataclass(frozen=True)
class ConjugatePair:
    v: int
    v_hat: int
    width: int

    def __post_init__(self):
        if self.v ^ self.v_hat != 1 << (self.width - 1):
            raise ValueError("states differ in more than the first bit")

    @property
    def suffix(self) -> int:
        """The last ``width - 1`` bits shared by both states."""
        return self.v & ((1 << (self.width - 1)) - 1)

    def __str__(self):
        return format(self.v, f"0{self.width}b")


@dataclass
class PairCountReport:
    between: tuple[CycleId, CycleId]
    count: int
    pairs: list[ConjugatePair]
    ordered_count: int
    closed_form: int | None = None
    tag: str | None = None

    def to_dict(self) -> dict:
        return {"c1": str(self.between[0]), "c2": str(self.between[1]),
                "count": self.count,
                "pairs": [hex(p.v) for p in self.pairs]}


def subalgorithm(g, a1: int, a2: int, a3: int, e: int) -> list[tuple[int, int]]:
    """Every ``(i, i')`` with ``T^i a1 + a3 = T^-i' a2``, by direct stepping.

    Zero states have period 1, so a zero ``a1`` (or ``a2``) collapses the
    outer (or inner) loop to a single pass.  The inner search for ``i'`` is a
    lookup in the positions of ``T^-k a2``, walked once up front.
    """
    spec = LfsrSpec(g)
    outer = 1 if a1 == 0 else e
    inner = 1 if a2 == 0 else e
    back = {}
    x = a2
    for k in range(inner):
        back.setdefault(x, (-k) % inner)
        x = spec.step(x)
    out = []
    x = a1
    for i in range(outer):
        ip = back.get(x ^ a3)
        if ip is not None:
            out.append((i, ip))
        x = spec.step(x)
    return out


def zech_subalg(ft: FieldTable, k: int, e: int) -> list[tuple[int, int]]:
    """Subalgorithm output for ``a1 = a2 = a`` and ``a3 = T^k a`` from Zech logs."""
    if e != ft.size:
        raise ValueError("fast path requires primitive factor")
    return [(i, (-k - ft.zech_of(i - k)) % e) for i in range(e) if (i - k) % e]


class _Side:
    """Cached subalgorithm runs for one factor, with ``a3`` fixed."""

    def __init__(self, g: int, reps, index: dict, e: int, a3: int,
                 cls3: int, x3: int, use_quota: bool):
        self.g = g
        self.spec = LfsrSpec(g)
        self.reps = reps
        self.index = index
        self.e = e
        self.a3 = a3
        self.cls3 = cls3
        self.x3 = x3
        self.t = len(reps)
        self.use_quota = use_quota
        self.cache: dict[tuple[int, int], list[tuple[int, int]]] = {}
        self.scans = 0
        self._lock = threading.Lock()

    @cached_property
    def orbits(self) -> list[list[int]]:
        return [self.spec.orbit(r) for r in self.reps]

    @cached_property
    def field(self) -> FieldTable:
        return table_for(self.g)[0]

    def quota(self, c1: int, c2: int) -> int | None:
        if not self.use_quota:
            return None
        return cyclotomic_number(self.field, self.t, c1 - self.cls3, c2 - self.cls3)

    def state(self, cls: int | None, i: int) -> int:
        if cls is None:
            return 0
        return self.orbits[cls][i % self.e]

    def run(self, c1: int | None, c2: int | None) -> list[tuple[int, int]]:
        """Outputs for ``a1 = rep(c1)``, ``a2 = rep(c2)``; ``None`` means zero."""
        key = (c1, c2)
        hit = self.cache.get(key)
        if hit is not None:
            return hit
        if c1 is None and c2 is None:
            out = []
        elif c1 is None:
            out = [(0, (-self.x3) % self.e)] if c2 == self.cls3 else []
        elif c2 is None:
            out = [(self.x3, 0)] if c1 == self.cls3 else []
        elif (c2, c1) in self.cache:
            e = self.e
            out = sorted(((-ip) % e, (-i) % e) for i, ip in self.cache[(c2, c1)])
        else:
            out = self._scan(c1, c2)
        with self._lock:
            self.cache[key] = out
        return out

    def _scan(self, c1: int, c2: int) -> list[tuple[int, int]]:
        self.scans += 1
        quota = self.quota(c1, c2)
        if quota == 0:
            return []
        e = self.e
        ph2 = 0  # a2 is the class representative
        out = []
        for i, x in enumerate(self.orbits[c1]):
            hit = self.index.get(x ^ self.a3)
            if hit is not None and hit[0] == c2:
                out.append((i, (ph2 - hit[1]) % e))
                if quota is not None and len(out) == quota:
                    break
        return out


class PairFinder:
    """Conjugate pairs between any two cycles of a :class:`ProductStructure`."""

    def __init__(self, ps: ProductStructure, use_quota: bool = True):
        self.ps = ps
        sp = ps.special
        self.p_side = _Side(ps.p, ps.p_reps, ps.p_index, ps.e1, sp.a3,
                            sp.a, sp.xa, use_quota)
        self.q_side = _Side(ps.q, ps.q_reps, ps.q_index, ps.e2, sp.b3,
                            sp.b, sp.yb, use_quota)
        self._bucket_cache: dict = {}

    @staticmethod
    def _classes(cid: CycleId) -> tuple[int | None, int | None]:
        if cid.kind == CycleId.ZERO:
            return None, None
        if cid.kind == CycleId.U:
            return cid.i, None
        if cid.kind == CycleId.S:
            return None, cid.j
        return cid.i, cid.j

    def sub_p(self, a1: int | None, a2: int | None):
        return self.p_side.run(a1, a2)

    def sub_q(self, b1: int | None, b2: int | None):
        return self.q_side.run(b1, b2)

    def _buckets(self, j1, j2, by_j: bool, by_jp: bool) -> dict:
        """Second-factor outputs grouped by the residues the gates test."""
        key = (j1, j2, by_j, by_jp)
        hit = self._bucket_cache.get(key)
        if hit is not None:
            return hit
        r = self.ps.r
        out: dict = {}
        for j, jp in self.sub_q(j1, j2):
            k = (j % r if by_j else None, jp % r if by_jp else None)
            out.setdefault(k, []).append((j, jp))
        self._bucket_cache[key] = out
        return out

    def ordered_outputs(self, c1: CycleId, c2: CycleId) -> list[int]:
        """States ``v`` of ``c1`` whose conjugate lies on ``c2``."""
        ps = self.ps
        r = ps.r
        i1, j1 = self._classes(c1)
        i2, j2 = self._classes(c2)
        _, _, x1, x2 = ps.components(c1)
        _, _, x3, x4 = ps.components(c2)
        I = self.sub_p(i1, i2)
        if not I or not self.sub_q(j1, j2):
            return []
        # a cycle with both components nonzero pins one congruence:
        #   i - x1 = j - x2 for the first, i' + x3 = j' + x4 for the second
        need1 = i1 is not None and j1 is not None
        need2 = i2 is not None and j2 is not None
        buckets = self._buckets(j1, j2, need1, need2)
        out = []
        for i, ip in I:
            k = ((i - x1 + x2) % r if need1 else None,
                 (ip + x3 - x4) % r if need2 else None)
            for j, _ in buckets.get(k, ()):
                a = self.p_side.state(i1, i)
                b = self.q_side.state(j1, j)
                out.append(ab_to_state(ps.basis, a, b))
        return out

    def find(self, c1: CycleId, c2: CycleId) -> PairCountReport:
        w = self.ps.width
        outs = self.ordered_outputs(c1, c2)
        uniq = sorted({canonical_pair(v, w) for v in outs})
        pairs = [ConjugatePair(v, vh, w) for v, vh in uniq]
        return PairCountReport((c1, c2), len(pairs), pairs, len(outs))

    @property
    def scans(self) -> int:
        return self.p_side.scans


def find_conjugate_pairs(ps: ProductStructure, c1: CycleId, c2: CycleId,
                         finder: PairFinder | None = None) -> PairCountReport:
    finder = finder or PairFinder(ps)
    return finder.find(c1, c2)


# --- closed forms ------------------------------------------------------------

def _shift_list(spec: LfsrSpec, reps, index: dict, e: int, target: int,
                i1: int, i2: int) -> list[tuple[int, int]]:
    """``(d, k)`` with ``rep(i1) + T^d rep(i2) = T^k rep(target)``."""
    out = []
    x = reps[i2]
    base = reps[i1]
    for d in range(e):
        hit = index.get(base ^ x)
        if hit is not None and hit[0] == target:
            out.append((d, hit[1]))
        x = spec.step(x)
    return out


@dataclass
class ClosedForm:
    count: int | None
    tag: str
    details: dict = field(default_factory=dict)


class ClosedForms:
    """Pair counts from the shift-and-add lists of the component registers."""

    def __init__(self, ps: ProductStructure):
        self.ps = ps
        self._p: dict = {}
        self._q: dict = {}

    def p_list(self, i1, i2):
        key = (i1, i2)
        if key not in self._p:
            ps = self.ps
            self._p[key] = _shift_list(ps.p_spec, ps.p_reps, ps.p_index, ps.e1,
                                       ps.special.a, i1, i2)
        return self._p[key]

    def q_list(self, j1, j2):
        key = (j1, j2)
        if key not in self._q:
            ps = self.ps
            self._q[key] = _shift_list(ps.q_spec, ps.q_reps, ps.q_index, ps.e2,
                                       ps.special.b, j1, j2)
        return self._q[key]

    def count(self, c1: CycleId, c2: CycleId) -> ClosedForm:
        ps = self.ps
        sp = ps.special
        a, b, c, r = sp.a, sp.b, sp.c, ps.r
        if c2 < c1:
            c1, c2 = c2, c1
        Z, U, S, M = CycleId.ZERO, CycleId.U, CycleId.S, CycleId.MIX
        k1, k2 = c1.kind, c2.kind
        if k1 == Z:
            if k2 == M:
                return ClosedForm(int((c2.i, c2.j, c2.k) == (a, b, c)), "zero-special")
            return ClosedForm(0, "zero-special")
        if (k1, k2) in ((U, U), (S, S)):
            return ClosedForm(0, "same-factor")
        if (k1, k2) == (U, S):
            return ClosedForm(int((c1.i, c2.j) == (a, b)), "unique-u-s")
        if (k1, k2) == (U, M):
            if c2.j != b:
                return ClosedForm(0, "u-mix-wrong-s")
            ks = [k for _, k in self.p_list(c2.i, c1.i)]
            n = sum(1 for k in ks if (c - k - c2.k) % r == 0)
            return ClosedForm(n, "u-mix", {"k": ks})
        if (k1, k2) == (S, M):
            if c2.i != a:
                return ClosedForm(0, "s-mix-wrong-u")
            ks = [k for _, k in self.q_list(c2.j, c1.j)]
            n = sum(1 for k in ks if (c + k - c2.k) % r == 0)
            return ClosedForm(n, "s-mix", {"k": ks})
        # both mixed: (d_i, k'_i) from the first factor, (c_j, k_j) from the second
        D = self.p_list(c1.i, c2.i)
        Cq = self.q_tally(c1.j, c2.j)
        l1, l2 = c1.k, c2.k
        if c1 == c2:
            n = sum(Cq.get((d % r, (l1 - c + kp) % r), 0) for d, kp in D)
            return ClosedForm(n // 2, "mix-loop", {"doubled": n})
        n = sum(Cq.get(((l1 + d - l2) % r, (l1 - c + kp) % r), 0) for d, kp in D)
        return ClosedForm(n, "mix-mix")

    def q_tally(self, j1, j2) -> dict:
        """``(c_j mod r, k_j mod r)`` -> multiplicity."""
        key = ("tally", j1, j2)
        if key not in self._q:
            r = self.ps.r
            t: dict = {}
            for cj, kj in self.q_list(j1, j2):
                k = (cj % r, kj % r)
                t[k] = t.get(k, 0) + 1
            self._q[key] = t
        return self._q[key]


def count_closed_form(ps: ProductStructure, c1: CycleId, c2: CycleId) -> ClosedForm:
    return ClosedForms(ps).count(c1, c2)


def provably_zero(ps: ProductStructure, c1: CycleId, c2: CycleId) -> bool:
    """Pairs of cycles that cannot share a conjugate pair, decided by class indices alone."""
    sp = ps.special
    if c2 < c1:
        c1, c2 = c2, c1
    Z, U, S, M = CycleId.ZERO, CycleId.U, CycleId.S, CycleId.MIX
    k1, k2 = c1.kind, c2.kind
    if k1 == Z:
        return not (k2 == M and (c2.i, c2.j, c2.k) == (sp.a, sp.b, sp.c))
    if (k1, k2) in ((U, U), (S, S)):
        return True
    if (k1, k2) == (U, S):
        return (c1.i, c2.j) != (sp.a, sp.b)
    if (k1, k2) == (U, M):
        return c2.j != sp.b
    if (k1, k2) == (S, M):
        return c2.i != sp.a
    return False


# --- aggregate identities ----------------------------------------------------

def delta1(ps: ProductStructure, i: int, j: int) -> int:
    """Pairs between ``U(i)`` and all of ``Mix(j, b, *)``."""
    ft, t = table_for(ps.p)
    a = ps.special.a
    return cyclotomic_number(ft, t, i - j, a - j)


def delta2(ps: ProductStructure, i: int, j: int) -> int:
    """Pairs between ``S(i)`` and all of ``Mix(a, j, *)``."""
    ft, t = table_for(ps.q)
    b = ps.special.b
    return cyclotomic_number(ft, t, i - j, b - j)


def lambda_mu(ps: ProductStructure, i1: int, i2: int, j1: int, j2: int) -> int:
    """Pairs between ``Mix(i1, j1, *)`` and ``Mix(i2, j2, *)``, loops counted twice."""
    ftp, t1 = table_for(ps.p)
    ftq, t2 = table_for(ps.q)
    sp = ps.special
    lam = cyclotomic_number(ftq, t2, j2 - j1, sp.b - j1)
    mu = cyclotomic_number(ftp, t1, i2 - i1, sp.a - i1)
    return lam * mu


# --- both factors primitive --------------------------------------------------

def _require_primitive(ps: ProductStructure):
    if ps.t1 != 1 or ps.t2 != 1:
        raise ValueError("both factors must be primitive")


def count_primitive_pair(ps: ProductStructure, i: int, j: int) -> int:
    """Pairs between ``Mix(0, 0, i)`` and ``Mix(0, 0, j)`` by a Zech-log scan."""
    _require_primitive(ps)
    tm, _ = table_for(ps.p)
    tn, _ = table_for(ps.q)
    e1, e2, r, a = ps.e1, ps.e2, ps.r, ps.special.c
    n = 0
    for k in range(ps.lcm):
        if k % e2 == 0 or (k + i - j) % e1 == 0:
            continue
        if (tn.zech_of(k) - tm.zech_of(k + i - j) - j + a) % r == 0:
            n += 1
    return n // 2 if i == j else n


def count_e1_divides_e2(ps: ProductStructure, i: int, j: int) -> int:
    """The same count as a sum of cyclotomic numbers of order ``e1`` over ``q``'s field."""
    _require_primitive(ps)
    e1, e2 = ps.e1, ps.e2
    if e2 % e1:
        raise ValueError("e1 does not divide e2")
    tm, _ = table_for(ps.p)
    tn, _ = table_for(ps.q)
    a = ps.special.c
    n = 0
    for ell in range(e1):
        if (ell + i - j) % e1 == 0:
            continue
        target = (tm.zech_of(ell + i - j) + j - a) % e1
        n += cyclotomic_number(tn, e1, ell, target)
    return n // 2 if i == j else n


def is_primitive_factor(g) -> bool:
    return poly2.is_primitive(g)
