"""Cycle structure of LFSRs with characteristic polynomial ``p*q``.

For an irreducible ``g`` of order ``e`` the nonzero states split into
``t = (2^deg - 1)/e`` cycles of length ``e``.  For distinct irreducibles ``p``
and ``q`` the product register has the zero cycle, the ``t1`` cycles of ``p``
(``U(i)``), the ``t2`` cycles of ``q`` (``S(j)``) and ``t1*t2*gcd(e1, e2)``
mixed cycles ``Mix(i, j, k) = [L^k u_i + s_j]`` of length ``lcm(e1, e2)``.

Component cycles are labelled through the map ``phi`` from field elements to
states, so that ``U(i)`` corresponds to the cyclotomic class ``C_i``.  That
labelling makes the cyclotomic-number identities line up index for index.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from functools import cached_property

import numpy as np

from . import gf2, poly2
from .field import FieldTable, table_for
from .lfsr import LfsrSpec, bits_to_int, int_to_bits, lfsr_next  # noqa: F401
from .staterep import Special, StateBasis, ab_to_state, build_basis, locate_special


@dataclass(frozen=True, order=True)
class CycleId:
    """``kind`` sorts Zero < U < S < Mix; then by indices."""

    kind: int
    i: int = 0
    j: int = 0
    k: int = 0

    ZERO = 0
    U = 1
    S = 2
    MIX = 3

    @classmethod
    def zero(cls):
        return cls(cls.ZERO)

    @classmethod
    def u(cls, i):
        return cls(cls.U, i)

    @classmethod
    def s(cls, j):
        return cls(cls.S, 0, j)

    @classmethod
    def mix(cls, i, j, k):
        return cls(cls.MIX, i, j, k)

    def __str__(self):
        if self.kind == self.ZERO:
            return "ZERO"
        if self.kind == self.U:
            return f"U{self.i}"
        if self.kind == self.S:
            return f"S{self.j}"
        return f"MIX:{self.i},{self.j},{self.k}"

    @classmethod
    def parse(cls, text: str) -> "CycleId":
        t = text.strip().upper()
        if t in ("ZERO", "Z", "0"):
            return cls.zero()
        if t.startswith("MIX:"):
            i, j, k = (int(x) for x in t[4:].split(","))
            return cls.mix(i, j, k)
        if t[0] == "U":
            return cls.u(int(t[1:]))
        if t[0] == "S":
            return cls.s(int(t[1:]))
        raise ValueError(f"bad cycle id {text!r}")


def _check_nonsingular(g: int):
    if not poly2.is_irreducible(g):
        raise ValueError(f"{poly2.to_human(g)} is reducible")
    if not g & 1:
        raise ValueError("x is not a usable characteristic polynomial")


def phi_map(ft: FieldTable, g, j: int, t: int | None = None) -> int:
    """State ``(a_{j,0}, a_{j+t,0}, ..., a_{j+(n-1)t,0})`` for ``alpha^j``.

    ``a_{j,0}`` is the constant coordinate of ``alpha^j`` in the basis
    ``1, beta, ..., beta^(n-1)`` with ``beta = alpha^t`` a root of ``g``.
    """
    g = int(g)
    n = g.bit_length() - 1
    if t is None:
        t = ft.size // poly2.poly_order(g)
    lam = _coordinate_functional(ft.modulus, ft.generator, t)
    v = 0
    for s in range(n):
        v = (v << 1) | lam(ft.elem(j + s * t))
    return v


def _coordinate_functional(modulus: int, generator: int, t: int):
    k = modulus.bit_length() - 1
    beta = poly2.pow_mod(generator, t, modulus)
    rows = [poly2.pow_mod(beta, i, modulus) for i in range(k)]
    # mask bit c <-> column (k-1-c); same convention for rows and vectors
    inv = gf2.inverse(rows)

    def lam(x: int) -> int:
        return (gf2.vec_mat(x, inv, k) >> (k - 1)) & 1

    return lam


def decompose_irreducible(g, method: str = "phi") -> list[int]:
    """One state per nonzero cycle of ``Omega(g)``.

    ``method="phi"`` returns ``phi(alpha^i)`` for class ``i = 0..t-1``;
    ``method="sweep"`` walks every nonzero state and returns the least state
    of each orbit in increasing order.
    """
    g = int(g)
    _check_nonsingular(g)
    if method == "phi":
        ft, t = table_for(g)
        return [phi_map(ft, g, i, t) for i in range(t)]
    if method == "sweep":
        spec = LfsrSpec(g)
        seen = bytearray(1 << spec.n_stages)
        reps = []
        for v in range(1, 1 << spec.n_stages):
            if seen[v]:
                continue
            reps.append(v)
            for w in spec.orbit(v):
                seen[w] = 1
        return reps
    raise ValueError(f"unknown method {method!r}")


def index_cycles(g: int, reps: list[int]) -> dict[int, tuple[int, int]]:
    """Map every nonzero state to ``(cycle index, phase)`` with ``state = T^phase rep``."""
    spec = LfsrSpec(g)
    out = {}
    for ci, rep in enumerate(reps):
        for ph, v in enumerate(spec.orbit(rep)):
            out[v] = (ci, ph)
    return out


@dataclass(frozen=True, eq=False)
class ProductStructure:
    p: int
    q: int
    m: int
    n: int
    e1: int
    e2: int
    t1: int
    t2: int
    r: int
    p_reps: tuple[int, ...]
    q_reps: tuple[int, ...]
    basis: StateBasis = field(repr=False)
    p_index: dict = field(repr=False)
    q_index: dict = field(repr=False)
    special: Special | None = None

    @property
    def f(self) -> int:
        return poly2.mul(self.p, self.q)

    @property
    def width(self) -> int:
        return self.m + self.n

    @property
    def lcm(self) -> int:
        return self.e1 * self.e2 // self.r

    @property
    def chi(self) -> int:
        return self.t1 * self.t2 * self.r

    @cached_property
    def order(self) -> list[CycleId]:
        ids = [CycleId.zero()]
        ids += [CycleId.u(i) for i in range(self.t1)]
        ids += [CycleId.s(j) for j in range(self.t2)]
        ids += [CycleId.mix(i, j, k) for i in range(self.t1)
                for j in range(self.t2) for k in range(self.r)]
        return ids

    @cached_property
    def position(self) -> dict[CycleId, int]:
        return {c: n for n, c in enumerate(self.order)}

    @cached_property
    def p_spec(self) -> LfsrSpec:
        return LfsrSpec(self.p)

    @cached_property
    def q_spec(self) -> LfsrSpec:
        return LfsrSpec(self.q)

    @cached_property
    def spec(self) -> LfsrSpec:
        return LfsrSpec(self.f)

    def components(self, cid: CycleId) -> tuple[int, int, int, int]:
        """``(a, b, x1, x2)`` with ``(T^x1 a, T^x2 b) @ P`` a state of ``cid``."""
        if cid.kind == CycleId.ZERO:
            return 0, 0, 0, 0
        if cid.kind == CycleId.U:
            return self.p_reps[cid.i], 0, 0, 0
        if cid.kind == CycleId.S:
            return 0, self.q_reps[cid.j], 0, 0
        return self.p_reps[cid.i], self.q_reps[cid.j], cid.k, 0

    def rep(self, cid: CycleId) -> int:
        """Representative ``(m+n)``-stage state ``(T^k p_i, q_j) @ P``."""
        a, b, x1, x2 = self.components(cid)
        a = self.p_spec.run(a, x1) if a else 0
        b = self.q_spec.run(b, x2) if b else 0
        return ab_to_state(self.basis, a, b)

    @property
    def reps(self) -> dict[CycleId, int]:
        return {c: self.rep(c) for c in self.order}

    def period(self, cid: CycleId) -> int:
        return {CycleId.ZERO: 1, CycleId.U: self.e1,
                CycleId.S: self.e2, CycleId.MIX: self.lcm}[cid.kind]

    def classify_state(self, v: int) -> CycleId:
        """Cycle holding an arbitrary ``(m+n)``-stage state."""
        from .staterep import state_to_ab
        a, b = state_to_ab(self.basis, v)
        if a == 0 and b == 0:
            return CycleId.zero()
        if b == 0:
            return CycleId.u(self.p_index[a][0])
        if a == 0:
            return CycleId.s(self.q_index[b][0])
        i, xa = self.p_index[a]
        j, yb = self.q_index[b]
        return CycleId.mix(i, j, (xa - yb) % self.r)

    def label_states(self) -> np.ndarray:
        """Cycle position of every state, by walking each representative's orbit."""
        lab = np.full(1 << self.width, -1, dtype=np.int32)
        spec = self.spec
        for pos, cid in enumerate(self.order):
            for v in spec.orbit(self.rep(cid)):
                lab[v] = pos
        return lab

    def to_dict(self) -> dict:
        return {
            "p": hex(self.p), "q": hex(self.q), "f": hex(self.f),
            "m": self.m, "n": self.n, "e1": self.e1, "e2": self.e2,
            "t1": self.t1, "t2": self.t2, "r": self.r,
            "special": None if self.special is None else {
                "a": self.special.a, "b": self.special.b, "c": self.special.c},
            "cycles": [{"id": str(c), "period": self.period(c),
                        "rep": hex(self.rep(c))} for c in self.order],
        }


def decompose_product(p, q, method: str = "phi") -> ProductStructure:
    """Full cycle structure of ``Omega(p*q)`` with one state per cycle."""
    p, q = int(p), int(q)
    if p == q:
        raise ValueError("p and q must be distinct")
    _check_nonsingular(p)
    _check_nonsingular(q)
    m, n = p.bit_length() - 1, q.bit_length() - 1
    e1, e2 = poly2.poly_order(p), poly2.poly_order(q)
    t1, t2 = ((1 << m) - 1) // e1, ((1 << n) - 1) // e2
    p_reps = decompose_irreducible(p, method)
    q_reps = decompose_irreducible(q, method)
    basis = build_basis(p, q)
    ps = ProductStructure(
        p, q, m, n, e1, e2, t1, t2, math.gcd(e1, e2),
        tuple(p_reps), tuple(q_reps), basis,
        index_cycles(p, p_reps), index_cycles(q, q_reps))
    return replace(ps, special=locate_special(ps, basis))


def sweep_cycles(charpoly) -> list[list[int]]:
    """Every cycle of the register as a list of states (oracle path)."""
    spec = LfsrSpec(charpoly)
    seen = bytearray(1 << spec.n_stages)
    out = []
    for v in range(1 << spec.n_stages):
        if not seen[v]:
            orb = spec.orbit(v)
            for w in orb:
                seen[w] = 1
            out.append(orb)
    return out
