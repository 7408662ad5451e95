"""Change of basis between ``(m+n)``-stage states and component state pairs.

Row ``i`` of the basis matrix is the first ``m+n`` output bits of the
``p``-register started from the ``i``-th unit state (rows ``0..m-1``) or of the
``q``-register likewise (rows ``m..m+n-1``).  A concatenated pair ``(a, b)``
maps to the state ``(a, b) @ P`` of the product register, linearly and
commuting with the clock.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import gf2
from .lfsr import LfsrSpec


@dataclass(frozen=True)
class StateBasis:
    m: int
    n: int
    P: tuple[int, ...]
    Pinv: tuple[int, ...]

    @property
    def width(self) -> int:
        return self.m + self.n

    def rows(self) -> list[str]:
        return gf2.to_strings(list(self.P), self.width)

    def to_dict(self) -> dict:
        return {"m": self.m, "n": self.n, "P": self.rows(),
                "Pinv": gf2.to_strings(list(self.Pinv), self.width)}


def build_basis(p, q) -> StateBasis:
    sp, sq = LfsrSpec(p), LfsrSpec(q)
    m, n = sp.n_stages, sq.n_stages
    w = m + n
    rows = []
    for spec, k in ((sp, m), (sq, n)):
        for i in range(k):
            rows.append(_pack(spec.bits(1 << (k - 1 - i), w)))
    try:
        inv = gf2.inverse(rows)
    except gf2.SingularMatrixError as exc:
        raise ArithmeticError("basis matrix is singular; are p and q distinct irreducibles?") from exc
    return StateBasis(m, n, tuple(rows), tuple(inv))


def _pack(bits) -> int:
    v = 0
    for b in bits:
        v = (v << 1) | b
    return v


def state_to_ab(basis: StateBasis, v: int) -> tuple[int, int]:
    if not 0 <= v < (1 << basis.width):
        raise ValueError("state wider than m+n")
    x = gf2.vec_mat(v, list(basis.Pinv), basis.width)
    return x >> basis.n, x & ((1 << basis.n) - 1)


def ab_to_state(basis: StateBasis, a: int, b: int) -> int:
    if not 0 <= a < (1 << basis.m) or not 0 <= b < (1 << basis.n):
        raise ValueError("component state has the wrong width")
    return gf2.vec_mat((a << basis.n) | b, list(basis.P), basis.width)


@dataclass(frozen=True)
class Special:
    """Where the state ``(1, 0, ..., 0)`` sits.

    ``a3 = T^xa p_a`` and ``b3 = T^yb q_b``; the cycle holding it is
    ``Mix(a, b, c)`` with ``c = xa - yb mod gcd(e1, e2)``.
    """

    a: int
    b: int
    c: int
    a3: int
    b3: int
    xa: int
    yb: int


def locate_special(ps, basis: StateBasis) -> Special:
    """Find the cycle containing the special state from its component pair."""
    a3, b3 = state_to_ab(basis, 1 << (basis.width - 1))
    if a3 == 0 or b3 == 0:
        raise ArithmeticError("special state landed on a non-mixed cycle")
    a, xa = ps.p_index[a3]
    b, yb = ps.q_index[b3]
    return Special(a, b, (xa - yb) % ps.r, a3, b3, xa, yb)
