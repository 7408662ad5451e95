"""Log, antilog and Zech-logarithm tables for GF(2^k), and cyclotomic numbers.

Field elements are polynomial masks reduced modulo a primitive ``modulus``.
Exponents are taken relative to a chosen primitive element (``generator``),
which defaults to the class of ``x``.  The Zech logarithm ``zech[l]`` is the
exponent with ``1 + g^l = g^zech[l]``; ``zech[0]`` holds :data:`INFINITY`
because ``1 + 1 = 0`` has no logarithm.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import poly2

INFINITY = -1
"""Sentinel for the logarithm of zero; never a valid exponent."""

MAX_K = 20


@dataclass(frozen=True, eq=False)
class FieldTable:
    k: int
    modulus: int
    generator: int
    antilog: np.ndarray = field(repr=False)
    log: np.ndarray = field(repr=False)
    zech: np.ndarray = field(repr=False)

    @property
    def size(self) -> int:
        """Order of the multiplicative group, ``2^k - 1``."""
        return (1 << self.k) - 1

    def elem(self, exp: int) -> int:
        if exp == INFINITY:
            return 0
        return int(self.antilog[exp % self.size])

    def log_of(self, x: int) -> int:
        if x == 0:
            return INFINITY
        return int(self.log[x])

    def zech_of(self, exp: int) -> int:
        """Zech logarithm with the exponent reduced mod ``2^k - 1``."""
        return int(self.zech[exp % self.size])

    def mul(self, x: int, y: int) -> int:
        return poly2.mul_mod(x, y, self.modulus)


def build_tables(modulus, generator: int = 0b10) -> FieldTable:
    """Dense log/antilog/Zech tables for GF(2)[x]/modulus."""
    modulus = int(modulus)
    k = modulus.bit_length() - 1
    if k < 1:
        raise ValueError("constant modulus")
    if k > MAX_K:
        raise ValueError(f"field degree {k} exceeds desk-scale bound {MAX_K}")
    if not poly2.is_primitive(modulus):
        raise ValueError("field generator not primitive")
    size = (1 << k) - 1
    generator = poly2.mod(generator, modulus)
    if generator == 0 or _element_order(generator, modulus, k) != size:
        raise ValueError("field generator not primitive")

    antilog = np.zeros(size, dtype=np.int64)
    log = np.full(size + 1, INFINITY, dtype=np.int64)
    x = 1
    for i in range(size):
        antilog[i] = x
        log[x] = i
        x = poly2.mul_mod(x, generator, modulus)
    zech = np.full(size, INFINITY, dtype=np.int64)
    if size > 1:
        zech[1:] = log[antilog[1:] ^ 1]
    for arr in (antilog, log, zech):
        arr.setflags(write=False)
    return FieldTable(k, modulus, generator, antilog, log, zech)


def _element_order(x: int, modulus: int, k: int) -> int:
    e = (1 << k) - 1
    for p, _ in poly2.mersenne_factors(k):
        while e % p == 0 and poly2.pow_mod(x, e // p, modulus) == 1:
            e //= p
    return e


def default_modulus(k: int) -> int:
    """Lowest-mask primitive polynomial of degree ``k``."""
    return next(poly2.primitives(k))


@lru_cache(maxsize=None)
def table_for(g: int) -> tuple[FieldTable, int]:
    """Tables for the field of an irreducible ``g`` and its class count ``t``.

    The modulus is the lowest-mask primitive polynomial of degree ``deg g``.
    The generator is ``x^s`` for the least ``s`` coprime to ``2^k - 1`` such
    that ``generator^t`` is a root of ``g``; ``t = (2^k - 1)/order(g)``.
    """
    g = int(g)
    k = g.bit_length() - 1
    e = poly2.poly_order(g)
    size = (1 << k) - 1
    t = size // e
    modulus = default_modulus(k)
    for s in range(1, size + 1):
        if math.gcd(s, size) != 1:
            continue
        gen = poly2.pow_mod(0b10, s, modulus)
        if poly2.eval_at(g, poly2.pow_mod(gen, t, modulus), modulus) == 0:
            return build_tables(modulus, gen), t
    raise ArithmeticError("no primitive element maps onto a root of g")


@dataclass(frozen=True)
class Cyclotomy:
    t: int
    e: int
    class_of: np.ndarray = field(repr=False)


def cyclotomy(ft: FieldTable, t: int) -> Cyclotomy:
    if ft.size % t:
        raise ValueError(f"t={t} does not divide {ft.size}")
    return Cyclotomy(t, ft.size // t, np.arange(ft.size) % t)


def cyclotomic_number(ft: FieldTable, t: int, i: int, j: int) -> int:
    """``(i, j)_t``: count of ``s < e`` with ``zech(i + s*t) = j (mod t)``."""
    if t < 1 or ft.size % t:
        raise ValueError(f"t={t} does not divide {ft.size}")
    e = ft.size // t
    idx = (i + t * np.arange(e)) % ft.size
    z = ft.zech[idx]
    return int(np.count_nonzero((z != INFINITY) & (z % t == j % t)))


def cyclotomic_matrix(ft: FieldTable, t: int) -> list[list[int]]:
    """All ``(i, j)_t`` at once from one pass over the Zech table."""
    if t < 1 or ft.size % t:
        raise ValueError(f"t={t} does not divide {ft.size}")
    ell = np.arange(ft.size)
    z = ft.zech
    ok = z != INFINITY
    mat = np.zeros((t, t), dtype=np.int64)
    np.add.at(mat, (ell[ok] % t, z[ok] % t), 1)
    return mat.tolist()


def cyclotomic_t3_even(n: int, i: int, j: int) -> int:
    """Closed-form cyclotomic numbers of order 3 for even ``n``."""
    if n % 2 or n < 4:
        raise ValueError("closed form needs even n >= 4")
    h = n // 2
    A = (2**n + (-2) ** (h + 1) - 8) // 9
    B = (2**n + (-2) ** h - 2) // 9
    C = (2**n + (-2) ** (h + 1) + 1) // 9
    i, j = sorted((i % 3, j % 3))
    if (i, j) == (0, 0):
        return A
    if (i, j) == (1, 2):
        return C
    return B
