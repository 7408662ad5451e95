"""Polynomials over GF(2).

A polynomial is stored as a nonnegative integer coefficient mask: bit ``i``
holds the coefficient of ``x^i``, so ``0x13`` is ``x^4 + x + 1``.  The
:class:`Poly2` wrapper adds parsing, printing and a degree cap; every function
here also accepts a bare ``int``.
"""

from __future__ import annotations

import math
import random
import re
from dataclasses import dataclass
from functools import lru_cache

MAX_DEGREE = 63


@dataclass(frozen=True, order=True)
class Poly2:
    """Polynomial over GF(2) held as a coefficient bit mask."""

    mask: int

    def __post_init__(self):
        if self.mask < 0:
            raise ValueError("negative coefficient mask")
        if self.mask.bit_length() - 1 > MAX_DEGREE:
            raise ValueError(f"degree exceeds {MAX_DEGREE}")

    @property
    def degree(self) -> int | None:
        """Index of the highest set bit, ``None`` for the zero polynomial."""
        return self.mask.bit_length() - 1 if self.mask else None

    @property
    def coeffs(self) -> tuple[int, ...]:
        """Coefficients lowest degree first."""
        return tuple((self.mask >> i) & 1 for i in range(self.mask.bit_length()))

    def __int__(self):
        return self.mask

    def __index__(self):
        return self.mask

    def __str__(self):
        return to_human(self.mask)

    def hex(self) -> str:
        return hex(self.mask)

    @classmethod
    def parse(cls, text: str) -> "Poly2":
        return cls(parse(text))


def _m(a) -> int:
    return a.mask if isinstance(a, Poly2) else int(a)


def parse(text: str) -> int:
    """Parse ``"0x13"``, ``"19"``, ``"0b10011"`` or ``"x^4+x+1"`` into a mask."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty polynomial")
    if re.fullmatch(r"0[xX][0-9a-fA-F]+", s):
        return int(s, 16)
    if re.fullmatch(r"0[bB][01]+", s):
        return int(s, 2)
    if re.fullmatch(r"\d+", s):
        return int(s)
    mask = 0
    for term in s.split("+"):
        m = re.fullmatch(r"(1|0|x(?:\^(\d+))?)", term)
        if m is None:
            raise ValueError(f"cannot parse term {term!r} in {text!r}")
        if term == "0":
            continue
        exp = 0 if term == "1" else int(m.group(2) or 1)
        mask ^= 1 << exp
    return mask


def to_human(a) -> str:
    a = _m(a)
    if a == 0:
        return "0"
    terms = []
    for i in range(a.bit_length() - 1, -1, -1):
        if (a >> i) & 1:
            terms.append("1" if i == 0 else "x" if i == 1 else f"x^{i}")
    return "+".join(terms)


def degree(a) -> int:
    """Degree of a nonzero polynomial; -1 for zero."""
    return _m(a).bit_length() - 1


def mul(a, b) -> int:
    a, b = _m(a), _m(b)
    if a < b:
        a, b = b, a
    c = 0
    while b:
        if b & 1:
            c ^= a
        a <<= 1
        b >>= 1
    return c


def divmod2(a, b) -> tuple[int, int]:
    a, b = _m(a), _m(b)
    if b == 0:
        raise ZeroDivisionError("zero modulus")
    db = b.bit_length() - 1
    q = 0
    while a and a.bit_length() - 1 >= db:
        shift = a.bit_length() - 1 - db
        q ^= 1 << shift
        a ^= b << shift
    return q, a


def mod(a, m) -> int:
    return divmod2(a, m)[1]


def mul_mod(a, b, m) -> int:
    """Product ``a*b`` reduced modulo ``m``."""
    m = _m(m)
    if m == 0:
        raise ZeroDivisionError("zero modulus")
    if m.bit_length() < 2:
        raise ValueError("modulus must have degree >= 1")
    a, b = mod(a, m), mod(b, m)
    dm = m.bit_length() - 1
    top = 1 << dm
    c = 0
    while b:
        if b & 1:
            c ^= a
        b >>= 1
        a <<= 1
        if a & top:
            a ^= m
    return c


def pow_mod(a, e: int, m) -> int:
    m = _m(m)
    result = mod(1, m)
    base = mod(a, m)
    while e:
        if e & 1:
            result = mul_mod(result, base, m)
        base = mul_mod(base, base, m)
        e >>= 1
    return result


def gcd(a, b) -> int:
    a, b = _m(a), _m(b)
    if a == 0 and b == 0:
        raise ValueError("gcd of two zero polynomials")
    while b:
        a, b = b, mod(a, b)
    return a


# --- integer factoring of 2^k - 1 -------------------------------------------

_TRIAL_LIMIT = 10**6


def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for p in small:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # deterministic for n < 3.3e24
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int, rng: random.Random) -> int:
    if n % 2 == 0:
        return 2
    while True:
        c = rng.randrange(1, n)
        f = lambda x: (x * x + c) % n
        x = y = rng.randrange(2, n)
        d = 1
        while d == 1:
            x = f(x)
            y = f(f(y))
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d


def factor_int(n: int) -> dict[int, int]:
    """Prime factorisation by trial division then Pollard rho (fixed seed)."""
    if n < 1:
        raise ValueError("factor_int needs n >= 1")
    out: dict[int, int] = {}
    p = 2
    while p <= _TRIAL_LIMIT and p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n == 1:
        return out
    rng = random.Random(0x5EED)
    stack = [n]
    while stack:
        x = stack.pop()
        if x == 1:
            continue
        if _is_probable_prime(x):
            out[x] = out.get(x, 0) + 1
            continue
        d = _pollard_rho(x, rng)
        stack.extend((d, x // d))
    return dict(sorted(out.items()))


@lru_cache(maxsize=None)
def mersenne_factors(k: int) -> tuple[tuple[int, int], ...]:
    """Memoised factorisation of ``2^k - 1``."""
    return tuple(factor_int((1 << k) - 1).items())


# --- classification ---------------------------------------------------------

def _prime_divisors(n: int) -> list[int]:
    return list(factor_int(n)) if n > 1 else []


def is_irreducible(a) -> bool:
    """Rabin's test: ``x^(2^k) = x`` and ``gcd(x^(2^(k/d)) - x, a) = 1``."""
    a = _m(a)
    if a == 0:
        raise ValueError("zero polynomial")
    k = a.bit_length() - 1
    if k == 0:
        raise ValueError("constant polynomial")
    if k == 1:
        return True
    if not a & 1:
        return False
    x = 0b10

    def frob(times):
        y = x
        for _ in range(times):
            y = mul_mod(y, y, a)
        return y

    if frob(k) != mod(x, a):
        return False
    for d in _prime_divisors(k):
        if gcd(frob(k // d) ^ x, a) != 1:
            return False
    return True


def poly_order(a) -> int:
    """Least ``e`` with ``x^e = 1 mod a`` for an irreducible ``a``."""
    a = _m(a)
    if not is_irreducible(a):
        raise ValueError(f"{to_human(a)} is reducible")
    k = a.bit_length() - 1
    if a == 0b10:
        raise ValueError("x has no multiplicative order")
    e = (1 << k) - 1
    for p, _ in mersenne_factors(k):
        while e % p == 0 and pow_mod(0b10, e // p, a) == 1:
            e //= p
    return e


def is_primitive(a) -> bool:
    a = _m(a)
    if a == 0 or a.bit_length() < 2 or a == 0b10:
        return False
    if not is_irreducible(a):
        return False
    return poly_order(a) == (1 << (a.bit_length() - 1)) - 1


@dataclass(frozen=True)
class PolyClass:
    irreducible: bool
    primitive: bool
    order: int | None
    cofactor_t: int | None

    def to_dict(self) -> dict:
        return dict(irreducible=self.irreducible, primitive=self.primitive,
                    order=self.order, cofactor_t=self.cofactor_t)


def classify(a) -> PolyClass:
    a = _m(a)
    if a == 0 or a.bit_length() < 2:
        raise ValueError("constant polynomial")
    irr = is_irreducible(a)
    if not irr or a == 0b10:
        return PolyClass(irr, False, None, None)
    e = poly_order(a)
    full = (1 << (a.bit_length() - 1)) - 1
    return PolyClass(True, e == full, e, full // e)


def irreducibles(n: int):
    """All irreducible masks of degree ``n`` in increasing order."""
    for a in range(1 << n, 1 << (n + 1)):
        if is_irreducible(a):
            yield a


def primitives(n: int):
    for a in range(1 << n, 1 << (n + 1)):
        if is_primitive(a):
            yield a


def minimal_polynomial(elem: int, modulus: int) -> int:
    """Minimal polynomial of the field element ``elem`` of GF(2)[x]/modulus."""
    modulus = _m(modulus)
    conj = []
    y = mod(elem, modulus)
    while y not in conj:
        conj.append(y)
        y = mul_mod(y, y, modulus)
    # prod (X + c) with coefficients in the field; X^i coefficient list
    coeffs = [1]
    for c in conj:
        nxt = [0] * (len(coeffs) + 1)
        for i, v in enumerate(coeffs):
            nxt[i + 1] ^= v
            nxt[i] ^= mul_mod(v, c, modulus)
        coeffs = nxt
    out = 0
    for i, v in enumerate(coeffs):
        if v not in (0, 1):
            raise ArithmeticError("minimal polynomial not over GF(2)")
        out |= v << i
    return out


def eval_at(poly, elem: int, modulus: int) -> int:
    """Evaluate ``poly`` at a field element by Horner's rule."""
    poly, modulus = _m(poly), _m(modulus)
    acc = 0
    for i in range(poly.bit_length() - 1, -1, -1):
        acc = mul_mod(acc, elem, modulus) ^ ((poly >> i) & 1)
    return acc
