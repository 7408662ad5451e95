"""Linear feedback shift registers.

A state ``(s_0, ..., s_{n-1})`` is packed into an int with ``s_0`` as the most
significant of ``n`` bits, so ``format(state, "0nb")`` reads like the usual
notation ``(1000)``.  One clock maps it to ``(s_1, ..., s_n)`` with
``s_n = sum c_i s_i`` for the characteristic polynomial
``x^n + sum c_i x^i``.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import poly2


@dataclass(frozen=True)
class LfsrSpec:
    charpoly: int

    def __post_init__(self):
        object.__setattr__(self, "charpoly", int(self.charpoly))
        if self.charpoly.bit_length() < 2:
            raise ValueError("characteristic polynomial must have degree >= 1")
        if not self.charpoly & 1:
            raise ValueError("singular feedback: constant term must be 1")

    @property
    def n_stages(self) -> int:
        return self.charpoly.bit_length() - 1

    @property
    def taps(self) -> int:
        """Mask selecting the state bits that feed back."""
        n = self.n_stages
        t = 0
        for i in range(n):
            if (self.charpoly >> i) & 1:
                t |= 1 << (n - 1 - i)
        return t

    @property
    def mask(self) -> int:
        return (1 << self.n_stages) - 1

    def step(self, state: int) -> int:
        fb = (state & self.taps).bit_count() & 1
        return ((state << 1) & self.mask) | fb

    def run(self, state: int, steps: int) -> int:
        for _ in range(steps):
            state = self.step(state)
        return state

    def bits(self, state: int, length: int) -> list[int]:
        """First ``length`` output bits of the sequence whose initial state is ``state``."""
        n = self.n_stages
        out = []
        for _ in range(length):
            out.append((state >> (n - 1)) & 1)
            state = self.step(state)
        return out

    def orbit(self, state: int) -> list[int]:
        """States on the cycle through ``state``, in clocking order."""
        out = [state]
        nxt = self.step(state)
        while nxt != state:
            out.append(nxt)
            nxt = self.step(nxt)
        return out

    def period(self, state: int) -> int:
        return len(self.orbit(state))

    def __str__(self):
        return f"LFSR({poly2.to_human(self.charpoly)})"


def lfsr_next(spec: LfsrSpec, state):
    """One clock of ``spec``; accepts a packed int or a bit string such as ``"1000"``."""
    n = spec.n_stages
    if isinstance(state, str):
        if len(state) != n or set(state) - {"0", "1"}:
            raise ValueError(f"state must be {n} bits, got {state!r}")
        return format(spec.step(int(state, 2)), f"0{n}b")
    if not 0 <= state < (1 << n):
        raise ValueError(f"state does not fit in {n} stages")
    return spec.step(state)


def bits_to_int(bits) -> int:
    if isinstance(bits, str):
        return int(bits.replace(" ", ""), 2) if bits.strip() else 0
    v = 0
    for b in bits:
        v = (v << 1) | (int(b) & 1)
    return v


def int_to_bits(v: int, width: int) -> str:
    return format(v, f"0{width}b")


def window(bits, start: int, width: int) -> int:
    """Packed state read cyclically from a bit list."""
    N = len(bits)
    v = 0
    for i in range(width):
        v = (v << 1) | bits[(start + i) % N]
    return v
