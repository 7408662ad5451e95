"""Word-packed bit matrices over GF(2).

A matrix is a list of row integers of a fixed ``width``; column 0 is the most
significant bit of each row, so a row prints left-to-right like the matrix.
Vectors multiply from the left: ``x @ A`` is the XOR of the rows selected by
the set bits of ``x``.
"""

from __future__ import annotations


def vec_mat(x: int, rows: list[int], width_in: int) -> int:
    """Row vector ``x`` (``width_in`` bits, MSB first) times matrix ``rows``."""
    out = 0
    for i, r in enumerate(rows):
        if (x >> (width_in - 1 - i)) & 1:
            out ^= r
    return out


def mat_mul(a: list[int], b: list[int], inner: int) -> list[int]:
    return [vec_mat(r, b, inner) for r in a]


def identity(n: int) -> list[int]:
    return [1 << (n - 1 - i) for i in range(n)]


def rank(rows: list[int], width: int) -> int:
    rows = list(rows)
    r = 0
    for col in range(width):
        bit = 1 << (width - 1 - col)
        piv = next((i for i in range(r, len(rows)) if rows[i] & bit), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i] & bit:
                rows[i] ^= rows[r]
        r += 1
    return r


class SingularMatrixError(ArithmeticError):
    pass


def inverse(rows: list[int]) -> list[int]:
    """Gauss-Jordan inverse of a square bit matrix."""
    n = len(rows)
    # augmented rows: [A | I] packed as A << n | I
    aug = [(r << n) | (1 << (n - 1 - i)) for i, r in enumerate(rows)]
    for col in range(n):
        bit = 1 << (2 * n - 1 - col)
        piv = next((i for i in range(col, n) if aug[i] & bit), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        for i in range(n):
            if i != col and aug[i] & bit:
                aug[i] ^= aug[col]
    mask = (1 << n) - 1
    return [r & mask for r in aug]


def transpose(rows: list[int], width: int) -> list[int]:
    n = len(rows)
    out = []
    for c in range(width):
        v = 0
        for i, r in enumerate(rows):
            if (r >> (width - 1 - c)) & 1:
                v |= 1 << (n - 1 - i)
        out.append(v)
    return out


def to_strings(rows: list[int], width: int) -> list[str]:
    return [format(r, f"0{width}b") for r in rows]
