"""Reference values for the worked examples.

The degree-4 example uses ``p = x^4+x^3+x^2+x+1`` (order 5, not primitive)
and ``q = x^4+x+1``.  Exponent pairs ``(i, j)`` stand for the state
``(T^i p_k, T^j q) @ P``; ``None`` marks a zero component.
"""

P_EX = 0x1F
Q_EX = 0x13

# phi(alpha^j) for j = 0..14
PHI = ["1000", "0111", "0010", "0001", "1111", "0101", "0011", "1110",
       "1010", "0110", "1101", "0100", "1100", "1011", "1001"]

U_SEQS = ["10001", "01111", "00101"]
S_SEQ = "100010011010111"
P_REPS = ["1000", "0111", "0010"]
Q_REP = "1000"

BASIS_P = ["10001100", "01001010", "00101001", "00011000",
           "10001001", "01001101", "00100110", "00010011"]
SPECIAL_AB = ("1101", "0101")
SPECIAL_ABC = (1, 0, 4)

ZECH4 = [4, 8, 14, 1, 10, 13, 9, 2, 7, 5, 12, 11, 6, 3]  # tau(1..14)

# first-factor subalgorithm outputs keyed by (class of a1, class of a2); None = zero
SUBALG_P = {
    (0, 0): {(1, 1), (4, 4)},
    (0, 1): {(2, 3), (3, 1)},
    (0, 2): {(0, 4)},
    (1, 2): {(0, 3), (1, 0)},
    (2, 2): {(3, 1), (4, 2)},
    (None, 1): {(0, 2)},
    (1, 1): set(),
    (1, 0): {(2, 3), (4, 2)},
    (2, 0): {(1, 0)},
    (2, 1): {(2, 0), (0, 4)},
}
SUBALG_Q = {(None, 0): {(0, 6)}, (0, None): {(9, 0)}}

# pairs of U(0): target Mix(k, 0, l) -> exponent i of v = (T^i p_0, 0) P
CASE1 = {(0, 0): 1, (0, 2): 4, (1, 3): 2, (1, 0): 3, (2, 2): 0}

# the single pair between Mix(0,0,1) and U(2): v = (p_0, T^9 q) P
CASE2 = ((2,), (0, 9))

# pairs of Mix(0,0,1) with Mix(k,0,l): rows (k, l, i, j), v = (T^i p_0, T^j q) P
CASE3 = [
    (0, 2, 1, 0), (0, 3, 1, 5), (0, 1, 1, 10),
    (0, 0, 4, 3), (0, 4, 4, 8), (0, 1, 4, 13),
    (1, 4, 2, 1), (1, 2, 2, 6), (1, 0, 2, 11),
    (1, 3, 3, 2), (1, 4, 3, 7), (1, 1, 3, 12),
    (2, 2, 0, 4), (2, 2, 0, 14),
]

M1 = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0],
    [0, 5, 0, 0, 0, -1, 0, -1, 0, 0, -1, 0, 0, -1, 0, 0, 0, -1, 0, 0],
    [0, 0, 5, 0, -1, 0, 0, 0, -1, -1, 0, 0, 0, 0, 0, 0, -1, 0, -1, 0],
    [0, 0, 0, 5, 0, 0, -1, 0, 0, 0, 0, -1, -1, 0, 0, -1, 0, 0, 0, -1],
    [0, 0, -1, 0, 15, 0, 0, 0, 0, 0, -3, -3, -3, -3, -2, 0, 0, 0, 0, 0],
    [0, -1, 0, 0, 0, 15, -1, -3, 0, -1, 0, -1, -2, -1, -2, -1, 0, 0, -1, -1],
    [0, 0, 0, -1, 0, -1, 13, -1, -1, -1, -1, -1, -1, -1, -2, 0, 0, -2, 0, 0],
    [0, -1, 0, 0, 0, -3, -1, 15, -1, 0, -1, -2, -1, 0, -2, -1, -1, 0, 0, -1],
    [0, 0, -1, 0, 0, 0, -1, -1, 13, -2, 0, -1, -1, -3, 0, -1, -1, 0, -1, 0],
    [0, 0, -1, 0, 0, -1, -1, 0, -2, 13, -3, -1, -1, 0, 0, 0, -1, 0, -1, -1],
    [0, -1, 0, 0, -3, 0, -1, -1, 0, -3, 15, 0, 0, 0, 0, -2, -1, -1, -1, -1],
    [0, 0, 0, -1, -3, -1, -1, -2, -1, -1, 0, 15, 0, 0, 0, 0, 0, -1, -3, -1],
    [0, 0, 0, -1, -3, -2, -1, -1, -1, -1, 0, 0, 15, 0, 0, -1, -3, -1, 0, 0],
    [0, -1, 0, 0, -3, -1, -1, 0, -3, 0, 0, 0, 0, 15, 0, -1, -1, -1, -1, -2],
    [-1, 0, 0, 0, -2, -2, -2, -2, 0, 0, 0, 0, 0, 0, 15, -2, 0, -2, 0, -2],
    [0, 0, 0, -1, 0, -1, 0, -1, -1, 0, -2, 0, -1, -1, -2, 15, 0, -1, -1, -3],
    [0, 0, -1, 0, 0, 0, 0, -1, -1, -1, -1, 0, -3, -1, 0, 0, 13, -1, -2, -1],
    [0, -1, 0, 0, 0, 0, -2, 0, 0, 0, -1, -1, -1, -1, -2, -1, -1, 13, -1, -1],
    [0, 0, -1, 0, 0, -1, 0, 0, -1, -1, -1, -3, 0, -1, 0, -1, -2, -1, 13, 0],
    [0, 0, 0, -1, 0, -1, 0, -1, 0, -1, -1, -1, 0, -2, -2, -3, -1, -1, 0, 15],
]
TREES_EX = 2_003_859_941_621_760_000
LOG2_TREES_EX = 60.797
LOG2_ESTIMATE_EX = 61.397

# trees per primitive p of degree n for (x^2+x+1) p
TRINOMIAL_COUNTS = {3: 20, 4: 2880, 5: 92, 6: 240448, 7: 380, 8: 16431936,
          9: 1532, 10: 1068137280}

ORDER5 = {
    "p": 0x7, "q": 0xB,
    "tree": ["00000", "11011", "10110"],
    "seq": "00000111110101001101110010110001",
    "anf": "x1x2x3x4+x1x2x4+x1x2+x1x3+x1x4+x2x4+x3x4+x0+x1+x2+x3+1",
    "trees": 20,
}
ORDER6 = {
    "p": 0x7, "q": 0x13,
    "tree": ["000000", "100110", "101101", "011011", "110110"],
    "seq": "1000000110111010001111110110000101010010110101111000100110011100",
    "trees": 2880,
}
SMALL_DEBRUIJN = ("11000101", 3)
