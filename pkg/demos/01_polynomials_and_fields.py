"""Classify a few GF(2) polynomials, then look inside GF(16).

The polynomial x^4+x^3+x^2+x+1 is irreducible but its roots have order 5,
so the field elements split into t = 3 cyclotomic classes of size 5.
"""
from cyclejoin import classify, cyclotomic_number, table_for
from cyclejoin.poly2 import to_human

for mask in (0x13, 0x1F, 0x15, 0x7):
    c = classify(mask)
    print(f"{to_human(mask):<18} irreducible={c.irreducible!s:<5} "
          f"primitive={c.primitive!s:<5} order={c.order}")

ft, t = table_for(0x1F)
print(f"\nGF(2^{ft.k}) built from modulus {ft.modulus:#x}, generator {ft.generator:#x}")
print("Zech logarithms tau(1..14):", [int(ft.zech_of(i)) for i in range(1, 15)])

print(f"\ncyclotomic numbers (i, j)_{t}:")
for i in range(t):
    print("   ", [cyclotomic_number(ft, t, i, j) for j in range(t)])
