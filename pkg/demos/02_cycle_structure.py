"""Cycle structure of the LFSR with characteristic polynomial p*q.

With p = x^4+x^3+x^2+x+1 and q = x^4+x+1 the 256 states fall into the zero
cycle, three cycles from p alone, one from q alone and fifteen mixed cycles.
"""
from cyclejoin import decompose_product

ps = decompose_product(0x1F, 0x13)
print(f"e1={ps.e1} e2={ps.e2} t1={ps.t1} t2={ps.t2} r={ps.r} "
      f"-> {len(ps.order)} cycles on {ps.width}-bit states, {ps.chi} of them mixed")

for cid in ps.order:
    rep = ps.rep(cid)
    print(f"  {str(cid):<14} period {ps.period(cid):>3}  rep {rep:0{ps.width}b}")

sp = ps.special
print(f"\nspecial state sits at (a, b, c) = ({sp.a}, {sp.b}, {sp.c})")
print("basis rows:", *ps.basis.rows())
