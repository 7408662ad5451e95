"""Conjugate pairs between cycles, found by scan and by closed form.

Two states are conjugate when they differ only in their first bit.  Each pair
that straddles two cycles is a candidate join.
"""
from cyclejoin import CycleId, PairFinder, count_closed_form, decompose_product

ps = decompose_product(0x1F, 0x13)
finder = PairFinder(ps)

c1 = CycleId.mix(0, 0, 1)
for c2 in ps.order:
    rep = finder.find(c1, c2)
    if rep.count:
        cf = count_closed_form(ps, c1, c2)
        states = ", ".join(f"{p.v:08b}" for p in rep.pairs[:3])
        more = " ..." if rep.count > 3 else ""
        print(f"{str(c1)} ~ {str(c2):<14} {rep.count:>2} pairs "
              f"(closed form {cf.count if cf else '-'}): {states}{more}")

print(f"\nregister scans performed: {finder.scans}")
