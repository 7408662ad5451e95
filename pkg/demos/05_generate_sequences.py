"""Turn spanning trees into de Bruijn sequences and their feedback functions."""
from cyclejoin import (build_adjacency, decompose_product, enumerate_trees, feedback_anf,
                       format_anf, join, sample_trees, verify_debruijn)

# order 5: (x^2+x+1)(x^3+x+1) has exactly 20 trees
ps = decompose_product(0x7, 0xB)
g = build_adjacency(ps)
trees = list(enumerate_trees(g))
print(f"order {ps.width}: {len(trees)} spanning trees")
for t in trees[:4]:
    seq = join(ps, t)
    print(f"  {seq}  ok={verify_debruijn(seq, ps.width)}  {format_anf(feedback_anf(ps, t))}")

# order 8: too many trees to list, so sample a few
ps = decompose_product(0x1F, 0x13)
g = build_adjacency(ps)
for t in sample_trees(g, 3, seed=7):
    seq = join(ps, t)
    print(f"order 8 sample: {int(seq, 2):064x}  ok={verify_debruijn(seq, 8)}")
