"""How many de Bruijn sequences does cycle joining reach?

Every spanning tree of the adjacency multigraph gives a different sequence,
so the count is a Laplacian cofactor.  A cheap estimate uses only the stage
count and the number of cycles.
"""
from cyclejoin import best_count, build_adjacency, decompose_product, theorem6_count
from cyclejoin.field import default_modulus

g = build_adjacency(decompose_product(0x1F, 0x13))
tc = best_count(g)
print(f"x^4+x^3+x^2+x+1 times x^4+x+1: {tc.exact} trees")
print(f"  log2 exact {tc.log2_exact:.3f}, log2 estimate {tc.log2_estimate:.3f}")

print("\n(x^2+x+1) p(x) with p primitive of degree n:")
for n in range(3, 11):
    exact = best_count(build_adjacency(decompose_product(0x7, default_modulus(n)))).exact
    print(f"  n={n:>2}  graph {exact:>12}  closed form {theorem6_count(n):>12}")
