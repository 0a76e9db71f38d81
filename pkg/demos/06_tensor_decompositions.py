"""Splitting tensor products of blocks into indecomposables.

V(sigma, alpha) (x) V(lam, beta) decomposes into s blocks sharing the
scalar c = alpha lam(a)^s + beta.  The splitting is constructive: a basis
change assembled from weight vectors (propagated by x when c != 0, pulled
from the kernel filtration when c = 0) conjugates the tensor action into
exactly the block-diagonal of the realized summands.
"""

from hopfore import (AbelianGroup, BlockS, Character, cyclotomic,
                     decompose_tensor, is_isomorphic, make_hopf_ore, realize)

F = cyclotomic(12)
G = AbelianGroup(0, [4])
H = make_hopf_ore(F, G, Character(F, G, [-F.one]), G.generator(0))
i = F.zeta ** 3
sigma = Character(F, G, [F.one])
lam = Character(F, G, [i])

print("s = 2 block on Z/4; lam(g) = i so lam(a)^2 = -1")
for alpha, beta in ((F.one, F.one), (F.one, F.from_int(2))):
    dec = decompose_tensor(H, BlockS(sigma, alpha), BlockS(lam, beta))
    c = alpha * lam(H.a) ** 2 + beta
    print("  alpha=%s beta=%s: c = %s" % (alpha, beta, c))
    print("    summands:", dec.summands)
    print("    block-diagonalization verified:", dec.verified)
    if not c.is_zero():
        a, b = (realize(H, s) for s in dec.summands)
        print("    the two summands are isomorphic:", is_isomorphic(a, b).yes)

print()
print("s = 3 block on Z/3 over the same field:")
G3 = AbelianGroup(0, [3])
H3 = make_hopf_ore(F, G3, Character(F, G3, [F.zeta ** 4]), G3.generator(0))
s1 = Character(F, G3, [F.zeta ** 4])
l1 = Character(F, G3, [F.zeta ** 8])
dec = decompose_tensor(H3, BlockS(s1, F.one), BlockS(l1, -F.one))
print("  c = 0 instance:", dec.summands, " verified:", dec.verified)
print("  basis change (columns are the new basis):")
for row in dec.basis_change:
    print("   ", [str(x) for x in row])
