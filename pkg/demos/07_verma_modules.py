"""Verma modules, their maximal submodules, and quotients by the ideal.

M(lam) = k[x] v is never truncated; finitely generated submodules
canonicalize to monic generator tuples over k[y], y = x^s.  Reducing
modulo a rank-one ideal reproduces the expected table: a truncation for
<x^n>, zero or a truncation for <x^n, 1-a^n> depending on lam(a)^n, and
the block V(lam, beta(1-lam(a)^n)) for the skew shape.
"""

from hopfore import (AbelianGroup, BlockS, Character, OneDim,
                     augmentation_submodule, cyclotomic, ideal_form,
                     is_indecomposable, is_isomorphic, make_hopf_ore,
                     make_quotient, realize, skew_maximal_submodule, verma,
                     verma_quotient_mod_ideal, verma_submodule)

F = cyclotomic(4)
G = AbelianGroup(0, [4])
H = make_hopf_ore(F, G, Character(F, G, [-F.one]), G.generator(0))
lam = Character(F, G, [F.zeta])
V = verma(H, lam)
print("Verma module", V, "with |chi| =", V.chi.order())

J = augmentation_submodule(V)
print("  J(lam) canonical form:", J, " maximal:", J.is_maximal())
print("  L(lam) ~ V_lam:",
      is_isomorphic(J.quotient_module(), realize(H, OneDim(lam))).yes)

Jb = skew_maximal_submodule(V, F.one)
print("  J_1(lam) canonical form:", Jb, " maximal:", Jb.is_maximal())
print("  L(lam, 1) ~ V(lam, 1):",
      is_isomorphic(Jb.quotient_module(), realize(H, BlockS(lam, F.one))).yes)

two = F.from_int(2)
gen = {4: F.one, 2: -(F.one + two), 0: two}
N = verma_submodule(V, [gen])
print("  submodule from (x^2-1)(x^2-2)v:", N, " maximal:", N.is_maximal())
print("  it lies inside both J_1 and J_2:",
      Jb.contains(N), skew_maximal_submodule(V, two).contains(N))

print()
print("quotients of M(lam) by the rank-one ideals:")
quo = make_quotient(H, ideal_form(H, 2, F.one))
res = verma_quotient_mod_ideal(V, quo)
print("  skew ideal:", res.detail)
target = realize(quo, BlockS(lam, two))
print("    dimension %d, isomorphic to V(lam, 2): %s, indecomposable: %s"
      % (res.module.dim, is_isomorphic(res.module, target).yes,
         is_indecomposable(res.module).answer))

F8 = cyclotomic(8)
G8 = AbelianGroup(0, [8])
H8 = make_hopf_ore(F8, G8, Character(F8, G8, [F8.zeta ** 2]), G8.elem([2]))
quo8 = make_quotient(H8, ideal_form(H8, 2, F8.one))
for image, label in ((F8.zeta, "lam(a)^2 = -1"),
                     (F8.zeta ** 2, "lam(a)^2 = 1")):
    lam8 = Character(F8, G8, [image])
    res8 = verma_quotient_mod_ideal(verma(H8, lam8), quo8)
    print("  group-collapsing ideal, %s: %s" % (label, res8.kind))
