"""Finite-dimensional simple modules of a rank-one quotient.

One-dimensional modules V_lam have x acting by zero; the s-dimensional
blocks V(lam, beta) are cyclic with x^s = beta.  Over the skew quotient
the complete list is: V_lam for lam(a)^n = 1, plus one block per class
[sigma] with sigma(a)^n != 1, with the wired-in scalar beta(1-sigma(a)^n).
"""

from hopfore import (AbelianGroup, BlockS, Character, classify_simples,
                     cyclotomic, ideal_form, is_isomorphic, is_simple,
                     make_hopf_ore, make_quotient, realize,
                     submodule_lattice_chain, validate_module, weight_spaces)

F = cyclotomic(4)
G = AbelianGroup(0, [4])
H = make_hopf_ore(F, G, Character(F, G, [-F.one]), G.generator(0))
quo = make_quotient(H, ideal_form(H, 2, F.one))
print("algebra: Z/4 skew quotient, dim", quo.dimension())

cls = classify_simples(quo)
print("classification:", cls)
for note in cls.notes:
    print("  ", note)
mods = [realize(quo, s) for s in cls.specs()]
for spec, m in zip(cls.specs(), mods):
    wd = weight_spaces(m)
    print("  %r: dim %d, validates %s, simple %s, weights %s"
          % (spec, m.dim, validate_module(m).ok, is_simple(m).answer,
             [repr(w) for w in wd.weights]))
print("sum of squares of dimensions:",
      sum(m.dim ** 2 for m in mods), "<", quo.dimension(),
      "(the quotient is not semisimple)")

print()
print("uniseriality of V(lam, 0) over the full extension:")
lam = Character(F, G, [F.zeta])
v0 = realize(H, BlockS(lam, F.zero))
chain = submodule_lattice_chain(v0)
print("  submodule dims form a chain:", chain.dims(), "->", chain.is_chain)

print()
print("explicit isomorphism V(lam, 1) ~ V(chi lam, 1):")
from hopfore import module_character
chi = module_character(H)
m1 = realize(H, BlockS(lam, F.one))
m2 = realize(H, BlockS(chi * lam, F.one))
verdict = is_isomorphic(m1, m2)
print("  verdict:", verdict.answer)
for row in verdict.witness:
    print("   ", [str(x) for x in row])
