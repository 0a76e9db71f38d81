"""Rank of the extension versus a brute-force scan for skew primitives.

The rank verdict reads off the order profile of q = theta(a); the
cross-check independently solves D(z) = z (x) g + 1 (x) z as an exact
linear system for every group-like target and compares the solution
spaces with the predicted bases.
"""

from hopfore import (AbelianGroup, Character, cyclotomic, make_cocycle,
                     make_hopf_ore, prime_field, rank_crosscheck, rank_of,
                     rationals, skew_primitives)

F = cyclotomic(3)
G9 = AbelianGroup(0, [9])
H = make_hopf_ore(F, G9, Character(F, G9, [F.zeta]), G9.generator(0))
print("Z/9 with theta(g) = zeta_3:")
print(" ", rank_of(H))
for k in (1, 2, 3):
    target = G9.elem([k])
    sols = skew_primitives(H, target, degree_bound=4)
    print("  target a^%d: solution space dim %d: %s"
          % (k, len(sols), ", ".join(repr(z) for z in sols)))
print(" ", rank_crosscheck(H, 6))

print()
print("char 2, case 3 (Z/2 over F_2): the difference pattern")
F2 = prime_field(2)
G2 = AbelianGroup(0, [2])
triv = Character.trivial(F2, G2)
H3 = make_hopf_ore(F2, G2, triv, G2.generator(0), make_cocycle(triv, [F2.one]))
print(" ", rank_of(H3))
cc = rank_crosscheck(H3, 8)
for target, dim, predicted, ok in cc.per_target:
    print("  target %r: dim %d, basis {%s}, ok=%s"
          % (target, dim, ", ".join(repr(z) for z in predicted), ok))

print()
print("Z with theta(e) = 2 (not a root of unity): rank one")
Q = rationals()
GZ = AbelianGroup(1)
HZ = make_hopf_ore(Q, GZ, Character(Q, GZ, [Q.from_int(2)]), GZ.elem([1]))
sample = [GZ.elem([k]) for k in range(-2, 3)]
print(" ", rank_of(HZ))
print(" ", rank_crosscheck(HZ, 4, group_support=sample))
