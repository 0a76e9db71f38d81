"""Rank-one quotients: the ideal trichotomy and their verification.

With q = theta(a) a primitive n-th root of unity the quotient ideal is
<x^n> (beta = 0 or a^n = 1), <x^n, 1-a^n> (beta != 0, a^n != 1,
n < |theta|), or the principal <x^n - beta(1-a^n)> (n = |theta|).  The
second shape collapses part of the group.
"""

from hopfore import (AbelianGroup, Character, check_hopf_axioms,
                     check_hopf_ideal, cyclotomic, ideal_form, make_hopf_ore,
                     make_quotient)

print("Taft algebras: Z/n, theta(g) = zeta_n, ideal <x^n>")
for n in (2, 3, 4):
    F = cyclotomic(n)
    G = AbelianGroup(0, [n])
    H = make_hopf_ore(F, G, Character(F, G, [F.zeta]), G.generator(0))
    form = ideal_form(H, n, F.zero)
    quo = make_quotient(H, form)
    print("  n=%d: %r, dim %d, ideal check %s, axioms %s"
          % (n, form, quo.dimension(), check_hopf_ideal(H, form).ok,
             check_hopf_axioms(quo).ok))

print()
print("skew shape on Z/4 over Q(i): theta(g) = -1, beta = 1")
F4 = cyclotomic(4)
G4 = AbelianGroup(0, [4])
H4 = make_hopf_ore(F4, G4, Character(F4, G4, [-F4.one]), G4.generator(0))
form4 = ideal_form(H4, 2, F4.one)
quo4 = make_quotient(H4, form4)
print("  ideal:", form4)
print("  dimension:", quo4.dimension())
print("  x^2 reduces to:", quo4.mul(quo4.x(), quo4.x()))
print("  hopf ideal check:", check_hopf_ideal(H4, form4).summary())
print("  quotient axioms:", check_hopf_axioms(quo4).summary())

print()
print("group-collapsing shape on Z/8 over Q(zeta_8):")
F8 = cyclotomic(8)
G8 = AbelianGroup(0, [8])
H8 = make_hopf_ore(F8, G8, Character(F8, G8, [F8.zeta ** 2]), G8.elem([2]))
form8 = ideal_form(H8, 2, F8.one)
quo8 = make_quotient(H8, form8)
print("  ideal:", form8)
print("  effective group:", quo8.group, " dimension:", quo8.dimension())
print("  quotient axioms:", check_hopf_axioms(quo8).summary())

print()
print("negative control: x^2 - 1 is not a Hopf ideal generator")
bad = check_hopf_ideal(H4, form4, generators=[H4.x(2) - H4.one()])
print(" ", bad.summary())
