"""Shared fixture builders for the test suite.

These are the sample configurations the checks run on: the three case
shapes over several fields, the Taft-style quotients, and the module-theory
parents over Q(zeta_12).
"""

from hopfore import (AbelianGroup, Character, cyclotomic, make_cocycle,
                     make_hopf_ore, prime_field, rationals)


def case1_z3():
    """theta(g) = zeta_3 on Z/3 over Q(zeta_3); q = zeta_3."""
    F = cyclotomic(3)
    G = AbelianGroup(0, [3])
    return make_hopf_ore(F, G, Character(F, G, [F.zeta]), G.generator(0))


def case1_z9():
    """theta(g) = zeta_3 on Z/9 over Q(zeta_3); q = zeta_3, a^3 != 1."""
    F = cyclotomic(3)
    G = AbelianGroup(0, [9])
    return make_hopf_ore(F, G, Character(F, G, [F.zeta]), G.generator(0))


def case2_z4():
    """theta(g) = -1 on Z/4 with a = g^2 over Q; q = 1, alpha = 0."""
    F = rationals()
    G = AbelianGroup(0, [4])
    return make_hopf_ore(F, G, Character(F, G, [-F.one]), G.elem([2]))


def case3_fp(p):
    """Trivial theta on Z/p over F_p with alpha(g) = 1; q = 1."""
    F = prime_field(p)
    G = AbelianGroup(0, [p])
    theta = Character.trivial(F, G)
    alpha = make_cocycle(theta, [F.one])
    return make_hopf_ore(F, G, theta, G.generator(0), alpha)


def case1_zint():
    """theta(e) = 2 on Z over Q; q = 2 is not a root of unity."""
    F = rationals()
    G = AbelianGroup(1)
    return make_hopf_ore(F, G, Character(F, G, [F.from_int(2)]), G.elem([1]))


def zint_sample(H, radius=2):
    return [H.group.elem([k]) for k in range(-radius, radius + 1)]


def taft(n):
    """theta(g) = zeta_n on Z/n over Q(zeta_n); the x^n quotient is Taft."""
    F = cyclotomic(n)
    G = AbelianGroup(0, [n])
    return make_hopf_ore(F, G, Character(F, G, [F.zeta]), G.generator(0))


def skew_z4():
    """theta(g) = -1 on Z/4 over Q(i); carries the skew ideal with n = 2."""
    F = cyclotomic(4)
    G = AbelianGroup(0, [4])
    return make_hopf_ore(F, G, Character(F, G, [-F.one]), G.generator(0))


def xngroup_z8():
    """theta(g) = zeta_8^2 on Z/8 over Q(zeta_8), a = g^2: q = -1, n = 2 < 4
    = |theta| and a^2 = g^4 != 1, so the <x^n, 1-a^n> shape applies."""
    F = cyclotomic(8)
    G = AbelianGroup(0, [8])
    return make_hopf_ore(F, G, Character(F, G, [F.zeta ** 2]), G.elem([2]))


def mod_parent_s2():
    """Module-theory parent with s = |chi| = 2: Z/4, theta(g) = -1, over
    Q(zeta_12) so that all characters of Z/4 exist in the field."""
    F = cyclotomic(12)
    G = AbelianGroup(0, [4])
    return make_hopf_ore(F, G, Character(F, G, [-F.one]), G.generator(0))


def mod_parent_s3():
    """Module-theory parent with s = 3: Z/3, theta(g) = zeta_3, Q(zeta_12)."""
    F = cyclotomic(12)
    G = AbelianGroup(0, [3])
    return make_hopf_ore(F, G, Character(F, G, [F.zeta ** 4]), G.generator(0))


def characters_of(H):
    from hopfore import enumerate_characters
    return enumerate_characters(H.field, H.group)
