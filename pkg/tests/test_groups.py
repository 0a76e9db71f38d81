import random

import pytest

from hopfore import (AbelianGroup, Character, GroupError, character_order,
                     class_of, cyclotomic, descend_character,
                     enumerate_characters, make_cocycle, prime_field,
                     q_integer, quotient_by_cyclic, rationals, same_class)


def test_group_arithmetic():
    G = AbelianGroup(0, [4])
    g = G.generator(0)
    assert (g ** 4).is_identity()
    assert g.order(10) == 4
    GZ = AbelianGroup(1, [2])
    assert GZ.elem([1, 0]).order(100) is None
    G6 = AbelianGroup(0, [6])
    assert (G6.generator(0) ** 2).order(10) == 3


def test_group_errors():
    with pytest.raises(GroupError):
        AbelianGroup(0, [1])
    with pytest.raises(GroupError):
        AbelianGroup(0, [4]).elem([1, 2])


def test_make_character_examples():
    F = cyclotomic(4)
    G = AbelianGroup(0, [4])
    chi = Character(F, G, [F.zeta])
    assert chi(G.generator(0)) == F.zeta
    assert chi.order() == 4
    Q = rationals()
    with pytest.raises(GroupError):
        Character(Q, AbelianGroup(0, [2]), [Q.from_int(2)])
    free = Character(Q, AbelianGroup(1), [Q.from_int(2)])
    assert free.order() is None


def test_character_order_examples():
    Q = rationals()
    G4 = AbelianGroup(0, [4])
    assert character_order(Character(Q, G4, [-Q.one]), 10) == 2
    F9 = cyclotomic(9)
    G9 = AbelianGroup(0, [9])
    assert character_order(Character(F9, G9, [F9.zeta ** 3]), 10) == 3
    GZ = AbelianGroup(1)
    assert character_order(Character(Q, GZ, [Q.from_int(2)]), 100) is None


def test_enumerate_characters():
    Q = rationals()
    assert len(enumerate_characters(Q, AbelianGroup(0, [2]))) == 2
    assert len(enumerate_characters(Q, AbelianGroup(0, [2, 2]))) == 4
    F3 = cyclotomic(3)
    chars = enumerate_characters(F3, AbelianGroup(0, [3]))
    assert len(chars) == 3
    assert len({tuple(im.sort_key() for im in c.images) for c in chars}) == 3
    with pytest.raises(GroupError):
        enumerate_characters(Q, AbelianGroup(1))
    with pytest.raises(Exception):
        enumerate_characters(Q, AbelianGroup(0, [3]))  # no cube roots in Q


def test_cocycle_validation_examples():
    Q = rationals()
    G22 = AbelianGroup(0, [2, 2])
    chi = Character(Q, G22, [Q.one, -Q.one])
    with pytest.raises(GroupError):
        make_cocycle(chi, [Q.one, Q.zero])
    triv = Character.trivial(Q, AbelianGroup(0, [3]))
    with pytest.raises(GroupError):
        make_cocycle(triv, [Q.one])  # (3)_1 = 3 != 0 over Q
    F2 = prime_field(2)
    trivp = Character.trivial(F2, AbelianGroup(0, [2]))
    alpha = make_cocycle(trivp, [F2.one])
    assert alpha(AbelianGroup(0, [2]).generator(0)) == F2.one


def test_cocycle_law_pointwise():
    F = cyclotomic(3)
    G = AbelianGroup(0, [9])
    chi = Character(F, G, [F.zeta])
    alpha = make_cocycle(chi, [F.one])
    elements = G.elements()
    for g in elements:          # |G| = 9 <= 16: exhaustive pairs
        for h in elements:
            assert alpha(g * h) == alpha(g) + chi(g) * alpha(h)
        assert alpha(g.inverse()) == -chi(g.inverse()) * alpha(g)
        for i in range(1, 11):
            assert alpha(g ** i) == alpha(g) * q_integer(i, chi(g))


def test_cocycle_law_random_mixed_group():
    Q = rationals()
    G = AbelianGroup(1, [2])
    chi = Character(Q, G, [Q.from_int(3), -Q.one])
    # pairwise compatibility forces (1-chi(e2)) a1 = (1-chi(e1)) a2
    alpha = make_cocycle(chi, [Q.one, -Q.one])
    rng = random.Random(11)
    for _ in range(500):
        g = G.elem([rng.randint(-5, 5), rng.randint(0, 1)])
        h = G.elem([rng.randint(-5, 5), rng.randint(0, 1)])
        assert alpha(g * h) == alpha(g) + chi(g) * alpha(h)


def test_same_class_examples():
    F = cyclotomic(4)
    G = AbelianGroup(0, [4])
    chi = Character(F, G, [-F.one])
    lam = Character(F, G, [F.zeta])
    sig = Character(F, G, [-F.zeta])
    assert same_class(lam, sig, chi)
    assert same_class(lam, lam, chi)
    one = Character(F, G, [F.one])
    assert not same_class(one, Character(F, G, [F.zeta]), chi)
    assert class_of(lam, chi) == class_of(sig, chi)


def test_same_class_is_equivalence():
    F = cyclotomic(12)
    G = AbelianGroup(0, [4])
    chi = Character(F, G, [-F.one])
    chars = enumerate_characters(F, G)
    for lam in chars:
        assert same_class(lam, lam, chi)
        for sig in chars:
            assert same_class(lam, sig, chi) == same_class(sig, lam, chi)
            for tau in chars:
                if same_class(lam, sig, chi) and same_class(sig, tau, chi):
                    assert same_class(lam, tau, chi)


def test_quotient_by_cyclic():
    G8 = AbelianGroup(0, [8])
    quo = quotient_by_cyclic(G8, G8.elem([4]))
    assert quo.group == AbelianGroup(0, [4])
    assert quo.project(G8.elem([5])) == quo.group.elem([1])
    GZ = AbelianGroup(1)
    quoz = quotient_by_cyclic(GZ, GZ.elem([4]))
    assert quoz.group == AbelianGroup(0, [4])
    G = AbelianGroup(0, [2, 4])
    q2 = quotient_by_cyclic(G, G.elem([0, 2]))
    assert q2.group.order() == 4


def test_descend_character():
    F8 = cyclotomic(8)
    G8 = AbelianGroup(0, [8])
    quo = quotient_by_cyclic(G8, G8.elem([4]))
    theta = Character(F8, G8, [F8.zeta ** 2])
    down = descend_character(theta, quo)
    assert down.order() == 4
    bad = Character(F8, G8, [F8.zeta])
    with pytest.raises(GroupError):
        descend_character(bad, quo)
