import pytest

from conftest import (case1_z3, case1_z9, case1_zint, case2_z4, case3_fp,
                      skew_z4, taft, xngroup_z8, zint_sample)
from hopfore import (AbelianGroup, Character, HopfError, IdealVariant, Rank,
                     check_hopf_axioms, check_hopf_ideal, ideal_form,
                     ideal_form_char_p, is_skew_primitive, make_hopf_ore,
                     make_quotient, prime_field, rank_crosscheck, rank_of,
                     skew_primitives)


def test_rank_of_branches():
    rr = rank_of(case1_z3())
    assert rr.rank is Rank.TWO and rr.n == 3
    assert rank_of(case1_zint()).rank is Rank.ONE
    assert rank_of(case2_z4()).rank is Rank.ONE
    r3 = rank_of(case3_fp(3))
    assert r3.rank is Rank.INFINITE and r3.branch == "charp_unipotent_case3"
    # char p with q a primitive root of order >= 2
    F4 = prime_field(5)
    G = AbelianGroup(0, [4])
    H = make_hopf_ore(F4, G, Character(F4, G, [F4.from_int(2)]),
                      G.generator(0))
    rp = rank_of(H)
    assert rp.rank is Rank.INFINITE and rp.branch == "charp_primitive"
    assert rp.n == 4


def test_skew_primitives_z9():
    H = case1_z9()
    G = H.group
    sols = skew_primitives(H, G.elem([3]), 4)
    assert len(sols) == 2
    for z in sols:
        assert is_skew_primitive(H, z, G.elem([3]))
    degs = sorted(z.degree() for z in sols)
    assert degs == [0, 3]
    sols_a = skew_primitives(H, G.elem([1]), 4)
    assert sorted(z.degree() for z in sols_a) == [0, 1]
    assert len(skew_primitives(H, G.elem([2]), 4)) == 1


def test_skew_primitive_dimension_profile_case1():
    # q primitive n-th root with a^n = 1: target identity is 1-dimensional
    H = case1_z3()
    sols = skew_primitives(H, H.group.identity(), 4)
    assert len(sols) == 1
    assert sols[0].degree() == 3
    sols_a = skew_primitives(H, H.a, 4)
    assert len(sols_a) == 2


def test_skew_primitives_infinite_group_needs_support():
    H = case1_zint()
    with pytest.raises(HopfError):
        skew_primitives(H, H.a, 3)
    sols = skew_primitives(H, H.a, 3, group_support=zint_sample(H))
    assert sorted(z.degree() for z in sols) == [0, 1]


def test_rank_crosscheck_fixtures():
    assert rank_crosscheck(case1_z3(), 5).agree
    assert rank_crosscheck(case1_z9(), 5).agree
    assert rank_crosscheck(case2_z4(), 5).agree
    assert rank_crosscheck(case3_fp(2), 4).agree
    assert rank_crosscheck(case3_fp(3), 4).agree
    HZ = case1_zint()
    assert rank_crosscheck(HZ, 4, group_support=zint_sample(HZ)).agree


def test_rank_crosscheck_difference_pattern_char2():
    cc = rank_crosscheck(case3_fp(2), 4)
    assert cc.observed_pattern() == [(1, "power"), (2, "difference"),
                                     (4, "difference")]


def test_rank_crosscheck_charp_primitive_root():
    # q = 2 has order 4 in F_5: the x^(4 * 5^r) family, truncated at the bound
    F5 = prime_field(5)
    G = AbelianGroup(0, [4])
    H = make_hopf_ore(F5, G, Character(F5, G, [F5.from_int(2)]),
                      G.generator(0))
    cc = rank_crosscheck(H, 5)
    assert cc.agree
    assert cc.observed_pattern() == [(1, "power"), (4, "power")]
    by_target = {t: d for t, d, _, _ in cc.per_target}
    assert by_target[G.identity()] == 1  # x^4 only (a^4 = 1)
    assert by_target[H.a] == 2           # x and 1 - a


def test_rank_crosscheck_charp_case2_powers():
    from test_hopf import case2_with_nonzero_cocycle
    H = case2_with_nonzero_cocycle()
    rr = rank_of(H)
    assert rr.rank is Rank.INFINITE and rr.branch == "charp_unipotent_case2"
    cc = rank_crosscheck(H, 8)
    assert cc.agree
    assert cc.observed_pattern() == [(1, "power"), (2, "power"),
                                     (4, "power"), (8, "power")]
    by_target = {t: (d, pred) for t, d, pred, _ in cc.per_target}
    ident = H.group.identity()
    assert by_target[ident][0] == 3  # x^2, x^4, x^8
    assert by_target[H.a][0] == 2    # x and 1 - a


def test_ideal_form_trichotomy():
    H = taft(3)
    F = H.field
    assert ideal_form(H, 3, F.zero).variant is IdealVariant.XN_ONLY
    assert ideal_form(H, 3, F.one).variant is IdealVariant.XN_ONLY  # a^n = 1
    H4 = skew_z4()
    form = ideal_form(H4, 2, H4.field.one)
    assert form.variant is IdealVariant.SKEW
    H8 = xngroup_z8()
    form8 = ideal_form(H8, 2, H8.field.one)
    assert form8.variant is IdealVariant.XN_AND_GROUP
    assert ideal_form(H8).variant is IdealVariant.ZERO


def test_ideal_form_constraint_errors():
    H = taft(3)
    with pytest.raises(HopfError):
        ideal_form(H, 2, H.field.zero)  # theta(a) has order 3, not 2
    with pytest.raises(HopfError):
        ideal_form(H, 1, H.field.zero)


def test_make_quotient_dimensions():
    for n in (2, 3, 4):
        H = taft(n)
        quo = make_quotient(H, ideal_form(H, n, H.field.zero))
        assert quo.dimension() == n * n
    H4 = skew_z4()
    quo4 = make_quotient(H4, ideal_form(H4, 2, H4.field.one))
    assert quo4.dimension() == 8
    x2 = quo4.mul(quo4.x(), quo4.x())
    g2 = H4.group.elem([2])
    assert x2 == quo4.one() - quo4.g(g2)
    assert make_quotient(H4, ideal_form(H4)) is H4  # zero ideal


def test_quotient_group_change():
    H8 = xngroup_z8()
    quo = make_quotient(H8, ideal_form(H8, 2, H8.field.one))
    assert quo.group == AbelianGroup(0, [4])
    assert quo.dimension() == 8
    assert check_hopf_axioms(quo).ok


def test_quotient_axioms():
    for n in (2, 3, 4):
        H = taft(n)
        quo = make_quotient(H, ideal_form(H, n, H.field.zero))
        assert check_hopf_axioms(quo).ok
    H4 = skew_z4()
    quo4 = make_quotient(H4, ideal_form(H4, 2, H4.field.one))
    assert check_hopf_axioms(quo4).ok


def test_check_hopf_ideal():
    H2 = taft(2)
    assert check_hopf_ideal(H2, ideal_form(H2, 2, H2.field.zero)).ok
    H4 = skew_z4()
    assert check_hopf_ideal(H4, ideal_form(H4, 2, H4.field.one)).ok
    H8 = xngroup_z8()
    assert check_hopf_ideal(H8, ideal_form(H8, 2, H8.field.one)).ok


def test_check_hopf_ideal_negative_control():
    H4 = skew_z4()
    form = ideal_form(H4, 2, H4.field.one)
    bad = check_hopf_ideal(H4, form, generators=[H4.x(2) - H4.one()])
    assert not bad.ok
    assert bad.first_failure()[0] == "counit"


def test_char_p_linear_shape():
    H = case3_fp(2)
    F = H.field
    form = ideal_form_char_p(H, F.one, F.zero)
    quo = make_quotient(H, form)
    assert quo.dimension() == 4
    assert quo.mul(quo.x(), quo.x()) == quo.x()  # x^2 = x
    assert check_hopf_axioms(quo).ok
    assert check_hopf_ideal(H, form).ok
    # side condition: beta != 1 needs a^p = a, which fails on Z/2
    with pytest.raises(HopfError):
        ideal_form_char_p(H, F.zero, F.one)


def test_quotient_counit_antipode():
    H4 = skew_z4()
    quo = make_quotient(H4, ideal_form(H4, 2, H4.field.one))
    for u in quo.basis_elements():
        su = quo.antipode(u)
        assert quo.counit(su) == quo.counit(u)
