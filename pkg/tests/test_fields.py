import math
import random

import pytest

from hopfore import (FieldError, cyclotomic, ext_field, gaussian_vanishing,
                     gaussian_vanishing_closed_form, make_field, mult_order,
                     prime_field, q_binomial, q_factorial, q_integer,
                     rationals)
from hopfore.fields import cyclotomic_polynomial, is_prime


def test_cyclotomic_4_basics():
    F = cyclotomic(4)
    assert F.modulus == [1, 0, 1]  # x^2 + 1
    assert F.degree == 2
    z = F.zeta
    assert z * z == -F.one
    assert mult_order(z, 8) == 4


def test_cyclotomic_1_is_rational_like():
    F = cyclotomic(1)
    assert F.degree == 1
    assert F.zeta == F.one


def test_ext_field_2_2_modulus_by_exhaustion():
    F = ext_field(2, 2)
    # oracle: trial all 4 monic quadratics over F_2 for a linear factor
    def has_root(c0, c1):
        return any((x * x + c1 * x + c0) % 2 == 0 for x in (0, 1))
    irreducible = [(c0, c1) for c0 in (0, 1) for c1 in (0, 1)
                   if not has_root(c0, c1)]
    assert irreducible == [(1, 1)]
    assert F.modulus == (1, 1, 1)
    assert len(F.elements()) == 4
    gen = F._root_group_generator()
    assert mult_order(gen, 3) == 3


def test_ext_field_9_generator_order():
    F = ext_field(3, 2)
    assert F.modulus == (1, 0, 1)
    gen = F._root_group_generator()
    assert mult_order(gen, 8) == 8


def test_make_field_errors():
    with pytest.raises(FieldError):
        make_field("prime", p=6)
    with pytest.raises(FieldError):
        make_field("cyclotomic", n=0)
    with pytest.raises(FieldError):
        make_field("nope")


def test_mult_order_examples():
    F6 = cyclotomic(6)
    assert mult_order(F6.zeta, 12) == 6
    Q = rationals()
    assert mult_order(-Q.one, 10) == 2
    assert mult_order(Q.from_int(2), 100) is None
    with pytest.raises(FieldError):
        mult_order(Q.zero, 5)


def test_q_integer_and_factorial():
    Q = rationals()
    two = Q.from_int(2)
    assert q_integer(3, two) == Q.from_int(7)
    assert q_integer(0, two) == Q.zero
    assert q_factorial(3, Q.one) == Q.from_int(6)
    F4 = cyclotomic(4)
    # (2)!_i = (1+i); (3)!_i = (1+i)(1+i+i^2) = (1+i)i
    i = F4.zeta
    assert q_factorial(3, i) == (F4.one + i) * i


def test_q_binomial_examples():
    F4 = cyclotomic(4)
    assert q_binomial(4, 2, F4.zeta).is_zero()
    Q = rationals()
    assert q_binomial(5, 2, Q.one) == Q.from_int(10)
    F3 = cyclotomic(3)
    assert q_binomial(6, 3, F3.zeta) == F3.from_int(2)
    assert q_binomial(3, 0, Q.from_int(2)).is_one()


def test_q_binomial_errors():
    Q = rationals()
    with pytest.raises(FieldError):
        q_binomial(2, 3, Q.one)
    with pytest.raises(FieldError):
        q_binomial(2, 1, Q.zero)


def test_pascal_recursion_consistency():
    F12 = cyclotomic(12)
    Q = rationals()
    qs = [F12.zeta ** (12 // d) for d in (1, 2, 3, 4, 6, 12)]
    qs += [Q.from_int(2), Q.one, -Q.one]
    for q in qs:
        for n in range(1, 11):
            for m in range(0, n + 1):
                left = q_binomial(n, m, q)
                up = q_binomial(n - 1, m, q) if m <= n - 1 else q.field.zero
                diag = q_binomial(n - 1, m - 1, q) if m >= 1 else q.field.zero
                assert left == q ** m * up + diag


def test_q_one_specializes_to_binomials():
    for field in (rationals(), prime_field(3), ext_field(2, 2)):
        one = field.one
        for n in range(11):
            for m in range(n + 1):
                assert q_binomial(n, m, one) == field.from_int(math.comb(n, m))


def _axioms(field, triples):
    for a, b, c in triples:
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a * b == b * a
        if not a.is_zero():
            assert a * a.inverse() == field.one


def test_field_axioms_exhaustive_small():
    for field in (prime_field(2), prime_field(3), ext_field(2, 2)):
        elts = field.elements()
        triples = [(a, b, c) for a in elts for b in elts for c in elts]
        _axioms(field, triples)


def test_field_axioms_random_cyclotomic():
    rng = random.Random(20240817)
    for n in (3, 4, 5, 8, 12):
        field = cyclotomic(n)
        z = field.zeta

        def rand_elt():
            acc = field.zero
            for k in range(field.degree):
                acc = acc + field.from_int(rng.randint(-3, 3)) * z ** k
            return acc

        triples = [(rand_elt(), rand_elt(), rand_elt()) for _ in range(200)]
        _axioms(field, triples)


def test_zeta_satisfies_cyclotomic_polynomial():
    for n in (1, 2, 3, 4, 6, 8, 12):
        field = cyclotomic(n)
        z = field.zeta
        acc = field.zero
        for k, c in enumerate(cyclotomic_polynomial(n)):
            acc = acc + field.from_int(c) * z ** k
        assert acc.is_zero()
        assert mult_order(z, n) == n


def test_gaussian_vanishing_examples():
    F3 = cyclotomic(3)
    assert not gaussian_vanishing(6, F3.zeta)
    assert not gaussian_vanishing_closed_form(6, F3.zeta)
    F2 = prime_field(2)
    assert gaussian_vanishing(4, F2.one)
    assert gaussian_vanishing_closed_form(4, F2.one)
    Q = rationals()
    assert gaussian_vanishing(2, -Q.one)


def test_field_context_isolation():
    with pytest.raises(FieldError):
        cyclotomic(3).zeta + cyclotomic(4).zeta


def test_scalar_roundtrip():
    cases = [
        (rationals(), ["0", "-3/2", "5"]),
        (cyclotomic(4), ["zeta", "1/2 - 2*zeta", "3"]),
        (prime_field(5), ["3", "1/2"]),
        (ext_field(2, 2), ["t", "1 + t", "0"]),
    ]
    for field, strings in cases:
        for s in strings:
            x = field.parse(s)
            assert field.parse(field.format(x)) == x


def test_is_prime():
    assert [p for p in range(20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]
