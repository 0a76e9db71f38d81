import itertools

import pytest

from conftest import (case1_zint, characters_of, mod_parent_s2, mod_parent_s3,
                      skew_z4, taft, xngroup_z8)
from hopfore import (BlockS, Character, ModuleError, ModuleRep, OneDim,
                     classify_simples, cyclic_cover_check, decompose_tensor,
                     ideal_form, is_indecomposable, is_isomorphic, is_simple,
                     make_quotient, module_character, module_homs, realize,
                     submodule_lattice_chain, tensor_module, validate_module,
                     weight_spaces)
from hopfore.linalg import (block_diag, mat_eq, mat_identity, mat_pow)


def lam_i(H):
    """The character g -> i on Z/4 over a field containing zeta_12 or i."""
    F = H.field
    i = F.zeta ** 3 if F.n == 12 else F.zeta
    return Character(F, H.group, [i])


def test_realize_one_dim():
    H = mod_parent_s2()
    eps = Character.trivial(H.field, H.group)
    M = realize(H, OneDim(eps))
    assert M.dim == 1
    assert M.group_mats[0][0][0].is_one()
    assert M.x_mat[0][0].is_zero()
    assert validate_module(M).ok


def test_realize_block():
    H = mod_parent_s2()
    F = H.field
    i = F.zeta ** 3
    M = realize(H, BlockS(lam_i(H), F.one))
    assert M.dim == 2
    assert M.group_mats[0][0][0] == i and M.group_mats[0][1][1] == -i
    assert M.x_mat[1][0].is_one() and M.x_mat[0][1].is_one()
    assert validate_module(M).ok


def test_block_x_power_is_scalar():
    for H, s in ((mod_parent_s2(), 2), (mod_parent_s3(), 3)):
        chars = characters_of(H)
        for lam in chars:
            for beta in (H.field.zero, H.field.one, H.field.from_int(2)):
                M = realize(H, BlockS(lam, beta))
                expect = [[beta if i == j else H.field.zero
                           for j in range(s)] for i in range(s)]
                assert mat_eq(mat_pow(M.x_mat, s), expect)


def test_validate_against_skew_quotient():
    H = skew_z4()
    F = H.field
    quo = make_quotient(H, ideal_form(H, 2, F.one))
    sig = Character(F, H.group, [F.zeta])
    # passes iff beta = beta0 (1 - sig(a)^n) = 1 - (-1) = 2
    good = realize(quo, BlockS(sig, F.from_int(2)))
    assert validate_module(good).ok
    bad = realize(quo, BlockS(sig, F.one))
    rep = validate_module(bad)
    assert not rep.ok and rep.first_failure()[0] == "ideal-annihilation"


def test_validate_one_dim_against_group_quotient():
    H8 = xngroup_z8()
    quo = make_quotient(H8, ideal_form(H8, 2, H8.field.one))
    # characters of the effective group automatically satisfy lam(a)^n = 1
    for lam in characters_of(quo):
        assert validate_module(realize(quo, OneDim(lam))).ok


def test_weight_spaces():
    H = mod_parent_s2()
    F = H.field
    chi = module_character(H)
    lam = lam_i(H)
    M = realize(H, BlockS(lam, F.one))
    wd = weight_spaces(M)
    assert wd.is_weight_module() and wd.multiplicity_free()
    assert sorted(c.sort_key() for c in wd.weights) == \
        sorted(c.sort_key() for c in (lam, chi * lam))
    one = realize(H, OneDim(lam))
    wd1 = weight_spaces(one)
    assert wd1.weights == [lam]
    T = tensor_module(M, realize(H, BlockS(Character.trivial(F, H.group),
                                           F.one)))
    wdt = weight_spaces(T)
    assert all(wdt.multiplicity(c) == 2 for c in wdt.weights)
    assert len(wdt.weights) == 2


def test_is_simple_verdicts():
    H = mod_parent_s2()
    F = H.field
    lam = lam_i(H)
    assert is_simple(realize(H, BlockS(lam, F.one))).yes
    v0 = is_simple(realize(H, BlockS(lam, F.zero)))
    assert v0.no and len(v0.witness) == 1
    assert is_simple(realize(H, OneDim(lam))).yes


def test_uniserial_chain():
    H = mod_parent_s3()
    F = H.field
    lam = Character(F, H.group, [F.zeta ** 4])
    chain = submodule_lattice_chain(realize(H, BlockS(lam, F.zero)))
    assert chain.is_chain
    assert chain.dims() == [0, 1, 2, 3]
    chain1 = submodule_lattice_chain(realize(H, BlockS(lam, F.one)))
    assert chain1.is_chain and chain1.dims() == [0, 3]


def test_direct_sum_not_uniserial():
    H = mod_parent_s2()
    F = H.field
    lam = lam_i(H)
    sig = Character(F, H.group, [F.one])
    va, vb = realize(H, OneDim(lam)), realize(H, OneDim(sig))
    direct = ModuleRep(H, [block_diag(F, [va.group_mats[0], vb.group_mats[0]])],
                       block_diag(F, [va.x_mat, vb.x_mat]))
    chain = submodule_lattice_chain(direct)
    assert not chain.is_chain


def test_iso_matrix_over_block_family():
    # all pairs of V(sigma, alpha) for s in {2, 3}: iso iff same class and
    # equal beta (nonzero), or equal character at beta = 0
    for parent in (mod_parent_s2(), mod_parent_s3()):
        F = parent.field
        chi = module_character(parent)
        chars = characters_of(parent)
        betas = [F.zero, F.one, F.from_int(2)]
        specs = [(lam, b) for lam in chars for b in betas]
        mods = {(lam, b): realize(parent, BlockS(lam, b))
                for lam, b in specs}
        from hopfore import same_class
        for (l1, b1), (l2, b2) in itertools.product(specs, repeat=2):
            verdict = is_isomorphic(mods[(l1, b1)], mods[(l2, b2)])
            if b1.is_zero() or b2.is_zero():
                expected = b1 == b2 and l1 == l2
            else:
                expected = b1 == b2 and same_class(l1, l2, chi)
            assert verdict.answer == ("yes" if expected else "no"), \
                (l1, b1, l2, b2, verdict.answer)


def test_one_dim_iso_iff_equal():
    H = mod_parent_s2()
    chars = characters_of(H)
    for l1 in chars:
        for l2 in chars:
            verdict = is_isomorphic(realize(H, OneDim(l1)),
                                    realize(H, OneDim(l2)))
            assert verdict.yes == (l1 == l2)


def test_tensor_module_shape():
    H = mod_parent_s2()
    F = H.field
    lam = lam_i(H)
    sig = Character(F, H.group, [F.one])
    M = realize(H, BlockS(sig, F.one))
    N = realize(H, BlockS(lam, F.one))
    T = tensor_module(M, N)
    assert T.dim == 4
    assert validate_module(T).ok
    # x action is X (x) rho(a) + id (x) X
    from hopfore.linalg import kron
    expect = [[p + q for p, q in zip(rp, rq)] for rp, rq in
              zip(kron(M.x_mat, N.group_action(H.a)),
                  kron(mat_identity(F, 2), N.x_mat))]
    assert mat_eq(T.x_mat, expect)


def test_tensor_unit_laws():
    for H in (mod_parent_s2(), mod_parent_s3()):
        F = H.field
        eps = Character.trivial(F, H.group)
        unit = realize(H, OneDim(eps))
        chars = characters_of(H)
        samples = [realize(H, OneDim(chars[1])),
                   realize(H, BlockS(chars[0], F.one)),
                   realize(H, BlockS(chars[1], F.zero))]
        for M in samples:
            assert is_isomorphic(tensor_module(unit, M), M).yes
            assert is_isomorphic(tensor_module(M, unit), M).yes


def test_tensor_of_one_dims():
    H = mod_parent_s2()
    chars = characters_of(H)
    for l1 in chars:
        for l2 in chars:
            T = tensor_module(realize(H, OneDim(l1)), realize(H, OneDim(l2)))
            assert is_isomorphic(T, realize(H, OneDim(l1 * l2))).yes


def test_mixed_tensor_identities():
    # V_lam (x) V(sigma, a) ~ V(lam sigma, a); V(sigma, a) (x) V_lam ~
    # V(sigma lam, a lam(a)^s)
    for parent, s in ((mod_parent_s2(), 2), (mod_parent_s3(), 3)):
        F = parent.field
        chars = characters_of(parent)
        sig, lam = chars[1], chars[-1]
        alpha = F.from_int(2)
        left = tensor_module(realize(parent, OneDim(lam)),
                             realize(parent, BlockS(sig, alpha)))
        assert is_isomorphic(left, realize(parent,
                                           BlockS(lam * sig, alpha))).yes
        right = tensor_module(realize(parent, BlockS(sig, alpha)),
                              realize(parent, OneDim(lam)))
        target = BlockS(sig * lam, alpha * lam(parent.a) ** s)
        assert is_isomorphic(right, realize(parent, target)).yes
        dec = decompose_tensor(parent, BlockS(sig, alpha), OneDim(lam))
        assert dec.verified and dec.summands == [target]


def test_decompose_tensor_blocks_sign_patterns():
    # both zero and nonzero values of c = alpha lam(a)^s + beta, s in {2, 3}
    for parent, s in ((mod_parent_s2(), 2), (mod_parent_s3(), 3)):
        F = parent.field
        chi = module_character(parent)
        chars = characters_of(parent)
        sig = chars[1]
        lam = next(c for c in chars if (c(parent.a) ** s).is_one())
        for pa in (F.one, -F.one):
            for pb in (F.one, -F.one):
                dec = decompose_tensor(parent, BlockS(sig, pa),
                                       BlockS(lam, pb))
                assert dec.verified
                c = pa * lam(parent.a) ** s + pb
                assert len(dec.summands) == s
                for t, spec in enumerate(dec.summands):
                    assert spec.beta == c
                    assert spec.lam == (chi ** t) * sig * lam


def test_decompose_tensor_spec_example():
    # Z/4, s = 2, sigma = 1, lam = i, alpha = beta = 1: c = i^2 + 1 = 0
    parent = mod_parent_s2()
    F = parent.field
    sig = Character(F, parent.group, [F.one])
    lam = lam_i(parent)
    dec = decompose_tensor(parent, BlockS(sig, F.one), BlockS(lam, F.one))
    assert dec.verified
    assert all(s.beta.is_zero() for s in dec.summands)
    images = sorted(s.lam.images[0].sort_key() for s in dec.summands)
    i = F.zeta ** 3
    assert images == sorted(x.sort_key() for x in (i, -i))
    # alpha = 1, beta = 2: c = 1, both summands isomorphic
    dec2 = decompose_tensor(parent, BlockS(sig, F.one),
                            BlockS(lam, F.from_int(2)))
    assert dec2.verified
    m0 = realize(parent, dec2.summands[0])
    m1 = realize(parent, dec2.summands[1])
    assert is_isomorphic(m0, m1).yes


def test_decompose_tensor_hypothesis_enforced():
    # theta(a) of order n strictly smaller than |chi| must be rejected
    H8 = xngroup_z8()
    F = H8.field
    chars = [Character(F, H8.group, [F.zeta ** k]) for k in (0, 2)]
    with pytest.raises(ModuleError):
        decompose_tensor(H8, BlockS(chars[0], F.one), BlockS(chars[1], F.one))


def test_classify_simples_sweedler():
    H = taft(2)
    quo = make_quotient(H, ideal_form(H, 2, H.field.zero))
    cls = classify_simples(quo)
    assert cls.kind == "enumerated"
    assert len(cls.specs()) == 2
    assert not cls.blocks


def test_classify_simples_skew_z4():
    H = skew_z4()
    F = H.field
    quo = make_quotient(H, ideal_form(H, 2, F.one))
    cls = classify_simples(quo)
    assert len(cls.one_dim) == 2 and len(cls.blocks) == 1
    block = cls.blocks[0]
    assert block.beta == F.from_int(2)
    mods = [realize(quo, s) for s in cls.specs()]
    for m in mods:
        assert validate_module(m).ok
        assert is_simple(m).yes
    for a, b in itertools.combinations(mods, 2):
        assert is_isomorphic(a, b).no
    assert sum(m.dim ** 2 for m in mods) == 6 < quo.dimension()


def test_classify_simples_group_quotient():
    H8 = xngroup_z8()
    quo = make_quotient(H8, ideal_form(H8, 2, H8.field.one))
    cls = classify_simples(quo)
    assert cls.kind == "enumerated"
    assert len(cls.specs()) == 4 and not cls.blocks


def test_classify_simples_family():
    HZ = case1_zint()
    cls = classify_simples(HZ)
    assert cls.kind == "family"
    assert any("V_lam" in note for note in cls.notes)


def test_is_indecomposable():
    H = mod_parent_s2()
    F = H.field
    lam = lam_i(H)
    assert is_indecomposable(realize(H, BlockS(lam, F.one))).yes
    assert is_indecomposable(realize(H, BlockS(lam, F.zero))).yes
    va = realize(H, OneDim(lam))
    direct = ModuleRep(H, [block_diag(F, [va.group_mats[0]] * 2)],
                       block_diag(F, [va.x_mat] * 2))
    verdict = is_indecomposable(direct)
    assert verdict.no
    assert verdict.witness["kernel"] and verdict.witness["image"]


def test_endomorphism_dimensions():
    H = mod_parent_s2()
    F = H.field
    lam = lam_i(H)
    assert len(module_homs(realize(H, BlockS(lam, F.one)),
                           realize(H, BlockS(lam, F.one)))) == 1
    va = realize(H, OneDim(lam))
    direct = ModuleRep(H, [block_diag(F, [va.group_mats[0]] * 2)],
                       block_diag(F, [va.x_mat] * 2))
    assert len(module_homs(direct, direct)) == 4


def test_cyclic_cover_check():
    H = mod_parent_s2()
    F = H.field
    lam = lam_i(H)
    M = realize(H, BlockS(lam, F.one))
    assert cyclic_cover_check(M, lam)
    assert cyclic_cover_check(realize(H, OneDim(lam)), lam)
    va = realize(H, OneDim(lam))
    direct = ModuleRep(H, [block_diag(F, [va.group_mats[0]] * 2)],
                       block_diag(F, [va.x_mat] * 2))
    assert not cyclic_cover_check(direct, lam)


def test_realize_rejects_non_case1():
    from conftest import case3_fp
    H = case3_fp(2)
    with pytest.raises(ModuleError):
        realize(H, OneDim(Character.trivial(H.field, H.group)))
