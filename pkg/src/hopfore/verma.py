"""Verma modules M(lam) = k[x] v_lam and their submodule structure.

The Verma module of a character lam is free of rank one over k[x] with

    g (x^i v) = chi^i(g) lam(g) x^i v,      x (x^i v) = x^(i+1) v,

and is never truncated: elements are sparse polynomials acting on the
cyclic vector.  For |chi| = s < infinity the weight components live over
the coefficient ring k[y] with y = x^s, a principal ideal domain, so every
finitely generated submodule has a canonical form: an s-tuple of monic
generators f_i(y) with

    N = (+)_i  f_i(y) x^i k[y] v_lam,

closed under x iff f_(i+1) | f_i (i < s-1) and f_0 | y f_(s-1).  The
maximal submodules are the augmentation-style J(lam) = (y, 1, ..., 1) with
quotient V_lam and, for beta != 0, J_beta(lam) = (y-beta, ..., y-beta)
with quotient V(lam, beta).
"""

from __future__ import annotations

from .groups import Character
from .hopf import Case, HopfOre
from .modules import (BlockS, ModuleError, ModuleRep, module_character,
                      realize)
from .polys import (p_degree, p_divides, p_divmod, p_format, p_gcd,
                    p_is_zero, p_mod, p_monic, p_mul, p_normalize, p_shift)
from .structure import IdealVariant, QuotientHopf


class VermaModule:
    """M(lam): elements are {degree: coefficient} maps on x^i v_lam."""

    def __init__(self, parent, lam):
        if not isinstance(parent, HopfOre):
            raise ModuleError("Verma modules live over the full extension")
        if parent.case is not Case.ONE:
            raise ModuleError("Verma theory requires theta(a) != 1 (case 1)")
        if lam.group != parent.group or lam.field != parent.field:
            raise ModuleError("character does not live on the parent's group")
        self.parent = parent
        self.lam = lam
        self.chi = module_character(parent)

    def vector(self, data):
        """A sparse element sum c_i x^i v_lam."""
        return {d: c for d, c in data.items() if not c.is_zero()}

    def basis_vector(self, i):
        return {i: self.parent.field.one}

    def weight_of_degree(self, i):
        return (self.chi ** i) * self.lam

    def apply_x(self, f):
        return {d + 1: c for d, c in f.items()}

    def apply_group(self, g, f):
        out = {}
        lamg = self.lam(g)
        for d, c in f.items():
            out[d] = c * (self.chi ** d)(g) * lamg
        return self.vector(out)

    def apply(self, u, f):
        """Action of an algebra element sum c g x^i on f."""
        if u.hopf is not self.parent:
            raise ModuleError("element of a different extension")
        out = {}
        for (g, i), c in u.data.items():
            shifted = {d + i: v for d, v in f.items()}
            acted = self.apply_group(g, shifted)
            for d, v in acted.items():
                cur = out.get(d)
                nxt = c * v if cur is None else cur + c * v
                if nxt is not None and nxt.is_zero():
                    out.pop(d, None)
                else:
                    out[d] = nxt
        return self.vector(out)

    def format(self, f):
        if not f:
            return "0"
        parts = []
        for d in sorted(f):
            c = f[d]
            head = "" if c.is_one() else "(%s)*" % c
            parts.append("%sx^%d.v" % (head, d) if d else "%sv" % head)
        return " + ".join(parts)

    def __repr__(self):
        return "M(%r)" % self.lam


class VermaSubmodule:
    """Canonical form of a finitely generated submodule of M(lam).

    For |chi| = s finite: an s-tuple of monic k[y]-generators (None for the
    zero component).  For |chi| infinite every finitely generated proper
    submodule is a degree tail x^i0 k[x] v; only the tail index is stored.
    """

    def __init__(self, verma, components=None, tail=None):
        self.verma = verma
        self.components = components
        self.tail = tail

    @property
    def s(self):
        return len(self.components) if self.components is not None else None

    def is_maximal(self):
        """Whether the canonical form matches J(lam) or a J_beta(lam)."""
        if self.tail is not None:
            return self.tail == 1
        comps = self.components
        field = self.verma.parent.field
        if any(c is None for c in comps):
            return False
        y_poly = (field.zero, field.one)
        if comps[0] == y_poly and all(p_degree(c) == 0 for c in comps[1:]):
            return True
        first = comps[0]
        if p_degree(first) == 1 and all(c == first for c in comps):
            beta = -first[0]
            return not beta.is_zero()
        return False

    def maximal_kind(self):
        """'J' for the augmentation form, ('J_beta', beta) for the skew one."""
        if not self.is_maximal():
            return None
        if self.tail is not None:
            return "J"
        first = self.components[0]
        if p_degree(first) == 1 and all(c == first for c in self.components):
            beta = -first[0]
            if not beta.is_zero():
                return ("J_beta", beta)
        return "J"

    def contains(self, other):
        """Componentwise divisibility check (same Verma module)."""
        if self.verma is not other.verma:
            raise ModuleError("submodules of different Verma modules")
        if self.tail is not None:
            return other.tail is not None and other.tail >= self.tail
        for mine, theirs in zip(self.components, other.components):
            if p_is_zero_or_none(theirs):
                continue
            if p_is_zero_or_none(mine):
                return False
            if not p_divides(mine, theirs):
                return False
        return True

    def intersect(self, other):
        """Componentwise lcm; e.g. two skew maximals meet in the product tuple."""
        if self.verma is not other.verma:
            raise ModuleError("submodules of different Verma modules")
        if self.tail is not None or other.tail is not None:
            return VermaSubmodule(self.verma,
                                  tail=max(self.tail, other.tail))
        comps = []
        for mine, theirs in zip(self.components, other.components):
            if p_is_zero_or_none(mine) or p_is_zero_or_none(theirs):
                comps.append(None)
                continue
            g = p_gcd(mine, theirs)
            q, _ = p_divmod(p_mul(mine, theirs), g)
            comps.append(p_monic(q))
        return VermaSubmodule(self.verma, components=comps)

    def quotient_dimension(self):
        if self.tail is not None:
            return None  # infinite-dimensional quotient data not materialized
        if any(c is None for c in self.components):
            return None
        return sum(p_degree(c) for c in self.components)

    def quotient_module(self):
        """M(lam)/N as explicit matrices on the residue basis x^i y^j."""
        if self.quotient_dimension() is None:
            raise ModuleError("quotient is infinite-dimensional")
        verma = self.verma
        parent = verma.parent
        field = parent.field
        s = self.s
        basis = []  # (component i, power j)
        for i in range(s):
            for j in range(p_degree(self.components[i])):
                basis.append((i, j))
        index = {b: k for k, b in enumerate(basis)}
        dim = len(basis)
        mats = []
        for k in range(parent.group.ngens):
            ck, lk = verma.chi.images[k], verma.lam.images[k]
            m = [[field.zero] * dim for _ in range(dim)]
            for (i, j), col in index.items():
                m[col][col] = (ck ** i) * lk
            mats.append(m)
        x = [[field.zero] * dim for _ in range(dim)]
        for (i, j), col in index.items():
            if i < s - 1:
                poly = p_mod(p_shift((field.one,), j, field), self.components[i + 1])
                tgt = i + 1
            else:
                poly = p_mod(p_shift((field.one,), j + 1, field), self.components[0])
                tgt = 0
            for jj, c in enumerate(poly):
                if not c.is_zero():
                    x[index[(tgt, jj)]][col] = c
        return ModuleRep(parent, mats, x)

    def __repr__(self):
        if self.tail is not None:
            return "<Submodule x^%d k[x] v>" % self.tail
        return "<Submodule (%s)>" % ", ".join(
            "0" if c is None else p_format(c) for c in self.components)


def p_is_zero_or_none(c):
    return c is None or p_is_zero(c)


def verma(parent, lam):
    return VermaModule(parent, lam)


def _split_components(verma_mod, f, s):
    """Split sum c_d x^d v into per-residue k[y]-polynomials."""
    field = verma_mod.parent.field
    comps = [dict() for _ in range(s)]
    for d, c in f.items():
        comps[d % s][d // s] = c
    out = []
    for comp in comps:
        if not comp:
            out.append(None)
            continue
        deg = max(comp)
        out.append(p_normalize([comp.get(j, field.zero) for j in range(deg + 1)]))
    return out


def _gcd_opt(a, b):
    if p_is_zero_or_none(a):
        return None if p_is_zero_or_none(b) else p_monic(b)
    if p_is_zero_or_none(b):
        return p_monic(a)
    return p_gcd(a, b)


def verma_submodule(verma_mod, generators):
    """Canonical form of the submodule generated by the given elements.

    Weight components of a generator already lie in the submodule (distinct
    characters are linearly independent), so each contributes its
    k[y]-polynomial to the matching component ideal; gcds and the x-closure
    propagation yield the canonical monic tuple.
    """
    s = verma_mod.chi.order()
    field = verma_mod.parent.field
    if s is None:
        degs = [min(f) for f in generators if f]
        if not degs:
            raise ModuleError("no nonzero generators")
        tail = min(degs)
        if tail == 0:
            raise ModuleError("generators are not inside the maximal "
                              "submodule: the submodule is all of M(lam)")
        return VermaSubmodule(verma_mod, tail=tail)

    comps = [None] * s
    for f in generators:
        if not f:
            continue
        for i, poly in enumerate(_split_components(verma_mod, f, s)):
            if poly is not None:
                comps[i] = _gcd_opt(comps[i], poly)
    # x-closure: f_(i+1) | f_i for i < s-1 and f_0 | y f_(s-1)
    changed = True
    while changed:
        changed = False
        for i in range(s - 1):
            new = _gcd_opt(comps[i + 1], comps[i])
            if new != comps[i + 1]:
                comps[i + 1] = new
                changed = True
        if comps[s - 1] is not None:
            shifted = p_shift(comps[s - 1], 1, field)
            new = _gcd_opt(comps[0], shifted)
            if new != comps[0]:
                comps[0] = new
                changed = True
    return VermaSubmodule(verma_mod, components=comps)


def is_maximal(submodule):
    return submodule.is_maximal()


def augmentation_submodule(verma_mod):
    """J(lam), generated by x v_lam."""
    return verma_submodule(verma_mod, [verma_mod.basis_vector(1)])


def skew_maximal_submodule(verma_mod, beta):
    """J_beta(lam), generated by (x^s - beta) v_lam; beta nonzero."""
    s = verma_mod.chi.order()
    if s is None:
        raise ModuleError("J_beta needs chi of finite order")
    field = verma_mod.parent.field
    gen = {s: field.one, 0: -beta}
    return verma_submodule(verma_mod, [gen])


class VermaIdealQuotient:
    """Outcome of reducing M(lam) modulo I M(lam)."""

    def __init__(self, kind, module=None, detail=""):
        self.kind = kind  # "module" | "zero" | "infinite"
        self.module = module
        self.detail = detail

    def __repr__(self):
        return "<VermaIdealQuotient %s %s>" % (self.kind, self.detail)


def verma_quotient_mod_ideal(verma_mod, quotient):
    """M(lam) / (I M(lam)) for a rank-one quotient's ideal.

    <x^n>: the n-dimensional truncation.  <x^n, 1-a^n>: zero when
    lam(a)^n != 1, else the truncation over the effective group.
    <x^n - beta(1-a^n)>: the block V(lam, beta (1 - lam(a)^n)).  The zero
    ideal leaves M(lam) itself, which has no matrix realization.
    """
    if isinstance(quotient, HopfOre):
        if quotient is not verma_mod.parent:
            raise ModuleError("quotient of a different extension")
        return VermaIdealQuotient("infinite",
                                  detail="the zero ideal leaves M(lam) itself")
    if not isinstance(quotient, QuotientHopf):
        raise ModuleError("expected a rank-one quotient")
    if quotient.parent is not verma_mod.parent:
        raise ModuleError("quotient of a different extension")
    form = quotient.form
    lam = verma_mod.lam
    field = verma_mod.parent.field
    n = form.n
    if form.variant is IdealVariant.ZERO:
        return VermaIdealQuotient("infinite",
                                  detail="the zero ideal leaves M(lam) itself")
    if form.variant is IdealVariant.XP_LINEAR:
        raise ModuleError("no module theory for the characteristic-p "
                          "linear ideal shape")
    la_n = lam(verma_mod.parent.a) ** n

    if form.variant is IdealVariant.XN_AND_GROUP:
        if not la_n.is_one():
            return VermaIdealQuotient(
                "zero", detail="(1-a^n) acts invertibly: I M(lam) = M(lam)")
        quo = quotient.group_quotient
        lam_eff = Character(field, quotient.group,
                            [lam(list(c)) for c in quo.new_gen_old_coords])
        return VermaIdealQuotient(
            "module", module=_truncated_verma(quotient, lam_eff, n),
            detail="truncation to degrees < %d over the effective group" % n)

    if form.variant is IdealVariant.XN_ONLY:
        return VermaIdealQuotient(
            "module", module=_truncated_verma(quotient, lam, n),
            detail="truncation to degrees < %d" % n)

    # skew shape: x^n acts on the quotient by beta (1 - lam(a)^n)
    gamma = form.beta * (field.one - la_n)
    mod = realize(quotient, BlockS(lam, gamma))
    return VermaIdealQuotient(
        "module", module=mod,
        detail="isomorphic to V(lam, beta(1 - lam(a)^n))")


def _truncated_verma(parent, lam, n):
    """Matrices of the n-dimensional truncation with x^n acting by zero."""
    field = parent.field
    chi = module_character(parent)
    mats = []
    for k in range(parent.group.ngens):
        ck, lk = chi.images[k], lam.images[k]
        mats.append([[(ck ** i) * lk if i == j else field.zero
                      for j in range(n)] for i in range(n)])
    x = [[field.zero] * n for _ in range(n)]
    for i in range(n - 1):
        x[i + 1][i] = field.one
    return ModuleRep(parent, mats, x)
