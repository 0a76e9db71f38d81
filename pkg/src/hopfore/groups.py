"""Finitely generated abelian groups, their characters and 1-cocycles.

Groups are presented as Z^r x Z/n_1 x ... x Z/n_t with formal generators;
elements are exponent vectors with torsion coordinates reduced.  Characters
take values in a field context; a 1-cocycle alpha with respect to a
character chi satisfies alpha(gh) = alpha(g) + chi(g) alpha(h) and is
stored by its generator values, validated through two finite identities
(pairwise compatibility and torsion consistency).
"""

from __future__ import annotations

from math import gcd

from .fields import FieldElement, mult_order, q_integer


class GroupError(ValueError):
    """Invalid group construction or operation."""


def _lcm(a, b):
    return a * b // gcd(a, b)


class AbelianGroup:
    """Z^r x prod Z/n_i, presented by generator orders (not invariant factors)."""

    __slots__ = ("free_rank", "torsion")

    def __init__(self, free_rank=0, torsion=()):
        if free_rank < 0:
            raise GroupError("free rank must be nonnegative")
        torsion = tuple(int(n) for n in torsion)
        if any(n < 2 for n in torsion):
            raise GroupError("torsion orders must be >= 2")
        self.free_rank = free_rank
        self.torsion = torsion

    @property
    def ngens(self):
        return self.free_rank + len(self.torsion)

    def __eq__(self, other):
        return (isinstance(other, AbelianGroup)
                and self.free_rank == other.free_rank
                and self.torsion == other.torsion)

    def __hash__(self):
        return hash((self.free_rank, self.torsion))

    def __repr__(self):
        parts = ["Z"] * self.free_rank + ["Z/%d" % n for n in self.torsion]
        return " x ".join(parts) if parts else "1"

    def reduce(self, coords):
        coords = list(coords)
        if len(coords) != self.ngens:
            raise GroupError("expected %d coordinates, got %d"
                             % (self.ngens, len(coords)))
        r = self.free_rank
        for i, n in enumerate(self.torsion):
            coords[r + i] %= n
        return tuple(coords)

    def elem(self, coords):
        return GroupElement(self, self.reduce(coords))

    def identity(self):
        return self.elem((0,) * self.ngens)

    def generator(self, i):
        coords = [0] * self.ngens
        coords[i] = 1
        return self.elem(coords)

    def generators(self):
        return [self.generator(i) for i in range(self.ngens)]

    def generator_order(self, i):
        """Order of generator i; None for a free generator."""
        if i < self.free_rank:
            return None
        return self.torsion[i - self.free_rank]

    def is_finite(self):
        return self.free_rank == 0

    def order(self):
        if not self.is_finite():
            return None
        out = 1
        for n in self.torsion:
            out *= n
        return out

    def exponent(self):
        if not self.is_finite():
            return None
        out = 1
        for n in self.torsion:
            out = _lcm(out, n)
        return out

    def elements(self):
        """All elements of a finite group, in lexicographic coordinate order."""
        if not self.is_finite():
            raise GroupError("cannot enumerate an infinite group")
        import itertools
        return [self.elem(c) for c in
                itertools.product(*[range(n) for n in self.torsion])]


class GroupElement:
    __slots__ = ("group", "coords")

    def __init__(self, group, coords):
        self.group = group
        self.coords = coords

    def __mul__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        if other.group != self.group:
            raise GroupError("elements of different groups")
        return self.group.elem([a + b for a, b in zip(self.coords, other.coords)])

    def inverse(self):
        return self.group.elem([-a for a in self.coords])

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return self.group.elem([a * k for a in self.coords])

    def is_identity(self):
        return all(a == 0 for a in self.coords)

    def order(self, bound=None):
        """Order of the element, None if infinite or beyond the bound."""
        r = self.group.free_rank
        if any(self.coords[:r]):
            return None
        out = 1
        for z, n in zip(self.coords[r:], self.group.torsion):
            out = _lcm(out, n // gcd(n, z) if z else 1)
        if bound is not None and out > bound:
            return None
        return out

    def __eq__(self, other):
        return (isinstance(other, GroupElement)
                and self.group == other.group and self.coords == other.coords)

    def __hash__(self):
        return hash(self.coords)

    def sort_key(self):
        return self.coords

    def __repr__(self):
        if self.group.ngens == 1:
            return "g^%d" % self.coords[0] if self.coords[0] != 1 else "g"
        return "g" + repr(tuple(self.coords))


class Character:
    """A character of G over a field context, stored by generator images."""

    __slots__ = ("field", "group", "images")

    def __init__(self, field, group, images, validate=True):
        images = tuple(images)
        if len(images) != group.ngens:
            raise GroupError("expected %d images, got %d"
                             % (group.ngens, len(images)))
        if validate:
            for i, im in enumerate(images):
                if not isinstance(im, FieldElement) or im.field != field:
                    raise GroupError("image %d does not live in %r" % (i, field))
                if im.is_zero():
                    raise GroupError("character images must be nonzero")
                n = group.generator_order(i)
                if n is not None and not (im ** n).is_one():
                    raise GroupError(
                        "image of generator %d must be an %d-th root of unity" % (i, n))
        self.field = field
        self.group = group
        self.images = images

    @classmethod
    def trivial(cls, field, group):
        return cls(field, group, [field.one] * group.ngens, validate=False)

    def __call__(self, g):
        if isinstance(g, GroupElement):
            if g.group != self.group:
                raise GroupError("element of a different group")
            coords = g.coords
        else:
            coords = self.group.reduce(g)
        acc = self.field.one
        for im, z in zip(self.images, coords):
            if z:
                acc = acc * im ** z
        return acc

    def __mul__(self, other):
        if not isinstance(other, Character):
            return NotImplemented
        if other.group != self.group or other.field != self.field:
            raise GroupError("characters of different contexts")
        return Character(self.field, self.group,
                         [a * b for a, b in zip(self.images, other.images)],
                         validate=False)

    def inverse(self):
        return Character(self.field, self.group,
                         [im.inverse() for im in self.images], validate=False)

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return Character(self.field, self.group,
                         [im ** k for im in self.images], validate=False)

    def is_trivial(self):
        return all(im.is_one() for im in self.images)

    def order(self, bound=None):
        """Order in the character group; None if infinite or beyond bound."""
        out = 1
        for i, im in enumerate(self.images):
            n = self.group.generator_order(i)
            cap = n if n is not None else self.field.max_root_order()
            d = mult_order(im, cap)
            if d is None:
                return None
            out = _lcm(out, d)
        if bound is not None and out > bound:
            return None
        return out

    def __eq__(self, other):
        return (isinstance(other, Character) and self.group == other.group
                and self.field == other.field and self.images == other.images)

    def __hash__(self):
        return hash((self.group, self.images))

    def sort_key(self):
        return tuple(im.sort_key() for im in self.images)

    def __repr__(self):
        return "chi(%s)" % ", ".join(str(im) for im in self.images)


def character_order(chi, bound):
    """Order of chi in the character group, None if infinite or > bound."""
    return chi.order(bound)


def enumerate_characters(field, group):
    """All characters of a finite group, in lexicographic exponent order.

    Requires a primitive m-th root of unity in the field for m the group
    exponent.
    """
    if not group.is_finite():
        raise GroupError("cannot enumerate characters of an infinite group")
    import itertools
    m = group.exponent()
    if m == 1:
        return [Character.trivial(field, group)]
    w = field.root_of_unity(m)
    powers = [w ** k for k in range(m)]
    out = []
    for exps in itertools.product(*[range(n) for n in group.torsion]):
        images = [powers[(m // n) * e % m] for n, e in zip(group.torsion, exps)]
        out.append(Character(field, group, images, validate=False))
    return out


# ---------------------------------------------------------------------------
# 1-cocycles

def cocycle_violations(chi, values):
    """Violations of the finite cocycle identities, as (label, detail) pairs.

    For an abelian group the cocycle law on generator values reduces to
    pairwise compatibility (1 - chi(e_j)) a_i = (1 - chi(e_i)) a_j plus
    torsion consistency (n_i)_{chi(e_i)} a_i = 0.
    """
    group = chi.group
    one = chi.field.one
    out = []
    for i in range(group.ngens):
        n = group.generator_order(i)
        if n is not None:
            lhs = q_integer(n, chi.images[i]) * values[i]
            if not lhs.is_zero():
                out.append(("torsion", "generator %d: (%d)_chi(e) * alpha = %s != 0"
                            % (i, n, lhs)))
    for i in range(group.ngens):
        for j in range(i + 1, group.ngens):
            lhs = (one - chi.images[j]) * values[i]
            rhs = (one - chi.images[i]) * values[j]
            if lhs != rhs:
                out.append(("pairwise", "generators (%d, %d): %s != %s"
                            % (i, j, lhs, rhs)))
    return out


class Cocycle:
    """A 1-cocycle alpha in Z^1_chi(G), stored by generator values."""

    __slots__ = ("chi", "values")

    def __init__(self, chi, values, validate=True):
        values = tuple(values)
        if len(values) != chi.group.ngens:
            raise GroupError("expected %d cocycle values" % chi.group.ngens)
        if validate:
            bad = cocycle_violations(chi, values)
            if bad:
                raise GroupError("invalid cocycle: " + "; ".join(d for _, d in bad))
        self.chi = chi
        self.values = values

    @classmethod
    def zero(cls, chi):
        return cls(chi, [chi.field.zero] * chi.group.ngens, validate=False)

    def is_zero(self):
        return all(v.is_zero() for v in self.values)

    def scale(self, c):
        return Cocycle(self.chi, [v * c for v in self.values], validate=False)

    def __call__(self, g):
        """alpha(g), expanding g in generators through the cocycle law.

        alpha(e^z) = alpha(e) (z)_{chi(e)} for z >= 0 and
        alpha(e^-m) = -chi(e^-m) alpha(e^m); contributions combine as
        alpha(uv) = alpha(u) + chi(u) alpha(v) in canonical generator order.
        """
        if isinstance(g, GroupElement):
            if g.group != self.chi.group:
                raise GroupError("element of a different group")
            coords = g.coords
        else:
            coords = self.chi.group.reduce(g)
        field = self.chi.field
        total = field.zero
        chi_acc = field.one
        for i, z in enumerate(coords):
            if z:
                im = self.chi.images[i]
                if z > 0:
                    part = self.values[i] * q_integer(z, im)
                else:
                    part = -(im ** z) * self.values[i] * q_integer(-z, im)
                total = total + chi_acc * part
                chi_acc = chi_acc * im ** z
        return total

    def __eq__(self, other):
        return (isinstance(other, Cocycle) and self.chi == other.chi
                and self.values == other.values)

    def __repr__(self):
        return "alpha(%s)" % ", ".join(str(v) for v in self.values)


def make_cocycle(chi, values):
    """Validated cocycle constructor."""
    return Cocycle(chi, values, validate=True)


# ---------------------------------------------------------------------------
# character classes modulo <chi>

def same_class(lam, sigma, chi):
    """Whether lam = chi^t sigma for some t; requires chi of finite order."""
    s = chi.order()
    if s is None:
        raise GroupError("character classes need a finite-order reference character")
    acc = sigma
    for _ in range(s):
        if acc == lam:
            return True
        acc = acc * chi
    return False


class CharacterClass:
    """The coset of a character modulo the cyclic subgroup <chi>."""

    __slots__ = ("chi", "representative")

    def __init__(self, chi, lam):
        s = chi.order()
        if s is None:
            raise GroupError("character classes need a finite-order reference character")
        orbit = []
        acc = lam
        for _ in range(s):
            orbit.append(acc)
            acc = acc * chi
        self.chi = chi
        self.representative = min(orbit, key=lambda c: c.sort_key())

    def members(self):
        s = self.chi.order()
        out = []
        acc = self.representative
        for _ in range(s):
            out.append(acc)
            acc = acc * self.chi
        return out

    def __eq__(self, other):
        return (isinstance(other, CharacterClass) and self.chi == other.chi
                and self.representative == other.representative)

    def __hash__(self):
        return hash((self.chi, self.representative))

    def __repr__(self):
        return "[%r]" % self.representative


def class_of(lam, chi):
    return CharacterClass(chi, lam)


# ---------------------------------------------------------------------------
# quotients by a cyclic subgroup (needed when an ideal kills a group element)

def _smith_diagonalize(a):
    """Diagonalize an integer matrix by unimodular row/column operations.

    Returns (d, u, uinv) with u * a * v = d for some unimodular v that is
    not tracked.  Row operations are mirrored on u and inverted on uinv so
    that uinv columns express the new basis in the old generators.
    """
    rows = len(a)
    cols = len(a[0]) if rows else 0
    d = [list(r) for r in a]
    u = [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]
    uinv = [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]

    def row_add(i, j, c):  # row_i += c*row_j ; uinv col_j -= c*col_i
        d[i] = [x + c * y for x, y in zip(d[i], d[j])]
        u[i] = [x + c * y for x, y in zip(u[i], u[j])]
        for k in range(rows):
            uinv[k][j] -= c * uinv[k][i]

    def row_swap(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]
        for k in range(rows):
            uinv[k][i], uinv[k][j] = uinv[k][j], uinv[k][i]

    def row_neg(i):
        d[i] = [-x for x in d[i]]
        u[i] = [-x for x in u[i]]
        for k in range(rows):
            uinv[k][i] = -uinv[k][i]

    def col_add(i, j, c):  # col_i += c*col_j
        for r in range(rows):
            d[r][i] += c * d[r][j]

    def col_swap(i, j):
        for r in range(rows):
            d[r][i], d[r][j] = d[r][j], d[r][i]

    t = 0
    while t < rows and t < cols:
        # find a nonzero pivot in the trailing submatrix
        pivot = None
        for i in range(t, rows):
            for j in range(t, cols):
                if d[i][j] != 0 and (pivot is None or abs(d[i][j]) < abs(d[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        i, j = pivot
        if i != t:
            row_swap(t, i)
        if j != t:
            col_swap(t, j)
        if d[t][t] < 0:
            row_neg(t)
        dirty = False
        for i in range(t + 1, rows):
            if d[i][t] % d[t][t] != 0:
                dirty = True
            row_add(i, t, -(d[i][t] // d[t][t]))
        for j in range(t + 1, cols):
            if d[t][j] % d[t][t] != 0:
                dirty = True
            col_add(j, t, -(d[t][j] // d[t][t]))
        if dirty or any(d[i][t] for i in range(t + 1, rows)) \
                or any(d[t][j] for j in range(t + 1, cols)):
            continue  # remainders became new smaller entries; repeat at t
        t += 1
    return d, u, uinv


class GroupQuotient:
    """G / <c> with a projection map and old-coordinate data for new generators."""

    __slots__ = ("source", "group", "killed", "_u", "_kept", "new_gen_old_coords")

    def __init__(self, source, group, killed, u, kept, new_gen_old_coords):
        self.source = source
        self.group = group
        self.killed = killed
        self._u = u
        self._kept = kept
        self.new_gen_old_coords = new_gen_old_coords

    def project(self, g):
        if g.group != self.source:
            raise GroupError("element of a different group")
        y = [sum(row[k] * g.coords[k] for k in range(len(g.coords)))
             for row in self._u]
        return self.group.elem([y[i] for i in self._kept])


def quotient_by_cyclic(group, elt):
    """Present G/<elt> as a new AbelianGroup with a projection map."""
    if elt.group != group:
        raise GroupError("element of a different group")
    k = group.ngens
    r = group.free_rank
    rel_cols = []
    for i, n in enumerate(group.torsion):
        col = [0] * k
        col[r + i] = n
        rel_cols.append(col)
    rel_cols.append(list(elt.coords))
    a = [[col[i] for col in rel_cols] for i in range(k)]
    d, _u, uinv = _smith_diagonalize(a)
    cols = len(rel_cols)
    orders = []
    for i in range(k):
        orders.append(d[i][i] if i < cols else 0)
    free_idx = [i for i in range(k) if orders[i] == 0]
    tors_idx = [i for i in range(k) if orders[i] >= 2]
    kept = free_idx + tors_idx
    new_group = AbelianGroup(free_rank=len(free_idx),
                             torsion=[orders[i] for i in tors_idx])
    gen_coords = [tuple(uinv[row][i] for row in range(k)) for i in kept]
    return GroupQuotient(group, new_group, elt, _u, kept, gen_coords)


def descend_character(chi, quotient):
    """Push a character down along G -> G/<c>; requires chi(c) = 1."""
    if not chi(quotient.killed).is_one():
        raise GroupError("character does not vanish on the killed subgroup")
    images = [chi(coords) for coords in
              [list(c) for c in quotient.new_gen_old_coords]]
    return Character(chi.field, quotient.group, images, validate=True)


def descend_cocycle(alpha, quotient, new_chi):
    """Push a cocycle down along G -> G/<c>; requires alpha(c) = 0."""
    if not alpha(quotient.killed).is_zero():
        raise GroupError("cocycle does not vanish on the killed subgroup")
    values = [alpha(list(c)) for c in quotient.new_gen_old_coords]
    return Cocycle(new_chi, values, validate=True)
