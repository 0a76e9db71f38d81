"""Univariate polynomials with FieldElement coefficients.

Minimal gcd arithmetic over k[y], used for canonical forms of Verma
submodules.  Polynomials are tuples of coefficients, ascending degree,
with no trailing zeros; the zero polynomial is the empty tuple.
"""

from __future__ import annotations


def p_normalize(coeffs):
    cs = list(coeffs)
    while cs and cs[-1].is_zero():
        cs.pop()
    return tuple(cs)


def p_from_scalar(c):
    return p_normalize([c])


def p_degree(a):
    return len(a) - 1 if a else None


def p_is_zero(a):
    return not a


def p_add(a, b):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else None
        y = b[i] if i < len(b) else None
        if x is None:
            out.append(y)
        elif y is None:
            out.append(x)
        else:
            out.append(x + y)
    return p_normalize(out)


def p_neg(a):
    return tuple(-x for x in a)


def p_sub(a, b):
    return p_add(a, p_neg(b))


def p_scale(c, a):
    if c.is_zero():
        return ()
    return p_normalize([c * x for x in a])


def p_mul(a, b):
    if not a or not b:
        return ()
    field = a[0].field
    out = [field.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x.is_zero():
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
    return p_normalize(out)


def p_shift(a, k, field):
    """Multiply by y^k."""
    if not a:
        return ()
    return tuple([field.zero] * k) + tuple(a)


def p_divmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    field = b[-1].field
    rem = list(a)
    lead_inv = b[-1].inverse()
    dn = len(b) - 1
    q = [field.zero] * max(len(rem) - dn, 0)
    for i in range(len(rem) - 1, dn - 1, -1):
        c = rem[i] * lead_inv
        if not c.is_zero():
            q[i - dn] = c
            for j, y in enumerate(b):
                rem[i - dn + j] = rem[i - dn + j] - c * y
        rem.pop()
    return p_normalize(q), p_normalize(rem)


def p_mod(a, b):
    return p_divmod(a, b)[1]


def p_monic(a):
    if not a:
        return ()
    lead = a[-1]
    if lead.is_one():
        return tuple(a)
    inv = lead.inverse()
    return tuple(x * inv for x in a)


def p_gcd(a, b):
    """Monic gcd; gcd(0, b) = monic b."""
    a, b = p_normalize(a), p_normalize(b)
    while b:
        a, b = b, p_mod(a, b)
    return p_monic(a)


def p_divides(a, b):
    """Whether a divides b (a nonzero)."""
    return p_is_zero(p_mod(b, a))


def p_eval(a, x):
    acc = x.field.zero
    for c in reversed(a):
        acc = acc * x + c
    return acc


def p_format(a, symbol="y"):
    if not a:
        return "0"
    parts = []
    for i, c in enumerate(a):
        if c.is_zero():
            continue
        body = str(c)
        if i >= 1:
            sym = symbol if i == 1 else "%s^%d" % (symbol, i)
            body = sym if c.is_one() else "(%s)*%s" % (body, sym)
        parts.append(body)
    return " + ".join(parts)
