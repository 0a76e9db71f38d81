"""Gaussian binomials at roots of unity.

The q-Pascal recursion stays exact where the factorial quotient breaks
down; at a primitive n-th root of unity every middle entry of row n
vanishes, and in characteristic p the same happens exactly for n = N p^r
with q a primitive N-th root.
"""

from hopfore import (cyclotomic, gaussian_vanishing,
                     gaussian_vanishing_closed_form, prime_field, q_binomial,
                     rationals)

print("q-Pascal triangle over Q at q = 2:")
Q = rationals()
two = Q.from_int(2)
for n in range(6):
    row = [str(q_binomial(n, m, two)) for m in range(n + 1)]
    print("  " + " ".join(row))

print()
print("the same triangle at q = i (a primitive 4th root of unity):")
F = cyclotomic(4)
for n in range(6):
    row = [str(q_binomial(n, m, F.zeta)) for m in range(n + 1)]
    print("  " + "  ".join(row))
print("row 4 collapses to its endpoints: that is the vanishing profile.")

print()
print("vanishing profile, brute force vs closed form:")
samples = [
    ("q = i, n = 4", F.zeta, 4),
    ("q = i, n = 6", F.zeta, 6),
    ("q = zeta_3, n = 6", cyclotomic(3).zeta, 6),
    ("q = -1, n = 2", -Q.one, 2),
]
for label, q, n in samples:
    brute = gaussian_vanishing(n, q)
    closed = gaussian_vanishing_closed_form(n, q)
    print("  %-20s brute=%s closed=%s" % (label, brute, closed))

print()
print("characteristic 2: rows n = 2^r vanish at q = 1 (Kummer):")
F2 = prime_field(2)
for n in range(2, 9):
    print("  n = %d: %s" % (n, gaussian_vanishing(n, F2.one)))
