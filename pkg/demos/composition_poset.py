"""Compositions of an element and chains in its Frobenius interval.

Run: python demos/composition_poset.py
"""
from frobenius_gluing import Free, composition_check, composition_poset, numerical_semigroup
from frobenius_gluing.frobenius import face_counts
from frobenius_gluing.poset import count_compositions, phi

S = numerical_semigroup(2, 3)
C = composition_poset(S, (6,))
for c in C.elements:
    print(c, "->", phi(S, (6,), c))
print("relations:", [(C.elements[i], C.elements[j]) for i, j in C.relations()])

# |C(lam)| matches the number of chains of (0, lam); both grow fast
F2 = Free(2)
for k in range(1, 8):
    lam = (k, k)
    print(lam, count_compositions(F2, lam), sum(face_counts(F2, lam)))

# Homology of C(lam) against the Frobenius complex, for small lam
for lam in [(8,), (11,), (13,)]:
    c = composition_check(S, lam)
    print(lam, c.compositions, c.composition_betti.to_dict(), c.frobenius_betti.to_dict(), c.ok)
