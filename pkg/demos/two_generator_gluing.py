"""Gluing two copies of N: the semigroup <2,3> as N glued to N along 3u ~ 2v.

Run: python demos/two_generator_gluing.py
"""
from frobenius_gluing import (Free, Glued, enumerate_decompositions, poincare_table,
                              predicted_betti, verify_gluing)
from frobenius_gluing.monoid import element_label

N = Free(1)
G = Glued(N, N, (3,), (2,))
print("generators:", [element_label(g) for g in G.generators])
print("rho =", element_label(G.rho), "of degree", G.degree(G.rho))

# Canonical forms n*rho + hat1 + hat2, listed with their image in N
for x in G.elements_up_to(12):
    print(f"{G.degree(x):>3}  {element_label(x)}")

# Decompositions of 2*rho: (n+2 choose 2) = 6 of them
two_rho = G.multiple(2, G.rho)
for d in enumerate_decompositions(G, two_rho):
    print("  l =", d.ell, " lam1 =", d.lam1, " lam2 =", d.lam2)

# Direct table against the prediction assembled from the two factors
T = poincare_table(G, 18)
print(T.to_text())
x = G.normalize((4,), (0,))  # maps to 8
print("predicted at", element_label(x), "->", predicted_betti(G, x).to_dict())

report = verify_gluing(G, 40)
print(report.to_text())
