"""Adjoining a square root of 6 to <2,3> and checking the series identity.

Run: python demos/adjoin_root.py
"""
from frobenius_gluing import (GF2, adjoin_root, numerical_semigroup, poincare_table,
                              predicted_poincare_table, verify_gluing)

S = numerical_semigroup(2, 3)
A = adjoin_root(S, (6,), 2)
print("degree weights", A.weights, "rho has degree", A.degree(A.rho))

direct = poincare_table(A, 30)
series = predicted_poincare_table(A, 30, how="series")
print(direct.to_text())
print("series prediction differs at:", series.diff(direct) or "nowhere")

# Same check element by element, over GF(2) this time
print(verify_gluing(A, 30, GF2).to_text())
