"""Right factors with equal endpoint values, definiteness, and the
composition condition.

The degree-6 Chebyshev polynomial on [-sqrt3/2, sqrt3/2] is the smallest
polynomial with two independent factor classes; the degree-10 power
family is the other low-degree example.

Run:  python demos/04_factors_and_composition.py
"""

from abellab import (
    Interval,
    Poly,
    cc_check,
    chebyshev,
    indecomposable_factors,
    is_definite,
    rational,
    right_factors,
    sqrtD,
    structure_report,
)

half_r3 = sqrtD(3) * rational(1, 2)
iv3 = Interval(-half_r3, half_r3)
P6 = chebyshev(6) + Poly.one()

print("== factor classes of 1 + T6 on [-sqrt3/2, sqrt3/2] ==")
print("all right factor degrees:", right_factors(P6, iv3).degrees)
fs = indecomposable_factors(P6, iv3)
print("indecomposable classes (s = %d):" % fs.s)
for W in fs.factors:
    print("  W =", W)
print("definite:", is_definite(P6, iv3))
print("report:", structure_report(P6, iv3).tag)

print()
print("== the degree-10 power family ==")
P10 = Poly([0, 0, 1]) * (Poly([-1, 0, 0, 0, 1]) ** 2)
iv = Interval(-1, 1)
fs10 = indecomposable_factors(P10, iv)
print("factors:", [str(W) for W in fs10.factors])
print("report:", structure_report(P10, iv).tag)

print()
print("== composition witnesses ==")
P = Poly([-1, 0, 1]) ** 2
Q = Poly([0, 0, -1, 0, 1])
w = cc_check(P, Q, iv)
print("P = (x^2-1)^2, Q = x^4 - x^2 share W =", w.W)
print("  reduced: P =", w.P_reduced, " in W;  Q =", w.Q_reduced, " in W")
print("P = x^2, Q = x^3 - x:", cc_check(Poly([0, 0, 1]), Poly([0, -1, 0, 1]), iv))
