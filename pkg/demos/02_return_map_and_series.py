"""The return map of y' = p y^3 + q y^2 along an interval.

The forward flow recursion produces exact map coefficients; series
reversion gives the backward map, which reproduces the classical
tabulated combinations of iterated integrals (with q playing index 1).

Run:  python demos/02_return_map_and_series.py
"""

from abellab import (
    Interval,
    Poly,
    invert_series,
    iterated_integral,
    poincare_coeffs,
    tabulated_coefficient,
)

iv = Interval(0, 1)
one = Poly([1])

print("== constant coefficients p = q = 1 on [0, 1] ==")
vs = poincare_coeffs(one, one, iv, 6)
print("forward coefficients v2..v6: ", [str(v) for v in vs])
ws = invert_series(vs)
print("backward coefficients w2..w6:", [str(w) for w in ws])

print()
print("== the same backward coefficients from iterated integrals ==")
for k in range(2, 7):
    print("order %d tabulated combination:" % k, tabulated_coefficient(k, one, one, iv, "h1=q"))

print()
print("== individual iterated integrals ==")
print("I_(1,1)  with h1 = 1:", iterated_integral((1, 1), one, one, iv))
print("I_(1,2)  with h2 = 2x:", iterated_integral((1, 2), one, Poly([0, 2]), iv))

print()
print("== a solvable case: p = 0, q = 1 gives the map y -> y/(1 - y) ==")
print([str(v) for v in poincare_coeffs(Poly.zero(), one, iv, 8)])
