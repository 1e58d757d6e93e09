"""Parameter stratification of the return map.

Scaling q by a parameter splits each map coefficient into strata; the
support pattern, the closed-form linear columns, and the quadratic
(Melnikov) expressions are all exact.

Run:  python demos/03_parametric_tables.py
"""

from abellab import (
    DELTA_ON_P,
    EPS_ON_Q,
    FORWARD,
    Interval,
    Poly,
    first_order_column,
    infinitesimal_order,
    melnikov,
    moment,
    parametric_table,
)

iv = Interval(-1, 1)
P = Poly([-1, 0, 1])          # x^2 - 1
Q = Poly([0, -1, 0, 1])       # x^3 - x
p, q = P.derivative(), Q.derivative()

print("== stratified table for P = x^2 - 1, Q = x^3 - x on [-1, 1] ==")
table = parametric_table(p, q, iv, 8, EPS_ON_Q, FORWARD)
for (k, j), v in sorted(table.entries.items()):
    print("  entry(%d, %d) = %s" % (k, j, v))
print("support law: j = k-1 (mod 2) and 1 <= j <= k-3 throughout")

print()
print("== the linear column has a closed form ==")
print("entry(4, 1)             =", table.entry(4, 1))
print("closed form (i = 1)     =", first_order_column(P, Q, iv, 1, EPS_ON_Q))
print("moment m_1(P, Q)        =", moment(P, Q, iv, 1))

print()
print("== the other parameterization carries the same values ==")
delta = parametric_table(p, q, iv, 8, DELTA_ON_P, FORWARD)
for (k, j), v in sorted(delta.entries.items()):
    print("  entry(%d, %d) = %s" % (k, j, v))

print()
print("== quadratic stratum and the infinitesimal order ==")
P2 = Poly([0, -1, 1])         # x^2 - x on [0, 1]
Q2 = Poly([0, 2, -3, 1])
iv2 = Interval(0, 1)
t2 = parametric_table(P2.derivative(), Q2.derivative(), iv2, 6, EPS_ON_Q, FORWARD)
print("entry(5, 2) =", t2.entry(5, 2))
print("2 * D6      =", melnikov(6, P2, Q2, iv2) * 2)
print("infinitesimal order:", infinitesimal_order(p, q, iv, 8, EPS_ON_Q))
