"""Trigonometric families: moment vanishing without a common composition
factor.

With coprime base frequencies, both first-moment families vanish, yet a
higher mixed moment can be nonzero, certifying that no common factor
exists.  The certificate value for the classical (3, 2) cell is an exact
cubic form in the family coefficients.

Run:  python demos/06_trig_families.py
"""

from abellab import (
    Poly,
    TrigPoly,
    build_family,
    modify_family,
    non_cc_certificate,
    rational,
    sqrtD,
    trig_moment,
)

print("== the base family: P = cos 3t, Q = sin 2t ==")
P, Q = build_family(3, 2, {1: (1, 0)}, {1: (0, 1)})
print("first moments int Q^i dP for i <= 8:", all(
    not trig_moment(P, Q, i, 1) for i in range(9)))
print("first moments int P^i dQ for i <= 8:", all(
    not trig_moment(Q, P, i, 1) for i in range(9)))
cert = non_cc_certificate(P, Q, 6, 6)
print("first nonzero mixed moment: (i, j) = (%d, %d), value %s" % (cert[0], cert[1], cert[2]))

print()
print("== the modified family Q + R(cos 2t) ==")
gamma = rational(5)
R = Poly([0, -3, 0, 4]).scale(gamma)  # gamma (4z^3 - 3z): adds gamma cos 6t
Qmod = modify_family(Q, 2, R)
print("Q modified:", Qmod)
print("both families still vanish:", all(
    not trig_moment(P, Qmod, i, 1) and not trig_moment(Qmod, P, i, 1)
    for i in range(9)))

print()
print("== the (3,2) certificate as a function of the coefficients ==")
print("value = (3/4) alpha (alpha^2 - 3 beta^2) * pi for")
print("Q = alpha sin 2t + beta cos 2t + gamma cos 6t; e.g.:")
for alpha, beta in ((rational(1), rational(0)), (sqrtD(3), rational(1)), (rational(2), rational(1))):
    Qabc = TrigPoly.sin(2, alpha) + TrigPoly.cos(2, beta) + TrigPoly.cos(6, rational(1))
    print("  alpha = %s, beta = %s -> %s" % (alpha, beta, trig_moment(P, Qabc, 3, 2)))
