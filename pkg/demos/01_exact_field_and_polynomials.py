"""Exact scalars in Q(sqrt 3), polynomial calculus, and Chebyshev identities.

Run:  python demos/01_exact_field_and_polynomials.py
"""

from abellab import (
    Interval,
    Poly,
    chebyshev,
    definite_integral,
    in_subring,
    parse_scalar,
    rational,
    sqrtD,
)

r3 = sqrtD(3)
half = rational(1, 2)

print("== exact arithmetic in Q(sqrt 3) ==")
x = half + r3
y = half - r3
print("(1/2 + sqrt3)(1/2 - sqrt3) =", x * y)
print("1 / (1 + sqrt3)            =", rational(1) / (rational(1) + r3))
print("parsed '-3/4*r3'           =", parse_scalar("-3/4*r3"))

print()
print("== Chebyshev polynomials and composition ==")
T2, T3, T6 = chebyshev(2), chebyshev(3), chebyshev(6)
print("T6 =", T6)
print("T3 o T2 == T6:", T3.compose(T2) == T6)
print("T2 o T3 == T6:", T2.compose(T3) == T6)
print("T6 at sqrt3/2 =", T6.eval(r3 * half))

print()
print("== subring membership by repeated division ==")
print("T6 as a polynomial in T2:", in_subring(T6, T2))
print("x^3 as a polynomial in x^2:", in_subring(Poly.monomial(3), Poly.monomial(2)))

print()
print("== exact integrals ==")
iv = Interval(-r3 * half, r3 * half)
print("int x^2 over [-sqrt3/2, sqrt3/2] =", definite_integral(Poly.monomial(2), iv))
