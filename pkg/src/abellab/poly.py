"""Dense univariate polynomials over the exact scalar field.

Coefficients are stored ascending by power with no trailing zeros; the
zero polynomial is the empty list and its degree is reported as ``None``
(a distinct marker, never -1, so degree arithmetic cannot silently work
on it).  Everything is immutable and exact: evaluation is Horner's rule,
primitives divide by exact integers, and composition/division stay in
the field.
"""

from __future__ import annotations

from math import gcd

from .errors import ConstantFactorError, PreconditionError
from .field import ONE, ZERO, Scalar


def _coerce_list(coeffs):
    out = [Scalar.coerce(c) for c in coeffs]
    while out and not out[-1]:
        out.pop()
    return out


class Poly:
    """Dense univariate polynomial; index = power."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = tuple(_coerce_list(coeffs))

    # -- basics ---------------------------------------------------------------

    @staticmethod
    def zero() -> "Poly":
        return _P_ZERO

    @staticmethod
    def one() -> "Poly":
        return _P_ONE

    @staticmethod
    def x() -> "Poly":
        return _P_X

    @staticmethod
    def constant(c) -> "Poly":
        return Poly([c])

    @staticmethod
    def monomial(power: int, c=1) -> "Poly":
        return Poly([0] * power + [c])

    @property
    def degree(self):
        """Degree as an int, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __getitem__(self, i: int) -> Scalar:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else ZERO

    def leading(self) -> Scalar:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    # -- ring operations --------------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, Poly):
            a, b = self.coeffs, other.coeffs
            if not a or not b:
                return _P_ZERO
            out = [ZERO] * (len(a) + len(b) - 1)
            for i, ca in enumerate(a):
                if not ca:
                    continue
                for j, cb in enumerate(b):
                    if cb:
                        out[i + j] = out[i + j] + ca * cb
            return Poly(out)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, c) -> "Poly":
        c = Scalar.coerce(c)
        if not c:
            return _P_ZERO
        return Poly([a * c for a in self.coeffs])

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power")
        result = _P_ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def shift(self, k: int) -> "Poly":
        """Multiply by x^k."""
        if not self.coeffs:
            return _P_ZERO
        return Poly([ZERO] * k + list(self.coeffs))

    # -- calculus -----------------------------------------------------------------

    def eval(self, x) -> Scalar:
        x = Scalar.coerce(x)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __call__(self, x) -> Scalar:
        return self.eval(x)

    def derivative(self) -> "Poly":
        return Poly([c * i for i, c in enumerate(self.coeffs) if i >= 1])

    def primitive(self, a) -> "Poly":
        """The antiderivative F with F' = self and F(a) = 0."""
        out = [ZERO] + [c / (i + 1) for i, c in enumerate(self.coeffs)]
        F = Poly(out)
        c0 = F.eval(a)
        if not c0:
            return F
        out[0] = -c0
        return Poly(out)

    def compose(self, inner: "Poly") -> "Poly":
        """self(inner(x)), by Horner over polynomials."""
        acc = _P_ZERO
        for c in reversed(self.coeffs):
            acc = acc * inner + Poly([c])
        return acc

    def divmod(self, divisor: "Poly"):
        """Quotient and remainder over the field; divisor must be nonzero."""
        if not divisor:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = divisor.degree
        lead = divisor.leading()
        if len(rem) - 1 < d:
            return _P_ZERO, self
        quot = [ZERO] * (len(rem) - d)
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i]
            if not c:
                continue
            f = c / lead
            quot[i - d] = f
            for j, dc in enumerate(divisor.coeffs):
                rem[i - d + j] = rem[i - d + j] - f * dc
        return Poly(quot), Poly(rem)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append("(%s)*x" % c)
            else:
                parts.append("(%s)*x^%d" % (c, i))
        return " + ".join(parts)

    def __repr__(self):
        return "Poly[%s]" % (self.degree if self.coeffs else "zero")


_P_ZERO = Poly.__new__(Poly)
object.__setattr__(_P_ZERO, "coeffs", ())
_P_ONE = Poly.__new__(Poly)
object.__setattr__(_P_ONE, "coeffs", (ONE,))
_P_X = Poly.__new__(Poly)
object.__setattr__(_P_X, "coeffs", (ZERO, ONE))


class Interval:
    """An oriented interval [a, b] with distinct exact endpoints."""

    __slots__ = ("a", "b")

    def __init__(self, a, b):
        a = Scalar.coerce(a)
        b = Scalar.coerce(b)
        if a == b:
            raise ValueError("interval endpoints must differ")
        self.a = a
        self.b = b

    def __eq__(self, other):
        if not isinstance(other, Interval):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __repr__(self):
        return "Interval(%s, %s)" % (self.a, self.b)


class PCPair:
    """A pair of primitives P, Q vanishing at both endpoints of an interval.

    These are exactly the pairs for which the first two return-map
    equations already hold, the natural domain for everything downstream.
    """

    __slots__ = ("P", "Q", "iv")

    def __init__(self, P: Poly, Q: Poly, iv: Interval):
        for name, F in (("P", P), ("Q", Q)):
            if F.eval(iv.a) or F.eval(iv.b):
                raise PreconditionError(
                    "%s must vanish at both endpoints to form a primitive pair" % name
                )
        self.P = P
        self.Q = Q
        self.iv = iv

    def __repr__(self):
        return "PCPair(deg P=%s, deg Q=%s)" % (self.P.degree, self.Q.degree)


def poly_eval(f: Poly, x) -> Scalar:
    return f.eval(x)


def poly_compose(f: Poly, g: Poly) -> Poly:
    return f.compose(g)


def primitive(f: Poly, a) -> Poly:
    return f.primitive(a)


def definite_integral(f: Poly, iv: Interval) -> Scalar:
    """Exact integral of f over [a, b]."""
    F = f.primitive(iv.a)
    return F.eval(iv.b)


def chebyshev(d: int) -> Poly:
    """Chebyshev polynomial of degree d via the three-term recurrence."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    if d == 0:
        return _P_ONE
    prev, cur = _P_ONE, _P_X
    two_x = Poly([0, 2])
    for _ in range(d - 1):
        prev, cur = cur, two_x * cur - prev
    return cur


def in_subring(Q: Poly, W: Poly):
    """Express Q as a polynomial in W, or return None.

    Uses the W-adic expansion: repeatedly divide with remainder by W.
    Q lies in the ring generated by W exactly when every remainder is a
    constant, and those constants are the coefficients of the witness.
    """
    if W.is_constant():
        raise ConstantFactorError("constant factor")
    digits = []
    cur = Q
    while True:
        cur, rem = cur.divmod(W)
        if not rem.is_constant():
            return None
        digits.append(rem[0])
        if not cur:
            break
    result = Poly(digits)
    return result


def exponent_condition(f: Poly, primes, which: str) -> bool:
    """Coefficient-support test by exponent arithmetic.

    ``which="U"``: every exponent with a nonzero coefficient is either a
    power of one of the given primes or coprime to all of them.
    ``which="U1"``: every such exponent has all its prime factors among
    the given primes.  Exponent 0 passes vacuously in both modes.
    """
    primes = sorted(set(primes))
    if not primes:
        raise ValueError("need at least one prime")
    for r in primes:
        if r < 2 or any(r % k == 0 for k in range(2, int(r**0.5) + 1)):
            raise ValueError("%d is not prime" % r)
    for i, c in enumerate(f.coeffs):
        if not c or i == 0:
            continue
        if which == "U":
            if any(_is_prime_power(i, r) for r in primes):
                continue
            if all(gcd(i, r) == 1 for r in primes):
                continue
            return False
        elif which == "U1":
            m = i
            for r in primes:
                while m % r == 0:
                    m //= r
            if m != 1:
                return False
        else:
            raise ValueError("which must be 'U' or 'U1'")
    return True


def _is_prime_power(i: int, r: int) -> bool:
    if i < r:
        return False
    while i % r == 0:
        i //= r
    return i == 1
