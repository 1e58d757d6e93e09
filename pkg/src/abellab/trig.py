"""Exact real trigonometric polynomials and their moment integrals.

A :class:`TrigPoly` is a finite Fourier table: a constant term plus exact
cosine and sine coefficients per positive frequency.  Products reduce by
the product-to-sum identities, so the ring stays exact, and every
integral over [0, 2*pi] is the constant term times 2*pi — returned as an
exact multiple of pi (:class:`PiScalar`), never a float.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import PreconditionError
from .field import ZERO, Scalar
from .poly import Poly


def _clean(d: dict) -> dict:
    return {k: v for k, v in d.items() if v}


class TrigPoly:
    """a0 + sum_k (cos_coeffs[k] cos(k t) + sin_coeffs[k] sin(k t))."""

    __slots__ = ("a0", "cos_coeffs", "sin_coeffs")

    def __init__(self, a0=0, cos_coeffs=None, sin_coeffs=None):
        self.a0 = Scalar.coerce(a0)
        cc = {int(k): Scalar.coerce(v) for k, v in (cos_coeffs or {}).items()}
        ss = {int(k): Scalar.coerce(v) for k, v in (sin_coeffs or {}).items()}
        if any(k < 1 for k in cc) or any(k < 1 for k in ss):
            raise ValueError("frequencies must be positive integers")
        self.cos_coeffs = _clean(cc)
        self.sin_coeffs = _clean(ss)

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def zero() -> "TrigPoly":
        return TrigPoly()

    @staticmethod
    def constant(c) -> "TrigPoly":
        return TrigPoly(a0=c)

    @staticmethod
    def cos(k: int, c=1) -> "TrigPoly":
        if k == 0:
            return TrigPoly(a0=c)
        return TrigPoly(cos_coeffs={k: c})

    @staticmethod
    def sin(k: int, c=1) -> "TrigPoly":
        if k == 0:
            return TrigPoly()
        return TrigPoly(sin_coeffs={k: c})

    # -- ring structure ----------------------------------------------------------

    def __bool__(self):
        return bool(self.a0) or bool(self.cos_coeffs) or bool(self.sin_coeffs)

    def is_zero(self) -> bool:
        return not self

    def __eq__(self, other):
        if not isinstance(other, TrigPoly):
            return NotImplemented
        return (
            self.a0 == other.a0
            and self.cos_coeffs == other.cos_coeffs
            and self.sin_coeffs == other.sin_coeffs
        )

    def __add__(self, other):
        if not isinstance(other, TrigPoly):
            other = TrigPoly.constant(other)
        cc = dict(self.cos_coeffs)
        for k, v in other.cos_coeffs.items():
            cc[k] = cc.get(k, ZERO) + v
        ss = dict(self.sin_coeffs)
        for k, v in other.sin_coeffs.items():
            ss[k] = ss.get(k, ZERO) + v
        return TrigPoly(self.a0 + other.a0, cc, ss)

    def __neg__(self):
        return TrigPoly(
            -self.a0,
            {k: -v for k, v in self.cos_coeffs.items()},
            {k: -v for k, v in self.sin_coeffs.items()},
        )

    def __sub__(self, other):
        if not isinstance(other, TrigPoly):
            other = TrigPoly.constant(other)
        return self + (-other)

    def scale(self, c) -> "TrigPoly":
        c = Scalar.coerce(c)
        if not c:
            return TrigPoly()
        return TrigPoly(
            self.a0 * c,
            {k: v * c for k, v in self.cos_coeffs.items()},
            {k: v * c for k, v in self.sin_coeffs.items()},
        )

    def __mul__(self, other):
        if not isinstance(other, TrigPoly):
            return self.scale(other)
        return trig_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "TrigPoly":
        if n < 0:
            raise ValueError("negative power")
        result = TrigPoly.constant(1)
        for _ in range(n):
            result = result * self
        return result

    def frequency_support(self):
        """Frequencies with a nonzero cosine or sine coefficient
        (the constant term is tracked separately)."""
        return set(self.cos_coeffs) | set(self.sin_coeffs)

    def __repr__(self):
        return "TrigPoly(a0=%s, support=%s)" % (self.a0, sorted(self.frequency_support()))


def trig_mul(f: TrigPoly, g: TrigPoly) -> TrigPoly:
    """Exact product via frequency convolution of the product-to-sum rules."""
    a0 = f.a0 * g.a0
    cc: dict = {}
    ss: dict = {}

    def add_cos(k, v):
        nonlocal a0
        if k < 0:
            k = -k
        if k == 0:
            a0 = a0 + v
        elif v:
            cc[k] = cc.get(k, ZERO) + v

    def add_sin(k, v):
        if k < 0:
            k, v = -k, -v
        if k != 0 and v:
            ss[k] = ss.get(k, ZERO) + v

    if f.a0:
        for k, v in g.cos_coeffs.items():
            add_cos(k, f.a0 * v)
        for k, v in g.sin_coeffs.items():
            add_sin(k, f.a0 * v)
    if g.a0:
        for k, v in f.cos_coeffs.items():
            add_cos(k, g.a0 * v)
        for k, v in f.sin_coeffs.items():
            add_sin(k, g.a0 * v)

    half = Scalar.coerce(1) / Scalar.coerce(2)
    for m, u in f.cos_coeffs.items():
        for n, v in g.cos_coeffs.items():
            w = u * v * half
            add_cos(m - n, w)
            add_cos(m + n, w)
        for n, v in g.sin_coeffs.items():
            w = u * v * half
            add_sin(m + n, w)
            add_sin(n - m, w)
    for m, u in f.sin_coeffs.items():
        for n, v in g.cos_coeffs.items():
            w = u * v * half
            add_sin(m + n, w)
            add_sin(m - n, w)
        for n, v in g.sin_coeffs.items():
            w = u * v * half
            add_cos(m - n, w)
            add_cos(m + n, -w)
    return TrigPoly(a0, cc, ss)


def trig_diff(f: TrigPoly) -> TrigPoly:
    """Termwise derivative in the angle."""
    cc = {k: v * Scalar.coerce(k) for k, v in f.sin_coeffs.items()}
    ss = {k: v * Scalar.coerce(-k) for k, v in f.cos_coeffs.items()}
    return TrigPoly(0, cc, ss)


@dataclass(frozen=True)
class PiScalar:
    """An exact multiple of pi; every full-period integral lands here."""

    coeff: Scalar

    def is_zero(self) -> bool:
        return not self.coeff

    def __bool__(self):
        return bool(self.coeff)

    def __eq__(self, other):
        if isinstance(other, PiScalar):
            return self.coeff == other.coeff
        if other == 0:
            return not self.coeff
        return NotImplemented

    def __str__(self):
        if not self.coeff:
            return "0"
        return "%s*pi" % self.coeff


def trig_integral(f: TrigPoly) -> PiScalar:
    """Exact integral over one full period: 2*pi times the constant term."""
    return PiScalar(f.a0 * Scalar.coerce(2))


def trig_moment(P: TrigPoly, Q: TrigPoly, i: int, j: int) -> PiScalar:
    """Exact int_0^{2pi} Q^i d(P^j)."""
    if i < 0 or j < 0:
        raise PreconditionError("i and j must be nonnegative")
    return trig_integral((Q**i) * trig_diff(P**j))


def build_family(d1: int, d2: int, p_spec: dict, q_spec: dict):
    """Construct the coprime-frequency family pair.

    P has cosine/sine coefficients (a_k, b_k) at frequencies k*d1 with
    a_k = b_k = 0 whenever d2 | k, and Q has (c_l, f_l) at l*d2 with
    c_l = f_l = 0 whenever d1 | l; violations are rejected by index.
    """
    if d1 <= 1 or d2 <= 1:
        raise PreconditionError("frequency multipliers must exceed 1")
    if gcd(d1, d2) != 1:
        raise PreconditionError("frequencies not coprime")

    def build(spec, d, excluded_by, name):
        cc = {}
        ss = {}
        for k, pair in spec.items():
            k = int(k)
            ak, bk = pair
            ak = Scalar.coerce(ak)
            bk = Scalar.coerce(bk)
            if (ak or bk) and k % excluded_by == 0:
                raise PreconditionError(
                    "%s index %d violates the divisibility exclusion" % (name, k)
                )
            if ak:
                cc[k * d] = ak
            if bk:
                ss[k * d] = bk
        return TrigPoly(0, cc, ss)

    P = build(p_spec, d1, d2, "P")
    Q = build(q_spec, d2, d1, "Q")
    return P, Q


def modify_family(Q: TrigPoly, d2: int, R: Poly) -> TrigPoly:
    """Q + R(cos(d2*t)), evaluated exactly by Horner in the trig ring."""
    base = TrigPoly.cos(d2)
    acc = TrigPoly.zero()
    for c in reversed(R.coeffs):
        acc = acc * base + TrigPoly.constant(c)
    return Q + acc


def non_cc_certificate(P: TrigPoly, Q: TrigPoly, i_max: int, j_max: int):
    """First (i, j) in the (i+j, i) order with a nonzero mixed moment.

    A nonzero value certifies that P and Q admit no common composition
    factor; None is inconclusive, not a proof of the condition.
    """
    if i_max < 1 or j_max < 1:
        raise PreconditionError("i_max and j_max must be at least 1")
    cells = sorted(
        ((i, j) for i in range(1, i_max + 1) for j in range(1, j_max + 1)),
        key=lambda ij: (ij[0] + ij[1], ij[0]),
    )
    for i, j in cells:
        val = trig_moment(P, Q, i, j)
        if val:
            return (i, j, val)
    return None


def frequency_support(f: TrigPoly):
    return f.frequency_support()
