"""Right composition factors with equal endpoint values.

For a polynomial P with P(a) = P(b), a *right factor on [a, b]* is a
polynomial W with W(a) = W(b) and P = S(W) for some polynomial S.  Two
factors are equivalent when they differ by a degree-one left composition,
so each class is represented here by its monic member with zero constant
term.  In characteristic zero a polynomial has at most one factor class
per degree, and the class coefficients are determined successively from
the top coefficients of P; candidates are built that way and then
verified exactly by subring membership.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FactorBoundError, NotClosedError, PreconditionError
from .field import ONE, ZERO, Scalar
from .poly import Interval, Poly, chebyshev, in_subring


def _divisors_between(n: int):
    """Divisors m of n with 1 < m <= n, ascending."""
    return [m for m in range(2, n + 1) if n % m == 0]


def _top_candidate(P: Poly, m: int) -> Poly:
    """The unique monic, zero-constant candidate factor of degree m.

    If P = S(V) with deg V = m then the coefficients of V below the top are
    pinned by the top coefficients of P (the unknown at each step enters
    linearly with coefficient n*lc, and lower steps never feed back), while
    the constant term is free; we normalize it to zero.
    """
    N = P.degree
    n = N // m
    lc = P.leading()
    w = [ZERO] * m + [ONE]
    for t in range(1, m):
        Wn = Poly(w) ** n
        current = lc * Wn[N - t]
        w[m - t] = (P[N - t] - current) / (lc * n)
    return Poly(w)


def normalize_factor(W: Poly) -> Poly:
    """Monic representative with zero constant term of W's class."""
    W = W.scale(ONE / W.leading())
    c0 = W[0]
    if c0:
        W = W - Poly([c0])
    return W


@dataclass(frozen=True)
class FactorSet:
    """Normalized right factors of one polynomial, plus the count s of
    indecomposable classes among them."""

    factors: tuple
    s: int

    @property
    def degrees(self):
        return tuple(W.degree for W in self.factors)


def _sort_key(W: Poly):
    return (W.degree, tuple((c.rat, c.irr) for c in W.coeffs))


def right_factors(P: Poly, iv: Interval) -> FactorSet:
    """All right factor classes of P on the interval, one per degree.

    Includes P's own class.  Requires P nonconstant with equal endpoint
    values.
    """
    if P.is_constant():
        raise PreconditionError("P must be nonconstant")
    if P.eval(iv.a) != P.eval(iv.b):
        raise NotClosedError("not an [a,b]-closed polynomial")
    found = []
    for m in _divisors_between(P.degree):
        W = _top_candidate(P, m)
        if W.eval(iv.a) != W.eval(iv.b):
            continue
        if in_subring(P, W) is None:
            continue
        found.append(W)
    found.sort(key=_sort_key)
    minimal = _minimal_factors(found)
    if len(minimal) > 3:
        raise FactorBoundError(
            "found %d indecomposable factor classes; at most 3 are possible"
            % len(minimal)
        )
    return FactorSet(tuple(found), len(minimal))


def _minimal_factors(factors):
    """Factors with no proper factor of their own inside the list."""
    minimal = []
    for W in factors:
        proper = False
        for V in factors:
            if V.degree < W.degree and in_subring(W, V) is not None:
                proper = True
                break
        if not proper:
            minimal.append(W)
    return minimal


def indecomposable_factors(P: Poly, iv: Interval) -> FactorSet:
    """The minimal right factor classes (no proper factor of their own).

    Sorted by degree, then coefficients; s equals the count.
    """
    fs = right_factors(P, iv)
    minimal = _minimal_factors(list(fs.factors))
    minimal.sort(key=_sort_key)
    return FactorSet(tuple(minimal), len(minimal))


def is_definite(P: Poly, iv: Interval) -> bool:
    """True when P has a single indecomposable factor class.

    Such P force the composition condition on any polynomial whose moments
    against P all vanish.  Requires P(a) = P(b) = 0.
    """
    if P.eval(iv.a) or P.eval(iv.b):
        raise PreconditionError("P must vanish at both endpoints")
    return indecomposable_factors(P, iv).s == 1


@dataclass(frozen=True)
class Witness:
    """A common-factor witness: P = P_reduced(W), Q = Q_reduced(W)."""

    W: Poly
    P_reduced: Poly
    Q_reduced: Poly


def cc_check(P: Poly, Q: Poly, iv: Interval):
    """Composition-condition witness for (P, Q), or None.

    Any common right factor with equal endpoint values is itself a
    composite of one of P's indecomposable factor classes, so testing Q
    against each of those classes decides the condition.
    """
    for name, F in (("P", P), ("Q", Q)):
        if F.is_constant():
            raise PreconditionError("%s must be nonconstant" % name)
        if F.eval(iv.a) != F.eval(iv.b):
            raise NotClosedError("not an [a,b]-closed polynomial (%s)" % name)
    for W in indecomposable_factors(P, iv).factors:
        Qr = in_subring(Q, W)
        if Qr is not None:
            return Witness(W, in_subring(P, W), Qr)
    return None


def is_chebyshev_conjugate(W: Poly) -> bool:
    """Is W = sigma . T_m . tau for degree-one sigma, tau (complex scalars allowed)?

    After recentring to kill the subleading coefficient, W must match
    alpha*T_m(u*x) + beta coefficient-by-coefficient; only u^2 enters, so
    the test stays inside the scalar field.
    """
    m = W.degree
    if m is None or m < 2:
        return False
    if m == 2:
        return True
    shift = -W[m - 1] / (Scalar.coerce(m) * W[m])
    V = W.compose(Poly([shift, ONE]))
    T = chebyshev(m)
    for k in range(1, m):
        if (m - k) % 2 == 1 and V[k]:
            return False
    A = V[m] / T[m]
    if not V[m - 2]:
        return False
    U = A * T[m - 2] / V[m - 2]  # u^2
    if not U:
        return False
    Upow = U
    for j in range(2, (m - 1) // 2 + 1):
        Upow = Upow * U
        k = m - 2 * j
        if k < 1:
            break
        if V[k] * Upow != A * T[k]:
            return False
    return True


@dataclass(frozen=True)
class StructureReport:
    s: int
    factor_degrees: tuple
    definite: bool
    tag: str
    factors: tuple


def structure_report(P: Poly, iv: Interval) -> StructureReport:
    """Classification summary: factor count, degrees, definiteness, shape tag.

    For s = 2 the two possible shapes are distinguished structurally:
    when both minimal factors are Chebyshev conjugates the pair behaves
    like T_n, T_m of a common T_nm ("chebyshev-like"); otherwise one
    factor plays the role of a power and the tag is "power-like".
    """
    fs = indecomposable_factors(P, iv)
    s = fs.s
    if s == 1:
        tag = "single"
    elif s == 3:
        tag = "triple"
    else:
        if all(is_chebyshev_conjugate(W) for W in fs.factors):
            tag = "chebyshev-like"
        else:
            tag = "power-like"
    in_p = not P.eval(iv.a) and not P.eval(iv.b)
    return StructureReport(
        s=s,
        factor_degrees=fs.degrees,
        definite=(s == 1) and in_p,
        tag=tag,
        factors=fs.factors,
    )
