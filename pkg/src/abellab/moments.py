"""Moment functionals int P^i Q' and their exact zero spaces.

The zero space of P at degree d collects the polynomials Q of degree at
most d, vanishing at both endpoints, that kill every moment of P.  It is
computed two independent ways: as the kernel of an exact moment matrix
(with a stabilization check, since only finitely many moments can be
formed) and as the span of compositions with P's indecomposable factor
classes; comparing the two is itself one of the verification steps.
"""

from __future__ import annotations

from dataclasses import dataclass

from .center import EPS_ON_Q, FORWARD, parametric_table
from .decomp import cc_check, indecomposable_factors, is_definite
from .errors import KernelNotStabilizedError, PreconditionError
from .field import Scalar
from .linalg import Matrix, kernel_basis, span_rref
from .poly import Interval, PCPair, Poly, definite_integral


def moment(P: Poly, Q: Poly, iv: Interval, i: int) -> Scalar:
    """Exact int_a^b P^i Q'."""
    if i < 0:
        raise PreconditionError("moment index must be nonnegative")
    return definite_integral((P**i) * Q.derivative(), iv)


def _moments_upto(P: Poly, q: Poly, iv: Interval, n: int):
    """[int P^i q for i = 0..n], sharing the power ladder."""
    out = []
    power = Poly.one()
    for i in range(n + 1):
        out.append(definite_integral(power * q, iv))
        if i < n:
            power = power * P
    return out


def double_moments_vanish(P: Poly, Q: Poly, iv: Interval, N: int) -> bool:
    """Do int P^i Q' and int Q^j P' vanish for all i, j <= N?"""
    if N < 0:
        raise PreconditionError("N must be nonnegative")
    q = Q.derivative()
    p = P.derivative()
    return all(not v for v in _moments_upto(P, q, iv, N)) and all(
        not v for v in _moments_upto(Q, p, iv, N)
    )


def pspace_basis(iv: Interval, d: int):
    """Deterministic basis of {Q : deg Q <= d, Q(a) = Q(b) = 0}:
    (x-a)(x-b) x^n for n = 0..d-2."""
    if d < 2:
        return []
    a, b = iv.a, iv.b
    quad = Poly([a * b, -(a + b), 1])
    return [quad.shift(n) for n in range(d - 1)]


@dataclass(frozen=True)
class MomentMatrix:
    """Rows = moment index, columns = the fixed endpoint-vanishing basis."""

    P: Poly
    iv: Interval
    d: int
    I_max: int
    M: Matrix
    basis: tuple


def moment_matrix(P: Poly, iv: Interval, d: int, I_max: int) -> MomentMatrix:
    basis = pspace_basis(iv, d)
    derivs = [B.derivative() for B in basis]
    rows = []
    power = Poly.one()
    for i in range(I_max + 1):
        rows.append([definite_integral(power * dq, iv) for dq in derivs])
        if i < I_max:
            power = power * P
    M = Matrix.from_rows(rows) if rows else Matrix(0, len(basis), [])
    return MomentMatrix(P=P, iv=iv, d=d, I_max=I_max, M=M, basis=tuple(basis))


def _kernel_polys(mm: MomentMatrix):
    vecs = kernel_basis(mm.M)
    polys = []
    for v in vecs:
        acc = Poly.zero()
        for c, B in zip(v, mm.basis):
            if c:
                acc = acc + B.scale(c)
        polys.append(acc)
    return polys


def _canonical_span(polys, d: int):
    """Canonical RREF basis (as Polys) of the span, in ascending-power coords."""
    vectors = [[f[i] for i in range(d + 1)] for f in polys]
    rows = span_rref(vectors)
    return [Poly(r) for r in rows]


def zero_space(P: Poly, iv: Interval, d: int, I_max: int):
    """Exact basis of {Q in P_d with all moments of P against Q zero}.

    The kernel must be unchanged when five more moment rows are added,
    otherwise a KernelNotStabilizedError reports both dimensions.
    """
    if d < 2:
        raise PreconditionError("d must be at least 2")
    if P.eval(iv.a) or P.eval(iv.b):
        raise PreconditionError("P must vanish at both endpoints")
    mm_probe = moment_matrix(P, iv, d, I_max + 5)
    rows = mm_probe.M.to_rows()
    mm_cut = MomentMatrix(
        P=P,
        iv=iv,
        d=d,
        I_max=I_max,
        M=Matrix.from_rows(rows[: I_max + 1]),
        basis=mm_probe.basis,
    )
    cut = _kernel_polys(mm_cut)
    probe = _kernel_polys(mm_probe)
    if len(cut) != len(probe):
        raise KernelNotStabilizedError(len(cut), len(probe), I_max)
    return _canonical_span(probe, d)


def composition_sum_space(P: Poly, iv: Interval, d: int):
    """Basis of { sum_j S_j(W_j) : deg <= d } with endpoint values zero,
    where W_j ranges over P's indecomposable factor classes.

    Spanned by W_j^t - W_j(a)^t for t*deg(W_j) <= d, reduced to a
    canonical basis.
    """
    if P.eval(iv.a) or P.eval(iv.b):
        raise PreconditionError("P must vanish at both endpoints")
    spanning = []
    for W in indecomposable_factors(P, iv).factors:
        wa = W.eval(iv.a)
        power = Poly.one()
        value = Scalar.coerce(1)
        t = 1
        while t * W.degree <= d:
            power = power * W
            value = value * wa
            spanning.append(power - Poly.constant(value))
            t += 1
    return _canonical_span(spanning, d)


def zero_space_matches_compositions(P: Poly, iv: Interval, d: int, I_max: int) -> bool:
    """Do the moment kernel and the composition span agree exactly?"""
    zs = zero_space(P, iv, d, I_max)
    cs = composition_sum_space(P, iv, d)
    return zs == cs


def chebyshev_zero_space_dim(d: int) -> int:
    """Closed-form dimension count for the degree-6 Chebyshev zero space:
    [(d+1)/2] + [(d+1)/3] - [(d+1)/6]."""
    if d < 0:
        raise PreconditionError("d must be nonnegative")
    return (d + 1) // 2 + (d + 1) // 3 - (d + 1) // 6


def in_zero_space_of(base: Poly, candidate: Poly, iv: Interval, I_max: int) -> bool:
    """Truncated certificate that candidate lies in the zero space of base:
    int base^i candidate' = 0 for all i <= I_max."""
    dc = candidate.derivative()
    return all(not v for v in _moments_upto(base, dc, iv, I_max))


@dataclass(frozen=True)
class ParametricStructureReport:
    """Exact findings for one primitive pair, with the classification
    consistency flag: a truncated parametric center without a composition
    witness must show both polynomials non-definite and mutually inside
    each other's zero space."""

    cc: object
    truncated_parametric_center: bool
    double_moments: bool
    P_definite: bool
    Q_definite: bool
    P_in_Z_of_Q: bool
    Q_in_Z_of_P: bool
    K: int
    N: int
    consistent: bool


def parametric_structure_report(
    P: Poly, Q: Poly, iv: Interval, K: int, N: int
) -> ParametricStructureReport:
    PCPair(P, Q, iv)
    p = P.derivative()
    q = Q.derivative()
    witness = cc_check(P, Q, iv)
    table = parametric_table(p, q, iv, K, EPS_ON_Q, FORWARD)
    tpc = table.is_zero()
    dm = double_moments_vanish(P, Q, iv, N)
    p_def = is_definite(P, iv)
    q_def = is_definite(Q, iv)
    p_in_zq = in_zero_space_of(Q, P, iv, N)
    q_in_zp = in_zero_space_of(P, Q, iv, N)
    consistent = True
    if tpc and witness is None:
        consistent = (not p_def) and (not q_def) and p_in_zq and q_in_zp
    return ParametricStructureReport(
        cc=witness,
        truncated_parametric_center=tpc,
        double_moments=dm,
        P_definite=p_def,
        Q_definite=q_def,
        P_in_Z_of_Q=p_in_zq,
        Q_in_Z_of_P=q_in_zp,
        K=K,
        N=N,
        consistent=consistent,
    )
