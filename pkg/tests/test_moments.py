import random

import pytest

from abellab.errors import KernelNotStabilizedError
from abellab.field import ZERO, rational, sqrtD
from abellab.linalg import span_rref
from abellab.moments import (
    chebyshev_zero_space_dim,
    composition_sum_space,
    double_moments_vanish,
    in_zero_space_of,
    moment,
    moment_matrix,
    parametric_structure_report,
    pspace_basis,
    zero_space,
    zero_space_matches_compositions,
)
from abellab.poly import Interval, Poly, chebyshev

IV11 = Interval(-1, 1)
HALF_R3 = sqrtD(3) * rational(1, 2)
IV3 = Interval(-HALF_R3, HALF_R3)
P6 = chebyshev(6) + Poly.one()
P10 = Poly([0, 0, 1]) * (Poly([-1, 0, 0, 0, 1]) ** 2)


def P(*cs):
    return Poly(cs)


def test_moment_examples():
    Pp, Q = P(-1, 0, 1), P(0, -1, 0, 1)
    assert moment(Pp, Q, IV11, 0) == ZERO
    assert moment(Pp, Q, IV11, 1) == rational(8, 15)
    P3, Q3 = P(0, -1, 1), P(0, 2, -3, 1)
    assert moment(Q3, P3, IV01 := Interval(0, 1), 2) == rational(-1, 140)


def test_moment_bilinearity():
    rng = random.Random(13)
    for _ in range(10):
        A = P(*(rng.randint(-3, 3) for _ in range(4)))
        Q1 = P(*(rng.randint(-3, 3) for _ in range(5)))
        Q2 = P(*(rng.randint(-3, 3) for _ in range(5)))
        al, be = rational(rng.randint(-3, 3)), rational(rng.randint(-3, 3))
        i = rng.randint(0, 4)
        lhs = moment(A, Q1.scale(al) + Q2.scale(be), IV11, i)
        assert lhs == al * moment(A, Q1, IV11, i) + be * moment(A, Q2, IV11, i)


def test_integration_by_parts():
    rng = random.Random(19)
    quad = Poly([-1, 0, 1])
    for _ in range(10):
        A = quad * P(*(rng.randint(-2, 2) for _ in range(3)), 1)
        B = quad * P(*(rng.randint(-2, 2) for _ in range(3)), 1)
        assert moment(A, B, IV11, 1) == -moment(B, A, IV11, 1)


def test_double_moments_examples():
    W = P(0, 0, 1)
    Pc = P(1, -2).compose(W) - Poly.constant(rational(-1))
    Qc = P(0, -1, 1).compose(W)
    assert double_moments_vanish(Pc, Qc, IV11, 20)
    assert not double_moments_vanish(P(-1, 0, 1), P(0, -1, 0, 1), IV11, 5)
    assert double_moments_vanish(P6, chebyshev(3), IV3, 15)


def test_zero_space_chebyshev_dimension():
    basis = zero_space(P6, IV3, 6, 12)
    assert len(basis) == 4


def test_zero_space_definite_case():
    basis = zero_space(P(-1, 0, 1), IV11, 4, 8)
    want = [P(-1, 0, 1), P(-1, 0, 0, 0, 1)]
    got_vecs = [[f[i] for i in range(5)] for f in basis]
    want_vecs = [[f[i] for i in range(5)] for f in want]
    assert span_rref(got_vecs) == span_rref(want_vecs)


def test_zero_space_degree_two():
    basis = zero_space(P(-1, 0, 1), IV11, 2, 6)
    assert len(basis) == 1  # multiples of (x-a)(x-b), a function of x^2 here
    basis2 = zero_space(P(0, -1, 0, 0, 0, 1), Interval(-1, 1), 2, 10)
    assert len(basis2) == 0  # x^5 - x has no degree-2 factor class


def test_kernel_stabilization_error():
    with pytest.raises(KernelNotStabilizedError):
        zero_space(P(-1, 0, 1), IV11, 4, 0)


def test_moment_matrix_shape():
    mm = moment_matrix(P(-1, 0, 1), IV11, 4, 8)
    assert mm.M.rows == 9 and mm.M.cols == 3
    assert len(pspace_basis(IV11, 4)) == 3


def test_composition_sum_space_examples():
    cs = composition_sum_space(P6, IV3, 6)
    assert len(cs) == 4
    cs2 = composition_sum_space(P(-1, 0, 1), IV11, 4)
    zs2 = zero_space(P(-1, 0, 1), IV11, 4, 8)
    assert cs2 == zs2
    # with one factor class of degree 2 and d < 4, only the first power fits
    cs3 = composition_sum_space(P(-1, 0, 1), IV11, 3)
    assert len(cs3) == 1


def test_easy_direction_always():
    # every composition-span member kills all moments
    for Pp, iv, d in ((P6, IV3, 10), (P10, IV11, 10)):
        for f in composition_sum_space(Pp, iv, d):
            assert all(not moment(Pp, f, iv, i) for i in range(12))


def test_match_examples():
    assert zero_space_matches_compositions(P6, IV3, 8, 16)
    assert zero_space_matches_compositions(P10, IV11, 8, 16)
    assert zero_space_matches_compositions(P(-1, 0, 1), IV11, 6, 12)


def test_dim_formula_values():
    assert chebyshev_zero_space_dim(6) == 4
    assert chebyshev_zero_space_dim(10) == 7
    # floor arithmetic throughout: the degree-0 boundary value is 0
    assert chebyshev_zero_space_dim(0) == 0


def test_stabilization_monotone():
    dims = []
    for imax in (4, 8, 12, 16):
        try:
            dims.append(len(zero_space(P6, IV3, 8, imax)))
        except KernelNotStabilizedError:
            dims.append(None)
    solid = [d for d in dims if d is not None]
    assert solid == sorted(solid, reverse=True) or len(set(solid)) == 1


def test_membership_certificate():
    assert in_zero_space_of(P6, chebyshev(3), IV3, 20)
    assert not in_zero_space_of(P(-1, 0, 1), P(0, -1, 0, 1), IV11, 6)


def test_structure_report_cc_pair():
    W = P(0, 0, 1)
    Pc = P(1, -2).compose(W) - Poly.constant(rational(-1))
    Qc = P(0, -1, 1).compose(W)
    rep = parametric_structure_report(Pc, Qc, IV11, 8, 10)
    assert rep.cc is not None
    assert rep.truncated_parametric_center
    assert rep.double_moments
    assert rep.consistent


def test_structure_report_non_center():
    rep = parametric_structure_report(P(-1, 0, 1), P(0, -1, 0, 1), IV11, 8, 10)
    assert rep.cc is None
    assert not rep.truncated_parametric_center
    assert rep.consistent  # implication is vacuous


def test_structure_report_chebyshev_pair():
    # P = 1 + T6 = 2 T3^2 is itself a polynomial in T3, so the pair has a
    # composition witness through the degree-3 class
    rep = parametric_structure_report(P6, chebyshev(3), IV3, 6, 12)
    assert rep.cc is not None
    assert rep.cc.W == P(0, rational(-3, 4), 0, 1)
    assert rep.double_moments
    assert not rep.P_definite
    assert rep.Q_definite
    assert rep.P_in_Z_of_Q and rep.Q_in_Z_of_P
    assert rep.consistent
