"""Integer linear algebra, checked against sympy and hand computations."""
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import ZZ, Matrix
from sympy.matrices.normalforms import invariant_factors

from dgcyl import intlin
from dgcyl.intlin import CohomologyGroup, IntCochainComplex, cohomology


def det(m):
    return int(Matrix(m.tolist()).det()) if m.size else 1


matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 6).flatmap(
        lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c),
                           min_size=r, max_size=r)))


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_smith_against_sympy(rows):
    A = intlin.as_int_matrix(rows)
    snf = intlin.smith(A)
    assert (snf.U @ A @ snf.V == snf.S).all()
    assert abs(det(snf.U)) == 1 and abs(det(snf.V)) == 1
    off = snf.S.copy()
    for k in range(min(off.shape)):
        off[k, k] = 0
    assert not off.any()
    factors = snf.invariant_factors
    assert all(b % a == 0 for a, b in zip(factors, factors[1:]))
    expected = tuple(int(f) for f in invariant_factors(Matrix(rows), domain=ZZ) if f != 0)
    assert factors == expected


def test_smith_examples():
    assert intlin.smith([[2, 4], [6, 8]]).invariant_factors == (2, 4)
    assert intlin.smith(intlin.eye(3)).invariant_factors == (1, 1, 1)
    assert intlin.smith(intlin.zeros(2, 3)).rank == 0


def test_smith_is_deterministic():
    A = [[4, 6, 2], [3, 9, 12], [7, 1, 5]]
    first, second = intlin.smith(A), intlin.smith(A)
    assert (first.U == second.U).all() and (first.V == second.V).all()


@settings(max_examples=150, deadline=None)
@given(matrices, st.data())
def test_solve_recovers_constructed_rhs(rows, data):
    A = intlin.as_int_matrix(rows)
    x0 = data.draw(st.lists(st.integers(-5, 5), min_size=A.shape[1], max_size=A.shape[1]))
    b = A @ np.array(x0, dtype=object)
    x = intlin.solve(A, b)
    assert x is not None
    assert list(A @ np.array(x, dtype=object)) == list(b)
    for k in intlin.kernel_basis(A):
        shifted = np.array(x, dtype=object) + 3 * np.array(k, dtype=object)
        assert list(A @ shifted) == list(b)


def test_solve_examples():
    assert intlin.solve(intlin.eye(3), [4, -1, 7]) == [4, -1, 7]
    assert intlin.solve([[2]], [3]) is None
    assert intlin.solve([[1, 1], [1, 1]], [1, 2]) is None
    assert intlin.solve([[2, 4]], [0]) == [0, 0]


def test_kernel_examples():
    assert intlin.kernel_basis(intlin.eye(2)) == []
    basis = intlin.kernel_basis([[1, 1]])
    assert len(basis) == 1 and basis[0] in ([1, -1], [-1, 1])
    assert sorted(map(tuple, intlin.kernel_basis(intlin.zeros(2, 3)))) == sorted(
        [(1, 0, 0), (0, 1, 0), (0, 0, 1)])


@settings(max_examples=100, deadline=None)
@given(matrices)
def test_kernel_is_saturated(rows):
    # the kernel basis spans the full lattice: rank matches and the basis
    # extends to a unimodular matrix (gcd of maximal minors is 1)
    A = intlin.as_int_matrix(rows)
    K = intlin.kernel_basis(A)
    rank = Matrix(rows).rank()
    assert len(K) == A.shape[1] - rank
    if K:
        Km = intlin.as_int_matrix(K).T
        assert not (A @ Km).any()
        assert intlin.smith(Km).invariant_factors == (1,) * len(K)


def test_surjectivity():
    assert intlin.is_surjective(intlin.eye(2))
    assert not intlin.is_surjective([[2]])
    assert intlin.is_surjective([[1, 1]])
    assert not intlin.is_surjective([[1, 1], [2, 2]])


def test_inverse():
    A = intlin.as_int_matrix([[2, 1], [1, 1]])
    assert (intlin.inverse(A) @ A == intlin.eye(2)).all()
    with pytest.raises(ValueError):
        intlin.inverse([[2, 0], [0, 1]])


def test_cohomology_examples():
    assert cohomology(IntCochainComplex({0: 1})) == {0: CohomologyGroup(1)}
    h = cohomology(IntCochainComplex({0: 2, 1: 1}, {0: [[-1, 1]]}))
    assert h[0] == CohomologyGroup(1) and h[1].is_zero
    h = cohomology(IntCochainComplex({0: 3, 1: 2}, {0: [[-1, 1, 0], [0, -1, 1]]}))
    assert h[0] == CohomologyGroup(1) and h[1].is_zero


def test_cohomology_torsion_and_exactness():
    h = cohomology(IntCochainComplex({0: 1, 1: 1}, {0: [[2]]}))
    assert h[0].is_zero and h[1] == CohomologyGroup(0, (2,))
    assert str(h[1]) == "Z/2"
    h = cohomology(IntCochainComplex({0: 2, 1: 2}, {0: [[2, 1], [1, 1]]}))
    assert all(g.is_zero for g in h.values())


def test_cohomology_rejects_non_complex():
    with pytest.raises(ValueError):
        cohomology(IntCochainComplex({0: 1, 1: 1, 2: 1}, {0: [[1]], 1: [[1]]}))
